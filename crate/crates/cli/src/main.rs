//! `hecke`: enumerate tableaux, print presentations of dual immaculate
//! modules, tabulate Hom/Ext¹ dimensions and run the verification suites.
//!
//!   hecke enumerate --sit 1,2,2
//!   hecke enumerate --srt "2,1|1" --format json
//!   hecke presentation --alpha 1,2,1 --projective
//!   hecke ext-table --n 4 --kind ext1_V_F --format csv --out table.csv
//!   hecke verify --max-n 5 --suite all --jobs 4
//!   hecke verify --suite injective --alpha 2,1,2,3 --slow

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_core::composition::{Composition, GeneralizedComposition};
use hecke_core::ext::{ext_report, ExtContext, ExtReport, ReportKind};
use hecke_core::linalg::q_to_string;
use hecke_core::module::{kernel, ModuleMap};
use hecke_core::presentation::{
    build_injective_presentation, build_projective_presentation, theta_basis, Diagnosis, Summand,
};
use hecke_core::tableau::{enumerate_sit, enumerate_srt};
use hecke_core::verify::{report_json, run_suite, Scope, Suite, SuiteResult};

/// Largest size run without `--slow`.
const FAST_MAX_N: usize = 6;
const FAST_MAX_ALPHA: usize = 7;
/// Maps with more columns than this are printed in sparse form only.
const DENSE_LIMIT: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "0-Hecke algebra modules, presentations and Ext/Hom tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List standard ribbon tableaux of a (generalized) shape, or standard
    /// immaculate tableaux of a composition
    #[command(group(ArgGroup::new("kind").required(true).args(["srt", "sit"])))]
    Enumerate {
        /// Generalized composition, blocks separated by `|`
        #[arg(long, visible_alias = "shape", value_name = "SHAPE")]
        srt: Option<GeneralizedComposition>,
        #[arg(long, value_name = "ALPHA")]
        sit: Option<Composition>,
    },
    /// Build the minimal projective or injective presentation of 𝒱_α
    #[command(group(ArgGroup::new("side").required(true).args(["projective", "injective"])))]
    Presentation {
        #[arg(long)]
        alpha: Composition,
        #[arg(long)]
        projective: bool,
        #[arg(long)]
        injective: bool,
    },
    /// Formula and oracle for every pair (α, β) of compositions of n
    ExtTable {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "ext1_V_F", value_parser = parse_kind)]
        kind: ReportKind,
    },
    /// Run verification suites; exit status 0 iff every check passes
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Suite name or `all`; repeatable
        #[arg(long = "suite", default_value = "all", value_parser = parse_suite)]
        suites: Vec<SuiteSel>,
        /// Restrict per-shape suites to one composition
        #[arg(long)]
        alpha: Option<Composition>,
        /// Allow larger sizes and include the size-eight worked example
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Clone, Copy, Debug)]
enum SuiteSel {
    All,
    One(Suite),
}

fn parse_suite(s: &str) -> Result<SuiteSel, String> {
    if s == "all" {
        Ok(SuiteSel::All)
    } else {
        s.parse().map(SuiteSel::One)
    }
}

fn parse_kind(s: &str) -> Result<ReportKind, String> {
    s.parse()
}

struct Output {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Enumerate { srt, sit } => enumerate(srt.as_ref(), sit.as_ref(), cli.common.format),
        Command::Presentation { alpha, projective, .. } => presentation(alpha, *projective, cli.common.format),
        Command::ExtTable { n, kind } => ext_table(*n, *kind, cli.common.format),
        Command::Verify { max_n, suites, alpha, slow } => verify(*max_n, suites, alpha.as_ref(), *slow, &cli.common),
    };
    match result.and_then(|o| write_out(&cli.common, &o.text).map(|_| o.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_out(common: &Common, text: &str) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_text(v: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn set_string(s: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn enumerate(srt: Option<&GeneralizedComposition>, sit: Option<&Composition>, format: Format) -> Result<Output> {
    let (kind, shape, rows): (&str, String, Vec<(String, BTreeSet<usize>)>) = match (srt, sit) {
        (Some(g), _) => {
            ("srt", g.to_string(), enumerate_srt(g).iter().map(|t| (t.to_string(), t.descents())).collect())
        }
        (_, Some(a)) => {
            ("sit", a.to_string(), enumerate_sit(a).iter().map(|t| (t.to_string(), t.descents())).collect())
        }
        _ => bail!("one of --srt or --sit is required"),
    };
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for (k, (t, d)) in rows.iter().enumerate() {
                writeln!(s, "{:>4}  {t:<24} Des = {}", k + 1, set_string(d))?;
            }
            writeln!(s, "{}: {} of shape {shape}", kind.to_uppercase(), rows.len())?;
            s
        }
        Format::Json => json_text(&json!({
            "kind": kind,
            "shape": shape,
            "count": rows.len(),
            "tableaux": rows.iter().map(|(t, d)| json!({ "tableau": t, "descents": d })).collect::<Vec<_>>(),
        }))?,
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(k, (t, d))| vec![(k + 1).to_string(), t.clone(), set_string(d)])
                .collect();
            csv_text(&["index".into(), "tableau".into(), "descents".into()], &body)?
        }
    };
    Ok(Output { text, ok: true })
}

/// One named map of a presentation.
struct NamedMap<'a> {
    name: &'a str,
    map: &'a ModuleMap,
}

fn sparse_lines(m: &NamedMap) -> Vec<String> {
    let src = m.map.source().labels();
    let tgt = m.map.target().labels();
    (0..src.len())
        .map(|j| {
            let col = m.map.matrix().column(j);
            let terms: Vec<String> = col
                .entries()
                .iter()
                .map(|(i, x)| {
                    let c = q_to_string(x);
                    match c.as_str() {
                        "1" => format!("[{}]", tgt[*i]),
                        "-1" => format!("−[{}]", tgt[*i]),
                        _ => format!("{c}·[{}]", tgt[*i]),
                    }
                })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            format!("[{}] ↦ {rhs}", src[j])
        })
        .collect()
}

fn dense_lines(m: &NamedMap) -> Vec<String> {
    let mat = m.map.matrix();
    let cells: Vec<Vec<String>> =
        (0..mat.nrows()).map(|i| (0..mat.ncols()).map(|j| q_to_string(&mat.entry(i, j))).collect()).collect();
    let w = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    cells.iter().map(|r| r.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join(" ")).collect()
}

fn map_json(m: &NamedMap) -> Value {
    let src = m.map.source().labels();
    let tgt = m.map.target().labels();
    json!({
        "name": m.name,
        "rows": m.map.target().dim(),
        "cols": m.map.source().dim(),
        "source_basis": src,
        "target_basis": tgt,
        "entries": m.map.matrix().triplets().iter().map(|(i, j, x)| json!([i, j, q_to_string(x)])).collect::<Vec<_>>(),
    })
}

fn summands_json(s: &[Summand]) -> Value {
    s.iter()
        .map(|x| json!({ "index": x.index, "shape": x.shape.to_string(), "offset": x.offset, "dim": x.basis.len() }))
        .collect()
}

struct Built {
    kind: &'static str,
    dims: Vec<(&'static str, usize)>,
    summands: Value,
    maps: Vec<(&'static str, ModuleMap)>,
    diags: Vec<Diagnosis>,
}

fn presentation(alpha: &Composition, projective: bool, format: Format) -> Result<Output> {
    let built = if projective {
        let p = build_projective_presentation(alpha)?;
        Built {
            kind: "projective",
            dims: vec![
                ("P₁", p.p1_module().dim()),
                ("P₀", p.p0().dim()),
                ("𝒱_α", p.v().dim()),
                ("ker Φ = Ω(𝒱_α)", kernel(&p.phi).module.dim()),
                ("Im ∂₁", p.partial1.rank()),
                ("ker ∂₁", p.partial1.kernel_space().dim()),
            ],
            summands: summands_json(&p.p1),
            maps: vec![("Φ", p.phi.clone()), ("∂₁", p.partial1.clone())],
            diags: p.diagnose(),
        }
    } else {
        let p = build_injective_presentation(alpha)?;
        Built {
            kind: "injective",
            dims: vec![
                ("𝒱_α", p.v().dim()),
                ("I₀", p.i0().dim()),
                ("I₁", p.i1_module().dim()),
                ("Im ι", p.iota.rank()),
                ("Θ(𝒱_α)", theta_basis(alpha)?.len()),
                ("Ω⁻¹(𝒱_α)", p.cosyzygy().dim()),
                ("Im ∂¹", p.partial1.rank()),
            ],
            summands: summands_json(&p.i1),
            maps: vec![("ι", p.iota.clone()), ("∂¹", p.partial1.clone())],
            diags: p.diagnose(),
        }
    };
    let Built { kind, dims, summands, maps, diags } = built;
    let named: Vec<NamedMap> = maps.iter().map(|(n, m)| NamedMap { name: n, map: m }).collect();
    let ok = diags.is_empty();
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{kind} presentation of 𝒱_({alpha})")?;
            for (name, d) in &dims {
                writeln!(s, "  dim {name:<16} {d}")?;
            }
            let label = if projective { "P₁" } else { "I₁" };
            if let Some(arr) = summands.as_array() {
                for x in arr {
                    writeln!(
                        s,
                        "  {label} summand {}: P_({}) (dim {})",
                        x["index"],
                        x["shape"].as_str().unwrap_or(""),
                        x["dim"]
                    )?;
                }
            }
            for m in &named {
                writeln!(s, "\n{}: {} → {}", m.name, m.map.source().dim(), m.map.target().dim())?;
                if m.map.source().dim() <= DENSE_LIMIT && m.map.target().dim() <= DENSE_LIMIT {
                    for l in dense_lines(m) {
                        writeln!(s, "  {l}")?;
                    }
                    writeln!(s)?;
                }
                for l in sparse_lines(m) {
                    writeln!(s, "  {l}")?;
                }
            }
            writeln!(s)?;
            if ok {
                writeln!(s, "invariants: PASS")?;
            } else {
                writeln!(s, "invariants: FAIL")?;
                for d in &diags {
                    writeln!(s, "  {d}")?;
                }
            }
            s
        }
        Format::Json => json_text(&json!({
            "alpha": alpha.to_string(),
            "kind": kind,
            "dims": dims.iter().map(|(n, d)| json!({ "name": n, "dim": d })).collect::<Vec<_>>(),
            "summands": summands,
            "maps": named.iter().map(map_json).collect::<Vec<_>>(),
            "passed": ok,
            "failures": diags,
        }))?,
        Format::Csv => {
            let mut rows = Vec::new();
            for m in &named {
                let src = m.map.source().labels();
                let tgt = m.map.target().labels();
                for (i, j, x) in m.map.matrix().triplets() {
                    rows.push(vec![
                        m.name.to_string(),
                        i.to_string(),
                        j.to_string(),
                        tgt[i].clone(),
                        src[j].clone(),
                        q_to_string(&x),
                    ]);
                }
            }
            let header: Vec<String> =
                ["map", "row", "col", "row_tableau", "col_tableau", "value"].iter().map(|s| s.to_string()).collect();
            csv_text(&header, &rows)?
        }
    };
    Ok(Output { text, ok })
}

/// Compositions of `n`, lexicographically descending from `(n)`.
fn descending(n: usize) -> Vec<Composition> {
    let mut c = Composition::all_of(n);
    c.sort_by(|a, b| b.cmp(a));
    c
}

fn cell_text(c: &ExtReport) -> String {
    match c.formula {
        None => format!("({})", c.oracle),
        Some(f) if f == c.oracle => f.to_string(),
        Some(f) => format!("{f}≠{}", c.oracle),
    }
}

fn cell_csv(c: &ExtReport) -> String {
    match c.formula {
        None => format!("-/{}", c.oracle),
        Some(f) if f == c.oracle => format!("{f}/{}", c.oracle),
        Some(f) => format!("{f}/{}!", c.oracle),
    }
}

fn ext_table(n: usize, kind: ReportKind, format: Format) -> Result<Output> {
    if n > FAST_MAX_N + 1 {
        bail!("n = {n} is beyond the supported table size {}", FAST_MAX_N + 1);
    }
    let ctx = ExtContext::new(n)?;
    let order = descending(n);
    let mut cells = ctx.table(kind);
    let pos = |c: &Composition| order.iter().position(|x| x == c).unwrap_or(usize::MAX);
    cells.sort_by_key(|c| (pos(&c.alpha), pos(&c.beta)));
    let ok = cells.iter().all(|c| c.agree() != Some(false));
    let text = match format {
        Format::Json => json_text(&ext_report(n, kind, &cells))?,
        Format::Csv => {
            let mut header = vec!["alpha".to_string()];
            header.extend(order.iter().map(|b| b.to_string()));
            let rows: Vec<Vec<String>> = cells
                .chunks(order.len())
                .map(|row| {
                    let mut r = vec![row[0].alpha.to_string()];
                    r.extend(row.iter().map(cell_csv));
                    r
                })
                .collect();
            csv_text(&header, &rows)?
        }
        Format::Text => {
            let mut grid: Vec<Vec<String>> =
                vec![std::iter::once("α \\ β".to_string()).chain(order.iter().map(|b| b.to_string())).collect()];
            for row in cells.chunks(order.len()) {
                grid.push(std::iter::once(row[0].alpha.to_string()).chain(row.iter().map(cell_text)).collect());
            }
            let widths: Vec<usize> =
                (0..grid[0].len()).map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
            let mut s = String::new();
            writeln!(
                s,
                "{}, n = {n}; formula shown when it agrees with the oracle, (x) = oracle only, f≠o = disagreement",
                kind.describe()
            )?;
            for r in &grid {
                let line: Vec<String> =
                    r.iter().zip(&widths).map(|(c, w)| format!("{}{c}", " ".repeat(w - c.chars().count()))).collect();
                writeln!(s, "{}", line.join("  "))?;
            }
            let claimed = cells.iter().filter(|c| c.formula.is_some()).count();
            let bad = cells.iter().filter(|c| c.agree() == Some(false)).count();
            writeln!(s, "{claimed} claimed cells, {bad} disagreements")?;
            s
        }
    };
    Ok(Output { text, ok })
}

fn verify(max_n: usize, sel: &[SuiteSel], alpha: Option<&Composition>, slow: bool, common: &Common) -> Result<Output> {
    if !slow {
        if max_n > FAST_MAX_N {
            bail!("--max-n {max_n} needs --slow (fast tier stops at {FAST_MAX_N})");
        }
        if let Some(a) = alpha.filter(|a| a.size() > FAST_MAX_ALPHA) {
            bail!("--alpha {a} has size {} and needs --slow", a.size());
        }
    }
    let mut suites: Vec<Suite> = Vec::new();
    for s in sel {
        match s {
            SuiteSel::All => suites.extend(Suite::ALL),
            SuiteSel::One(x) => suites.push(*x),
        }
    }
    suites.sort();
    suites.dedup();
    let scope = match alpha {
        Some(a) => Scope::single(a.clone()),
        None => Scope::up_to(max_n),
    };
    let results: Vec<SuiteResult> = suites.iter().map(|&s| run_suite(s, &scope, slow)).collect();
    let ok = results.iter().all(SuiteResult::passed);
    let config = json!({
        "max_n": scope.max_n,
        "alpha": alpha.map(|a| a.to_string()),
        "suites": suites.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        "slow": slow,
        "jobs": common.jobs,
    });
    let text = match common.format {
        Format::Json => json_text(&report_json(config, &results))?,
        Format::Csv => {
            let mut rows = Vec::new();
            for r in &results {
                for f in &r.failures {
                    rows.push(vec![r.name.clone(), f.case.clone(), f.check.clone(), f.detail.clone()]);
                }
            }
            let header: Vec<String> = ["suite", "case", "check", "detail"].iter().map(|s| s.to_string()).collect();
            csv_text(&header, &rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(s, "{:<12} {status}  {} cases, {} failures", r.name, r.cases, r.failures.len())?;
                for f in &r.failures {
                    writeln!(s, "    {f}")?;
                }
            }
            s
        }
    };
    Ok(Output { text, ok })
}
