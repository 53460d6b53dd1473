//! Verification suites: every check is run over all compositions up to a size
//! bound (or a single composition) and reports structured failures.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::composition::{
    alpha_gen_i, alpha_hat, alpha_hat_j, cal_i, cal_l, cal_m, Composition, GeneralizedComposition,
};
use crate::ext::{
    basis_b, essential_rigidity_defect, expansion_matches_factors, ext1_f_v_formula, ext1_f_v_oracle, ext1_oracle,
    ext1_v_f_formula, hom_v_v_general, hom_v_v_general_with, injective_shapes, l_coefficient, ExtContext, ReportKind,
    ShapeData,
};
use crate::module::{
    chi_isomorphism, dual_immaculate_module, hom_dim, kernel, projective_module, projective_module_of, regular_module,
    simple_module, zero_characterization_failures, ModuleRep,
};
use crate::presentation::{
    build_injective_presentation, build_projective_presentation, check_syzygy_generators, theta_basis, Diagnosis,
};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Projective,
    Injective,
    Ext,
    Rigidity,
    HomBasis,
    Corollary,
    Structural,
    Examples,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Projective,
        Suite::Injective,
        Suite::Ext,
        Suite::Rigidity,
        Suite::HomBasis,
        Suite::Corollary,
        Suite::Structural,
        Suite::Examples,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Projective => "projective",
            Suite::Injective => "injective",
            Suite::Ext => "ext",
            Suite::Rigidity => "rigidity",
            Suite::HomBasis => "hom-basis",
            Suite::Corollary => "corollary",
            Suite::Structural => "structural",
            Suite::Examples => "examples",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|k| k.as_str()).collect();
            format!("unknown suite {s:?}; expected one of {}, all", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub check: String,
    pub detail: String,
}

impl Failure {
    pub fn new(case: impl Into<String>, check: impl Into<String>, detail: impl Into<String>) -> Self {
        Failure { case: case.into(), check: check.into(), detail: detail.into() }
    }
}

impl From<Diagnosis> for Failure {
    fn from(d: Diagnosis) -> Self {
        let mut detail = d.detail;
        if !d.witness.is_empty() {
            let terms: Vec<String> = d.witness.iter().map(|(l, c)| format!("{c}·[{l}]")).collect();
            detail = format!("{detail}; witness {}", terms.join(" + "));
        }
        Failure { case: d.alpha, check: d.invariant, detail }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.case, self.check, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult { name: name.into(), cases: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, f: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failures.push(f());
        }
    }

    fn absorb(&mut self, other: SuiteResult) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    fn sorted(mut self) -> Self {
        self.failures.sort_by(|a, b| (&a.case, &a.check, &a.detail).cmp(&(&b.case, &b.check, &b.detail)));
        self
    }
}

/// Which compositions a suite ranges over.
#[derive(Clone, Debug, Serialize)]
pub struct Scope {
    pub max_n: usize,
    pub alpha: Option<Composition>,
}

impl Scope {
    pub fn up_to(max_n: usize) -> Self {
        Scope { max_n, alpha: None }
    }

    pub fn single(alpha: Composition) -> Self {
        Scope { max_n: alpha.size(), alpha: Some(alpha) }
    }

    pub fn sizes(&self) -> Vec<usize> {
        match &self.alpha {
            Some(a) => vec![a.size()],
            None => (1..=self.max_n).collect(),
        }
    }

    /// Rows of size `n`: everything, or just the chosen composition.
    pub fn rows(&self, n: usize) -> Vec<Composition> {
        match &self.alpha {
            Some(a) if a.size() == n => vec![a.clone()],
            Some(_) => Vec::new(),
            None => Composition::all_of(n),
        }
    }

    pub fn all_rows(&self) -> Vec<Composition> {
        self.sizes().into_iter().flat_map(|n| self.rows(n)).collect()
    }
}

fn merge(name: &str, parts: Vec<SuiteResult>) -> SuiteResult {
    let mut out = SuiteResult::new(name);
    for p in parts {
        out.absorb(p);
    }
    out.sorted()
}

pub fn projective_suite(scope: &Scope) -> SuiteResult {
    let parts = scope
        .all_rows()
        .par_iter()
        .map(|alpha| {
            let mut r = SuiteResult::new("projective");
            match build_projective_presentation(alpha) {
                Ok(p) => {
                    let mut diags = p.diagnose();
                    diags.extend(check_syzygy_generators(alpha));
                    r.cases += 1;
                    r.failures.extend(diags.into_iter().map(Failure::from));
                }
                Err(e) => r.check(false, || Failure::new(alpha.to_string(), "construction", e.to_string())),
            }
            r
        })
        .collect();
    merge("projective", parts)
}

pub fn injective_suite(scope: &Scope) -> SuiteResult {
    let parts = scope
        .all_rows()
        .par_iter()
        .map(|alpha| {
            let mut r = SuiteResult::new("injective");
            match build_injective_presentation(alpha) {
                Ok(p) => {
                    r.cases += 1;
                    r.failures.extend(p.diagnose().into_iter().map(Failure::from));
                }
                Err(e) => r.check(false, || Failure::new(alpha.to_string(), "construction", e.to_string())),
            }
            r
        })
        .collect();
    merge("injective", parts)
}

fn cell_failures(name: &str, ctx: &ExtContext, kinds: &[ReportKind], rows: &[Composition]) -> SuiteResult {
    let cols = ctx.compositions();
    let mut jobs = Vec::new();
    for &k in kinds {
        for a in rows {
            jobs.extend(cols.iter().map(|b| (k, a, b)));
        }
    }
    let parts = jobs
        .par_iter()
        .map(|&(k, a, b)| {
            let mut r = SuiteResult::new(name);
            let cell = ctx.cell(k, a, b);
            if let Some(ok) = cell.agree() {
                r.check(ok, || {
                    Failure::new(
                        format!("α={a} β={b}"),
                        k.as_str(),
                        format!("formula {} oracle {}", cell.formula.unwrap_or_default(), cell.oracle),
                    )
                });
            }
            r
        })
        .collect();
    merge(name, parts)
}

fn pairs_of<'a>(
    rows: &'a [Composition],
    cols: &'a [Composition],
    lower: bool,
) -> Vec<(&'a Composition, &'a Composition)> {
    let mut out = Vec::new();
    for a in rows {
        out.extend(cols.iter().filter(|b| !lower || *b <= a).map(|b| (a, b)));
    }
    out
}

fn contexts(scope: &Scope) -> Vec<ExtContext> {
    scope.sizes().into_iter().map(|n| ExtContext::new(n).expect("shape data builds")).collect()
}

/// Formula against oracle for every claimed cell of every table.
pub fn ext_suite(scope: &Scope) -> SuiteResult {
    let kinds = [ReportKind::Ext1VF, ReportKind::Ext1FV, ReportKind::HomVV, ReportKind::Ext1VV, ReportKind::HomPV];
    let parts = contexts(scope).iter().map(|ctx| cell_failures("ext", ctx, &kinds, &scope.rows(ctx.n))).collect();
    merge("ext", parts)
}

/// Lex-lower pairs have no Ext¹ and only the diagonal Hom; `Ω(𝒱_α)` has no map to `𝒱_α`.
pub fn rigidity_suite(pairs: &Scope, essential: &Scope) -> SuiteResult {
    let mut parts = Vec::new();
    for ctx in contexts(pairs) {
        let cols = ctx.compositions();
        let rows = pairs.rows(ctx.n);
        let jobs = pairs_of(&rows, &cols, true);
        parts.par_extend(jobs.par_iter().map(|&(a, b)| {
            let mut r = SuiteResult::new("rigidity");
            let (sa, sb) = (ctx.shape(a), ctx.shape(b));
            let ext = ext1_oracle(sa, &sb.v);
            r.check(ext == 0, || Failure::new(format!("α={a} β={b}"), "Ext¹(𝒱_α, 𝒱_β) = 0", format!("got {ext}")));
            let hom = hom_dim(&sa.v, &sb.v);
            let want = usize::from(a == b);
            r.check(hom == want, || {
                Failure::new(format!("α={a} β={b}"), "Hom(𝒱_α, 𝒱_β) = δ", format!("got {hom}, want {want}"))
            });
            r
        }));
    }
    let rows = essential.all_rows();
    parts.par_extend(rows.par_iter().map(|a| {
        let mut r = SuiteResult::new("rigidity");
        let d = ShapeData::new(a).map(|s| essential_rigidity_defect(&s));
        r.check(matches!(d, Ok(0)), || Failure::new(a.to_string(), "Hom(Ω(𝒱_α), 𝒱_α) = 0", format!("{d:?}")));
        r
    }));
    merge("rigidity", parts)
}

/// The two worked `f_U` examples, each claimed to give a one-dimensional Hom.
pub fn hom_examples() -> SuiteResult {
    let mut r = SuiteResult::new("hom-basis");
    for (a, b) in [("1,1,2,1", "1,2,2"), ("1,1,3,2", "2,3,2")] {
        let (a, b): (Composition, Composition) = (a.parse().unwrap(), b.parse().unwrap());
        let general = hom_v_v_general(&a, &b);
        let oracle = hom_dim(&dual_immaculate_module(&a), &dual_immaculate_module(&b));
        r.check(general == 1 && oracle == 1, || {
            Failure::new(
                format!("α={a} β={b}"),
                "worked example has dim Hom(𝒱_α, 𝒱_β) = 1",
                format!("f_U system {general}, oracle {oracle}"),
            )
        });
    }
    r
}

/// `|𝔅| = dim Hom(P_α, 𝒱_β) = L_{β,α}`, and the `f_U` system against the oracle.
pub fn hom_basis_suite(scope: &Scope) -> SuiteResult {
    let mut parts = Vec::new();
    for ctx in contexts(scope) {
        let cols = ctx.compositions();
        let rows = scope.rows(ctx.n);
        let jobs = pairs_of(&rows, &cols, false);
        parts.par_extend(jobs.par_iter().map(|&(a, b)| {
            let mut r = SuiteResult::new("hom-basis");
            let case = || format!("α={a} β={b}");
            let (sa, sb) = (ctx.shape(a), ctx.shape(b));
            let leads = basis_b(a, b).len();
            let hom_p = hom_dim(&sa.p, &sb.v);
            let l = l_coefficient(b, a);
            r.check(leads == hom_p && hom_p == l, || {
                Failure::new(case(), "|𝔅| = dim Hom(P_α, 𝒱_β) = L_{β,α}", format!("{leads}, {hom_p}, {l}"))
            });
            let oracle = hom_dim(&sa.v, &sb.v);
            for reverse in [false, true] {
                let general = hom_v_v_general_with(a, b, reverse);
                r.check(general == oracle, || {
                    Failure::new(
                        case(),
                        "f_U system = dim Hom(𝒱_α, 𝒱_β)",
                        format!("{general} vs oracle {oracle} (reversed ties: {reverse})"),
                    )
                });
            }
            r
        }));
    }
    parts.push(hom_examples());
    merge("hom-basis", parts)
}

pub fn corollary_suite(scope: &Scope) -> SuiteResult {
    let parts = contexts(scope)
        .iter()
        .map(|ctx| cell_failures("corollary", ctx, &[ReportKind::HomRadPV], &scope.rows(ctx.n)))
        .collect();
    merge("corollary", parts)
}

fn relations(r: &mut SuiteResult, case: &str, what: &str, m: &ModuleRep) {
    let bad = m.relation_failures();
    r.check(bad.is_empty(), || Failure::new(case, format!("relations on {what}"), bad.join("; ")));
}

fn chi_check(r: &mut SuiteResult, case: &str, g: &GeneralizedComposition) {
    let p = projective_module(g);
    relations(r, case, &format!("P_{g}"), &p);
    let res = chi_isomorphism(g);
    r.check(res.is_ok(), || Failure::new(case, format!("χ isomorphism for {g}"), format!("{:?}", res.err())));
}

/// Relations on every module built, the `χ` splittings of every generalized
/// shape used by the presentations, composition factors, and the zero
/// characterization in the regular representation.
pub fn structural_suite(scope: &Scope) -> SuiteResult {
    let rows = scope.all_rows();
    let mut parts: Vec<SuiteResult> = rows
        .par_iter()
        .map(|a| {
            let mut r = SuiteResult::new("structural");
            let case = a.to_string();
            relations(&mut r, &case, "𝒱_α", &dual_immaculate_module(a));
            relations(&mut r, &case, "P_α", &projective_module_of(a));
            relations(&mut r, &case, "F_α", &simple_module(a));
            if let Ok(p) = build_projective_presentation(a) {
                relations(&mut r, &case, "Ω(𝒱_α)", &kernel(&p.phi).module);
            }
            if let Ok(p) = build_injective_presentation(a) {
                relations(&mut r, &case, "Ω⁻¹(𝒱_α)", &p.cosyzygy());
            }
            r.check(expansion_matches_factors(a), || {
                Failure::new(case.clone(), "composition factors of 𝒱_α = L_{α,·}", "mismatch")
            });
            for i in cal_i(a) {
                if let Ok(g) = alpha_gen_i(a, i) {
                    chi_check(&mut r, &case, &g);
                }
            }
            if let Ok(g) = alpha_hat(a) {
                chi_check(&mut r, &case, &g);
            }
            for j in 1..=cal_m(a) {
                if let Ok(g) = alpha_hat_j(a, j) {
                    chi_check(&mut r, &case, &g);
                }
            }
            r
        })
        .collect();
    if scope.alpha.is_none() {
        for n in 1..=scope.max_n.min(4) {
            let mut r = SuiteResult::new("structural");
            relations(&mut r, &format!("n={n}"), "regular module", &regular_module(n));
            let bad = zero_characterization_failures(n);
            r.check(bad.is_empty(), || {
                Failure::new(format!("n={n}"), "zero characterization", format!("{} failing pairs", bad.len()))
            });
            parts.push(r);
        }
    }
    merge("structural", parts)
}

/// For `α = (1,2,1)`: `Ext¹(𝒱_α, F_β) = 1` exactly at `β ∈ {(2,2), (2,1,1)}`.
pub fn example_ext1_v_f() -> SuiteResult {
    let mut r = SuiteResult::new("examples");
    let alpha = Composition::of(&[1, 2, 1]);
    let data = ShapeData::new(&alpha).expect("shape data builds");
    let expected = [Composition::of(&[2, 2]), Composition::of(&[2, 1, 1])];
    for beta in Composition::all_of(4) {
        let want = usize::from(expected.contains(&beta));
        let formula = ext1_v_f_formula(&alpha, &beta);
        let oracle = ext1_oracle(&data, &simple_module(&beta));
        r.check(formula == want && oracle == want, || {
            Failure::new(
                format!("α={alpha} β={beta}"),
                "Ext¹(𝒱_α, F_β)",
                format!("formula {formula}, oracle {oracle}, expected {want}"),
            )
        });
    }
    r
}

/// Dimensions read off the two drawn presentations.
pub fn example_presentations() -> SuiteResult {
    let mut r = SuiteResult::new("examples");
    let a = Composition::of(&[1, 2, 1]);
    match build_projective_presentation(&a) {
        Ok(p) => {
            let dims = (p.p0().dim(), p.v().dim(), p.p1_module().dim(), p.syzygy().module.dim());
            let ker = p.partial1.kernel_space().dim();
            r.check(dims == (5, 2, 8, 3) && ker == 5, || {
                Failure::new(
                    a.to_string(),
                    "projective presentation dimensions",
                    format!("(P₀, 𝒱, P₁, Ω, ker ∂₁) = {dims:?}, {ker}; expected (5, 2, 8, 3), 5"),
                )
            });
        }
        Err(e) => r.check(false, || Failure::new(a.to_string(), "construction", e.to_string())),
    }
    let a = Composition::of(&[1, 2, 2]);
    match build_injective_presentation(&a) {
        Ok(p) => {
            let theta = theta_basis(&a).map(|t| t.len()).unwrap_or(usize::MAX);
            let dims = (p.v().dim(), p.i0().dim(), theta, p.cosyzygy().dim());
            r.check(dims == (3, 15, 12, 12), || {
                Failure::new(
                    a.to_string(),
                    "injective presentation dimensions",
                    format!("(𝒱, I₀, Θ, Ω⁻¹) = {dims:?}; expected (3, 15, 12, 12)"),
                )
            });
        }
        Err(e) => r.check(false, || Failure::new(a.to_string(), "construction", e.to_string())),
    }
    r
}

/// The size-eight example `α = (2,1,2,3)`: hull shapes verbatim, then
/// `Ext¹(F_β, 𝒱_α)` by formula and by the socle of the cosyzygy.
pub fn example_injective_2123() -> SuiteResult {
    let mut r = SuiteResult::new("examples");
    let alpha = Composition::of(&[2, 1, 2, 3]);
    let case = alpha.to_string();
    let shapes =
        injective_shapes(&alpha).map(|(h, js)| (h.to_string(), js.iter().map(|g| g.to_string()).collect::<Vec<_>>()));
    let want = ("1|1|3,1,1,1".to_string(), vec!["1|3,1,1,1,1".to_string(), "1|3,1,1|1,1".into(), "1|1|2,2,1,1".into()]);
    r.check(shapes.as_ref() == Some(&want), || {
        Failure::new(case.clone(), "hull shapes 𝜶̂, 𝜶̂^(j)", format!("{shapes:?}"))
    });
    let doubled = [Composition::of(&[1, 3, 1, 1, 1, 1]), Composition::of(&[4, 1, 1, 1, 1])];
    let l = cal_l(&alpha);
    r.check(l.len() == 8 && doubled.iter().all(|d| l.get(d) == Some(&2)), || {
        Failure::new(case.clone(), "ℒ(α) has 8 members, two doubled", format!("{l:?}"))
    });
    let data = match ShapeData::new(&alpha) {
        Ok(d) => d,
        Err(e) => {
            r.check(false, || Failure::new(case.clone(), "construction", e.to_string()));
            return r;
        }
    };
    for beta in Composition::all_of(8) {
        let br = beta.reverse();
        let want = if doubled.contains(&br) { 2 } else { usize::from(l.contains_key(&br)) };
        let formula = ext1_f_v_formula(&beta, &alpha);
        let oracle = ext1_f_v_oracle(&data, &beta);
        r.check(formula == want && oracle == want, || {
            Failure::new(
                format!("α={alpha} β={beta}"),
                "Ext¹(F_β, 𝒱_α)",
                format!("formula {formula}, socle oracle {oracle}, expected {want}"),
            )
        });
    }
    r
}

pub fn examples_suite(slow: bool) -> SuiteResult {
    let mut parts = vec![example_ext1_v_f(), example_presentations()];
    if slow {
        parts.push(example_injective_2123());
    }
    merge("examples", parts)
}

pub fn run_suite(suite: Suite, scope: &Scope, slow: bool) -> SuiteResult {
    match suite {
        Suite::Projective => projective_suite(scope),
        Suite::Injective => injective_suite(scope),
        Suite::Ext => ext_suite(scope),
        Suite::Rigidity => rigidity_suite(scope, scope),
        Suite::HomBasis => hom_basis_suite(scope),
        Suite::Corollary => corollary_suite(scope),
        Suite::Structural => structural_suite(scope),
        Suite::Examples => examples_suite(slow),
    }
}

/// `{ version, config, suites: [{name, cases, failures}] }`
pub fn report_json(config: Value, results: &[SuiteResult]) -> Value {
    json!({ "version": REPORT_VERSION, "config": config, "suites": results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let scope = Scope::up_to(4);
        for s in [Suite::Projective, Suite::Rigidity, Suite::Structural] {
            let r = run_suite(s, &scope, false);
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn hook_failures_only() {
        let scope = Scope::up_to(4);
        let inj = injective_suite(&scope);
        let cases: Vec<&str> = inj.failures.iter().map(|f| f.case.as_str()).collect();
        assert_eq!(cases, vec!["2", "2,1", "2,1,1", "3", "3,1", "4"]);
        assert!(inj.failures.iter().all(|f| f.check == "soc I₁ ⊆ Im ∂¹"));
        for r in [ext_suite(&scope), corollary_suite(&scope)] {
            assert_eq!(r.failures.len(), 6, "{:?}", r.failures);
            assert!(r.failures.iter().all(|f| f.detail == "formula 1 oracle 0"));
        }
    }

    #[test]
    fn hom_basis_only_misses_the_second_example() {
        let r = hom_basis_suite(&Scope::up_to(4));
        assert_eq!(r.failures.len(), 1, "{:?}", r.failures);
        assert_eq!(r.failures[0].case, "α=1,1,3,2 β=2,3,2");
        assert_eq!(r.failures[0].detail, "f_U system 2, oracle 2");
    }

    #[test]
    fn single_alpha_scope() {
        let scope = Scope::single(Composition::of(&[1, 2, 2]));
        assert_eq!(scope.sizes(), vec![5]);
        assert_eq!(scope.all_rows().len(), 1);
        assert!(projective_suite(&scope).passed());
    }

    #[test]
    fn examples_pass() {
        let r = examples_suite(false);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
