use std::process::{Command, Output};

use serde_json::Value;

use hecke_core::composition::{Composition, GeneralizedComposition};
use hecke_core::tableau::{enumerate_sit, enumerate_srt};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = hecke(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

fn dim(v: &Value, name: &str) -> u64 {
    v["dims"].as_array().unwrap().iter().find(|d| d["name"] == name).unwrap()["dim"].as_u64().unwrap()
}

#[test]
fn enumerate_counts() {
    let (code, v) = json(&["enumerate", "--sit", "1,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 3);
    assert_eq!(json(&["enumerate", "--srt", "4"]).1["count"], 1);
    assert_eq!(json(&["enumerate", "--shape", "2,1|1"]).1["count"], 8);
    for s in ["2,1,3", "1,1,2,1", "3|1,2"] {
        let g: GeneralizedComposition = s.parse().unwrap();
        assert_eq!(json(&["enumerate", "--srt", s]).1["count"], enumerate_srt(&g).len());
    }
    let a: Composition = "2,3,1".parse().unwrap();
    assert_eq!(json(&["enumerate", "--sit", "2,3,1"]).1["count"], enumerate_sit(&a).len());
}

#[test]
fn enumerate_needs_a_kind() {
    assert_eq!(hecke(&["enumerate"]).status.code(), Some(2));
    assert_eq!(hecke(&["enumerate", "--sit", "1,x"]).status.code(), Some(2));
}

#[test]
fn projective_presentation_of_121() {
    let (code, v) = json(&["presentation", "--alpha", "1,2,1", "--projective"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(dim(&v, "P₀"), 5);
    assert_eq!(dim(&v, "P₁"), 8);
    assert_eq!(dim(&v, "ker Φ = Ω(𝒱_α)"), 3);
    assert_eq!(dim(&v, "ker ∂₁"), 5);
    let maps = v["maps"].as_array().unwrap();
    assert_eq!(maps[0]["name"], "Φ");
    assert_eq!(maps[0]["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn injective_presentation_of_122() {
    let (code, v) = json(&["presentation", "--alpha", "1,2,2", "--injective"]);
    assert_eq!(code, 0);
    assert_eq!(dim(&v, "𝒱_α"), 3);
    assert_eq!(dim(&v, "I₀"), 15);
    assert_eq!(dim(&v, "Θ(𝒱_α)"), 12);
    assert_eq!(dim(&v, "Ω⁻¹(𝒱_α)"), 12);
}

#[test]
fn single_part_shapes() {
    assert_eq!(hecke(&["presentation", "--alpha", "4", "--projective"]).status.code(), Some(0));
    let out = hecke(&["presentation", "--alpha", "4", "--injective"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("soc I₁ ⊆ Im ∂¹"));
    assert_eq!(hecke(&["presentation", "--alpha", "1,1,1", "--injective"]).status.code(), Some(0));
}

#[test]
fn ext_table_rows() {
    let (code, v) = json(&["ext-table", "--n", "4", "--kind", "ext1_V_F"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "ext1_V_F");
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 64);
    assert!(cells.iter().all(|c| c["agree"] == true));
    let ones: Vec<&str> = cells
        .iter()
        .filter(|c| c["alpha"] == "1,2,1" && c["oracle"] == 1)
        .map(|c| c["beta"].as_str().unwrap())
        .collect();
    assert_eq!(ones, vec!["2,2", "2,1,1"]);
    assert!(cells.iter().filter(|c| c["alpha"] == "1,1,1,1").all(|c| c["oracle"] == 0 && c["formula"] == 0));
}

#[test]
fn ext_table_no_claim_cells() {
    let (_, v) = json(&["ext-table", "--n", "3", "--kind", "hom_V_V"]);
    let cell = v["cells"].as_array().unwrap().iter().find(|c| c["alpha"] == "1,2" && c["beta"] == "2,1").unwrap();
    assert_eq!(cell["formula"], "no-claim");
    assert_eq!(cell["agree"], "no-claim");
}

#[test]
fn ext_table_csv_columns_descend() {
    let out = hecke(&["ext-table", "--n", "4", "--kind", "hom_P_V", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, vec!["alpha", "4", "3,1", "2,2", "2,1,1", "1,3", "1,2,1", "1,1,2", "1,1,1,1"]);
    assert_eq!(rdr.records().count(), 8);
}

#[test]
fn ext_table_disagreement_sets_exit_status() {
    let out = hecke(&["ext-table", "--n", "3", "--kind", "ext1_F_V"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("1≠0"));
    assert_eq!(hecke(&["ext-table", "--n", "3", "--kind", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_report_schema() {
    let (code, v) = json(&["verify", "--max-n", "4", "--suite", "projective", "--suite", "rigidity"]);
    assert_eq!(code, 0);
    assert_eq!(v["version"], 1);
    assert_eq!(v["config"]["max_n"], 4);
    let suites = v["suites"].as_array().unwrap();
    let names: Vec<&str> = suites.iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, vec!["projective", "rigidity"]);
    assert!(suites.iter().all(|s| s["cases"].as_u64().unwrap() > 0 && s["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn verify_all_reports_hook_failures() {
    let (code, v) = json(&["verify", "--max-n", "5", "--suite", "all"]);
    assert_eq!(code, 1);
    for s in v["suites"].as_array().unwrap() {
        let n = s["failures"].as_array().unwrap().len();
        let expected = match s["name"].as_str().unwrap() {
            "injective" | "ext" | "corollary" => 10,
            "hom-basis" => 1,
            _ => 0,
        };
        assert_eq!(n, expected, "{}", s["name"]);
    }
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = hecke(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn verify_slow_tier_example() {
    assert_eq!(hecke(&["verify", "--suite", "injective", "--alpha", "2,1,2,3"]).status.code(), Some(2));
    let (code, v) = json(&["verify", "--suite", "injective", "--suite", "examples", "--alpha", "2,1,2,3", "--slow"]);
    assert_eq!(code, 0);
    assert_eq!(v["config"]["alpha"], "2,1,2,3");
}

#[test]
fn verify_is_deterministic_across_pools() {
    let a = json(&["verify", "--max-n", "4", "--suite", "all", "--jobs", "1"]).1;
    let b = json(&["verify", "--max-n", "4", "--suite", "all", "--jobs", "3"]).1;
    assert_eq!(a["suites"], b["suites"]);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("hecke-cli-test-{}.json", std::process::id()));
    let out = hecke(&["enumerate", "--sit", "2,2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["count"], 3);
}
