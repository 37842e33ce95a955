//! End-to-end CLI behavior: argument handling, output formats, the JSON
//! round-trip guarantee, and the exit-code contract
//! (0 match, 1 mathematical mismatch, 2 inapplicable, 3 usage).

use digitfreq::cli::{run, ScanSummary};
use digitfreq::report::{PredictionReport, Verdict};

fn exec(args: &[&str]) -> (u8, String) {
    let mut out = Vec::new();
    let mut full = vec!["digitfreq"];
    full.extend_from_slice(args);
    let code = run(full, &mut out);
    (code, String::from_utf8(out).expect("utf8 output"))
}

#[test]
fn predict_p67_json_contains_table() {
    let (code, out) = exec(&["predict", "--p", "67", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"n\":[3,2,5,6,2,5,0,2,5,3]"), "{out}");
    let report: PredictionReport = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(report.profile.p, 67);
    assert_eq!(report.delta, vec![0, -3, 3, 6, -3]);
    // round trip
    let again = serde_json::to_string(&report).unwrap();
    let back: PredictionReport = serde_json::from_str(&again).unwrap();
    assert_eq!(back, report);
}

#[test]
fn predict_p47_emits_parity_tables() {
    let (code, out) = exec(&["predict", "--p", "47", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"n_odd\":[4,4,2,3,1,4,1,3,1,0]"), "{out}");
    assert!(out.contains("\"n_even\":[0,1,3,1,4,1,3,2,4,4]"), "{out}");
}

#[test]
fn predict_octal_p23() {
    let (code, out) = exec(&["predict", "--p", "23", "--base", "8", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"n\":[2,2,2,1,2,1,1,0]"), "{out}");
    assert!(out.contains("\"variant\":\"theorem3\""), "{out}");
}

#[test]
fn predict_nonresidue_numerator_flips() {
    let (code, out) = exec(&["predict", "--p", "67", "--m", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"variant\":\"theorem1_nonresidue\""), "{out}");
    assert!(out.contains("\"n\":[3,5,2,0,5,2,6,5,2,3]"), "{out}");
}

#[test]
fn verify_coset_and_n0_examples() {
    let (code, out) = exec(&["verify", "--p", "79", "--variant", "coset"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("4 5 7 3 3 5 5 1 3 3"), "{out}");
    assert!(out.contains("match"), "{out}");

    let (code, out) = exec(&["verify", "--p", "13", "--variant", "n0", "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let report: PredictionReport = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(report.verdict, Verdict::Match);
    assert!(out.contains("\"n0\":1"), "{out}");
}

#[test]
fn verify_auto_runs_both_theorem1_variants() {
    let (code, out) = exec(&["verify", "--p", "67", "--format", "json"]);
    assert_eq!(code, 0);
    let reports: Vec<PredictionReport> = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.verdict == Verdict::Match));
}

#[test]
fn verify_range_decimal_and_octal() {
    let (code, out) = exec(&["verify", "--range", "5:600", "--jobs", "2", "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let summary: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(summary["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(summary["failures"].as_array().unwrap().len(), 0);
    assert!(summary["verified_primes"].as_u64().unwrap() > 40);

    let (code, out) = exec(&["verify", "--range", "5:600", "--base", "8", "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let summary: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(summary["mismatches"].as_array().unwrap().len(), 0);
    assert!(summary["checks"]["theorem3"].as_u64().unwrap() > 5);
}

#[test]
fn verify_range_with_no_qualifying_primes_exits_2() {
    let (code, _) = exec(&["verify", "--range", "5:7", "--base", "8"]);
    assert_eq!(code, 2);
}

#[test]
fn scan_reports_classifications_and_summary() {
    let (code, out) = exec(&["scan", "--range", "5:120", "--format", "json"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.trim().lines().collect();
    // last line is the summary, the rest are per-prime records
    let summary: ScanSummary = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary.counts["theorem1"], 6);
    assert!(summary.mismatches.is_empty());
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["p"].as_u64(), Some(5));
    // per-prime stream covers every prime in range
    assert_eq!(lines.len() - 1, summary.primes as usize);
    // summary round-trips
    let again = serde_json::to_string(&summary).unwrap();
    let back: ScanSummary = serde_json::from_str(&again).unwrap();
    assert_eq!(back, summary);
}

#[test]
fn classnum_both_methods_and_rejections() {
    let (code, out) = exec(&["classnum", "--n", "335", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["discriminant"].as_i64(), Some(-335));
    assert_eq!(v["h_forms"].as_u64(), Some(18));
    assert_eq!(v["h_dirichlet"].as_u64(), Some(18));
    assert_eq!(v["agree"].as_bool(), Some(true));

    let (code, _) = exec(&["classnum", "--n", "12"]);
    assert_eq!(code, 2);

    let (code, out) = exec(&["classnum", "--d", "-67", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["h_forms"].as_u64(), Some(1));

    let (code, _) = exec(&["classnum", "--d", "-12"]);
    assert_eq!(code, 2);
}

#[test]
fn artin_values() {
    let (code, out) = exec(&["artin", "--bound", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["value"].as_f64(), Some(0.5));

    let (code, _) = exec(&["artin", "--bound", "1"]);
    assert_eq!(code, 3);
}

#[test]
fn inapplicable_inputs_exit_2_with_reason() {
    // 10 has full order mod 29, and 29 = 1 mod 4: nothing applies
    let (code, out) = exec(&["predict", "--p", "29", "--format", "json"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert!(v["error"].as_str().unwrap().contains("29"));

    // composite input
    let (code, _) = exec(&["predict", "--p", "91", "--format", "json"]);
    assert_eq!(code, 2);

    // explicitly requesting a variant the prime does not admit
    let (code, _) = exec(&["verify", "--p", "67", "--variant", "theorem2"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_3() {
    let (code, _) = exec(&["verify"]);
    assert_eq!(code, 3);
    let (code, _) = exec(&["verify", "--range", "20:10"]);
    assert_eq!(code, 3);
    let (code, _) = exec(&["verify", "--range", "abc"]);
    assert_eq!(code, 3);
    let (code, _) = exec(&["scan", "--range", "3:10"]);
    assert_eq!(code, 3);
    let (code, _) = exec(&["predict", "--p", "67", "--base", "7"]);
    assert_eq!(code, 3);
    let (code, _) = exec(&["classnum"]);
    assert_eq!(code, 3);
    let (code, _) = exec(&["nonsense"]);
    assert_eq!(code, 3);
}

#[test]
fn help_exits_0() {
    let (code, out) = exec(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("predict"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("digitfreq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p67.json");
    let (code, _) = exec(&[
        "predict",
        "--p",
        "67",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let content = std::fs::read_to_string(&path).unwrap();
    let report: PredictionReport = serde_json::from_str(content.trim()).unwrap();
    assert_eq!(report.profile.p, 67);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn coset_verify_on_theorem1_prime_degenerates_to_single_representative() {
    let (code, out) = exec(&["verify", "--p", "67", "--variant", "coset", "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let report: PredictionReport = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(report.verdict, Verdict::Match);
}
