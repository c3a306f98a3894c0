use knotpoly_cli::{run, Report, Verdict, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Report) {
    let out = run(["knotpoly", "--json"].iter().chain(args).copied());
    let report: Report = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(Some(&report), out.report.as_ref(), "round trip of {args:?}");
    (out.code, report)
}

#[test]
fn trefoil_from_pd_and_gauss() {
    let out = run(["knotpoly", "conway", "--pd", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().next(), Some("1+z^2"));
    for method in ["alexander", "skein", "both"] {
        let (code, r) = json(&["conway", "--gauss", "O1-,U2-,O3-,U1-,O2-,U3-", "--method", method]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(r.result.as_deref(), Some("1+z^2"));
    }
}

#[test]
fn split_reports_the_octic() {
    let (code, r) = json(&[
        "split",
        "--poly",
        "4z^8+16z^6+12z^4-16z^2+1",
        "--poly",
        "1+z",
        "--poly",
        "[1,-1]",
        "--poly",
        "2z^4-1",
        "--poly",
        "2z^4-1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.result.as_deref(), Some("NO"));
    let obs = &r.data.as_ref().unwrap()["obstructions"];
    assert_eq!(obs, &serde_json::json!([{"poly": "4z^8+16z^6+12z^4-16z^2+1", "exp": 1}]));

    let (_, r) = json(&["split", "--poly", "1-z^2"]);
    assert_eq!(r.result.as_deref(), Some("YES"));
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn factor_over_z_and_mod_p() {
    let (code, r) = json(&["factor", "--poly", "[-1,0,1]"]);
    assert_eq!(code, EXIT_OK);
    let factors = &r.data.as_ref().unwrap()["factors"];
    assert_eq!(factors, &serde_json::json!([{"poly": "z-1", "exp": 1}, {"poly": "z+1", "exp": 1}]));
    let (code, r) = json(&["factor", "--poly", "4z^8+16z^6+12z^4-16z^2+1", "--mod", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.result.as_deref(), Some("(z^4+z^3+z^2+1)(z^4+2z^3+z^2+1) (mod 3)"));
    let (code, r) = json(&["factor", "--poly", "z^2+1", "--mod", "4"]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert_eq!(r.verdict, Verdict::Error);
}

#[test]
fn table_check_has_no_mismatches() {
    let (code, r) = json(&["table-check"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.data.as_ref().unwrap()["mismatches"], Value::from(0));
    assert!(r.steps.len() >= 19);
}

#[test]
fn table_check_flags_a_wrong_entry() {
    let dir = std::env::temp_dir().join(format!("knotpoly-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    std::fs::write(&path, r#"[{"name":"3_1","pd":[[1,5,2,4],[5,3,6,2],[3,1,4,6]],"conway":[1,0,2]}]"#).unwrap();
    let (code, r) = json(&["table-check", "--file", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.data.as_ref().unwrap()["mismatches"], Value::from(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_and_diophantine() {
    let (code, r) = json(&["verify-paper"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.steps.len(), 6);
    let (code, r) = json(&["solve-diophantine", "--bound", "200"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.data.as_ref().unwrap()["solutions"], serde_json::json!([]));
}

#[test]
fn realize_certifies_its_diagram() {
    let (code, r) = json(&["realize", "--poly", "1-z^2+2z^4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.data.as_ref().unwrap()["conway"], Value::from("1-z^2+2z^4"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(["knotpoly", "conway"]).code, EXIT_USAGE);
    assert_eq!(run(["knotpoly", "solve-diophantine", "--bound", "x"]).code, EXIT_USAGE);
    assert_eq!(run(["knotpoly", "conway", "--pd", "[[1,2,3]]"]).code, EXIT_COMPUTATION);
    assert_eq!(run(["knotpoly", "conant", "--poly", "2+z^2"]).code, EXIT_COMPUTATION);
    assert_eq!(run(["knotpoly", "obstructions", "--poly", "1+z^2"]).code, EXIT_OK);
}
