use qtwo::pipeline::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("qtwo").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gen_quartic_eight() {
    let (code, out, _) = call(&["gen", "--n", "8", "--r", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn witness_then_certify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let p = path.to_str().unwrap();
    assert_eq!(call(&["witness", "--graph", "R10_3", "--output", p]).0, 0);
    let (code, out, _) = call(&["certify", "--input", p]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("ok:"));

    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["graph"] = serde_json::Value::String("R10_4".into());
    std::fs::write(&path, v.to_string()).unwrap();
    let (code, out, _) = call(&["certify", "--input", p]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL"));
}

#[test]
fn searched_witness_certifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let trace = dir.path().join("t.jsonl");
    let (code, _, err) = call(&[
        "witness", "--graph", "R8_6", "--search-only", "--restarts", "8",
        "--output", path.to_str().unwrap(), "--trace", trace.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(std::fs::read_to_string(&trace).unwrap().lines().count() > 0);
    assert_eq!(call(&["certify", "--input", path.to_str().unwrap()]).0, 0);
}

#[test]
fn filter_output_certifies() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.g6");
    let output = dir.path().join("f.jsonl");
    std::fs::write(&input, "DUW\nEUxo\n").unwrap();
    let (code, _, err) = call(&["filter", "--input", input.to_str().unwrap(), "--output", output.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(call(&["certify", "--input", output.to_str().unwrap()]).0, 0);
}

#[test]
fn failures_and_usage() {
    assert_eq!(call(&["witness", "--graph", "P3", "--restarts", "4"]).0, 1);
    assert_eq!(call(&["gen"]).0, 2);
    assert_eq!(call(&["bogus"]).0, 2);
    assert_eq!(call(&["witness", "--graph", "nope"]).0, 2);
}
