use std::process::Command;

use ss2zeta_cli::{run, EXIT_GUARD, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ss2zeta").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn zeta_text() {
    let (code, out, _) = call(&["zeta", "--m", "3", "--curve", "1:0:1:0"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "# m=3 q=8 modulus=x^3+x+1\ncurve 1:0:1:0\nN1 5\nN2 81\na1 -4\na2 16\nchar_poly 1 -4 16 -32 64\n"
    );
    let (_, twisted, _) = call(&["zeta", "--m", "3", "--curve", "1:0:1:1"]);
    assert!(twisted.contains("a1 4\na2 16\n"));
}

#[test]
fn zeta_json_and_degree_prefix() {
    let (code, out, _) = call(&["zeta", "--m", "3", "--curve", "3:1:0:0:0", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "ss2zeta/1");
    assert_eq!(v["modulus"], "x^3+x+1");
    assert_eq!(v["N1"], 9);
    assert_eq!(v["N2"], 65);
    assert_eq!(v["char_poly"], serde_json::json!([1, 0, 0, 0, 64]));
}

#[test]
fn census_totals_and_determinism() {
    let (code, out, _) = call(&["census", "--m", "3"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("total 30\n"));
    assert_eq!(call(&["census", "--m", "3"]).1, out);
    let (_, out4, _) = call(&["census", "--m", "4"]);
    assert!(out4.ends_with("total 70\n"));
}

#[test]
fn census_csv_and_json() {
    let (code, csv, _) = call(&["census", "--m", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("m,a1,a2,count,kind,b1,b2"));
    let total: u64 = lines
        .map(|l| l.split(',').nth(3).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 30);

    let (_, json, _) = call(&["census", "--m", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], "ss2zeta/1");
    assert_eq!(v["total"], 14);
    assert_eq!(v["classes"].as_array().unwrap().len(), 14);
    assert_eq!(v["classes"][0]["curve"], "1:0:0:0");
}

#[test]
fn find_results() {
    let (code, out, _) = call(&["find", "--m", "3", "--a1", "0", "--a2", "-8"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().last(),
        Some("EMPTY(isogeny class contains no jacobian)")
    );
    let (_, out, _) = call(&["find", "--m", "3", "--a1", "0", "--a2", "7"]);
    assert_eq!(
        out.lines().last(),
        Some("EMPTY(not a supersingular isogeny class)")
    );

    let (code, out, _) = call(&["find", "--m", "3", "--a1", "4", "--a2", "16"]);
    assert_eq!(code, 0);
    let curve = out.lines().last().unwrap().to_string();
    let (_, z, _) = call(&["zeta", "--m", "3", "--curve", &curve]);
    assert!(z.contains("N1 13\nN2 81\n"));

    let (_, json, _) = call(&["find", "--m", "5", "--a1", "0", "--a2", "-32", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["curve"], serde_json::Value::Null);
    assert_eq!(v["empty"], "no_jacobian");
}

#[test]
fn isogeny_table() {
    let (code, out, _) = call(&["isogeny", "--m", "3"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("split 6 simple 5\n"));
    let (_, out, _) = call(&["isogeny", "--m", "4"]);
    assert!(out.ends_with("split 15 simple 4\n"));
    let (_, json, _) = call(&["isogeny", "--m", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let zero = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["a1"] == 0 && c["a2"] == 0)
        .unwrap();
    assert_eq!(zero["kind"], "split");
    assert_eq!(zero["jacobian_count"], 7);
}

#[test]
fn verify_passes() {
    for m in ["1", "3", "5"] {
        let (code, out, _) = call(&["verify", "--m", m]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().last(), Some("PASS"));
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["census"]).0, EXIT_USAGE);
    assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["zeta", "--m", "3", "--curve", "1:0:9:0"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["zeta", "--m", "3", "--curve", "0:0:1:0"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["zeta", "--m", "3", "--curve", "1:0:1"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["zeta", "--m", "21", "--curve", "1:0:1:0"]).0,
        EXIT_GUARD
    );
    assert_eq!(
        call(&["zeta", "--m", "0", "--curve", "1:0:1:0"]).0,
        EXIT_GUARD
    );
    assert_eq!(call(&["census", "--m", "17"]).0, EXIT_GUARD);
    assert_eq!(call(&["verify", "--m", "7"]).0, EXIT_GUARD);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_ss2zeta"))
        .args(["find", "--m", "3", "--a1", "0", "--a2", "-8"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(
        String::from_utf8_lossy(&out.stdout).contains("EMPTY(isogeny class contains no jacobian)")
    );
    let status = Command::new(env!("CARGO_BIN_EXE_ss2zeta"))
        .args(["census", "--m", "99"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_GUARD));
}
