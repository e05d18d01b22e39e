use std::process::Command;

fn tperm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tperm"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = tperm(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out.trim_end().to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["demazure", "s0@0", "s0@0"]), "s0@0");
    assert_eq!(
        ok(&["slipface", "fin chi=1 lo=-1 v=[1,-1,0,-2]", "1", "0"]),
        "3"
    );
    assert_eq!(ok(&["slipface", "iota3@0", "-2", "3"]), "0");
    assert_eq!(ok(&["inv", "fin chi=1 lo=-1 v=[1,-1,0,-2]"]), "5");
    assert_eq!(ok(&["inverse", "iota3@0"]), "iota-3@0");
    assert_eq!(ok(&["compose", "s0@2", "s1@2"]), "affine k=2 w=[-2,3]");
    assert_eq!(ok(&["bruhat", "id@2", "s1@2"]), "true");
    assert_eq!(ok(&["ess", "s0@0"]), "(1,1) s=1");
    assert_eq!(
        ok(&["gamma-rd", "1", "-1"]),
        "fin chi=-1 lo=-2 v=[1,2,-1,0]"
    );
    assert_eq!(
        ok(&["split-of", "affine k=2 w=[0,3]"]),
        "split k=2 e=[-2,0]"
    );
    assert_eq!(ok(&["chain-tau", "chain k=2 [d=1:T 1, d=1:T 1]"]), "s0@2");
    assert_eq!(ok(&["hecke-count", "s0@0", "2"]), "3");
    assert_eq!(
        ok(&[
            "--count-only",
            "reduced-words",
            "fin chi=0 lo=0 v=[3,2,1,0]"
        ]),
        "16"
    );
    assert_eq!(
        ok(&["reduced-words", "fin chi=0 lo=0 v=[2,1,0]"]),
        "word k=0 [0,1,0]\nword k=0 [1,0,1]"
    );
}

#[test]
fn demazure_with_oracle() {
    let a = "fin chi=0 lo=0 v=[1,2,0]";
    let fast = ok(&["demazure", a, a]);
    assert_eq!(ok(&["--oracle-bound", "1000", "demazure", a, a]), fast);
    let (code, _, err) = tperm(&["--oracle-bound", "1", "demazure", a, a]);
    assert_eq!(code, 3);
    assert!(err.contains("TooLarge"));
}

#[test]
fn gamma_split_and_chains() {
    let out = ok(&["gamma-split", "split k=2 e=[-2,0]", "--genus", "4"]);
    assert!(out.contains("u = 1"));
    assert!(out.contains("d = 3"));
    assert!(out.contains("x(0) = 1"));
    assert!(out.ends_with("gamma = affine k=2 w=[0,3]"));
    let tau = "affine k=2 w=[-2,3]";
    let brute = ok(&["wtau-points", "2", "1,1", tau, "--method", "brute"]);
    assert_eq!(brute, ok(&["wtau-points", "2", "1,1", tau]));
    assert_eq!(brute, "chain k=2 [d=1:T 1, d=1:T 0]");
    assert_eq!(
        ok(&["--count-only", "wtau-points", "2", "1,1", "id@2"]),
        "9"
    );
    assert_eq!(
        ok(&["wtau-points", "0", "1,1", "s0@0", "--method", "strata"])
            .lines()
            .count(),
        2
    );
    let (code, _, err) = tperm(&["wtau-points", "0", "1,1", "s0@0", "--method", "brute"]);
    assert_eq!(code, 3);
    assert!(err.contains("BadPeriod"));
}

#[test]
fn slipface_tables() {
    let table = ok(&["slipface", "s0@2", "--box", "-2:2,-1:1"]);
    assert_eq!(table.lines().count(), 4);
    assert!(table.lines().nth(2).unwrap().ends_with("0  0  0  1  2"));
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "slipface", "s0@0"])).unwrap();
    assert_eq!(json["chi"], 0);
}

#[test]
fn json_output() {
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "show", "affine k=2 w=[0,3]"])).unwrap();
    assert_eq!(v["perm"]["window"], serde_json::json!([0, 3]));
    assert_eq!(v["text"], "affine k=2 w=[0,3]");
    let r: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "genus1-report", "2", "2"])).unwrap();
    assert_eq!(r["pass"], true);
    let (code, out, _) = tperm(&["--json", "genus1-report", "2", "2", "--group-k", "4"]);
    assert_eq!(code, 0);
    let r: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(r["pass"], false);
}

#[test]
fn exit_codes() {
    for args in [
        vec!["show", "fin chi=1 lo=-1 v=[1,-1,0,"],
        vec!["show", "perm"],
        vec!["gamma-split", "split k=3 e=[0,0]"],
        vec!["chain-tau", "chain k=2 [d=1:Q]"],
        vec!["slipface", "s0@0", "--box", "1:2"],
        vec!["wtau-points", "2", "1,x", "id@2"],
    ] {
        let (code, out, err) = tperm(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error: "), "{err}");
    }
    for (args, kind) in [
        (vec!["show", "affine k=2 w=[0,2]"], "DuplicateResidue"),
        (vec!["compose", "s0@0", "s0@2"], "PeriodMismatch"),
        (vec!["bruhat", "id@0", "iota1@0"], "ShiftMismatch"),
        (vec!["gamma-rd", "0", "2"], "BadParameters"),
        (vec!["reduced-words", "iota1@2"], "ShiftNonzero"),
        (vec!["split-of", "s0@0"], "BadParameters"),
        (vec!["show", "s0@1"], "BadPeriod"),
    ] {
        let (code, _, err) = tperm(&args);
        assert_eq!(code, 3, "{args:?}");
        assert!(err.contains(kind), "{err}");
    }
}
