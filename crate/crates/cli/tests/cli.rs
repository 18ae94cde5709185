use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn components_for_three_orderings() {
    for (ord, eta) in [("1234", "eta=3"), ("1243", "eta=1"), ("1324", "eta=1")] {
        let out = run(&[
            "components",
            "--rect",
            "3x5",
            "--types",
            "2;2,1;3,1;3,2",
            "--ordering",
            ord,
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), eta);
    }
}

#[test]
fn orbits_json() {
    let v = json(&[
        "orbits",
        "--rect",
        "3x4",
        "--types",
        "2;2;2,1;3,1",
        "--ordering",
        "1234",
    ]);
    assert_eq!(v["set_size"], 8);
    let mut sizes: Vec<usize> = v["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o.as_array().unwrap().len())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [3, 5]);
}

#[test]
fn explicit_word() {
    let out = run(&[
        "components",
        "--rect",
        "3x4",
        "--types",
        "2;2;2,1;3,1",
        "--word",
        "sh_2,sh_3,esh_3,esh_2",
    ]);
    assert_eq!(stdout(&out).trim(), "eta=2");
}

#[test]
fn lrcoeff_counts_tableaux() {
    let out = run(&[
        "lrcoeff", "--rect", "2x2", "--inner", "", "--outer", "2,2", "--types", "1;1;1;1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2");
    let v = json(&[
        "lrcoeff", "--inner", "2,1", "--outer", "3,2,1", "--types", "2,1", "--oracle",
    ]);
    assert_eq!(v["c"], 2);
    assert_eq!(v["oracle"], 2);
}

#[test]
fn kcoeff_and_parity() {
    let out = run(&[
        "kcoeff", "--rect", "3x6", "--alpha", "4,2", "--beta", "4", "--gamma", "5,2",
    ]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = run(&[
        "kcoeff", "--rect", "3x6", "--alpha", "4,2", "--beta", "4", "--gamma", "5,2", "--pieri",
    ]);
    assert_eq!(stdout(&out).trim(), "2");
    let v = json(&[
        "kcoeff", "--rect", "4x4", "--alpha", "3,1,1", "--beta", "3,1,1", "--gamma", "3,1,1",
        "--parity",
    ]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "alpha", "beta", "gamma", "c", "k", "eta", "sign", "chi", "ok",
    ] {
        assert!(keys.contains(&key), "{key}");
    }
    assert_eq!(v["c"], 2);
    assert_eq!(v["eta"], 2);
}

#[test]
fn verify_examples() {
    for id in ["g38", "g37", "g48", "g49", "pieri-3x6", "promo-2x2"] {
        let out = run(&["verify-example", id]);
        assert_eq!(out.status.code(), Some(0), "{id}: {}", stdout(&out));
    }
    assert_eq!(run(&["verify-example", "missing"]).status.code(), Some(2));
}

#[test]
fn parity_scan_reports_no_failures() {
    let v = json(&["parity-scan", "--rect", "2x3", "--jobs", "2"]);
    assert_eq!(v["triples"], 57);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn osculating_report_shape() {
    let v = json(&[
        "osculating-check",
        "--n",
        "4",
        "--seed",
        "9",
        "--trials",
        "5",
    ]);
    assert_eq!(v, serde_json::json!({"n": 4, "checked": 75, "failures": 0}));
}

#[test]
fn promotion_orbits_on_square() {
    let v = json(&["promotion-orbits", "--rect", "2x2"]);
    assert_eq!(v["set_size"], 2);
    assert_eq!(v["sign"], 1);
    assert_eq!(v["k"], 1);
    assert_eq!(v["ok"], true);
}

#[test]
fn covering_exports() {
    let out = run(&[
        "export-covering",
        "--rect",
        "2x3",
        "--types",
        "1;2;2",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("digraph"));
    let v = json(&["export-covering", "--rect", "2x3", "--types", "1;2;2"]);
    assert_eq!(v["fibers"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_chains_json_is_deterministic() {
    let args = [
        "enumerate-chains",
        "--rect",
        "2x3",
        "--types",
        "1;2;1;2",
        "--format",
        "json",
    ];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(!v.as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        run(&["components", "--rect", "3x5", "--types", "2;2,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["components", "--rect", "3by5", "--types", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["components", "--rect", "2x2", "--types", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["kcoeff", "--rect", "2x2", "--alpha", "1", "--beta", "1", "--gamma", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "components",
            "--rect",
            "3x5",
            "--types",
            "2;2,1;3,1;3,2",
            "--ordering",
            "1224"
        ])
        .status
        .code(),
        Some(2)
    );
}
