mod common;

use common::{assert_golden, golden_path, modgoldie, stderr, stdout};

fn golden_run(name: &str, args: &[&str], code: i32) {
    let out = modgoldie(args);
    assert_eq!(out.status.code(), Some(code), "stderr: {}", stderr(&out));
    assert_golden(&golden_path(name), &stdout(&out));
}

#[test]
fn demo_text_and_json_match_goldens() {
    golden_run("demo-remark-aa.txt", &["demo", "remark-aa"], 0);
    golden_run("demo-remark-aa.json", &["demo", "remark-aa", "--json"], 0);
}

#[test]
fn battery_on_mod_es_matches_golden_report() {
    golden_run(
        "battery-mod-es.json",
        &[
            "battery",
            "fixtures/tz2.json",
            "--module",
            "mod-es",
            "--json",
        ],
        0,
    );
    golden_run(
        "battery-mod-es.txt",
        &["battery", "fixtures/tz2.json", "--module", "mod-es"],
        0,
    );
}

#[test]
fn lattice_renderings_match_goldens() {
    golden_run(
        "lattice-mod-es.txt",
        &["lattice", "fixtures/tz2.json", "--module", "mod-es"],
        0,
    );
    golden_run(
        "lattice-mod-es.dot",
        &[
            "lattice",
            "fixtures/tz2.json",
            "--module",
            "mod-es",
            "--dot",
            "-",
        ],
        0,
    );
}

#[test]
fn dot_file_output_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("es.dot");
    let out = modgoldie(&[
        "lattice",
        "fixtures/tz2.json",
        "--module",
        "mod-es",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 7);
}

#[test]
fn inspect_matches_golden() {
    golden_run(
        "inspect-mod-es.txt",
        &["inspect", "fixtures/tz2.json", "--module", "mod-es"],
        0,
    );
}

#[test]
fn product_of_k_and_l_is_s() {
    let out = modgoldie(&[
        "op",
        "product",
        "fixtures/tz2.json",
        "--module",
        "mod-es",
        "--args",
        "K",
        "L",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[[1,0,0]] = S\n");
}

#[test]
fn other_operations_accept_aliases_and_rows() {
    let run = |args: &[&str]| {
        let mut full = vec!["op"];
        full.push(args[0]);
        full.extend(["fixtures/tz2.json", "--module", "mod-es", "--args"]);
        full.extend(&args[1..]);
        let out = modgoldie(&full);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
        stdout(&out)
    };
    assert_eq!(run(&["ann", "K"]), "[[1,0,0]] = S\n");
    assert_eq!(run(&["ann", "1,0,0;0,0,1"]), "[[1,0,0]] = S\n");
    assert_eq!(run(&["power", "K", "2"]), "[[1,0,0]] = S\n");
    assert_eq!(run(&["product", "S", "[[1,0,0]]"]), "[]\n");
}

#[test]
fn every_fixture_validates() {
    for name in ["tz2", "f2f2", "m2f2", "dn", "ut2"] {
        let file = format!("fixtures/{name}.json");
        let out = modgoldie(&["validate", &file]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
    }
}

#[test]
fn malformed_fixture_reports_line_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = std::fs::read_to_string(common::fixture_path("tz2")).unwrap();
    std::fs::write(&path, text.replacen("\"p\": 2", "\"p\": \"two\"", 1)).unwrap();
    let out = modgoldie(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.starts_with("error: line 5,"), "{err}");
    assert!(err.contains("field `ring.p`"), "{err}");
}

#[test]
fn invalid_module_action_names_its_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = std::fs::read_to_string(common::fixture_path("tz2")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["modules"][0]["action"][1][0][0] = serde_json::json!(1);
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = modgoldie(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("modules[0]"), "{}", stderr(&out));
}

#[test]
fn bad_inputs_exit_with_code_two() {
    let cases: &[&[&str]] = &[
        &["validate", "fixtures/missing.json"],
        &["inspect", "fixtures/tz2.json", "--module", "mod-nope"],
        &[
            "op",
            "product",
            "fixtures/tz2.json",
            "--module",
            "mod-es",
            "--args",
            "K",
        ],
        &[
            "op",
            "ann",
            "fixtures/tz2.json",
            "--module",
            "mod-es",
            "--args",
            "[[0,1,0]]",
        ],
        &[
            "op",
            "power",
            "fixtures/tz2.json",
            "--module",
            "mod-es",
            "--args",
            "K",
            "x",
        ],
        &[
            "lattice",
            "fixtures/tz2.json",
            "--module",
            "mod-es",
            "--lattice-cap",
            "2",
        ],
        &["fuzz", "--rings", "nope", "--seeds", "0..1"],
        &["fuzz", "--seeds", "5..2"],
        &["no-such-command"],
    ];
    for args in cases {
        let out = modgoldie(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn demo_refuses_other_modules() {
    let out = modgoldie(&[
        "demo",
        "remark-aa",
        "--fixture",
        "fixtures/f2f2.json",
        "--module",
        "mod-a2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("fixture-specific"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn fuzz_single_seed_replay_is_byte_identical() {
    let args = ["fuzz", "--rings", "dn", "--seeds", "3..4", "--json"];
    let first = modgoldie(&args);
    let second = modgoldie(&args);
    assert_eq!(first.status.code(), Some(0), "stderr: {}", stderr(&first));
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn zero_budget_fuzz_warns_and_succeeds() {
    let out = modgoldie(&[
        "fuzz",
        "--rings",
        "tz2",
        "--seeds",
        "0..2",
        "--lattice-cap",
        "0",
        "--scan-limit",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"), "{}", stderr(&out));
    assert!(stdout(&out).contains(" 0 fail,"), "{}", stdout(&out));
}
