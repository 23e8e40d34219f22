#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .expect("workspace root exists")
}

pub fn fixture_path(name: &str) -> PathBuf {
    workspace_root()
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn updating() -> bool {
    std::env::var_os("UPDATE_FIXTURES").is_some_and(|v| v == "1")
}

/// Compares `actual` with the committed file, or rewrites it when `UPDATE_FIXTURES=1`.
pub fn assert_golden(path: &PathBuf, actual: &str) {
    if updating() {
        std::fs::write(path, actual).expect("golden file is writable");
        return;
    }
    let expected = std::fs::read_to_string(path).unwrap_or_else(|e| {
        panic!(
            "missing golden file {} ({e}); rerun with UPDATE_FIXTURES=1",
            path.display()
        )
    });
    if expected != actual {
        let first = expected
            .lines()
            .zip(actual.lines())
            .position(|(a, b)| a != b);
        panic!(
            "{} differs from the committed copy (first differing line {:?}); rerun with UPDATE_FIXTURES=1 if intended\n--- actual ---\n{actual}",
            path.display(),
            first.map(|i| i + 1)
        );
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn modgoldie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modgoldie"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}
