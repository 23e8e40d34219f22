use std::path::{Path, PathBuf};
use std::process::Command;

fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_shared_library() {
    let lib_dir = artifact_dir();
    if !lib_dir.join("libmodgoldie_ffi.so").exists() {
        eprintln!("skipping: no shared library in {}", lib_dir.display());
        return;
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("mg_smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&lib_dir)
        .arg(format!("-Wl,-rpath,{}", lib_dir.display()))
        .arg("-lmodgoldie_ffi")
        .arg("-o")
        .arg(&out)
        .status();
    let Ok(status) = status else {
        eprintln!("skipping: no C compiler `{cc}`");
        return;
    };
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out)
        .arg(manifest.join("../../fixtures/tz2.json"))
        .output()
        .unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
