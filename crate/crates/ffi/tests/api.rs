use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::ptr;

use modgoldie_ffi::*;

fn fixture_path(name: &str) -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../fixtures/{name}.json"));
    CString::new(p.to_str().unwrap()).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(mg_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    mg_string_free(s);
    out
}

struct Handles {
    fixture: *mut MgFixture,
    module: *mut MgModule,
}

impl Drop for Handles {
    fn drop(&mut self) {
        unsafe {
            mg_module_free(self.module);
            mg_fixture_free(self.fixture);
        }
    }
}

fn open(fixture: &str, module: &str) -> Handles {
    let mut fx = ptr::null_mut();
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(
            mg_fixture_load(fixture_path(fixture).as_ptr(), &mut fx),
            MgStatus::Ok
        );
        let name = CString::new(module).unwrap();
        assert_eq!(mg_module_get(fx, name.as_ptr(), &mut m), MgStatus::Ok);
    }
    Handles {
        fixture: fx,
        module: m,
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(mg_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn lists_fixture_modules() {
    let h = open("tz2", "mod-es");
    let mut count = 0;
    unsafe {
        assert_eq!(mg_fixture_module_count(h.fixture, &mut count), MgStatus::Ok);
        let names: Vec<String> = (0..count)
            .map(|i| {
                let mut s = ptr::null_mut();
                assert_eq!(mg_fixture_module_name(h.fixture, i, &mut s), MgStatus::Ok);
                take(s)
            })
            .collect();
        assert!(names.iter().any(|n| n == "mod-es"));
        let mut s = ptr::null_mut();
        assert_eq!(
            mg_fixture_module_name(h.fixture, count, &mut s),
            MgStatus::NotFound
        );
    }
}

#[test]
fn mod_es_products_and_predicates() {
    let h = open("tz2", "mod-es");
    unsafe {
        let mut dim = 0;
        assert_eq!(mg_module_dim(h.module, &mut dim), MgStatus::Ok);
        assert_eq!(dim, 3);
        let mut size = 0;
        assert_eq!(mg_module_lattice_size(h.module, 0, &mut size), MgStatus::Ok);
        assert_eq!(size, 6);

        let (k, l) = (CString::new("K").unwrap(), CString::new("L").unwrap());
        let mut s = ptr::null_mut();
        assert_eq!(
            mg_module_product(h.module, k.as_ptr(), l.as_ptr(), &mut s),
            MgStatus::Ok
        );
        assert_eq!(take(s), "[[1,0,0]]");
        assert_eq!(
            mg_module_annihilator(h.module, k.as_ptr(), &mut s),
            MgStatus::Ok
        );
        assert_eq!(take(s), "[[1,0,0]]");

        let mut a = MgAnswer::Unknown;
        let duo = CString::new("duo").unwrap();
        assert_eq!(
            mg_module_predicate(h.module, duo.as_ptr(), &mut a),
            MgStatus::Ok
        );
        assert_eq!(a, MgAnswer::True);
        let semiprime = CString::new("semiprime").unwrap();
        assert_eq!(
            mg_module_predicate(h.module, semiprime.as_ptr(), &mut a),
            MgStatus::Ok
        );
        assert_eq!(a, MgAnswer::False);
        let bogus = CString::new("bogus").unwrap();
        assert_eq!(
            mg_module_predicate(h.module, bogus.as_ptr(), &mut a),
            MgStatus::NotFound
        );
        assert!(last_error().contains("bogus"));
    }
}

#[test]
fn reports_are_json() {
    let h = open("tz2", "mod-es");
    unsafe {
        let mut s = ptr::null_mut();
        let mut failed = usize::MAX;
        assert_eq!(
            mg_module_battery_json(h.module, 0, 0, &mut s, &mut failed),
            MgStatus::Ok
        );
        assert_eq!(failed, 0);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), 32);

        assert_eq!(mg_module_predicates_json(h.module, &mut s), MgStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["duo"], "true");

        assert_eq!(mg_module_demo_json(h.module, &mut s), MgStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert!(v["claims"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["holds"] == true));
    }
}

#[test]
fn demo_on_another_module_is_a_validation_error() {
    let h = open("f2f2", "mod-a2");
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { mg_module_demo_json(h.module, &mut s) },
        MgStatus::Validation
    );
    assert!(s.is_null());
    assert!(last_error().contains("fixture-specific"));
}

#[test]
fn error_codes() {
    let mut fx = ptr::null_mut();
    unsafe {
        assert_eq!(mg_fixture_load(ptr::null(), &mut fx), MgStatus::NullPointer);
        let missing = CString::new("/nonexistent/fixture.json").unwrap();
        assert_eq!(mg_fixture_load(missing.as_ptr(), &mut fx), MgStatus::Io);
        let broken = CString::new("{\"format_version\": 1,").unwrap();
        assert_eq!(mg_fixture_parse(broken.as_ptr(), &mut fx), MgStatus::Parse);
        assert!(last_error().starts_with("line 1"));
        let invalid_utf8 = [0xffu8, 0];
        assert_eq!(
            mg_fixture_parse(invalid_utf8.as_ptr().cast(), &mut fx),
            MgStatus::InvalidUtf8
        );
        assert!(fx.is_null());
        assert_eq!(
            mg_fixture_module_count(ptr::null(), ptr::null_mut()),
            MgStatus::NullPointer
        );
    }

    let h = open("tz2", "mod-es");
    unsafe {
        let mut size = 0;
        assert_eq!(
            mg_module_lattice_size(h.module, 2, &mut size),
            MgStatus::CapExceeded
        );
        let nope = CString::new("mod-nope").unwrap();
        let mut m = ptr::null_mut();
        assert_eq!(
            mg_module_get(h.fixture, nope.as_ptr(), &mut m),
            MgStatus::NotFound
        );
        let bad = CString::new("[[0,1,0]]").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(
            mg_module_annihilator(h.module, bad.as_ptr(), &mut s),
            MgStatus::Validation
        );
        assert_eq!(
            mg_module_dim(h.module, ptr::null_mut()),
            MgStatus::NullPointer
        );
        let mut dim = 0;
        assert_eq!(mg_module_dim(h.module, &mut dim), MgStatus::Ok);
        assert_eq!(last_error(), "");
    }
}

#[test]
fn invalid_fixture_is_a_validation_error() {
    let text = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/tz2.json"),
    )
    .unwrap();
    let text = text.replacen("\"p\": 2", "\"p\": 4", 1);
    let c = CString::new(text).unwrap();
    let mut fx = ptr::null_mut();
    assert_eq!(
        unsafe { mg_fixture_parse(c.as_ptr(), &mut fx) },
        MgStatus::Validation
    );
    assert!(last_error().contains("ring"));
}

#[test]
fn module_outlives_its_fixture() {
    let h = open("tz2", "mod-es");
    unsafe {
        mg_fixture_free(h.fixture);
        let mut dim = 0;
        assert_eq!(mg_module_dim(h.module, &mut dim), MgStatus::Ok);
        assert_eq!(dim, 3);
        mg_module_free(h.module);
    }
    std::mem::forget(h);
}

#[test]
fn committed_header_declares_every_export() {
    let header = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/modgoldie.h"),
    )
    .unwrap();
    let source =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs"))
            .unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}
