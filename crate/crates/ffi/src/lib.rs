//! C ABI for modgoldie.
//!
//! Every entry point returns an [`MgStatus`] and writes results through out
//! pointers. Fixtures and modules are opaque handles released with their
//! `_free` function. Strings handed out are NUL-terminated UTF-8 owned by
//! the caller and released with [`mg_string_free`]. After a non-OK status,
//! [`mg_last_error`] describes the problem on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use modgoldie::algmod::catalog::{Fixture, FixtureModule};
use modgoldie::battery::{demo_remark, run_battery, BatteryMeta};
use modgoldie::clitool::{load_fixture, parse_fixture, parse_submodule, FixtureError};
use modgoldie::latt::all_submodules;
use modgoldie::preds::{Analysis, Answer};
use modgoldie::{prodann, Budget, Error};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    Validation = 5,
    CapExceeded = 6,
    NotFound = 7,
    Panic = 8,
}

/// Truth value of a predicate. `Unknown` means the budget ran out.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MgAnswer {
    False = 0,
    True = 1,
    Unknown = 2,
}

/// A loaded fixture file: one ring and its modules.
pub struct MgFixture {
    fixture: Fixture,
}

/// One module of a fixture, with its named submodules.
pub struct MgModule {
    module: FixtureModule,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(MgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_budget() {
            MgStatus::CapExceeded
        } else {
            MgStatus::Validation
        };
        Failure(status, e.to_string())
    }
}

impl From<FixtureError> for Failure {
    fn from(e: FixtureError) -> Self {
        let status = match e {
            FixtureError::Io { .. } => MgStatus::Io,
            FixtureError::Syntax { .. } => MgStatus::Parse,
            FixtureError::Invalid { .. } => MgStatus::Validation,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            MgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            MgStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(MgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c =
        CString::new(s).map_err(|_| Failure(MgStatus::Validation, "string contains NUL".into()))?;
    write(out, c.into_raw())
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| Failure(MgStatus::Validation, e.to_string()))
}

fn budget(lattice_cap: usize, scan_limit: u64) -> Budget {
    let default = Budget::default();
    Budget {
        lattice_cap: if lattice_cap == 0 {
            default.lattice_cap
        } else {
            lattice_cap
        },
        scan_limit: if scan_limit == 0 {
            default.scan_limit
        } else {
            scan_limit
        },
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn mg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last non-OK status on this thread, or an empty string.
/// Valid until the next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn mg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads and validates a fixture file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_fixture_load(
    path: *const c_char,
    out: *mut *mut MgFixture,
) -> MgStatus {
    guard(|| {
        let path = text(path, "path")?;
        let fixture = load_fixture(Path::new(path))?;
        write(out, Box::into_raw(Box::new(MgFixture { fixture })))
    })
}

/// Parses and validates fixture JSON held in memory.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_fixture_parse(
    json: *const c_char,
    out: *mut *mut MgFixture,
) -> MgStatus {
    guard(|| {
        let json = text(json, "json")?;
        let fixture = parse_fixture(json)?;
        write(out, Box::into_raw(Box::new(MgFixture { fixture })))
    })
}

/// Releases a fixture. Null is ignored. Modules taken from it stay valid.
///
/// # Safety
/// `fixture` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mg_fixture_free(fixture: *mut MgFixture) {
    if !fixture.is_null() {
        drop(Box::from_raw(fixture));
    }
}

/// Number of modules in the fixture.
///
/// # Safety
/// `fixture` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_fixture_module_count(
    fixture: *const MgFixture,
    out: *mut usize,
) -> MgStatus {
    guard(|| {
        let fx = handle(fixture, "fixture")?;
        write(out, fx.fixture.modules.len())
    })
}

/// Name of the module at `index`, as a new string.
///
/// # Safety
/// `fixture` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_fixture_module_name(
    fixture: *const MgFixture,
    index: usize,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let fx = handle(fixture, "fixture")?;
        let fm =
            fx.fixture.modules.get(index).ok_or_else(|| {
                Failure(MgStatus::NotFound, format!("no module at index {index}"))
            })?;
        write_string(out, fm.module.name().to_string())
    })
}

/// Looks a module up by name. The handle is independent of the fixture.
///
/// # Safety
/// `fixture` must be a live handle, `name` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_get(
    fixture: *const MgFixture,
    name: *const c_char,
    out: *mut *mut MgModule,
) -> MgStatus {
    guard(|| {
        let fx = handle(fixture, "fixture")?;
        let name = text(name, "name")?;
        let module = fx
            .fixture
            .module(name)
            .cloned()
            .ok_or_else(|| Failure(MgStatus::NotFound, format!("no module named {name}")))?;
        write(out, Box::into_raw(Box::new(MgModule { module })))
    })
}

/// Releases a module. Null is ignored.
///
/// # Safety
/// `module` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mg_module_free(module: *mut MgModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// Dimension of the module over the prime field.
///
/// # Safety
/// `module` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_dim(module: *const MgModule, out: *mut usize) -> MgStatus {
    guard(|| write(out, handle(module, "module")?.module.module.dim()))
}

/// Number of submodules. `lattice_cap` of 0 means the default cap; a larger
/// lattice gives `CapExceeded`.
///
/// # Safety
/// `module` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_lattice_size(
    module: *const MgModule,
    lattice_cap: usize,
    out: *mut usize,
) -> MgStatus {
    guard(|| {
        let m = &handle(module, "module")?.module.module;
        let lattice = all_submodules(m, budget(lattice_cap, 0).lattice_cap)?;
        write(out, lattice.len())
    })
}

/// Evaluates one predicate by name, e.g. `"semiprime"` or `"duo"`. The names
/// are the keys of the predicate report.
///
/// # Safety
/// `module` must be a live handle, `name` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_predicate(
    module: *const MgModule,
    name: *const c_char,
    out: *mut MgAnswer,
) -> MgStatus {
    guard(|| {
        let fm = &handle(module, "module")?.module;
        let name = text(name, "name")?;
        let report = Analysis::new(&fm.module, Budget::default()).report(fm.progenerator);
        let answer = report
            .verdicts()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, a)| a)
            .ok_or_else(|| Failure(MgStatus::NotFound, format!("no predicate named {name}")))?;
        let answer = match answer {
            Answer::True => MgAnswer::True,
            Answer::False => MgAnswer::False,
            Answer::Unknown => MgAnswer::Unknown,
        };
        write(out, answer)
    })
}

/// Every predicate with witnesses, as JSON.
///
/// # Safety
/// `module` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_predicates_json(
    module: *const MgModule,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let fm = &handle(module, "module")?.module;
        let report = Analysis::new(&fm.module, Budget::default()).report(fm.progenerator);
        write_string(out, json(&report)?)
    })
}

/// The product `K_M L`. Submodules are given as an alias, `0`, `M`, or rows
/// such as `[[1,0,0]]`; the result is the canonical rows.
///
/// # Safety
/// `module` must be a live handle, `k` and `l` NUL-terminated strings and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_product(
    module: *const MgModule,
    k: *const c_char,
    l: *const c_char,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let fm = &handle(module, "module")?.module;
        let parse = |s: &str| parse_submodule(fm, s).map_err(|e| Failure(MgStatus::Validation, e));
        let k = parse(text(k, "k")?)?;
        let l = parse(text(l, "l")?)?;
        let kl = prodann::product(&fm.module, &k, &l)?;
        write_string(out, kl.space().to_string())
    })
}

/// `Ann_M(N)` as canonical rows; `n` is parsed like the product arguments.
///
/// # Safety
/// `module` must be a live handle, `n` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_annihilator(
    module: *const MgModule,
    n: *const c_char,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let fm = &handle(module, "module")?.module;
        let n = parse_submodule(fm, text(n, "n")?).map_err(|e| Failure(MgStatus::Validation, e))?;
        let ann = prodann::annihilator(&fm.module, &n)?;
        write_string(out, ann.space().to_string())
    })
}

/// Runs the theorem battery and returns the report as JSON. Zero for
/// `lattice_cap` or `scan_limit` selects the default. `failed` receives the
/// number of failed checks.
///
/// # Safety
/// `module` must be a live handle; `out` and `failed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_battery_json(
    module: *const MgModule,
    lattice_cap: usize,
    scan_limit: u64,
    out: *mut *mut c_char,
    failed: *mut usize,
) -> MgStatus {
    guard(|| {
        let fm = &handle(module, "module")?.module;
        if out.is_null() || failed.is_null() {
            return Err(null("output pointer"));
        }
        let meta = BatteryMeta {
            progenerator: fm.progenerator,
            budget: budget(lattice_cap, scan_limit),
        };
        let report = run_battery(&fm.module, meta);
        write(failed, report.tally().fail)?;
        write_string(out, json(&report)?)
    })
}

/// The worked example on a module isomorphic to `mod-es`, as JSON.
/// Other modules give `Validation`.
///
/// # Safety
/// `module` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mg_module_demo_json(
    module: *const MgModule,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let fm = &handle(module, "module")?.module;
        let report = demo_remark(&fm.module)?;
        write_string(out, json(&report)?)
    })
}
