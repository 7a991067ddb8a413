//! C ABI over `qgordon`.
//!
//! Polynomials and suite results cross the boundary as opaque handles that
//! the caller releases with `qg_poly_free` / `qg_suite_free`. Strings returned
//! through `char **` out-parameters are owned by the caller and released with
//! `qg_string_free`. Every fallible call returns a [`QgStatus`]; on failure the
//! message is available from `qg_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qgordon::agcore::{b_bosonic, big_f, f_tilde};
use qgordon::cli::{run_family, Family, SuiteConfig, EXIT_FAIL, EXIT_PASS};
use qgordon::paths::path_gf;
use qgordon::qalgebra::{q_binomial, q_pochhammer};
use qgordon::report::VerificationReport;
use qgordon::rrpoly::{f_shifted, rr_bosonic, rr_fermionic, RrKind};
use qgordon::{Error, LaurentPoly};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Precondition = 5,
    Consistency = 6,
    OutOfRange = 7,
    Panic = 8,
}

/// Exact Laurent polynomial in `q` with integer coefficients.
pub struct QgPoly(LaurentPoly);

/// Reports of one suite run, in run order.
pub struct QgSuite(Vec<VerificationReport>);

/// Which finite Rogers-Ramanujan family.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QgRrKind {
    E = 0,
    D = 1,
}

/// Grid options for `qg_suite_run`. Negative integers and a zero `jobs`
/// select the defaults.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct QgSuiteOptions {
    pub l_max: i64,
    pub m_max: i64,
    pub nu: i64,
    pub cutoff: i64,
    pub nu3: bool,
    pub jobs: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: QgStatus, msg: impl Into<String>) -> QgStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> QgStatus {
    let status = match e {
        Error::Domain(_) => QgStatus::Domain,
        Error::Precondition(_) => QgStatus::Precondition,
        Error::Parse(_) => QgStatus::Parse,
        Error::Consistency(_) => QgStatus::Consistency,
    };
    fail(status, e.to_string())
}

/// Runs `body` with panics turned into `QgStatus::Panic`.
fn guard(body: impl FnOnce() -> QgStatus) -> QgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(QgStatus::Panic, msg)
        }
    }
}

unsafe fn poly_ref<'a>(p: *const QgPoly) -> Result<&'a LaurentPoly, QgStatus> {
    // SAFETY: the caller passes null or a live handle from this library.
    unsafe { p.as_ref() }
        .map(|p| &p.0)
        .ok_or_else(|| fail(QgStatus::NullPointer, "null polynomial handle"))
}

unsafe fn put_poly(out: *mut *mut QgPoly, value: qgordon::Result<LaurentPoly>) -> QgStatus {
    if out.is_null() {
        return fail(QgStatus::NullPointer, "null out-pointer");
    }
    match value {
        Ok(p) => {
            // SAFETY: `out` is non-null and points to writable storage.
            unsafe { *out = Box::into_raw(Box::new(QgPoly(p))) };
            QgStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

unsafe fn put_string(out: *mut *mut c_char, text: String) -> QgStatus {
    if out.is_null() {
        return fail(QgStatus::NullPointer, "null out-pointer");
    }
    match CString::new(text) {
        Ok(s) => {
            // SAFETY: `out` is non-null and points to writable storage.
            unsafe { *out = s.into_raw() };
            QgStatus::Ok
        }
        Err(_) => fail(QgStatus::InvalidUtf8, "string contains a NUL byte"),
    }
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qg_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from `CString::into_raw` in `put_string`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses the canonical text form, e.g. `"1 + q - 2*q^-3"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_parse(text: *const c_char, out: *mut *mut QgPoly) -> QgStatus {
    guard(|| {
        if text.is_null() {
            return fail(QgStatus::NullPointer, "null text");
        }
        // SAFETY: `text` is non-null and NUL-terminated per the contract.
        let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
            return fail(QgStatus::InvalidUtf8, "text is not UTF-8");
        };
        unsafe { put_poly(out, text.parse()) }
    })
}

/// # Safety
/// `p` must be null or a handle from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_free(p: *mut QgPoly) {
    if !p.is_null() {
        // SAFETY: `p` came from `Box::into_raw` in `put_poly`.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_to_string(p: *const QgPoly, out: *mut *mut c_char) -> QgStatus {
    guard(|| match unsafe { poly_ref(p) } {
        Ok(p) => unsafe { put_string(out, p.to_string()) },
        Err(s) => s,
    })
}

/// Coefficients as JSON `[[exponent, "decimal"], ...]` in increasing exponent order.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_to_json(p: *const QgPoly, out: *mut *mut c_char) -> QgStatus {
    guard(|| match unsafe { poly_ref(p) } {
        Ok(p) => {
            let json = serde_json::to_string(&p.to_pairs()).expect("pairs serialize");
            unsafe { put_string(out, json) }
        }
        Err(s) => s,
    })
}

/// Coefficient of `q^exponent` as a decimal string.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_coeff(
    p: *const QgPoly,
    exponent: i64,
    out: *mut *mut c_char,
) -> QgStatus {
    guard(|| match unsafe { poly_ref(p) } {
        Ok(p) => unsafe { put_string(out, p.coeff(exponent).to_string()) },
        Err(s) => s,
    })
}

/// Value at `q = 1` as a decimal string.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_eval_at_one(p: *const QgPoly, out: *mut *mut c_char) -> QgStatus {
    guard(|| match unsafe { poly_ref(p) } {
        Ok(p) => unsafe { put_string(out, p.eval_at_one().to_string()) },
        Err(s) => s,
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_equal(
    a: *const QgPoly,
    b: *const QgPoly,
    out: *mut bool,
) -> QgStatus {
    guard(|| {
        let (a, b) = match unsafe { (poly_ref(a), poly_ref(b)) } {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        if out.is_null() {
            return fail(QgStatus::NullPointer, "null out-pointer");
        }
        // SAFETY: `out` is non-null and writable.
        unsafe { *out = a == b };
        QgStatus::Ok
    })
}

unsafe fn binary(
    a: *const QgPoly,
    b: *const QgPoly,
    out: *mut *mut QgPoly,
    op: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly,
) -> QgStatus {
    guard(|| match unsafe { (poly_ref(a), poly_ref(b)) } {
        (Ok(a), Ok(b)) => unsafe { put_poly(out, Ok(op(a, b))) },
        (Err(s), _) | (_, Err(s)) => s,
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_add(
    a: *const QgPoly,
    b: *const QgPoly,
    out: *mut *mut QgPoly,
) -> QgStatus {
    unsafe { binary(a, b, out, |a, b| a + b) }
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_sub(
    a: *const QgPoly,
    b: *const QgPoly,
    out: *mut *mut QgPoly,
) -> QgStatus {
    unsafe { binary(a, b, out, |a, b| a - b) }
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_mul(
    a: *const QgPoly,
    b: *const QgPoly,
    out: *mut *mut QgPoly,
) -> QgStatus {
    unsafe { binary(a, b, out, |a, b| a * b) }
}

/// Substitutes `q -> 1/q`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_poly_invert(p: *const QgPoly, out: *mut *mut QgPoly) -> QgStatus {
    guard(|| match unsafe { poly_ref(p) } {
        Ok(p) => unsafe { put_poly(out, Ok(p.invert_variable())) },
        Err(s) => s,
    })
}

/// `[n+m choose n]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_q_binomial(n: i64, m: i64, out: *mut *mut QgPoly) -> QgStatus {
    guard(|| unsafe { put_poly(out, q_binomial(n, m)) })
}

/// `(q^a; q)_t`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_q_pochhammer(a: i64, t: i64, out: *mut *mut QgPoly) -> QgStatus {
    guard(|| unsafe { put_poly(out, q_pochhammer(a, t)) })
}

fn rr_kind(kind: QgRrKind) -> RrKind {
    match kind {
        QgRrKind::E => RrKind::E,
        QgRrKind::D => RrKind::D,
    }
}

/// `e_L` or `d_L` from the positive sum (any integer `L`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_rr_fermionic(
    kind: QgRrKind,
    l: i64,
    out: *mut *mut QgPoly,
) -> QgStatus {
    guard(|| unsafe { put_poly(out, Ok(rr_fermionic(rr_kind(kind), l))) })
}

/// `e_L` or `d_L` from the alternating sum (`L >= 0`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_rr_bosonic(kind: QgRrKind, l: i64, out: *mut *mut QgPoly) -> QgStatus {
    guard(|| unsafe { put_poly(out, rr_bosonic(rr_kind(kind), l)) })
}

/// Shifted Rogers-Ramanujan polynomial `f_{s,b}(L, M)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_f_shifted(
    s: i64,
    b: i64,
    l: i64,
    m: i64,
    out: *mut *mut QgPoly,
) -> QgStatus {
    guard(|| unsafe { put_poly(out, f_shifted(s, b, l, m)) })
}

/// Unshifted Andrews-Gordon multisum.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_f_tilde(
    nu: i64,
    s: i64,
    b: i64,
    l: i64,
    out: *mut *mut QgPoly,
) -> QgStatus {
    guard(|| unsafe { put_poly(out, f_tilde(nu, s, b, l)) })
}

/// Shifted Andrews-Gordon multisum.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_big_f(
    nu: i64,
    s: i64,
    b: i64,
    l: i64,
    m: i64,
    out: *mut *mut QgPoly,
) -> QgStatus {
    guard(|| unsafe { put_poly(out, big_f(nu, s, b, l, m)) })
}

/// Alternating-sum Andrews-Gordon polynomial with 1-based indices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_b_bosonic(
    nu: i64,
    s: i64,
    b: i64,
    l: i64,
    out: *mut *mut QgPoly,
) -> QgStatus {
    guard(|| unsafe { put_poly(out, b_bosonic(nu, s, b, l)) })
}

/// Weight generating function of admissible paths on `[i, f]` from `s` to `b`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_path_gf(
    i: i64,
    f: i64,
    s: u8,
    b: u8,
    out: *mut *mut QgPoly,
) -> QgStatus {
    guard(|| unsafe { put_poly(out, path_gf(i, f, s, b, None)) })
}

/// Runs one identity family (`"rr"`, `"paths"`, `"ag"`, `"gis"`, `"santos"`,
/// `"series"` or `"all"`). `options` may be null for the defaults.
///
/// # Safety
/// `family` must be a NUL-terminated string; `options` null or readable;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qg_suite_run(
    family: *const c_char,
    options: *const QgSuiteOptions,
    out: *mut *mut QgSuite,
) -> QgStatus {
    guard(|| {
        if family.is_null() || out.is_null() {
            return fail(QgStatus::NullPointer, "null family or out-pointer");
        }
        // SAFETY: non-null and NUL-terminated per the contract.
        let Ok(name) = unsafe { CStr::from_ptr(family) }.to_str() else {
            return fail(QgStatus::InvalidUtf8, "family is not UTF-8");
        };
        let Some(family) = Family::parse(name) else {
            return fail(QgStatus::Parse, format!("unknown family {name:?}"));
        };
        let set = |v: i64| (v >= 0).then_some(v);
        // SAFETY: null or readable per the contract.
        let cfg = match unsafe { options.as_ref() } {
            None => SuiteConfig::default(),
            Some(o) => SuiteConfig {
                l_max: set(o.l_max),
                m_max: set(o.m_max),
                nu: set(o.nu),
                cutoff: set(o.cutoff),
                nu3: o.nu3,
                jobs: (o.jobs > 0).then_some(o.jobs as usize),
                ..SuiteConfig::default()
            },
        };
        if let Err(e) = cfg.validate() {
            return from_error(e);
        }
        let result = match cfg.jobs {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| run_family(family, &cfg)),
                Err(e) => return fail(QgStatus::Domain, e.to_string()),
            },
            None => run_family(family, &cfg),
        };
        match result {
            Ok(reports) => {
                // SAFETY: `out` is non-null and writable.
                unsafe { *out = Box::into_raw(Box::new(QgSuite(reports))) };
                QgStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of reports; 0 for a null handle.
///
/// # Safety
/// `suite` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qg_suite_len(suite: *const QgSuite) -> usize {
    // SAFETY: null or live per the contract.
    unsafe { suite.as_ref() }.map_or(0, |s| s.0.len())
}

/// Report `index` as one JSON line (no trailing newline).
///
/// # Safety
/// `suite` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qg_suite_report_json(
    suite: *const QgSuite,
    index: usize,
    out: *mut *mut c_char,
) -> QgStatus {
    guard(|| {
        // SAFETY: null or live per the contract.
        let Some(suite) = (unsafe { suite.as_ref() }) else {
            return fail(QgStatus::NullPointer, "null suite handle");
        };
        match suite.0.get(index) {
            Some(r) => unsafe { put_string(out, r.to_json_line()) },
            None => fail(
                QgStatus::OutOfRange,
                format!("report {index} of {}", suite.0.len()),
            ),
        }
    })
}

/// True when every report passed; false for a null handle.
///
/// # Safety
/// `suite` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qg_suite_passed(suite: *const QgSuite) -> bool {
    // SAFETY: null or live per the contract.
    unsafe { suite.as_ref() }.is_some_and(|s| s.0.iter().all(VerificationReport::passed))
}

/// The command-line exit code for this run: 0 when all reports pass, 1 otherwise.
///
/// # Safety
/// `suite` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qg_suite_exit_code(suite: *const QgSuite) -> i32 {
    if unsafe { qg_suite_passed(suite) } {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// # Safety
/// `suite` must be null or a handle from `qg_suite_run` and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qg_suite_free(suite: *mut QgSuite) {
    if !suite.is_null() {
        // SAFETY: `suite` came from `Box::into_raw` in `qg_suite_run`.
        drop(unsafe { Box::from_raw(suite) });
    }
}
