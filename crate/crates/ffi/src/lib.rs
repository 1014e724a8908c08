//! C ABI over the torus-skein kernel.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns
//! a [`TsStatus`]; the message of the last failure on the calling thread is
//! available from [`ts_last_error`]. Strings returned through `out`
//! parameters are released with [`ts_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use torus_skein::daha::{
    apply_expr, build_rep, oracle_equal, qtilde, w_element, DahaError, Expr, LaurentPoly, OracleConfig, WMode,
};
use torus_skein::verify::{self, Report, Suite, VerifyConfig, VerifyError};
use torus_skein::words::Element;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    RankMismatch = 5,
    /// A verification ran and at least one check failed.
    ChecksFailed = 6,
    Internal = 7,
}

/// A skein element on a fixed number of strands.
pub struct TsElement(Element);

/// A verification report.
pub struct TsReport(Report);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: TsStatus, msg: impl Into<String>) -> TsStatus {
    set_error(msg);
    status
}

fn daha_status(e: &DahaError) -> TsStatus {
    match e {
        DahaError::RankMismatch { .. } => TsStatus::RankMismatch,
        DahaError::Parse(_) | DahaError::Word(_) => TsStatus::Parse,
        _ => TsStatus::InvalidArgument,
    }
}

/// Runs `f`, turning a panic into `Internal`.
fn guard(f: impl FnOnce() -> TsStatus) -> TsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TsStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, TsStatus> {
    if p.is_null() {
        return Err(fail(TsStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(TsStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> TsStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TsStatus::Ok
        }
        Err(_) => fail(TsStatus::Internal, "interior nul in output"),
    }
}

unsafe fn write_element(out: *mut *mut TsElement, e: Element) -> TsStatus {
    *out = Box::into_raw(Box::new(TsElement(e)));
    TsStatus::Ok
}

/// Short description of a status code. The pointer is static.
#[no_mangle]
pub extern "C" fn ts_status_message(status: TsStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        TsStatus::Ok => b"ok\0",
        TsStatus::NullPointer => b"null pointer\0",
        TsStatus::InvalidUtf8 => b"invalid UTF-8\0",
        TsStatus::Parse => b"parse error\0",
        TsStatus::InvalidArgument => b"invalid argument\0",
        TsStatus::RankMismatch => b"rank mismatch\0",
        TsStatus::ChecksFailed => b"checks failed\0",
        TsStatus::Internal => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Copy of the last error message on this thread, or null if none.
#[no_mangle]
pub extern "C" fn ts_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an element such as `"x1 s1 - s^2 * y1^-1"` on `strands` strands.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_element_parse(text: *const c_char, strands: usize, out: *mut *mut TsElement) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "null out pointer");
        }
        let t = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Element::parse(t, strands) {
            Ok(e) => write_element(out, e),
            Err(e) => fail(TsStatus::Parse, e.to_string()),
        }
    })
}

/// `Q̃_x` for `x = (a, b)` at rank `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_element_qtilde(a: i64, b: i64, n: usize, out: *mut *mut TsElement) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "null out pointer");
        }
        match qtilde((a, b), n) {
            Ok(e) => write_element(out, e),
            Err(e) => fail(daha_status(&e), e.to_string()),
        }
    })
}

/// `W_x` at rank `n`, from power sums when `axis` is set.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_element_w(a: i64, b: i64, n: usize, axis: bool, out: *mut *mut TsElement) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "null out pointer");
        }
        let mode = if axis { WMode::Axis } else { WMode::General };
        match w_element((a, b), n, mode) {
            Ok(e) => write_element(out, e),
            Err(e) => fail(daha_status(&e), e.to_string()),
        }
    })
}

/// `a * b`
///
/// # Safety
/// All pointers must be valid; `a`, `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn ts_element_mul(a: *const TsElement, b: *const TsElement, out: *mut *mut TsElement) -> TsStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            return fail(TsStatus::NullPointer, "null argument");
        }
        match (*a).0.mul(&(*b).0) {
            Ok(e) => write_element(out, e),
            Err(e) => fail(TsStatus::RankMismatch, e.to_string()),
        }
    })
}

/// `a - b`
///
/// # Safety
/// All pointers must be valid; `a`, `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn ts_element_sub(a: *const TsElement, b: *const TsElement, out: *mut *mut TsElement) -> TsStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            return fail(TsStatus::NullPointer, "null argument");
        }
        match (*a).0.sub(&(*b).0) {
            Ok(e) => write_element(out, e),
            Err(e) => fail(TsStatus::RankMismatch, e.to_string()),
        }
    })
}

/// Renders an element; free the result with [`ts_string_free`].
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_element_to_string(e: *const TsElement, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        if e.is_null() || out.is_null() {
            return fail(TsStatus::NullPointer, "null argument");
        }
        write_string(out, (*e).0.to_string())
    })
}

/// # Safety
/// `e` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_element_free(e: *mut TsElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Compares two elements on the monomial box of radius `box_radius`.
/// `*equal` is set only on success.
///
/// # Safety
/// All pointers must be valid; `a`, `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn ts_oracle_equal(
    a: *const TsElement,
    b: *const TsElement,
    box_radius: u32,
    trials: u32,
    seed: u64,
    equal: *mut bool,
) -> TsStatus {
    guard(|| {
        if a.is_null() || b.is_null() || equal.is_null() {
            return fail(TsStatus::NullPointer, "null argument");
        }
        let (a, b) = (&(*a).0, &(*b).0);
        let conv = match build_rep(a.strands()) {
            Ok(c) => c,
            Err(e) => return fail(daha_status(&e), e.to_string()),
        };
        let cfg = OracleConfig { box_radius, trials, seed, ..OracleConfig::default() };
        match oracle_equal(a, b, conv, &cfg) {
            Ok(v) => {
                *equal = v.is_equal();
                TsStatus::Ok
            }
            Err(e) => fail(daha_status(&e), e.to_string()),
        }
    })
}

/// Image of the polynomial `poly` (e.g. `"X1 X2^-1"`) under `e`.
///
/// # Safety
/// `e` must be a live handle, `poly` a valid C string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ts_element_apply(e: *const TsElement, poly: *const c_char, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        if e.is_null() || out.is_null() {
            return fail(TsStatus::NullPointer, "null argument");
        }
        let e = &(*e).0;
        let text = match read_str(poly) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let run = || -> Result<LaurentPoly, DahaError> {
            let f = LaurentPoly::parse(text, e.strands())?;
            apply_expr(&Expr::from_element(e), build_rep(e.strands())?, &f)
        };
        match run() {
            Ok(img) => write_string(out, img.to_string()),
            Err(err) => fail(daha_status(&err), err.to_string()),
        }
    })
}

/// Runs a verification suite at rank `n` with default box, prime and
/// trials. Returns `ChecksFailed` with a valid report when checks fail.
///
/// # Safety
/// `suite` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_verify(suite: *const c_char, n: usize, seed: u64, out: *mut *mut TsReport) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "null out pointer");
        }
        let name = match read_str(suite) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let suite: Suite = match name.parse() {
            Ok(s) => s,
            Err(e) => return fail(TsStatus::InvalidArgument, VerifyError::to_string(&e)),
        };
        let cfg = VerifyConfig { suite, n, seed, ..VerifyConfig::default() };
        match verify::run(&cfg) {
            Ok(r) => {
                let passed = r.all_passed();
                *out = Box::into_raw(Box::new(TsReport(r)));
                if passed {
                    TsStatus::Ok
                } else {
                    fail(TsStatus::ChecksFailed, "some checks failed")
                }
            }
            Err(e) => fail(TsStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Number of checks and failures in a report.
///
/// # Safety
/// `r` must be a live handle; `total`, `failed` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ts_report_counts(r: *const TsReport, total: *mut usize, failed: *mut usize) -> TsStatus {
    if r.is_null() || total.is_null() || failed.is_null() {
        return fail(TsStatus::NullPointer, "null argument");
    }
    *total = (*r).0.summary.total;
    *failed = (*r).0.summary.failed;
    TsStatus::Ok
}

/// The report as JSON; free with [`ts_string_free`].
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_report_json(r: *const TsReport, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        if r.is_null() || out.is_null() {
            return fail(TsStatus::NullPointer, "null argument");
        }
        write_string(out, (*r).0.to_json())
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_report_free(r: *mut TsReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
