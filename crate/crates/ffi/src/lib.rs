//! C ABI over the `sympcoh` engine.
//!
//! Objects are opaque handles created by `*_new`/`*_parse` functions and
//! released with the matching `*_free`. Every fallible call returns a
//! [`SympcohStatus`]; on failure a description is available from
//! [`sympcoh_last_error`] on the same thread. Strings returned by the library
//! must be released with [`sympcoh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sympcoh::acx::AlmostComplexStructure;
use sympcoh::catalog;
use sympcoh::cec::LieAlgebra;
use sympcoh::parser::{parse_form_of_degree, parse_matrix, parse_salamon};
use sympcoh::symplectic::{CohomologyReport, SymplecticStructure};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SympcohStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidAlgebra = 4,
    InvalidStructure = 5,
    OutOfRange = 6,
    UnknownName = 7,
    Panic = 8,
}

/// Lie algebra given by structure equations.
pub struct SympcohAlgebra(LieAlgebra);

/// Validated symplectic structure.
pub struct SympcohSymplectic(SymplecticStructure);

/// Validated almost-complex structure.
pub struct SympcohAcs(AlmostComplexStructure);

/// Cohomology table of a symplectic structure.
pub struct SympcohReport(CohomologyReport);

/// One degree of a cohomology report.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SympcohReportRow {
    pub k: usize,
    pub b: usize,
    pub h_dlambda: usize,
    pub h_bc: usize,
    pub h_a: usize,
    pub delta_tilde: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: SympcohStatus, message: impl Into<String>) -> SympcohStatus {
    set_error(message);
    status
}

/// Runs `body`, converting panics into [`SympcohStatus::Panic`].
fn guard(body: impl FnOnce() -> SympcohStatus) -> SympcohStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(SympcohStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SympcohStatus> {
    if p.is_null() {
        return Err(fail(SympcohStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(SympcohStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> SympcohStatus {
    *out = Box::into_raw(Box::new(value));
    SympcohStatus::Ok
}

macro_rules! check_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(SympcohStatus::NullPointer, concat!("null argument `", stringify!($p), "`"));
        })+
    };
}

/// Message of the last failed call on this thread, or NULL. Free with
/// [`sympcoh_string_free`].
#[no_mangle]
pub extern "C" fn sympcoh_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates Salamon structure equations such as `(0,0,0,23)`.
///
/// # Safety
/// `equations` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_algebra_parse(
    equations: *const c_char,
    out: *mut *mut SympcohAlgebra,
) -> SympcohStatus {
    guard(|| {
        check_null!(out);
        let text = match read_str(equations) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let g = match parse_salamon(text) {
            Ok(g) => g,
            Err(e) => return fail(SympcohStatus::Parse, e.to_string()),
        };
        if let Err(e) = g.validate() {
            return fail(SympcohStatus::InvalidAlgebra, e.to_string());
        }
        put(out, SympcohAlgebra(g))
    })
}

/// Algebra of a built-in catalog entry.
///
/// # Safety
/// `name` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_algebra_catalog(
    name: *const c_char,
    out: *mut *mut SympcohAlgebra,
) -> SympcohStatus {
    guard(|| {
        check_null!(out);
        let name = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match catalog::get(name) {
            Ok(e) => put(out, SympcohAlgebra(e.algebra)),
            Err(e) => fail(SympcohStatus::UnknownName, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_algebra_free(g: *mut SympcohAlgebra) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Dimension of the algebra; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_algebra_dim(g: *const SympcohAlgebra) -> usize {
    g.as_ref().map_or(0, |g| g.0.dim())
}

/// Invariant Betti number `b_k`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_algebra_betti(
    g: *const SympcohAlgebra,
    k: usize,
    out: *mut usize,
) -> SympcohStatus {
    guard(|| {
        check_null!(g, out);
        let g = &(*g).0;
        if k > g.dim() {
            return fail(
                SympcohStatus::OutOfRange,
                format!("degree {k} above {}", g.dim()),
            );
        }
        *out = g.betti().get(k);
        SympcohStatus::Ok
    })
}

/// Symplectic structure from a 2-form such as `12+34`.
///
/// # Safety
/// `g` must be a live handle, `omega` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_symplectic_new(
    g: *const SympcohAlgebra,
    omega: *const c_char,
    out: *mut *mut SympcohSymplectic,
) -> SympcohStatus {
    guard(|| {
        check_null!(g, out);
        let g = &(*g).0;
        let text = match read_str(omega) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let form = match parse_form_of_degree(text, g.dim(), 2) {
            Ok(f) => f,
            Err(e) => return fail(SympcohStatus::Parse, e.to_string()),
        };
        match SymplecticStructure::new(g.clone(), form) {
            Ok(s) => put(out, SympcohSymplectic(s)),
            Err(e) => fail(SympcohStatus::InvalidStructure, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_symplectic_free(s: *mut SympcohSymplectic) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Computes the full cohomology table.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_symplectic_report(
    s: *const SympcohSymplectic,
    out: *mut *mut SympcohReport,
) -> SympcohStatus {
    guard(|| {
        check_null!(s, out);
        match (*s).0.report() {
            Ok(r) => put(out, SympcohReport(r)),
            Err(e) => fail(SympcohStatus::InvalidStructure, e.to_string()),
        }
    })
}

/// # Safety
/// `r` must be NULL or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_report_free(r: *mut SympcohReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Number of rows, `dim + 1`; 0 for NULL.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_report_rows(r: *const SympcohReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.rows.len())
}

/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_report_row(
    r: *const SympcohReport,
    k: usize,
    out: *mut SympcohReportRow,
) -> SympcohStatus {
    guard(|| {
        check_null!(r, out);
        let report = &(*r).0;
        let Some(row) = report.rows.get(k) else {
            return fail(SympcohStatus::OutOfRange, format!("no row for degree {k}"));
        };
        *out = SympcohReportRow {
            k: row.k,
            b: row.b,
            h_dlambda: row.h_dlambda,
            h_bc: row.h_bc,
            h_a: row.h_a,
            delta_tilde: row.delta_tilde,
        };
        SympcohStatus::Ok
    })
}

/// Hard Lefschetz verdict.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_report_hlc(
    r: *const SympcohReport,
    out: *mut bool,
) -> SympcohStatus {
    guard(|| {
        check_null!(r, out);
        *out = (*r).0.hlc;
        SympcohStatus::Ok
    })
}

/// Almost-complex structure from a matrix such as `[[0,-1],[1,0]]`.
///
/// # Safety
/// `g` must be a live handle, `j` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_acs_new(
    g: *const SympcohAlgebra,
    j: *const c_char,
    out: *mut *mut SympcohAcs,
) -> SympcohStatus {
    guard(|| {
        check_null!(g, out);
        let text = match read_str(j) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let m = match parse_matrix(text) {
            Ok(m) => m,
            Err(e) => return fail(SympcohStatus::Parse, e.to_string()),
        };
        match AlmostComplexStructure::new((*g).0.clone(), m) {
            Ok(a) => put(out, SympcohAcs(a)),
            Err(e) => fail(SympcohStatus::InvalidStructure, e.to_string()),
        }
    })
}

/// # Safety
/// `a` must be NULL or a handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_acs_free(a: *mut SympcohAcs) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Dimension of `H_J^{(p,q),(q,p)}`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sympcoh_acs_h_j(
    a: *const SympcohAcs,
    p: usize,
    q: usize,
    out: *mut usize,
) -> SympcohStatus {
    guard(|| {
        check_null!(a, out);
        match (*a).0.h_j(p, q) {
            Ok(g) => {
                *out = g.dim;
                SympcohStatus::Ok
            }
            Err(e) => fail(SympcohStatus::OutOfRange, e.to_string()),
        }
    })
}
