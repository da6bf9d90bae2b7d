//! C ABI over `coalg`. Coalgebras are opaque handles owned by the caller
//! and released with `coalg_free`; every fallible call returns a
//! `CoalgStatus` and leaves a message for `coalg_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use coalg::cli::{ambient_words, axiom_report, DEFAULT_CAP};
use coalg::coalgebra::{builtin, parse_coalgebra, Coalgebra};
use coalg::complexes::{build, ComplexKind};
use coalg::lqt::lqt_check;
use coalg::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoalgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownBuiltin = 4,
    AxiomFailure = 5,
    InvalidArgument = 6,
    ResourceGuard = 7,
    BufferTooSmall = 8,
    Internal = 9,
}

/// Opaque coalgebra handle.
pub struct CoalgCoalgebra {
    inner: Coalgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> CoalgStatus {
    match e {
        Error::Parse(_) | Error::InvalidRational(_) => CoalgStatus::Parse,
        Error::UnknownBuiltin(_) => CoalgStatus::UnknownBuiltin,
        Error::AxiomFailure { .. } => CoalgStatus::AxiomFailure,
        Error::ResourceGuard { .. } => CoalgStatus::ResourceGuard,
        Error::NotSquareZero { .. } | Error::NotChainMap { .. } | Error::NotPreserved { .. } => {
            CoalgStatus::Internal
        }
        Error::DimensionMismatch(_) | Error::InvalidArgument(_) => CoalgStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> CoalgStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

/// Clears the last error, runs `f`, and converts panics into `Internal`.
fn guarded(f: impl FnOnce() -> CoalgStatus) -> CoalgStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            CoalgStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, CoalgStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(CoalgStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        CoalgStatus::InvalidUtf8
    })
}

unsafe fn store(out: *mut *mut CoalgCoalgebra, c: Coalgebra) -> CoalgStatus {
    *out = Box::into_raw(Box::new(CoalgCoalgebra { inner: c }));
    CoalgStatus::Ok
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument");
            return CoalgStatus::NullPointer;
        }
    };
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn coalg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn coalg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Built-in coalgebra: `trivial`, `group:<n>`, `matrix:<n>`,
/// `matrix:<n>:<spec>`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coalg_builtin(spec: *const c_char, out: *mut *mut CoalgCoalgebra) -> CoalgStatus {
    guarded(|| {
        non_null!(out);
        let spec = match read_str(spec) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match builtin(spec) {
            Ok(c) => store(out, c),
            Err(e) => fail(e),
        }
    })
}

/// Coalgebra from the JSON file format; axioms are not checked.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coalg_from_json(text: *const c_char, out: *mut *mut CoalgCoalgebra) -> CoalgStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match parse_coalgebra(text) {
            Ok(c) => store(out, c),
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `c` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn coalg_free(c: *mut CoalgCoalgebra) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coalg_dim(c: *const CoalgCoalgebra, out: *mut usize) -> CoalgStatus {
    guarded(|| {
        non_null!(c, out);
        *out = (*c).inner.dim();
        CoalgStatus::Ok
    })
}

/// Coassociativity, counit laws and the `Lie(C)` axioms. `*passed` is
/// set even when an axiom fails; the status is `Ok` either way.
///
/// # Safety
/// `c` must be a live handle and `passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coalg_check(c: *const CoalgCoalgebra, passed: *mut bool) -> CoalgStatus {
    guarded(|| {
        non_null!(c, passed);
        let r = axiom_report(&(*c).inner);
        *passed = r.passed();
        if let Some(f) = r.first_failure() {
            set_error(f.to_string());
        }
        CoalgStatus::Ok
    })
}

/// Homology of one complex (`bar`, `hochschild`, `ce`, `ce-sym`,
/// `ce-red`, `cyclic`) in degrees from `*first_degree` through
/// `max_degree`. `*len` always receives the number of values; when it
/// exceeds `capacity` nothing is written to `dims` and the status is
/// `BufferTooSmall`.
///
/// # Safety
/// Pointers must be valid; `dims` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn coalg_homology(
    c: *const CoalgCoalgebra,
    kind: *const c_char,
    max_degree: usize,
    first_degree: *mut usize,
    dims: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> CoalgStatus {
    guarded(|| {
        non_null!(c, first_degree, len);
        let kind: ComplexKind = match read_str(kind).map(str::parse) {
            Ok(Ok(k)) => k,
            Ok(Err(e)) => return fail(e),
            Err(s) => return s,
        };
        if max_degree == 0 {
            return fail(Error::InvalidArgument("degree bound must be at least 1".into()));
        }
        let c = &(*c).inner;
        let words = ambient_words(c.dim(), max_degree);
        if words > DEFAULT_CAP {
            return fail(Error::ResourceGuard { words, cap: DEFAULT_CAP });
        }
        let h = match build(kind, c, max_degree + 1) {
            Ok(x) => x.homology(),
            Err(e) => return fail(e),
        };
        *first_degree = h.first_degree;
        *len = h.dims.len();
        if h.dims.len() > capacity || (dims.is_null() && !h.dims.is_empty()) {
            set_error(format!("{} values needed", h.dims.len()));
            return CoalgStatus::BufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(h.dims.as_ptr(), dims, h.dims.len());
        CoalgStatus::Ok
    })
}

/// Compares `H^Lie(gl_n^c(C))` with `Λ* HC(C)[+1]` in degrees
/// `0..=max_degree`; `*stable_agreement` is whether they agree in every
/// degree `m ≤ n`.
///
/// # Safety
/// `c` must be a live handle and `stable_agreement` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coalg_lqt(
    c: *const CoalgCoalgebra,
    n: usize,
    max_degree: usize,
    stable_agreement: *mut bool,
) -> CoalgStatus {
    guarded(|| {
        non_null!(c, stable_agreement);
        let c = &(*c).inner;
        let words = ambient_words(n.saturating_mul(n).saturating_mul(c.dim()), max_degree);
        if words > DEFAULT_CAP {
            return fail(Error::ResourceGuard { words, cap: DEFAULT_CAP });
        }
        match lqt_check(c, n, max_degree) {
            Ok(r) => {
                *stable_agreement = r.stable_agreement();
                CoalgStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::Parse("x".into())), CoalgStatus::Parse);
        assert_eq!(
            status_of(&Error::ResourceGuard { words: 2, cap: 1 }),
            CoalgStatus::ResourceGuard
        );
    }

    #[test]
    fn null_arguments_are_refused() {
        unsafe {
            assert_eq!(coalg_builtin(ptr::null(), ptr::null_mut()), CoalgStatus::NullPointer);
            let mut d = 0;
            assert_eq!(coalg_dim(ptr::null(), &mut d), CoalgStatus::NullPointer);
            coalg_free(ptr::null_mut());
        }
    }
}
