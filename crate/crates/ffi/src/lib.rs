//! C ABI over `motivic-power`.
//!
//! Rings, polynomials and series are opaque heap handles released with their
//! `*_free` function. Every fallible call returns an [`MpStatus`] and writes
//! its result through an out-pointer; on failure the out-pointer is left
//! untouched and [`mp_last_error`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use motivic_power::hilbert::{
    euler_specialization, global_series, hodge_deligne_series, kapranov_zeta, local_series, VarietyClass,
};
use motivic_power::json::{series_from_json, series_to_json};
use motivic_power::parse::{parse_expression, parse_series};
use motivic_power::power::pow;
use motivic_power::{Error, Polynomial, Ring, RingDescriptor, Series};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    RingMismatch = 4,
    NotUnital = 5,
    InvalidArgument = 6,
    Unsupported = 7,
    Json = 8,
    Panic = 9,
}

/// Opaque ring handle.
pub struct MpRing(Ring);

/// Opaque polynomial handle.
pub struct MpPolynomial(Polynomial);

/// Opaque truncated series handle.
pub struct MpSeries(Series);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(MpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } | Error::UnknownVariable(_) => MpStatus::Syntax,
            Error::RingMismatch { .. } | Error::OrderMismatch { .. } => MpStatus::RingMismatch,
            Error::NotUnital(_) => MpStatus::NotUnital,
            Error::MissingLocalData(_) | Error::ScaleBound(_) | Error::IncompatibleSubstitution(_) => {
                MpStatus::Unsupported
            }
            Error::Json(_) => MpStatus::Json,
            _ => MpStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', "\\0")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> MpStatus {
    let (status, message) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => (MpStatus::Ok, String::new()),
        Ok(Err(Failure(status, message))) => (status, message),
        Err(_) => (MpStatus::Panic, "internal panic".to_string()),
    };
    set_last_error(&message);
    status
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(MpStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(MpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(MpStatus::NullArgument, format!("{what} is null")))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(MpStatus::NullArgument, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(MpStatus::NullArgument, "output pointer is null".into()));
    }
    *out = CString::new(s).map_err(|_| Failure(MpStatus::InvalidArgument, "interior NUL".into()))?.into_raw();
    Ok(())
}

/// Message for the most recent failed call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn mp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must come from one of the `*_to_string`/`*_to_json` functions and not
/// have been freed.
#[no_mangle]
pub unsafe extern "C" fn mp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Ring over the comma-separated `vars` (empty for the integers).
///
/// # Safety
/// `vars` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_ring_new(vars: *const c_char, laurent: bool, out: *mut *mut MpRing) -> MpStatus {
    guard(|| {
        let vars = text(vars, "vars")?;
        let names: Vec<&str> = vars.split(',').map(str::trim).filter(|v| !v.is_empty()).collect();
        emit(out, MpRing(RingDescriptor::new(&names, laurent)?))
    })
}

/// # Safety
/// `ring` must come from [`mp_ring_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mp_ring_free(ring: *mut MpRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// # Safety
/// `ring` must be a live handle, `src` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_polynomial_parse(
    ring: *const MpRing,
    src: *const c_char,
    out: *mut *mut MpPolynomial,
) -> MpStatus {
    guard(|| {
        let ring = handle(ring, "ring")?;
        emit(out, MpPolynomial(parse_expression(text(src, "src")?, &ring.0)?))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mp_polynomial_free(p: *mut MpPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes a string to be released with [`mp_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_polynomial_to_string(p: *const MpPolynomial, out: *mut *mut c_char) -> MpStatus {
    guard(|| emit_string(out, handle(p, "polynomial")?.0.to_string()))
}

/// Parses a polynomial in the ring variables and `t`, truncated at `order`.
///
/// # Safety
/// `ring` must be a live handle, `src` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_series_parse(
    ring: *const MpRing,
    src: *const c_char,
    order: usize,
    out: *mut *mut MpSeries,
) -> MpStatus {
    guard(|| {
        let ring = handle(ring, "ring")?;
        emit(out, MpSeries(parse_series(text(src, "src")?, &ring.0, order)?))
    })
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mp_series_free(s: *mut MpSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Truncation order, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mp_series_order(s: *const MpSeries) -> usize {
    s.as_ref().map_or(0, |s| s.0.order())
}

/// Coefficient of `t^n`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_series_coefficient(s: *const MpSeries, n: usize, out: *mut *mut MpPolynomial) -> MpStatus {
    guard(|| {
        let s = &handle(s, "series")?.0;
        if n > s.order() {
            return Err(Failure(
                MpStatus::InvalidArgument,
                format!("t^{n} is beyond the truncation order {}", s.order()),
            ));
        }
        emit(out, MpPolynomial(s.coeff(n).clone()))
    })
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_series_to_string(s: *const MpSeries, out: *mut *mut c_char) -> MpStatus {
    guard(|| emit_string(out, handle(s, "series")?.0.to_string()))
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_series_to_json(s: *const MpSeries, out: *mut *mut c_char) -> MpStatus {
    guard(|| emit_string(out, series_to_json(&handle(s, "series")?.0)))
}

/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_series_from_json(json: *const c_char, out: *mut *mut MpSeries) -> MpStatus {
    guard(|| emit(out, MpSeries(series_from_json(text(json, "json")?)?)))
}

/// `A(t)^m` for a unital series.
///
/// # Safety
/// `series` and `exponent` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_pow(
    series: *const MpSeries,
    exponent: *const MpPolynomial,
    out: *mut *mut MpSeries,
) -> MpStatus {
    guard(|| {
        let a = &handle(series, "series")?.0;
        let m = &handle(exponent, "exponent")?.0;
        emit(out, MpSeries(pow(a, m)?))
    })
}

/// Kapranov zeta function `(1-t)^(-[X])`.
///
/// # Safety
/// `class` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_zeta(class: *const MpPolynomial, order: usize, out: *mut *mut MpSeries) -> MpStatus {
    guard(|| emit(out, MpSeries(kapranov_zeta(&handle(class, "class")?.0, order))))
}

/// Hilbert series of points on a smooth variety of class `class` (in a ring
/// with the variable `L`) and dimension `dimension`, from the built-in local
/// data.
///
/// # Safety
/// `class` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_hilbert(
    class: *const MpPolynomial,
    dimension: u32,
    order: usize,
    out: *mut *mut MpSeries,
) -> MpStatus {
    guard(|| {
        let x = VarietyClass::new(handle(class, "class")?.0.clone(), dimension)?;
        let local = local_series(dimension, order, None)?;
        emit(out, MpSeries(global_series(&x, &local, order)?))
    })
}

/// Hodge-Deligne specialization for a class `e_x` in a two-variable ring.
///
/// # Safety
/// `e_x` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_hilbert_hodge(
    e_x: *const MpPolynomial,
    dimension: u32,
    order: usize,
    out: *mut *mut MpSeries,
) -> MpStatus {
    guard(|| {
        let x = VarietyClass::new(handle(e_x, "e_x")?.0.clone(), dimension)?;
        let local = local_series(dimension, order, None)?;
        emit(out, MpSeries(hodge_deligne_series(&x, &local, order)?))
    })
}

/// Evaluates every coefficient at 1 for all variables.
///
/// # Safety
/// `series` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mp_euler_specialization(series: *const MpSeries, out: *mut *mut MpSeries) -> MpStatus {
    guard(|| emit(out, MpSeries(euler_specialization(&handle(series, "series")?.0)?)))
}
