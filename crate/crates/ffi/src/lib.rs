//! C ABI for the counting and conversion engine.
//!
//! Handles are opaque; every fallible call returns a [`BurgeStatus`] and
//! writes its result through an out-pointer. The message for the most recent
//! failure on the calling thread is available from [`burge_last_error`].
//! Strings returned by the library must be released with
//! [`burge_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use burge_core::convert::{Family, Object};
use burge_core::lattice::path_counts;
use burge_core::multipartition::enumerate_multipartitions;
use burge_core::partition::restricted_counts;
use burge_core::qseries::andrews_sum;
use burge_core::{BoundaryConfig, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BurgeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidConfig = 2,
    InvalidInput = 3,
    Overflow = 4,
    Internal = 5,
}

/// Object families accepted by the count and convert calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BurgeFamily {
    Partition = 0,
    Multipartition = 1,
    Path = 2,
}

impl From<BurgeFamily> for Family {
    fn from(f: BurgeFamily) -> Self {
        match f {
            BurgeFamily::Partition => Family::Partition,
            BurgeFamily::Multipartition => Family::Multipartition,
            BurgeFamily::Path => Family::Path,
        }
    }
}

/// Opaque boundary configuration `(k, i)`.
pub struct BurgeConfig {
    inner: BoundaryConfig,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> BurgeStatus {
    match e {
        Error::InvalidConfig { .. } => BurgeStatus::InvalidConfig,
        Error::Overflow => BurgeStatus::Overflow,
        _ => BurgeStatus::InvalidInput,
    }
}

/// Run `f`, record any error or panic, and map it to a status.
fn guard(f: impl FnOnce() -> Result<(), (BurgeStatus, String)>) -> BurgeStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BurgeStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            BurgeStatus::Internal
        }
    }
}

fn fail(e: Error) -> (BurgeStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (BurgeStatus, String) {
    (BurgeStatus::NullPointer, format!("{what} is null"))
}

/// Create a configuration. On success `*out` owns a handle that must be
/// released with [`burge_config_free`].
///
/// # Safety
/// `out` must be null or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn burge_config_new(k: i64, i: i64, out: *mut *mut BurgeConfig) -> BurgeStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = BoundaryConfig::new(k, i).map_err(fail)?;
        *out = Box::into_raw(Box::new(BurgeConfig { inner }));
        Ok(())
    })
}

/// Release a handle from [`burge_config_new`]. Null is ignored.
///
/// # Safety
/// `cfg` must be null or a live handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn burge_config_free(cfg: *mut BurgeConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// `k` of a live handle, or 0 for null.
///
/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn burge_config_k(cfg: *const BurgeConfig) -> u32 {
    cfg.as_ref().map_or(0, |c| c.inner.k() as u32)
}

/// `i` of a live handle, or 0 for null.
///
/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn burge_config_i(cfg: *const BurgeConfig) -> u32 {
    cfg.as_ref().map_or(0, |c| c.inner.i() as u32)
}

/// Number of objects of `family` with weight `n`, restricted to length /
/// charge `m` when `m >= 0`.
///
/// # Safety
/// `cfg` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn burge_count(
    cfg: *const BurgeConfig,
    family: BurgeFamily,
    n: u64,
    m: i64,
    out: *mut u64,
) -> BurgeStatus {
    guard(|| {
        let cfg = cfg.as_ref().ok_or_else(|| null("cfg"))?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let by_m = |counts: Vec<u64>| -> u64 {
            match usize::try_from(m) {
                Ok(m) => counts.get(m).copied().unwrap_or(0),
                Err(_) => counts.iter().sum(),
            }
        };
        *out = match family {
            BurgeFamily::Partition => by_m(restricted_counts(cfg, n)),
            BurgeFamily::Path => by_m(path_counts(cfg, n)),
            BurgeFamily::Multipartition => enumerate_multipartitions(cfg, n, usize::try_from(m).ok()).len() as u64,
        };
        Ok(())
    })
}

/// Coefficient of `z^m q^n` in the closed-form sum.
///
/// # Safety
/// `cfg` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn burge_series_coefficient(
    cfg: *const BurgeConfig,
    n: usize,
    m: usize,
    out: *mut i64,
) -> BurgeStatus {
    guard(|| {
        let cfg = cfg.as_ref().ok_or_else(|| null("cfg"))?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = andrews_sum(cfg, n, m).map_err(fail)?.get(m, n);
        Ok(())
    })
}

/// Convert the JSON object `input` of family `from` into family `to`. On
/// success `*out` holds a JSON string to release with [`burge_string_free`].
///
/// # Safety
/// `cfg` must be a live handle, `input` a NUL-terminated string and `out`
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn burge_convert(
    cfg: *const BurgeConfig,
    from: BurgeFamily,
    to: BurgeFamily,
    input: *const c_char,
    out: *mut *mut c_char,
) -> BurgeStatus {
    guard(|| {
        let cfg = cfg.as_ref().ok_or_else(|| null("cfg"))?.inner;
        if input.is_null() {
            return Err(null("input"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(input)
            .to_str()
            .map_err(|e| (BurgeStatus::InvalidInput, format!("input is not UTF-8: {e}")))?;
        let json = Object::parse(cfg, from.into(), text)
            .and_then(|o| o.convert(cfg, to.into(), None))
            .map_err(fail)?
            .to_json();
        *out = CString::new(json).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// Release a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn burge_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn burge_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
