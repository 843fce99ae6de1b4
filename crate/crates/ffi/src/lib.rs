//! C ABI over `latflag`.
//!
//! Posets cross the boundary as opaque `LatflagPoset` handles created by one of
//! the constructors and released with `latflag_poset_free`. Every function
//! returns a `LatflagStatus`; on failure `latflag_last_error_message` gives
//! a description valid until the next call on the same thread. Coefficients
//! are passed as `uint64_t prime`, where `0` selects the rationals.
//! Strings returned through `char **` are owned by the caller and released
//! with `latflag_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use latflag::flag::{flag_f, flag_h, subset_count, FlagVector};
use latflag::topology::{is_cohen_macaulay, mobius, top_betti};
use latflag::verifier::{run_check, Check, Verdict};
use latflag::{catalog, format, CoefficientSpec, Error, Poset};
use num_traits::ToPrimitive;

/// Opaque poset handle.
pub struct LatflagPoset(Poset);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatflagStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidPoset = 4,
    InvalidArgument = 5,
    Precondition = 6,
    Overflow = 7,
    BufferTooSmall = 8,
    Io = 9,
    Budget = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatflagVerdict {
    Pass = 0,
    Fail = 1,
    NotApplicable = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(LatflagStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => LatflagStatus::Parse,
            Error::InvalidPoset(_) => LatflagStatus::InvalidPoset,
            Error::NotComparable { .. } | Error::Precondition(_) => LatflagStatus::Precondition,
            Error::UnknownElement(_) | Error::InvalidArgument(_) => LatflagStatus::InvalidArgument,
            Error::BudgetExceeded { .. } => LatflagStatus::Budget,
            Error::Io(_) => LatflagStatus::Io,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LatflagStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LatflagStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LatflagStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(LatflagStatus::NullPointer, "null pointer argument".into())
}

unsafe fn utf8<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(LatflagStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn poset<'a>(p: *const LatflagPoset) -> Result<&'a Poset, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn coefficients(prime: u64) -> Result<CoefficientSpec, Failure> {
    if prime == 0 {
        Ok(CoefficientSpec::Rationals)
    } else {
        Ok(CoefficientSpec::prime_field(prime)?)
    }
}

unsafe fn emit(out: *mut *mut LatflagPoset, result: latflag::Result<Poset>) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(ptr::null_mut());
    let p = result?;
    out.write(Box::into_raw(Box::new(LatflagPoset(p))));
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .unwrap_or_default()
        .into_raw()
}

/// Parses the text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_parse(
    text: *const c_char,
    out: *mut *mut LatflagPoset,
) -> LatflagStatus {
    guard(|| emit(out, format::parse(utf8(text)?)))
}

/// Reads a poset file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_read_file(
    path: *const c_char,
    out: *mut *mut LatflagPoset,
) -> LatflagStatus {
    guard(|| emit(out, format::read_file(Path::new(utf8(path)?))))
}

/// Builds a catalog poset: `B<n>`, `Pi<n>`, `chain<n>`, `butterfly`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_catalog(
    name: *const c_char,
    out: *mut *mut LatflagPoset,
) -> LatflagStatus {
    guard(|| emit(out, catalog::by_name(utf8(name)?)))
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_free(p: *mut LatflagPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_element_count(
    p: *const LatflagPoset,
    out: *mut usize,
) -> LatflagStatus {
    guard(|| write(out, poset(p)?.element_count()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_rank(
    p: *const LatflagPoset,
    out: *mut usize,
) -> LatflagStatus {
    guard(|| write(out, poset(p)?.rank()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_is_lattice(
    p: *const LatflagPoset,
    out: *mut bool,
) -> LatflagStatus {
    guard(|| write(out, poset(p)?.is_lattice()))
}

/// Serializes to the text format.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_poset_to_text(
    p: *const LatflagPoset,
    out: *mut *mut c_char,
) -> LatflagStatus {
    guard(|| write(out, into_c_string(format::to_text(poset(p)?))))
}

/// Number of entries of a flag vector of `p`, `2^(rank-1)` (1 for rank 0).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_flag_len(
    p: *const LatflagPoset,
    out: *mut usize,
) -> LatflagStatus {
    guard(|| write(out, subset_count(poset(p)?.rank())))
}

unsafe fn copy_flags(v: &FlagVector, out: *mut i64, len: usize) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    let values = v.values();
    if len < values.len() {
        return Err(Failure(
            LatflagStatus::BufferTooSmall,
            format!("need {} entries, got {len}", values.len()),
        ));
    }
    for (i, x) in values.iter().enumerate() {
        let x = x
            .to_i64()
            .ok_or_else(|| Failure(LatflagStatus::Overflow, format!("entry {i} exceeds int64")))?;
        out.add(i).write(x);
    }
    Ok(())
}

/// Writes the flag f-vector, indexed by rank-subset bitmask (bit `i-1` for
/// rank `i`), into `out[0..len]`.
///
/// # Safety
/// `p` must be a live handle; `out` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn latflag_flag_f(
    p: *const LatflagPoset,
    out: *mut i64,
    len: usize,
) -> LatflagStatus {
    guard(|| copy_flags(&flag_f(poset(p)?), out, len))
}

/// Writes the flag h-vector; layout as for `latflag_flag_f`.
///
/// # Safety
/// `p` must be a live handle; `out` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn latflag_flag_h(
    p: *const LatflagPoset,
    out: *mut i64,
    len: usize,
) -> LatflagStatus {
    guard(|| copy_flags(&flag_h(&flag_f(poset(p)?))?, out, len))
}

/// Möbius function between bottom and top.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_mobius(p: *const LatflagPoset, out: *mut i64) -> LatflagStatus {
    guard(|| {
        let p = poset(p)?;
        let mu = mobius(p, p.bottom(), p.top())?;
        let mu = mu
            .to_i64()
            .ok_or_else(|| Failure(LatflagStatus::Overflow, "mobius exceeds int64".into()))?;
        write(out, mu)
    })
}

/// Top reduced Betti number of the proper part.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_top_betti(
    p: *const LatflagPoset,
    prime: u64,
    out: *mut usize,
) -> LatflagStatus {
    guard(|| write(out, top_betti(poset(p)?, coefficients(prime)?)))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_is_cohen_macaulay(
    p: *const LatflagPoset,
    prime: u64,
    out: *mut bool,
) -> LatflagStatus {
    guard(|| write(out, is_cohen_macaulay(poset(p)?, coefficients(prime)?)))
}

/// Runs one named check (`theorem`, `proposition`, `ideal-bound`, ...). When
/// `witness` is non-null it receives the witness, reason or detail string.
///
/// # Safety
/// `p` must be a live handle; `check` a NUL-terminated string; `verdict`
/// writable; `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn latflag_verify(
    p: *const LatflagPoset,
    check: *const c_char,
    prime: u64,
    seed: u64,
    verdict: *mut LatflagVerdict,
    witness: *mut *mut c_char,
) -> LatflagStatus {
    guard(|| {
        let p = poset(p)?;
        let check: Check = utf8(check)?.parse()?;
        let report = run_check(check, p, coefficients(prime)?, seed);
        let v = match report.verdict {
            Verdict::Pass => LatflagVerdict::Pass,
            Verdict::Fail => LatflagVerdict::Fail,
            Verdict::NotApplicable => LatflagVerdict::NotApplicable,
        };
        write(verdict, v)?;
        if !witness.is_null() {
            witness.write(into_c_string(report.witness_column().to_string()));
        }
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latflag_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread, or an empty string.
#[no_mangle]
pub extern "C" fn latflag_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
