//! C interface: run a census, inspect records, read and write census files.
//!
//! Every function returns a [`G5Status`]; on failure a message is available
//! from [`g5_last_error`] on the same thread. Handles are owned by the caller
//! and released with the matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use g5census::cli::census::{read_records, run_census, write_records, CensusConfig, CensusOutcome};
use g5census::cli::{CurveRecord, Stratum};
use g5census::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G5Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Io = 4,
    CorruptCheckpoint = 5,
    Invariant = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G5Stratum {
    Hyperelliptic = 0,
    Trigonal = 1,
    CompleteIntersection = 2,
}

impl From<G5Stratum> for Stratum {
    fn from(s: G5Stratum) -> Self {
        match s {
            G5Stratum::Hyperelliptic => Stratum::Hyp,
            G5Stratum::Trigonal => Stratum::Trig,
            G5Stratum::CompleteIntersection => Stratum::Ci,
        }
    }
}

impl From<Stratum> for G5Stratum {
    fn from(s: Stratum) -> Self {
        match s {
            Stratum::Hyp => G5Stratum::Hyperelliptic,
            Stratum::Trig => G5Stratum::Trigonal,
            Stratum::Ci => G5Stratum::CompleteIntersection,
        }
    }
}

/// A list of curve records.
pub struct G5Census {
    records: Vec<CurveRecord>,
}

/// One curve record.
pub struct G5Record {
    record: CurveRecord,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> G5Status {
    match e {
        Error::Parse(_) => G5Status::Parse,
        Error::Io(_) | Error::Json(_) => G5Status::Io,
        Error::CorruptCheckpoint { .. } => G5Status::CorruptCheckpoint,
        Error::Invariant(_) | Error::WeilBound(_) | Error::NonIntegral(_) => G5Status::Invariant,
        _ => G5Status::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (G5Status, String)>) -> G5Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => G5Status::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            G5Status::Panic
        }
    }
}

fn lib_err(e: Error) -> (G5Status, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (G5Status, String) {
    (G5Status::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (G5Status, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (G5Status::InvalidArgument, format!("{what} is not UTF-8")))
}

/// Copies `s` into `buf` (NUL-terminated, truncated to `cap`) and returns
/// the full length excluding the terminator.
unsafe fn copy_out(s: &str, buf: *mut c_char, cap: usize) -> usize {
    if !buf.is_null() && cap > 0 {
        let n = s.len().min(cap - 1);
        ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), n);
        *buf.add(n) = 0;
    }
    s.len()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn g5_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Enumerates one stratum. `genus` is used for the hyperelliptic stratum
/// only; `threads = 0` uses all cores.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn g5_census_run(
    stratum: G5Stratum,
    genus: u32,
    threads: u32,
    out: *mut *mut G5Census,
) -> G5Status {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let cfg = CensusConfig {
            genus,
            threads: (threads > 0).then_some(threads as usize),
            ..CensusConfig::new(stratum.into())
        };
        match run_census(&cfg).map_err(lib_err)? {
            CensusOutcome::Complete(records) => {
                *out = Box::into_raw(Box::new(G5Census { records }));
                Ok(())
            }
            CensusOutcome::Interrupted { .. } => Err((G5Status::Invariant, "census stopped early".into())),
        }
    })
}

/// Reads a census file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn g5_census_load(path: *const c_char, out: *mut *mut G5Census) -> G5Status {
    guard(|| {
        let path = str_arg(path, "path")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let records = read_records(&PathBuf::from(path)).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(G5Census { records }));
        Ok(())
    })
}

/// Writes a census file, one record per line.
///
/// # Safety
/// `census` must come from this library; `path` must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn g5_census_write(census: *const G5Census, path: *const c_char) -> G5Status {
    guard(|| {
        let c = census.as_ref().ok_or_else(|| null("census"))?;
        let path = str_arg(path, "path")?;
        write_records(&PathBuf::from(path), &c.records).map_err(lib_err)
    })
}

/// Number of records, or 0 for a null handle.
///
/// # Safety
/// `census` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn g5_census_len(census: *const G5Census) -> usize {
    census.as_ref().map_or(0, |c| c.records.len())
}

/// Sum of `1/|Aut|` over the records as a reduced fraction.
///
/// # Safety
/// `census` must come from this library; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g5_census_mass(census: *const G5Census, num: *mut i64, den: *mut i64) -> G5Status {
    guard(|| {
        let c = census.as_ref().ok_or_else(|| null("census"))?;
        if num.is_null() || den.is_null() {
            return Err(null("num or den"));
        }
        let m: num_rational::Ratio<i64> = c.records.iter().map(|r| num_rational::Ratio::new(1, r.aut as i64)).sum();
        *num = *m.numer();
        *den = *m.denom();
        Ok(())
    })
}

/// Copies record `index` into a new handle.
///
/// # Safety
/// `census` must come from this library and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn g5_census_get(census: *const G5Census, index: usize, out: *mut *mut G5Record) -> G5Status {
    guard(|| {
        let c = census.as_ref().ok_or_else(|| null("census"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let record = c
            .records
            .get(index)
            .ok_or_else(|| (G5Status::InvalidArgument, format!("index {index} out of range")))?
            .clone();
        *out = Box::into_raw(Box::new(G5Record { record }));
        Ok(())
    })
}

/// # Safety
/// `census` must be null or come from this library, and not be used again.
#[no_mangle]
pub unsafe extern "C" fn g5_census_free(census: *mut G5Census) {
    if !census.is_null() {
        drop(Box::from_raw(census));
    }
}

/// Parses one census line.
///
/// # Safety
/// `line` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn g5_record_parse(line: *const c_char, out: *mut *mut G5Record) -> G5Status {
    guard(|| {
        let line = str_arg(line, "line")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let record: CurveRecord = line.parse().map_err(lib_err)?;
        *out = Box::into_raw(Box::new(G5Record { record }));
        Ok(())
    })
}

/// Recomputes the zeta data from the model and checks it.
///
/// # Safety
/// `record` must come from this library.
#[no_mangle]
pub unsafe extern "C" fn g5_record_verify(record: *const G5Record) -> G5Status {
    guard(|| record.as_ref().ok_or_else(|| null("record"))?.record.verify().map_err(lib_err))
}

/// Writes the record's line into `buf` and returns its full length; call
/// with `cap = 0` to size the buffer.
///
/// # Safety
/// `record` must come from this library; `buf` must hold `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn g5_record_line(record: *const G5Record, buf: *mut c_char, cap: usize) -> usize {
    record.as_ref().map_or(0, |r| copy_out(&r.record.to_string(), buf, cap))
}

/// # Safety
/// `record` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g5_record_stratum(record: *const G5Record, out: *mut G5Stratum) -> G5Status {
    guard(|| {
        let r = record.as_ref().ok_or_else(|| null("record"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = r.record.stratum().into();
        Ok(())
    })
}

/// Order of the automorphism group, or 0 for a null handle.
///
/// # Safety
/// `record` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn g5_record_aut(record: *const G5Record) -> u64 {
    record.as_ref().map_or(0, |r| r.record.aut)
}

/// Copies `N_1..N_g` into `out` (at most `cap` values) and returns `g`.
///
/// # Safety
/// `record` must come from this library; `out` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn g5_record_counts(record: *const G5Record, out: *mut u64, cap: usize) -> usize {
    let Some(r) = record.as_ref() else { return 0 };
    let counts = &r.record.counts.0;
    if !out.is_null() {
        ptr::copy_nonoverlapping(counts.as_ptr(), out, counts.len().min(cap));
    }
    counts.len()
}

/// Copies the L-polynomial coefficients `c_0..c_{2g}` and returns `2g + 1`.
///
/// # Safety
/// `record` must come from this library; `out` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn g5_record_lpoly(record: *const G5Record, out: *mut i64, cap: usize) -> usize {
    let Some(r) = record.as_ref() else { return 0 };
    let c = r.record.lpoly.coeffs();
    if !out.is_null() {
        ptr::copy_nonoverlapping(c.as_ptr(), out, c.len().min(cap));
    }
    c.len()
}

/// # Safety
/// `record` must be null or come from this library, and not be used again.
#[no_mangle]
pub unsafe extern "C" fn g5_record_free(record: *mut G5Record) {
    if !record.is_null() {
        drop(Box::from_raw(record));
    }
}
