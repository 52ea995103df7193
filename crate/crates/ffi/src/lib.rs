//! C interface to the analyzer.
//!
//! Every function returns an [`FsysStatus`] and writes its result through an
//! out-pointer. On failure `fsys_last_error` describes what went wrong on the
//! calling thread. Strings handed out by the library must be released with
//! `fsys_string_free`, systems with `fsys_system_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fsystems::conglomerate::{enumerate, SetKind};
use fsystems::format::{parse, serialize};
use fsystems::generate::GeneratorSpec;
use fsystems::grounded::{classify_groundedness, Groundedness};
use fsystems::labelling::is_paradoxical;
use fsystems::report::{analyze, emit_report, AnalysisOptions};
use fsystems::{Error, FSystem, Limits};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsysStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Ceiling = 4,
    InvalidArgument = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsysGroundedness {
    Grounded = 0,
    RelativelyGrounded = 1,
    Ungrounded = 2,
}

/// Opaque handle to a parsed or generated system.
pub struct FsysSystem {
    inner: FSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn fail(status: FsysStatus, message: &str) -> FsysStatus {
    set_error(message);
    status
}

fn from_error(e: Error) -> FsysStatus {
    let status = match e {
        Error::Parse { .. } | Error::InvalidSentenceId(_) | Error::UndeclaredEndpoint { .. } => FsysStatus::Parse,
        Error::CeilingExceeded { .. } => FsysStatus::Ceiling,
        _ => FsysStatus::InvalidArgument,
    };
    fail(status, &e.to_string())
}

/// Runs `body` with panics turned into [`FsysStatus::Panic`].
fn guard(body: impl FnOnce() -> Result<(), FsysStatus>) -> FsysStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            FsysStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => fail(FsysStatus::Panic, "internal panic"),
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, FsysStatus> {
    if s.is_null() {
        return Err(fail(FsysStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(FsysStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn system<'a>(sys: *const FsysSystem) -> Result<&'a FSystem, FsysStatus> {
    sys.as_ref()
        .map(|s| &s.inner)
        .ok_or_else(|| fail(FsysStatus::NullPointer, "null system handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), FsysStatus> {
    if out.is_null() {
        return Err(fail(FsysStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> Result<*mut c_char, FsysStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(FsysStatus::InvalidArgument, "output contains a NUL byte"))
}

fn handle(inner: FSystem) -> *mut FsysSystem {
    Box::into_raw(Box::new(FsysSystem { inner }))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn fsys_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses `.fsys` text into a new system.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_system_parse(text: *const c_char, out: *mut *mut FsysSystem) -> FsysStatus {
    guard(|| {
        let source = c_str(text)?;
        let sys = parse(source).map_err(from_error)?;
        write(out, handle(sys))
    })
}

/// Builds a named system. `n`, `p` and `seed` may be null when the generator
/// does not take them.
///
/// # Safety
/// `name` must be a NUL-terminated string; non-null parameter pointers must
/// be readable; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_system_generate(
    name: *const c_char,
    n: *const usize,
    p: *const f64,
    seed: *const u64,
    out: *mut *mut FsysSystem,
) -> FsysStatus {
    guard(|| {
        let name = c_str(name)?;
        let spec = GeneratorSpec::from_parts(name, n.as_ref().copied(), p.as_ref().copied(), seed.as_ref().copied())
            .map_err(from_error)?;
        let sys = spec.generate().map_err(from_error)?;
        write(out, handle(sys))
    })
}

/// Releases a system. Null is ignored.
///
/// # Safety
/// `sys` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn fsys_system_free(sys: *mut FsysSystem) {
    if !sys.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(sys))));
    }
}

/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_system_sentence_count(sys: *const FsysSystem, out: *mut usize) -> FsysStatus {
    guard(|| write(out, system(sys)?.len()))
}

/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_system_edge_count(sys: *const FsysSystem, out: *mut usize) -> FsysStatus {
    guard(|| write(out, system(sys)?.edge_count()))
}

/// Whether the system has no classical labelling.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_is_paradoxical(sys: *const FsysSystem, out: *mut bool) -> FsysStatus {
    guard(|| write(out, is_paradoxical(system(sys)?)))
}

/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_count_conglomerates(sys: *const FsysSystem, out: *mut usize) -> FsysStatus {
    guard(|| {
        let found = enumerate(system(sys)?, SetKind::Conglomerate, &Limits::default()).map_err(from_error)?;
        write(out, found.sets.len())
    })
}

/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_groundedness(sys: *const FsysSystem, out: *mut FsysGroundedness) -> FsysStatus {
    guard(|| {
        let report = classify_groundedness(system(sys)?, &Limits::default()).map_err(from_error)?;
        let verdict = match report.verdict {
            Groundedness::Grounded => FsysGroundedness::Grounded,
            Groundedness::RelativelyGrounded => FsysGroundedness::RelativelyGrounded,
            Groundedness::Ungrounded => FsysGroundedness::Ungrounded,
        };
        write(out, verdict)
    })
}

/// The full JSON report, as printed by `fsys analyze`. `jobs` = 0 uses every
/// core. Sections over a ceiling are written as skipped markers and the call
/// still succeeds.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_analyze_json(sys: *const FsysSystem, jobs: usize, out: *mut *mut c_char) -> FsysStatus {
    guard(|| {
        let options = AnalysisOptions { jobs: (jobs > 0).then_some(jobs), ..Default::default() };
        let report = analyze(system(sys)?, &options).map_err(from_error)?;
        write(out, owned_string(emit_report(&report))?)
    })
}

/// Canonical `.fsys` text.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fsys_serialize(sys: *const FsysSystem, out: *mut *mut c_char) -> FsysStatus {
    guard(|| write(out, owned_string(serialize(system(sys)?))?))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn fsys_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
