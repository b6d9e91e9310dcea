//! C interface to the `isotypic` library.
//!
//! Algebras live behind the opaque [`IsoHopf`] handle. Every fallible call
//! returns an [`IsoStatus`]; on anything but `ISO_STATUS_OK` a message is
//! available from [`iso_last_error_message`] on the same thread. Strings
//! returned through out-parameters are owned by the caller and must be
//! released with [`iso_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isotypic::cli::{build_example, emit_spec, exit_code_for_error, load_spec, run_command, Command, ExampleParams};
use isotypic::hopf::verify_axioms;
use isotypic::presentation::Example;
use isotypic::Error;

/// An algebra with its attached characters.
pub struct IsoHopf {
    inner: Example,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoStatus {
    Ok = 0,
    /// A mathematical check failed; the report says which.
    CheckFailed = 1,
    /// Malformed input: bad JSON, unknown name, out-of-range index.
    Input = 2,
    NullPointer = 3,
    /// A panic or an unexpected library error.
    Internal = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', "\\0");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("interior nul removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> IsoStatus {
    set_error(e.to_string());
    match exit_code_for_error(e) {
        1 => IsoStatus::CheckFailed,
        _ => IsoStatus::Input,
    }
}

/// Runs `f` with panics turned into `Internal`.
fn guard(f: impl FnOnce() -> IsoStatus) -> IsoStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            IsoStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, IsoStatus> {
    if s.is_null() {
        set_error(format!("{what} is null"));
        return Err(IsoStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        IsoStatus::Input
    })
}

unsafe fn read_opt_str<'a>(s: *const c_char, what: &str) -> Result<Option<&'a str>, IsoStatus> {
    if s.is_null() {
        Ok(None)
    } else {
        read_str(s, what).map(Some)
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> IsoStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            IsoStatus::Ok
        }
        Err(_) => {
            set_error("output contains an interior nul byte");
            IsoStatus::Internal
        }
    }
}

unsafe fn write_handle(out: *mut *mut IsoHopf, r: Result<Example, Error>) -> IsoStatus {
    match r {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(IsoHopf { inner }));
            IsoStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            set_error(concat!(stringify!($p), " is null"));
            return IsoStatus::NullPointer;
        })+
    };
}

/// Parses a JSON algebra spec. Axioms are not checked; see
/// [`iso_verify_axioms`].
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn iso_load_spec_json(json: *const c_char, out: *mut *mut IsoHopf) -> IsoStatus {
    guard(|| {
        non_null!(out);
        *out = ptr::null_mut();
        let text = try_status!(read_str(json, "json"));
        write_handle(out, load_spec(text))
    })
}

/// Builds a named example. `mu` and `lambda` may be null for defaults;
/// `lambda` is `"a,b,c"`.
///
/// # Safety
/// String arguments must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_example(
    name: *const c_char,
    mu: *const c_char,
    lambda: *const c_char,
    symbolic: bool,
    out: *mut *mut IsoHopf,
) -> IsoStatus {
    guard(|| {
        non_null!(out);
        *out = ptr::null_mut();
        let name = try_status!(read_str(name, "name"));
        let params = ExampleParams {
            mu: try_status!(read_opt_str(mu, "mu")).map(str::to_owned),
            lambda: try_status!(read_opt_str(lambda, "lambda")).map(str::to_owned),
            symbolic,
        };
        write_handle(out, build_example(name, &params))
    })
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn iso_dim(h: *const IsoHopf) -> usize {
    h.as_ref().map_or(0, |h| h.inner.hopf.dim())
}

/// `ISO_STATUS_OK` if all eight axioms hold, `ISO_STATUS_CHECK_FAILED`
/// otherwise with the first witness as the error message.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn iso_verify_axioms(h: *const IsoHopf) -> IsoStatus {
    guard(|| {
        non_null!(h);
        match verify_axioms(&(*h).inner.hopf).into_iter().find(|c| !c.passed) {
            None => IsoStatus::Ok,
            Some(c) => {
                set_error(format!("{}: {}", c.name, c.witness.unwrap_or_default()));
                IsoStatus::CheckFailed
            }
        }
    })
}

/// Runs `verify`, `radical`, `chevalley`, `idempotents`, `hecke` or
/// `theorem310` and writes the JSON report to `report_out` (also on
/// `ISO_STATUS_CHECK_FAILED`).
///
/// # Safety
/// `h` must be a live handle, `command` nul-terminated, `report_out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn iso_run_command(
    h: *const IsoHopf,
    command: *const c_char,
    certify: bool,
    report_out: *mut *mut c_char,
) -> IsoStatus {
    guard(|| {
        non_null!(h, report_out);
        *report_out = ptr::null_mut();
        let name = try_status!(read_str(command, "command"));
        let cmd = match Command::parse(name, certify) {
            Ok(c) => c,
            Err(e) => return status_of(&e),
        };
        let argv = vec![name.to_owned()];
        match run_command(&(*h).inner, cmd, &argv) {
            Ok(report) => {
                let passed = report.passed;
                let written = write_string(report_out, report.to_json());
                if written != IsoStatus::Ok {
                    return written;
                }
                if passed {
                    IsoStatus::Ok
                } else {
                    set_error(format!("{name}: a check failed"));
                    IsoStatus::CheckFailed
                }
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Serializes the algebra as a JSON spec.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn iso_emit_spec_json(h: *const IsoHopf, out: *mut *mut c_char) -> IsoStatus {
    guard(|| {
        non_null!(h, out);
        *out = ptr::null_mut();
        write_string(out, emit_spec(&(*h).inner))
    })
}

/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn iso_free(h: *mut IsoHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn iso_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn iso_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
