//! C ABI for `polysum`.
//!
//! Objects are opaque heap handles released with their `_free` function.
//! Every fallible call returns a [`PolysumStatus`]; on failure the message
//! is available from [`polysum_last_error`]. Strings returned through out
//! pointers are owned by the caller and released with
//! [`polysum_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use polysum::batch::{check_polytope, check_sum, Identity};
use polysum::centered::is_perfectly_centered;
use polysum::exact::{parse_rat, rat_int};
use polysum::minkowski::{decompose_faces, is_relatively_general_position, perturb_to_general_position, MinkowskiSum, SumDecomposition};
use polysum::polytope::{polar_dual, Polytope, PolytopeFile};
use polysum::{PolysumError, VerifierReport};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolysumStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON or rational.
    Parse = 3,
    /// Well-formed input the operation does not accept.
    InvalidInput = 4,
    /// General position was not reached.
    PerturbationFailed = 5,
    BufferTooSmall = 6,
    /// A bug: an internal invariant failed or a panic was caught.
    Internal = 7,
}

/// A polytope with its face lattice.
pub struct PolysumPolytope(Polytope);

/// A Minkowski sum together with its face decomposition.
pub struct PolysumSum {
    sum: MinkowskiSum,
    decomposition: SumDecomposition,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(PolysumStatus, String);

impl From<PolysumError> for Failure {
    fn from(e: PolysumError) -> Self {
        let status = match &e {
            PolysumError::Json(_) | PolysumError::InvalidRational(_) => PolysumStatus::Parse,
            PolysumError::PerturbationExhausted { .. } => PolysumStatus::PerturbationFailed,
            PolysumError::Invariant(_) => PolysumStatus::Internal,
            _ => PolysumStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PolysumStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PolysumStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PolysumStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PolysumStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    // SAFETY: the caller passes a nul-terminated string.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| Failure(PolysumStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null out pointers must be valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nul removed").into_raw()
}

unsafe fn polytope_ref<'a>(p: *const PolysumPolytope) -> Result<&'a Polytope, Failure> {
    // SAFETY: non-null handles come from this library.
    unsafe { p.as_ref() }.map(|p| &p.0).ok_or_else(|| null("polytope"))
}

unsafe fn sum_ref<'a>(s: *const PolysumSum) -> Result<&'a PolysumSum, Failure> {
    // SAFETY: non-null handles come from this library.
    unsafe { s.as_ref() }.ok_or_else(|| null("sum"))
}

unsafe fn polytope_list(polys: *const *const PolysumPolytope, n: usize) -> Result<Vec<Polytope>, Failure> {
    if polys.is_null() {
        return Err(null("polytope array"));
    }
    // SAFETY: the caller passes `n` handles.
    let handles = unsafe { std::slice::from_raw_parts(polys, n) };
    handles.iter().map(|&p| unsafe { polytope_ref(p) }.cloned()).collect()
}

fn reports_json(reports: &[VerifierReport]) -> Result<String, Failure> {
    serde_json::to_string_pretty(reports).map_err(|e| Failure(PolysumStatus::Internal, e.to_string()))
}

/// The message of the last failed call on this thread, or null. The
/// returned string belongs to the caller.
#[no_mangle]
pub extern "C" fn polysum_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polysum_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses polytope JSON (`{"ambient_dim": n, "vertices": [["p/q", ...], ...]}`).
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_from_json(json: *const c_char, out: *mut *mut PolysumPolytope) -> PolysumStatus {
    guard(|| {
        let text = unsafe { read_str(json, "json") }?;
        let p = Polytope::from_file(&PolytopeFile::from_json(text)?)?;
        unsafe { write_out(out, Box::into_raw(Box::new(PolysumPolytope(p))), "out") }
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_free(p: *mut PolysumPolytope) {
    if !p.is_null() {
        // SAFETY: `p` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Vertices as polytope JSON.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_to_json(p: *const PolysumPolytope, out: *mut *mut c_char) -> PolysumStatus {
    guard(|| {
        let p = unsafe { polytope_ref(p) }?;
        let json = PolytopeFile::from_polytope("polytope", p.vpolytope()).to_json();
        unsafe { write_out(out, c_string(json), "out") }
    })
}

/// Affine dimension.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_dim(p: *const PolysumPolytope, out: *mut usize) -> PolysumStatus {
    guard(|| {
        let p = unsafe { polytope_ref(p) }?;
        unsafe { write_out(out, p.dim(), "out") }
    })
}

/// Writes `f_0, ..., f_{d-1}` into `buf` and their number into `len`. A
/// point has the single entry 1. Returns `BufferTooSmall` (with `len` set)
/// when `cap` is too small.
///
/// # Safety
/// `p` must be a live handle; `buf` must hold `cap` entries; `len` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_f_vector(
    p: *const PolysumPolytope,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> PolysumStatus {
    guard(|| {
        let p = unsafe { polytope_ref(p) }?;
        let f = p.f_vector();
        let counts = if f.dim() == 0 { f.full() } else { f.proper().to_vec() };
        unsafe { write_out(len, counts.len(), "len") }?;
        if cap < counts.len() {
            return Err(Failure(PolysumStatus::BufferTooSmall, format!("need {} entries, have {cap}", counts.len())));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        // SAFETY: `buf` holds at least `cap >= counts.len()` entries.
        unsafe { ptr::copy_nonoverlapping(counts.as_ptr(), buf, counts.len()) };
        Ok(())
    })
}

/// Polar dual; the origin must be interior.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_dual(p: *const PolysumPolytope, out: *mut *mut PolysumPolytope) -> PolysumStatus {
    guard(|| {
        let dual = polar_dual(unsafe { polytope_ref(p) }?)?;
        unsafe { write_out(out, Box::into_raw(Box::new(PolysumPolytope(dual))), "out") }
    })
}

/// Whether the polytope is perfectly centered.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_perfectly_centered(p: *const PolysumPolytope, out: *mut bool) -> PolysumStatus {
    guard(|| {
        let report = is_perfectly_centered(unsafe { polytope_ref(p) }?)?;
        unsafe { write_out(out, report.pass, "out") }
    })
}

/// Runs a single-polytope identity (`euler`, `bb`, `dsrshort`, `nestthm`,
/// `fvthm`, `pc`). Writes the JSON list of reports and whether all passed.
///
/// # Safety
/// `p` must be a live handle; `identity` a nul-terminated string; the out
/// pointers writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_polytope_verify(
    p: *const PolysumPolytope,
    identity: *const c_char,
    out_json: *mut *mut c_char,
    out_pass: *mut bool,
) -> PolysumStatus {
    guard(|| {
        let p = unsafe { polytope_ref(p) }?;
        let id: Identity = unsafe { read_str(identity, "identity") }?.parse()?;
        let reports = check_polytope(id, p)?;
        let json = reports_json(&reports)?;
        unsafe { write_out(out_pass, reports.iter().all(|r| r.pass), "out_pass") }?;
        unsafe { write_out(out_json, c_string(json), "out_json") }
    })
}

/// Minkowski sum of `n` polytopes, decomposed.
///
/// # Safety
/// `polys` must point to `n` live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_sum_new(polys: *const *const PolysumPolytope, n: usize, out: *mut *mut PolysumSum) -> PolysumStatus {
    guard(|| {
        let sum = MinkowskiSum::from_polytopes(unsafe { polytope_list(polys, n) }?)?;
        let decomposition = decompose_faces(&sum)?;
        unsafe { write_out(out, Box::into_raw(Box::new(PolysumSum { sum, decomposition })), "out") }
    })
}

/// Rotates all summands but the first until the sum is relatively in
/// general position; `max_retries` of 0 selects the default.
///
/// # Safety
/// `polys` must point to `n` live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_sum_perturbed(
    polys: *const *const PolysumPolytope,
    n: usize,
    seed: u64,
    max_retries: usize,
    out: *mut *mut PolysumSum,
) -> PolysumStatus {
    guard(|| {
        let summands: Vec<_> = unsafe { polytope_list(polys, n) }?.iter().map(|p| p.vpolytope().clone()).collect();
        let retries = if max_retries == 0 { polysum::minkowski::DEFAULT_MAX_RETRIES } else { max_retries };
        let pert = perturb_to_general_position(&summands, seed, retries)?;
        let handle = PolysumSum { sum: pert.sum, decomposition: pert.decomposition };
        unsafe { write_out(out, Box::into_raw(Box::new(handle)), "out") }
    })
}

/// # Safety
/// `s` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polysum_sum_free(s: *mut PolysumSum) {
    if !s.is_null() {
        // SAFETY: `s` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(s) });
    }
}

/// A new handle for the sum polytope itself.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_sum_polytope(s: *const PolysumSum, out: *mut *mut PolysumPolytope) -> PolysumStatus {
    guard(|| {
        let p = unsafe { sum_ref(s) }?.sum.sum().clone();
        unsafe { write_out(out, Box::into_raw(Box::new(PolysumPolytope(p))), "out") }
    })
}

/// Whether every facet of the sum decomposes exactly.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_sum_general_position(s: *const PolysumSum, out: *mut bool) -> PolysumStatus {
    guard(|| {
        let s = unsafe { sum_ref(s) }?;
        unsafe { write_out(out, is_relatively_general_position(&s.decomposition), "out") }
    })
}

/// Runs a sum identity (`mainthm`, `maincor`, `maincor2`, `delta`,
/// `lemface`, `summand`). `a` is the `maincor` parameter as `"p/q"`; null
/// means 1. Writes the JSON list of reports and whether all passed.
///
/// # Safety
/// `s` must be a live handle; `identity` and non-null `a` nul-terminated
/// strings; the out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn polysum_sum_verify(
    s: *const PolysumSum,
    identity: *const c_char,
    a: *const c_char,
    out_json: *mut *mut c_char,
    out_pass: *mut bool,
) -> PolysumStatus {
    guard(|| {
        let s = unsafe { sum_ref(s) }?;
        let id: Identity = unsafe { read_str(identity, "identity") }?.parse()?;
        let a = if a.is_null() { rat_int(1) } else { parse_rat(unsafe { read_str(a, "a") }?)? };
        let reports = check_sum(id, &s.sum, &s.decomposition, &a)?;
        let json = reports_json(&reports)?;
        unsafe { write_out(out_pass, reports.iter().all(|r| r.pass), "out_pass") }?;
        unsafe { write_out(out_json, c_string(json), "out_json") }
    })
}
