//! C ABI over `fcd-core`. Instances and results are opaque handles owned by
//! the caller and released with the matching `*_free`. Every entry point
//! returns an [`FcdStatus`]; on failure a message is available from
//! [`fcd_last_error`] on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fcd_core::dispatch::{run, Algorithm};
use fcd_core::format::{parse_instance, write_instance};
use fcd_core::solvers::{Budget, SolveError};
use fcd_core::{verify_districting, ColoredGraph, Districting, Instance};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NotApplicable = 4,
    BudgetExceeded = 5,
    Timeout = 6,
    Panic = 7,
}

/// Opaque instance handle.
pub struct FcdInstance {
    inner: Instance,
    td: Option<fcd_core::classify::TreeDecomposition>,
}

/// Opaque solve result.
pub struct FcdResult {
    feasible: bool,
    work: u64,
    algorithm: CString,
    witness: Option<Districting>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: FcdStatus, msg: impl Into<String>) -> FcdStatus {
    set_error(msg);
    status
}

fn guard(body: impl FnOnce() -> FcdStatus) -> FcdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(FcdStatus::Panic, "internal panic"))
}

fn solve_status(e: &SolveError) -> FcdStatus {
    match e {
        SolveError::Timeout => FcdStatus::Timeout,
        e if e.is_budget() => FcdStatus::BudgetExceeded,
        SolveError::NotApplicable(_) => FcdStatus::NotApplicable,
        _ => FcdStatus::InvalidArgument,
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, FcdStatus> {
    if s.is_null() {
        return Err(fail(FcdStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(FcdStatus::InvalidArgument, "string is not UTF-8"))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from this thread.
#[no_mangle]
pub extern "C" fn fcd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an instance in the text format.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcd_instance_parse(text: *const c_char, out: *mut *mut FcdInstance) -> FcdStatus {
    guard(|| {
        if out.is_null() {
            return fail(FcdStatus::NullPointer, "null output pointer");
        }
        let s = match c_str(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match parse_instance(s) {
            Ok(parsed) => {
                *out = Box::into_raw(Box::new(FcdInstance {
                    inner: parsed.instance,
                    td: parsed.td,
                }));
                FcdStatus::Ok
            }
            Err(e) => fail(FcdStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds an instance from arrays: `colors[n]` and `edges[2 * m]` as
/// endpoint pairs.
///
/// # Safety
/// The arrays must hold the stated number of elements and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fcd_instance_new(
    n: usize,
    num_colors: usize,
    colors: *const usize,
    m: usize,
    edges: *const usize,
    k: usize,
    ell: usize,
    out: *mut *mut FcdInstance,
) -> FcdStatus {
    guard(|| {
        if out.is_null() || (n > 0 && colors.is_null()) || (m > 0 && edges.is_null()) {
            return fail(FcdStatus::NullPointer, "null array or output pointer");
        }
        let colors = if n == 0 { &[][..] } else { std::slice::from_raw_parts(colors, n) };
        let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0], p[1])).collect();
        let built = ColoredGraph::new(num_colors, colors.to_vec(), &pairs).and_then(|g| Instance::new(g, k, ell));
        match built {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(FcdInstance { inner, td: None }));
                FcdStatus::Ok
            }
            Err(e) => fail(FcdStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `instance` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fcd_instance_free(instance: *mut FcdInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcd_instance_num_vertices(instance: *const FcdInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.inner.n())
}

/// Canonical text of the instance; release with [`fcd_string_free`].
///
/// # Safety
/// `instance` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn fcd_instance_write(instance: *const FcdInstance, out: *mut *mut c_char) -> FcdStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return fail(FcdStatus::NullPointer, "null handle or output pointer");
        };
        let s = write_instance(&inst.inner, inst.td.as_ref());
        *out = CString::new(s).expect("format is ASCII").into_raw();
        FcdStatus::Ok
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fcd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Decides the instance with the named algorithm (`"auto"`, `"brute"`, ...).
/// `budget` of 0 selects the default work budget.
///
/// # Safety
/// `instance` must be a live handle, `algorithm` a nul-terminated string and
/// `out` valid.
#[no_mangle]
pub unsafe extern "C" fn fcd_solve(
    instance: *const FcdInstance,
    algorithm: *const c_char,
    budget: u64,
    out: *mut *mut FcdResult,
) -> FcdStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return fail(FcdStatus::NullPointer, "null handle or output pointer");
        };
        let name = match c_str(algorithm) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let algo: Algorithm = match name.parse() {
            Ok(a) => a,
            Err(e) => return fail(FcdStatus::InvalidArgument, e),
        };
        let mut budget = if budget == 0 { Budget::default() } else { Budget::new(budget) };
        match run(&inst.inner, inst.td.as_ref(), algo, &mut budget) {
            Ok(report) => {
                *out = Box::into_raw(Box::new(FcdResult {
                    feasible: report.outcome.feasible,
                    work: report.outcome.work,
                    algorithm: CString::new(report.algorithm.as_str()).expect("static name"),
                    witness: report.outcome.witness,
                }));
                FcdStatus::Ok
            }
            Err(e) => fail(solve_status(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcd_result_feasible(result: *const FcdResult) -> bool {
    result.as_ref().is_some_and(|r| r.feasible)
}

/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcd_result_work(result: *const FcdResult) -> u64 {
    result.as_ref().map_or(0, |r| r.work)
}

/// Name of the solver that ran; owned by the result.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcd_result_algorithm(result: *const FcdResult) -> *const c_char {
    result.as_ref().map_or(ptr::null(), |r| r.algorithm.as_ptr())
}

/// Copies the witness into `assignment[n]` (district per vertex). Returns
/// `FCD_STATUS_NOT_APPLICABLE` if the solver produced no witness.
///
/// # Safety
/// `result` must be a live handle and `assignment` hold `n` elements.
#[no_mangle]
pub unsafe extern "C" fn fcd_result_witness(result: *const FcdResult, assignment: *mut usize, n: usize) -> FcdStatus {
    guard(|| {
        let Some(r) = result.as_ref() else {
            return fail(FcdStatus::NullPointer, "null handle");
        };
        let Some(w) = &r.witness else {
            return fail(FcdStatus::NotApplicable, "no witness available");
        };
        if assignment.is_null() {
            return fail(FcdStatus::NullPointer, "null assignment buffer");
        }
        if n != w.assignment().len() {
            return fail(
                FcdStatus::InvalidArgument,
                format!("buffer holds {n} entries, witness has {}", w.assignment().len()),
            );
        }
        std::slice::from_raw_parts_mut(assignment, n).copy_from_slice(w.assignment());
        FcdStatus::Ok
    })
}

/// # Safety
/// `result` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fcd_result_free(result: *mut FcdResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Checks `assignment[n]` (district per vertex, ids below `k`) against the
/// instance; `*valid` receives the verdict.
///
/// # Safety
/// `instance` must be a live handle, `assignment` hold `n` elements and
/// `valid` be valid.
#[no_mangle]
pub unsafe extern "C" fn fcd_verify(
    instance: *const FcdInstance,
    assignment: *const usize,
    n: usize,
    k: usize,
    valid: *mut bool,
) -> FcdStatus {
    guard(|| {
        let Some(inst) = instance.as_ref() else {
            return fail(FcdStatus::NullPointer, "null handle");
        };
        if valid.is_null() || (n > 0 && assignment.is_null()) {
            return fail(FcdStatus::NullPointer, "null buffer");
        }
        let slice = if n == 0 { &[][..] } else { std::slice::from_raw_parts(assignment, n) };
        let d = match Districting::new(slice.to_vec(), k) {
            Ok(d) => d,
            Err(e) => return fail(FcdStatus::InvalidArgument, e.to_string()),
        };
        match verify_districting(&inst.inner, &d) {
            Ok(verdict) => {
                *valid = verdict.is_valid();
                if !verdict.is_valid() {
                    set_error(verdict.to_string());
                }
                FcdStatus::Ok
            }
            Err(e) => {
                *valid = false;
                set_error(e.to_string());
                FcdStatus::Ok
            }
        }
    })
}
