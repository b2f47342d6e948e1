//! C interface to conelab.
//!
//! Every function returns a [`ConelabStatus`]; results travel through out
//! pointers. Handles are opaque and owned by the caller, who releases them
//! with the matching `_free` function. Strings returned through out pointers
//! are allocated here and released with [`conelab_string_free`]. On failure
//! the message of the most recent error on the calling thread is available
//! from [`conelab_last_error`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use conelab::catalog::Catalog;
use conelab::check::{run_check, CheckId, CheckOptions};
use conelab::cone::RationalCone;
use conelab::format::ConeFile;
use conelab::lattice::{presentation_from_relations, GroupPresentation, IntegerMatrix};
use conelab::linalg::RationalVector;
use conelab::theorems::Verdict;
use conelab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConelabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    UnknownEntry = 4,
    Parse = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConelabVerdict {
    Holds = 0,
    Violated = 1,
    NotApplicable = 2,
}

impl From<Verdict> for ConelabVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Holds => ConelabVerdict::Holds,
            Verdict::Violated => ConelabVerdict::Violated,
            Verdict::NotApplicable => ConelabVerdict::NotApplicable,
        }
    }
}

/// A polyhedral cone with exact rational generators.
pub struct ConelabCone {
    inner: RationalCone,
}

/// A finitely generated abelian group in Smith form.
pub struct ConelabGroup {
    inner: GroupPresentation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ConelabStatus {
    match e {
        Error::DimensionMismatch { .. } | Error::RaggedRow { .. } => ConelabStatus::DimensionMismatch,
        Error::UnknownEntry { .. } => ConelabStatus::UnknownEntry,
        Error::Parse { .. } | Error::Io { .. } => ConelabStatus::Parse,
        _ => ConelabStatus::InvalidArgument,
    }
}

/// Runs `body`, converting errors and panics into a status and recording
/// the message for [`conelab_last_error`].
fn guard(body: impl FnOnce() -> Result<(), (ConelabStatus, String)>) -> ConelabStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ConelabStatus::Ok,
        Ok(Err((status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal error: panic inside conelab".into());
            ConelabStatus::Internal
        }
    }
}

type FfiResult<T> = Result<T, (ConelabStatus, String)>;

fn lib<T>(r: conelab::Result<T>) -> FfiResult<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (ConelabStatus, String) {
    (ConelabStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` must be null or point to a NUL-terminated string valid for reads.
unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (ConelabStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

/// # Safety
/// `p` must be null or point to `len` readable `i64` values.
unsafe fn slice_arg<'a>(p: *const i64, len: usize, what: &str) -> FfiResult<&'a [i64]> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// # Safety
/// `out` must be null or valid for one pointer write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (ConelabStatus::Internal, "string contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `out` must be null or valid for one write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

/// # Safety
/// `out` must be null or valid for one pointer write.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn conelab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn conelab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conelab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a cone in dimension `dim` from `count` integer generators stored
/// row-major in `coords` (`count * dim` values).
///
/// # Safety
/// `coords` must point to `count * dim` readable values (or may be null when
/// that product is 0) and `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_new(
    dim: size_t,
    coords: *const i64,
    count: size_t,
    out: *mut *mut ConelabCone,
) -> ConelabStatus {
    guard(|| {
        let len = dim
            .checked_mul(count)
            .ok_or((ConelabStatus::InvalidArgument, "generator block too large".to_string()))?;
        let values = slice_arg(coords, len, "coords")?;
        let gens: Vec<RationalVector> = if dim == 0 {
            vec![RationalVector::zeros(0); count]
        } else {
            values.chunks(dim).map(|c| RationalVector::from_integers(c.iter().copied())).collect()
        };
        let cone = lib(RationalCone::new(dim, gens))?;
        write_handle(out, ConelabCone { inner: cone })
    })
}

/// Parses a cone file (`dim = …`, `generators = […]`) from `text`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_parse(text: *const c_char, out: *mut *mut ConelabCone) -> ConelabStatus {
    guard(|| {
        let (dim, gens) = lib(ConeFile::parse(str_arg(text, "text")?))?;
        let cone = lib(RationalCone::new(dim, gens))?;
        write_handle(out, ConelabCone { inner: cone })
    })
}

/// # Safety
/// `cone` must be null or a handle from this library that is not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_free(cone: *mut ConelabCone) {
    if !cone.is_null() {
        drop(Box::from_raw(cone));
    }
}

/// # Safety
/// `cone` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_dim(cone: *const ConelabCone, out: *mut size_t) -> ConelabStatus {
    guard(|| {
        let cone = cone.as_ref().ok_or_else(|| null("cone"))?;
        write_out(out, cone.inner.ambient_dim())
    })
}

/// Membership of the integer point `point[0..len]`.
///
/// # Safety
/// `cone` must be a live handle, `point` must hold `len` values and `out`
/// must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_contains(
    cone: *const ConelabCone,
    point: *const i64,
    len: size_t,
    out: *mut bool,
) -> ConelabStatus {
    guard(|| {
        let cone = cone.as_ref().ok_or_else(|| null("cone"))?;
        let x = RationalVector::from_integers(slice_arg(point, len, "point")?.iter().copied());
        let inside = lib(cone.inner.contains(&x))?;
        write_out(out, inside)
    })
}

/// # Safety
/// `cone` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_is_strongly_convex(cone: *const ConelabCone, out: *mut bool) -> ConelabStatus {
    guard(|| {
        let cone = cone.as_ref().ok_or_else(|| null("cone"))?;
        write_out(out, cone.inner.is_strongly_convex())
    })
}

/// Facet normals and span equations as text, e.g.
/// `normals = [[0, 1], [1, -1]]` and `equations = []` on two lines.
///
/// # Safety
/// `cone` must be a live handle and `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn conelab_cone_facets(cone: *const ConelabCone, out: *mut *mut c_char) -> ConelabStatus {
    guard(|| {
        let cone = cone.as_ref().ok_or_else(|| null("cone"))?;
        let f = cone.inner.facets();
        let list = |vs: &[RationalVector]| {
            let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
            format!("[{}]", items.join(", "))
        };
        write_string(out, format!("normals = {}\nequations = {}\n", list(&f.normals), list(&f.equations)))
    })
}

/// Cokernel of a `rows x cols` integer relation matrix stored row-major;
/// `cols` is the number of generators.
///
/// # Safety
/// `entries` must hold `rows * cols` values and `out` must be valid for one
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn conelab_group_from_relations(
    rows: size_t,
    cols: size_t,
    entries: *const i64,
    out: *mut *mut ConelabGroup,
) -> ConelabStatus {
    guard(|| {
        let len = rows
            .checked_mul(cols)
            .ok_or((ConelabStatus::InvalidArgument, "matrix too large".to_string()))?;
        let values = slice_arg(entries, len, "entries")?;
        let m: Vec<Vec<i64>> = (0..rows).map(|r| values[r * cols..(r + 1) * cols].to_vec()).collect();
        let matrix = if rows == 0 {
            IntegerMatrix::zeros(0, cols)
        } else {
            lib(IntegerMatrix::from_i64_rows(&m))?
        };
        let group = lib(presentation_from_relations(cols, &matrix))?;
        write_handle(out, ConelabGroup { inner: group })
    })
}

/// # Safety
/// `group` must be null or a handle from this library that is not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conelab_group_free(group: *mut ConelabGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn conelab_group_free_rank(group: *const ConelabGroup, out: *mut size_t) -> ConelabStatus {
    guard(|| {
        let group = group.as_ref().ok_or_else(|| null("group"))?;
        write_out(out, group.inner.free_rank)
    })
}

/// Torsion orders as text, e.g. `[2, 4]`.
///
/// # Safety
/// `group` must be a live handle and `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn conelab_group_torsion(group: *const ConelabGroup, out: *mut *mut c_char) -> ConelabStatus {
    guard(|| {
        let group = group.as_ref().ok_or_else(|| null("group"))?;
        write_string(out, conelab::format::format_integer_list(&group.inner.torsion_orders))
    })
}

/// Summary such as `Z + Z/4`.
///
/// # Safety
/// `group` must be a live handle and `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn conelab_group_summary(group: *const ConelabGroup, out: *mut *mut c_char) -> ConelabStatus {
    guard(|| {
        let group = group.as_ref().ok_or_else(|| null("group"))?;
        write_string(out, group.inner.summary())
    })
}

/// Runs the named check (`t1`, `t3`, `line`, …) with default options on a
/// catalog entry. The active catalog is the directory in `CONELAB_DATA` or
/// the built-in one. `report` may be null; otherwise it receives the text
/// report.
///
/// # Safety
/// `entry` and `check` must be NUL-terminated strings, `verdict` must be
/// valid for one write, and `report` must be null or valid for one pointer
/// write.
#[no_mangle]
pub unsafe extern "C" fn conelab_check_entry(
    entry: *const c_char,
    check: *const c_char,
    verdict: *mut ConelabVerdict,
    report: *mut *mut c_char,
) -> ConelabStatus {
    guard(|| {
        let name = str_arg(entry, "entry")?;
        let id: CheckId = lib(str_arg(check, "check")?.parse())?;
        if verdict.is_null() {
            return Err(null("verdict"));
        }
        let catalog = lib(Catalog::from_env())?;
        let r = lib(run_check(lib(catalog.get(name))?, id, &CheckOptions::default()))?;
        if !report.is_null() {
            write_string(report, r.render_text())?;
        }
        write_out(verdict, r.verdict.into())
    })
}
