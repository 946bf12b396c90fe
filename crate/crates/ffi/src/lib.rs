//! C interface to `wonderful-core`.
//!
//! Every function returns a [`WfStatus`]; results come back through out
//! pointers. Handles are opaque and must be released with their `_free`
//! function. Strings returned by the library are released with
//! [`wf_string_free`]. After a non-`Ok` status, [`wf_last_error`] describes
//! the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use wonderful::io::LatticeFile;
use wonderful::{
    abelianization_audit, building, enumerate_building_sets, hilbert_series, maximal_building_set,
    minimal_building_set, nested_fan, nested_set_complex, perm_group, poset_isomorphic, resolve, standard_lattice,
    BlowupOrder, BuildingSet, Error, LatticeKind, MeetSemilattice,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed or inconsistent input (bad JSON, unknown label, not a
    /// building set, ...).
    InvalidInput = 3,
    /// An internal consistency check failed.
    CheckFailed = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WfLatticeKind {
    Partition = 0,
    Boolean = 1,
}

/// A finite meet-semilattice.
pub struct WfLattice {
    inner: Arc<MeetSemilattice>,
}

/// A building set together with the lattice it lives in.
pub struct WfBuildingSet {
    lattice: Arc<MeetSemilattice>,
    set: BuildingSet,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(WfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::CheckDisagreement { .. }
            | Error::InternalNotSemilattice(_)
            | Error::HilbertMismatch { .. }
            | Error::Internal(_) => WfStatus::CheckFailed,
            _ => WfStatus::InvalidInput,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(WfStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> WfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            WfStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside wonderful");
            WfStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(WfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul bytes").into_raw()
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library on the
/// same thread.
#[no_mangle]
pub extern "C" fn wf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn wf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wf_lattice_standard(kind: WfLatticeKind, n: usize, out: *mut *mut WfLattice) -> WfStatus {
    guard(|| {
        let kind = match kind {
            WfLatticeKind::Partition => LatticeKind::Partition,
            WfLatticeKind::Boolean => LatticeKind::Boolean,
        };
        let l = standard_lattice(kind, n)?;
        write(out, Box::into_raw(Box::new(WfLattice { inner: Arc::new(l) })), "out")
    })
}

/// Parses the JSON lattice file format.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_lattice_from_json(json: *const c_char, out: *mut *mut WfLattice) -> WfStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let l = LatticeFile::from_json(text)?.lattice()?;
        write(out, Box::into_raw(Box::new(WfLattice { inner: Arc::new(l) })), "out")
    })
}

/// # Safety
/// `l` must be a live handle and `out` writable. Free the result with
/// [`wf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn wf_lattice_to_json(l: *const WfLattice, out: *mut *mut c_char) -> WfStatus {
    guard(|| {
        let l = deref(l, "lattice")?;
        write(out, string_out(LatticeFile::from_lattice(&l.inner).to_json()), "out")
    })
}

/// # Safety
/// `l` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn wf_lattice_free(l: *mut WfLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_lattice_len(l: *const WfLattice, out: *mut usize) -> WfStatus {
    guard(|| write(out, deref(l, "lattice")?.inner.len(), "out"))
}

/// Moebius value from bottom to top.
///
/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_lattice_mobius(l: *const WfLattice, out: *mut i64) -> WfStatus {
    guard(|| {
        let mu = deref(l, "lattice")?.inner.mobius()?;
        write(out, mu, "out")
    })
}

unsafe fn building_out(l: &WfLattice, set: BuildingSet, out: *mut *mut WfBuildingSet) -> Result<(), Fail> {
    let handle = WfBuildingSet {
        lattice: Arc::clone(&l.inner),
        set,
    };
    write(out, Box::into_raw(Box::new(handle)), "out")
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_building_minimal(l: *const WfLattice, out: *mut *mut WfBuildingSet) -> WfStatus {
    guard(|| {
        let l = deref(l, "lattice")?;
        let g = minimal_building_set(&l.inner)?;
        building_out(l, g, out)
    })
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_building_maximal(l: *const WfLattice, out: *mut *mut WfBuildingSet) -> WfStatus {
    guard(|| {
        let l = deref(l, "lattice")?;
        let g = maximal_building_set(&l.inner);
        building_out(l, g, out)
    })
}

/// Building set from comma-separated labels. Fails with `InvalidInput`
/// (and a witness in the error message) when the labels do not form one.
///
/// # Safety
/// `l` must be a live handle, `labels` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_building_from_labels(
    l: *const WfLattice,
    labels: *const c_char,
    out: *mut *mut WfBuildingSet,
) -> WfStatus {
    guard(|| {
        let l = deref(l, "lattice")?;
        let text = str_arg(labels, "labels")?;
        let g: Vec<usize> = text
            .split(',')
            .map(|s| l.inner.require(s.trim()))
            .collect::<Result<_, _>>()?;
        let g = building::building_set(&l.inner, &g)?;
        building_out(l, g, out)
    })
}

/// # Safety
/// `g` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn wf_building_free(g: *mut WfBuildingSet) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Comma-separated labels of the members.
///
/// # Safety
/// `g` must be a live handle and `out` writable. Free the result with
/// [`wf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn wf_building_labels(g: *const WfBuildingSet, out: *mut *mut c_char) -> WfStatus {
    guard(|| {
        let g = deref(g, "building set")?;
        write(out, string_out(g.set.labels(&g.lattice).join(",")), "out")
    })
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_building_count(l: *const WfLattice, out: *mut usize) -> WfStatus {
    guard(|| {
        let n = enumerate_building_sets(&deref(l, "lattice")?.inner)?.len();
        write(out, n, "out")
    })
}

/// Hilbert function of the algebra of the building set. Writes the length
/// to `len` and, when `cap` is large enough, the values to `buf`;
/// otherwise returns `BufferTooSmall`.
///
/// # Safety
/// `g` must be a live handle, `len` writable and `buf` valid for `cap`
/// writes (it may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn wf_hilbert(g: *const WfBuildingSet, buf: *mut usize, cap: usize, len: *mut usize) -> WfStatus {
    guard(|| {
        let g = deref(g, "building set")?;
        let h = hilbert_series(&g.lattice, &g.set)?;
        write(len, h.len(), "len")?;
        if cap < h.len() {
            return Err(Fail(
                WfStatus::BufferTooSmall,
                format!("need room for {} values, got {cap}", h.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(h.as_ptr(), buf, h.len());
        Ok(())
    })
}

/// Number of faces of the nested set complex, the empty face included.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_nested_face_count(g: *const WfBuildingSet, out: *mut usize) -> WfStatus {
    guard(|| {
        let g = deref(g, "building set")?;
        write(out, nested_set_complex(&g.lattice, &g.set).num_faces(), "out")
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_nested_reduced_euler(g: *const WfBuildingSet, out: *mut i64) -> WfStatus {
    guard(|| {
        let g = deref(g, "building set")?;
        write(out, nested_set_complex(&g.lattice, &g.set).reduced_euler_characteristic(), "out")
    })
}

/// The fan in its plain-text export format.
///
/// # Safety
/// `g` must be a live handle and `out` writable. Free the result with
/// [`wf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn wf_fan_export(g: *const WfBuildingSet, out: *mut *mut c_char) -> WfStatus {
    guard(|| {
        let g = deref(g, "building set")?;
        write(out, string_out(nested_fan(&g.lattice, &g.set)?.export()), "out")
    })
}

/// Resolves the lattice by blowing up the building set in the default
/// order and compares the result with the face poset of the nested set
/// complex. `out` receives whether they are isomorphic.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_resolve_verify(g: *const WfBuildingSet, out: *mut bool) -> WfStatus {
    guard(|| {
        let g = deref(g, "building set")?;
        let r = resolve(&g.lattice, g.set.carrier(), &BlowupOrder::Auto)?;
        let faces = nested_set_complex(&g.lattice, &g.set).face_poset();
        write(out, poset_isomorphic(&r, &faces, &[]).is_some(), "out")
    })
}

/// Samples `samples` model points per stratum for the permutation group
/// generated by `generators` (cycle notation, e.g. "(12),(123)") acting on
/// coordinates `1..=n`. `passed` receives whether every stabilizer was
/// elementary abelian of exponent 2; `points` the number of points checked.
///
/// # Safety
/// `generators` must be nul-terminated; `passed` and `points` writable.
#[no_mangle]
pub unsafe extern "C" fn wf_abelianize(
    generators: *const c_char,
    n: usize,
    samples: usize,
    seed: u64,
    passed: *mut bool,
    points: *mut usize,
) -> WfStatus {
    guard(|| {
        let g = perm_group(str_arg(generators, "generators")?, n)?;
        let report = abelianization_audit(&g, n, samples, seed)?;
        write(passed, report.passed(), "passed")?;
        write(points, report.points(), "points")
    })
}
