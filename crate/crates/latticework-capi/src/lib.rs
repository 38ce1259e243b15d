//! C ABI for latticework.
//!
//! Conventions: objects are opaque handles created by `*_parse_*` functions
//! and released by the matching `*_free`; every fallible call returns an
//! [`LwStatus`] and writes its result through out-pointers, which are left
//! untouched on failure; `lw_last_error_message` returns a thread-local
//! description of the most recent failure. Strings returned through out
//! parameters are released with `lw_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use latticework::error::Error;
use latticework::extgraph::{self, ReconstructVerdict};
use latticework::lattice::Lattice;
use latticework::quiver::{self, Quiver, ThinRep};
use latticework::{dedekind, dot, factors, io};

/// Result codes. Anything other than `Ok` leaves out-parameters untouched;
/// the message is available from `lw_last_error_message`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LwStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument,
    /// A string argument was not valid UTF-8.
    InvalidUtf8,
    /// The input could not be parsed or does not define a lattice.
    InvalidInput,
    /// A structural hypothesis does not hold (not modular, not distributive,
    /// not multiplicity free, quiver not acyclic, rep decomposable).
    HypothesisFailed,
    /// An enumeration cap or size limit was exceeded.
    LimitExceeded,
    /// A verified internal invariant failed.
    Internal,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn fail(err: &Error) -> LwStatus {
    set_error(&err.to_string());
    match err {
        Error::NotModular
        | Error::NotDistributive
        | Error::NotMultiplicityFree
        | Error::QuiverNotAcyclic
        | Error::NotIndecomposable => LwStatus::HypothesisFailed,
        Error::SizeLimit { .. } | Error::ChainExplosion { .. } | Error::NTooLarge { .. } => {
            LwStatus::LimitExceeded
        }
        Error::IsoFailure(_) | Error::LabelConflict(_) => LwStatus::Internal,
        _ => LwStatus::InvalidInput,
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Opaque lattice handle.
pub struct LwLattice {
    inner: Lattice,
}

/// Opaque quiver handle.
pub struct LwQuiver {
    inner: Quiver,
}

/// Opaque thin-representation handle.
pub struct LwRep {
    inner: ThinRep,
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, LwStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(LwStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        LwStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(ptr: *const T) -> Result<&'a T, LwStatus> {
    if ptr.is_null() {
        set_error("null handle argument");
        Err(LwStatus::NullArgument)
    } else {
        Ok(&*ptr)
    }
}

fn give_string(out: *mut *mut c_char, text: String) -> LwStatus {
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => {
            set_error("output contained an interior NUL");
            return LwStatus::Internal;
        }
    };
    unsafe { *out = c.into_raw() };
    LwStatus::Ok
}

/// Parse a lattice from its JSON file format.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_parse_json(
    json: *const c_char,
    out: *mut *mut LwLattice,
) -> LwStatus {
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match io::lattice_from_json(text) {
        Ok(lat) => {
            *out = Box::into_raw(Box::new(LwLattice { inner: lat }));
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Release a lattice handle. Null is ignored.
///
/// # Safety
/// `lat` must be a pointer from `lw_lattice_parse_json` or
/// `lw_submodule_lattice`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_free(lat: *mut LwLattice) {
    if !lat.is_null() {
        drop(Box::from_raw(lat));
    }
}

/// Number of elements.
///
/// # Safety
/// `lat` must be a live lattice handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_element_count(
    lat: *const LwLattice,
    out: *mut usize,
) -> LwStatus {
    let lat = match deref(lat) {
        Ok(l) => l,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    *out = lat.inner.n();
    LwStatus::Ok
}

unsafe fn bool_query(
    lat: *const LwLattice,
    out: *mut bool,
    query: impl FnOnce(&Lattice) -> Result<bool, Error>,
) -> LwStatus {
    let lat = match deref(lat) {
        Ok(l) => l,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    match query(&lat.inner) {
        Ok(v) => {
            *out = v;
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Whether the lattice is modular.
///
/// # Safety
/// `lat` must be a live lattice handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_is_modular(
    lat: *const LwLattice,
    out: *mut bool,
) -> LwStatus {
    bool_query(lat, out, |l| Ok(l.is_modular()))
}

/// Whether the lattice is distributive.
///
/// # Safety
/// `lat` must be a live lattice handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_is_distributive(
    lat: *const LwLattice,
    out: *mut bool,
) -> LwStatus {
    bool_query(lat, out, |l| Ok(l.is_distributive()))
}

/// Whether the lattice is multiplicity free (requires modularity).
///
/// # Safety
/// `lat` must be a live lattice handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_is_multiplicity_free(
    lat: *const LwLattice,
    out: *mut bool,
) -> LwStatus {
    bool_query(lat, out, factors::is_multiplicity_free)
}

/// Serialize a lattice back to its JSON file format.
///
/// # Safety
/// `lat` must be a live lattice handle; `out` receives a string to release
/// with `lw_string_free`.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_to_json(
    lat: *const LwLattice,
    out: *mut *mut c_char,
) -> LwStatus {
    let lat = match deref(lat) {
        Ok(l) => l,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    give_string(out, io::lattice_to_json(&lat.inner))
}

/// Render the Hasse diagram as DOT.
///
/// # Safety
/// As for `lw_lattice_to_json`.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_hasse_dot(
    lat: *const LwLattice,
    out: *mut *mut c_char,
) -> LwStatus {
    let lat = match deref(lat) {
        Ok(l) => l,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    match dot::lattice_dot(&lat.inner, None) {
        Ok(text) => give_string(out, text),
        Err(e) => fail(&e),
    }
}

/// Render the Ext graph as DOT (requires distributive multiplicity free).
///
/// # Safety
/// As for `lw_lattice_to_json`.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_ext_dot(
    lat: *const LwLattice,
    out: *mut *mut c_char,
) -> LwStatus {
    let lat = match deref(lat) {
        Ok(l) => l,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    match extgraph::ext_graph(&lat.inner).and_then(|e| dot::digraph_dot(&e.graph)) {
        Ok(text) => give_string(out, text),
        Err(e) => fail(&e),
    }
}

/// Reconstruction verdicts, mirroring the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LwReconstructVerdict {
    HoldsWithIso = 0,
    HypothesisFails = 2,
    Counterexample = 3,
}

/// Compare the Ext graph with the join-irreducible cover digraph.
///
/// # Safety
/// `lat` must be a live lattice handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_lattice_reconstruct(
    lat: *const LwLattice,
    out: *mut LwReconstructVerdict,
) -> LwStatus {
    let lat = match deref(lat) {
        Ok(l) => l,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    match extgraph::reconstruct_check(&lat.inner) {
        Ok(rec) => {
            *out = match rec.verdict {
                ReconstructVerdict::HoldsWithIso { .. } => LwReconstructVerdict::HoldsWithIso,
                ReconstructVerdict::HypothesisFails { .. } => {
                    LwReconstructVerdict::HypothesisFails
                }
                ReconstructVerdict::Counterexample { .. } => {
                    LwReconstructVerdict::Counterexample
                }
            };
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Release a string returned through an out parameter. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The n-th Dedekind number, `n <= 6`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_dedekind_count(n: u32, out: *mut u64) -> LwStatus {
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    match dedekind::count(n) {
        Ok(v) => {
            *out = v;
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Parse a quiver from its line format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_quiver_parse(
    text: *const c_char,
    out: *mut *mut LwQuiver,
) -> LwStatus {
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match Quiver::parse(text) {
        Ok(q) => {
            *out = Box::into_raw(Box::new(LwQuiver { inner: q }));
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Release a quiver handle. Null is ignored.
///
/// # Safety
/// `q` must be a pointer from `lw_quiver_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lw_quiver_free(q: *mut LwQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Parse a thin representation against a quiver. Invariant repairs (nonzero
/// flags on arrows leaving the support) are applied silently.
///
/// # Safety
/// `text` must be a NUL-terminated string; `q` a live quiver handle; `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_rep_parse(
    text: *const c_char,
    q: *const LwQuiver,
    out: *mut *mut LwRep,
) -> LwStatus {
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    let q = match deref(q) {
        Ok(q) => q,
        Err(s) => return s,
    };
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match ThinRep::parse(text, &q.inner) {
        Ok((rep, _warnings)) => {
            *out = Box::into_raw(Box::new(LwRep { inner: rep }));
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Release a representation handle. Null is ignored.
///
/// # Safety
/// `r` must be a pointer from `lw_rep_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lw_rep_free(r: *mut LwRep) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// The submodule lattice of a thin representation, as a new lattice handle.
///
/// # Safety
/// `q` and `r` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lw_submodule_lattice(
    q: *const LwQuiver,
    r: *const LwRep,
    out: *mut *mut LwLattice,
) -> LwStatus {
    if out.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    let q = match deref(q) {
        Ok(q) => q,
        Err(s) => return s,
    };
    let r = match deref(r) {
        Ok(r) => r,
        Err(s) => return s,
    };
    match quiver::submodule_lattice(&q.inner, &r.inner) {
        Ok(sub) => {
            *out = Box::into_raw(Box::new(LwLattice {
                inner: sub.lattice,
            }));
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Compare the submodule-lattice Ext graph with the induced quiver graph.
/// Writes whether the graphs are equal and whether the support restriction
/// of the quiver is a tree (the hypothesis under which equality is a
/// theorem).
///
/// # Safety
/// `q` and `r` must be live handles; `out_equal` and `out_tree` valid
/// pointers.
#[no_mangle]
pub unsafe extern "C" fn lw_quiver_verify(
    q: *const LwQuiver,
    r: *const LwRep,
    out_equal: *mut bool,
    out_tree: *mut bool,
) -> LwStatus {
    if out_equal.is_null() || out_tree.is_null() {
        set_error("null out pointer");
        return LwStatus::NullArgument;
    }
    let q = match deref(q) {
        Ok(q) => q,
        Err(s) => return s,
    };
    let r = match deref(r) {
        Ok(r) => r,
        Err(s) => return s,
    };
    match quiver::compare_ext_graphs(&q.inner, &r.inner) {
        Ok(cmp) => {
            *out_equal = cmp.equal;
            *out_tree = cmp.support_is_tree;
            LwStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

#[allow(unused)]
fn assert_handles_are_send() {
    fn assert_send<T: Send>() {}
    assert_send::<LwLattice>();
    assert_send::<LwQuiver>();
    assert_send::<LwRep>();
}
