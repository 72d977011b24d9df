//! C ABI over nervekit.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every entry point returns an
//! [`NkStatus`]; on failure [`nk_last_error`] describes what went wrong on
//! the calling thread. Strings handed out must be released with
//! [`nk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use nervekit::certificate::{Certificate, Format};
use nervekit::grothendieck::{check_gr_relnerve_iso, DiagramSCat};
use nervekit::monoidal::{check_cotimes_gr_iso, check_monoidal_fibers, check_op_theorems, operadic_nerve, MonSCat};
use nervekit::nerves::coherent_nerve;
use nervekit::scat::SCat;
use nervekit::sset::TruncatedSSet;
use nervekit::{corpus, doc, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NkStatus {
    Ok = 0,
    /// A check ran and its property failed.
    PropertyFailed = 1,
    /// Malformed document, unknown fixture or violated precondition.
    Malformed = 2,
    NullPointer = 3,
    BeyondCap = 4,
    InvalidMonoidal = 5,
    Internal = 6,
}

pub struct NkSSet(TruncatedSSet);
pub struct NkSCat(SCat);
pub struct NkDiagram(DiagramSCat);
pub struct NkMonoidal(MonSCat);
pub struct NkCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let clean = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn status_of(e: &Error) -> NkStatus {
    match e {
        Error::Counterexample(_) => NkStatus::PropertyFailed,
        Error::BeyondCap { .. } => NkStatus::BeyondCap,
        Error::InvalidMonoidal(_) => NkStatus::InvalidMonoidal,
        _ => NkStatus::Malformed,
    }
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<NkStatus, (NkStatus, String)>) -> NkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(s)) => {
            set_error("");
            s
        }
        Ok(Err((s, message))) => {
            set_error(&message);
            s
        }
        Err(_) => {
            set_error("internal panic");
            NkStatus::Internal
        }
    }
}

fn lib<T>(r: nervekit::Result<T>) -> Result<T, (NkStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (NkStatus, String) {
    (NkStatus::NullPointer, "null pointer argument".into())
}

unsafe fn as_str<'a>(s: *const c_char) -> Result<&'a str, (NkStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| (NkStatus::Malformed, "string is not UTF-8".into()))
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, (NkStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn give<T>(out: *mut *mut T, value: T) -> Result<NkStatus, (NkStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(NkStatus::Ok)
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> Result<NkStatus, (NkStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = CString::new(s).map_err(|_| (NkStatus::Internal, "output contains a nul byte".into()))?.into_raw();
    Ok(NkStatus::Ok)
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn nk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn nk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `json` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_sset_from_json(json: *const c_char, out: *mut *mut NkSSet) -> NkStatus {
    guard(|| {
        let d = lib(doc::from_json("simplicial set document", as_str(json)?))?;
        give(out, NkSSet(lib(doc::sset_from_doc(&d))?))
    })
}

/// # Safety
/// `x` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_sset_to_json(x: *const NkSSet, out: *mut *mut c_char) -> NkStatus {
    guard(|| give_string(out, doc::to_json(&doc::sset_to_doc(&borrow(x)?.0))))
}

/// # Safety
/// `x` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_sset_cap(x: *const NkSSet, out: *mut usize) -> NkStatus {
    guard(|| {
        let cap = borrow(x)?.0.cap();
        *out.as_mut().ok_or_else(null)? = cap;
        Ok(NkStatus::Ok)
    })
}

/// Number of `k`-cells, degenerate ones included.
///
/// # Safety
/// `x` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_sset_count(x: *const NkSSet, k: usize, out: *mut usize) -> NkStatus {
    guard(|| {
        let x = &borrow(x)?.0;
        if k > x.cap() {
            return Err((NkStatus::BeyondCap, format!("dimension {k} exceeds the cap {}", x.cap())));
        }
        *out.as_mut().ok_or_else(null)? = x.count(k);
        Ok(NkStatus::Ok)
    })
}

/// # Safety
/// `x` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn nk_sset_free(x: *mut NkSSet) {
    free(x)
}

/// # Safety
/// `name` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_scat_fixture(name: *const c_char, cap: usize, out: *mut *mut NkSCat) -> NkStatus {
    guard(|| give(out, NkSCat(lib(corpus::scat(as_str(name)?, cap))?)))
}

/// # Safety
/// `json` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_scat_from_json(json: *const c_char, out: *mut *mut NkSCat) -> NkStatus {
    guard(|| {
        let d = lib(doc::from_json("enriched category document", as_str(json)?))?;
        give(out, NkSCat(lib(doc::scat_from_doc(&d))?))
    })
}

/// # Safety
/// `c` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_scat_to_json(c: *const NkSCat, out: *mut *mut c_char) -> NkStatus {
    guard(|| give_string(out, doc::to_json(&doc::scat_to_doc(&borrow(c)?.0))))
}

/// Homotopy-coherent nerve through dimension `cap`.
///
/// # Safety
/// `c` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_coherent_nerve(c: *const NkSCat, cap: usize, out: *mut *mut NkSSet) -> NkStatus {
    guard(|| give(out, NkSSet(lib(coherent_nerve(&borrow(c)?.0, cap))?.sset)))
}

/// # Safety
/// `c` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn nk_scat_free(c: *mut NkSCat) {
    free(c)
}

/// # Safety
/// `name` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_diagram_fixture(name: *const c_char, cap: usize, out: *mut *mut NkDiagram) -> NkStatus {
    guard(|| give(out, NkDiagram(lib(corpus::diagram(as_str(name)?, cap))?)))
}

/// # Safety
/// `json` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_diagram_from_json(json: *const c_char, out: *mut *mut NkDiagram) -> NkStatus {
    guard(|| {
        let d = lib(doc::from_json("diagram document", as_str(json)?))?;
        give(out, NkDiagram(lib(doc::diagram_from_doc(&d))?))
    })
}

/// # Safety
/// `f` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn nk_diagram_free(f: *mut NkDiagram) {
    free(f)
}

/// # Safety
/// `name` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_monoidal_fixture(name: *const c_char, cap: usize, out: *mut *mut NkMonoidal) -> NkStatus {
    guard(|| give(out, NkMonoidal(lib(corpus::monoidal(as_str(name)?, cap))?)))
}

/// # Safety
/// `json` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_monoidal_from_json(json: *const c_char, out: *mut *mut NkMonoidal) -> NkStatus {
    guard(|| {
        let d = lib(doc::from_json("monoidal document", as_str(json)?))?;
        give(out, NkMonoidal(lib(doc::monoidal_from_doc(&d))?))
    })
}

/// # Safety
/// `m` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn nk_monoidal_free(m: *mut NkMonoidal) {
    free(m)
}

/// Stores the certificate and reports its verdict as the status.
unsafe fn give_certificate(out: *mut *mut NkCertificate, cert: Certificate) -> Result<NkStatus, (NkStatus, String)> {
    let passed = cert.passed();
    let detail = cert.counterexample.clone().unwrap_or_default();
    give(out, NkCertificate(cert))?;
    if passed {
        Ok(NkStatus::Ok)
    } else {
        Err((NkStatus::PropertyFailed, detail))
    }
}

/// `N(Gr F) ≅ N_f(D)` through dimension `nmax`. A certificate is produced
/// whether or not the check passes; the status carries the verdict.
///
/// # Safety
/// `f` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_check_gr_relnerve(f: *const NkDiagram, nmax: usize, out: *mut *mut NkCertificate) -> NkStatus {
    guard(|| give_certificate(out, lib(check_gr_relnerve_iso(&borrow(f)?.0, nmax))?))
}

/// `C^⊗ ≅ Gr(C^•)` with Δ^op truncated at `delta_max`.
///
/// # Safety
/// `m` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_check_cotimes_gr(m: *const NkMonoidal, delta_max: usize, out: *mut *mut NkCertificate) -> NkStatus {
    guard(|| give_certificate(out, lib(check_cotimes_gr_iso(&borrow(m)?.0, delta_max))?))
}

/// Fiber of `N^⊗(C)` over `[level]` against `N(C)^level`.
///
/// # Safety
/// `m` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_check_fibers(
    m: *const NkMonoidal,
    delta_max: usize,
    cap: usize,
    level: usize,
    out: *mut *mut NkCertificate,
) -> NkStatus {
    guard(|| {
        let x = lib(operadic_nerve(&borrow(m)?.0, delta_max, cap))?;
        give_certificate(out, lib(check_monoidal_fibers(&x, level))?)
    })
}

/// The opposite comparisons, verified as strict isomorphisms.
///
/// # Safety
/// `m` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_check_opposites(m: *const NkMonoidal, delta_max: usize, cap: usize, out: *mut *mut NkCertificate) -> NkStatus {
    guard(|| give_certificate(out, lib(check_op_theorems(&borrow(m)?.0, delta_max, cap))?))
}

/// 1 if every check passed, 0 otherwise (including a null handle).
///
/// # Safety
/// `cert` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn nk_certificate_passed(cert: *const NkCertificate) -> c_int {
    cert.as_ref().map_or(0, |c| c.0.passed() as c_int)
}

/// Renders as text, or as JSON when `structured` is nonzero.
///
/// # Safety
/// `cert` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_certificate_render(cert: *const NkCertificate, structured: c_int, out: *mut *mut c_char) -> NkStatus {
    guard(|| {
        let format = if structured != 0 { Format::Structured } else { Format::Text };
        give_string(out, borrow(cert)?.0.render(format))
    })
}

/// # Safety
/// `cert` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn nk_certificate_free(cert: *mut NkCertificate) {
    free(cert)
}

/// Runs the command-line front end on `argv[0..argc]` (program name first)
/// and returns its exit status.
///
/// # Safety
/// `argv` must point to `argc` nul-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn nk_cli_run(argc: c_int, argv: *const *const c_char) -> c_int {
    if argv.is_null() || argc < 0 {
        set_error("null argument vector");
        return nervekit::cli::EXIT_MALFORMED;
    }
    let mut args = Vec::with_capacity(argc as usize);
    for i in 0..argc as usize {
        let a = *argv.add(i);
        if a.is_null() {
            set_error("null argument");
            return nervekit::cli::EXIT_MALFORMED;
        }
        args.push(CStr::from_ptr(a).to_string_lossy().into_owned());
    }
    catch_unwind(|| nervekit::cli::run(args)).unwrap_or_else(|_| {
        set_error("internal panic");
        nervekit::cli::EXIT_MALFORMED
    })
}
