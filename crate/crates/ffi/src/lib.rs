//! C interface. Every function returns an [`MdStatus`]; on failure the
//! message is available from [`md_last_error`] until the next call on the
//! same thread. Strings handed out must be released with [`md_string_free`],
//! handles with [`md_factorization_free`].

use monodromy::constructions::{build_first_family, build_second_family};
use monodromy::factorization::{Context, Factorization};
use monodromy::fpgroups::{self, Enumeration};
use monodromy::invariants;
use monodromy::mcg::{Level, Verdict};
use monodromy::surface::{CurveCatalog, SurfaceKind};
use monodromy::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdStatus {
    Ok = 0,
    Refuted = 1,
    Inconclusive = 2,
    InvalidArgument = 3,
    Schema = 4,
    NullPointer = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdLevel {
    L1 = 1,
    L2 = 2,
}

/// Opaque factorization handle.
pub struct MdFactorization {
    inner: Factorization,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> MdStatus {
    match e {
        Error::Schema(_) | Error::Parse(_) => MdStatus::Schema,
        Error::GenusTooSmall { .. } | Error::Usage(_) | Error::Surface(_) => MdStatus::InvalidArgument,
        _ => MdStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<MdStatus, (MdStatus, String)>) -> MdStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            MdStatus::Internal
        }
    }
}

fn lift<T>(r: monodromy::Result<T>) -> Result<T, (MdStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (MdStatus, String) {
    (MdStatus::NullPointer, "null pointer argument".into())
}

unsafe fn handle<'a>(h: *const MdFactorization) -> Result<&'a Factorization, (MdStatus, String)> {
    h.as_ref().map(|h| &h.inner).ok_or_else(null)
}

unsafe fn put_handle(out: *mut *mut MdFactorization, f: Factorization) -> Result<MdStatus, (MdStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(MdFactorization { inner: f }));
    Ok(MdStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<MdStatus, (MdStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = CString::new(s).map_err(|_| (MdStatus::Internal, "string contains nul".into()))?.into_raw();
    Ok(MdStatus::Ok)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

/// Builds the first family on the one-boundary surface of genus `genus` (≥ 3).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn md_build_thm1(genus: u32, out: *mut *mut MdFactorization) -> MdStatus {
    guard(|| {
        if genus < 3 {
            return Err((MdStatus::InvalidArgument, "genus must be at least 3".into()));
        }
        let mut ctx = lift(Context::new(lift(SurfaceKind::new(genus, 1))?))?;
        ctx.level = Level::L1;
        let p = lift(build_first_family(&mut ctx))?;
        put_handle(out, p.final_factorization().clone())
    })
}

/// Builds Û_n of genus `genus` (≥ 4) with `n ≥ 1`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn md_build_thm2(genus: u32, n: u32, out: *mut *mut MdFactorization) -> MdStatus {
    guard(|| {
        if genus < 4 || n == 0 {
            return Err((MdStatus::InvalidArgument, "need genus ≥ 4 and n ≥ 1".into()));
        }
        let mut ctx = lift(Context::new(lift(SurfaceKind::new(genus, 2))?))?;
        ctx.level = Level::L1;
        let p = lift(build_second_family(&mut ctx, n))?;
        put_handle(out, p.final_factorization().clone())
    })
}

/// # Safety
/// `json` must be a nul-terminated string; `out` as in [`md_build_thm1`].
#[no_mangle]
pub unsafe extern "C" fn md_factorization_from_json(json: *const c_char, out: *mut *mut MdFactorization) -> MdStatus {
    guard(|| {
        if json.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(json).to_str().map_err(|_| (MdStatus::Schema, "input is not UTF-8".into()))?;
        put_handle(out, lift(Factorization::from_json(text))?)
    })
}

/// # Safety
/// `h` must come from this library; `out` receives a string to free with [`md_string_free`].
#[no_mangle]
pub unsafe extern "C" fn md_factorization_to_json(h: *const MdFactorization, out: *mut *mut c_char) -> MdStatus {
    guard(|| put_string(out, handle(h)?.to_json()))
}

/// Number of cycles, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn md_factorization_len(h: *const MdFactorization) -> usize {
    h.as_ref().map_or(0, |h| h.inner.len())
}

/// Checks the lifted relator: `Ok` when verified at `level` (an [`MdLevel`]
/// value), otherwise `Refuted` or `Inconclusive`. A `word_budget` of 0 keeps
/// the default.
///
/// # Safety
/// `h` must come from this library.
#[no_mangle]
pub unsafe extern "C" fn md_verify(h: *const MdFactorization, level: u32, word_budget: usize) -> MdStatus {
    guard(|| {
        let level = match level {
            l if l == MdLevel::L1 as u32 => Level::L1,
            l if l == MdLevel::L2 as u32 => Level::L2,
            l => return Err((MdStatus::InvalidArgument, format!("unknown level {l}"))),
        };
        let f = handle(h)?;
        let mut ctx = lift(Context::new(f.surface))?;
        if word_budget > 0 {
            ctx.ev.set_budget(word_budget);
        }
        ctx.level = level;
        match ctx.verify(f) {
            Verdict::Verified { .. } => Ok(MdStatus::Ok),
            Verdict::Refuted { level } => Err((MdStatus::Refuted, format!("refuted at {level:?}"))),
            Verdict::Inconclusive { reason, .. } => Err((MdStatus::Inconclusive, reason)),
        }
    })
}

/// Invariant report as JSON.
///
/// # Safety
/// `h` must come from this library; `out` receives a string to free with [`md_string_free`].
#[no_mangle]
pub unsafe extern "C" fn md_report_json(h: *const MdFactorization, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let f = handle(h)?;
        let r = lift(invariants::report(f, lift(invariants::pi1_obstruction(f))?))?;
        put_string(out, pretty(&serde_json::to_value(r).expect("report serializes")))
    })
}

/// Abelianization and coset enumeration of the total-space group as JSON.
///
/// # Safety
/// `h` must come from this library; `out` receives a string to free with [`md_string_free`].
#[no_mangle]
pub unsafe extern "C" fn md_pi1_json(h: *const MdFactorization, max_cosets: usize, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let f = handle(h)?;
        let p = lift(fpgroups::pi1_total_space(f))?;
        let ab = fpgroups::abelianization(&p);
        let tc = match fpgroups::todd_coxeter(&p, max_cosets.max(1)) {
            Enumeration::FiniteOrder(k) => serde_json::json!({"result": "finite_order", "order": k}),
            Enumeration::Inconclusive { cosets_defined } => {
                serde_json::json!({"result": "inconclusive", "cosets_defined": cosets_defined})
            }
        };
        put_string(out, pretty(&serde_json::json!({"h1": ab, "todd_coxeter": tc})))
    })
}

/// Named curves on the surface of genus `genus` with `boundary` components.
///
/// # Safety
/// `out` receives a string to free with [`md_string_free`].
#[no_mangle]
pub unsafe extern "C" fn md_catalog_json(genus: u32, boundary: u32, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let s = lift(SurfaceKind::new(genus, boundary)).map_err(|(_, m)| (MdStatus::InvalidArgument, m))?;
        put_string(out, pretty(&lift(CurveCatalog::build(s))?.to_json()))
    })
}

/// # Safety
/// `h` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn md_factorization_free(h: *mut MdFactorization) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn md_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread; empty after a success.
/// Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn md_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
