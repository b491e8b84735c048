//! C ABI over `slodowy`.
//!
//! Subsets of simple roots cross the boundary as `uint32_t` masks: bit `i`
//! stands for the simple root with 1-based label `i + 1`. Every call returns a
//! [`SlodowyStatus`]; on failure [`slodowy_last_error`] describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use slodowy::branes::BraneDiagram;
use slodowy::closedsets::{gamma_closedness_criterion, gamma_set, is_closed};
use slodowy::fixedpoints::{fixed_points_both, fixed_points_bruteforce, fixed_points_theorem};
use slodowy::quivers::coulomb_crosscheck;
use slodowy::weyl::{free_double_cosets, Sign};
use slodowy::{Config, Error, RootSystem, Simple, WeylGroup};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlodowyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    GuardExceeded = 3,
    NotClosed = 4,
    VerificationFailed = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlodowyMethod {
    Brute = 0,
    Theorem = 1,
    Both = 2,
}

/// Opaque handle: a root system with its enumerated Weyl group.
pub struct SlodowyGroup {
    w: WeylGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SlodowyStatus {
    match e {
        Error::GuardExceeded { .. } => SlodowyStatus::GuardExceeded,
        Error::NotClosed => SlodowyStatus::NotClosed,
        e if e.is_verification_failure() => SlodowyStatus::VerificationFailed,
        _ => SlodowyStatus::InvalidArgument,
    }
}

enum Fail {
    Null,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SlodowyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SlodowyStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument".into());
            SlodowyStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            SlodowyStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Lib(Error::SubsetSyntax("invalid UTF-8".into())))
}

unsafe fn group_arg<'a>(g: *const SlodowyGroup) -> Result<&'a WeylGroup, Fail> {
    g.as_ref().map(|g| &g.w).ok_or(Fail::Null)
}

fn out<T>(p: *mut T, v: T) -> Result<(), Fail> {
    if p.is_null() {
        return Err(Fail::Null);
    }
    unsafe { p.write(v) };
    Ok(())
}

fn mask(w: &WeylGroup, m: u32) -> Result<Simple, Fail> {
    let s = Simple(m);
    w.root_system().check_simple(s)?;
    Ok(s)
}

/// Builds the Weyl group of `label` (for example `"B3"`). Free the handle
/// with [`slodowy_group_free`].
///
/// # Safety
/// `label` must be a valid C string and `out_group` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn slodowy_group_new(label: *const c_char, out_group: *mut *mut SlodowyGroup) -> SlodowyStatus {
    guard(|| {
        let label = str_arg(label)?;
        if out_group.is_null() {
            return Err(Fail::Null);
        }
        let sys = RootSystem::build(label, &Config::from_env())?;
        let g = Box::new(SlodowyGroup { w: WeylGroup::new(sys) });
        out(out_group, Box::into_raw(g))
    })
}

/// # Safety
/// `group` must come from [`slodowy_group_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn slodowy_group_free(group: *mut SlodowyGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn slodowy_group_rank(group: *const SlodowyGroup, out_rank: *mut u32) -> SlodowyStatus {
    guard(|| out(out_rank, group_arg(group)?.rank() as u32))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn slodowy_group_order(group: *const SlodowyGroup, out_order: *mut u64) -> SlodowyStatus {
    guard(|| out(out_order, group_arg(group)?.order() as u64))
}

/// Closedness of `Γ(I,J,K)`. When closed, the splitting `(X, Y)` is written
/// to `out_x` and `out_y`; otherwise both are set to 0.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn slodowy_gamma_closed(
    group: *const SlodowyGroup,
    i: u32,
    j: u32,
    k: u32,
    out_closed: *mut bool,
    out_x: *mut u32,
    out_y: *mut u32,
) -> SlodowyStatus {
    guard(|| {
        let w = group_arg(group)?;
        let (i, j, k) = (mask(w, i)?, mask(w, j)?, mask(w, k)?);
        let sys = w.root_system();
        let wit = gamma_closedness_criterion(sys, i, j, k)?;
        let closed = is_closed(sys, &gamma_set(sys, i, j, k))?;
        if closed != wit.is_some() {
            return Err(Error::Mismatch("closedness criterion disagrees with the closure test".into()).into());
        }
        out(out_closed, closed)?;
        out(out_x, wit.map_or(0, |x| x.x.0))?;
        out(out_y, wit.map_or(0, |x| x.y.0))
    })
}

/// Number of torus fixed points for `(L, Γ(I,J,K))`, as cosets of `W/W_I`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn slodowy_fixed_point_count(
    group: *const SlodowyGroup,
    l: u32,
    i: u32,
    j: u32,
    k: u32,
    method: SlodowyMethod,
    out_count: *mut u64,
) -> SlodowyStatus {
    guard(|| {
        let w = group_arg(group)?;
        let (l, i, j, k) = (mask(w, l)?, mask(w, i)?, mask(w, j)?, mask(w, k)?);
        slodowy::closedsets::build_gamma(w.root_system(), i, j, k)?;
        let n = match method {
            SlodowyMethod::Brute => fixed_points_bruteforce(w, l, &gamma_set(w.root_system(), i, j, k))?.len(),
            SlodowyMethod::Theorem => fixed_points_theorem(w, l, i, j, k)?.len(),
            SlodowyMethod::Both => fixed_points_both(w, l, i, j, k)?.len(),
        };
        out(out_count, n as u64)
    })
}

/// `|(W_L\W/W_I)^free|`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn slodowy_free_double_coset_count(
    group: *const SlodowyGroup,
    l: u32,
    i: u32,
    out_count: *mut u64,
) -> SlodowyStatus {
    guard(|| {
        let w = group_arg(group)?;
        let (l, i) = (mask(w, l)?, mask(w, i)?);
        out(out_count, free_double_cosets(w, l, i, Sign::Plus).len() as u64)
    })
}

/// Applies a Hanany-Witten move at `pos` (0-based) and returns the new
/// diagram as a string owned by the caller; release it with
/// [`slodowy_string_free`].
///
/// # Safety
/// `diagram` must be a valid C string and `out_diagram` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn slodowy_bow_hw(diagram: *const c_char, pos: usize, out_diagram: *mut *mut c_char) -> SlodowyStatus {
    guard(|| {
        let d = BraneDiagram::parse(str_arg(diagram)?)?;
        let moved = d.hw_move(pos)?.to_string();
        out(out_diagram, CString::new(moved).expect("no interior nul").into_raw())
    })
}

/// Same as [`slodowy_bow_hw`] for normalization to separated form.
///
/// # Safety
/// `diagram` must be a valid C string and `out_diagram` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn slodowy_bow_normalize(diagram: *const c_char, out_diagram: *mut *mut c_char) -> SlodowyStatus {
    guard(|| {
        let d = BraneDiagram::parse(str_arg(diagram)?)?;
        let n = d.normalize_separated()?.to_string();
        out(out_diagram, CString::new(n).expect("no interior nul").into_raw())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn slodowy_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Coulomb dimension of the star quiver of `parts` compared with `n² + n`.
///
/// # Safety
/// `parts` must point to `len` values; outputs must be valid.
#[no_mangle]
pub unsafe extern "C" fn slodowy_quiver_crosscheck(
    parts: *const u64,
    len: usize,
    out_ok: *mut bool,
    out_coulomb: *mut i64,
) -> SlodowyStatus {
    guard(|| {
        if parts.is_null() {
            return Err(Fail::Null);
        }
        let c = coulomb_crosscheck(std::slice::from_raw_parts(parts, len))?;
        out(out_ok, c.ok)?;
        out(out_coulomb, c.coulomb)
    })
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn slodowy_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::NotClosed), SlodowyStatus::NotClosed);
        assert_eq!(status_of(&Error::Mismatch(String::new())), SlodowyStatus::VerificationFailed);
        assert_eq!(status_of(&Error::UnknownType("X".into())), SlodowyStatus::InvalidArgument);
    }
}
