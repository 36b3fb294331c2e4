//! C interface to `rt_morph`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Strings returned through
//! out-parameters are NUL-terminated UTF-8 and released with
//! [`rt_string_free`]. Every fallible call returns an [`RtStatus`]; on
//! failure [`rt_last_error`] describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use num::ToPrimitive;
use rt_morph::io::json;
use rt_morph::io::svg::{render_animated, RenderConfig, RenderMode};
use rt_morph::morph::{decide, full_morph, MorphPlan};
use rt_morph::rt::construct::canonical_labeling;
use rt_morph::rt::{canonical_frame, construct_rt, extract_wood_set, validate_rt, RTRepresentation, Q};
use rt_morph::Error;

/// Result of a call. The first four values agree with the exit codes of the
/// `rt-morph` command.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RtStatus {
    Ok = 0,
    /// Malformed input, or input violating an invariant.
    Invalid = 1,
    /// The two representations admit no morph.
    NotMorphable = 2,
    /// An internal consistency check failed.
    Internal = 3,
    /// A required pointer argument was NULL.
    NullArgument = 4,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 5,
    /// An index was out of range.
    OutOfRange = 6,
    /// The library panicked; no object was modified.
    Panic = 7,
}

/// A representation: one right triangle per vertex.
pub struct RtRepresentation(RTRepresentation);

/// A piecewise linear morph given by its keyframes.
pub struct RtPlan(MorphPlan);

/// Corner coordinates of one triangle, rounded to double precision.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RtTriangle {
    pub xl: f64,
    pub xr: f64,
    pub yb: f64,
    pub yt: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(RtStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InternalInvariant(_) => RtStatus::Internal,
            Error::NotMorphable(_) => RtStatus::NotMorphable,
            _ => RtStatus::Invalid,
        };
        Fail(status, e.to_string())
    }
}

type Outcome = Result<RtStatus, Fail>;

fn set_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Outcome) -> RtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            set_error(None);
            status
        }
        Ok(Err(Fail(status, message))) => {
            set_error(Some(message));
            status
        }
        Err(_) => {
            set_error(Some("panic inside rt_morph".into()));
            RtStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(RtStatus::NullArgument, format!("{what} is NULL"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(RtStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Outcome {
    *out = Box::into_raw(Box::new(value));
    Ok(RtStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    *out = CString::new(s).map_err(|e| Fail(RtStatus::Internal, e.to_string()))?.into_raw();
    Ok(RtStatus::Ok)
}

fn check_out<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        Err(null("out"))
    } else {
        Ok(())
    }
}

/// Message describing the last failed call on this thread, or NULL if the
/// last call succeeded. Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn rt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` is NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse and validate a representation from its JSON form.
///
/// # Safety
/// `json` is NULL or a NUL-terminated string; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_from_json(json: *const c_char, out: *mut *mut RtRepresentation) -> RtStatus {
    guard(|| {
        check_out(out)?;
        let r = json::parse_representation(text(json, "json")?)?;
        put(out, RtRepresentation(r))
    })
}

/// Build the representation of a wood in the canonical frame. With a NULL
/// `labeling_json` the smallest topological labeling is used.
///
/// # Safety
/// String arguments are NULL or NUL-terminated; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_construct(
    graph_json: *const c_char,
    wood_json: *const c_char,
    labeling_json: *const c_char,
    out: *mut *mut RtRepresentation,
) -> RtStatus {
    guard(|| {
        check_out(out)?;
        let g = Arc::new(json::parse_graph(text(graph_json, "graph_json")?)?);
        let t = json::parse_wood(text(wood_json, "wood_json")?, &g)?;
        let tau = if labeling_json.is_null() {
            canonical_labeling(&t)?
        } else {
            json::parse_labeling(text(labeling_json, "labeling_json")?)?
        };
        put(out, RtRepresentation(construct_rt(&t, &tau, &canonical_frame(g.n()))?))
    })
}

/// # Safety
/// `r` is NULL or a live handle; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_to_json(r: *const RtRepresentation, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        check_out(out)?;
        put_string(out, json::representation_to_json(&handle(r, "representation")?.0))
    })
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `r` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_vertex_count(r: *const RtRepresentation) -> usize {
    r.as_ref().map_or(0, |r| r.0.n())
}

/// # Safety
/// `r` is NULL or a live handle; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_triangle(r: *const RtRepresentation, vertex: usize, out: *mut RtTriangle) -> RtStatus {
    guard(|| {
        check_out(out)?;
        let r = &handle(r, "representation")?.0;
        if vertex >= r.n() {
            return Err(Fail(RtStatus::OutOfRange, format!("vertex {vertex} of {}", r.n())));
        }
        let t = r.triangle(vertex);
        let f = |q: &Q| q.to_f64().unwrap_or(f64::NAN);
        *out = RtTriangle { xl: f(&t.xl), xr: f(&t.xr), yb: f(&t.yb), yt: f(&t.yt) };
        Ok(RtStatus::Ok)
    })
}

/// Check every condition of a representation. Returns `RT_STATUS_OK` when
/// it holds and `RT_STATUS_INVALID` otherwise; the diagnostics, one per
/// line, go to `diagnostics` unless it is NULL.
///
/// # Safety
/// `r` is NULL or a live handle; `diagnostics` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_validate(r: *const RtRepresentation, diagnostics: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let d = validate_rt(&handle(r, "representation")?.0);
        if !diagnostics.is_null() {
            put_string(diagnostics, d.join("\n"))?;
        }
        if d.is_empty() {
            Ok(RtStatus::Ok)
        } else {
            Err(Fail(RtStatus::Invalid, d.join("; ")))
        }
    })
}

/// The Schnyder woods the representation belongs to, as JSON.
///
/// # Safety
/// `r` is NULL or a live handle; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_wood_set(r: *const RtRepresentation, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        check_out(out)?;
        put_string(out, json::wood_set_to_json(&extract_wood_set(&handle(r, "representation")?.0)?))
    })
}

/// # Safety
/// `r` is NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rt_representation_free(r: *mut RtRepresentation) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Decide whether `a` morphs into `b`. The decision JSON goes to `out`; the
/// status is `RT_STATUS_OK` or `RT_STATUS_NOT_MORPHABLE` accordingly.
///
/// # Safety
/// `a`, `b` are NULL or live handles; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_decide(a: *const RtRepresentation, b: *const RtRepresentation, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        check_out(out)?;
        let d = decide(&handle(a, "a")?.0, &handle(b, "b")?.0)?;
        put_string(out, json::decision_to_json(&d))?;
        Ok(if d.possible { RtStatus::Ok } else { RtStatus::NotMorphable })
    })
}

/// A piecewise linear morph from `a` to `b`.
///
/// # Safety
/// `a`, `b` are NULL or live handles; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_morph(a: *const RtRepresentation, b: *const RtRepresentation, out: *mut *mut RtPlan) -> RtStatus {
    guard(|| {
        check_out(out)?;
        put(out, RtPlan(full_morph(&handle(a, "a")?.0, &handle(b, "b")?.0)?))
    })
}

/// Parse a plan and check that each keyframe is valid and consecutive
/// keyframes are linear morphs.
///
/// # Safety
/// `json` is NULL or NUL-terminated; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_plan_from_json(json: *const c_char, out: *mut *mut RtPlan) -> RtStatus {
    guard(|| {
        check_out(out)?;
        let plan = json::parse_plan(text(json, "json")?)?;
        let d = plan.check()?;
        if !d.is_empty() {
            return Err(Fail(RtStatus::Invalid, d.join("; ")));
        }
        put(out, RtPlan(plan))
    })
}

/// # Safety
/// `p` is NULL or a live handle; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_plan_to_json(p: *const RtPlan, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        check_out(out)?;
        put_string(out, json::plan_to_json(&handle(p, "plan")?.0))
    })
}

/// Number of linear morphs, or 0 for NULL.
///
/// # Safety
/// `p` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rt_plan_step_count(p: *const RtPlan) -> usize {
    p.as_ref().map_or(0, |p| p.0.steps())
}

/// A copy of keyframe `index`, from 0 to the step count inclusive.
///
/// # Safety
/// `p` is NULL or a live handle; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_plan_keyframe(p: *const RtPlan, index: usize, out: *mut *mut RtRepresentation) -> RtStatus {
    guard(|| {
        check_out(out)?;
        let plan = &handle(p, "plan")?.0;
        match plan.keyframes.get(index) {
            Some(k) => put(out, RtRepresentation(k.clone())),
            None => Err(Fail(RtStatus::OutOfRange, format!("keyframe {index} of {}", plan.keyframes.len()))),
        }
    })
}

/// One animated SVG document of the plan.
///
/// # Safety
/// `p` is NULL or a live handle; `out` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn rt_plan_render_svg(
    p: *const RtPlan,
    width: u32,
    height: u32,
    margin: u32,
    fps: u32,
    out: *mut *mut c_char,
) -> RtStatus {
    guard(|| {
        check_out(out)?;
        let cfg = RenderConfig { width, height, margin, fps, mode: RenderMode::Animated, ..RenderConfig::default() };
        put_string(out, render_animated(&handle(p, "plan")?.0, &cfg)?)
    })
}

/// # Safety
/// `p` is NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rt_plan_free(p: *mut RtPlan) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}
