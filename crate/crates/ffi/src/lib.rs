//! C ABI over the exact-rational intersection toolkit.
//!
//! The surface is deliberately small: create a context, evaluate
//! expressions in named spaces, run scenario texts for a JSON report, and
//! free everything through the paired `ilab_*_free` functions. All strings
//! crossing the boundary are NUL-terminated UTF-8; every string returned
//! through an out-parameter is owned by the caller and must be released
//! with [`ilab_string_free`].
//!
//! A context is not synchronized: do not call functions on the same
//! context from two threads at once. Distinct contexts are independent.
//!
//! Every entry point catches panics; a caught panic returns
//! [`IlabStatus::Internal`] instead of unwinding across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use intersect_lab::scenario_dsl::{evaluate, parse, parse_expr_text, Evaluator};

/// Result code of every fallible entry point.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum IlabStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// An input string was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input text did not parse; see `ilab_last_error`.
    ParseError = 3,
    /// Evaluation failed; see `ilab_last_error`.
    EvalError = 4,
    /// The scenario evaluated cleanly but at least one assertion failed.
    AssertionFailed = 5,
    /// A panic was caught at the boundary or the output could not be
    /// represented as a C string.
    Internal = 6,
}

/// Opaque evaluator handle; create with [`ilab_context_new`], release with
/// [`ilab_context_free`].
pub struct IlabContext {
    evaluator: Evaluator,
    last_error: Option<CString>,
}

/// Library version as a static NUL-terminated string; never freed by the
/// caller.
#[no_mangle]
pub extern "C" fn ilab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Allocates a context with every built-in space ready. Returns NULL only
/// if construction panics.
#[no_mangle]
pub extern "C" fn ilab_context_new() -> *mut IlabContext {
    catch_unwind(|| {
        Box::into_raw(Box::new(IlabContext {
            evaluator: Evaluator::new(),
            last_error: None,
        }))
    })
    .unwrap_or(std::ptr::null_mut())
}

/// Releases a context. NULL is accepted and ignored.
///
/// # Safety
/// `ctx` must be NULL or a pointer returned by [`ilab_context_new`] that
/// has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn ilab_context_free(ctx: *mut IlabContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Message of the most recent failure on this context, or an empty string
/// when the last call succeeded. The pointer is owned by the context and
/// is valid until the next call that takes the context mutably.
///
/// # Safety
/// `ctx` must be NULL (which yields the empty string) or a live pointer
/// from [`ilab_context_new`].
#[no_mangle]
pub unsafe extern "C" fn ilab_last_error(ctx: *const IlabContext) -> *const c_char {
    const EMPTY: &[u8] = b"\0";
    if ctx.is_null() {
        return EMPTY.as_ptr().cast();
    }
    match &(*ctx).last_error {
        Some(message) => message.as_ptr(),
        None => EMPTY.as_ptr().cast(),
    }
}

/// Releases a string returned through an out-parameter. NULL is accepted
/// and ignored.
///
/// # Safety
/// `s` must be NULL or a pointer produced by this library through an
/// out-parameter, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ilab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates `expr` in the space named `space` and stores the canonical
/// textual value (a reduced rational, a coordinate vector, or a canonical
/// class form) in `*out_value`. On any non-[`IlabStatus::Ok`] status,
/// `*out_value` is set to NULL and `ilab_last_error` describes the
/// failure.
///
/// # Safety
/// `ctx` must be a live pointer from [`ilab_context_new`]; `space` and
/// `expr` must be NUL-terminated strings; `out_value` must point to
/// writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ilab_eval(
    ctx: *mut IlabContext,
    space: *const c_char,
    expr: *const c_char,
    out_value: *mut *mut c_char,
) -> IlabStatus {
    if ctx.is_null() || space.is_null() || expr.is_null() || out_value.is_null() {
        return IlabStatus::NullArgument;
    }
    *out_value = std::ptr::null_mut();
    let ctx = &mut *ctx;
    let (space, expr) = match (utf8(space), utf8(expr)) {
        (Some(s), Some(e)) => (s, e),
        _ => return fail(ctx, IlabStatus::InvalidUtf8, "input was not valid UTF-8"),
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        let parsed = match parse_expr_text(expr) {
            Ok(parsed) => parsed,
            Err(e) => return Err((IlabStatus::ParseError, e.to_string())),
        };
        match ctx.evaluator.display_value(space, &parsed) {
            Ok(value) => Ok(value),
            Err(e) => Err((IlabStatus::EvalError, e.to_string())),
        }
    }));
    match outcome {
        Ok(Ok(value)) => emit(ctx, value, out_value),
        Ok(Err((status, message))) => fail(ctx, status, &message),
        Err(_) => fail(ctx, IlabStatus::Internal, "internal panic"),
    }
}

/// Parses and evaluates a scenario text. `name` labels the scenario in
/// the report. On [`IlabStatus::Ok`] or [`IlabStatus::AssertionFailed`],
/// `*out_json` receives the full JSON report (assertions with positions,
/// expected and computed values, and a summary); on other statuses it is
/// NULL and `ilab_last_error` describes the failure.
///
/// # Safety
/// `ctx` must be a live pointer from [`ilab_context_new`]; `name` and
/// `text` must be NUL-terminated strings; `out_json` must point to
/// writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ilab_check(
    ctx: *mut IlabContext,
    name: *const c_char,
    text: *const c_char,
    out_json: *mut *mut c_char,
) -> IlabStatus {
    if ctx.is_null() || name.is_null() || text.is_null() || out_json.is_null() {
        return IlabStatus::NullArgument;
    }
    *out_json = std::ptr::null_mut();
    let ctx = &mut *ctx;
    let (name, text) = match (utf8(name), utf8(text)) {
        (Some(n), Some(t)) => (n, t),
        _ => return fail(ctx, IlabStatus::InvalidUtf8, "input was not valid UTF-8"),
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        let ast = match parse(text) {
            Ok(ast) => ast,
            Err(e) => return Err((IlabStatus::ParseError, e.to_string())),
        };
        let report = match evaluate(name, &ast) {
            Ok(report) => report,
            Err(e) => return Err((IlabStatus::EvalError, e.to_string())),
        };
        let all_pass = report.all_pass();
        match serde_json::to_string_pretty(&report) {
            Ok(json) => Ok((json, all_pass)),
            Err(e) => Err((IlabStatus::Internal, e.to_string())),
        }
    }));
    match outcome {
        Ok(Ok((json, all_pass))) => {
            let status = emit(ctx, json, out_json);
            if status == IlabStatus::Ok && !all_pass {
                IlabStatus::AssertionFailed
            } else {
                status
            }
        }
        Ok(Err((status, message))) => fail(ctx, status, &message),
        Err(_) => fail(ctx, IlabStatus::Internal, "internal panic"),
    }
}

// ------------------------------------------------------------------ helpers

unsafe fn utf8<'a>(p: *const c_char) -> Option<&'a str> {
    CStr::from_ptr(p).to_str().ok()
}

fn fail(ctx: &mut IlabContext, status: IlabStatus, message: &str) -> IlabStatus {
    let sanitized = message.replace('\0', " ");
    ctx.last_error = CString::new(sanitized).ok();
    status
}

/// Hands `value` to the caller through `out`; clears the error slot.
fn emit(ctx: &mut IlabContext, value: String, out: *mut *mut c_char) -> IlabStatus {
    match CString::new(value) {
        Ok(owned) => {
            ctx.last_error = None;
            unsafe { *out = owned.into_raw() };
            IlabStatus::Ok
        }
        Err(_) => fail(
            ctx,
            IlabStatus::Internal,
            "output contained an interior NUL byte",
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// RAII guard so tests cannot leak contexts.
    struct Ctx(*mut IlabContext);
    impl Ctx {
        fn new() -> Self {
            let p = ilab_context_new();
            assert!(!p.is_null());
            Ctx(p)
        }
    }
    impl Drop for Ctx {
        fn drop(&mut self) {
            unsafe { ilab_context_free(self.0) }
        }
    }

    fn c(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
        ilab_string_free(p);
        s
    }

    unsafe fn last_error(ctx: *const IlabContext) -> String {
        CStr::from_ptr(ilab_last_error(ctx))
            .to_str()
            .unwrap()
            .to_owned()
    }

    #[test]
    fn version_is_a_static_utf8_string() {
        let v = unsafe { CStr::from_ptr(ilab_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn eval_returns_reduced_rationals() {
        let ctx = Ctx::new();
        let space = c("A2");
        let expr = c("D2^3");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = unsafe { ilab_eval(ctx.0, space.as_ptr(), expr.as_ptr(), &mut out) };
        assert_eq!(status, IlabStatus::Ok);
        assert_eq!(unsafe { take_string(out) }, "-11/12");
        assert_eq!(unsafe { last_error(ctx.0) }, "");
    }

    #[test]
    fn eval_renders_pairing_vectors() {
        let ctx = Ctx::new();
        let space = c("A3_H4");
        let expr = c("12*C4 + 3*K31");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = unsafe { ilab_eval(ctx.0, space.as_ptr(), expr.as_ptr(), &mut out) };
        assert_eq!(status, IlabStatus::Ok);
        assert_eq!(unsafe { take_string(out) }, "(0, 0, 1, 0)");
    }

    #[test]
    fn parse_errors_come_back_with_positions() {
        let ctx = Ctx::new();
        let space = c("A2");
        let expr = c("D2^^3");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = unsafe { ilab_eval(ctx.0, space.as_ptr(), expr.as_ptr(), &mut out) };
        assert_eq!(status, IlabStatus::ParseError);
        assert!(out.is_null());
        let message = unsafe { last_error(ctx.0) };
        assert!(message.contains("column"), "{message}");
    }

    #[test]
    fn eval_errors_name_the_unknown_space() {
        let ctx = Ctx::new();
        let space = c("A9");
        let expr = c("L2");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = unsafe { ilab_eval(ctx.0, space.as_ptr(), expr.as_ptr(), &mut out) };
        assert_eq!(status, IlabStatus::EvalError);
        let message = unsafe { last_error(ctx.0) };
        assert!(message.contains("A9"), "{message}");
    }

    #[test]
    fn null_arguments_are_rejected_without_touching_outputs() {
        let ctx = Ctx::new();
        let space = c("A2");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status =
            unsafe { ilab_eval(ctx.0, space.as_ptr(), std::ptr::null(), &mut out) };
        assert_eq!(status, IlabStatus::NullArgument);
        let status = unsafe {
            ilab_eval(
                std::ptr::null_mut(),
                space.as_ptr(),
                space.as_ptr(),
                &mut out,
            )
        };
        assert_eq!(status, IlabStatus::NullArgument);
    }

    #[test]
    fn invalid_utf8_is_rejected() {
        let ctx = Ctx::new();
        let bad = [0xffu8, 0];
        let expr = c("1");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = unsafe {
            ilab_eval(ctx.0, bad.as_ptr().cast(), expr.as_ptr(), &mut out)
        };
        assert_eq!(status, IlabStatus::InvalidUtf8);
    }

    #[test]
    fn check_reports_json_and_distinguishes_failures() {
        let ctx = Ctx::new();
        let name = c("inline");
        let passing = c("assert A2: L2^3 == 1/2880;");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status =
            unsafe { ilab_check(ctx.0, name.as_ptr(), passing.as_ptr(), &mut out) };
        assert_eq!(status, IlabStatus::Ok);
        let json = unsafe { take_string(out) };
        assert!(json.contains("\"scenario\": \"inline\""), "{json}");
        assert!(json.contains("\"passed\": 1"), "{json}");

        let failing = c("assert A2: L2^3 == 7;");
        let status =
            unsafe { ilab_check(ctx.0, name.as_ptr(), failing.as_ptr(), &mut out) };
        assert_eq!(status, IlabStatus::AssertionFailed);
        let json = unsafe { take_string(out) };
        assert!(json.contains("\"failed\": 1"), "{json}");
    }

    #[test]
    fn check_surfaces_evaluation_errors() {
        let ctx = Ctx::new();
        let name = c("inline");
        let text = c("assert A2: nosuch == 1;");
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = unsafe { ilab_check(ctx.0, name.as_ptr(), text.as_ptr(), &mut out) };
        assert_eq!(status, IlabStatus::EvalError);
        assert!(out.is_null());
        let message = unsafe { last_error(ctx.0) };
        assert!(message.contains("nosuch"), "{message}");
    }

    #[test]
    fn frees_accept_null() {
        unsafe {
            ilab_string_free(std::ptr::null_mut());
            ilab_context_free(std::ptr::null_mut());
            assert_eq!(last_error(std::ptr::null()), "");
        }
    }

    #[test]
    fn committed_header_matches_generated() {
        let generated = include_str!(concat!(env!("OUT_DIR"), "/intersect_lab.h"));
        let committed = include_str!("../include/intersect_lab.h");
        assert_eq!(
            committed, generated,
            "include/intersect_lab.h is stale; copy the generated header from OUT_DIR"
        );
    }
}
