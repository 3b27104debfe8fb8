#ifndef INTERSECT_LAB_H
#define INTERSECT_LAB_H

/* Generated from the Rust source; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible entry point.
typedef enum IlabStatus {
  // The call succeeded.
  ILAB_STATUS_OK = 0,
  // A required pointer argument was NULL.
  ILAB_STATUS_NULL_ARGUMENT = 1,
  // An input string was not valid UTF-8.
  ILAB_STATUS_INVALID_UTF8 = 2,
  // The input text did not parse; see `ilab_last_error`.
  ILAB_STATUS_PARSE_ERROR = 3,
  // Evaluation failed; see `ilab_last_error`.
  ILAB_STATUS_EVAL_ERROR = 4,
  // The scenario evaluated cleanly but at least one assertion failed.
  ILAB_STATUS_ASSERTION_FAILED = 5,
  // A panic was caught at the boundary or the output could not be
  // represented as a C string.
  ILAB_STATUS_INTERNAL = 6,
} IlabStatus;

// Opaque evaluator handle; create with [`ilab_context_new`], release with
// [`ilab_context_free`].
typedef struct IlabContext IlabContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string; never freed by the
// caller.
const char *ilab_version(void);

// Allocates a context with every built-in space ready. Returns NULL only
// if construction panics.
struct IlabContext *ilab_context_new(void);

// Releases a context. NULL is accepted and ignored.
//
// # Safety
// `ctx` must be NULL or a pointer returned by [`ilab_context_new`] that
// has not already been freed.
void ilab_context_free(struct IlabContext *ctx);

// Message of the most recent failure on this context, or an empty string
// when the last call succeeded. The pointer is owned by the context and
// is valid until the next call that takes the context mutably.
//
// # Safety
// `ctx` must be NULL (which yields the empty string) or a live pointer
// from [`ilab_context_new`].
const char *ilab_last_error(const struct IlabContext *ctx);

// Releases a string returned through an out-parameter. NULL is accepted
// and ignored.
//
// # Safety
// `s` must be NULL or a pointer produced by this library through an
// out-parameter, not yet freed.
void ilab_string_free(char *s);

// Evaluates `expr` in the space named `space` and stores the canonical
// textual value (a reduced rational, a coordinate vector, or a canonical
// class form) in `*out_value`. On any non-[`IlabStatus::Ok`] status,
// `*out_value` is set to NULL and `ilab_last_error` describes the
// failure.
//
// # Safety
// `ctx` must be a live pointer from [`ilab_context_new`]; `space` and
// `expr` must be NUL-terminated strings; `out_value` must point to
// writable storage for one pointer.
enum IlabStatus ilab_eval(struct IlabContext *ctx,
                          const char *space,
                          const char *expr,
                          char **out_value);

// Parses and evaluates a scenario text. `name` labels the scenario in
// the report. On [`IlabStatus::Ok`] or [`IlabStatus::AssertionFailed`],
// `*out_json` receives the full JSON report (assertions with positions,
// expected and computed values, and a summary); on other statuses it is
// NULL and `ilab_last_error` describes the failure.
//
// # Safety
// `ctx` must be a live pointer from [`ilab_context_new`]; `name` and
// `text` must be NUL-terminated strings; `out_json` must point to
// writable storage for one pointer.
enum IlabStatus ilab_check(struct IlabContext *ctx,
                           const char *name,
                           const char *text,
                           char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTERSECT_LAB_H */
