#ifndef RT_MORPH_H
#define RT_MORPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call. The first four values agree with the exit codes of the
// `rt-morph` command.
typedef enum RtStatus {
  RT_STATUS_OK = 0,
  // Malformed input, or input violating an invariant.
  RT_STATUS_INVALID = 1,
  // The two representations admit no morph.
  RT_STATUS_NOT_MORPHABLE = 2,
  // An internal consistency check failed.
  RT_STATUS_INTERNAL = 3,
  // A required pointer argument was NULL.
  RT_STATUS_NULL_ARGUMENT = 4,
  // A string argument was not valid UTF-8.
  RT_STATUS_INVALID_UTF8 = 5,
  // An index was out of range.
  RT_STATUS_OUT_OF_RANGE = 6,
  // The library panicked; no object was modified.
  RT_STATUS_PANIC = 7,
} RtStatus;

// A piecewise linear morph given by its keyframes.
typedef struct RtPlan RtPlan;

// A representation: one right triangle per vertex.
typedef struct RtRepresentation RtRepresentation;

// Corner coordinates of one triangle, rounded to double precision.
typedef struct RtTriangle {
  double xl;
  double xr;
  double yb;
  double yt;
} RtTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failed call on this thread, or NULL if the
// last call succeeded. Valid until the next call on this thread.
const char *rt_last_error(void);

// # Safety
// `s` is NULL or a string returned by this library, not yet freed.
void rt_string_free(char *s);

// Parse and validate a representation from its JSON form.
//
// # Safety
// `json` is NULL or a NUL-terminated string; `out` is NULL or writable.
enum RtStatus rt_representation_from_json(const char *json, struct RtRepresentation **out);

// Build the representation of a wood in the canonical frame. With a NULL
// `labeling_json` the smallest topological labeling is used.
//
// # Safety
// String arguments are NULL or NUL-terminated; `out` is NULL or writable.
enum RtStatus rt_representation_construct(const char *graph_json,
                                          const char *wood_json,
                                          const char *labeling_json,
                                          struct RtRepresentation **out);

// # Safety
// `r` is NULL or a live handle; `out` is NULL or writable.
enum RtStatus rt_representation_to_json(const struct RtRepresentation *r, char **out);

// Number of vertices, or 0 for NULL.
//
// # Safety
// `r` is NULL or a live handle.
size_t rt_representation_vertex_count(const struct RtRepresentation *r);

// # Safety
// `r` is NULL or a live handle; `out` is NULL or writable.
enum RtStatus rt_representation_triangle(const struct RtRepresentation *r,
                                         size_t vertex,
                                         struct RtTriangle *out);

// Check every condition of a representation. Returns `RT_STATUS_OK` when
// it holds and `RT_STATUS_INVALID` otherwise; the diagnostics, one per
// line, go to `diagnostics` unless it is NULL.
//
// # Safety
// `r` is NULL or a live handle; `diagnostics` is NULL or writable.
enum RtStatus rt_representation_validate(const struct RtRepresentation *r, char **diagnostics);

// The Schnyder woods the representation belongs to, as JSON.
//
// # Safety
// `r` is NULL or a live handle; `out` is NULL or writable.
enum RtStatus rt_representation_wood_set(const struct RtRepresentation *r, char **out);

// # Safety
// `r` is NULL or a handle not yet freed.
void rt_representation_free(struct RtRepresentation *r);

// Decide whether `a` morphs into `b`. The decision JSON goes to `out`; the
// status is `RT_STATUS_OK` or `RT_STATUS_NOT_MORPHABLE` accordingly.
//
// # Safety
// `a`, `b` are NULL or live handles; `out` is NULL or writable.
enum RtStatus rt_decide(const struct RtRepresentation *a,
                        const struct RtRepresentation *b,
                        char **out);

// A piecewise linear morph from `a` to `b`.
//
// # Safety
// `a`, `b` are NULL or live handles; `out` is NULL or writable.
enum RtStatus rt_morph(const struct RtRepresentation *a,
                       const struct RtRepresentation *b,
                       struct RtPlan **out);

// Parse a plan and check that each keyframe is valid and consecutive
// keyframes are linear morphs.
//
// # Safety
// `json` is NULL or NUL-terminated; `out` is NULL or writable.
enum RtStatus rt_plan_from_json(const char *json, struct RtPlan **out);

// # Safety
// `p` is NULL or a live handle; `out` is NULL or writable.
enum RtStatus rt_plan_to_json(const struct RtPlan *p, char **out);

// Number of linear morphs, or 0 for NULL.
//
// # Safety
// `p` is NULL or a live handle.
size_t rt_plan_step_count(const struct RtPlan *p);

// A copy of keyframe `index`, from 0 to the step count inclusive.
//
// # Safety
// `p` is NULL or a live handle; `out` is NULL or writable.
enum RtStatus rt_plan_keyframe(const struct RtPlan *p, size_t index, struct RtRepresentation **out);

// One animated SVG document of the plan.
//
// # Safety
// `p` is NULL or a live handle; `out` is NULL or writable.
enum RtStatus rt_plan_render_svg(const struct RtPlan *p,
                                 uint32_t width,
                                 uint32_t height,
                                 uint32_t margin,
                                 uint32_t fps,
                                 char **out);

// # Safety
// `p` is NULL or a handle not yet freed.
void rt_plan_free(struct RtPlan *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RT_MORPH_H */
