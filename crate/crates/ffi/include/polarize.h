#ifndef POLARIZE_H
#define POLARIZE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Values 2 to 5 match the command-line exit statuses.
 */
typedef enum PolarizeStatus {
  POLARIZE_STATUS_OK = 0,
  POLARIZE_STATUS_NULL_ARGUMENT = 1,
  POLARIZE_STATUS_PARSE = 2,
  POLARIZE_STATUS_DEGREE_OR_FRAME = 3,
  POLARIZE_STATUS_ZERO_WEIGHT = 4,
  POLARIZE_STATUS_VERIFY = 5,
  POLARIZE_STATUS_INVALID_UTF8 = 6,
  POLARIZE_STATUS_OUT_OF_RANGE = 7,
  POLARIZE_STATUS_PANIC = 8,
} PolarizeStatus;

typedef enum PolarizeKind {
  POLARIZE_KIND_CURVE = 0,
  POLARIZE_KIND_RECT = 1,
  POLARIZE_KIND_TRI = 2,
} PolarizeKind;

/**
 * Opaque control net.
 */
typedef struct PolarizeNet PolarizeNet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Control polygon of a curve in `t`. `denom` and `frame` ("r,s") may be
 * null; a negative `degree_m` means the degree of the map. With
 * `homogeneous` set, coordinates are left multiplied by the weights and zero
 * weights are allowed.
 *
 * # Safety
 * `coords` must point to `n_coords` valid C strings; string arguments must be
 * null or valid C strings; `out` must be writable.
 */
enum PolarizeStatus polarize_curve_net(const char *const *coords,
                                       size_t n_coords,
                                       const char *denom,
                                       int64_t degree_m,
                                       const char *frame,
                                       bool homogeneous,
                                       struct PolarizeNet **out);

/**
 * Tensor-product net in `u, v`. Negative `p` or `q` means the map's own
 * bidegree; frames are "r,s" or null for `(0, 1)`.
 *
 * # Safety
 * As for `polarize_curve_net`.
 */
enum PolarizeStatus polarize_rect_net(const char *const *coords,
                                      size_t n_coords,
                                      const char *denom,
                                      int64_t p,
                                      int64_t q,
                                      const char *frame_u,
                                      const char *frame_v,
                                      bool homogeneous,
                                      struct PolarizeNet **out);

/**
 * Triangular net in `u, v`. `frame` is "(a,b);(c,d);(e,f)" or null for
 * the standard frame `((1,0), (0,1), (0,0))`.
 *
 * # Safety
 * As for `polarize_curve_net`.
 */
enum PolarizeStatus polarize_tri_net(const char *const *coords,
                                     size_t n_coords,
                                     const char *denom,
                                     int64_t degree_m,
                                     const char *frame,
                                     bool homogeneous,
                                     struct PolarizeNet **out);

/**
 * Parse a net from its JSON form.
 *
 * # Safety
 * `json` must be a valid C string and `out` writable.
 */
enum PolarizeStatus polarize_net_from_json(const char *json, struct PolarizeNet **out);

/**
 * # Safety
 * `net` must be null or a handle returned by this library, not yet freed.
 */
void polarize_net_free(struct PolarizeNet *net);

/**
 * Number of control points; 0 for a null handle.
 *
 * # Safety
 * `net` must be null or a live handle.
 */
size_t polarize_net_len(const struct PolarizeNet *net);

/**
 * Number of coordinates per point (weights excluded); 0 for null.
 *
 * # Safety
 * `net` must be null or a live handle.
 */
size_t polarize_net_dim(const struct PolarizeNet *net);

/**
 * # Safety
 * `net` must be a live handle and `out` writable.
 */
enum PolarizeStatus polarize_net_kind(const struct PolarizeNet *net, enum PolarizeKind *out);

/**
 * Whether coordinates are homogeneous (not divided by the weights).
 *
 * # Safety
 * `net` must be null or a live handle.
 */
bool polarize_net_is_homogeneous(const struct PolarizeNet *net);

/**
 * Net index of point `n` in output order, written to `out[0..3]`; unused
 * trailing entries are set to 0. `arity` receives 1, 2 or 3 if not null.
 *
 * # Safety
 * `net` must be live, `out` must have room for 3 values.
 */
enum PolarizeStatus polarize_net_index(const struct PolarizeNet *net,
                                       size_t n,
                                       size_t *out,
                                       size_t *arity);

/**
 * Coordinate `c` of point `n` as an exact rational string "n" or "n/d".
 *
 * # Safety
 * `net` must be live and `out` writable.
 */
enum PolarizeStatus polarize_net_coord(const struct PolarizeNet *net,
                                       size_t n,
                                       size_t c,
                                       char **out);

/**
 * Weight of point `n` as an exact rational string.
 *
 * # Safety
 * `net` must be live and `out` writable.
 */
enum PolarizeStatus polarize_net_weight(const struct PolarizeNet *net, size_t n, char **out);

/**
 * Coordinates of point `n` rounded to doubles, written to `out[0..dim]`,
 * followed by the weight at `out[dim]`.
 *
 * # Safety
 * `net` must be live and `out` must have room for `dim + 1` values.
 */
enum PolarizeStatus polarize_net_point_f64(const struct PolarizeNet *net, size_t n, double *out);

/**
 * Canonical JSON document of the net.
 *
 * # Safety
 * `net` must be live and `out` writable.
 */
enum PolarizeStatus polarize_net_to_json(const struct PolarizeNet *net, char **out);

/**
 * Brace listing `{{x, y, w}, ...}`; `label` may be null.
 *
 * # Safety
 * `net` must be live, `label` null or a valid C string, `out` writable.
 */
enum PolarizeStatus polarize_net_to_paper(const struct PolarizeNet *net,
                                          const char *label,
                                          char **out);

/**
 * OBJ mesh sampled on a `samples`-per-axis grid, decimals with `precision`
 * significant digits. Fails if the weight vanishes at a sample unless
 * `skip_singular` is set.
 *
 * # Safety
 * `net` must be live and `out` writable.
 */
enum PolarizeStatus polarize_net_to_obj(const struct PolarizeNet *net,
                                        size_t samples,
                                        size_t precision,
                                        bool skip_singular,
                                        char **out);

/**
 * New net keeping only the listed coordinates (0-based), weights unchanged.
 *
 * # Safety
 * `net` must be live, `keep` must point to `n_keep` values (may be null if
 * `n_keep` is 0), `out` writable.
 */
enum PolarizeStatus polarize_net_project(const struct PolarizeNet *net,
                                         const size_t *keep,
                                         size_t n_keep,
                                         struct PolarizeNet **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void polarize_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *polarize_last_error(void);

/**
 * Library version, a static string.
 */
const char *polarize_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLARIZE_H */
