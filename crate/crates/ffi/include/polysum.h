#ifndef POLYSUM_H
#define POLYSUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes.
typedef enum PolysumStatus {
  POLYSUM_STATUS_OK = 0,
  POLYSUM_STATUS_NULL_POINTER = 1,
  POLYSUM_STATUS_INVALID_UTF8 = 2,
  // Malformed JSON or rational.
  POLYSUM_STATUS_PARSE = 3,
  // Well-formed input the operation does not accept.
  POLYSUM_STATUS_INVALID_INPUT = 4,
  // General position was not reached.
  POLYSUM_STATUS_PERTURBATION_FAILED = 5,
  POLYSUM_STATUS_BUFFER_TOO_SMALL = 6,
  // A bug: an internal invariant failed or a panic was caught.
  POLYSUM_STATUS_INTERNAL = 7,
} PolysumStatus;

// A polytope with its face lattice.
typedef struct PolysumPolytope PolysumPolytope;

// A Minkowski sum together with its face decomposition.
typedef struct PolysumSum PolysumSum;

// The message of the last failed call on this thread, or null. The
// returned string belongs to the caller.
char *polysum_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void polysum_string_free(char *s);

// Parses polytope JSON (`{"ambient_dim": n, "vertices": [["p/q", ...], ...]}`).
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum PolysumStatus polysum_polytope_from_json(const char *json, struct PolysumPolytope **out);

// # Safety
// `p` must be null or a handle from this library, not yet freed.
void polysum_polytope_free(struct PolysumPolytope *p);

// Vertices as polytope JSON.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum PolysumStatus polysum_polytope_to_json(const struct PolysumPolytope *p, char **out);

// Affine dimension.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum PolysumStatus polysum_polytope_dim(const struct PolysumPolytope *p, size_t *out);

// Writes `f_0, ..., f_{d-1}` into `buf` and their number into `len`. A
// point has the single entry 1. Returns `BufferTooSmall` (with `len` set)
// when `cap` is too small.
//
// # Safety
// `p` must be a live handle; `buf` must hold `cap` entries; `len` must be
// writable.
enum PolysumStatus polysum_polytope_f_vector(const struct PolysumPolytope *p,
                                             uint64_t *buf,
                                             size_t cap,
                                             size_t *len);

// Polar dual; the origin must be interior.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum PolysumStatus polysum_polytope_dual(const struct PolysumPolytope *p,
                                         struct PolysumPolytope **out);

// Whether the polytope is perfectly centered.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum PolysumStatus polysum_polytope_perfectly_centered(const struct PolysumPolytope *p, bool *out);

// Runs a single-polytope identity (`euler`, `bb`, `dsrshort`, `nestthm`,
// `fvthm`, `pc`). Writes the JSON list of reports and whether all passed.
//
// # Safety
// `p` must be a live handle; `identity` a nul-terminated string; the out
// pointers writable.
enum PolysumStatus polysum_polytope_verify(const struct PolysumPolytope *p,
                                           const char *identity,
                                           char **out_json,
                                           bool *out_pass);

// Minkowski sum of `n` polytopes, decomposed.
//
// # Safety
// `polys` must point to `n` live handles; `out` must be writable.
enum PolysumStatus polysum_sum_new(const struct PolysumPolytope *const *polys,
                                   size_t n,
                                   struct PolysumSum **out);

// Rotates all summands but the first until the sum is relatively in
// general position; `max_retries` of 0 selects the default.
//
// # Safety
// `polys` must point to `n` live handles; `out` must be writable.
enum PolysumStatus polysum_sum_perturbed(const struct PolysumPolytope *const *polys,
                                         size_t n,
                                         uint64_t seed,
                                         size_t max_retries,
                                         struct PolysumSum **out);

// # Safety
// `s` must be null or a handle from this library, not yet freed.
void polysum_sum_free(struct PolysumSum *s);

// A new handle for the sum polytope itself.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum PolysumStatus polysum_sum_polytope(const struct PolysumSum *s, struct PolysumPolytope **out);

// Whether every facet of the sum decomposes exactly.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum PolysumStatus polysum_sum_general_position(const struct PolysumSum *s, bool *out);

// Runs a sum identity (`mainthm`, `maincor`, `maincor2`, `delta`,
// `lemface`, `summand`). `a` is the `maincor` parameter as `"p/q"`; null
// means 1. Writes the JSON list of reports and whether all passed.
//
// # Safety
// `s` must be a live handle; `identity` and non-null `a` nul-terminated
// strings; the out pointers writable.
enum PolysumStatus polysum_sum_verify(const struct PolysumSum *s,
                                      const char *identity,
                                      const char *a,
                                      char **out_json,
                                      bool *out_pass);

#endif  /* POLYSUM_H */
