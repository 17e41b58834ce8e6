/* C interface to the chowlab engine. Generated by cbindgen; do not edit. */

#ifndef CHOWLAB_H
#define CHOWLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum ChowlabStatus {
  ChowlabStatus_Ok = 0,
  ChowlabStatus_NullArgument = 1,
  ChowlabStatus_InvalidUtf8 = 2,
  ChowlabStatus_ParseError = 3,
  ChowlabStatus_InvalidRank = 4,
  ChowlabStatus_InvalidSequence = 5,
  ChowlabStatus_Internal = 6,
} ChowlabStatus;

/**
 * Opaque poset handle: a validated poset with its weak rank.
 */
typedef struct ChowlabPoset ChowlabPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a poset file (JSON with `elements`, `covers`, `rank`).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int chowlab_poset_from_json(const char *json, struct ChowlabPoset **out);

/**
 * Builds a named family, e.g. `chain(3)`, `boolean(4)`, `product(2,2)`,
 * `nonpure(m=5)`, `nonlogconcave(7,9)`, `random(seed,max_rank,max_width)`.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int chowlab_poset_from_family(const char *spec, struct ChowlabPoset **out);

/**
 * Releases a handle. NULL is a no-op.
 *
 * # Safety
 * `handle` must come from a `chowlab_poset_*` constructor and not be used
 * afterwards.
 */
void chowlab_poset_free(struct ChowlabPoset *handle);

/**
 * Number of elements.
 *
 * # Safety
 * `handle` must be a live handle.
 */
size_t chowlab_poset_len(const struct ChowlabPoset *handle);

/**
 * Weak rank of the poset (rank of the top element).
 *
 * # Safety
 * `handle` must be a live handle.
 */
uint64_t chowlab_poset_rank(const struct ChowlabPoset *handle);

/**
 * 1 if every cover has rank gap exactly one, else 0.
 *
 * # Safety
 * `handle` must be a live handle.
 */
int chowlab_poset_is_ranked(const struct ChowlabPoset *handle);

/**
 * Chow polynomial coefficients as a CSV row `h_0,h_1,...`, caller-owned.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer; release the
 * result with `chowlab_string_free`.
 */
int chowlab_chow_csv(const struct ChowlabPoset *handle, char **out);

/**
 * h-vector of the SFY monomial order ideal as a CSV row, caller-owned.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer; release the
 * result with `chowlab_string_free`.
 */
int chowlab_sfy_h_csv(const struct ChowlabPoset *handle, char **out);

/**
 * SFY monomials, one `x[p]^l * ...` line per monomial, caller-owned.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer; release the
 * result with `chowlab_string_free`.
 */
int chowlab_sfy_monomials(const struct ChowlabPoset *handle, char **out);

/**
 * DOT rendering of the Hasse diagram, caller-owned.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer; release the
 * result with `chowlab_string_free`.
 */
int chowlab_poset_to_dot(const struct ChowlabPoset *handle, char **out);

/**
 * Canonical poset file (JSON), caller-owned.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer; release the
 * result with `chowlab_string_free`.
 */
int chowlab_poset_to_json(const struct ChowlabPoset *handle, char **out);

/**
 * Exact number of real roots (with multiplicity) of the Chow polynomial.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
int chowlab_chow_real_roots(const struct ChowlabPoset *handle, uint64_t *out);

/**
 * 1 through `out` iff SFY is a monomial order ideal (it always is; exposed
 * as a checkable claim).
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
int chowlab_sfy_is_order_ideal(const struct ChowlabPoset *handle, int *out);

/**
 * Pureness of SFY: `out_pure` gets 0/1; on 1, `out_degree` gets the common
 * maximal degree. For ranked posets the expected degree
 * `floor((n-1)/2)` is enforced.
 *
 * # Safety
 * `handle` must be a live handle; `out_pure` and `out_degree` must be
 * valid pointers.
 */
int chowlab_sfy_is_pure(const struct ChowlabPoset *handle, int *out_pure, uint64_t *out_degree);

/**
 * Log-concavity of a CSV sequence of integers; the verdict lands in `out`.
 *
 * # Safety
 * `csv` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int chowlab_seq_is_log_concave(const char *csv, int *out);

/**
 * Macaulay O-sequence test for a CSV sequence starting with 1; the verdict
 * lands in `out`.
 *
 * # Safety
 * `csv` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int chowlab_seq_is_o_sequence(const char *csv, int *out);

/**
 * SI-sequence test for a CSV sequence; the verdict lands in `out`.
 *
 * # Safety
 * `csv` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int chowlab_seq_is_si(const char *csv, int *out);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must come from a chowlab function and not be used afterwards.
 */
void chowlab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHOWLAB_H */
