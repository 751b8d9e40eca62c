/* C interface to the orthogonal-apartment toolkit.
 *
 * Every call returns an oapt_status; on failure oapt_last_error() describes
 * the problem (per thread, valid until the next failing call). Strings
 * returned through char** are owned by the caller and released with
 * oapt_string_free. Handles are released with their *_free function;
 * passing NULL to a *_free function is a no-op.
 *
 * k-subsets of {1..n} are 64-bit masks with index i in bit i-1.
 * Gaussian rationals cross the boundary as int64 quadruples
 * (re_num, re_den, im_num, im_den).
 */
#ifndef OAPT_OAPT_H
#define OAPT_OAPT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define OAPT_API __attribute__((visibility("default")))
#else
#define OAPT_API
#endif

typedef enum oapt_status {
  OAPT_OK = 0,
  OAPT_INVALID_ARGUMENT = 1,
  OAPT_DIMENSION_MISMATCH = 2,
  OAPT_PRECONDITION = 3,
  OAPT_EXCEPTIONAL = 4,
  OAPT_INCONSISTENT = 5,
  OAPT_PARSE = 6,
  OAPT_INTERNAL = 7
} oapt_status;

typedef enum oapt_format { OAPT_FORMAT_JSON = 0, OAPT_FORMAT_CSV = 1 } oapt_format;

typedef struct oapt_config oapt_config;
typedef struct oapt_report oapt_report;
typedef struct oapt_subspace oapt_subspace;
typedef struct oapt_transform oapt_transform;
typedef struct oapt_scaffold oapt_scaffold;

OAPT_API const char* oapt_last_error(void);
OAPT_API const char* oapt_status_name(oapt_status s);
OAPT_API void oapt_string_free(char* s);

/* ---- combinatorics ---------------------------------------------------- */

/* c(m) = (k-m)^2 + m(n-2k+m). */
OAPT_API oapt_status oapt_c_value(int n, int k, int m, int64_t* out);
/* Brute-force number of complementary subsets containing both x and y. */
OAPT_API oapt_status oapt_count_complementary(int n, int k, uint64_t x, uint64_t y, int64_t* out);
/* "GENERIC", "N2K1", "N2K2", "N2K" or "EXCEPTIONAL"; static storage. */
OAPT_API oapt_status oapt_case_tag(int n, int k, const char** out);
/* Candidate values of dim(X n Y) recovered from counts alone. Writes at most
 * capacity values and the full candidate count to *count.
 * Fails with OAPT_EXCEPTIONAL at (6,2) and (6,4). */
OAPT_API oapt_status oapt_classify_pair(int n, int k, uint64_t x, uint64_t y, int* candidates,
                                        size_t capacity, size_t* count);

/* ---- subspaces and transforms ----------------------------------------- */

/* Span of `rows` vectors of C^n given as rows*n quadruples. */
OAPT_API oapt_status oapt_subspace_new(size_t n, size_t rows, const int64_t* quads,
                                       oapt_subspace** out);
OAPT_API void oapt_subspace_free(oapt_subspace* s);
OAPT_API oapt_status oapt_subspace_dim(const oapt_subspace* s, size_t* out);
OAPT_API oapt_status oapt_subspace_to_string(const oapt_subspace* s, char** out);
OAPT_API oapt_status oapt_subspace_equal(const oapt_subspace* a, const oapt_subspace* b, int* out);
OAPT_API oapt_status oapt_subspace_intersect(const oapt_subspace* a, const oapt_subspace* b,
                                             oapt_subspace** out);
OAPT_API oapt_status oapt_subspace_orthocomplement(const oapt_subspace* a, oapt_subspace** out);
/* Compatibility through the canonical decomposition. */
OAPT_API oapt_status oapt_compatible(const oapt_subspace* a, const oapt_subspace* b, int* out);

/* X -> [perp](conj^c(X) M) for an n x n matrix M (n*n quadruples, row-major)
 * with M* M = c I, c > 0. */
OAPT_API oapt_status oapt_transform_new(size_t n, const int64_t* quads, int conjugate, int perp,
                                        oapt_transform** out);
OAPT_API void oapt_transform_free(oapt_transform* t);
OAPT_API oapt_status oapt_transform_apply(const oapt_transform* t, const oapt_subspace* x,
                                          oapt_subspace** out);
OAPT_API oapt_status oapt_transform_to_string(const oapt_transform* t, char** out);
/* Samples t on the k = 1 probe lines and rebuilds an operator from them. */
OAPT_API oapt_status oapt_transform_recover_k1(const oapt_transform* t, oapt_transform** out);

/* ---- scaffolds --------------------------------------------------------- */

OAPT_API oapt_status oapt_scaffold_parse(const char* json, oapt_scaffold** out);
/* kind: "identity", "single-swap", "single-perp" (n = 2k) or "base-mixing". */
OAPT_API oapt_status oapt_scaffold_example(int n, int k, const char* kind, oapt_scaffold** out);
OAPT_API void oapt_scaffold_free(oapt_scaffold* s);
OAPT_API oapt_status oapt_scaffold_to_json(const oapt_scaffold* s, char** out);
/* *consistent is 1 for INDUCED-CONSISTENT, 0 for NON-INDUCED; *witness may be NULL. */
OAPT_API oapt_status oapt_scaffold_detect(const oapt_scaffold* s, int* consistent, char** witness);
OAPT_API oapt_status oapt_scaffold_verify(const oapt_scaffold* s, oapt_report** out);

/* ---- runs and reports -------------------------------------------------- */

OAPT_API oapt_status oapt_config_new(oapt_config** out);
OAPT_API void oapt_config_free(oapt_config* c);
OAPT_API oapt_status oapt_config_set_n_range(oapt_config* c, int n_min, int n_max);
OAPT_API oapt_status oapt_config_add_k(oapt_config* c, int k);
OAPT_API oapt_status oapt_config_add_suite(oapt_config* c, const char* suite);
OAPT_API oapt_status oapt_config_set_seed(oapt_config* c, uint64_t seed);
OAPT_API oapt_status oapt_config_set_threads(oapt_config* c, unsigned threads);
OAPT_API oapt_status oapt_config_echo(const oapt_config* c, char** out);
/* Space-separated suite names. Static storage. */
OAPT_API const char* oapt_suite_names(void);
OAPT_API const char* oapt_scope_banner(void);

OAPT_API oapt_status oapt_verify(const oapt_config* c, oapt_report** out);
OAPT_API void oapt_report_free(oapt_report* r);
OAPT_API oapt_status oapt_report_counts(const oapt_report* r, size_t* passed, size_t* failed,
                                        size_t* skipped);
/* timing = 0 omits the millis field so equal configs give equal bytes. */
OAPT_API oapt_status oapt_report_render(const oapt_report* r, oapt_format format, int timing,
                                        char** out);

/* ks may be NULL when nk = 0 (every k with 1 < k < n-1). */
OAPT_API oapt_status oapt_scan_csv(int n_min, int n_max, const int* ks, size_t nk, char** out);
OAPT_API oapt_status oapt_witness_inexact(int n, int k, int i, int j, char** text, int* ok);
OAPT_API oapt_status oapt_witness_compatible_triple(int n, int k, int count, char** text, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* OAPT_OAPT_H */
