#ifndef SYMPCOH_H
#define SYMPCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SympcohStatus {
  SYMPCOH_STATUS_OK = 0,
  SYMPCOH_STATUS_NULL_POINTER = 1,
  SYMPCOH_STATUS_INVALID_UTF8 = 2,
  SYMPCOH_STATUS_PARSE = 3,
  SYMPCOH_STATUS_INVALID_ALGEBRA = 4,
  SYMPCOH_STATUS_INVALID_STRUCTURE = 5,
  SYMPCOH_STATUS_OUT_OF_RANGE = 6,
  SYMPCOH_STATUS_UNKNOWN_NAME = 7,
  SYMPCOH_STATUS_PANIC = 8,
} SympcohStatus;

/**
 * Validated almost-complex structure.
 */
typedef struct SympcohAcs SympcohAcs;

/**
 * Lie algebra given by structure equations.
 */
typedef struct SympcohAlgebra SympcohAlgebra;

/**
 * Cohomology table of a symplectic structure.
 */
typedef struct SympcohReport SympcohReport;

/**
 * Validated symplectic structure.
 */
typedef struct SympcohSymplectic SympcohSymplectic;

/**
 * One degree of a cohomology report.
 */
typedef struct SympcohReportRow {
  size_t k;
  size_t b;
  size_t h_dlambda;
  size_t h_bc;
  size_t h_a;
  int64_t delta_tilde;
} SympcohReportRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Free with
 * [`sympcoh_string_free`].
 */
char *sympcoh_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void sympcoh_string_free(char *s);

/**
 * Parses and validates Salamon structure equations such as `(0,0,0,23)`.
 *
 * # Safety
 * `equations` must be a NUL-terminated string, `out` a valid pointer.
 */
enum SympcohStatus sympcoh_algebra_parse(const char *equations, struct SympcohAlgebra **out);

/**
 * Algebra of a built-in catalog entry.
 *
 * # Safety
 * `name` must be a NUL-terminated string, `out` a valid pointer.
 */
enum SympcohStatus sympcoh_algebra_catalog(const char *name, struct SympcohAlgebra **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library, not used afterwards.
 */
void sympcoh_algebra_free(struct SympcohAlgebra *g);

/**
 * Dimension of the algebra; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sympcoh_algebra_dim(const struct SympcohAlgebra *g);

/**
 * Invariant Betti number `b_k`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SympcohStatus sympcoh_algebra_betti(const struct SympcohAlgebra *g, size_t k, size_t *out);

/**
 * Symplectic structure from a 2-form such as `12+34`.
 *
 * # Safety
 * `g` must be a live handle, `omega` a NUL-terminated string, `out` valid.
 */
enum SympcohStatus sympcoh_symplectic_new(const struct SympcohAlgebra *g,
                                          const char *omega,
                                          struct SympcohSymplectic **out);

/**
 * # Safety
 * `s` must be NULL or a handle from this library, not used afterwards.
 */
void sympcoh_symplectic_free(struct SympcohSymplectic *s);

/**
 * Computes the full cohomology table.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum SympcohStatus sympcoh_symplectic_report(const struct SympcohSymplectic *s,
                                             struct SympcohReport **out);

/**
 * # Safety
 * `r` must be NULL or a handle from this library, not used afterwards.
 */
void sympcoh_report_free(struct SympcohReport *r);

/**
 * Number of rows, `dim + 1`; 0 for NULL.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
size_t sympcoh_report_rows(const struct SympcohReport *r);

/**
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum SympcohStatus sympcoh_report_row(const struct SympcohReport *r,
                                      size_t k,
                                      struct SympcohReportRow *out);

/**
 * Hard Lefschetz verdict.
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum SympcohStatus sympcoh_report_hlc(const struct SympcohReport *r, bool *out);

/**
 * Almost-complex structure from a matrix such as `[[0,-1],[1,0]]`.
 *
 * # Safety
 * `g` must be a live handle, `j` a NUL-terminated string, `out` valid.
 */
enum SympcohStatus sympcoh_acs_new(const struct SympcohAlgebra *g,
                                   const char *j,
                                   struct SympcohAcs **out);

/**
 * # Safety
 * `a` must be NULL or a handle from this library, not used afterwards.
 */
void sympcoh_acs_free(struct SympcohAcs *a);

/**
 * Dimension of `H_J^{(p,q),(q,p)}`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum SympcohStatus sympcoh_acs_h_j(const struct SympcohAcs *a, size_t p, size_t q, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMPCOH_H */
