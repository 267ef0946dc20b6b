#ifndef MONODROMY_H
#define MONODROMY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MdLevel {
  MD_LEVEL_L1 = 1,
  MD_LEVEL_L2 = 2,
} MdLevel;

typedef enum MdStatus {
  MD_STATUS_OK = 0,
  MD_STATUS_REFUTED = 1,
  MD_STATUS_INCONCLUSIVE = 2,
  MD_STATUS_INVALID_ARGUMENT = 3,
  MD_STATUS_SCHEMA = 4,
  MD_STATUS_NULL_POINTER = 5,
  MD_STATUS_INTERNAL = 6,
} MdStatus;

/**
 * Opaque factorization handle.
 */
typedef struct MdFactorization MdFactorization;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the first family on the one-boundary surface of genus `genus` (≥ 3).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum MdStatus md_build_thm1(uint32_t genus, struct MdFactorization **out);

/**
 * Builds Û_n of genus `genus` (≥ 4) with `n ≥ 1`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum MdStatus md_build_thm2(uint32_t genus, uint32_t n, struct MdFactorization **out);

/**
 * # Safety
 * `json` must be a nul-terminated string; `out` as in [`md_build_thm1`].
 */
enum MdStatus md_factorization_from_json(const char *json, struct MdFactorization **out);

/**
 * # Safety
 * `h` must come from this library; `out` receives a string to free with [`md_string_free`].
 */
enum MdStatus md_factorization_to_json(const struct MdFactorization *h, char **out);

/**
 * Number of cycles, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or come from this library.
 */
size_t md_factorization_len(const struct MdFactorization *h);

/**
 * Checks the lifted relator: `Ok` when verified at `level` (an [`MdLevel`]
 * value), otherwise `Refuted` or `Inconclusive`. A `word_budget` of 0 keeps
 * the default.
 *
 * # Safety
 * `h` must come from this library.
 */
enum MdStatus md_verify(const struct MdFactorization *h, uint32_t level, size_t word_budget);

/**
 * Invariant report as JSON.
 *
 * # Safety
 * `h` must come from this library; `out` receives a string to free with [`md_string_free`].
 */
enum MdStatus md_report_json(const struct MdFactorization *h, char **out);

/**
 * Abelianization and coset enumeration of the total-space group as JSON.
 *
 * # Safety
 * `h` must come from this library; `out` receives a string to free with [`md_string_free`].
 */
enum MdStatus md_pi1_json(const struct MdFactorization *h, size_t max_cosets, char **out);

/**
 * Named curves on the surface of genus `genus` with `boundary` components.
 *
 * # Safety
 * `out` receives a string to free with [`md_string_free`].
 */
enum MdStatus md_catalog_json(uint32_t genus, uint32_t boundary, char **out);

/**
 * # Safety
 * `h` must be null or a handle from this library not yet freed.
 */
void md_factorization_free(struct MdFactorization *h);

/**
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void md_string_free(char *s);

/**
 * Message of the last failure on this thread; empty after a success.
 * Valid until the next library call on the same thread.
 */
const char *md_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONODROMY_H */
