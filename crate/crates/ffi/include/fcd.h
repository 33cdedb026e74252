#ifndef FCD_H
#define FCD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FcdStatus {
  FCD_STATUS_OK = 0,
  FCD_STATUS_NULL_POINTER = 1,
  FCD_STATUS_INVALID_ARGUMENT = 2,
  FCD_STATUS_PARSE_ERROR = 3,
  FCD_STATUS_NOT_APPLICABLE = 4,
  FCD_STATUS_BUDGET_EXCEEDED = 5,
  FCD_STATUS_TIMEOUT = 6,
  FCD_STATUS_PANIC = 7,
} FcdStatus;

/**
 * Opaque instance handle.
 */
typedef struct FcdInstance FcdInstance;

/**
 * Opaque solve result.
 */
typedef struct FcdResult FcdResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from this thread.
 */
const char *fcd_last_error(void);

/**
 * Parses an instance in the text format.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum FcdStatus fcd_instance_parse(const char *text, struct FcdInstance **out);

/**
 * Builds an instance from arrays: `colors[n]` and `edges[2 * m]` as
 * endpoint pairs.
 *
 * # Safety
 * The arrays must hold the stated number of elements and `out` must be valid.
 */
enum FcdStatus fcd_instance_new(size_t n,
                                size_t num_colors,
                                const size_t *colors,
                                size_t m,
                                const size_t *edges,
                                size_t k,
                                size_t ell,
                                struct FcdInstance **out);

/**
 * # Safety
 * `instance` must come from this library and not be used afterwards.
 */
void fcd_instance_free(struct FcdInstance *instance);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
size_t fcd_instance_num_vertices(const struct FcdInstance *instance);

/**
 * Canonical text of the instance; release with [`fcd_string_free`].
 *
 * # Safety
 * `instance` must be a live handle and `out` valid.
 */
enum FcdStatus fcd_instance_write(const struct FcdInstance *instance, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void fcd_string_free(char *s);

/**
 * Decides the instance with the named algorithm (`"auto"`, `"brute"`, ...).
 * `budget` of 0 selects the default work budget.
 *
 * # Safety
 * `instance` must be a live handle, `algorithm` a nul-terminated string and
 * `out` valid.
 */
enum FcdStatus fcd_solve(const struct FcdInstance *instance,
                         const char *algorithm,
                         uint64_t budget,
                         struct FcdResult **out);

/**
 * # Safety
 * `result` must be null or a live handle.
 */
bool fcd_result_feasible(const struct FcdResult *result);

/**
 * # Safety
 * `result` must be null or a live handle.
 */
uint64_t fcd_result_work(const struct FcdResult *result);

/**
 * Name of the solver that ran; owned by the result.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
const char *fcd_result_algorithm(const struct FcdResult *result);

/**
 * Copies the witness into `assignment[n]` (district per vertex). Returns
 * `FCD_STATUS_NOT_APPLICABLE` if the solver produced no witness.
 *
 * # Safety
 * `result` must be a live handle and `assignment` hold `n` elements.
 */
enum FcdStatus fcd_result_witness(const struct FcdResult *result, size_t *assignment, size_t n);

/**
 * # Safety
 * `result` must come from this library and not be used afterwards.
 */
void fcd_result_free(struct FcdResult *result);

/**
 * Checks `assignment[n]` (district per vertex, ids below `k`) against the
 * instance; `*valid` receives the verdict.
 *
 * # Safety
 * `instance` must be a live handle, `assignment` hold `n` elements and
 * `valid` be valid.
 */
enum FcdStatus fcd_verify(const struct FcdInstance *instance,
                          const size_t *assignment,
                          size_t n,
                          size_t k,
                          bool *valid);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FCD_H */
