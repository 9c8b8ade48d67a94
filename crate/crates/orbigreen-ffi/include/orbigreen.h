#ifndef ORBIGREEN_H
#define ORBIGREEN_H

/* Generated by cbindgen from crates/orbigreen-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define OG_OK 0

/**
 * A required pointer argument was NULL.
 */
#define OG_ERR_NULL 1

/**
 * The (n,p,q) triple has no construction (e.g. a single puncture).
 */
#define OG_ERR_UNSUPPORTED 2

#define OG_ERR_UNKNOWN_VERTEX 3

/**
 * Malformed argument: bad UTF-8, index out of range, invalid document.
 */
#define OG_ERR_INVALID 4

/**
 * The mutation engine hit a non-sign-coherent row or overflow.
 */
#define OG_ERR_ENGINE 5

/**
 * The output buffer is too small; `needed` holds the required size.
 */
#define OG_ERR_BUFFER 6

#define OG_ERR_PANIC 7

#define OG_GREEN 1

#define OG_RED -1

#define OG_OUTCOME_VALID 0

#define OG_OUTCOME_NOT_GREEN 1

#define OG_OUTCOME_NOT_ALL_RED 2

#define OG_OUTCOME_ENGINE_FAULT 3

/**
 * A framed seed: exchange matrix plus c-vectors.
 */
typedef struct OgSeed OgSeed;

/**
 * A mutation sequence.
 */
typedef struct OgSequence OgSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *og_last_error(void);

/**
 * Build and frame the diagram for genus `n`, `p` punctures, `q` orbifold points.
 *
 * # Safety
 * `out` must be a valid pointer to write a handle to.
 */
int32_t og_seed_build(uint32_t n, uint32_t p, uint32_t q, struct OgSeed **out_seed);

/**
 * Load a seed from a diagram document (JSON). Without frozen rows the
 * seed is framed with C = identity.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` a valid pointer.
 */
int32_t og_seed_from_json(const char *json, struct OgSeed **out_seed);

/**
 * Serialize the seed, including its C block, as a diagram document.
 *
 * # Safety
 * `seed` must be a live handle; `buf` must hold `len` bytes or be NULL.
 */
int32_t og_seed_to_json(const struct OgSeed *seed, char *buf, size_t len, size_t *needed);

/**
 * # Safety
 * `seed` must be a live handle; `out` a valid pointer.
 */
int32_t og_seed_clone(const struct OgSeed *seed, struct OgSeed **out_seed);

/**
 * Release a seed. NULL is ignored.
 *
 * # Safety
 * `seed` must come from this library and not be used afterwards.
 */
void og_seed_free(struct OgSeed *seed);

/**
 * # Safety
 * `seed` must be a live handle; `out` a valid pointer.
 */
int32_t og_seed_rank(const struct OgSeed *seed, size_t *rank);

/**
 * Name of vertex `i`.
 *
 * # Safety
 * `seed` must be a live handle; `buf` must hold `len` bytes or be NULL.
 */
int32_t og_seed_label(const struct OgSeed *seed, size_t i, char *buf, size_t len, size_t *needed);

/**
 * Mutate at the named vertex (whatever its color).
 *
 * # Safety
 * `seed` must be a live handle; `vertex` a NUL-terminated string.
 */
int32_t og_seed_mutate(struct OgSeed *seed, const char *vertex);

/**
 * # Safety
 * `seed` must be a live handle.
 */
int32_t og_seed_mutate_index(struct OgSeed *seed, size_t k);

/**
 * Color of the named vertex: `OG_GREEN` or `OG_RED`.
 *
 * # Safety
 * `seed` must be a live handle; `vertex` a NUL-terminated string; `color` valid.
 */
int32_t og_seed_color(const struct OgSeed *seed, const char *vertex, int32_t *color);

/**
 * Whether every vertex is red.
 *
 * # Safety
 * `seed` must be a live handle; `is_final` a valid pointer.
 */
int32_t og_seed_is_final(const struct OgSeed *seed, bool *is_final);

/**
 * Copy c-row `i` (rank entries) into `row`.
 *
 * # Safety
 * `seed` must be a live handle; `row` must hold `len` values.
 */
int32_t og_seed_c_row(const struct OgSeed *seed, size_t i, int64_t *row, size_t len);

/**
 * Replay `seq` in strict mode, leaving the seed at the last state reached.
 * `outcome` receives an `OG_OUTCOME_*` value and `step` (optional) the
 * 1-based failing step.
 *
 * # Safety
 * `seed` and `seq` must be live handles; `outcome` valid; `step` valid or NULL.
 */
int32_t og_seed_apply(struct OgSeed *seed,
                      const struct OgSequence *seq,
                      int32_t *outcome,
                      size_t *step);

/**
 * The explicit sequence Δ for (n,p,q); `amended` selects the amended
 * genus-0 two-puncture band list.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
int32_t og_delta(uint32_t n, uint32_t p, uint32_t q, bool amended, struct OgSequence **out_seq);

/**
 * Parse a comma-separated list of labels, e.g. "b,a,c,b".
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` a valid pointer.
 */
int32_t og_sequence_parse(const char *text, struct OgSequence **out_seq);

/**
 * # Safety
 * `seq` must be a live handle; `len` a valid pointer.
 */
int32_t og_sequence_len(const struct OgSequence *seq, size_t *len);

/**
 * Label of mutation `i` (0-based).
 *
 * # Safety
 * `seq` must be a live handle; `buf` must hold `len` bytes or be NULL.
 */
int32_t og_sequence_label(const struct OgSequence *seq,
                          size_t i,
                          char *buf,
                          size_t len,
                          size_t *needed);

/**
 * Release a sequence. NULL is ignored.
 *
 * # Safety
 * `seq` must come from this library and not be used afterwards.
 */
void og_sequence_free(struct OgSequence *seq);

/**
 * Build, frame and replay Δ for (n,p,q).
 *
 * # Safety
 * `outcome` must be valid; `step` valid or NULL.
 */
int32_t og_verify_mgs(uint32_t n, uint32_t p, uint32_t q, int32_t *outcome, size_t *step);

/**
 * Summary line of a verification, as printed by the CLI.
 *
 * # Safety
 * `buf` must hold `len` bytes or be NULL.
 */
int32_t og_verify_summary(uint32_t n,
                          uint32_t p,
                          uint32_t q,
                          char *buf,
                          size_t len,
                          size_t *needed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBIGREEN_H */
