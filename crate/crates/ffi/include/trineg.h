#ifndef TRINEG_H
#define TRINEG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum TrinegNegation {
  TRINEG_NEGATION_DEFAULT = 0,
  TRINEG_NEGATION_WEAK = 1,
  TRINEG_NEGATION_STRICT = 2,
} TrinegNegation;

/**
 * Status codes; the non-zero values match the command-line exit codes.
 */
typedef enum TrinegStatus {
  TRINEG_STATUS_OK = 0,
  /**
   * Null pointer, invalid UTF-8 or otherwise unusable argument.
   */
  TRINEG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Syntax error, overlapping sets, atom outside the base, bad generator config.
   */
  TRINEG_STATUS_INVALID_INPUT = 2,
  TRINEG_STATUS_GUARD_EXCEEDED = 3,
  /**
   * The program uses negations the operation does not support.
   */
  TRINEG_STATUS_WRONG_PROGRAM_CLASS = 4,
  TRINEG_STATUS_NO_ADMISSIBLE_CLOSURE = 5,
  /**
   * A panic was caught at the boundary.
   */
  TRINEG_STATUS_INTERNAL = 99,
} TrinegStatus;

typedef enum TrinegTruth {
  TRINEG_TRUTH_FALSE = 0,
  TRINEG_TRUTH_UNDEFINED = 1,
  TRINEG_TRUTH_TRUE = 2,
} TrinegTruth;

/**
 * Opaque parsed program.
 */
typedef struct TrinegProgram TrinegProgram;

/**
 * Message of the last failed call on this thread, or null. Valid until the next
 * failing call on the same thread; do not free.
 */
const char *trineg_last_error_message(void);

/**
 * Library version as a static string; do not free.
 */
const char *trineg_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library that was not freed yet.
 */
void trineg_string_free(char *s);

/**
 * Parses program text into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TrinegStatus trineg_program_parse(const char *text, struct TrinegProgram **out);

/**
 * Generates a seeded random program. `mix` points to four weights for
 * positive, `not`, `~w` and `~s` literals.
 *
 * # Safety
 * `mix` must point to four readable `uint32_t` values and `out` must be writable.
 */
enum TrinegStatus trineg_program_generate(size_t atoms,
                                          size_t clauses,
                                          size_t max_body,
                                          const uint32_t *mix,
                                          uint64_t seed,
                                          struct TrinegProgram **out);

/**
 * # Safety
 * `p` must be null or a handle from this library that was not freed yet.
 */
void trineg_program_free(struct TrinegProgram *p);

/**
 * Number of atoms in the program's base, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t trineg_program_base_len(const struct TrinegProgram *p);

/**
 * Canonical program text, one clause per line.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum TrinegStatus trineg_program_render(const struct TrinegProgram *p, char **out);

/**
 * Truth value of a comma-separated literal body under `(true_atoms, false_atoms)`.
 *
 * # Safety
 * All strings must be NUL-terminated and `out` writable.
 */
enum TrinegStatus trineg_eval(const char *true_atoms,
                              const char *false_atoms,
                              const char *body,
                              enum TrinegTruth *out);

/**
 * Whether `(true_atoms, false_atoms)` is a 3-valued model of the program.
 *
 * # Safety
 * `p` must be a live handle, strings NUL-terminated and `out` writable.
 */
enum TrinegStatus trineg_is_model(const struct TrinegProgram *p,
                                  const char *true_atoms,
                                  const char *false_atoms,
                                  bool *out);

/**
 * `outer(inner(v))`.
 */
enum TrinegTruth trineg_negation_chain(enum TrinegNegation outer,
                                       enum TrinegNegation inner,
                                       enum TrinegTruth v);

/**
 * All 3-valued models as JSON `{"count": n, "models": [...]}`.
 * `max_atoms` of 0 uses the default enumeration guard.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum TrinegStatus trineg_models_json(const struct TrinegProgram *p, size_t max_atoms, char **out);

/**
 * Solutions of the semantic equations as JSON `{"fixpoints": [...]}`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum TrinegStatus trineg_semantic_fixpoints_json(const struct TrinegProgram *p,
                                                 size_t max_atoms,
                                                 char **out);

/**
 * 3-valued stable models as JSON `{"stable_models": [...]}`; the program may
 * only use `not`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum TrinegStatus trineg_stable_models_json(const struct TrinegProgram *p,
                                            size_t max_atoms,
                                            char **out);

/**
 * Well-founded model as JSON `{"well_founded": {"true": [...], "false": [...]}}`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum TrinegStatus trineg_well_founded_json(const struct TrinegProgram *p, char **out);

/**
 * Admissible closure pairs and their componentwise intersection as JSON
 * `{"pairs": [...], "canonical": {...} | null}`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum TrinegStatus trineg_admissible_json(const struct TrinegProgram *p,
                                         size_t max_atoms,
                                         char **out);

/**
 * Answers a goal such as `"?- p, ~w q."` with the verdict JSON
 * `{"goal", "verdict", "canonical", "admissible_count", "per_pair"}`.
 *
 * # Safety
 * `p` must be a live handle, `goal` NUL-terminated and `out` writable.
 */
enum TrinegStatus trineg_query_json(const struct TrinegProgram *p,
                                    const char *goal,
                                    size_t max_atoms,
                                    char **out);

#endif  /* TRINEG_H */
