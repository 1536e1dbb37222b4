#ifndef SPECTRE_H
#define SPECTRE_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes.
typedef enum SpectreStatus {
  SPECTRE_STATUS_OK = 0,
  SPECTRE_STATUS_NULL_POINTER = 1,
  SPECTRE_STATUS_INVALID_INPUT = 2,
  SPECTRE_STATUS_TOO_MANY = 3,
  SPECTRE_STATUS_DATA = 4,
  SPECTRE_STATUS_INTERNAL = 5,
} SpectreStatus;

// Result of one recognition run.
typedef struct SpectreOutcome SpectreOutcome;

// Loaded tables and generators.
typedef struct SpectreRecognizer SpectreRecognizer;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *spectre_last_error(void);

// Creates a recognizer. `data_dir` may be null for the built-in tables.
//
// # Safety
// `data_dir` is null or a valid NUL-terminated string; `out` is a valid
// pointer.
enum SpectreStatus spectre_recognizer_new(const char *data_dir, struct SpectreRecognizer **out);

// # Safety
// `rec` is null or was returned by [`spectre_recognizer_new`] and not freed.
void spectre_recognizer_free(struct SpectreRecognizer *rec);

// Runs recognition on `len` decimal strings.
//
// # Safety
// `rec` is a live recognizer, `values` points to `len` valid strings and
// `out` is a valid pointer.
enum SpectreStatus spectre_recognize(const struct SpectreRecognizer *rec,
                                     const char *const *values,
                                     size_t len,
                                     struct SpectreOutcome **out);

// # Safety
// `outcome` is null or was returned by [`spectre_recognize`] and not freed.
void spectre_outcome_free(struct SpectreOutcome *outcome);

// True when no group was recognized (or `outcome` is null).
//
// # Safety
// `outcome` is null or a live outcome.
bool spectre_outcome_is_empty(const struct SpectreOutcome *outcome);

// Name of the recognized group, such as `S24(3)`, or null for an empty
// verdict. Free with [`spectre_string_free`].
//
// # Safety
// `outcome` is null or a live outcome.
char *spectre_outcome_name(const struct SpectreOutcome *outcome);

// Name of the isospectral twin, or null.
//
// # Safety
// `outcome` is null or a live outcome.
char *spectre_outcome_twin(const struct SpectreOutcome *outcome);

// The whole outcome, trail included, as JSON. Free with
// [`spectre_string_free`].
//
// # Safety
// `outcome` is null or a live outcome.
char *spectre_outcome_json(const struct SpectreOutcome *outcome);

// Divisibility-maximal elements of the input as a JSON array of decimal
// strings.
//
// # Safety
// `values` points to `len` valid strings and `out` is a valid pointer.
enum SpectreStatus spectre_minimal_spectrum(const char *const *values, size_t len, char **out);

// # Safety
// `s` is null or a string returned by this library and not yet freed.
void spectre_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPECTRE_H */
