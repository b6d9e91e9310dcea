#ifndef ISOTYPIC_H
#define ISOTYPIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IsoStatus {
  ISO_STATUS_OK = 0,
  // A mathematical check failed; the report says which.
  ISO_STATUS_CHECK_FAILED = 1,
  // Malformed input: bad JSON, unknown name, out-of-range index.
  ISO_STATUS_INPUT = 2,
  ISO_STATUS_NULL_POINTER = 3,
  // A panic or an unexpected library error.
  ISO_STATUS_INTERNAL = 4,
} IsoStatus;

// An algebra with its attached characters.
typedef struct IsoHopf IsoHopf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a JSON algebra spec. Axioms are not checked; see
// [`iso_verify_axioms`].
//
// # Safety
// `json` must be a nul-terminated string and `out` a writable pointer.
enum IsoStatus iso_load_spec_json(const char *json, struct IsoHopf **out);

// Builds a named example. `mu` and `lambda` may be null for defaults;
// `lambda` is `"a,b,c"`.
//
// # Safety
// String arguments must be null or nul-terminated; `out` must be writable.
enum IsoStatus iso_example(const char *name,
                           const char *mu,
                           const char *lambda,
                           bool symbolic,
                           struct IsoHopf **out);

// Dimension of the algebra, or 0 for a null handle.
//
// # Safety
// `h` must be null or a live handle.
size_t iso_dim(const struct IsoHopf *h);

// `ISO_STATUS_OK` if all eight axioms hold, `ISO_STATUS_CHECK_FAILED`
// otherwise with the first witness as the error message.
//
// # Safety
// `h` must be null or a live handle.
enum IsoStatus iso_verify_axioms(const struct IsoHopf *h);

// Runs `verify`, `radical`, `chevalley`, `idempotents`, `hecke` or
// `theorem310` and writes the JSON report to `report_out` (also on
// `ISO_STATUS_CHECK_FAILED`).
//
// # Safety
// `h` must be a live handle, `command` nul-terminated, `report_out`
// writable.
enum IsoStatus iso_run_command(const struct IsoHopf *h,
                               const char *command,
                               bool certify,
                               char **report_out);

// Serializes the algebra as a JSON spec.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum IsoStatus iso_emit_spec_json(const struct IsoHopf *h, char **out);

// # Safety
// `h` must be null or a handle not yet freed.
void iso_free(struct IsoHopf *h);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void iso_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library from this thread.
const char *iso_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISOTYPIC_H */
