/* C interface to the sluni classification library. */

#ifndef SLUNI_H
#define SLUNI_H

/* Generated by cbindgen from crates/sluni-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every call.
typedef enum SluniStatus {
  // Success.
  SLUNI_STATUS_OK = 0,
  // A required pointer argument was null.
  SLUNI_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  SLUNI_STATUS_INVALID_UTF8 = 2,
  // A string argument did not parse (weight, tuple, kind, rational).
  SLUNI_STATUS_PARSE_ERROR = 3,
  // The inputs were well-formed but outside the domain (bad signature,
  // wrong case, psl constraint, dimension mismatch).
  SLUNI_STATUS_DOMAIN_ERROR = 4,
} SluniStatus;

// Opaque classification context: a signature together with the positive
// system the classification runs on.
typedef struct SluniSystem SluniSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create a classification system for su(p,q|n) with m = p+q.
//
// `kind` selects the positive system: `"standard"`, `"antistandard"`,
// `"nonstandard"`, or null for the classification default (standard when
// p·q = 0, non-standard otherwise).
//
// # Safety
// `out` must point to writable storage for one pointer; `kind` must be
// null or a NUL-terminated string valid for the duration of the call.
enum SluniStatus sluni_system_new(uint32_t p,
                                  uint32_t q,
                                  uint32_t n,
                                  const char *kind,
                                  struct SluniSystem **out);

// Release a system handle. Null is ignored.
//
// # Safety
// `system` must be null or a pointer returned by [`sluni_system_new`]
// that has not been freed yet.
void sluni_system_free(struct SluniSystem *system);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string pointer returned by one of the calls in
// this library, not yet freed.
void sluni_string_free(char *s);

// The Weyl vector of the system in weight text form.
//
// # Safety
// `system` must be a live handle; `out` must point to writable storage
// for one pointer.
enum SluniStatus sluni_system_rho(const struct SluniSystem *system, char **out);

// Classify one highest weight; the verdict is returned as a JSON string
// with fields `unitarizable`, `case`, and `reasons`.
//
// # Safety
// `system` must be a live handle, `weight` a NUL-terminated string, and
// `out` writable storage for one pointer.
enum SluniStatus sluni_classify_json(const struct SluniSystem *system,
                                     const char *weight,
                                     bool psl,
                                     char **out);

// The Dirac margins (Λ+ρ, α) over the odd positive roots, as JSON.
//
// # Safety
// As for [`sluni_classify_json`].
enum SluniStatus sluni_margins_json(const struct SluniSystem *system,
                                    const char *weight,
                                    char **out);

// Factored determinant of the contravariant form on the weight space at
// depth `eta`, as JSON with `factors` and `value`.
//
// # Safety
// As for [`sluni_classify_json`]; `eta` must be a NUL-terminated string.
enum SluniStatus sluni_ksdet_json(const struct SluniSystem *system,
                                  const char *weight,
                                  const char *eta,
                                  char **out);

// Exact positive-semidefiniteness of the Gram matrix on the weight space
// at depth `eta`, with the anti-involution the classification fixes for
// this signature.
//
// # Safety
// As for [`sluni_ksdet_json`]; `out` must point to writable storage for
// one `bool`.
enum SluniStatus sluni_gram_is_psd(const struct SluniSystem *system,
                                   const char *weight,
                                   const char *eta,
                                   bool *out);

// Sweep every weight space reachable by at most `depth` positive-root
// steps; `out` receives true when all Gram matrices are positive
// semidefinite.
//
// # Safety
// As for [`sluni_gram_is_psd`].
enum SluniStatus sluni_all_gram_psd(const struct SluniSystem *system,
                                    const char *weight,
                                    uint32_t depth,
                                    bool *out);

// Library version as a static string; do not free.
const char *sluni_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SLUNI_H */
