#ifndef PDIVISOR_H
#define PDIVISOR_H

/* Generated by cbindgen from pdivisor-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum PdivStatus {
  PDIV_STATUS_OK = 0,
  PDIV_STATUS_INVALID_ARGUMENT = 1,
  PDIV_STATUS_PARSE_ERROR = 2,
  PDIV_STATUS_RING_MISMATCH = 3,
  PDIV_STATUS_MATH_DOMAIN = 4,
  PDIV_STATUS_INTERNAL = 5,
} PdivStatus;

// Opaque polynomial handle.
typedef struct PdivPoly PdivPoly;

// Opaque vector field handle.
typedef struct PdivVectorField PdivVectorField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string.
const char *pdivisor_version(void);

// Message for the most recent error on this thread. Valid until the next
// failing call on the same thread.
const char *pdivisor_last_error(void);

// Parse a polynomial over a ring tag ("Z", "Q", "F2", "F4", ...).
//
// # Safety
// `text` and `ring` must be NUL-terminated strings; `out` must be a valid
// pointer to receive the handle.
enum PdivStatus pdivisor_poly_parse(const char *text, const char *ring, struct PdivPoly **out);

// Canonical string form (graded-lex descending).
//
// # Safety
// `poly` must be a live handle from this library; `out` receives a string
// to release with [`pdivisor_string_free`].
enum PdivStatus pdivisor_poly_to_string(const struct PdivPoly *poly, char **out);

// # Safety
// `poly` must come from this library and not be freed twice.
void pdivisor_poly_free(struct PdivPoly *poly);

// # Safety
// `s` must come from this library and not be freed twice.
void pdivisor_string_free(char *s);

// Build v = A dx + B dy from two polynomials over the same ring.
//
// # Safety
// `a` and `b` must be live polynomial handles; `out` must be valid.
enum PdivStatus pdivisor_vf_new(const struct PdivPoly *a,
                                const struct PdivPoly *b,
                                struct PdivVectorField **out);

// # Safety
// `vf` must come from this library and not be freed twice.
void pdivisor_vf_free(struct PdivVectorField *vf);

// v^p by the iterated-derivation recurrence; the components come back as
// two new polynomial handles.
//
// # Safety
// `vf` must be a live handle; `out_x` and `out_y` must be valid pointers.
enum PdivStatus pdivisor_vf_p_power(const struct PdivVectorField *vf,
                                    uint64_t p,
                                    struct PdivPoly **out_x,
                                    struct PdivPoly **out_y);

// Full p-divisor report as a JSON string.
//
// # Safety
// `vf` must be a live handle; `out_json` receives a string to release with
// [`pdivisor_string_free`].
enum PdivStatus pdivisor_vf_p_divisor_json(const struct PdivVectorField *vf,
                                           uint64_t p,
                                           char **out_json);

// Whether {curve = 0} is invariant under the field.
//
// # Safety
// `vf` and `curve` must be live handles; `out` must be valid.
enum PdivStatus pdivisor_vf_invariant(const struct PdivVectorField *vf,
                                      const struct PdivPoly *curve,
                                      bool *out);

// Newton polytope (and optional irreducibility verdict) as JSON.
//
// # Safety
// `poly` must be a live handle; `out_json` receives a string to release
// with [`pdivisor_string_free`].
enum PdivStatus pdivisor_newton_polytope_json(const struct PdivPoly *poly,
                                              bool certify,
                                              uint32_t bound,
                                              char **out_json);

// Run the non-algebraicity certificate for a family spec such as
// "jouanolou:3" or "family-g:5,1,1,1,1"; the report comes back as JSON.
//
// # Safety
// `spec` must be a NUL-terminated string; `out_json` receives a string to
// release with [`pdivisor_string_free`].
enum PdivStatus pdivisor_certify_family_json(const char *spec,
                                             bool assert_nondicritical,
                                             char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PDIVISOR_H */
