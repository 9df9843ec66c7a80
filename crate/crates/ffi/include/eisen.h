#ifndef EISEN_H
#define EISEN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EisenStatus {
  EISEN_STATUS_OK = 0,
  EISEN_STATUS_OVERFLOW = 1,
  EISEN_STATUS_DIVISION_BY_ZERO = 2,
  EISEN_STATUS_ZERO_INPUT = 3,
  EISEN_STATUS_NOT_PRIME = 4,
  EISEN_STATUS_WRONG_CATEGORY = 5,
  EISEN_STATUS_NOT_SPLITTABLE = 6,
  EISEN_STATUS_NOT_INVERTIBLE = 7,
  EISEN_STATUS_NOT_COPRIME = 8,
  EISEN_STATUS_FACTOR_BOUND_EXCEEDED = 9,
  EISEN_STATUS_ENUMERATION_BOUND = 10,
  EISEN_STATUS_PARSE = 11,
  EISEN_STATUS_INVALID_ARGUMENT = 12,
  EISEN_STATUS_NULL_POINTER = 13,
  EISEN_STATUS_BUFFER_TOO_SMALL = 14,
  EISEN_STATUS_INTERNAL = 15,
} EisenStatus;

/**
 * Opaque factorization handle.
 */
typedef struct EisenFactorization EisenFactorization;

/**
 * Opaque modulus handle.
 */
typedef struct EisenModulus EisenModulus;

/**
 * `a + bρ`.
 */
typedef struct EisenInt {
  int64_t a;
  int64_t b;
} EisenInt;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code; unknown codes get a generic text.
 * Never null.
 */
const char *eisen_status_message(int32_t code);

/**
 * Parses a NUL-terminated literal such as `"48-72p"`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum EisenStatus eisen_parse(const char *text, struct EisenInt *out);

/**
 * Writes the canonical text of `x` with a trailing NUL into `buf`.
 * `needed` (if non-null) receives the required size including the NUL,
 * also when the buffer is too small.
 *
 * # Safety
 * `buf` must point to `len` writable bytes, or be null when `len` is 0.
 */
enum EisenStatus eisen_format(struct EisenInt x, char *buf, size_t len, size_t *needed);

/**
 * # Safety
 * `out` must be writable.
 */
enum EisenStatus eisen_add(struct EisenInt x, struct EisenInt y, struct EisenInt *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum EisenStatus eisen_mul(struct EisenInt x, struct EisenInt y, struct EisenInt *out);

/**
 * Norm `a² − ab + b²`; `EISEN_STATUS_OVERFLOW` if it exceeds `uint64_t`.
 *
 * # Safety
 * `out` must be writable.
 */
enum EisenStatus eisen_norm(struct EisenInt x, uint64_t *out);

/**
 * # Safety
 * `quotient` and `remainder` must be writable.
 */
enum EisenStatus eisen_div_rem(struct EisenInt x,
                               struct EisenInt d,
                               struct EisenInt *quotient,
                               struct EisenInt *remainder);

/**
 * Canonical gcd.
 *
 * # Safety
 * `out` must be writable.
 */
enum EisenStatus eisen_gcd(struct EisenInt x, struct EisenInt y, struct EisenInt *out);

/**
 * Writes 1 if `x` is prime, 0 otherwise.
 *
 * # Safety
 * `out` must be writable.
 */
enum EisenStatus eisen_is_prime(struct EisenInt x, int32_t *out);

/**
 * ϕ_ρ(η); `EISEN_STATUS_OVERFLOW` if it exceeds `uint64_t`.
 *
 * # Safety
 * `out` must be writable.
 */
enum EisenStatus eisen_phi(struct EisenInt eta, uint64_t *out);

/**
 * Factors `x` into a new handle owned by the caller.
 *
 * # Safety
 * `out` must be writable. Release the handle with `eisen_factorization_free`.
 */
enum EisenStatus eisen_factor(struct EisenInt x, struct EisenFactorization **out);

/**
 * # Safety
 * `f` must come from `eisen_factor` and not be freed yet; null is ignored.
 */
void eisen_factorization_free(struct EisenFactorization *f);

/**
 * Number of distinct prime factors.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum EisenStatus eisen_factorization_len(const struct EisenFactorization *f, size_t *out);

/**
 * The unit in front of the factorization.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum EisenStatus eisen_factorization_unit(const struct EisenFactorization *f, struct EisenInt *out);

/**
 * The `index`-th canonical prime and its exponent, ordered by norm.
 *
 * # Safety
 * `f` must be a live handle; `prime` and `exponent` must be writable.
 */
enum EisenStatus eisen_factorization_get(const struct EisenFactorization *f,
                                         size_t index,
                                         struct EisenInt *prime,
                                         uint32_t *exponent);

/**
 * Creates a modulus handle for `eta ≠ 0`.
 *
 * # Safety
 * `out` must be writable. Release the handle with `eisen_modulus_free`.
 */
enum EisenStatus eisen_modulus_new(struct EisenInt eta, struct EisenModulus **out);

/**
 * # Safety
 * `m` must come from `eisen_modulus_new` and not be freed yet; null is ignored.
 */
void eisen_modulus_free(struct EisenModulus *m);

/**
 * Number of residue classes, `N(eta)`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum EisenStatus eisen_modulus_norm(const struct EisenModulus *m, uint64_t *out);

/**
 * Canonical representative of `x`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum EisenStatus eisen_modulus_reduce(const struct EisenModulus *m,
                                      struct EisenInt x,
                                      struct EisenInt *out);

/**
 * Reduced product `x·y`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum EisenStatus eisen_modulus_mul(const struct EisenModulus *m,
                                   struct EisenInt x,
                                   struct EisenInt y,
                                   struct EisenInt *out);

/**
 * `x⁻¹`, or `EISEN_STATUS_NOT_INVERTIBLE`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum EisenStatus eisen_modulus_inverse(const struct EisenModulus *m,
                                       struct EisenInt x,
                                       struct EisenInt *out);

/**
 * `x^k`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum EisenStatus eisen_modulus_pow(const struct EisenModulus *m,
                                   struct EisenInt x,
                                   uint64_t k,
                                   struct EisenInt *out);

/**
 * Invariant factors of the unit group modulo `eta`.
 *
 * Writes up to `cap` factors into `factors`, the factor count into `len`
 * and the group order into `order`. Returns `EISEN_STATUS_BUFFER_TOO_SMALL`
 * (with `len` set) when `cap` is insufficient.
 *
 * # Safety
 * `factors` must hold `cap` entries; `len` and `order` must be writable.
 */
enum EisenStatus eisen_group_structure(struct EisenInt eta,
                                       uint64_t *factors,
                                       size_t cap,
                                       size_t *len,
                                       uint64_t *order);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EISEN_H */
