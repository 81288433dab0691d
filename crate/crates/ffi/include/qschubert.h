#ifndef QSCHUBERT_H
#define QSCHUBERT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>

/**
 * Largest ambient rank accepted through the C interface.
 */
#define QSK_MAX_RANK 6

/**
 * Result codes.
 */
typedef enum QskStatus {
  QSK_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QSK_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  QSK_STATUS_INVALID_UTF8 = 2,
  /**
   * A polynomial, permutation or other text argument did not parse.
   */
  QSK_STATUS_PARSE_ERROR = 3,
  /**
   * The arguments parsed but are outside the operation's domain.
   */
  QSK_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The requested rank exceeds `QSK_MAX_RANK`.
   */
  QSK_STATUS_RANK_TOO_LARGE = 5,
  /**
   * An internal error; the library state is still usable.
   */
  QSK_STATUS_INTERNAL = 6,
} QskStatus;

/**
 * An exact polynomial in the x, y, z and q variables.
 */
typedef struct QskPolynomial QskPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or an empty string. The
 * pointer stays valid until the next call into the library on this thread.
 */
const char *qsk_last_error(void);

/**
 * Parses `text` (e.g. `"x1^2*x2 - 3*q1 + y2"`) into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum QskStatus qsk_polynomial_parse(const char *text, struct QskPolynomial **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle returned by this library, not yet freed.
 */
void qsk_polynomial_free(struct QskPolynomial *p);

/**
 * Canonical text of `p`, to be released with [`qsk_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum QskStatus qsk_polynomial_to_string(const struct QskPolynomial *p, char **out);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void qsk_string_free(char *s);

/**
 * `a + b` as a new handle.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum QskStatus qsk_polynomial_add(const struct QskPolynomial *a,
                                  const struct QskPolynomial *b,
                                  struct QskPolynomial **out);

/**
 * `a * b` as a new handle.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum QskStatus qsk_polynomial_mul(const struct QskPolynomial *a,
                                  const struct QskPolynomial *b,
                                  struct QskPolynomial **out);

/**
 * Writes whether `a` and `b` are equal.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum QskStatus qsk_polynomial_equal(const struct QskPolynomial *a,
                                    const struct QskPolynomial *b,
                                    bool *out);

/**
 * The Schubert polynomial of `w` (one-line notation, e.g. `"13524"`).
 *
 * # Safety
 * `w` must be a NUL-terminated string and `out` writable.
 */
enum QskStatus qsk_schubert(const char *w, struct QskPolynomial **out);

/**
 * The quantum Schubert polynomial of `w` at ambient rank `n`.
 *
 * # Safety
 * `w` must be a NUL-terminated string and `out` writable.
 */
enum QskStatus qsk_quantum_schubert(const char *w, size_t n, struct QskPolynomial **out);

/**
 * The quantum double Schubert polynomial of `w` at ambient rank `n`.
 *
 * # Safety
 * `w` must be a NUL-terminated string and `out` writable.
 */
enum QskStatus qsk_quantum_double_schubert(const char *w, size_t n, struct QskPolynomial **out);

/**
 * The quantization of `f`, a polynomial in `x_1..x_n`, at rank `n`.
 *
 * # Safety
 * `f` must be a live handle and `out` writable.
 */
enum QskStatus qsk_quantize(const struct QskPolynomial *f, size_t n, struct QskPolynomial **out);

/**
 * Number of permutations of rank `n` in the class named `class`
 * (`dominant`, `grassmannian`, `vexillary`, `rv`, `avoiding321`, `smooth`).
 *
 * # Safety
 * `class` must be a NUL-terminated string and `out` writable.
 */
enum QskStatus qsk_enumerate_count(const char *class_, size_t n, size_t *out);

/**
 * Runs the suite group `suite` (or `all`) up to rank `n`, writing the JSON
 * reports to `json_out` and whether every asserted suite passed to
 * `passed`.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `json_out` and `passed` writable.
 */
enum QskStatus qsk_verify(const char *suite, size_t n, char **json_out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSCHUBERT_H */
