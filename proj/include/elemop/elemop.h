/* C interface to the elemop library.
 *
 * Matrices and operators are opaque handles owned by the caller and released
 * with the matching *_free function. Functions returning char* hand over a
 * NUL-terminated UTF-8 JSON document that must be released with
 * elemop_string_free. On any status other than ELEMOP_OK, elemop_last_error()
 * describes the failure (thread-local; valid until the next call on the same
 * thread).
 */
#ifndef ELEMOP_H
#define ELEMOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define ELEMOP_API __declspec(dllexport)
#else
#  define ELEMOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum elemop_status {
  ELEMOP_OK = 0,
  /* A checked property failed; the JSON output, if any, is still filled. */
  ELEMOP_PROPERTY_FAILED = 1,
  ELEMOP_ERR_PARSE = 2,
  ELEMOP_ERR_SHAPE = 3,
  ELEMOP_ERR_PRECONDITION = 4,
  ELEMOP_ERR_INVALID_ARGUMENT = 5,
  ELEMOP_ERR_INTEGRITY = 6,
  ELEMOP_ERR_INTERNAL = 7
} elemop_status;

typedef struct elemop_matrix elemop_matrix;
typedef struct elemop_operator elemop_operator;

ELEMOP_API const char *elemop_last_error(void);
ELEMOP_API const char *elemop_status_name(elemop_status status);
ELEMOP_API void elemop_string_free(char *s);

/* {"rows": R, "cols": C, "entries": [["p/q", ...], ...]} */
ELEMOP_API elemop_status elemop_matrix_from_json(const char *json, elemop_matrix **out);
ELEMOP_API elemop_status elemop_matrix_to_json(const elemop_matrix *m, char **out);
ELEMOP_API void elemop_matrix_free(elemop_matrix *m);

/* {"dim": n, "terms": [{"a": <matrix>, "b": <matrix>}, ...]} */
ELEMOP_API elemop_status elemop_operator_from_json(const char *json, elemop_operator **out);
ELEMOP_API elemop_status elemop_operator_to_json(const elemop_operator *op, char **out);
ELEMOP_API void elemop_operator_free(elemop_operator *op);

/* Constructors. kind is one of "multiplication", "generalized_derivation",
 * "v"; b is ignored (may be NULL) for "inner_derivation". */
ELEMOP_API elemop_status elemop_operator_make(const char *kind, const elemop_matrix *a,
                                              const elemop_matrix *b, elemop_operator **out);

ELEMOP_API elemop_status elemop_operator_apply(const elemop_operator *op, const elemop_matrix *x,
                                               elemop_matrix **out);
ELEMOP_API elemop_status elemop_operator_superop(const elemop_operator *op, elemop_matrix **out);

/* NilpotencyReport JSON. */
ELEMOP_API elemop_status elemop_matrix_nilpotency(const elemop_matrix *m, char **out);
ELEMOP_API elemop_status elemop_operator_nilpotency(const elemop_operator *op, char **out);

/* theorem: "2.1", "2.3" or "1.1" on the pair (a, b). Returns
 * ELEMOP_PROPERTY_FAILED when the result is inconsistent. */
ELEMOP_API elemop_status elemop_check_pair(const char *theorem, const elemop_matrix *a,
                                           const elemop_matrix *b, char **out);
/* Commuting-family criterion on the operator's coefficient tuples. */
ELEMOP_API elemop_status elemop_check_terms(const elemop_operator *op, char **out);
/* Rank-one replay of the converse of the multiplication criterion. */
ELEMOP_API elemop_status elemop_proof_replay(const elemop_matrix *a, const elemop_matrix *b,
                                             char **out);

/* which: "3.1" or "3.2"; params: "a,b,c,d,k" for 3.2, NULL for the default
 * instance. A failed fact yields ELEMOP_ERR_INTEGRITY. */
ELEMOP_API elemop_status elemop_example(const char *which, const char *params, char **out);

/* theorem: "2.1" (exhaustive, dim must be 2), "2.2", "2.3", "1.1".
 * trials == 0 selects the exhaustive mode for "1.1" (dim must be 2).
 * Returns ELEMOP_PROPERTY_FAILED when violations are recorded. */
ELEMOP_API elemop_status elemop_sweep(const char *theorem, size_t dim, size_t trials,
                                      uint64_t seed, char **out);

/* target: "2.1-ext", "2.2", "2.3". The worked examples are examined first. */
ELEMOP_API elemop_status elemop_search(const char *target, size_t dim, size_t trials,
                                       uint64_t seed, char **out);

#ifdef __cplusplus
}
#endif

#endif /* ELEMOP_H */
