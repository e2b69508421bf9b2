/*
 * rell: Serre's condition R_l for affine semigroup rings K[S].
 *
 * C interface to the rell library. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible
 * call returns a rell_status; on failure rell_last_error() describes the
 * problem (the message is thread-local and valid until the next call on the
 * same thread). Strings returned through char** out-parameters are
 * allocated by the library and released with rell_string_free.
 *
 * Vectors and integer lists are passed as comma-separated decimal text
 * ("3,-1,-1") so that values of any size round-trip exactly.
 */
#ifndef RELL_RELL_H
#define RELL_RELL_H

#include <stddef.h>
#include <stdint.h>

#if defined(RELL_BUILDING_LIBRARY)
#define RELL_API __attribute__((visibility("default")))
#else
#define RELL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define RELL_REPORT_VERSION 1

typedef enum rell_status {
  RELL_OK = 0,
  RELL_ERR_INVALID_ARGUMENT = 1, /* null pointer or malformed argument */
  RELL_ERR_PARSE = 2,
  RELL_ERR_ZERO_VECTOR = 3,
  RELL_ERR_DIMENSION_MISMATCH = 4,
  RELL_ERR_FULL_DIM_REQUIRED = 5,
  RELL_ERR_ZERO_GENERATOR = 6,
  RELL_ERR_GROUP_NOT_FULL = 7,
  RELL_ERR_POINTED_REQUIRED = 8,
  RELL_ERR_BAD_LAMBDA = 9,
  RELL_ERR_BAD_RANGE = 10,
  RELL_ERR_PRECONDITION = 11,
  RELL_ERR_INTERNAL = 12
} rell_status;

typedef struct rell_semigroup rell_semigroup;
typedef struct rell_lambda rell_lambda;

RELL_API const char* rell_version(void);
RELL_API const char* rell_status_name(rell_status status);
RELL_API const char* rell_last_error(void);
RELL_API void rell_string_free(char* s);

/* ---- semigroups ---------------------------------------------------- */

/* Parses {"ambient_dim": n, "generators": [[...], ...]} or {"lambda": [...]}
 * (the latter builds the Rees semigroup S(I(lambda))). */
RELL_API rell_status rell_semigroup_from_json(const char* json_text,
                                              rell_semigroup** out);
/* count generators of length ambient_dim, row-major in entries. */
RELL_API rell_status rell_semigroup_from_rows(size_t ambient_dim, size_t count,
                                              const int64_t* entries,
                                              rell_semigroup** out);
RELL_API rell_status rell_semigroup_from_lambda(const rell_lambda* lambda,
                                                rell_semigroup** out);
RELL_API void rell_semigroup_free(rell_semigroup* s);

RELL_API size_t rell_semigroup_ambient_dim(const rell_semigroup* s);
RELL_API size_t rell_semigroup_generator_count(const rell_semigroup* s);
RELL_API size_t rell_semigroup_facet_count(const rell_semigroup* s);
RELL_API int rell_semigroup_is_pointed(const rell_semigroup* s);

/* *out = 1 if the point lies in S, else 0. */
RELL_API rell_status rell_semigroup_contains(const rell_semigroup* s,
                                             const char* point_csv, int* out);

/* ---- lambda tuples ------------------------------------------------- */

RELL_API rell_status rell_lambda_parse(const char* csv, rell_lambda** out);
RELL_API void rell_lambda_free(rell_lambda* lambda);
RELL_API size_t rell_lambda_length(const rell_lambda* lambda);

/* ---- JSON reports -------------------------------------------------- */

RELL_API rell_status rell_report_facets(const rell_semigroup* s, char** json_out);
/* bound is the witness-search multiplier (>= 1; 20 by default in the CLI). */
RELL_API rell_status rell_report_serre(const rell_semigroup* s, int l,
                                       int64_t bound, char** json_out);
/* general != 0 also runs the full face-by-face checker on S(I). */
RELL_API rell_status rell_report_rees(const rell_lambda* lambda, int r,
                                      int general, int64_t bound,
                                      char** json_out);
RELL_API rell_status rell_report_normality(const rell_semigroup* s,
                                           int64_t budget, char** json_out);
RELL_API rell_status rell_report_probe(const rell_semigroup* s,
                                       const char* point_csv, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* RELL_RELL_H */
