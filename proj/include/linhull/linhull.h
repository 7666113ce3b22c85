/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the hull library. Handles are opaque; every call returns an
 * lh_status and, on failure, leaves a message for lh_last_error() in
 * thread-local storage. Strings returned through char** are JSON documents
 * carrying "schema": 1 and must be released with lh_string_free.
 */
#ifndef LINHULL_H
#define LINHULL_H

#include <stdint.h>

#if defined(_WIN32)
#define LH_API __declspec(dllexport)
#else
#define LH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lh_status {
  LH_OK = 0,
  LH_ERR_NOT_PRIME = 1,
  LH_ERR_SIZE_CAP = 2,
  LH_ERR_NOT_A_DIVISOR = 3,
  LH_ERR_TOWER_MISMATCH = 4,
  LH_ERR_DEGENERATE_INPUT = 5,
  LH_ERR_DEPENDENT_GENERATORS = 6,
  LH_ERR_NOT_APPLICABLE = 7,
  LH_ERR_NOT_NORMAL_BASIS = 8,
  LH_ERR_PRECONDITION = 9,
  LH_ERR_PARSE = 10,
  LH_ERR_INVALID_ARGUMENT = 11,
  LH_ERR_MISMATCH = 12,
  LH_ERR_INTERNAL = 99
} lh_status;

typedef struct lh_tower lh_tower;
typedef struct lh_family lh_family;

LH_API int lh_abi_version(void);
LH_API const char* lh_last_error(void);
LH_API const char* lh_status_name(lh_status status);
LH_API void lh_string_free(char* s);

/* cap = 0 selects the default of 2^24 elements. */
LH_API lh_status lh_tower_build(uint32_t p, uint32_t r, uint32_t m, uint64_t cap, lh_tower** out);
LH_API void lh_tower_free(lh_tower* tower);

/* L = X^(q^k). */
LH_API lh_status lh_family_frobenius(const lh_tower* tower, uint32_t k, lh_family** out);
/* L given as comma-separated coefficients a_0..a_{m-1}. */
LH_API lh_status lh_family_general(const lh_tower* tower, const char* coefficients, lh_family** out);
LH_API void lh_family_free(lh_family* family);

LH_API lh_status lh_field_info_json(const lh_tower* tower, char** out);
LH_API lh_status lh_hull_json(const lh_family* family, const char* lambda, const char* mu, char** out);
/* top_field != 0 sweeps P^1(F_{q^m}), otherwise P^1(F_q). */
LH_API lh_status lh_sweep_json(const lh_family* family, int top_field, uint64_t cap, int include_points, char** out);
LH_API lh_status lh_spectrum_json(const lh_family* family, int top_field, uint64_t cap, char** out);
LH_API lh_status lh_discriminant_json(const lh_family* family, char** out);
/* Generator file text: one q-polynomial per line, '#' comments. */
LH_API lh_status lh_rdcode_json(const lh_tower* tower, const char* generators, char** out);
/* LH_ERR_MISMATCH when any golden check fails; the JSON is produced either way. */
LH_API lh_status lh_verify_golden_json(char** out);

#ifdef __cplusplus
}
#endif

#endif /* LINHULL_H */
