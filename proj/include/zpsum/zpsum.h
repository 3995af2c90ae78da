/* SPDX-License-Identifier: Apache-2.0 */
/* Copyright 2026 The zpsum authors */
#ifndef ZPSUM_ZPSUM_H
#define ZPSUM_ZPSUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZPS_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ZPS_API __attribute__((visibility("default")))
#else
#define ZPS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zps_set zps_set;
typedef struct zps_report zps_report;

/* Values match zpsum::Errc. */
typedef enum zps_status {
  ZPS_OK = 0,
  ZPS_E_INVALID_ARGUMENT = 1,
  ZPS_E_NOT_PRIME = 2,
  ZPS_E_DUPLICATE_ELEMENT = 3,
  ZPS_E_INVALID_DILATION = 4,
  ZPS_E_SIZE_LIMIT = 5,
  ZPS_E_CAPABILITY = 6,
  ZPS_E_OUT_OF_RANGE = 7,
  ZPS_E_INVALID_PARAMETERS = 8,
  ZPS_E_INVALID_FAMILY = 9,
  ZPS_E_INTERNAL_CONTRACT = 10,
  ZPS_E_DIAGNOSTICS_ONLY = 11,
  ZPS_E_IO = 12,
  ZPS_E_PARSE = 13,
  ZPS_E_UNKNOWN = 99
} zps_status;

/* Message of the last failure on the calling thread; never NULL. */
ZPS_API const char* zps_last_error(void);
ZPS_API const char* zps_status_name(zps_status s);
ZPS_API const char* zps_version(void);

/* Strings returned through char** are owned by the caller. */
ZPS_API void zps_string_free(char* s);

/* Sets. Integers are reduced mod p; a collision after reduction fails. */
ZPS_API zps_status zps_set_create(uint64_t p, const int64_t* values, size_t count, zps_set** out);
ZPS_API zps_status zps_set_read_file(uint64_t p, const char* path, zps_set** out);
/* family: "extremal-zsf", "exceptional" or "small-incomplete" */
ZPS_API zps_status zps_set_build_family(uint64_t p, const char* family, zps_set** out);
ZPS_API void zps_set_destroy(zps_set* s);
ZPS_API uint64_t zps_set_modulus(const zps_set* s);
ZPS_API size_t zps_set_size(const zps_set* s);
/* Copies min(cap, size) residues in ascending order; *count gets the size. */
ZPS_API zps_status zps_set_elements(const zps_set* s, uint64_t* buf, size_t cap, size_t* count);
ZPS_API zps_status zps_set_dilate(const zps_set* s, int64_t b, zps_set** out);

ZPS_API zps_status zps_sumset_count(const zps_set* s, uint64_t* out);
ZPS_API zps_status zps_is_zero_sum_free(const zps_set* s, int* out);
ZPS_API zps_status zps_is_complete(const zps_set* s, int* out);
/* *out is NULL when target is not a subset sum. */
ZPS_API zps_status zps_witness(const zps_set* s, int64_t target, zps_set** out);

ZPS_API zps_status zps_analyze_json(const zps_set* s, uint64_t dilation_limit, unsigned jobs, char** json);
/* kind: "zsf" or "incomplete". time_limit_s <= 0 means none. */
ZPS_API zps_status zps_search_json(uint64_t p, const char* kind, uint64_t node_budget, unsigned jobs,
                                   double time_limit_s, char** json);
ZPS_API zps_status zps_core_pairs_json(const zps_set* s, int64_t n, char** json);

/* Reports */
ZPS_API zps_status zps_verify_theorem(const char* theorem, uint64_t p_min, uint64_t p_max, unsigned jobs,
                                      uint64_t node_budget, double time_limit_s, zps_report** out);
/* format: "json" or "csv" */
ZPS_API zps_status zps_report_write(const zps_report* r, const char* format, const char* path, int include_timestamp);
ZPS_API zps_status zps_report_to_string(const zps_report* r, const char* format, int include_timestamp, char** out);
ZPS_API int zps_report_all_pass(const zps_report* r);
ZPS_API size_t zps_report_violations(const zps_report* r);
ZPS_API void zps_report_destroy(zps_report* r);

#ifdef __cplusplus
}
#endif

#endif /* ZPSUM_ZPSUM_H */
