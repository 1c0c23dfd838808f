#ifndef INCID4_INCID4_H
#define INCID4_INCID4_H

/* C interface to the incid4 library. Every fallible call returns an
 * i4_status; on failure the message is available from i4_last_error() on the
 * same thread until the next call. Strings returned through char** are owned
 * by the caller and released with i4_string_free. Rationals cross the
 * boundary as "num/den" strings. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define I4_API __declspec(dllexport)
#else
#define I4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum i4_status {
  I4_OK = 0,
  I4_INVALID_ARGUMENT = 1,
  I4_ZERO_POLYNOMIAL = 2,
  I4_IDENTICAL_LINES = 3,
  I4_RANGE_TOO_SMALL = 4,
  I4_REJECTION_BUDGET_EXCEEDED = 5,
  I4_PARSE_ERROR = 6,
  I4_INVARIANT_VIOLATION = 7,
  I4_SEARCH_BUDGET_EXCEEDED = 8,
  I4_LINE_IN_ZERO_SET = 9,
  I4_FLAT_IN_ZERO_SET = 10,
  I4_TOO_LARGE = 11,
  I4_DOMAIN_ERROR = 12,
  I4_IO_ERROR = 13,
  I4_INTERNAL = 14
} i4_status;

typedef struct i4_config i4_config;
typedef struct i4_partition i4_partition;

I4_API const char* i4_version(void);
I4_API const char* i4_status_name(i4_status status);
/* Message of the last failed call on this thread, "" if none. */
I4_API const char* i4_last_error(void);
I4_API void i4_string_free(char* s);

/* kind: "generic", "star", "planted-flat", "planted-hyperplane" or "mixed".
 * coordinate_range 0 selects the generator default. */
typedef struct i4_generator {
  const char* kind;
  size_t lines;
  size_t planes;
  size_t planted_lines;
  size_t planted_planes;
  int64_t coordinate_range;
} i4_generator;

I4_API i4_status i4_config_generate(const i4_generator* spec, uint64_t seed, i4_config** out);
I4_API i4_status i4_config_parse(const char* json, i4_config** out);
I4_API i4_status i4_config_load(const char* path, i4_config** out);
I4_API i4_status i4_config_save(const i4_config* cfg, const char* path);
I4_API i4_status i4_config_serialize(const i4_config* cfg, char** out);
I4_API i4_status i4_config_digest(const i4_config* cfg, char** out);
I4_API size_t i4_config_line_count(const i4_config* cfg);
I4_API size_t i4_config_plane_count(const i4_config* cfg);
I4_API void i4_config_free(i4_config* cfg);

I4_API i4_status i4_count(const i4_config* cfg, size_t* incidences, size_t* containments);
/* part may be NULL. csv != 0 selects the per-incidence CSV table. */
I4_API i4_status i4_count_report(const i4_config* cfg, const i4_partition* part, int csv, char** out);

/* Partitions the configuration's incidence points and line base points.
 * delta is a rational string; NULL means 0. */
I4_API i4_status i4_partition_build(const i4_config* cfg, unsigned J, const char* delta, uint64_t seed,
                                    i4_partition** out);
I4_API i4_status i4_partition_parse(const char* text, i4_partition** out);
I4_API int i4_partition_degree(const i4_partition* part);
I4_API size_t i4_partition_rounds(const i4_partition* part);
I4_API i4_status i4_partition_dump(const i4_partition* part, char** out);
I4_API i4_status i4_partition_report(const i4_config* cfg, const i4_partition* part, char** out);
I4_API void i4_partition_free(i4_partition* part);

/* A threshold of 0 is derived as max(2, ceil(n^(1/2 + epsilon))); epsilon
 * NULL means 1/10. */
I4_API i4_status i4_degeneracy_report(const i4_config* cfg, const char* epsilon, size_t flat_threshold,
                                      size_t hyperplane_threshold, char** out);

/* Any NULL field takes its default: L=S=1, D=2, epsilon=1/10,
 * regime_factor=10, C1=C2=C4=1, dominance=1000. */
typedef struct i4_bound_params {
  const char* L;
  const char* S;
  const char* D;
  const char* epsilon;
  const char* regime_factor;
  const char* C1;
  const char* C2;
  const char* C4;
  const char* dominance;
} i4_bound_params;

I4_API i4_status i4_bound_table(const i4_bound_params* params, char** out);
/* 1 when the main-bound hypotheses (regime) hold, 0 otherwise. */
I4_API i4_status i4_bound_in_regime(const i4_bound_params* params, int* in_regime);

/* grid_json: {"L": [...], "S": [...], "D": [...], "epsilon": [...],
 * "constants": {...}, "dominance_constant": "...", "regime_factor": "..."}.
 * Either output pointer may be NULL. */
I4_API i4_status i4_grid(const char* grid_json, char** csv, char** summary);

/* Runs an experiment spec (JSON), renders the report in the spec's format and
 * writes it to the spec's output path when one is set. exit_code receives 0,
 * 2 (a bound whose hypotheses hold was exceeded) or 3 (strict mode with an
 * out-of-regime comparison). */
I4_API i4_status i4_experiment_run(const char* spec_json, char** report, int* exit_code);

/* Returns I4_INVARIANT_VIOLATION when any check fails; the report is filled
 * either way. part may be NULL. */
I4_API i4_status i4_verify(const i4_config* cfg, const i4_partition* part, char** report);

#ifdef __cplusplus
}
#endif

#endif
