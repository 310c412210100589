/*
 * gcsing C API: parallel-singularity analysis of limited-DOF parallel
 * manipulators from bracket (Grassmann-Cayley) conditions.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a gcs_status; on
 * failure gcs_last_error() describes the problem for the calling thread.
 * Strings returned by accessors live as long as the handle they came from.
 */
#ifndef GCSING_H
#define GCSING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GCS_BUILDING_LIBRARY)
#    define GCS_API __declspec(dllexport)
#  else
#    define GCS_API __declspec(dllimport)
#  endif
#else
#  define GCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcs_status {
  GCS_OK = 0,
  GCS_E_ARGUMENT = 1,
  GCS_E_PARSE = 2,
  GCS_E_IO = 3,
  GCS_E_INVARIANT = 4,   /* description or configuration violates a model invariant */
  GCS_E_DEGENERATE = 5,  /* degenerate geometry: coincident points, zero legs, ... */
  GCS_E_ORACLE = 6,      /* closed form disagrees with the determinant/rank oracle */
  GCS_E_INTERNAL = 7
} gcs_status;

typedef struct gcs_model gcs_model;
typedef struct gcs_report gcs_report;
typedef struct gcs_verify_result gcs_verify_result;

GCS_API const char* gcs_version(void);
/* Message of the last failed call on this thread ("" if none). */
GCS_API const char* gcs_last_error(void);
/* Name of the library error kind of the last failure, e.g. "ParallelogramViolation". */
GCS_API const char* gcs_last_error_kind(void);

/* ---- primitives ------------------------------------------------------- */

/* points: 4 points x (x, y, z, w), row-major. */
GCS_API gcs_status gcs_bracket4(const double points[16], double* out);
/* a, b: homogeneous points; out: (direction; moment). */
GCS_API gcs_status gcs_join(const double a[4], const double b[4], double out[6]);
/* points: 12 points a..l x (x, y, z, w); spans are ab, cd, ef, gh, ij, kl. */
GCS_API gcs_status gcs_superbracket_det(const double points[48], double* out);
GCS_API gcs_status gcs_superbracket_expand(const double points[48], double* out);

/* ---- manipulator models ----------------------------------------------- */

GCS_API gcs_status gcs_model_load(const char* path, gcs_model** out);
GCS_API gcs_status gcs_model_parse(const char* text, gcs_model** out);
GCS_API void gcs_model_free(gcs_model* model);
/* "upu3", "verne" or "delta". */
GCS_API const char* gcs_model_kind(const gcs_model* model);
GCS_API double gcs_model_tolerance(const gcs_model* model);

/* tol <= 0 uses the model's tolerance. The oracle cross-checks are applied:
 * disagreement returns GCS_E_ORACLE. */
GCS_API gcs_status gcs_analyze(const gcs_model* model, const double pose[3], double tol,
                               gcs_report** out);
GCS_API void gcs_report_free(gcs_report* report);
GCS_API double gcs_report_value(const gcs_report* report);
GCS_API int gcs_report_rank(const gcs_report* report);
GCS_API int gcs_report_is_singular(const gcs_report* report);
GCS_API double gcs_report_gauge(const gcs_report* report);
GCS_API double gcs_report_oracle_det(const gcs_report* report);
GCS_API double gcs_report_oracle_delta(const gcs_report* report);
GCS_API size_t gcs_report_factor_count(const gcs_report* report);
GCS_API const char* gcs_report_factor_name(const gcs_report* report, size_t index);
GCS_API double gcs_report_factor_value(const gcs_report* report, size_t index);
GCS_API size_t gcs_report_label_count(const gcs_report* report);
GCS_API const char* gcs_report_label(const gcs_report* report, size_t index);
/* Human-readable multi-line report. */
GCS_API const char* gcs_report_text(const gcs_report* report);

/* grid: "axis=min:max:steps[,...]" over axes x, y, z. Writes CSV to out_path,
 * or to memory when out_path is NULL (read back with gcs_sweep_text). */
GCS_API gcs_status gcs_sweep(const gcs_model* model, const char* grid, double tol,
                             unsigned workers, const char* out_path);
/* CSV of the last in-memory sweep on this thread. */
GCS_API const char* gcs_sweep_text(void);

/* ---- verification ------------------------------------------------------ */

GCS_API gcs_status gcs_verify(uint64_t seed, int trials, gcs_verify_result** out);
GCS_API void gcs_verify_result_free(gcs_verify_result* result);
GCS_API int gcs_verify_result_passed(const gcs_verify_result* result);
GCS_API size_t gcs_verify_result_suite_count(const gcs_verify_result* result);
GCS_API const char* gcs_verify_result_suite_name(const gcs_verify_result* result, size_t index);
GCS_API int gcs_verify_result_suite_passed(const gcs_verify_result* result, size_t index);
GCS_API double gcs_verify_result_suite_residual(const gcs_verify_result* result, size_t index);
GCS_API const char* gcs_verify_result_text(const gcs_verify_result* result);
GCS_API uint64_t gcs_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif /* GCSING_H */
