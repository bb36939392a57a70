/*
 * nullfront: nullcone fronts of pseudo-spherical spacelike framed curves
 * in the anti-de Sitter 3-space.
 *
 * C interface of the shared library.  Handles are opaque; every function
 * returns an nf_status, writes results through out-parameters, and leaves
 * a human-readable message in nf_last_error() on failure.  Strings
 * returned through char** are heap-allocated; release them with
 * nf_string_free().
 */
#ifndef NULLFRONT_H
#define NULLFRONT_H

#include <stddef.h>

#ifndef NF_API
#if defined(__GNUC__) || defined(__clang__)
#define NF_API __attribute__((visibility("default")))
#else
#define NF_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nf_status {
    NF_OK = 0,
    NF_ERR_SYNTAX = 1,
    NF_ERR_UNKNOWN_IDENTIFIER = 2,
    NF_ERR_UNKNOWN_CATALOG_ENTRY = 3,
    NF_ERR_DOMAIN = 4,
    NF_ERR_DENOMINATOR_NEAR_ZERO = 5,
    NF_ERR_NOT_ON_ADS3 = 6,
    NF_ERR_NOT_UNIT_SPEED = 7,
    NF_ERR_INVALID_INITIAL_FRAME = 8,
    NF_ERR_STEP_TOO_LARGE = 9,
    NF_ERR_SINGULAR_FRAME_MATRIX = 10,
    NF_ERR_INSUFFICIENT_SAMPLES = 11,
    NF_ERR_INVALID_ARGUMENT = 12,
    NF_ERR_BAD_INPUT = 13,
    NF_ERR_IO = 14,
    NF_ERR_INTERNAL = 15
} nf_status;

typedef enum nf_sheet { NF_SHEET_PLUS = 0, NF_SHEET_MINUS = 1 } nf_sheet;

typedef enum nf_class {
    NF_CLASS_CUSPIDAL_EDGE = 1,
    NF_CLASS_SWALLOWTAIL = 2,
    NF_CLASS_HIGHER_DEGENERATE = 3
} nf_class;

typedef enum nf_mesh_format { NF_MESH_OBJ = 0, NF_MESH_CSV = 1 } nf_mesh_format;

/* Opaque framed-curve handle. */
typedef struct nf_curve nf_curve;

typedef struct nf_singular_point {
    double s0;
    double lambda0;
    int classification; /* nf_class */
    double alpha, dalpha, ddalpha;
    double sigma, dsigma;
    int sheet; /* nf_sheet */
    int alpha_root, sigma_root;
} nf_singular_point;

NF_API const char* nf_version(void);
NF_API const char* nf_status_name(nf_status status);
/* Message of the most recent failure on this thread. */
NF_API const char* nf_last_error(void);
NF_API void nf_string_free(char* text);
NF_API void nf_points_free(nf_singular_point* points);

/* Constant expression such as "2*pi" or "-1.5" (no variable s). */
NF_API nf_status nf_eval_constant(const char* text, double* out_value);

/* ---- curve construction ------------------------------------------------ */

NF_API nf_status nf_curve_from_catalog(const char* name, nf_curve** out);
/* JSON {name, gamma:[4 strings], v1:[4 strings], v2:[4 strings], interval:[a,b]} */
NF_API nf_status nf_curve_from_spec_json(const char* json_text, nf_curve** out);
/* CSV with header s,g1,g2,g3,g4,v11,...,v24 and strictly increasing s. */
NF_API nf_status nf_curve_from_samples_csv(const char* csv_text, nf_curve** out);
NF_API void nf_curve_free(nf_curve* curve);

NF_API nf_status nf_curve_interval(const nf_curve* curve, double* a, double* b);
NF_API nf_status nf_curve_epsilon(const nf_curve* curve, int* epsilon);
NF_API const char* nf_curve_name(const nf_curve* curve);

/* ---- pointwise evaluation ---------------------------------------------- */

/* Frame fields at s; any output pointer may be NULL. */
NF_API nf_status nf_curve_eval(const nf_curve* curve, double s, double gamma[4], double v1[4],
                        double v2[4], double mu[4]);
/* out = {alpha, ell, m, n, alpha', ell', m', n'} */
NF_API nf_status nf_curvature(const nf_curve* curve, double s, double out[8]);
NF_API nf_status nf_front_point(const nf_curve* curve, double s, double lam, nf_sheet sheet,
                         double out[4]);
NF_API nf_status nf_area_density(const nf_curve* curve, double s, double lam, nf_sheet sheet,
                          double* out);
NF_API nf_status nf_singular_lambda(const nf_curve* curve, double s, nf_sheet sheet, double tol_denom,
                             double* out);
NF_API nf_status nf_sigma(const nf_curve* curve, double s, nf_sheet sheet, double* sigma,
                   double* dsigma);
NF_API nf_status nf_transversality_det(const nf_curve* curve, double s, nf_sheet sheet,
                                double tol_denom, double* out);
NF_API nf_status nf_classify_at(const nf_curve* curve, double s0, nf_sheet sheet, double tol,
                         double tol_denom, nf_singular_point* out);
/* Library-allocated array; free with nf_points_free. */
NF_API nf_status nf_find_singularities(const nf_curve* curve, nf_sheet sheet, double a, double b,
                                int grid, double tol, double tol_denom,
                                nf_singular_point** out_points, size_t* out_count);
/* out = {d0..d4, levels} with levels counting leading vanishing derivatives.
 * relative_tol scales the vanishing tolerance by the largest |d_k|. */
NF_API nf_status nf_distance_jets(const nf_curve* curve, double s0, const double v0[4], double tol,
                           int relative_tol, double out_d[5], int* out_levels);
NF_API nf_status nf_locus_point(const nf_curve* curve, double s0, nf_sheet sheet, double tol_denom,
                         double out[4]);
/* Frame state as 17 numbers: s, gamma, v1, v2, mu. */
NF_API nf_status nf_frame_state_at(const nf_curve* curve, double s, double out[17]);

/* ---- job-level operations (serialized outputs) ------------------------- */

NF_API nf_status nf_verify_json(const nf_curve* curve, int grid, double tol, char** out_json,
                         int* out_pass);
NF_API nf_status nf_curvature_table_csv(const nf_curve* curve, double a, double b, int rows,
                                 char** out_csv);
/* Frenet table of the base curve gamma (regular-curve apparatus). */
NF_API nf_status nf_frenet_table_csv(const nf_curve* curve, double a, double b, int rows, double tol,
                              char** out_csv);
NF_API nf_status nf_singular_report_json(const nf_curve* curve, nf_sheet sheet, double a, double b,
                                  int grid, double tol, double tol_denom, char** out_json);
/* projection: NULL drops the first ambient coordinate, else a row-major
 * 3x4 matrix applied to the ambient coordinates. */
NF_API nf_status nf_front_mesh(const nf_curve* curve, nf_sheet sheet, double s0, double s1, double l0,
                        double l1, int ns, int nl, const double* projection,
                        nf_mesh_format format, double tol, double tol_denom, char** out_text);
/* quad_json: {alpha, ell, m, n: expression strings, epsilon: +-1};
 * init: 17 numbers as in nf_frame_state_at. */
NF_API nf_status nf_integrate_csv(const char* quad_json, const double init[17], double s_end,
                           double step, int reorthonormalize, char** out_csv);
NF_API nf_status nf_congruence_json(const nf_curve* curve1, const nf_curve* curve2, double s0,
                             char** out_json);
NF_API nf_status nf_distance_report_json(const nf_curve* curve, double s0, const double v0[4],
                                  double tol, double tol_denom, int relative_tol,
                                  char** out_json);
NF_API nf_status nf_catalog_list(int as_json, char** out_text);
/* Built-in verification battery; one line per check.  cli_path may be NULL;
 * when given, output determinism is also exercised through that binary. */
NF_API nf_status nf_selftest(const char* cli_path, char** out_report, int* out_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NULLFRONT_H */
