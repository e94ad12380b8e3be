/* C interface to the Beltrami-Klein disk kernel.
 *
 * All functions return a bk_status; on failure bk_last_error() describes the
 * problem for the calling thread. Output parameters are written only on
 * BK_OK. Contexts and reports are immutable after creation and may be shared
 * across threads.
 */
#ifndef BELTRAMI_BELTRAMI_H
#define BELTRAMI_BELTRAMI_H

#include <stddef.h>

#if defined(BK_BUILDING_LIBRARY)
#define BK_API __attribute__((visibility("default")))
#else
#define BK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_OUTSIDE_DISK = 1,
  BK_NEAR_BOUNDARY = 2,
  BK_NO_CONVERGENCE = 3,
  BK_DEGENERATE_PAIR = 4,
  BK_INSUFFICIENT_SAMPLES = 5,
  BK_COINCIDENT_CHORDS = 6,
  BK_EQUAL_DIRECTIONS = 7,
  BK_NONPOSITIVE_DISTANCE = 8,
  BK_DEGENERATE_TRIANGLE = 9,
  BK_INVALID_ANGLES = 10,
  BK_AT_IDEAL_CENTER = 11,
  BK_INVALID_ARGUMENT = 12,
  BK_SCHEMA_VIOLATION = 13,
  BK_INTERNAL = 99
} bk_status;

typedef struct bk_context bk_context;
typedef struct bk_report bk_report;

BK_API const char* bk_version(void);
BK_API const char* bk_status_name(bk_status status);
/* Message for the last failing call on this thread ("" if none). */
BK_API const char* bk_last_error(void);

/* Model with disk radius a and curvature scale R (K = -1/R^2). */
BK_API bk_status bk_context_create(double a, double R, bk_context** out);
BK_API void bk_context_destroy(bk_context* ctx);
BK_API double bk_context_a(const bk_context* ctx);
BK_API double bk_context_R(const bk_context* ctx);

BK_API bk_status bk_distance(const bk_context* ctx, double pu, double pv,
                             double qu, double qv, double* out);
BK_API bk_status bk_cross_ratio_distance(const bk_context* ctx, double pu,
                                         double pv, double qu, double qv,
                                         double* out);
/* Hyperbolic angle at (u, v) between chords of inclinations mu, nu. */
BK_API bk_status bk_chord_angle(const bk_context* ctx, double u, double v,
                                double mu, double nu, double* out);
/* Same angle from chord slopes m, n. */
BK_API bk_status bk_tangent_angle(const bk_context* ctx, double u, double v,
                                  double m, double n, double* out);
BK_API bk_status bk_angle_of_parallelism(const bk_context* ctx, double rho,
                                         double* out);

/* vertices: 3 (u, v) pairs. angles: 3 interior angles in the order given.
 * area_defect = R^2 (pi - sum); area_quadrature integrates the area element. */
BK_API bk_status bk_triangle(const bk_context* ctx, const double vertices[6],
                             double angles[3], double* area_defect,
                             double* area_quadrature);

/* Coordinate conversions of an interior point (u, v). */
BK_API bk_status bk_to_hyperboloid(const bk_context* ctx, double u, double v,
                                   double xyz[3]);
BK_API bk_status bk_from_hyperboloid(const bk_context* ctx, double x, double y,
                                     double z, double uv[2]);
/* (r, phi) Euclidean polar and (rho, phi) hyperbolic polar. */
BK_API bk_status bk_to_polar(const bk_context* ctx, double u, double v,
                             double r_phi[2], double rho_phi[2]);
/* (xi, eta) relative to the diameter v = 0. */
BK_API bk_status bk_to_equidistant(const bk_context* ctx, double u, double v,
                                   double xi_eta[2]);
/* (rho, sigma) relative to the ideal point at boundary angle ideal_angle. */
BK_API bk_status bk_to_horocyclic(const bk_context* ctx, double u, double v,
                                  double ideal_angle, double rho_sigma[2]);

/* Curve samplers: write n (u, v) pairs into out (capacity 2 n doubles). */
BK_API bk_status bk_curve_circle(const bk_context* ctx, double cu, double cv,
                                 double rho, size_t n, double* out);
BK_API bk_status bk_curve_equidistant(const bk_context* ctx, double xi,
                                      size_t n, double* out);
BK_API bk_status bk_curve_horocycle(const bk_context* ctx, double ideal_angle,
                                    double rho_offset, size_t n, double* out);
/* n >= 2 evenly spaced points of the chord through p and q, from the ideal
 * endpoint behind p to the one beyond q (both included). */
BK_API bk_status bk_curve_geodesic(const bk_context* ctx, double pu, double pv,
                                   double qu, double qv, size_t n, double* out);

/* Scene JSON -> SVG text. Free the string with bk_string_free. */
BK_API bk_status bk_render_scene(const char* scene_json, char** svg_out);
/* Scene JSON -> canonical scene JSON. */
BK_API bk_status bk_normalize_scene(const char* scene_json, char** json_out);
BK_API void bk_string_free(char* s);

/* Acceptance checks. */
BK_API bk_status bk_verify_run(double tol_scale, bk_report** out);
BK_API void bk_report_destroy(bk_report* report);
BK_API size_t bk_report_size(const bk_report* report);
BK_API int bk_report_passed(const bk_report* report);
BK_API bk_status bk_report_check(const bk_report* report, size_t index,
                                 const char** name, int* passed,
                                 double* measured, double* expected,
                                 double* tolerance);

#ifdef __cplusplus
}
#endif

#endif /* BELTRAMI_BELTRAMI_H */
