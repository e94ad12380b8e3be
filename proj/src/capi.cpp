#include "beltrami/beltrami.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "beltrami/angles.hpp"
#include "beltrami/area.hpp"
#include "beltrami/curves.hpp"
#include "beltrami/geodesy.hpp"
#include "beltrami/models.hpp"
#include "beltrami/scene.hpp"
#include "beltrami/verify.hpp"

struct bk_context {
  beltrami::ModelParams params;
};

struct bk_report {
  beltrami::VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

bk_status to_status(beltrami::ErrorCode code) {
  using beltrami::ErrorCode;
  switch (code) {
    case ErrorCode::kOutsideDisk: return BK_OUTSIDE_DISK;
    case ErrorCode::kNearBoundary: return BK_NEAR_BOUNDARY;
    case ErrorCode::kNoConvergence: return BK_NO_CONVERGENCE;
    case ErrorCode::kDegeneratePair: return BK_DEGENERATE_PAIR;
    case ErrorCode::kInsufficientSamples: return BK_INSUFFICIENT_SAMPLES;
    case ErrorCode::kCoincidentChords: return BK_COINCIDENT_CHORDS;
    case ErrorCode::kEqualDirections: return BK_EQUAL_DIRECTIONS;
    case ErrorCode::kNonpositiveDistance: return BK_NONPOSITIVE_DISTANCE;
    case ErrorCode::kDegenerateTriangle: return BK_DEGENERATE_TRIANGLE;
    case ErrorCode::kInvalidAngles: return BK_INVALID_ANGLES;
    case ErrorCode::kAtIdealCenter: return BK_AT_IDEAL_CENTER;
    case ErrorCode::kInvalidArgument: return BK_INVALID_ARGUMENT;
    case ErrorCode::kSchemaViolation: return BK_SCHEMA_VIOLATION;
  }
  return BK_INTERNAL;
}

template <typename Fn>
bk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BK_OK;
  } catch (const beltrami::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BK_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BK_INTERNAL;
  }
}

bk_status null_argument() {
  g_last_error = "null argument";
  return BK_INVALID_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void write_points(const std::vector<beltrami::DiskPoint>& pts, double* out) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out[2 * i] = pts[i].u();
    out[2 * i + 1] = pts[i].v();
  }
}

}  // namespace

extern "C" {

const char* bk_version(void) { return "0.1.0"; }

const char* bk_status_name(bk_status status) {
  switch (status) {
    case BK_OK: return "ok";
    case BK_OUTSIDE_DISK: return "outside disk";
    case BK_NEAR_BOUNDARY: return "near boundary";
    case BK_NO_CONVERGENCE: return "no convergence";
    case BK_DEGENERATE_PAIR: return "degenerate pair";
    case BK_INSUFFICIENT_SAMPLES: return "insufficient samples";
    case BK_COINCIDENT_CHORDS: return "coincident chords";
    case BK_EQUAL_DIRECTIONS: return "equal directions";
    case BK_NONPOSITIVE_DISTANCE: return "nonpositive distance";
    case BK_DEGENERATE_TRIANGLE: return "degenerate triangle";
    case BK_INVALID_ANGLES: return "invalid angles";
    case BK_AT_IDEAL_CENTER: return "at ideal center";
    case BK_INVALID_ARGUMENT: return "invalid argument";
    case BK_SCHEMA_VIOLATION: return "schema violation";
    case BK_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* bk_last_error(void) { return g_last_error.c_str(); }

bk_status bk_context_create(double a, double R, bk_context** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new bk_context{beltrami::ModelParams(a, R)}; });
}

void bk_context_destroy(bk_context* ctx) { delete ctx; }

double bk_context_a(const bk_context* ctx) { return ctx ? ctx->params.a() : NAN; }
double bk_context_R(const bk_context* ctx) { return ctx ? ctx->params.R() : NAN; }

bk_status bk_distance(const bk_context* ctx, double pu, double pv, double qu,
                      double qv, double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    *out = beltrami::distance(beltrami::DiskPoint(pu, pv, P),
                              beltrami::DiskPoint(qu, qv, P), P);
  });
}

bk_status bk_cross_ratio_distance(const bk_context* ctx, double pu, double pv,
                                  double qu, double qv, double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    *out = beltrami::cross_ratio_distance(beltrami::DiskPoint(pu, pv, P),
                                          beltrami::DiskPoint(qu, qv, P), P);
  });
}

bk_status bk_chord_angle(const bk_context* ctx, double u, double v, double mu,
                         double nu, double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    *out = beltrami::chord_angle_map(beltrami::DiskPoint(u, v, P), mu, nu, P);
  });
}

bk_status bk_tangent_angle(const bk_context* ctx, double u, double v, double m,
                           double n, double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    *out = beltrami::tangent_angle(beltrami::DiskPoint(u, v, P), m, n, P);
  });
}

bk_status bk_angle_of_parallelism(const bk_context* ctx, double rho,
                                  double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] { *out = beltrami::angle_of_parallelism(rho, ctx->params); });
}

bk_status bk_triangle(const bk_context* ctx, const double vertices[6],
                      double angles[3], double* area_defect,
                      double* area_quadrature) {
  if (!ctx || !vertices || !angles || !area_defect || !area_quadrature) {
    return null_argument();
  }
  return guarded([&] {
    const auto& P = ctx->params;
    std::array<beltrami::DiskPoint, 3> pts{
        beltrami::DiskPoint(vertices[0], vertices[1], P),
        beltrami::DiskPoint(vertices[2], vertices[3], P),
        beltrami::DiskPoint(vertices[4], vertices[5], P)};
    const beltrami::Triangle tri({pts[0], pts[1], pts[2]}, P);
    // Triangle stores vertices counterclockwise; report angles in input order.
    double ordered[3];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (tri.coords()[j] == pts[i].coords()) ordered[i] = tri.angles()[j];
      }
    }
    const double defect =
        beltrami::triangle_area_defect(ordered[0], ordered[1], ordered[2], P);
    const double quad =
        beltrami::area_quadrature(tri, P, P.tolerances().quad_tol);
    for (int i = 0; i < 3; ++i) angles[i] = ordered[i];
    *area_defect = defect;
    *area_quadrature = quad;
  });
}

bk_status bk_to_hyperboloid(const bk_context* ctx, double u, double v,
                            double xyz[3]) {
  if (!ctx || !xyz) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    const auto h = beltrami::lift_to_hyperboloid(beltrami::DiskPoint(u, v, P), P);
    xyz[0] = h.x();
    xyz[1] = h.y();
    xyz[2] = h.z();
  });
}

bk_status bk_from_hyperboloid(const bk_context* ctx, double x, double y,
                              double z, double uv[2]) {
  if (!ctx || !uv) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    const auto p = beltrami::project_to_disk(beltrami::HyperboloidPoint(x, y, z, P), P);
    uv[0] = p.u();
    uv[1] = p.v();
  });
}

bk_status bk_to_polar(const bk_context* ctx, double u, double v,
                      double r_phi[2], double rho_phi[2]) {
  if (!ctx || !r_phi || !rho_phi) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    const auto polar = beltrami::cartesian_to_polar(beltrami::DiskPoint(u, v, P));
    const double rho = beltrami::dist_from_origin(polar.r, P);
    r_phi[0] = polar.r;
    r_phi[1] = polar.phi;
    rho_phi[0] = rho;
    rho_phi[1] = polar.phi;
  });
}

bk_status bk_to_equidistant(const bk_context* ctx, double u, double v,
                            double xi_eta[2]) {
  if (!ctx || !xi_eta) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    const auto c = beltrami::equidistant_coords(beltrami::DiskPoint(u, v, P), P);
    xi_eta[0] = c.xi;
    xi_eta[1] = c.eta;
  });
}

bk_status bk_to_horocyclic(const bk_context* ctx, double u, double v,
                           double ideal_angle, double rho_sigma[2]) {
  if (!ctx || !rho_sigma) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    const auto c = beltrami::horocycle_coords(beltrami::DiskPoint(u, v, P),
                                              beltrami::IdealPoint(ideal_angle), P);
    rho_sigma[0] = c.rho;
    rho_sigma[1] = c.sigma;
  });
}

bk_status bk_curve_circle(const bk_context* ctx, double cu, double cv,
                          double rho, size_t n, double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    const auto& P = ctx->params;
    write_points(beltrami::circle_locus(beltrami::DiskPoint(cu, cv, P), rho, n, P), out);
  });
}

bk_status bk_curve_equidistant(const bk_context* ctx, double xi, size_t n,
                               double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    write_points(beltrami::equidistant_locus(beltrami::Equidistant{xi}, n, ctx->params),
                 out);
  });
}

bk_status bk_curve_horocycle(const bk_context* ctx, double ideal_angle,
                             double rho_offset, size_t n, double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    const beltrami::Horocycle h{beltrami::IdealPoint(ideal_angle), rho_offset};
    write_points(beltrami::horocycle_locus(h, n, ctx->params), out);
  });
}

bk_status bk_curve_geodesic(const bk_context* ctx, double pu, double pv,
                            double qu, double qv, size_t n, double* out) {
  if (!ctx || !out) return null_argument();
  return guarded([&] {
    if (n < 2) {
      throw beltrami::Error(beltrami::ErrorCode::kInvalidArgument,
                            "need at least 2 samples");
    }
    const auto& P = ctx->params;
    const auto g = beltrami::chord_through(beltrami::DiskPoint(pu, pv, P),
                                           beltrami::DiskPoint(qu, qv, P), P);
    const beltrami::Vec2 e0 = g.first().coords(P);
    const beltrami::Vec2 e1 = g.second().coords(P);
    for (size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(n - 1);
      const beltrami::Vec2 x = e0 + t * (e1 - e0);
      out[2 * i] = x.u;
      out[2 * i + 1] = x.v;
    }
  });
}

bk_status bk_render_scene(const char* scene_json, char** svg_out) {
  if (!scene_json || !svg_out) return null_argument();
  return guarded([&] {
    *svg_out = duplicate(beltrami::render_svg(beltrami::parse_scene(scene_json)));
  });
}

bk_status bk_normalize_scene(const char* scene_json, char** json_out) {
  if (!scene_json || !json_out) return null_argument();
  return guarded([&] {
    *json_out = duplicate(beltrami::scene_to_json(beltrami::parse_scene(scene_json)));
  });
}

void bk_string_free(char* s) { std::free(s); }

bk_status bk_verify_run(double tol_scale, bk_report** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new bk_report{beltrami::run_verification(tol_scale)};
  });
}

void bk_report_destroy(bk_report* report) { delete report; }

size_t bk_report_size(const bk_report* report) {
  return report ? report->report.checks.size() : 0;
}

int bk_report_passed(const bk_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

bk_status bk_report_check(const bk_report* report, size_t index,
                          const char** name, int* passed, double* measured,
                          double* expected, double* tolerance) {
  if (!report) return null_argument();
  if (index >= report->report.checks.size()) {
    g_last_error = "check index out of range";
    return BK_INVALID_ARGUMENT;
  }
  const auto& c = report->report.checks[index];
  if (name) *name = c.name.c_str();
  if (passed) *passed = c.passed ? 1 : 0;
  if (measured) *measured = c.measured;
  if (expected) *expected = c.expected;
  if (tolerance) *tolerance = c.tolerance;
  g_last_error.clear();
  return BK_OK;
}

}  // extern "C"
