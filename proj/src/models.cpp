#include "beltrami/models.hpp"

#include <cmath>

namespace beltrami {
namespace {

MinkowskiVector as_vector(const HyperboloidPoint& h) {
  return {h.x(), h.y(), h.z()};
}

MinkowskiVector lift_raw(double u, double v, const ModelParams& params) {
  const double a = params.a();
  const double z = params.R() * a / std::sqrt(a * a - u * u - v * v);
  return {u * z / a, v * z / a, z};
}

MinkowskiVector polar_raw(double m, double theta, const ModelParams& params) {
  const double R = params.R();
  return {R * std::sinh(m) * std::cos(theta), R * std::sinh(m) * std::sin(theta),
          R * std::cosh(m)};
}

MinkowskiVector central_difference(const MinkowskiVector& fwd,
                                   const MinkowskiVector& bwd, double h) {
  return {(fwd.x - bwd.x) / (2.0 * h), (fwd.y - bwd.y) / (2.0 * h),
          (fwd.z - bwd.z) / (2.0 * h)};
}

}  // namespace

HyperboloidPoint lift_to_hyperboloid(const DiskPoint& p,
                                     const ModelParams& params) {
  if (!(boundary_gap_sq(p.coords(), params) > params.boundary_eps())) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
  const MinkowskiVector h = lift_raw(p.u(), p.v(), params);
  return HyperboloidPoint(h.x, h.y, h.z, params);
}

DiskPoint project_to_disk(const HyperboloidPoint& h,
                          const ModelParams& params) {
  const double a = params.a();
  return DiskPoint(a * h.x() / h.z(), a * h.y() / h.z(), params);
}

double minkowski_inner(const MinkowskiVector& h1, const MinkowskiVector& h2) {
  return h1.x * h2.x + h1.y * h2.y - h1.z * h2.z;
}

double minkowski_inner(const HyperboloidPoint& h1, const HyperboloidPoint& h2) {
  return minkowski_inner(as_vector(h1), as_vector(h2));
}

double hyperboloid_distance(const HyperboloidPoint& h1,
                            const HyperboloidPoint& h2,
                            const ModelParams& params) {
  const double R2 = params.R() * params.R();
  const double c = std::max(1.0, -minkowski_inner(h1, h2) / R2);
  return params.R() * std::acosh(c);
}

HyperboloidPoint polar_parametrization(const HyperboloidPolar& q,
                                       const ModelParams& params) {
  if (!(q.m >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "m must be nonnegative");
  }
  const MinkowskiVector h = polar_raw(q.m, q.theta, params);
  return HyperboloidPoint(h.x, h.y, h.z, params);
}

PolarCoefficients polar_metric_check(double m, double theta,
                                     const ModelParams& params) {
  if (!(m > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  }
  const double h = 1e-6 * std::min(1.0, m);
  const MinkowskiVector d_m = central_difference(
      polar_raw(m + h, theta, params), polar_raw(m - h, theta, params), h);
  const MinkowskiVector d_theta = central_difference(
      polar_raw(m, theta + h, params), polar_raw(m, theta - h, params), h);
  return {minkowski_inner(d_m, d_m), minkowski_inner(d_theta, d_theta)};
}

FundamentalForm pullback_fundamental_form(const DiskPoint& p,
                                          const ModelParams& params) {
  if (!(boundary_gap_sq(p.coords(), params) > params.boundary_eps())) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
  const double h = 1e-6 * params.a();
  const double u = p.u();
  const double v = p.v();
  const MinkowskiVector d_u = central_difference(
      lift_raw(u + h, v, params), lift_raw(u - h, v, params), h);
  const MinkowskiVector d_v = central_difference(
      lift_raw(u, v + h, params), lift_raw(u, v - h, params), h);
  return {minkowski_inner(d_u, d_u), minkowski_inner(d_u, d_v),
          minkowski_inner(d_v, d_v)};
}

}  // namespace beltrami
