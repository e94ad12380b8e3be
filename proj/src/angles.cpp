#include "beltrami/angles.hpp"

#include <cmath>

namespace beltrami {
namespace {

void require_interior(const DiskPoint& p, const ModelParams& params) {
  if (!(boundary_gap_sq(p.coords(), params) > params.boundary_eps())) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
}

// Signed angle from the ray of direction `from` to the ray of direction `to`,
// in (-pi, pi].
double signed_ray_angle(const DiskPoint& p, double from, double to,
                        const ModelParams& params) {
  const double a = params.a();
  const double u = p.u();
  const double v = p.v();
  const double opening = to - from;
  const double num = a * p.w() * std::sin(opening);
  const double den = a * a * std::cos(opening) -
                     (v * std::cos(from) - u * std::sin(from)) *
                         (v * std::cos(to) - u * std::sin(to));
  return std::atan2(num, den);
}

}  // namespace

ChordDirection::ChordDirection(double inclination) {
  double x = std::fmod(inclination, kPi);
  if (x < 0.0) x += kPi;
  if (x >= kPi) x = 0.0;
  inclination_ = x;
}

ChordDirection ChordDirection::from_slope(double slope) {
  return ChordDirection(std::atan(slope));
}

ChordDirection ChordDirection::through(Vec2 from, Vec2 to) {
  const Vec2 d = to - from;
  return ChordDirection(std::atan2(d.v, d.u));
}

bool ChordDirection::is_vertical() const noexcept {
  return inclination_ == 0.5 * kPi;
}

double ChordDirection::slope() const noexcept {
  return std::tan(inclination_);
}

CoordinateCurveAngle coordinate_curve_angle(const DiskPoint& p,
                                            const ModelParams& params) {
  require_interior(p, params);
  const double a2 = params.a() * params.a();
  const double u = p.u();
  const double v = p.v();
  const double scale = std::sqrt((a2 - u * u) * (a2 - v * v));
  const double c = u * v / scale;
  const double s = params.a() * p.w() / scale;
  return {c, s, std::atan2(s, c)};
}

double tangent_angle(const DiskPoint& p, double m, double n,
                     const ModelParams& params) {
  require_interior(p, params);
  if (std::abs(m - n) <=
      params.tolerances().root_tol * (1.0 + std::abs(m) + std::abs(n))) {
    throw Error(ErrorCode::kEqualDirections, "chord directions coincide");
  }
  const double a = params.a();
  const double u = p.u();
  const double v = p.v();
  const double num = a * (n - m) * p.w();
  const double den = (1.0 + m * n) * a * a - (v - m * u) * (v - n * u);
  // Angle between lines is defined mod pi; fold into (0, pi) as measured
  // counterclockwise from the m-chord to the n-chord.
  double ccw = std::atan2(num, den);
  if (ccw <= 0.0) ccw += kPi;
  const double incl_m = ChordDirection::from_slope(m).inclination();
  const double incl_n = ChordDirection::from_slope(n).inclination();
  return incl_m < incl_n ? ccw : kPi - ccw;
}

double chord_angle_map(const DiskPoint& p, double mu, double nu,
                       const ModelParams& params) {
  require_interior(p, params);
  const double lo = ChordDirection(std::min(mu, nu)).inclination();
  const double hi = ChordDirection(std::max(mu, nu)).inclination();
  const double first = std::min(lo, hi);
  const double second = std::max(lo, hi);
  if (second - first <= params.tolerances().angle_eps ||
      kPi - (second - first) <= params.tolerances().angle_eps) {
    throw Error(ErrorCode::kEqualDirections, "chord directions coincide");
  }
  return signed_ray_angle(p, first, second, params);
}

double ray_angle(const DiskPoint& p, double from, double to,
                 const ModelParams& params) {
  require_interior(p, params);
  return std::abs(signed_ray_angle(p, from, to, params));
}

double angle_of_parallelism(double rho, const ModelParams& params) {
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::kNonpositiveDistance,
                "angle of parallelism needs rho > 0");
  }
  return std::atan2(1.0, std::sinh(rho / params.R()));
}

double angle_of_parallelism_half_angle(double rho, const ModelParams& params) {
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::kNonpositiveDistance,
                "angle of parallelism needs rho > 0");
  }
  return 2.0 * std::atan(std::exp(-rho / params.R()));
}

}  // namespace beltrami
