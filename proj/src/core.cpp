#include "beltrami/core.hpp"

#include <cmath>
#include <string>

namespace beltrami {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOutsideDisk: return "OutsideDisk";
    case ErrorCode::kNearBoundary: return "NearBoundary";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
    case ErrorCode::kCoincidentChords: return "CoincidentChords";
    case ErrorCode::kEqualDirections: return "EqualDirections";
    case ErrorCode::kNonpositiveDistance: return "NonpositiveDistance";
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kInvalidAngles: return "InvalidAngles";
    case ErrorCode::kAtIdealCenter: return "AtIdealCenter";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

ModelParams::ModelParams(double a, double R, Tolerances tol)
    : a_(a), R_(R), tol_(tol) {
  if (!std::isfinite(a) || !std::isfinite(R) || a <= 0.0 || R <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "model parameters a and R must be finite and positive");
  }
  if (!(tol.boundary_eps > 0.0) || !(tol.quad_tol > 0.0) ||
      !(tol.root_tol > 0.0) || !(tol.angle_eps > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerances must be positive");
  }
}

double dot(Vec2 p, Vec2 q) noexcept { return p.u * q.u + p.v * q.v; }
double cross(Vec2 p, Vec2 q) noexcept { return p.u * q.v - p.v * q.u; }
double norm(Vec2 p) noexcept { return std::hypot(p.u, p.v); }

double boundary_gap_sq(Vec2 p, const ModelParams& params) noexcept {
  const double a = params.a();
  return a * a - p.u * p.u - p.v * p.v;
}

DiskPoint::DiskPoint(double u, double v, const ModelParams& params)
    : u_(u), v_(v), w2_(0.0) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidArgument, "point coordinates must be finite");
  }
  w2_ = boundary_gap_sq({u, v}, params);
  if (w2_ <= params.boundary_eps()) {
    throw Error(ErrorCode::kOutsideDisk, "point outside disk");
  }
}

double DiskPoint::w() const noexcept { return std::sqrt(w2_); }

DiskPoint make_disk_point(double u, double v, const ModelParams& params) {
  return DiskPoint(u, v, params);
}

IdealPoint::IdealPoint(double angle) : angle_(normalize_angle(angle)) {
  if (!std::isfinite(angle)) {
    throw Error(ErrorCode::kInvalidArgument, "ideal point angle must be finite");
  }
}

Vec2 IdealPoint::coords(const ModelParams& params) const noexcept {
  return {params.a() * std::cos(angle_), params.a() * std::sin(angle_)};
}

Geodesic::Geodesic(IdealPoint first, IdealPoint second,
                   const ModelParams& params)
    : first_(first), second_(second) {
  if (std::abs(reduce_angle(second.angle() - first.angle())) <=
      params.tolerances().angle_eps) {
    throw Error(ErrorCode::kDegeneratePair, "geodesic endpoints coincide");
  }
}

HyperboloidPoint::HyperboloidPoint(double x, double y, double z,
                                   const ModelParams& params)
    : x_(x), y_(y), z_(z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z) || z <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "hyperboloid point must be finite with z > 0");
  }
  const double R2 = params.R() * params.R();
  const double on_sheet = std::sqrt(x * x + y * y + R2);
  const double residual = std::abs(x * x + y * y - z * z + R2) / (z * z);
  if (residual > 1e-8) {
    throw Error(ErrorCode::kInvalidArgument,
                "point is not on the hyperboloid sheet");
  }
  z_ = on_sheet;
}

double normalize_angle(double angle) noexcept {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double reduce_angle(double angle) noexcept {
  double r = normalize_angle(angle);
  if (r > kPi) r -= kTwoPi;
  return r;
}

EuclideanPolar cartesian_to_polar(const DiskPoint& p) {
  const double r = std::hypot(p.u(), p.v());
  if (r == 0.0) return {0.0, 0.0};
  return {r, normalize_angle(std::atan2(p.v(), p.u()))};
}

DiskPoint polar_to_cartesian(const EuclideanPolar& p,
                             const ModelParams& params) {
  if (!(p.r >= 0.0) || p.r >= params.a()) {
    throw Error(ErrorCode::kOutsideDisk, "point outside disk");
  }
  return DiskPoint(p.r * std::cos(p.phi), p.r * std::sin(p.phi), params);
}

}  // namespace beltrami
