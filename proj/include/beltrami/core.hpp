#pragma once

#include <numbers>

#include "beltrami/error.hpp"

namespace beltrami {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Numerical tolerances shared by every module. `boundary_eps` is relative to
/// a^2 so that the interior test scales with the disk.
struct Tolerances {
  double boundary_eps = 1e-12;
  double quad_tol = 1e-10;
  double root_tol = 1e-12;
  double angle_eps = 1e-9;
};

/// Disk radius `a` and curvature scale `R` of the model. Gaussian curvature is
/// K = -1/R^2.
class ModelParams {
 public:
  ModelParams() = default;
  ModelParams(double a, double R, Tolerances tol = {});

  double a() const noexcept { return a_; }
  double R() const noexcept { return R_; }
  double curvature() const noexcept { return -1.0 / (R_ * R_); }
  const Tolerances& tolerances() const noexcept { return tol_; }

  /// Absolute threshold on w^2 = a^2 - u^2 - v^2 below which a point is
  /// treated as lying on (or outside) the boundary.
  double boundary_eps() const noexcept { return tol_.boundary_eps * a_ * a_; }

 private:
  double a_ = 1.0;
  double R_ = 1.0;
  Tolerances tol_{};
};

/// Plain Euclidean 2-vector for coordinates, directions and differentials.
struct Vec2 {
  double u = 0.0;
  double v = 0.0;

  friend Vec2 operator+(Vec2 p, Vec2 q) { return {p.u + q.u, p.v + q.v}; }
  friend Vec2 operator-(Vec2 p, Vec2 q) { return {p.u - q.u, p.v - q.v}; }
  friend Vec2 operator*(double s, Vec2 p) { return {s * p.u, s * p.v}; }
  friend bool operator==(Vec2, Vec2) = default;
};

double dot(Vec2 p, Vec2 q) noexcept;
double cross(Vec2 p, Vec2 q) noexcept;
double norm(Vec2 p) noexcept;

/// w^2 = a^2 - u^2 - v^2 for raw coordinates.
double boundary_gap_sq(Vec2 p, const ModelParams& params) noexcept;

/// Interior point of the disk. The constructor is the only way to obtain one,
/// so every DiskPoint satisfies w^2 > boundary_eps for the params it was
/// validated against.
class DiskPoint {
 public:
  DiskPoint(double u, double v, const ModelParams& params);

  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }
  double w2() const noexcept { return w2_; }
  double w() const noexcept;
  Vec2 coords() const noexcept { return {u_, v_}; }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  double u_;
  double v_;
  double w2_;
};

DiskPoint make_disk_point(double u, double v, const ModelParams& params);

/// Point on the boundary circle, stored by its angle so that u^2 + v^2 = a^2
/// holds by construction.
class IdealPoint {
 public:
  explicit IdealPoint(double angle);

  double angle() const noexcept { return angle_; }
  Vec2 coords(const ModelParams& params) const noexcept;

  friend bool operator==(const IdealPoint&, const IdealPoint&) = default;

 private:
  double angle_;
};

struct EuclideanPolar {
  double r = 0.0;
  double phi = 0.0;
};

struct HyperbolicPolar {
  double rho = 0.0;
  double phi = 0.0;
};

/// Chord of the disk identified by its two ideal endpoints.
class Geodesic {
 public:
  Geodesic(IdealPoint first, IdealPoint second, const ModelParams& params);

  const IdealPoint& first() const noexcept { return first_; }
  const IdealPoint& second() const noexcept { return second_; }

 private:
  IdealPoint first_;
  IdealPoint second_;
};

/// Point on the upper sheet x^2 + y^2 - z^2 = -R^2. Construction repairs z
/// when the sheet residual is pure rounding (relative residual below 1e-8)
/// and rejects anything further off.
class HyperboloidPoint {
 public:
  HyperboloidPoint(double x, double y, double z, const ModelParams& params);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double z() const noexcept { return z_; }

 private:
  double x_;
  double y_;
  double z_;
};

/// Angle in [0, 2pi).
double normalize_angle(double angle) noexcept;
/// Angle difference in (-pi, pi].
double reduce_angle(double angle) noexcept;

EuclideanPolar cartesian_to_polar(const DiskPoint& p);
DiskPoint polar_to_cartesian(const EuclideanPolar& p, const ModelParams& params);

}  // namespace beltrami
