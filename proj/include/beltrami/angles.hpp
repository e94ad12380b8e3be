#pragma once

#include "beltrami/core.hpp"

namespace beltrami {

/// Euclidean inclination of a chord with the u-axis, in [0, pi).
class ChordDirection {
 public:
  explicit ChordDirection(double inclination);
  static ChordDirection from_slope(double slope);
  static ChordDirection through(Vec2 from, Vec2 to);

  double inclination() const noexcept { return inclination_; }
  bool is_vertical() const noexcept;
  /// tan(inclination); only meaningful when !is_vertical().
  double slope() const noexcept;

 private:
  double inclination_;
};

struct CoordinateCurveAngle {
  double cos_theta;
  double sin_theta;
  double theta;
};

/// Angle between the coordinate curves u = const and v = const at p.
CoordinateCurveAngle coordinate_curve_angle(const DiskPoint& p,
                                            const ModelParams& params);

/// Hyperbolic angle at p between chords of slopes m and n, measured
/// counterclockwise from the chord of lower inclination; in (0, pi).
double tangent_angle(const DiskPoint& p, double m, double n,
                     const ModelParams& params);

/// Same angle for chords given by inclinations mu, nu in [0, pi). Handles
/// vertical chords. Symmetric in (mu, nu).
double chord_angle_map(const DiskPoint& p, double mu, double nu,
                       const ModelParams& params);

/// Unsigned hyperbolic angle in [0, pi] between two rays leaving p with
/// Euclidean directions `from` and `to` (radians, any range).
double ray_angle(const DiskPoint& p, double from, double to,
                 const ModelParams& params);

/// cot(theta) = sinh(rho/R).
double angle_of_parallelism(double rho, const ModelParams& params);

/// tan(theta/2) = exp(-rho/R); the second closed form of the same angle.
double angle_of_parallelism_half_angle(double rho, const ModelParams& params);

}  // namespace beltrami
