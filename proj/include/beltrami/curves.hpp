#pragma once

#include <cstddef>
#include <vector>

#include "beltrami/core.hpp"
#include "beltrami/metric.hpp"

namespace beltrami {

/// Circumference 2 pi R sinh(rho/R) of a geodesic circle of radius rho.
double circumference(double rho, const ModelParams& params);

/// Locus at hyperbolic distance `rho` from `center`. Every locus point
/// satisfies (a^2 - u u0 - v v0)/w = c_const with c_const = w0 cosh(rho/R).
struct GeodesicCircle {
  DiskPoint center;
  double rho;
  double c_const;
};

GeodesicCircle make_geodesic_circle(const DiskPoint& center, double rho,
                                    const ModelParams& params);

/// n points of the circle, one per Euclidean ray direction 2 pi k / n from the
/// center, each located by bisection on the (monotone) distance along the ray.
std::vector<DiskPoint> circle_locus(const DiskPoint& center, double rho,
                                    std::size_t n, const ModelParams& params);

/// Closed-form point where the ray from `center` with direction `theta`
/// meets the circle (positive root of the squared circle condition).
Vec2 circle_point(const DiskPoint& center, double rho, double theta,
                  const ModelParams& params);

/// The full circle as a smooth curve over theta in [0, 2 pi].
ParametricCurve circle_curve(const DiskPoint& center, double rho,
                             const ModelParams& params);

/// g(p - center, dp) at p: zero exactly when dp is tangent to the circle
/// about `center` through p.
double orthogonality_residual(const DiskPoint& center, const DiskPoint& p,
                              Vec2 dp, const ModelParams& params);

/// Curve at signed perpendicular distance `xi` from the diameter v = 0.
struct Equidistant {
  double xi;
  int side() const noexcept { return xi < 0.0 ? -1 : 1; }
};

struct EquidistantCoords {
  double xi;
  double eta;
};

DiskPoint equidistant_point(double eta, double xi, const ModelParams& params);
EquidistantCoords equidistant_coords(const DiskPoint& p,
                                     const ModelParams& params);
/// Segment of the equidistant xi = const for eta in [eta0, eta1], with
/// analytic tangent.
ParametricCurve equidistant_curve(double xi, double eta0, double eta1,
                                  const ModelParams& params);
/// n points spread evenly in u across the disk.
std::vector<DiskPoint> equidistant_locus(const Equidistant& curve,
                                         std::size_t n,
                                         const ModelParams& params);

/// Horocycle about an ideal point; rho_offset is the signed distance from the
/// reference horocycle through the origin (positive toward the ideal point).
struct Horocycle {
  IdealPoint ideal_center;
  double rho_offset;
};

struct HorocyclicCoords {
  double rho;
  double sigma;
};

HorocyclicCoords horocycle_coords(const DiskPoint& p, const IdealPoint& ideal,
                                  const ModelParams& params);
DiskPoint horocycle_point(const IdealPoint& ideal, double rho, double sigma,
                          const ModelParams& params);
/// Arc of the horocycle rho = const for sigma in [sigma0, sigma1].
ParametricCurve horocycle_curve(const IdealPoint& ideal, double rho,
                                double sigma0, double sigma1,
                                const ModelParams& params);
/// n points with sigma = R tan(theta), theta evenly spaced in (-pi/2, pi/2).
std::vector<DiskPoint> horocycle_locus(const Horocycle& curve, std::size_t n,
                                       const ModelParams& params);

/// s1 exp(-tau/R): arc between the same two axes on a horocycle tau further
/// toward the ideal point.
double horocycle_arc_ratio(double s1, double tau, const ModelParams& params);

}  // namespace beltrami
