#pragma once

#include <array>
#include <variant>

#include "beltrami/core.hpp"

namespace beltrami {

using TriangleVertex = std::variant<DiskPoint, IdealPoint>;

/// Triangle with interior or ideal vertices, stored counterclockwise.
/// Interior angles are hyperbolic (0 at ideal vertices).
class Triangle {
 public:
  Triangle(const std::array<TriangleVertex, 3>& vertices,
           const ModelParams& params);

  const std::array<Vec2, 3>& coords() const noexcept { return coords_; }
  const std::array<bool, 3>& ideal() const noexcept { return ideal_; }
  const std::array<double, 3>& angles() const noexcept { return angles_; }
  double angle_sum() const noexcept;
  bool has_ideal_vertex() const noexcept;

 private:
  std::array<Vec2, 3> coords_;
  std::array<bool, 3> ideal_;
  std::array<double, 3> angles_;
};

/// Density R^2 a / w^3 of the hyperbolic area element with respect to du dv.
double area_element(const DiskPoint& p, const ModelParams& params);

/// Integral of the area density over the vertical strip {u} x [v_lo, v_hi].
double area_strip_density(double u, double v_lo, double v_hi,
                          const ModelParams& params);

/// Hyperbolic angle at the vertex (u, u tan mu) of the right triangle with
/// legs on v = 0 and on the chord u = const.
double mu_prime(double u, double mu, const ModelParams& params);

struct DerivativeCheck {
  double analytic;
  double numeric;
};

/// d mu'/du in closed form against a central difference of mu_prime.
DerivativeCheck mu_prime_derivative_check(double u, double mu,
                                          const ModelParams& params);

/// R^2 (pi - A - B - C).
double triangle_area_defect(double A, double B, double C,
                            const ModelParams& params);

/// Hyperbolic area by integrating the area density over the Euclidean
/// triangle. Triangles with ideal vertices are handled by extrapolating a
/// sequence of triangles whose ideal vertices are pulled toward the centroid.
double area_quadrature(const Triangle& triangle, const ModelParams& params,
                       double tol);

}  // namespace beltrami
