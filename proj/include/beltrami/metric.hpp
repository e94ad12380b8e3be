#pragma once

#include <functional>
#include <optional>

#include "beltrami/core.hpp"

namespace beltrami {

/// Coefficients of ds^2 = E du^2 + 2F du dv + G dv^2 at a point.
struct FundamentalForm {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;

  double determinant() const noexcept { return E * G - F * F; }
  double apply(Vec2 d) const noexcept {
    return E * d.u * d.u + 2.0 * F * d.u * d.v + G * d.v * d.v;
  }
};

/// A curve t -> (u, v) on [t0, t1]. When `derivative` is empty, arc_length
/// falls back to central differences.
struct ParametricCurve {
  std::function<Vec2(double)> map;
  std::optional<std::function<Vec2(double)>> derivative;
  double t0 = 0.0;
  double t1 = 1.0;
};

FundamentalForm fundamental_form(const DiskPoint& p, const ModelParams& params);
FundamentalForm fundamental_form(Vec2 p, const ModelParams& params);

double line_element_sq(const DiskPoint& p, double du, double dv,
                       const ModelParams& params);

double polar_line_element_sq(double r, double dr, double dphi,
                             const ModelParams& params);

double hyperbolic_polar_line_element_sq(double rho, double drho, double dphi,
                                        const ModelParams& params);

double equidistant_line_element_sq(double xi, double dxi, double deta,
                                   const ModelParams& params);

double horocyclic_line_element_sq(double rho, double drho, double dsigma,
                                  const ModelParams& params);

/// Riemannian length of `curve` by adaptive quadrature of the speed
/// sqrt(E u'^2 + 2F u'v' + G v'^2), absolute error <= tol.
double arc_length(const ParametricCurve& curve, const ModelParams& params,
                  double tol);

/// Gaussian curvature from the Brioschi formula with E, F, G differentiated
/// by central differences (step 1e-5 a). Should come out as -1/R^2.
double gauss_curvature(const DiskPoint& p, const ModelParams& params);

}  // namespace beltrami
