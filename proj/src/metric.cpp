#include "beltrami/metric.hpp"

#include <array>
#include <cmath>

#include "beltrami/quadrature.hpp"

namespace beltrami {
namespace {

void require_interior(double w2, const ModelParams& params) {
  if (!(w2 > params.boundary_eps())) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
}

struct FormL {
  long double E, F, G;
};

FormL form_extended(long double u, long double v, long double a,
                    long double R) {
  const long double w2 = a * a - u * u - v * v;
  const long double s = R * R / (w2 * w2);
  return {s * (a * a - v * v), s * u * v, s * (a * a - u * u)};
}

long double det3(const std::array<std::array<long double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

FundamentalForm fundamental_form(Vec2 p, const ModelParams& params) {
  const double w2 = boundary_gap_sq(p, params);
  require_interior(w2, params);
  const double a2 = params.a() * params.a();
  const double s = params.R() * params.R() / (w2 * w2);
  return {s * (a2 - p.v * p.v), s * p.u * p.v, s * (a2 - p.u * p.u)};
}

FundamentalForm fundamental_form(const DiskPoint& p,
                                 const ModelParams& params) {
  return fundamental_form(p.coords(), params);
}

double line_element_sq(const DiskPoint& p, double du, double dv,
                       const ModelParams& params) {
  const double w2 = boundary_gap_sq(p.coords(), params);
  require_interior(w2, params);
  const double a2 = params.a() * params.a();
  const double u = p.u();
  const double v = p.v();
  return params.R() * params.R() *
         ((a2 - v * v) * du * du + 2.0 * u * v * du * dv +
          (a2 - u * u) * dv * dv) /
         (w2 * w2);
}

double polar_line_element_sq(double r, double dr, double dphi,
                             const ModelParams& params) {
  const double a = params.a();
  if (!(r >= 0.0) || r >= a) {
    throw Error(ErrorCode::kOutsideDisk, "point outside disk");
  }
  const double gap = (a - r) * (a + r);
  if (!(gap > params.boundary_eps())) {
    throw Error(ErrorCode::kOutsideDisk, "point outside disk");
  }
  return params.R() * params.R() *
         (a * a * dr * dr / (gap * gap) + r * r * dphi * dphi / gap);
}

double hyperbolic_polar_line_element_sq(double rho, double drho, double dphi,
                                        const ModelParams& params) {
  if (!(rho >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rho must be nonnegative");
  }
  const double s = params.R() * std::sinh(rho / params.R());
  return drho * drho + s * s * dphi * dphi;
}

double equidistant_line_element_sq(double xi, double dxi, double deta,
                                   const ModelParams& params) {
  const double c = std::cosh(xi / params.R());
  return dxi * dxi + c * c * deta * deta;
}

double horocyclic_line_element_sq(double rho, double drho, double dsigma,
                                  const ModelParams& params) {
  return drho * drho + std::exp(-2.0 * rho / params.R()) * dsigma * dsigma;
}

double arc_length(const ParametricCurve& curve, const ModelParams& params,
                  double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const double h = 1e-6 * (curve.t1 - curve.t0);
  auto speed = [&](double t) {
    const Vec2 p = curve.map(t);
    Vec2 d;
    if (curve.derivative) {
      d = (*curve.derivative)(t);
    } else {
      const Vec2 fwd = curve.map(t + h);
      const Vec2 bwd = curve.map(t - h);
      d = (1.0 / (2.0 * h)) * (fwd - bwd);
    }
    const double ds2 = fundamental_form(p, params).apply(d);
    return std::sqrt(std::max(ds2, 0.0));
  };
  return adaptive_simpson(speed, curve.t0, curve.t1, tol);
}

double gauss_curvature(const DiskPoint& p, const ModelParams& params) {
  const long double a = params.a();
  const long double R = params.R();
  const long double h = 1e-5L * a;
  const long double u = p.u();
  const long double v = p.v();
  const long double margin = a - std::sqrt(static_cast<long double>(p.u()) * p.u() +
                                           static_cast<long double>(p.v()) * p.v());
  if (margin < 10.0L * h || p.w2() <= params.boundary_eps()) {
    throw Error(ErrorCode::kNearBoundary,
                "curvature stencil would leave the disk");
  }

  auto at = [&](int i, int j) { return form_extended(u + i * h, v + j * h, a, R); };
  const FormL c = at(0, 0);
  const FormL pu = at(1, 0), mu = at(-1, 0), pv = at(0, 1), mv = at(0, -1);
  const FormL pp = at(1, 1), pm = at(1, -1), mp = at(-1, 1), mm = at(-1, -1);

  const long double h2 = 2.0L * h;
  const long double hh = h * h;
  const long double E_u = (pu.E - mu.E) / h2, E_v = (pv.E - mv.E) / h2;
  const long double F_u = (pu.F - mu.F) / h2, F_v = (pv.F - mv.F) / h2;
  const long double G_u = (pu.G - mu.G) / h2, G_v = (pv.G - mv.G) / h2;
  const long double E_vv = (pv.E - 2.0L * c.E + mv.E) / hh;
  const long double G_uu = (pu.G - 2.0L * c.G + mu.G) / hh;
  const long double F_uv = (pp.F - pm.F - mp.F + mm.F) / (4.0L * hh);

  const std::array<std::array<long double, 3>, 3> with_second{{
      {-0.5L * E_vv + F_uv - 0.5L * G_uu, 0.5L * E_u, F_u - 0.5L * E_v},
      {F_v - 0.5L * G_u, c.E, c.F},
      {0.5L * G_v, c.F, c.G},
  }};
  const std::array<std::array<long double, 3>, 3> first_only{{
      {0.0L, 0.5L * E_v, 0.5L * G_u},
      {0.5L * E_v, c.E, c.F},
      {0.5L * G_u, c.F, c.G},
  }};
  const long double det = c.E * c.G - c.F * c.F;
  return static_cast<double>((det3(with_second) - det3(first_only)) /
                             (det * det));
}

}  // namespace beltrami
