#include "beltrami/curves.hpp"

#include <cmath>

#include "beltrami/geodesy.hpp"

namespace beltrami {
namespace {

Vec2 rotate(Vec2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.u - s * p.v, s * p.u + c * p.v};
}

// Distance from p to the boundary along the unit direction d.
double boundary_ahead(Vec2 p, Vec2 d, const ModelParams& params) {
  const double b = dot(p, d);
  const double c = -boundary_gap_sq(p, params);
  const double root = std::sqrt(b * b - c);
  return b >= 0.0 ? -c / (b + root) : -b + root;
}

void require_count(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 3 samples");
  }
}

// Canonical horocycle about (a, 0): with q = exp(-rho/R), t = sigma/R,
// a - u = 2 a q^2 / (1 + q^2 (1 + t^2)) and v = t (a - u).
Vec2 canonical_horocycle_point(double rho, double sigma,
                               const ModelParams& params) {
  const double a = params.a();
  const double q2 = std::exp(-2.0 * rho / params.R());
  const double t = sigma / params.R();
  const double s = 2.0 * a * q2 / (1.0 + q2 * (1.0 + t * t));
  return {a - s, t * s};
}

}  // namespace

double circumference(double rho, const ModelParams& params) {
  if (!(rho >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rho must be nonnegative");
  }
  return kTwoPi * params.R() * std::sinh(rho / params.R());
}

GeodesicCircle make_geodesic_circle(const DiskPoint& center, double rho,
                                    const ModelParams& params) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::kInvalidArgument, "circle radius must be positive");
  }
  return {center, rho, center.w() * std::cosh(rho / params.R())};
}

std::vector<DiskPoint> circle_locus(const DiskPoint& center, double rho,
                                    std::size_t n, const ModelParams& params) {
  require_count(n);
  make_geodesic_circle(center, rho, params);
  const double step_tol = params.tolerances().root_tol * params.a();
  std::vector<DiskPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const Vec2 d{std::cos(theta), std::sin(theta)};
    const Vec2 c = center.coords();
    auto excess = [&](double t) {
      const Vec2 x = c + t * d;
      return distance(center, DiskPoint(x.u, x.v, params), params) - rho;
    };
    double lo = 0.0;
    double hi = boundary_ahead(c, d, params);
    // Pull hi inside until it is a valid point; it must overshoot rho.
    while (!(boundary_gap_sq(c + hi * d, params) > params.boundary_eps())) {
      hi *= 1.0 - 1e-12;
    }
    if (excess(hi) < 0.0) {
      throw Error(ErrorCode::kNearBoundary,
                  "circle locus reaches the boundary in floating point");
    }
    for (int it = 0; it < 200 && hi - lo > step_tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    const Vec2 x = c + (0.5 * (lo + hi)) * d;
    out.emplace_back(x.u, x.v, params);
  }
  return out;
}

Vec2 circle_point(const DiskPoint& center, double rho, double theta,
                  const ModelParams& params) {
  // With p = c + t d, k = c.d, the condition (w0^2 - t k)^2 = C^2 w0^2 w^2
  // (C = cosh(rho/R)) is the quadratic
  //   (k^2 + C^2 w0^2) t^2 + 2 w0^2 k (C^2 - 1) t - w0^4 (C^2 - 1) = 0.
  const Vec2 c = center.coords();
  const Vec2 d{std::cos(theta), std::sin(theta)};
  const double k = dot(c, d);
  const double w02 = center.w2();
  const double ch = std::cosh(rho / params.R());
  const double sh2 = std::sinh(rho / params.R()) * std::sinh(rho / params.R());
  const double qa = k * k + ch * ch * w02;
  const double qb = w02 * k * sh2;  // half the linear coefficient
  const double qc = -w02 * w02 * sh2;
  const double disc = std::sqrt(qb * qb - qa * qc);
  // Positive root, written to avoid cancellation for either sign of qb.
  const double t = qb <= 0.0 ? (-qb + disc) / qa : -qc / (qb + disc);
  return c + t * d;
}

ParametricCurve circle_curve(const DiskPoint& center, double rho,
                             const ModelParams& params) {
  make_geodesic_circle(center, rho, params);
  ParametricCurve curve;
  curve.map = [center, rho, params](double theta) {
    return circle_point(center, rho, theta, params);
  };
  curve.t0 = 0.0;
  curve.t1 = kTwoPi;
  return curve;
}

double orthogonality_residual(const DiskPoint& center, const DiskPoint& p,
                              Vec2 dp, const ModelParams& params) {
  if (center == p) {
    throw Error(ErrorCode::kDegeneratePair, "point coincides with the center");
  }
  const FundamentalForm g = fundamental_form(p, params);
  const double du0 = p.u() - center.u();
  const double dv0 = p.v() - center.v();
  return g.E * du0 * dp.u + g.F * dv0 * dp.u + g.F * du0 * dp.v +
         g.G * dv0 * dp.v;
}

DiskPoint equidistant_point(double eta, double xi, const ModelParams& params) {
  const double a = params.a();
  const double R = params.R();
  return DiskPoint(a * std::tanh(eta / R),
                   a * std::tanh(xi / R) / std::cosh(eta / R), params);
}

EquidistantCoords equidistant_coords(const DiskPoint& p,
                                     const ModelParams& params) {
  if (!(p.w2() > params.boundary_eps())) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
  const double a = params.a();
  const double R = params.R();
  const double foot = std::sqrt((a - p.u()) * (a + p.u()));
  return {R * std::atanh(p.v() / foot), R * std::atanh(p.u() / a)};
}

ParametricCurve equidistant_curve(double xi, double eta0, double eta1,
                                  const ModelParams& params) {
  const double a = params.a();
  const double R = params.R();
  const double th = std::tanh(xi / R);
  ParametricCurve curve;
  curve.map = [a, R, th](double eta) {
    return Vec2{a * std::tanh(eta / R), a * th / std::cosh(eta / R)};
  };
  curve.derivative = [a, R, th](double eta) {
    const double ch = std::cosh(eta / R);
    return Vec2{a / (R * ch * ch), -a * th * std::tanh(eta / R) / (R * ch)};
  };
  curve.t0 = eta0;
  curve.t1 = eta1;
  return curve;
}

std::vector<DiskPoint> equidistant_locus(const Equidistant& curve,
                                         std::size_t n,
                                         const ModelParams& params) {
  require_count(n);
  std::vector<DiskPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double frac =
        (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    const double eta = params.R() * std::atanh(2.0 * frac - 1.0);
    out.push_back(equidistant_point(eta, curve.xi, params));
  }
  return out;
}

HorocyclicCoords horocycle_coords(const DiskPoint& p, const IdealPoint& ideal,
                                  const ModelParams& params) {
  if (!(p.w2() > params.boundary_eps())) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
  const Vec2 c = ideal.coords(params);
  const double a = params.a();
  const double gap = a * a - p.u() * c.u - p.v() * c.v;
  if (!(gap > params.boundary_eps())) {
    throw Error(ErrorCode::kAtIdealCenter, "point is at the ideal center");
  }
  const double R = params.R();
  return {-R * std::log(gap / (a * p.w())),
          R * (c.u * p.v() - p.u() * c.v) / gap};
}

DiskPoint horocycle_point(const IdealPoint& ideal, double rho, double sigma,
                          const ModelParams& params) {
  const Vec2 x =
      rotate(canonical_horocycle_point(rho, sigma, params), ideal.angle());
  return DiskPoint(x.u, x.v, params);
}

ParametricCurve horocycle_curve(const IdealPoint& ideal, double rho,
                                double sigma0, double sigma1,
                                const ModelParams& params) {
  const double a = params.a();
  const double R = params.R();
  const double q2 = std::exp(-2.0 * rho / R);
  const double angle = ideal.angle();
  ParametricCurve curve;
  curve.map = [rho, angle, params](double sigma) {
    return rotate(canonical_horocycle_point(rho, sigma, params), angle);
  };
  curve.derivative = [a, R, q2, angle](double sigma) {
    const double t = sigma / R;
    const double den = 1.0 + q2 * (1.0 + t * t);
    const double s = 2.0 * a * q2 / den;
    const double ds_dt = -4.0 * a * q2 * q2 * t / (den * den);
    return rotate(Vec2{-ds_dt / R, (s + t * ds_dt) / R}, angle);
  };
  curve.t0 = sigma0;
  curve.t1 = sigma1;
  return curve;
}

std::vector<DiskPoint> horocycle_locus(const Horocycle& curve, std::size_t n,
                                       const ModelParams& params) {
  require_count(n);
  std::vector<DiskPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta =
        -0.5 * kPi + kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    const double sigma = params.R() * std::tan(theta);
    out.push_back(
        horocycle_point(curve.ideal_center, curve.rho_offset, sigma, params));
  }
  return out;
}

double horocycle_arc_ratio(double s1, double tau, const ModelParams& params) {
  if (!(s1 >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "arc length must be nonnegative");
  }
  return s1 * std::exp(-tau / params.R());
}

}  // namespace beltrami
