#include "beltrami/geodesy.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "beltrami/angles.hpp"

namespace beltrami {
namespace {

void require_radius(double r, const ModelParams& params) {
  if (!(r >= 0.0) || !((params.a() - r) * (params.a() + r) > params.boundary_eps())) {
    throw Error(ErrorCode::kOutsideDisk, "point outside disk");
  }
}

// Distances along the unit direction d from p to the boundary circle:
// returns (behind, ahead), both positive.
std::pair<double, double> boundary_offsets(Vec2 p, Vec2 d,
                                           const ModelParams& params) {
  const double b = dot(p, d);
  const double c = -boundary_gap_sq(p, params);  // |p|^2 - a^2 < 0
  const double root = std::sqrt(b * b - c);
  // The roots are -b +/- root with product c; take the non-cancelling one
  // first and derive the other from the product.
  double ahead, behind;
  if (b >= 0.0) {
    behind = b + root;
    ahead = -c / behind;
  } else {
    ahead = -b + root;
    behind = -c / ahead;
  }
  return {behind, ahead};
}

bool between_ccw(double from, double x, double to) {
  return normalize_angle(x - from) < normalize_angle(to - from);
}

}  // namespace

double dist_from_origin(double r, const ModelParams& params) {
  require_radius(r, params);
  return params.R() * std::atanh(r / params.a());
}

double euclidean_radius(double rho, const ModelParams& params) {
  if (!(rho >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rho must be nonnegative");
  }
  return params.a() * std::tanh(rho / params.R());
}

double cosh_from_r(double r, const ModelParams& params) {
  require_radius(r, params);
  const double a = params.a();
  return a / std::sqrt((a - r) * (a + r));
}

double distance(const DiskPoint& p, const DiskPoint& q,
                const ModelParams& params) {
  const double eps = params.boundary_eps();
  if (!(p.w2() > eps) || !(q.w2() > eps)) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
  if (p == q) return 0.0;
  // Evaluate in a canonical order so d(p, q) == d(q, p) bit for bit.
  const bool swap = q.u() < p.u() || (q.u() == p.u() && q.v() < p.v());
  const DiskPoint& first = swap ? q : p;
  const DiskPoint& second = swap ? p : q;
  // cosh(d/R) = (a^2 - p.q)/(w w0), and cosh^2 - 1 reduces to
  // (a^2 |q-p|^2 - (p x q)^2)/(w w0)^2, which has no cancellation.
  const Vec2 delta = second.coords() - first.coords();
  const double a = params.a();
  const double cr = cross(first.coords(), delta);
  const double num = a * a * dot(delta, delta) - cr * cr;
  const double sinh_d = std::sqrt(std::max(num, 0.0)) / (first.w() * second.w());
  return params.R() * std::asinh(sinh_d);
}

double cross_ratio_distance(const DiskPoint& p, const DiskPoint& q,
                            const ModelParams& params) {
  const Vec2 delta = q.coords() - p.coords();
  const double sep = norm(delta);
  if (sep < params.tolerances().root_tol) {
    throw Error(ErrorCode::kDegeneratePair, "points coincide");
  }
  const Vec2 d = (1.0 / sep) * delta;
  // A behind p, B ahead of q on the chord A p q B.
  const double ap = boundary_offsets(p.coords(), d, params).first;
  const double qb = boundary_offsets(q.coords(), d, params).second;
  // log((|Aq| |pB|)/(|Ap| |qB|)) with |Aq| = |Ap| + s, |pB| = |qB| + s.
  return 0.5 * params.R() *
         std::abs(std::log1p(sep / ap) + std::log1p(sep / qb));
}

Geodesic chord_through(const DiskPoint& p, const DiskPoint& q,
                       const ModelParams& params) {
  const Vec2 delta = q.coords() - p.coords();
  const double sep = norm(delta);
  if (sep < params.tolerances().root_tol) {
    throw Error(ErrorCode::kDegeneratePair, "points coincide");
  }
  const Vec2 d = (1.0 / sep) * delta;
  const auto [behind, ahead] = boundary_offsets(p.coords(), d, params);
  const Vec2 back = p.coords() - behind * d;
  const Vec2 front = p.coords() + ahead * d;
  return Geodesic(IdealPoint(std::atan2(back.v, back.u)),
                  IdealPoint(std::atan2(front.v, front.u)), params);
}

bool is_straight(std::span<const CurveSample> samples, double tol) {
  if (samples.size() < 5) {
    throw Error(ErrorCode::kInsufficientSamples,
                "straightness test needs at least 5 samples");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].t > samples[i - 1].t)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sample parameters must be strictly increasing");
    }
  }
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const CurveSample& a = samples[i - 1];
    const CurveSample& b = samples[i];
    const CurveSample& c = samples[i + 1];
    const double h1 = b.t - a.t;
    const double h2 = c.t - b.t;
    // Three-point formulas on a non-uniform grid.
    auto first = [&](double fa, double fb, double fc) {
      return (-h2 / (h1 * (h1 + h2))) * fa + ((h2 - h1) / (h1 * h2)) * fb +
             (h1 / (h2 * (h1 + h2))) * fc;
    };
    auto second = [&](double fa, double fb, double fc) {
      return 2.0 * (fa / (h1 * (h1 + h2)) - fb / (h1 * h2) +
                    fc / (h2 * (h1 + h2)));
    };
    const double du = first(a.u, b.u, c.u);
    const double dv = first(a.v, b.v, c.v);
    const double ddu = second(a.u, b.u, c.u);
    const double ddv = second(a.v, b.v, c.v);
    const double scale = std::abs(du) + std::abs(dv);
    if (std::abs(du * ddv - dv * ddu) > tol * scale * scale) return false;
  }
  return true;
}

PairClass classify_pair(const Geodesic& g1, const Geodesic& g2,
                        const ModelParams& params) {
  const double eps = params.tolerances().angle_eps;
  auto same = [eps](const IdealPoint& x, const IdealPoint& y) {
    return std::abs(reduce_angle(x.angle() - y.angle())) <= eps;
  };
  const std::array<IdealPoint, 2> e1{g1.first(), g1.second()};
  const std::array<IdealPoint, 2> e2{g2.first(), g2.second()};

  if ((same(e1[0], e2[0]) && same(e1[1], e2[1])) ||
      (same(e1[0], e2[1]) && same(e1[1], e2[0]))) {
    throw Error(ErrorCode::kCoincidentChords, "geodesics coincide");
  }
  for (const auto& x : e1) {
    for (const auto& y : e2) {
      if (same(x, y)) return Asymptotic{x, 0.0};
    }
  }

  // Chords cross inside the disk iff their endpoints interleave on the circle.
  const bool first_inside =
      between_ccw(e1[0].angle(), e2[0].angle(), e1[1].angle());
  const bool second_inside =
      between_ccw(e1[0].angle(), e2[1].angle(), e1[1].angle());
  if (first_inside == second_inside) return Ultraparallel{};

  const Vec2 p1 = e1[0].coords(params), p2 = e1[1].coords(params);
  const Vec2 q1 = e2[0].coords(params), q2 = e2[1].coords(params);
  const Vec2 d1 = p2 - p1;
  const Vec2 d2 = q2 - q1;
  const double t = cross(q1 - p1, d2) / cross(d1, d2);
  const Vec2 x = p1 + t * d1;
  const DiskPoint at(x.u, x.v, params);

  auto inclination = [](Vec2 d) {
    double ang = std::atan2(d.v, d.u);
    if (ang < 0.0) ang += kPi;
    if (ang >= kPi) ang -= kPi;
    return ang;
  };
  const double angle =
      chord_angle_map(at, inclination(d1), inclination(d2), params);
  return Intersecting{at, angle};
}

}  // namespace beltrami
