#include "beltrami/area.hpp"

#include <algorithm>
#include <cmath>

#include "beltrami/angles.hpp"
#include "beltrami/quadrature.hpp"

namespace beltrami {
namespace {

double signed_area2(const std::array<Vec2, 3>& v) {
  return cross(v[1] - v[0], v[2] - v[0]);
}

double mu_prime_unchecked(double u, double mu, double a) {
  const double c = a * std::cos(mu);
  return std::atan2(std::sqrt((c - u) * (c + u)), a * std::sin(mu));
}

void check_mu_prime_domain(double u, double mu, const ModelParams& params) {
  if (!(mu > 0.0) || !(mu < 0.5 * kPi)) {
    throw Error(ErrorCode::kInvalidArgument, "mu must lie in (0, pi/2)");
  }
  if (!(u >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "u must be nonnegative");
  }
  if (u >= params.a() * std::cos(mu)) {
    throw Error(ErrorCode::kDegenerateTriangle,
                "hypotenuse leaves the disk before reaching u");
  }
}

// Value of the line through p, q at abscissa u (p.u != q.u).
double edge_at(Vec2 p, Vec2 q, double u) {
  const double t = (u - p.u) / (q.u - p.u);
  return p.v + t * (q.v - p.v);
}

double integrate_interior(const std::array<Vec2, 3>& tri,
                          const ModelParams& params, double tol) {
  for (const Vec2& p : tri) {
    if (!(boundary_gap_sq(p, params) > params.boundary_eps())) {
      throw Error(ErrorCode::kNearBoundary,
                  "triangle vertex too close to the boundary");
    }
  }
  std::array<Vec2, 3> s = tri;
  std::sort(s.begin(), s.end(),
            [](Vec2 x, Vec2 y) { return x.u < y.u || (x.u == y.u && x.v < y.v); });
  const double span = s[2].u - s[0].u;
  if (span <= 0.0) return 0.0;

  double total = 0.0;
  // Two vertical slabs: [s0.u, s1.u] and [s1.u, s2.u]; the long edge s0-s2
  // bounds both, the short edges bound one each.
  const std::array<std::array<Vec2, 2>, 2> short_edges{{{s[0], s[1]}, {s[1], s[2]}}};
  for (int k = 0; k < 2; ++k) {
    const Vec2 lo = short_edges[k][0];
    const Vec2 hi = short_edges[k][1];
    const double width = hi.u - lo.u;
    if (width <= 0.0) continue;
    auto strip = [&](double u) {
      double y1 = edge_at(s[0], s[2], u);
      double y2 = edge_at(lo, hi, u);
      if (y1 > y2) std::swap(y1, y2);
      return area_strip_density(u, y1, y2, params);
    };
    total += adaptive_simpson(strip, lo.u, hi.u, tol * width / span);
  }
  return total;
}

}  // namespace

Triangle::Triangle(const std::array<TriangleVertex, 3>& vertices,
                   const ModelParams& params) {
  for (int i = 0; i < 3; ++i) {
    if (const auto* p = std::get_if<DiskPoint>(&vertices[i])) {
      coords_[i] = p->coords();
      ideal_[i] = false;
    } else {
      coords_[i] = std::get<IdealPoint>(vertices[i]).coords(params);
      ideal_[i] = true;
    }
  }
  const double a2 = params.a() * params.a();
  const double area2 = signed_area2(coords_);
  if (std::abs(area2) <= 1e-14 * a2) {
    throw Error(ErrorCode::kDegenerateTriangle, "triangle vertices are collinear");
  }
  if (area2 < 0.0) {
    std::swap(coords_[1], coords_[2]);
    std::swap(ideal_[1], ideal_[2]);
  }
  for (int i = 0; i < 3; ++i) {
    if (ideal_[i]) {
      angles_[i] = 0.0;
      continue;
    }
    const Vec2 p = coords_[i];
    const Vec2 to_next = coords_[(i + 1) % 3] - p;
    const Vec2 to_prev = coords_[(i + 2) % 3] - p;
    angles_[i] = ray_angle(DiskPoint(p.u, p.v, params),
                           std::atan2(to_next.v, to_next.u),
                           std::atan2(to_prev.v, to_prev.u), params);
  }
}

double Triangle::angle_sum() const noexcept {
  return angles_[0] + angles_[1] + angles_[2];
}

bool Triangle::has_ideal_vertex() const noexcept {
  return ideal_[0] || ideal_[1] || ideal_[2];
}

double area_element(const DiskPoint& p, const ModelParams& params) {
  const double w2 = boundary_gap_sq(p.coords(), params);
  if (!(w2 > params.boundary_eps())) {
    throw Error(ErrorCode::kNearBoundary, "point too close to the boundary");
  }
  return params.R() * params.R() * params.a() / (w2 * std::sqrt(w2));
}

double area_strip_density(double u, double v_lo, double v_hi,
                          const ModelParams& params) {
  // d/dv [ v / (c sqrt(c - v^2)) ] = 1 / (c - v^2)^{3/2},  c = a^2 - u^2.
  const double a = params.a();
  const double c = (a - u) * (a + u);
  auto antiderivative = [&](double v) {
    const double gap = c - v * v;
    if (!(gap > params.boundary_eps())) {
      throw Error(ErrorCode::kNearBoundary, "strip reaches the boundary");
    }
    return v / (c * std::sqrt(gap));
  };
  return params.R() * params.R() * a *
         (antiderivative(v_hi) - antiderivative(v_lo));
}

double mu_prime(double u, double mu, const ModelParams& params) {
  check_mu_prime_domain(u, mu, params);
  return mu_prime_unchecked(u, mu, params.a());
}

DerivativeCheck mu_prime_derivative_check(double u, double mu,
                                          const ModelParams& params) {
  check_mu_prime_domain(u, mu, params);
  const double a = params.a();
  const double h = 1e-6 * a;
  if (u + h >= a * std::cos(mu)) {
    throw Error(ErrorCode::kDegenerateTriangle,
                "difference stencil leaves the admissible range");
  }
  const double c = a * std::cos(mu);
  const double analytic =
      -a * std::sin(mu) * u / ((a - u) * (a + u) * std::sqrt((c - u) * (c + u)));
  // mu' is even in u, so the stencil may straddle u = 0.
  const double numeric =
      (mu_prime_unchecked(u + h, mu, a) - mu_prime_unchecked(u - h, mu, a)) /
      (2.0 * h);
  return {analytic, numeric};
}

double triangle_area_defect(double A, double B, double C,
                            const ModelParams& params) {
  if (!(A >= 0.0) || !(B >= 0.0) || !(C >= 0.0) || !(A + B + C < kPi)) {
    throw Error(ErrorCode::kInvalidAngles,
                "angles must be nonnegative with sum below pi");
  }
  return params.R() * params.R() * (kPi - A - B - C);
}

double area_quadrature(const Triangle& triangle, const ModelParams& params,
                       double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (!triangle.has_ideal_vertex()) {
    return integrate_interior(triangle.coords(), params, tol);
  }

  // The defect of the shrunk triangle behaves like
  // A0 - c1 eps^{1/2} - c3 eps^{3/2} - ...; fit the three terms exactly.
  const auto& v = triangle.coords();
  const Vec2 centroid = (1.0 / 3.0) * (v[0] + v[1] + v[2]);
  constexpr std::array<double, 3> kEps{1e-2, 1e-3, 1e-4};
  std::array<double, 3> areas{};
  for (std::size_t k = 0; k < kEps.size(); ++k) {
    std::array<Vec2, 3> shrunk = v;
    for (int i = 0; i < 3; ++i) {
      if (triangle.ideal()[i]) {
        shrunk[i] = centroid + (1.0 - kEps[k]) * (v[i] - centroid);
      }
    }
    areas[k] = integrate_interior(shrunk, params, 0.1 * tol);
  }
  // Solve [1, s, s^3] x = A with s = sqrt(eps) by Cramer's rule.
  std::array<std::array<double, 3>, 3> m{};
  for (std::size_t k = 0; k < 3; ++k) {
    const double s = std::sqrt(kEps[k]);
    m[k] = {1.0, s, s * s * s};
  }
  auto det = [](const std::array<std::array<double, 3>, 3>& x) {
    return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) -
           x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
           x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
  };
  auto replaced = m;
  for (int k = 0; k < 3; ++k) replaced[k][0] = areas[k];
  return det(replaced) / det(m);
}

}  // namespace beltrami
