#include "beltrami/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "beltrami/area.hpp"
#include "beltrami/curves.hpp"
#include "beltrami/geodesy.hpp"
#include "beltrami/metric.hpp"
#include "beltrami/models.hpp"

namespace beltrami {
namespace {

constexpr std::uint64_t kSeed = 0x5eed'be17'0a11ULL;

CheckResult close_to(std::string name, double measured, double expected,
                     double tol) {
  return {std::move(name), std::abs(measured - expected) <= tol, measured,
          expected, tol};
}

// measured is a worst-case error; expected is zero.
CheckResult bounded(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol, worst, 0.0, tol};
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  // Uniform by area in the disk of radius fraction * a.
  DiskPoint point(const ModelParams& params, double fraction) {
    const double r = fraction * params.a() * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(0.0, kTwoPi);
    return DiskPoint(r * std::cos(phi), r * std::sin(phi), params);
  }

 private:
  std::mt19937_64 rng_;
};

ParametricCurve radial_segment(double r) {
  ParametricCurve c;
  c.map = [](double t) { return Vec2{t, 0.0}; };
  c.derivative = [](double) { return Vec2{1.0, 0.0}; };
  c.t0 = 0.0;
  c.t1 = r;
  return c;
}

ParametricCurve origin_circle(double r) {
  ParametricCurve c;
  c.map = [r](double t) { return Vec2{r * std::cos(t), r * std::sin(t)}; };
  c.derivative = [r](double t) {
    return Vec2{-r * std::sin(t), r * std::cos(t)};
  };
  c.t0 = 0.0;
  c.t1 = kTwoPi;
  return c;
}

void radial_distance(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  const auto start = std::chrono::steady_clock::now();
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    const double quad = arc_length(radial_segment(r), params, 1e-12);
    const double closed = 0.5 * std::log((1.0 + r) / (1.0 - r));
    char name[64];
    std::snprintf(name, sizeof(name), "AC01 radial quadrature r=%g", r);
    out.push_back(close_to(name, quad, closed, 1e-9 * scale));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out.push_back({"AC01 radial quadrature runtime [s]", seconds < 1.0, seconds,
                 0.0, 1.0});
}

void cosh_identity(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  Sampler s(kSeed + 2);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double r = s.uniform(0.0, 0.999999);
    const double lhs = std::cosh(dist_from_origin(r, params));
    const double rhs = 1.0 / std::sqrt(1.0 - r * r);
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    const double via_op = cosh_from_r(r, params);
    worst = std::max(worst, std::abs(via_op - rhs) / rhs);
  }
  out.push_back(bounded("AC02 cosh(rho) = 1/sqrt(1-r^2) [rel]", worst, 1e-13 * scale));
}

void cross_ratio(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  Sampler s(kSeed + 3);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = s.point(params, 0.99);
    const DiskPoint q = s.point(params, 0.99);
    worst = std::max(worst, std::abs(cross_ratio_distance(p, q, params) -
                                     distance(p, q, params)));
  }
  out.push_back(bounded("AC03 cross-ratio distance = closed form", worst, 1e-10 * scale));
}

void circumference_checks(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  for (double rho : {0.25, 0.5, 1.0, 2.0}) {
    const double r = euclidean_radius(rho, params);
    const double quad = arc_length(origin_circle(r), params, 1e-11);
    char name[64];
    std::snprintf(name, sizeof(name), "AC04 circumference rho=%g", rho);
    out.push_back(close_to(name, quad, kTwoPi * std::sinh(rho), 1e-7 * scale));
  }
  const double quad =
      arc_length(origin_circle(euclidean_radius(std::atanh(0.5), params)), params, 1e-12);
  out.push_back(close_to("AC04 circumference rho=atanh(0.5)", quad,
                         kTwoPi / std::sqrt(3.0), 1e-8 * scale));
}

void parallelism(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  const double r = 0.5;
  const double a = params.a();
  // Foot B = (r, 0) on a diameter, chord ST perpendicular at B, S on the
  // boundary; the Euclidean angle SOB at the center is hyperbolic there.
  const double sob = std::atan2(std::sqrt(a * a - r * r), r);
  out.push_back(close_to("AC05 angle SOB at r=0.5", sob, kPi / 3.0, 1e-12 * scale));
  const double theta = angle_of_parallelism(dist_from_origin(r, params), params);
  out.push_back(close_to("AC05 parallelism(rho(0.5))", theta, kPi / 3.0, 1e-12 * scale));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double rho = 1e-6 * std::pow(50.0 / 1e-6, i / 99.0);
    worst = std::max(worst, std::abs(angle_of_parallelism(rho, params) -
                                     angle_of_parallelism_half_angle(rho, params)));
  }
  out.push_back(bounded("AC05 cot form = half-angle form", worst, 1e-13 * scale));
}

void triangle_area(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  const Triangle right({DiskPoint(0.0, 0.0, params), DiskPoint(0.5, 0.0, params),
                        DiskPoint(0.5, 0.5, params)},
                       params);
  const double mp = mu_prime(0.5, kPi / 4.0, params);
  const double defect = params.R() * params.R() * (kPi / 2.0 - kPi / 4.0 - mp);
  out.push_back(close_to("AC06 right triangle quadrature vs defect",
                         area_quadrature(right, params, 1e-10), defect, 1e-6 * scale));

  Sampler s(kSeed + 6);
  double worst = 0.0;
  int made = 0;
  while (made < 100) {
    const DiskPoint p = s.point(params, 0.9);
    const DiskPoint q = s.point(params, 0.9);
    const DiskPoint t = s.point(params, 0.9);
    if (std::abs(cross(q.coords() - p.coords(), t.coords() - p.coords())) < 1e-3) {
      continue;
    }
    const Triangle tri({p, q, t}, params);
    const auto& ang = tri.angles();
    const double d = triangle_area_defect(ang[0], ang[1], ang[2], params);
    worst = std::max(worst, std::abs(area_quadrature(tri, params, 1e-9) - d));
    ++made;
  }
  out.push_back(bounded("AC06 random triangles |quadrature - defect|", worst, 1e-5 * scale));
}

void ideal_triangle(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  const Triangle tri({IdealPoint(0.0), IdealPoint(kTwoPi / 3.0),
                      IdealPoint(2.0 * kTwoPi / 3.0)},
                     params);
  out.push_back(close_to("AC07 ideal triangle area", area_quadrature(tri, params, 1e-10),
                         kPi, 1e-4 * scale));
}

void curvature(std::vector<CheckResult>& out, double scale) {
  for (auto [a, R] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{2.0, 1.0}}) {
    const ModelParams params(a, R);
    Sampler s(kSeed + 8);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const DiskPoint p = s.point(params, 0.9);
      worst = std::max(worst, std::abs(gauss_curvature(p, params) - params.curvature()));
    }
    char name[64];
    std::snprintf(name, sizeof(name), "AC08 Brioschi curvature (a=%g, R=%g)", a, R);
    out.push_back(bounded(name, worst, 1e-6 * scale));
  }
}

void horocycle_decay(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  const IdealPoint ideal(0.0);
  const double s1 = arc_length(horocycle_curve(ideal, 0.0, 0.0, 1.0, params), params, 1e-12);
  const double s2 =
      arc_length(horocycle_curve(ideal, std::log(2.0), 0.0, 1.0, params), params, 1e-12);
  out.push_back(close_to("AC09 concentric horocycle arc ratio", s2 / s1, 0.5, 1e-6 * scale));
}

void equidistant_metric(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  const double len = arc_length(equidistant_curve(0.5, 0.0, 0.7, params), params, 1e-12);
  out.push_back(close_to("AC10 equidistant arc length", len, 0.7 * std::cosh(0.5),
                         1e-7 * scale));
}

void hyperboloid(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  Sampler s(kSeed + 11);
  double dist_err = 0.0;
  double trip_err = 0.0;
  double form_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = s.point(params, 0.99);
    const DiskPoint q = s.point(params, 0.99);
    const HyperboloidPoint hp = lift_to_hyperboloid(p, params);
    const HyperboloidPoint hq = lift_to_hyperboloid(q, params);
    dist_err = std::max(dist_err, std::abs(hyperboloid_distance(hp, hq, params) -
                                           distance(p, q, params)));
    const DiskPoint back = project_to_disk(hp, params);
    trip_err = std::max({trip_err, std::abs(back.u() - p.u()) / params.a(),
                         std::abs(back.v() - p.v()) / params.a()});
  }
  for (int i = 0; i < 100; ++i) {
    const DiskPoint p = s.point(params, 0.9);
    const FundamentalForm g = fundamental_form(p, params);
    const FundamentalForm m = pullback_fundamental_form(p, params);
    form_err = std::max({form_err, std::abs(g.E - m.E), std::abs(g.F - m.F),
                         std::abs(g.G - m.G)});
  }
  out.push_back(bounded("AC11 Minkowski distance = disk distance", dist_err, 1e-10 * scale));
  out.push_back(bounded("AC11 project(lift(p)) = p", trip_err, 1e-13 * scale));
  out.push_back(bounded("AC11 pulled-back Minkowski form = E,F,G", form_err, 1e-6 * scale));
}

void polar_bridge(std::vector<CheckResult>& out, double scale) {
  for (double m : {0.1, 0.5, 1.0, 2.0}) {
    const ModelParams params;
    const PolarCoefficients c = polar_metric_check(m, 0.3, params);
    const double R2 = params.R() * params.R();
    const double worst = std::max(std::abs(c.dm_coeff - R2),
                                  std::abs(c.dtheta_coeff - R2 * std::sinh(m) * std::sinh(m)));
    char name[64];
    std::snprintf(name, sizeof(name), "AC12 polar hyperboloid metric m=%g", m);
    out.push_back(bounded(name, worst, 1e-6 * scale));
  }
}

void straightness(std::vector<CheckResult>& out) {
  const ModelParams params;
  Sampler s(kSeed + 13);
  int straight = 0;
  constexpr int kChords = 50;
  for (int i = 0; i < kChords; ++i) {
    const DiskPoint p = s.point(params, 0.9);
    const DiskPoint q = s.point(params, 0.9);
    const Geodesic g = chord_through(p, q, params);
    const Vec2 e0 = g.first().coords(params);
    const Vec2 e1 = g.second().coords(params);
    const double len = norm(e1 - e0);
    std::vector<CurveSample> samples;
    for (int k = 0; k <= 20; ++k) {
      const double t = len * k / 20.0;
      const Vec2 x = e0 + (t / len) * (e1 - e0);
      samples.push_back({t, x.u, x.v});
    }
    straight += is_straight(samples, 1e-6) ? 1 : 0;
  }
  out.push_back({"AC13 sampled chords are straight", straight == kChords,
                 static_cast<double>(straight), kChords, 0.0});

  int bent = 0;
  constexpr int kCircles = 20;
  for (int i = 0; i < kCircles; ++i) {
    const DiskPoint c = s.point(params, 0.6);
    const double rho = s.uniform(0.2, 1.5);
    const auto locus = circle_locus(c, rho, 64, params);
    std::vector<CurveSample> samples;
    for (std::size_t k = 0; k < locus.size(); ++k) {
      samples.push_back({static_cast<double>(k), locus[k].u(), locus[k].v()});
    }
    bent += is_straight(samples, 1e-6) ? 0 : 1;
  }
  out.push_back({"AC13 off-center circle loci are not straight", bent == kCircles,
                 static_cast<double>(bent), kCircles, 0.0});
}

void metric_axioms(std::vector<CheckResult>& out, double scale) {
  const ModelParams params;
  Sampler s(kSeed + 14);
  double asym = 0.0, negative = 0.0, self = 0.0, triangle = 0.0, rot = 0.0,
         additive = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = s.point(params, 0.99);
    const DiskPoint q = s.point(params, 0.99);
    const DiskPoint t = s.point(params, 0.99);
    const double pq = distance(p, q, params);
    const double qp = distance(q, p, params);
    const double qt = distance(q, t, params);
    const double pt = distance(p, t, params);
    asym = std::max(asym, std::abs(pq - qp));
    negative = std::max(negative, -std::min({pq, qt, pt, 0.0}));
    self = std::max(self, distance(p, p, params));
    if (!(pq > 0.0)) self = std::max(self, 1.0);  // distinct points at zero
    triangle = std::max(triangle, pt - (pq + qt));

    const double angle = s.uniform(0.0, kTwoPi);
    const double c = std::cos(angle), sn = std::sin(angle);
    const DiskPoint rp(c * p.u() - sn * p.v(), sn * p.u() + c * p.v(), params);
    const DiskPoint rq(c * q.u() - sn * q.v(), sn * q.u() + c * q.v(), params);
    rot = std::max(rot, std::abs(distance(rp, rq, params) - pq));

    // Collinear p, m, q with m strictly between.
    const double f = s.uniform(0.05, 0.95);
    const Vec2 mid = p.coords() + f * (q.coords() - p.coords());
    const DiskPoint m(mid.u, mid.v, params);
    additive = std::max(additive, std::abs(pq - (distance(p, m, params) +
                                                 distance(m, q, params))));
  }
  out.push_back(bounded("AC14 symmetry d(p,q) = d(q,p)", asym, 0.0));
  out.push_back(bounded("AC14 nonnegative, zero iff equal", std::max(negative, self), 0.0));
  out.push_back(bounded("AC14 triangle inequality slack", std::max(triangle, 0.0),
                        1e-12 * scale));
  out.push_back(bounded("AC14 rotational invariance", rot, 1e-12 * scale));
  out.push_back(bounded("AC14 additivity along a chord", additive, 1e-11 * scale));
}

}  // namespace

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

CheckResult check_coordinate_angle_identity(double tol_scale,
                                            const CoordinateAngleFn& fn) {
  const ModelParams params;
  Sampler s(kSeed + 15);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = s.point(params, 0.99);
    const CoordinateCurveAngle c = fn(p, params);
    worst = std::max(worst, std::abs(c.cos_theta * c.cos_theta +
                                     c.sin_theta * c.sin_theta - 1.0));
  }
  return bounded("AC14 coordinate-curve angle sin^2 + cos^2 = 1", worst, 1e-13 * tol_scale);
}

VerifyReport run_verification(double tol_scale) {
  if (!(tol_scale > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance scale must be positive");
  }
  VerifyReport report;
  auto& out = report.checks;
  radial_distance(out, tol_scale);
  cosh_identity(out, tol_scale);
  cross_ratio(out, tol_scale);
  circumference_checks(out, tol_scale);
  parallelism(out, tol_scale);
  triangle_area(out, tol_scale);
  ideal_triangle(out, tol_scale);
  curvature(out, tol_scale);
  horocycle_decay(out, tol_scale);
  equidistant_metric(out, tol_scale);
  hyperboloid(out, tol_scale);
  polar_bridge(out, tol_scale);
  straightness(out);
  metric_axioms(out, tol_scale);
  out.push_back(check_coordinate_angle_identity(tol_scale));
  return report;
}

std::string format_check(const CheckResult& check) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s %-48s measured=%.12g expected=%.12g tol=%.3g",
                check.passed ? "PASS" : "FAIL", check.name.c_str(), check.measured,
                check.expected, check.tolerance);
  return buf;
}

}  // namespace beltrami
