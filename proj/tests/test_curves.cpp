#include <doctest.h>

#include <cmath>

#include "beltrami/curves.hpp"
#include "beltrami/error.hpp"
#include "beltrami/geodesy.hpp"
#include "beltrami/metric.hpp"
#include "oracles.hpp"

using namespace beltrami;

TEST_CASE("circumference") {
  const ModelParams unit;
  CHECK(circumference(dist_from_origin(0.5, unit), unit) ==
        doctest::Approx(3.627598728468436).epsilon(1e-14));
  CHECK(circumference(2.0, ModelParams(1.0, 3.0)) ==
        doctest::Approx(13.518118515432309).epsilon(1e-14));
  CHECK_THROWS_AS(circumference(-1.0, unit), Error);
}

TEST_CASE("circle constant and closed-form points") {
  const ModelParams params(1.5, 1.2);
  const DiskPoint c(0.4, -0.6, params);
  const GeodesicCircle circle = make_geodesic_circle(c, 0.9, params);
  CHECK(circle.c_const == doctest::Approx(c.w() * std::cosh(0.9 / 1.2)));
  for (int k = 0; k < 64; ++k) {
    const Vec2 x = circle_point(c, 0.9, kTwoPi * k / 64.0, params);
    const DiskPoint p(x.u, x.v, params);
    CHECK(distance(c, p, params) == doctest::Approx(0.9).epsilon(1e-12));
    const double lhs = (2.25 - x.u * c.u() - x.v * c.v()) / p.w();
    CHECK(lhs == doctest::Approx(circle.c_const).epsilon(1e-12));
  }
  CHECK_THROWS_AS(make_geodesic_circle(c, 0.0, params), Error);
}

TEST_CASE("property: bisection locus agrees with the closed form") {
  const ModelParams params;
  oracle::Gen gen(51);
  for (int i = 0; i < 50; ++i) {
    const Vec2 x = gen.in_disk(0.8);
    const DiskPoint c(x.u, x.v, params);
    const double rho = gen.uniform(0.05, 2.0);
    const std::size_t n = 24;
    const auto locus = circle_locus(c, rho, n, params);
    REQUIRE(locus.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      const Vec2 ref = circle_point(c, rho, kTwoPi * static_cast<double>(k) / n, params);
      CHECK(norm(locus[k].coords() - ref) <= 1e-10);
      CHECK(distance(c, locus[k], params) == doctest::Approx(rho).epsilon(1e-9));
    }
  }
}

TEST_CASE("origin circles are Euclidean circles") {
  const ModelParams params(2.0, 1.0);
  const DiskPoint o(0.0, 0.0, params);
  for (const DiskPoint& p : circle_locus(o, 1.0, 16, params)) {
    CHECK(norm(p.coords()) == doctest::Approx(2.0 * std::tanh(1.0)).epsilon(1e-11));
  }
}

TEST_CASE("property: radii are orthogonal to the circle") {
  const ModelParams params(1.0, 2.0);
  const DiskPoint c(-0.3, 0.5, params);
  const ParametricCurve curve = circle_curve(c, 1.1, params);
  for (int k = 0; k < 100; ++k) {
    const double t = curve.t0 + (curve.t1 - curve.t0) * (k + 0.5) / 100.0;
    const Vec2 x = curve.map(t);
    const double h = 1e-6;
    const Vec2 d = (0.5 / h) * (curve.map(t + h) - curve.map(t - h));
    const DiskPoint p(x.u, x.v, params);
    const double scale = std::sqrt(line_element_sq(p, d.u, d.v, params)) *
                         std::sqrt(line_element_sq(p, x.u - c.u(), x.v - c.v(), params));
    CHECK(std::abs(orthogonality_residual(c, p, d, params)) <= 1e-7 * scale);
    // A non-tangent direction is caught.
    CHECK(std::abs(orthogonality_residual(c, p, x - c.coords(), params)) > 1e-3 * scale);
  }
}

TEST_CASE("equidistant points") {
  const ModelParams params;
  const DiskPoint p = equidistant_point(0.7, 0.5, params);
  CHECK(p.u() == doctest::Approx(0.604367777117163).epsilon(1e-14));
  CHECK(p.v() == doctest::Approx(0.368171262345436).epsilon(1e-14));
  const EquidistantCoords back = equidistant_coords(p, params);
  CHECK(back.xi == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(back.eta == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(Equidistant{-0.2}.side() == -1);
  CHECK(Equidistant{0.2}.side() == 1);
  // eta = 0 lies on the common perpendicular u = 0.
  CHECK(equidistant_point(0.0, 1.0, params).u() == 0.0);
  CHECK(equidistant_point(0.0, 1.0, params).v() == doctest::Approx(std::tanh(1.0)));
}

TEST_CASE("equidistant arc length") {
  const ModelParams params;
  const ParametricCurve curve = equidistant_curve(0.5, 0.0, 0.7, params);
  CHECK(arc_length(curve, params, 1e-12) ==
        doctest::Approx(0.7 * std::cosh(0.5)).epsilon(1e-10));
  const ModelParams scaled(2.0, 3.0);
  const ParametricCurve c2 = equidistant_curve(-1.0, -0.5, 1.0, scaled);
  CHECK(arc_length(c2, scaled, 1e-12) ==
        doctest::Approx(1.5 * std::cosh(1.0 / 3.0)).epsilon(1e-10));
}

TEST_CASE("property: equidistant round trip and locus") {
  const ModelParams params(1.3, 0.8);
  oracle::Gen gen(52);
  for (int i = 0; i < 1000; ++i) {
    const double xi = gen.uniform(-2.0, 2.0);
    const double eta = gen.uniform(-2.0, 2.0);
    const EquidistantCoords c = equidistant_coords(equidistant_point(eta, xi, params), params);
    CHECK(c.xi == doctest::Approx(xi).epsilon(1e-11));
    CHECK(c.eta == doctest::Approx(eta).epsilon(1e-11));
  }
  for (const DiskPoint& p : equidistant_locus(Equidistant{0.6}, 33, params)) {
    CHECK(equidistant_coords(p, params).xi == doctest::Approx(0.6).epsilon(1e-11));
    CHECK(p.v() > 0.0);
  }
}

TEST_CASE("horocycles") {
  const ModelParams params;
  const IdealPoint east(0.0);
  const DiskPoint o = horocycle_point(east, 0.0, 0.0, params);
  CHECK(o.u() == doctest::Approx(0.0).epsilon(1e-16));
  CHECK(o.v() == 0.0);
  CHECK(horocycle_arc_ratio(1.0, std::log(2.0), params) == doctest::Approx(0.5).epsilon(1e-15));
  try {
    horocycle_coords(DiskPoint(1.0 - 6e-13, 0.0, params), east, params);
    FAIL("point at the ideal center accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAtIdealCenter);
  }
}

TEST_CASE("property: horocyclic round trip, locus and tangency") {
  const ModelParams params(1.5, 1.0);
  oracle::Gen gen(53);
  for (int i = 0; i < 1000; ++i) {
    const IdealPoint ideal(gen.uniform(0.0, kTwoPi));
    const double rho = gen.uniform(-1.5, 2.0);
    const double sigma = gen.uniform(-2.0, 2.0);
    const HorocyclicCoords c =
        horocycle_coords(horocycle_point(ideal, rho, sigma, params), ideal, params);
    CHECK(c.rho == doctest::Approx(rho).epsilon(1e-10));
    CHECK(c.sigma == doctest::Approx(sigma).epsilon(1e-10));
  }
  const Horocycle h{IdealPoint(1.0), 0.4};
  const auto locus = horocycle_locus(h, 65, params);
  for (const DiskPoint& p : locus) {
    CHECK(horocycle_coords(p, h.ideal_center, params).rho == doctest::Approx(0.4).epsilon(1e-10));
  }
  // Both ends of the sweep run into the ideal center.
  const Vec2 ideal = h.ideal_center.coords(params);
  double prev = 1.0;
  for (double sigma : {1e1, 1e2, 1e3}) {
    const double gap_plus = norm(horocycle_point(h.ideal_center, 0.4, sigma, params).coords() - ideal);
    const double gap_minus = norm(horocycle_point(h.ideal_center, 0.4, -sigma, params).coords() - ideal);
    CHECK(gap_plus < prev);
    CHECK(gap_minus == doctest::Approx(gap_plus).epsilon(1e-6));
    prev = gap_plus;
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("horocycle arcs between two axes shrink by e^-tau") {
  const ModelParams params;
  const IdealPoint ideal(0.0);
  const double s0 = arc_length(horocycle_curve(ideal, 0.0, -0.4, 0.9, params), params, 1e-12);
  const double s1 = arc_length(horocycle_curve(ideal, std::log(2.0), -0.4, 0.9, params), params, 1e-12);
  CHECK(s0 == doctest::Approx(1.3).epsilon(1e-10));
  CHECK(s1 / s0 == doctest::Approx(0.5).epsilon(1e-9));
}
