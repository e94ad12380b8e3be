#include <doctest.h>

#include <cmath>

#include "beltrami/error.hpp"
#include "beltrami/geodesy.hpp"
#include "beltrami/metric.hpp"
#include "beltrami/models.hpp"
#include "oracles.hpp"

using namespace beltrami;

TEST_CASE("lift and project fixed points") {
  const ModelParams params;
  const HyperboloidPoint h = lift_to_hyperboloid(DiskPoint(0.5, 0.0, params), params);
  CHECK(h.x() == doctest::Approx(0.577350269189626).epsilon(1e-15));
  CHECK(h.y() == 0.0);
  CHECK(h.z() == doctest::Approx(1.154700538379252).epsilon(1e-15));
  const HyperboloidPoint g = lift_to_hyperboloid(DiskPoint(0.3, 0.4, params), params);
  CHECK(g.x() == doctest::Approx(0.346410161513775).epsilon(1e-15));
  CHECK(g.y() == doctest::Approx(0.461880215351701).epsilon(1e-15));
  const HyperboloidPoint vertex = lift_to_hyperboloid(DiskPoint(0.0, 0.0, params), params);
  CHECK(vertex.z() == 1.0);
  CHECK(minkowski_inner(vertex, vertex) == -1.0);
  CHECK(minkowski_inner(MinkowskiVector{1, 2, 3}, MinkowskiVector{4, 5, 6}) == -4.0);
}

TEST_CASE("property: lift is an isometry") {
  const ModelParams params(1.6, 0.9);
  oracle::Gen gen(71);
  const double a = params.a();
  const double R = params.R();
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = gen.in_disk(0.999 * a);
    const Vec2 y = gen.in_disk(0.999 * a);
    const DiskPoint p(x.u, x.v, params);
    const DiskPoint q(y.u, y.v, params);
    const HyperboloidPoint hp = lift_to_hyperboloid(p, params);
    const HyperboloidPoint hq = lift_to_hyperboloid(q, params);
    CHECK(minkowski_inner(hp, hp) == doctest::Approx(-R * R).epsilon(1e-12));
    CHECK(hyperboloid_distance(hp, hq, params) ==
          doctest::Approx(distance(p, q, params)).epsilon(1e-10));
    const DiskPoint back = project_to_disk(hp, params);
    CHECK(std::abs(back.u() - p.u()) <= 1e-13 * a);
    CHECK(std::abs(back.v() - p.v()) <= 1e-13 * a);

    const FundamentalForm pulled = pullback_fundamental_form(p, params);
    const FundamentalForm direct = fundamental_form(p, params);
    const double scale = direct.E + direct.G;
    CHECK(std::abs(pulled.E - direct.E) <= 1e-6 * scale);
    CHECK(std::abs(pulled.F - direct.F) <= 1e-6 * scale);
    CHECK(std::abs(pulled.G - direct.G) <= 1e-6 * scale);
  }
}

TEST_CASE("polar parametrization") {
  const ModelParams params(1.0, 2.0);
  const HyperboloidPoint vertex = polar_parametrization({0.0, 1.0}, params);
  CHECK(vertex.z() == 2.0);
  const HyperboloidPoint p = polar_parametrization({1.0, 0.0}, params);
  CHECK(p.x() == doctest::Approx(2.0 * std::sinh(1.0)).epsilon(1e-15));
  CHECK(p.z() == doctest::Approx(2.0 * std::cosh(1.0)).epsilon(1e-15));
  // Distance from the vertex is R m.
  CHECK(hyperboloid_distance(vertex, p, params) == doctest::Approx(2.0).epsilon(1e-14));
  for (double m : {0.1, 0.5, 1.0, 2.0}) {
    const PolarCoefficients c = polar_metric_check(m, 0.7, params);
    CHECK(c.dm_coeff == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(c.dtheta_coeff == doctest::Approx(4.0 * std::sinh(m) * std::sinh(m)).epsilon(1e-6));
  }
}

TEST_CASE("projection rejects points off the sheet") {
  const ModelParams params;
  CHECK_THROWS_AS(project_to_disk(HyperboloidPoint(3.0, 0.0, 2.0, params), params), Error);
}
