#include <doctest.h>

#include <cmath>

#include "beltrami/angles.hpp"
#include "beltrami/error.hpp"
#include "beltrami/geodesy.hpp"
#include "beltrami/verify.hpp"
#include "oracles.hpp"

using namespace beltrami;

namespace {

Vec2 dir(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

TEST_CASE("chord directions") {
  CHECK(ChordDirection(kPi).inclination() == doctest::Approx(0.0));
  CHECK(ChordDirection(-kPi / 4).inclination() == doctest::Approx(0.75 * kPi));
  CHECK(ChordDirection::from_slope(1.0).inclination() == doctest::Approx(kPi / 4));
  CHECK(ChordDirection::through({0.0, 0.0}, {0.0, -1.0}).is_vertical());
  CHECK(ChordDirection::from_slope(-2.0).slope() == doctest::Approx(-2.0));
  CHECK_FALSE(ChordDirection(0.3).is_vertical());
}

TEST_CASE("coordinate-curve angle") {
  const ModelParams params;
  const CoordinateCurveAngle o = coordinate_curve_angle(DiskPoint(0.0, 0.0, params), params);
  CHECK(o.theta == doctest::Approx(kPi / 2));
  CHECK(o.cos_theta == doctest::Approx(0.0));
  // On the axes the coordinate curves stay orthogonal.
  CHECK(coordinate_curve_angle(DiskPoint(0.6, 0.0, params), params).theta ==
        doctest::Approx(kPi / 2));
  const CoordinateCurveAngle off = coordinate_curve_angle(DiskPoint(0.5, 0.5, params), params);
  CHECK(off.theta != doctest::Approx(kPi / 2));
  CHECK(off.theta == doctest::Approx(oracle::hyperboloid_angle({0.5, 0.5}, {1, 0}, {0, 1}, 1, 1))
                         .epsilon(1e-12));
}

TEST_CASE("property: sin^2 + cos^2 = 1 for the coordinate angle") {
  CHECK(check_coordinate_angle_identity(1.0).passed);
}

TEST_CASE("mutation: a misprinted sine formula is caught") {
  const CoordinateAngleFn misprint = [](const DiskPoint& p, const ModelParams& params) {
    const double a = params.a();
    const double u = p.u();
    const double v = p.v();
    CoordinateCurveAngle out = coordinate_curve_angle(p, params);
    out.sin_theta = a * std::sqrt(a * a - u - v * v) /
                    std::sqrt((a * a - u * u) * (a * a - v * v));
    return out;
  };
  CHECK_FALSE(check_coordinate_angle_identity(1.0, misprint).passed);
}

TEST_CASE("tangent angle at a fixed point") {
  const ModelParams params;
  const DiskPoint p(0.5, 0.25, params);
  const double theta = tangent_angle(p, 0.5, 1.0, params);
  CHECK(theta == doctest::Approx(0.269653748754516).epsilon(1e-13));
  // Non-conformality witness: the Euclidean angle is different.
  CHECK(std::abs(theta - (std::atan(1.0) - std::atan(0.5))) > 0.05);
  CHECK(tangent_angle(p, 1.0, 0.5, params) == doctest::Approx(theta).epsilon(1e-15));
  CHECK_THROWS_AS(tangent_angle(p, 0.5, 0.5, params), Error);
  // At the center angles are Euclidean.
  CHECK(tangent_angle(DiskPoint(0.0, 0.0, params), 0.0, 1.0, params) ==
        doctest::Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("property: chord angles against the hyperboloid oracle") {
  const ModelParams params(1.2, 0.9);
  oracle::Gen gen(41);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 x = gen.in_disk(0.99 * params.a());
    const DiskPoint p(x.u, x.v, params);
    const double mu = gen.uniform(0.0, kPi);
    const double nu = gen.uniform(0.0, kPi);
    if (std::abs(mu - nu) < 1e-6) {
      continue;
    }
    const double lo = std::min(mu, nu);
    const double hi = std::max(mu, nu);
    const double ref = oracle::hyperboloid_angle(x, dir(lo), dir(hi), params.a(), params.R());
    const double got = chord_angle_map(p, mu, nu, params);
    CHECK(got == doctest::Approx(ref).epsilon(1e-9));
    CHECK(got == chord_angle_map(p, nu, mu, params));
    CHECK(got > 0.0);
    CHECK(got < kPi);
    if (std::abs(lo - kPi / 2) > 1e-3 && std::abs(hi - kPi / 2) > 1e-3) {
      CHECK(tangent_angle(p, std::tan(mu), std::tan(nu), params) ==
            doctest::Approx(got).epsilon(1e-8));
    }

    const double from = gen.uniform(-kPi, kPi);
    const double to = gen.uniform(-kPi, kPi);
    CHECK(ray_angle(p, from, to, params) ==
          doctest::Approx(oracle::hyperboloid_angle(x, dir(from), dir(to), params.a(),
                                                    params.R()))
              .epsilon(1e-9));
  }
}

TEST_CASE("vertical chords") {
  const ModelParams params;
  const DiskPoint p(0.4, -0.3, params);
  const double got = chord_angle_map(p, kPi / 2, 0.0, params);
  CHECK(got == doctest::Approx(oracle::hyperboloid_angle({0.4, -0.3}, {1, 0}, {0, 1}, 1, 1))
                   .epsilon(1e-12));
}

TEST_CASE("angle of parallelism") {
  const ModelParams params;
  const double rho = dist_from_origin(0.5, params);
  CHECK(angle_of_parallelism(rho, params) == doctest::Approx(kPi / 3).epsilon(1e-14));
  // Same angle read off the figure: at O, between the diameter and the ray to
  // the ideal endpoint S of the perpendicular chord u = 0.5.
  const double s_dir = std::atan2(std::sqrt(0.75), 0.5);
  CHECK(ray_angle(DiskPoint(0.0, 0.0, params), 0.0, s_dir, params) ==
        doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK(angle_of_parallelism(5.0, params) == doctest::Approx(0.0134756900688456).epsilon(1e-13));
  CHECK(angle_of_parallelism(1e-9, params) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(angle_of_parallelism(0.0, params), Error);
  CHECK_THROWS_AS(angle_of_parallelism(-1.0, params), Error);
  CHECK_THROWS_AS(angle_of_parallelism_half_angle(0.0, params), Error);

  for (int k = 0; k < 100; ++k) {
    const double r = 1e-6 * std::pow(50.0 / 1e-6, k / 99.0);
    const double first = angle_of_parallelism(r, params);
    const double second = angle_of_parallelism_half_angle(r, params);
    CHECK(std::abs(first - second) <= 1e-13);
  }
  const ModelParams scaled(3.0, 2.0);
  CHECK(angle_of_parallelism(2.0, scaled) == doctest::Approx(std::atan(1.0 / std::sinh(1.0))));
}
