// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "beltrami/beltrami.h"

namespace {

struct Context {
  explicit Context(double a = 1.0, double R = 1.0) { bk_context_create(a, R, &ctx); }
  ~Context() { bk_context_destroy(ctx); }
  bk_context* ctx = nullptr;
};

}  // namespace

TEST_CASE("context lifecycle") {
  bk_context* ctx = nullptr;
  CHECK(bk_context_create(2.0, 3.0, &ctx) == BK_OK);
  REQUIRE(ctx != nullptr);
  CHECK(bk_context_a(ctx) == 2.0);
  CHECK(bk_context_R(ctx) == 3.0);
  bk_context_destroy(ctx);
  bk_context_destroy(nullptr);

  bk_context* bad = nullptr;
  CHECK(bk_context_create(-1.0, 1.0, &bad) == BK_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::strlen(bk_last_error()) > 0);
  CHECK(bk_context_create(1.0, 1.0, nullptr) == BK_INVALID_ARGUMENT);
  CHECK(std::string(bk_status_name(BK_OUTSIDE_DISK)).size() > 0);
  CHECK(std::strlen(bk_version()) > 0);
}

TEST_CASE("measurements") {
  Context c;
  double d = 0.0;
  CHECK(bk_distance(c.ctx, 0.0, 0.0, 0.5, 0.0, &d) == BK_OK);
  CHECK(d == doctest::Approx(0.549306144334055).epsilon(1e-15));
  double x = 0.0;
  CHECK(bk_cross_ratio_distance(c.ctx, 0.5, 0.0, 0.0, 0.5, &x) == BK_OK);
  CHECK(x == doctest::Approx(0.795365461223906).epsilon(1e-13));
  CHECK(bk_distance(c.ctx, 1.2, 0.0, 0.0, 0.0, &d) == BK_OUTSIDE_DISK);
  CHECK(std::string(bk_last_error()).find("point outside disk") != std::string::npos);
  CHECK(bk_distance(nullptr, 0.0, 0.0, 0.5, 0.0, &d) == BK_INVALID_ARGUMENT);

  double t = 0.0;
  CHECK(bk_tangent_angle(c.ctx, 0.5, 0.25, 0.5, 1.0, &t) == BK_OK);
  CHECK(t == doctest::Approx(0.269653748754516).epsilon(1e-13));
  double mu = 0.0;
  CHECK(bk_chord_angle(c.ctx, 0.5, 0.25, std::atan(0.5), std::atan(1.0), &mu) == BK_OK);
  CHECK(mu == doctest::Approx(t).epsilon(1e-12));
  CHECK(bk_tangent_angle(c.ctx, 0.5, 0.25, 1.0, 1.0, &t) == BK_EQUAL_DIRECTIONS);

  double p = 0.0;
  CHECK(bk_angle_of_parallelism(c.ctx, 5.0, &p) == BK_OK);
  CHECK(p == doctest::Approx(0.0134756900688456).epsilon(1e-13));
  CHECK(bk_angle_of_parallelism(c.ctx, 0.0, &p) == BK_NONPOSITIVE_DISTANCE);
}

TEST_CASE("triangle") {
  Context c;
  const double v[6] = {0.5, 0.5, 0.0, 0.0, 0.5, 0.0};
  double angles[3];
  double defect = 0.0;
  double quad = 0.0;
  CHECK(bk_triangle(c.ctx, v, angles, &defect, &quad) == BK_OK);
  // Angles follow the input order.
  CHECK(angles[0] == doctest::Approx(0.615479708670387).epsilon(1e-13));
  CHECK(angles[1] == doctest::Approx(M_PI / 4));
  CHECK(angles[2] == doctest::Approx(M_PI / 2));
  CHECK(defect == doctest::Approx(0.169918454727061).epsilon(1e-12));
  CHECK(quad == doctest::Approx(defect).epsilon(1e-9));
  const double flat[6] = {0, 0, 0.1, 0.1, 0.2, 0.2};
  CHECK(bk_triangle(c.ctx, flat, angles, &defect, &quad) == BK_DEGENERATE_TRIANGLE);
}

TEST_CASE("conversions") {
  Context c;
  double xyz[3];
  CHECK(bk_to_hyperboloid(c.ctx, 0.5, 0.0, xyz) == BK_OK);
  CHECK(xyz[0] == doctest::Approx(0.577350269189626).epsilon(1e-15));
  CHECK(xyz[2] == doctest::Approx(1.154700538379252).epsilon(1e-15));
  double uv[2];
  CHECK(bk_from_hyperboloid(c.ctx, xyz[0], xyz[1], xyz[2], uv) == BK_OK);
  CHECK(uv[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(bk_from_hyperboloid(c.ctx, 3.0, 0.0, 1.0, uv) != BK_OK);

  double rphi[2];
  double rhophi[2];
  CHECK(bk_to_polar(c.ctx, 0.0, 0.5, rphi, rhophi) == BK_OK);
  CHECK(rphi[0] == 0.5);
  CHECK(rphi[1] == doctest::Approx(M_PI / 2));
  CHECK(rhophi[0] == doctest::Approx(0.549306144334055).epsilon(1e-15));

  double xe[2];
  CHECK(bk_to_equidistant(c.ctx, 0.604367777117163, 0.368171262345436, xe) == BK_OK);
  CHECK(xe[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(xe[1] == doctest::Approx(0.7).epsilon(1e-12));

  double rs[2];
  CHECK(bk_to_horocyclic(c.ctx, 0.0, 0.0, 0.0, rs) == BK_OK);
  CHECK(rs[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rs[1] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("curve samplers") {
  Context c;
  std::vector<double> out(2 * 16);
  CHECK(bk_curve_circle(c.ctx, 0.0, 0.0, 1.0, 16, out.data()) == BK_OK);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(std::hypot(out[2 * i], out[2 * i + 1]) == doctest::Approx(std::tanh(1.0)));
  }
  CHECK(bk_curve_equidistant(c.ctx, 0.5, 16, out.data()) == BK_OK);
  CHECK(bk_curve_horocycle(c.ctx, 0.0, 0.0, 16, out.data()) == BK_OK);
  CHECK(bk_curve_geodesic(c.ctx, 0.0, 0.0, 0.5, 0.0, 16, out.data()) == BK_OK);
  CHECK(out[0] == doctest::Approx(-1.0));
  CHECK(out[30] == doctest::Approx(1.0));
  CHECK(bk_curve_geodesic(c.ctx, 0.0, 0.0, 0.5, 0.0, 1, out.data()) == BK_INVALID_ARGUMENT);
  CHECK(bk_curve_circle(c.ctx, 0.0, 0.0, 1.0, 16, nullptr) == BK_INVALID_ARGUMENT);
}

TEST_CASE("scenes") {
  char* svg = nullptr;
  CHECK(bk_render_scene(R"({"objects": [{"type": "point", "u": 0, "v": 0}]})", &svg) == BK_OK);
  REQUIRE(svg != nullptr);
  CHECK(std::string(svg).find("<svg") != std::string::npos);
  bk_string_free(svg);

  char* json = nullptr;
  CHECK(bk_normalize_scene(R"({"objects": []})", &json) == BK_OK);
  REQUIRE(json != nullptr);
  CHECK(std::string(json).find("\"a\": 1.0") != std::string::npos);
  bk_string_free(json);

  char* none = nullptr;
  CHECK(bk_render_scene(R"({"objects": [{"type": "point", "u": 3, "v": 0}]})", &none) ==
        BK_SCHEMA_VIOLATION);
  CHECK(none == nullptr);
  CHECK(std::string(bk_last_error()).find("objects[0].u") != std::string::npos);
}

TEST_CASE("verification report") {
  bk_report* report = nullptr;
  REQUIRE(bk_verify_run(1.0, &report) == BK_OK);
  CHECK(bk_report_size(report) > 14);
  CHECK(bk_report_passed(report) == 1);
  const char* name = nullptr;
  int passed = 0;
  double measured;
  double expected;
  double tol;
  CHECK(bk_report_check(report, 0, &name, &passed, &measured, &expected, &tol) == BK_OK);
  CHECK(std::string(name).rfind("AC", 0) == 0);
  CHECK(bk_report_check(report, 10000, &name, &passed, &measured, &expected, &tol) ==
        BK_INVALID_ARGUMENT);
  bk_report_destroy(report);
}
