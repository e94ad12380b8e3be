// Command-line front end over the C API.
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beltrami/beltrami.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

struct Failure {
  int exit_code;
  std::string message;
};

void check(bk_status status) {
  if (status == BK_OK) return;
  const int code = status == BK_NO_CONVERGENCE ? kExitNoConvergence : kExitInvalid;
  throw Failure{code, bk_last_error()};
}

// Twelve decimals, independent of the C locale.
std::string num(double x) {
  char buf[64];
  if (x == 0.0) x = 0.0;  // fold -0
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 12);
  std::string s(buf, res.ptr);
  if (s == "-0.000000000000") s = "0.000000000000";
  return s;
}

std::vector<double> parse_tuple(const std::string& text, std::size_t count,
                                const std::string& flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double value = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw Failure{kExitInvalid, "cannot parse " + flag + " '" + text + "'"};
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) {
    throw Failure{kExitInvalid, flag + " expects " + std::to_string(count) +
                                    " comma-separated numbers"};
  }
  return out;
}

using ContextPtr = std::unique_ptr<bk_context, decltype(&bk_context_destroy)>;

ContextPtr make_context(double a, double R) {
  bk_context* ctx = nullptr;
  check(bk_context_create(a, R, &ctx));
  return ContextPtr(ctx, &bk_context_destroy);
}

void print_values(const std::vector<std::pair<std::string, double>>& fields,
                  bool json) {
  if (json) {
    std::cout << '{';
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << '"' << fields[i].first << "\": " << num(fields[i].second);
    }
    std::cout << "}\n";
    return;
  }
  for (const auto& [name, value] : fields) std::cout << num(value) << '\n';
}

void print_points(const std::vector<double>& xy, bool json) {
  const std::size_t n = xy.size() / 2;
  if (json) {
    std::cout << '[';
    for (std::size_t i = 0; i < n; ++i) {
      if (i) std::cout << ", ";
      std::cout << '[' << num(xy[2 * i]) << ", " << num(xy[2 * i + 1]) << ']';
    }
    std::cout << "]\n";
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << num(xy[2 * i]) << ' ' << num(xy[2 * i + 1]) << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInvalid, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beltrami-Klein disk model: distances, angles, areas, curves"};
  app.require_subcommand(1);
  app.fallthrough();

  double a = 1.0;
  double R = 1.0;
  bool json = false;
  double tol_scale = 1.0;
  app.add_option("--a", a, "disk radius")->envname("BELTRAMI_A");
  app.add_option("--R", R, "curvature scale (K = -1/R^2)")->envname("BELTRAMI_R");
  app.add_flag("--json", json, "JSON output");
  app.add_option("--tol-scale", tol_scale, "multiply verification tolerances");

  std::string p_text, q_text;
  auto* dist = app.add_subcommand("dist", "hyperbolic distance between two points");
  dist->add_option("--p", p_text, "first point u,v")->required();
  dist->add_option("--q", q_text, "second point u,v")->required();

  std::string at_text;
  double mu = 0.0, nu = 0.0, m = 0.0, n_slope = 0.0;
  auto* angle = app.add_subcommand("angle", "hyperbolic angle between two chords at a point");
  angle->add_option("--p", at_text, "point u,v")->required();
  auto* opt_mu = angle->add_option("--mu", mu, "inclination of the first chord");
  auto* opt_nu = angle->add_option("--nu", nu, "inclination of the second chord");
  auto* opt_m = angle->add_option("--m", m, "slope of the first chord");
  auto* opt_n = angle->add_option("--n", n_slope, "slope of the second chord");
  opt_mu->needs(opt_nu);
  opt_nu->needs(opt_mu);
  opt_m->needs(opt_n);
  opt_n->needs(opt_m);
  opt_mu->excludes(opt_m);

  double rho = 0.0;
  auto* par = app.add_subcommand("parallelism", "angle of parallelism for a distance");
  par->add_option("--rho", rho, "perpendicular distance")->required();

  std::vector<std::string> vertex_text;
  auto* tri = app.add_subcommand("triangle", "angles and area of a triangle");
  tri->add_option("--v", vertex_text, "vertex u,v (three times)")->required()->expected(3);

  std::string to, h_text;
  double ideal = 0.0;
  auto* conv = app.add_subcommand("convert", "coordinate conversion");
  conv->add_option("--to", to, "target system")
      ->required()
      ->check(CLI::IsMember({"disk", "hyperboloid", "polar", "equidistant", "horocyclic"}));
  conv->add_option("--p", p_text, "disk point u,v");
  conv->add_option("--hyp", h_text, "hyperboloid point x,y,z");
  conv->add_option("--ideal", ideal, "ideal point angle for horocyclic coordinates");

  std::string family, center_text;
  double xi = 0.0;
  std::size_t count = 0;
  auto* curve = app.add_subcommand("curve", "sample a curve family");
  curve->add_option("family", family, "circle | equidistant | horocycle | geodesic")
      ->required()
      ->check(CLI::IsMember({"circle", "equidistant", "horocycle", "geodesic"}));
  curve->add_option("--center", center_text, "circle center u,v");
  curve->add_option("--rho", rho, "circle radius or horocycle offset");
  curve->add_option("--xi", xi, "equidistant offset");
  curve->add_option("--ideal", ideal, "horocycle ideal point angle");
  curve->add_option("--p", p_text, "geodesic point u,v");
  curve->add_option("--q", q_text, "geodesic point u,v");
  curve->add_option("--n", count, "number of samples")->required();

  std::string scene_path, svg_path;
  bool normalize = false;
  auto* render = app.add_subcommand("render", "render a scene file to SVG");
  render->add_option("scene", scene_path, "scene JSON")->required();
  render->add_option("output", svg_path, "SVG output path")->required();
  render->add_flag("--normalize", normalize,
                   "write canonical scene JSON instead of SVG");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*verify) {
      bk_report* raw = nullptr;
      check(bk_verify_run(tol_scale, &raw));
      std::unique_ptr<bk_report, decltype(&bk_report_destroy)> report(raw, &bk_report_destroy);
      for (std::size_t i = 0; i < bk_report_size(report.get()); ++i) {
        const char* name = nullptr;
        int passed = 0;
        double measured = 0, expected = 0, tol = 0;
        check(bk_report_check(report.get(), i, &name, &passed, &measured, &expected, &tol));
        char line[512];
        std::snprintf(line, sizeof(line), "%s %-48s measured=%.12g expected=%.12g tol=%.3g",
                      passed ? "PASS" : "FAIL", name, measured, expected, tol);
        std::cout << line << '\n';
      }
      const bool ok = bk_report_passed(report.get()) != 0;
      std::cout << (ok ? "all checks passed" : "verification FAILED") << '\n';
      return ok ? 0 : kExitVerifyFailed;
    }

    if (*render) {
      const std::string text = read_file(scene_path);
      char* out = nullptr;
      check(normalize ? bk_normalize_scene(text.c_str(), &out)
                      : bk_render_scene(text.c_str(), &out));
      std::unique_ptr<char, decltype(&bk_string_free)> guard(out, &bk_string_free);
      std::ofstream file(svg_path, std::ios::binary);
      if (!file) throw Failure{kExitInvalid, "cannot write " + svg_path};
      file << out;
      return 0;
    }

    const ContextPtr ctx = make_context(a, R);

    if (*dist) {
      const auto p = parse_tuple(p_text, 2, "--p");
      const auto q = parse_tuple(q_text, 2, "--q");
      double d = 0.0;
      check(bk_distance(ctx.get(), p[0], p[1], q[0], q[1], &d));
      print_values({{"distance", d}}, json);
    } else if (*angle) {
      const auto p = parse_tuple(at_text, 2, "--p");
      double alpha = 0.0;
      if (*opt_mu) {
        check(bk_chord_angle(ctx.get(), p[0], p[1], mu, nu, &alpha));
      } else if (*opt_m) {
        check(bk_tangent_angle(ctx.get(), p[0], p[1], m, n_slope, &alpha));
      } else {
        throw Failure{kExitInvalid, "give --mu/--nu or --m/--n"};
      }
      print_values({{"angle", alpha}}, json);
    } else if (*par) {
      double theta = 0.0;
      check(bk_angle_of_parallelism(ctx.get(), rho, &theta));
      print_values({{"angle", theta}}, json);
    } else if (*tri) {
      double verts[6];
      for (int i = 0; i < 3; ++i) {
        const auto v = parse_tuple(vertex_text[i], 2, "--v");
        verts[2 * i] = v[0];
        verts[2 * i + 1] = v[1];
      }
      double angles[3], defect = 0.0, quad = 0.0;
      check(bk_triangle(ctx.get(), verts, angles, &defect, &quad));
      if (json) {
        print_values({{"angle_A", angles[0]}, {"angle_B", angles[1]},
                      {"angle_C", angles[2]}, {"area", defect},
                      {"area_quadrature", quad}},
                     true);
      } else {
        const char* names[3] = {"A", "B", "C"};
        for (int i = 0; i < 3; ++i) {
          std::cout << "angle " << names[i] << ' ' << num(angles[i]) << '\n';
        }
        std::cout << "area " << num(defect) << '\n';
        std::cout << "area_quadrature " << num(quad) << '\n';
      }
    } else if (*conv) {
      if (to == "disk") {
        if (h_text.empty()) throw Failure{kExitInvalid, "--to disk needs --hyp x,y,z"};
        const auto h = parse_tuple(h_text, 3, "--hyp");
        double uv[2];
        check(bk_from_hyperboloid(ctx.get(), h[0], h[1], h[2], uv));
        if (json) {
          print_values({{"u", uv[0]}, {"v", uv[1]}}, true);
        } else {
          std::cout << num(uv[0]) << ' ' << num(uv[1]) << '\n';
        }
      } else {
        if (p_text.empty()) throw Failure{kExitInvalid, "--to " + to + " needs --p u,v"};
        const auto p = parse_tuple(p_text, 2, "--p");
        std::vector<std::pair<std::string, double>> fields;
        if (to == "hyperboloid") {
          double xyz[3];
          check(bk_to_hyperboloid(ctx.get(), p[0], p[1], xyz));
          fields = {{"x", xyz[0]}, {"y", xyz[1]}, {"z", xyz[2]}};
        } else if (to == "polar") {
          double r_phi[2], rho_phi[2];
          check(bk_to_polar(ctx.get(), p[0], p[1], r_phi, rho_phi));
          fields = {{"r", r_phi[0]}, {"phi", r_phi[1]}, {"rho", rho_phi[0]}};
        } else if (to == "equidistant") {
          double xe[2];
          check(bk_to_equidistant(ctx.get(), p[0], p[1], xe));
          fields = {{"xi", xe[0]}, {"eta", xe[1]}};
        } else {
          double rs[2];
          check(bk_to_horocyclic(ctx.get(), p[0], p[1], ideal, rs));
          fields = {{"rho", rs[0]}, {"sigma", rs[1]}};
        }
        if (json) {
          print_values(fields, true);
        } else {
          for (std::size_t i = 0; i < fields.size(); ++i) {
            std::cout << (i ? " " : "") << num(fields[i].second);
          }
          std::cout << '\n';
        }
      }
    } else if (*curve) {
      std::vector<double> xy(2 * count);
      if (family == "circle") {
        if (center_text.empty()) throw Failure{kExitInvalid, "circle needs --center"};
        const auto c = parse_tuple(center_text, 2, "--center");
        check(bk_curve_circle(ctx.get(), c[0], c[1], rho, count, xy.data()));
      } else if (family == "equidistant") {
        check(bk_curve_equidistant(ctx.get(), xi, count, xy.data()));
      } else if (family == "horocycle") {
        check(bk_curve_horocycle(ctx.get(), ideal, rho, count, xy.data()));
      } else {
        if (p_text.empty() || q_text.empty()) {
          throw Failure{kExitInvalid, "geodesic needs --p and --q"};
        }
        const auto p = parse_tuple(p_text, 2, "--p");
        const auto q = parse_tuple(q_text, 2, "--q");
        check(bk_curve_geodesic(ctx.get(), p[0], p[1], q[0], q[1], count, xy.data()));
      }
      print_points(xy, json);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return 0;
}
