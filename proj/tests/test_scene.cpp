#include <doctest.h>

#include <string>

#include "beltrami/error.hpp"
#include "beltrami/scene.hpp"

using namespace beltrami;

namespace {

ErrorCode code_of(const std::string& text, std::string* message = nullptr) {
  try {
    parse_scene(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  return ErrorCode{};
}

const char* kFull = R"({
  "a": 2, "R": 1.5,
  "objects": [
    {"type": "point", "u": 0.5, "v": -0.25, "label": "P"},
    {"type": "geodesic", "endpoints": [0, 2]},
    {"type": "geodesic", "p": [0, 0], "q": [0.5, 0.5]},
    {"type": "circle", "center": [0.3, 0.1], "rho": 0.8},
    {"type": "equidistant", "xi": -0.4},
    {"type": "horocycle", "ideal_angle": 1.0, "rho_offset": 0.3},
    {"type": "triangle", "vertices": [[0, 0], [1, 0], 2.0], "label": "T"}
  ]
})";

}  // namespace

TEST_CASE("parse a scene with every object type") {
  const Scene scene = parse_scene(kFull);
  CHECK(scene.params.a() == 2.0);
  CHECK(scene.params.R() == 1.5);
  REQUIRE(scene.objects.size() == 7);
  CHECK(std::get<ScenePoint>(scene.objects[0]).label == "P");
  CHECK(std::holds_alternative<SceneTriangle>(scene.objects[6]));
  const auto& tri = std::get<SceneTriangle>(scene.objects[6]);
  CHECK(std::get<double>(tri.vertices[2]) == 2.0);
}

TEST_CASE("defaults and canonical form") {
  const Scene scene = parse_scene(R"({"objects": [{"v": 0.1, "u": 0.2, "type": "point"}]})");
  CHECK(scene.params.a() == 1.0);
  CHECK(scene.params.R() == 1.0);
  const std::string canon = scene_to_json(scene);
  CHECK(canon.find("\"R\": 1.0") != std::string::npos);
  CHECK(canon.back() == '\n');
  // Canonical output is a fixed point.
  CHECK(scene_to_json(parse_scene(canon)) == canon);
  const std::string full = scene_to_json(parse_scene(kFull));
  CHECK(scene_to_json(parse_scene(full)) == full);
}

TEST_CASE("schema violations name the offending field") {
  std::string msg;
  CHECK(code_of("not json", &msg) == ErrorCode::kSchemaViolation);
  CHECK(code_of("[]") == ErrorCode::kSchemaViolation);
  CHECK(code_of(R"({"a": -1})", &msg) == ErrorCode::kSchemaViolation);
  CHECK(code_of(R"({"extra": 1})", &msg) == ErrorCode::kSchemaViolation);

  CHECK(code_of(R"({"objects": [{"type": "point", "u": 2, "v": 0}]})", &msg) ==
        ErrorCode::kSchemaViolation);
  CHECK(msg.find("objects[0].u") != std::string::npos);

  CHECK(code_of(R"({"objects": [{"type": "point", "u": 0, "v": 0},
                                 {"type": "circle", "center": [0, 0], "rho": 0}]})",
                &msg) == ErrorCode::kSchemaViolation);
  CHECK(msg.find("objects[1].rho") != std::string::npos);

  CHECK(code_of(R"({"objects": [{"type": "blob"}]})", &msg) == ErrorCode::kSchemaViolation);
  CHECK(msg.find("objects[0].type") != std::string::npos);

  CHECK(code_of(R"({"objects": [{"type": "equidistant", "xi": 1, "color": "red"}]})") ==
        ErrorCode::kSchemaViolation);
  CHECK(code_of(R"({"objects": [{"type": "geodesic", "endpoints": [1, 1]}]})") ==
        ErrorCode::kSchemaViolation);
  CHECK(code_of(R"({"objects": [{"type": "geodesic", "endpoints": [0, 1], "p": [0, 0]}]})") ==
        ErrorCode::kSchemaViolation);
  CHECK(code_of(R"({"objects": [{"type": "triangle", "vertices": [[0, 0], [0.1, 0.1], [0.2, 0.2]]}]})",
                &msg) == ErrorCode::kSchemaViolation);
  CHECK(msg.find("objects[0].vertices") != std::string::npos);
  CHECK(code_of(R"({"objects": [{"type": "point", "u": 0, "v": 0, "label": "A"},
                                 {"type": "point", "u": 0.1, "v": 0, "label": "A"}]})") ==
        ErrorCode::kSchemaViolation);
}

TEST_CASE("SVG output") {
  const Scene scene = parse_scene(kFull);
  const std::string svg = render_svg(scene);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("viewBox=\"-2.100000 -2.100000 4.200000 4.200000\"") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find(">P</text>") != std::string::npos);
  CHECK(svg.find("-0.000000") == std::string::npos);
  CHECK(svg == render_svg(parse_scene(kFull)));
  CHECK(render_svg(scene, 32).size() < svg.size());
}
