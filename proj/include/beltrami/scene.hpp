#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "beltrami/core.hpp"

namespace beltrami {

struct ScenePoint {
  Vec2 at;
  std::string label;
};

/// A chord given either by two boundary angles or by two interior points.
struct SceneGeodesic {
  std::variant<std::array<double, 2>, std::array<Vec2, 2>> definition;
  std::string label;
};

struct SceneCircle {
  Vec2 center;
  double rho;
  std::string label;
};

struct SceneEquidistant {
  double xi;
  std::string label;
};

struct SceneHorocycle {
  double ideal_angle;
  double rho_offset;
  std::string label;
};

/// A vertex is an interior point or, written as a bare number, an ideal
/// point given by its boundary angle.
using SceneVertex = std::variant<Vec2, double>;

struct SceneTriangle {
  std::array<SceneVertex, 3> vertices;
  std::string label;
};

using SceneObject = std::variant<ScenePoint, SceneGeodesic, SceneCircle,
                                 SceneEquidistant, SceneHorocycle,
                                 SceneTriangle>;

struct Scene {
  ModelParams params;
  std::vector<SceneObject> objects;
};

/// Parse and validate a scene document. Violations raise
/// Error(kSchemaViolation) naming the object index and field.
Scene parse_scene(std::string_view json);

/// Canonical JSON for a scene (sorted keys, defaults written out).
std::string scene_to_json(const Scene& scene);

/// SVG 1.1 drawing of the scene; curves use `samples` points each.
std::string render_svg(const Scene& scene, std::size_t samples = 256);

}  // namespace beltrami
