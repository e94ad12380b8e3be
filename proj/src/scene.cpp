#include "beltrami/scene.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include <json.hpp>

#include "beltrami/area.hpp"
#include "beltrami/curves.hpp"
#include "beltrami/geodesy.hpp"

namespace beltrami {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, where + ": " + what);
}

std::string field_path(std::size_t index, const std::string& field) {
  return "objects[" + std::to_string(index) + "]." + field;
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) fail(where + key, "unknown field");
  }
}

double number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) fail(path, "missing field");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path, "expected a finite number");
  return x;
}

Vec2 pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(path, "expected [u, v]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Vec2 interior(const json& v, const std::string& path, const ModelParams& params) {
  const Vec2 p = pair(v, path);
  try {
    DiskPoint(p.u, p.v, params);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return p;
}

std::string label_of(const json& obj, const std::string& path) {
  if (!obj.contains("label")) return {};
  if (!obj.at("label").is_string()) fail(path, "expected a string");
  return obj.at("label").get<std::string>();
}

SceneObject parse_object(const json& obj, std::size_t index,
                         const ModelParams& params) {
  const std::string prefix = "objects[" + std::to_string(index) + "].";
  if (!obj.is_object()) fail("objects[" + std::to_string(index) + "]", "expected an object");
  if (!obj.contains("type") || !obj.at("type").is_string()) {
    fail(field_path(index, "type"), "missing or not a string");
  }
  const std::string type = obj.at("type").get<std::string>();
  const std::string label = label_of(obj, field_path(index, "label"));

  if (type == "point") {
    check_keys(obj, {"type", "label", "u", "v"}, prefix);
    const Vec2 p{number(obj, "u", field_path(index, "u")),
                 number(obj, "v", field_path(index, "v"))};
    try {
      DiskPoint(p.u, p.v, params);
    } catch (const Error& e) {
      fail(field_path(index, "u"), e.what());
    }
    return ScenePoint{p, label};
  }
  if (type == "geodesic") {
    check_keys(obj, {"type", "label", "endpoints", "p", "q"}, prefix);
    if (obj.contains("endpoints")) {
      if (obj.contains("p") || obj.contains("q")) {
        fail(field_path(index, "endpoints"), "give either endpoints or p/q");
      }
      const Vec2 e = pair(obj.at("endpoints"), field_path(index, "endpoints"));
      try {
        Geodesic(IdealPoint(e.u), IdealPoint(e.v), params);
      } catch (const Error& err) {
        fail(field_path(index, "endpoints"), err.what());
      }
      return SceneGeodesic{std::array<double, 2>{e.u, e.v}, label};
    }
    if (!obj.contains("p")) fail(field_path(index, "p"), "missing field");
    if (!obj.contains("q")) fail(field_path(index, "q"), "missing field");
    const Vec2 p = interior(obj.at("p"), field_path(index, "p"), params);
    const Vec2 q = interior(obj.at("q"), field_path(index, "q"), params);
    try {
      chord_through(DiskPoint(p.u, p.v, params), DiskPoint(q.u, q.v, params),
                    params);
    } catch (const Error& err) {
      fail(field_path(index, "q"), err.what());
    }
    return SceneGeodesic{std::array<Vec2, 2>{p, q}, label};
  }
  if (type == "circle") {
    check_keys(obj, {"type", "label", "center", "rho"}, prefix);
    if (!obj.contains("center")) fail(field_path(index, "center"), "missing field");
    const Vec2 c = interior(obj.at("center"), field_path(index, "center"), params);
    const double rho = number(obj, "rho", field_path(index, "rho"));
    if (!(rho > 0.0)) fail(field_path(index, "rho"), "must be positive");
    return SceneCircle{c, rho, label};
  }
  if (type == "equidistant") {
    check_keys(obj, {"type", "label", "xi"}, prefix);
    return SceneEquidistant{number(obj, "xi", field_path(index, "xi")), label};
  }
  if (type == "horocycle") {
    check_keys(obj, {"type", "label", "ideal_angle", "rho_offset"}, prefix);
    return SceneHorocycle{
        number(obj, "ideal_angle", field_path(index, "ideal_angle")),
        number(obj, "rho_offset", field_path(index, "rho_offset")), label};
  }
  if (type == "triangle") {
    check_keys(obj, {"type", "label", "vertices"}, prefix);
    const std::string path = field_path(index, "vertices");
    if (!obj.contains("vertices")) fail(path, "missing field");
    const json& vs = obj.at("vertices");
    if (!vs.is_array() || vs.size() != 3) fail(path, "expected three vertices");
    SceneTriangle tri{{}, label};
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string vpath = path + "[" + std::to_string(i) + "]";
      if (vs[i].is_number()) {
        tri.vertices[i] = vs[i].get<double>();
      } else {
        tri.vertices[i] = interior(vs[i], vpath, params);
      }
    }
    std::array<TriangleVertex, 3> probe{IdealPoint(0.0), IdealPoint(0.0),
                                        IdealPoint(0.0)};
    for (std::size_t i = 0; i < 3; ++i) {
      if (const auto* p = std::get_if<Vec2>(&tri.vertices[i])) {
        probe[i] = DiskPoint(p->u, p->v, params);
      } else {
        probe[i] = IdealPoint(std::get<double>(tri.vertices[i]));
      }
    }
    try {
      Triangle(probe, params);
    } catch (const Error& e) {
      fail(path, e.what());
    }
    return tri;
  }
  fail(field_path(index, "type"), "unknown object type '" + type + "'");
}

json pair_json(Vec2 p) { return json::array({p.u, p.v}); }

void put_label(json& obj, const std::string& label) {
  if (!label.empty()) obj["label"] = label;
}

// Fixed six-decimal, locale-independent formatting; negative zero folded.
std::string fmt(double x) {
  if (std::abs(x) < 5e-7) x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::fixed, 6);
  return std::string(buf, res.ptr);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// SVG y axis points down; flip v at render time only.
std::string xy(Vec2 p) { return fmt(p.u) + "," + fmt(-p.v); }

std::string points_attr(const std::vector<DiskPoint>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += xy(pts[i].coords());
  }
  return s;
}

}  // namespace

Scene parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("scene", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("scene", "top level must be an object");
  check_keys(doc, {"a", "R", "objects"}, "");
  const double a = doc.contains("a") ? number(doc, "a", "a") : 1.0;
  const double R = doc.contains("R") ? number(doc, "R", "R") : 1.0;
  if (!(a > 0.0)) fail("a", "must be positive");
  if (!(R > 0.0)) fail("R", "must be positive");
  Scene scene{ModelParams(a, R), {}};
  if (!doc.contains("objects")) return scene;
  const json& objs = doc.at("objects");
  if (!objs.is_array()) fail("objects", "expected an array");

  std::set<std::string> labels;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    scene.objects.push_back(parse_object(objs[i], i, scene.params));
    const std::string label =
        std::visit([](const auto& o) { return o.label; }, scene.objects.back());
    if (!label.empty() && !labels.insert(label).second) {
      fail(field_path(i, "label"), "duplicate label '" + label + "'");
    }
  }
  return scene;
}

std::string scene_to_json(const Scene& scene) {
  json doc;
  doc["a"] = scene.params.a();
  doc["R"] = scene.params.R();
  json objs = json::array();
  for (const SceneObject& object : scene.objects) {
    json obj;
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, ScenePoint>) {
            obj["type"] = "point";
            obj["u"] = o.at.u;
            obj["v"] = o.at.v;
          } else if constexpr (std::is_same_v<T, SceneGeodesic>) {
            obj["type"] = "geodesic";
            if (const auto* e = std::get_if<std::array<double, 2>>(&o.definition)) {
              obj["endpoints"] = json::array({(*e)[0], (*e)[1]});
            } else {
              const auto& pq = std::get<std::array<Vec2, 2>>(o.definition);
              obj["p"] = pair_json(pq[0]);
              obj["q"] = pair_json(pq[1]);
            }
          } else if constexpr (std::is_same_v<T, SceneCircle>) {
            obj["type"] = "circle";
            obj["center"] = pair_json(o.center);
            obj["rho"] = o.rho;
          } else if constexpr (std::is_same_v<T, SceneEquidistant>) {
            obj["type"] = "equidistant";
            obj["xi"] = o.xi;
          } else if constexpr (std::is_same_v<T, SceneHorocycle>) {
            obj["type"] = "horocycle";
            obj["ideal_angle"] = o.ideal_angle;
            obj["rho_offset"] = o.rho_offset;
          } else {
            obj["type"] = "triangle";
            json vs = json::array();
            for (const SceneVertex& v : o.vertices) {
              if (const auto* p = std::get_if<Vec2>(&v)) {
                vs.push_back(pair_json(*p));
              } else {
                vs.push_back(std::get<double>(v));
              }
            }
            obj["vertices"] = vs;
          }
          put_label(obj, o.label);
        },
        object);
    objs.push_back(obj);
  }
  doc["objects"] = objs;
  return doc.dump(2) + "\n";
}

std::string render_svg(const Scene& scene, std::size_t samples) {
  const ModelParams& params = scene.params;
  const double a = params.a();
  const std::string stroke = fmt(0.005 * a);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" "
         "height=\"512\" viewBox=\"" +
         fmt(-1.05 * a) + " " + fmt(-1.05 * a) + " " + fmt(2.1 * a) + " " +
         fmt(2.1 * a) + "\">\n";
  out += "<circle cx=\"0.000000\" cy=\"0.000000\" r=\"" + fmt(a) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + stroke + "\"/>\n";

  std::vector<const ScenePoint*> points;
  for (const SceneObject& object : scene.objects) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, ScenePoint>) {
            points.push_back(&o);
          } else if constexpr (std::is_same_v<T, SceneGeodesic>) {
            Vec2 e0, e1;
            if (const auto* e = std::get_if<std::array<double, 2>>(&o.definition)) {
              e0 = IdealPoint((*e)[0]).coords(params);
              e1 = IdealPoint((*e)[1]).coords(params);
            } else {
              const auto& pq = std::get<std::array<Vec2, 2>>(o.definition);
              const Geodesic g =
                  chord_through(DiskPoint(pq[0].u, pq[0].v, params),
                                DiskPoint(pq[1].u, pq[1].v, params), params);
              e0 = g.first().coords(params);
              e1 = g.second().coords(params);
            }
            out += "<line x1=\"" + fmt(e0.u) + "\" y1=\"" + fmt(-e0.v) +
                   "\" x2=\"" + fmt(e1.u) + "\" y2=\"" + fmt(-e1.v) +
                   "\" stroke=\"#1f4e9c\" stroke-width=\"" + stroke + "\"/>\n";
          } else if constexpr (std::is_same_v<T, SceneCircle>) {
            const auto pts = circle_locus(DiskPoint(o.center.u, o.center.v, params),
                                          o.rho, samples, params);
            out += "<polygon points=\"" + points_attr(pts) +
                   "\" fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"" +
                   stroke + "\"/>\n";
          } else if constexpr (std::is_same_v<T, SceneEquidistant>) {
            const auto pts = equidistant_locus(Equidistant{o.xi}, samples, params);
            out += "<polyline points=\"" + points_attr(pts) +
                   "\" fill=\"none\" stroke=\"#1e8449\" stroke-width=\"" +
                   stroke + "\"/>\n";
          } else if constexpr (std::is_same_v<T, SceneHorocycle>) {
            const auto pts = horocycle_locus(
                Horocycle{IdealPoint(o.ideal_angle), o.rho_offset}, samples,
                params);
            out += "<polygon points=\"" + points_attr(pts) +
                   "\" fill=\"none\" stroke=\"#7d3c98\" stroke-width=\"" +
                   stroke + "\"/>\n";
          } else {
            std::string attr;
            for (std::size_t i = 0; i < 3; ++i) {
              const SceneVertex& v = o.vertices[i];
              const Vec2 p = std::holds_alternative<Vec2>(v)
                                 ? std::get<Vec2>(v)
                                 : IdealPoint(std::get<double>(v)).coords(params);
              if (i) attr += ' ';
              attr += xy(p);
            }
            out += "<polygon points=\"" + attr +
                   "\" fill=\"none\" stroke=\"#b9770e\" stroke-width=\"" +
                   stroke + "\"/>\n";
          }
        },
        object);
  }
  // Points last so they sit on top of the curves.
  for (const ScenePoint* p : points) {
    out += "<circle cx=\"" + fmt(p->at.u) + "\" cy=\"" + fmt(-p->at.v) +
           "\" r=\"" + fmt(0.012 * a) + "\" fill=\"black\"/>\n";
    if (!p->label.empty()) {
      out += "<text x=\"" + fmt(p->at.u + 0.02 * a) + "\" y=\"" +
             fmt(-p->at.v - 0.02 * a) + "\" font-size=\"" + fmt(0.05 * a) +
             "\" font-family=\"sans-serif\">" + xml_escape(p->label) +
             "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace beltrami
