#include "sk/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sk {

namespace {

using json = nlohmann::ordered_json;

template <class F>
auto parsing(const char* what, F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(std::string("parse_") + what, "InvalidFormat", e.what());
  }
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

}  // namespace

std::string map_to_json(const PlaneMap& m) {
  json darts = json::array();
  for (int a = 0; a < m.nd(); ++a)
    darts.push_back({{"twin", m.twin[a]}, {"next_cw", m.next_cw[a]}, {"origin", m.origin[a]}});
  json j{{"darts", darts}, {"outer_dart", m.outer_dart}};
  j["root_vertex"] = m.root_vertex < 0 ? json(nullptr) : json(m.root_vertex);
  return dump(j);
}

PlaneMap map_from_json(const std::string& text) {
  std::vector<int> twin, next, origin;
  int outer = 0, root = -1;
  parsing("map", [&] {
    auto j = json::parse(text);
    for (auto& d : j.at("darts")) {
      twin.push_back(d.at("twin").get<int>());
      next.push_back(d.at("next_cw").get<int>());
      origin.push_back(d.at("origin").get<int>());
    }
    outer = j.value("outer_dart", 0);
    if (j.contains("root_vertex") && !j["root_vertex"].is_null()) root = j["root_vertex"].get<int>();
    return 0;
  });
  auto m = build_map(twin, next, origin, outer);
  if (root >= m.nv) throw Error("parse_map", "InvalidFormat", "root_vertex out of range");
  m.root_vertex = root;
  return m;
}

std::string orientation_to_json(const FracOrientation& o) {
  return dump(json{{"k", o.k}, {"values", o.value}});
}

FracOrientation orientation_from_json(const std::string& text) {
  return parsing("orientation", [&] {
    auto j = json::parse(text);
    FracOrientation o;
    o.k = j.at("k").get<int>();
    j.at("values").get_to(o.value);
    return o;
  });
}

std::string decomposition_to_json(const ColorDecomposition& s, std::optional<std::string> host, bool reduced) {
  json colors = json::array();
  for (auto mask : s.colors) colors.push_back(mask_colors(mask, s.d));
  json j{{"d", s.d}, {"dart_colors", colors}};
  if (host) j["host"] = *host;
  if (reduced) j["reduced"] = true;
  return dump(j);
}

DecompositionFile decomposition_from_json(const std::string& text) {
  return parsing("decomposition", [&] {
    auto j = json::parse(text);
    DecompositionFile f;
    f.s.d = j.at("d").get<int>();
    for (auto& cs : j.at("dart_colors")) {
      uint64_t mask = 0;
      for (auto& c : cs) {
        int x = c.get<int>();
        if (x < 1 || x > 64) throw Error("parse_decomposition", "InvalidFormat", "color out of range");
        mask |= color_bit(x);
      }
      f.s.colors.push_back(mask);
    }
    if (j.contains("host")) f.host = j["host"].get<std::string>();
    f.reduced = j.value("reduced", false);
    return f;
  });
}

std::string labelling_to_json(const CornerLabelling& l, std::optional<std::string> host) {
  json j{{"corner_colors", l.color}};
  if (host) j["host"] = *host;
  return dump(j);
}

LabellingFile labelling_from_json(const std::string& text, int d) {
  return parsing("labelling", [&] {
    auto j = json::parse(text);
    LabellingFile f;
    f.l.d = j.value("d", d);
    j.at("corner_colors").get_to(f.l.color);
    if (j.contains("host")) f.host = j["host"].get<std::string>();
    return f;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("read", "IoError", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("write", "IoError", "cannot write " + path);
  out << text;
}

}  // namespace sk
