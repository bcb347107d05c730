#pragma once

#include <optional>
#include <string>

#include "sk/orientation.hpp"
#include "sk/planar_map.hpp"
#include "sk/schnyder.hpp"

namespace sk {

// JSON file formats. Parse errors throw Error with kind InvalidFormat, or the
// map builder's own kind when the darts do not form a plane map.

std::string map_to_json(const PlaneMap& m);
PlaneMap map_from_json(const std::string& text);

std::string orientation_to_json(const FracOrientation& o);
FracOrientation orientation_from_json(const std::string& text);

struct DecompositionFile {
  ColorDecomposition s;
  std::optional<std::string> host;  // "primal" or "dual"
  bool reduced = false;
};
std::string decomposition_to_json(const ColorDecomposition& s, std::optional<std::string> host = {},
                                  bool reduced = false);
DecompositionFile decomposition_from_json(const std::string& text);

struct LabellingFile {
  CornerLabelling l;
  std::optional<std::string> host;
};
std::string labelling_to_json(const CornerLabelling& l, std::optional<std::string> host = {});
LabellingFile labelling_from_json(const std::string& text, int d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace sk
