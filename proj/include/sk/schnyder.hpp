#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sk/orientation.hpp"
#include "sk/planar_map.hpp"

namespace sk {

// color[c] in 1..d for corner c (the sector clockwise after dart c at its origin).
struct CornerLabelling {
  int d = 0;
  std::vector<int> color;
  bool operator==(const CornerLabelling&) const = default;
};

// colors[a] is a bitmask, bit i-1 set when dart a carries color i.
struct ColorDecomposition {
  int d = 0;
  std::vector<uint64_t> colors;
  bool operator==(const ColorDecomposition&) const = default;
};

struct Violation {
  std::string axiom;  // "i", "ii", "iii", "structure"
  std::string where;  // "face", "vertex", "corner", "dart", "color"
  int id = -1;
  std::string detail;
};

inline int wrap_color(int c, int d) { return ((c - 1) % d + d) % d + 1; }
inline uint64_t color_bit(int c) { return uint64_t{1} << (c - 1); }
// Colors i, i+1, ..., j-1 (mod d); empty when i == j.
uint64_t color_interval(int i, int j, int d);
std::vector<int> mask_colors(uint64_t mask, int d);

std::vector<Violation> validate_labelling(const AngulationView& g, const CornerLabelling& l);
std::vector<Violation> validate_decomposition(const AngulationView& g, const ColorDecomposition& s);

// Clockwise jump across dart a: color after a minus color before a, mod d.
int jump(const PlaneMap& m, const CornerLabelling& l, int a);

FracOrientation psi(const AngulationView& g, const CornerLabelling& l);
CornerLabelling psi_inverse(const AngulationView& g, const FracOrientation& o);
ColorDecomposition phi(const AngulationView& g, const CornerLabelling& l);
CornerLabelling phi_inverse(const AngulationView& g, const ColorDecomposition& s);
FracOrientation gamma(const AngulationView& g, const ColorDecomposition& s);

// Adds 1 to the corners inside c; every counterclockwise arc must separate distinct colors.
CornerLabelling labelling_push(const AngulationView& g, const CornerLabelling& l, const Cycle& c);

// Vertices visited following outgoing color-i arcs from v until an external vertex.
std::vector<int> forest_path_to_root(const AngulationView& g, const ColorDecomposition& s, int i, int v);

}  // namespace sk
