#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sk/planar_map.hpp"
#include "sk/schnyder.hpp"

namespace sk {

// Grid drawings of a rooted 4-regular map of mincut 4 with an even regular
// decomposition t. Ray directions: color 1 down, 2 left, 3 up, 4 right.

struct Point {
  int x = 0, y = 0;
  auto operator<=>(const Point&) const = default;
};

struct DrawnEdge {
  int id = -1;  // edge id in the host map
  int u = -1, v = -1;
  int cu = 0, cv = 0;  // colors of the arcs out of u and out of v, 0 when unknown
  std::vector<Point> bends;  // from u to v
  bool operator==(const DrawnEdge&) const = default;
};

struct RootRouting {
  Point pos;
  std::vector<std::vector<Point>> routes;  // per root edge: v_i*, bends..., root
  bool operator==(const RootRouting&) const = default;
};

struct ReductionChoice {
  std::vector<int> X, Y;  // sorted
  bool operator==(const ReductionChoice&) const = default;
};

struct GridDrawing {
  int n = 0;  // vertices of the host, root included
  int root = -1;
  std::vector<int> root_nbr;   // v_1*..v_4*
  std::vector<Point> coords;   // per vertex; the root sits at (-1,-1)
  std::vector<DrawnEdge> edges;  // non-root edges, by id
  std::optional<RootRouting> root_routing;
  std::optional<ReductionChoice> reduction;
  bool operator==(const GridDrawing&) const = default;
};

// Faces of R_{i,i+2}(v) as a per-face mask; i in 1..4.
std::vector<uint8_t> region_faces(const RegularView& r, const ColorDecomposition& t, int v, int i);
std::vector<Point> place_by_face_counting(const RegularView& r, const ColorDecomposition& t);

struct LineStep {
  bool is_face = false;
  int id = -1;
  bool operator==(const LineStep&) const = default;
};
// From v_{i+1}* to v_{i+3}*, alternating vertices and non-root faces.
std::vector<LineStep> equatorial_line(const RegularView& r, const ColorDecomposition& t, int i);
std::vector<Point> place_by_equatorial_lines(const RegularView& r, const ColorDecomposition& t);

GridDrawing orthogonal_drawing(const RegularView& r, const ColorDecomposition& t, const std::vector<Point>& coords);
// Segments of the simple graph obtained by collapsing faces of degree 2, root removed.
GridDrawing straight_line_drawing(const RegularView& r, const ColorDecomposition& t, const std::vector<Point>& coords);
GridDrawing add_root(const GridDrawing& gd);

// The segments leaving each non-root vertex appear in the clockwise order of its darts.
bool rotation_preserved(const RegularView& r, const GridDrawing& gd);

enum class FaceClass { non_reducible, partly_reducible, fully_reducible };
const char* face_class_name(FaceClass c);

struct FaceInfo {
  int face = -1;
  bool black = false;
  int a = -1, a2 = -1, b = -1, b2 = -1;  // special edges {a,a'} and {b,b'}
  int special_a = -1, special_b = -1;   // their edge ids
  int xm = -1, xp = -1, ym = -1, yp = -1;  // f_x^-, f_x^+, f_y^-, f_y^+
  int x = 0, y = 0;
  FaceClass cls = FaceClass::non_reducible;
};

struct FaceClassification {
  std::vector<FaceInfo> faces;  // non-root faces, increasing face id
  int count(FaceClass c) const;
};

FaceClassification classify_faces(const RegularView& r, const ColorDecomposition& t, const std::vector<Point>& coords);
// Per face (-1 at root faces), the class read from the degrees of the dual vertex
// in the two trees of the reduced decomposition of the dual quadrangulation.
std::vector<int> dual_degree_classes(const RegularView& r, const ColorDecomposition& t);

ReductionChoice balanced_reduction_choice(const FaceClassification& fc);
ReductionChoice random_reduction_choice(const FaceClassification& fc, std::mt19937_64& rng);
bool is_reduction_choice(const FaceClassification& fc, const ReductionChoice& rc);
GridDrawing apply_reduction(const GridDrawing& gd, const ReductionChoice& rc);

struct Crossing {
  int e1, e2;  // edge ids; root routes are -1 - i for e_i*
  Point at;
};
std::vector<Crossing> find_crossings(const GridDrawing& gd);
bool check_planarity(const GridDrawing& gd);

// Edges whose bounding rectangle holds a vertex other than its endpoints.
std::vector<int> nonempty_rectangles(const GridDrawing& gd);

struct SvgStyle {
  int scale = 40;
  bool grid = true;
};
std::string emit_svg(const GridDrawing& gd, const SvgStyle& style = {});
std::string emit_drawing_json(const GridDrawing& gd);
GridDrawing parse_drawing_json(const std::string& text);

}  // namespace sk
