#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sk/error.hpp"

namespace sk {

// Dart-based plane map. The face of dart a is the face on its left; face orbits
// follow fnext(a) = next_cw(twin(a)), so bounded faces are walked counterclockwise.
// Corner c is the sector at origin(c) between c and next_cw(c).
struct PlaneMap {
  std::vector<int> twin, next_cw, origin;
  std::vector<int> prev_cw, face, edge;
  std::vector<int> vdart, fdart, edart;
  int nv = 0, nf = 0;
  int outer_dart = 0;
  int root_vertex = -1;

  int nd() const { return static_cast<int>(twin.size()); }
  int ne() const { return nd() / 2; }
  int outer_face() const { return face[outer_dart]; }
  int head(int a) const { return origin[twin[a]]; }
  int fnext(int a) const { return next_cw[twin[a]]; }
  int fprev(int a) const { return twin[prev_cw[a]]; }
  int corner_face(int c) const { return face[twin[c]]; }

  int degree(int v) const;
  int face_degree(int f) const;
  std::vector<int> darts_at(int v) const;    // clockwise, starting at vdart[v]
  std::vector<int> face_darts(int f) const;  // fnext order, starting at fdart[f]
  std::vector<int> face_darts_from(int a) const;
};

struct BuildOptions {
  bool allow_loops = false;
};

// Validates and completes the derived tables.
PlaneMap build_map(std::vector<int> twin, std::vector<int> next_cw, std::vector<int> origin,
                   int outer_dart, BuildOptions opt = {});

// rotations[v] lists the darts leaving v in clockwise order.
PlaneMap build_map(const std::vector<std::vector<int>>& rotations, const std::vector<int>& twin,
                   int outer_dart, BuildOptions opt = {});

// Simple graph given by clockwise neighbour lists. The outer face lies to the left
// of the dart root_u -> root_v.
PlaneMap from_adjacency(const std::vector<std::vector<int>>& adj, int root_u, int root_v);

// Convex polyhedron from 3D points and edges; rotations come from the geometry.
PlaneMap from_convex_polyhedron(const std::vector<std::array<double, 3>>& pts,
                                const std::vector<std::pair<int, int>>& edges);

PlaneMap dual(const PlaneMap& m);

// Inverse of dual: given the dual of some Q (rooted at m.root_vertex), rebuild Q
// with the same dart ids. Q.outer_dart is a dart leaving the root in m.
PlaneMap primal_of_regular(const PlaneMap& m, int root_dart);

int girth(const PlaneMap& m);
std::vector<int> shortest_cycle(const PlaneMap& m);  // darts, in walking order
bool mincut_at_least(const PlaneMap& m, int d);

// Darts in a canonical traversal order from root_dart (connected maps).
std::vector<int> canonical_order(const PlaneMap& m, int root_dart);
std::vector<int> canonical_code(const PlaneMap& m, int root_dart);
std::vector<int> canonical_outer(const PlaneMap& m);
bool isomorphic(const PlaneMap& a, const PlaneMap& b);

// Proper 2-colouring with origin(outer_dart) black; empty when not bipartite.
std::vector<uint8_t> bipartition(const PlaneMap& m);

struct AngulationView {
  PlaneMap map;
  int d = 0;
  std::vector<int> ext;        // u_1..u_d, clockwise around the outer face
  std::vector<int> ext_darts;  // a_i from u_i to u_{i+1}
  std::vector<int> ext_index;  // per vertex: i in 1..d, 0 when internal
  std::vector<uint8_t> ext_dart;  // dart lies on an external edge
  bool distinct = true;

  bool internal_vertex(int v) const { return ext_index[v] == 0; }
};

AngulationView as_angulation(const PlaneMap& m, int d, bool require_distinct = true);

struct RegularView {
  PlaneMap map;
  int d = 0;
  int root = -1;
  std::vector<int> root_edges;  // e_1..e_d, darts leaving the root, counterclockwise
  std::vector<int> root_faces;  // f_i lies to the right of e_i
  std::vector<int> root_nbr;    // v_i = head(e_i)
  std::vector<int> face_index;  // per face: i when f_i, else 0
  std::vector<int> root_edge_index;  // per dart: i when on edge e_i, else 0
};

RegularView as_regular(const PlaneMap& m, int d, int root);

}  // namespace sk
