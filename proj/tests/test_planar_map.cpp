#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sk/corpus.hpp"
#include "sk/planar_map.hpp"

using namespace sk;

namespace {

void check_invariants(const PlaneMap& m) {
  int fsum = 0, vsum = 0;
  for (int a = 0; a < m.nd(); ++a) CHECK(m.twin[m.twin[a]] == a);
  for (int f = 0; f < m.nf; ++f) fsum += m.face_degree(f);
  for (int v = 0; v < m.nv; ++v) vsum += m.degree(v);
  CHECK(fsum == 2 * m.ne());
  CHECK(vsum == 2 * m.ne());
  CHECK(m.nv - m.ne() + m.nf == 2);
}

}  // namespace

TEST_CASE("tetrahedron has four faces") {
  auto m = tetrahedron();
  CHECK(m.nv == 4);
  CHECK(m.ne() == 6);
  CHECK(m.nf == 4);
  for (int f = 0; f < m.nf; ++f) CHECK(m.face_degree(f) == 3);
  check_invariants(m);
}

TEST_CASE("4-cycle has an inner and an outer face") {
  auto m = cycle_map(4);
  CHECK(m.nf == 2);
  check_invariants(m);
}

TEST_CASE("rotations of a torus embedding fail Euler") {
  // K4 with one vertex rotation reversed gives a map of genus 1
  std::vector<std::vector<int>> adj{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  auto ok = from_adjacency(adj, 0, 1);
  check_invariants(ok);
  bool euler_failure = false;
  for (int flip = 0; flip < 4 && !euler_failure; ++flip) {
    auto bad = adj;
    std::swap(bad[flip][1], bad[flip][2]);
    try {
      from_adjacency(bad, 0, 1);
    } catch (const Error& e) {
      euler_failure = e.kind() == "EulerViolation";
    }
  }
  CHECK(euler_failure);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(build_map({1, 0}, {0, 0}, {0, 1}, 0), Error);
  CHECK_THROWS_AS(build_map({0, 1}, {0, 1}, {0, 1}, 0), Error);
  try {
    build_map({1, 0, 3, 2}, {0, 1, 2, 3}, {0, 1, 2, 3}, 0);
    FAIL("disconnected map accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "Disconnected");
  }
}

TEST_CASE("dual of the cube is the octahedron") {
  auto d = dual(cube());
  CHECK(d.nv == 6);
  CHECK(d.ne() == 12);
  for (int v = 0; v < d.nv; ++v) CHECK(d.degree(v) == 4);
  CHECK(isomorphic(d, octahedron()));
  CHECK(d.root_vertex == d.origin[d.outer_dart]);
}

TEST_CASE("tetrahedron is self-dual") { CHECK(isomorphic(dual(tetrahedron()), tetrahedron())); }

TEST_CASE("dual of the dodecahedron is a 5-regular icosahedron") {
  auto d = dual(dodecahedron());
  CHECK(d.nv == 12);
  for (int v = 0; v < d.nv; ++v) CHECK(d.degree(v) == 5);
  CHECK(isomorphic(d, icosahedron()));
}

TEST_CASE("double dual is isomorphic") {
  for (auto m : {cube(), octahedron(), dodecahedron(), cycle_map(5)}) {
    auto dd = dual(dual(m));
    CHECK(isomorphic(dd, m));
    for (int a = 0; a < m.nd(); ++a) CHECK(dd.origin[a] == dd.origin[dd.next_cw[a]]);
  }
}

TEST_CASE("primal_of_regular inverts dual dartwise") {
  for (auto q : {cube(), tetrahedron(), dodecahedron()}) {
    auto g = dual(q);
    auto back = primal_of_regular(g, g.outer_dart);
    CHECK(back.twin == q.twin);
    CHECK(back.next_cw == q.next_cw);
    CHECK(back.outer_dart == q.outer_dart);
    auto g2 = dual(back);
    CHECK(g2.next_cw == g.next_cw);
  }
}

TEST_CASE("girth") {
  CHECK(girth(tetrahedron()) == 3);
  CHECK(girth(cube()) == 4);
  CHECK(girth(dodecahedron()) == 5);
  CHECK(girth(cycle_map(7)) == 7);
  auto c = shortest_cycle(cube());
  CHECK(c.size() == 4);
  auto m = cube();
  for (size_t i = 0; i < c.size(); ++i) CHECK(m.head(c[i]) == m.origin[c[(i + 1) % c.size()]]);
  // path on two vertices is a tree
  CHECK_THROWS_AS(girth(build_map({1, 0}, {0, 1}, {0, 1}, 0)), Error);
}

TEST_CASE("mincut") {
  CHECK(mincut_at_least(octahedron(), 4));
  CHECK_FALSE(mincut_at_least(octahedron(), 5));
  // two copies of K4 minus an edge, joined by two edges: 3-regular with a 2-edge cut
  // vertices 0..3 and 4..7; missing edges {0,1} and {4,5}; bridges 0-4 and 1-5
  std::vector<std::vector<int>> adj{{4, 2, 3}, {3, 2, 5}, {0, 1, 3}, {0, 2, 1},
                                    {0, 7, 6}, {6, 7, 1}, {4, 7, 5}, {4, 5, 6}};
  std::vector<std::vector<int>> fixed = adj;
  // pick the rotation choice that is planar
  bool built = false;
  for (int mask = 0; mask < 256 && !built; ++mask) {
    auto a = adj;
    for (int v = 0; v < 8; ++v)
      if (mask >> v & 1) std::swap(a[v][1], a[v][2]);
    try {
      auto m = from_adjacency(a, 0, 4);
      CHECK_FALSE(mincut_at_least(m, 3));
      CHECK(mincut_at_least(m, 2));
      built = true;
    } catch (const Error&) {
    }
  }
  CHECK(built);
}

TEST_CASE("angulation views") {
  auto t = as_angulation(tetrahedron(), 3);
  CHECK(t.ext.size() == 3);
  auto c = as_angulation(cube(), 4);
  CHECK(c.ext.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(c.map.head(c.ext_darts[i]) == c.ext[(i + 1) % 4]);
  try {
    as_angulation(cube(), 3);
    FAIL("cube accepted as triangulation");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotDAngulation");
  }
  // Eq. relating internal edges and internal vertices
  auto dd = as_angulation(dodecahedron(), 5);
  CHECK((dd.map.ne() - 5) * 3 == (dd.map.nv - 5) * 5);
}

TEST_CASE("regular views") {
  auto o = as_regular(octahedron(), 4, 0);
  CHECK(o.root_edges.size() == 4);
  for (int i = 0; i < 4; ++i) {
    // e_i lies between f_i and f_{i+1}
    CHECK(o.map.face[o.map.twin[o.root_edges[i]]] == o.root_faces[i]);
    CHECK(o.map.face[o.root_edges[i]] == o.root_faces[(i + 1) % 4]);
  }
  try {
    as_regular(cube(), 4, 0);
    FAIL("cube accepted as 4-regular");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotDRegular");
  }
  CHECK(as_regular(icosahedron(), 5, 3).root_edges.size() == 5);
}

TEST_CASE("root faces of a dual match the external vertices") {
  auto q = as_angulation(cube(), 4);
  auto g = dual(q.map);
  auto r = as_regular(g, 4, g.root_vertex);
  CHECK(r.root_edges[0] == q.map.outer_dart);
  for (int i = 0; i < 4; ++i) {
    // face of the dual right of e_i is the primal vertex u_i
    int dart_in_face = r.map.twin[r.root_edges[i]];
    CHECK(q.map.origin[r.map.twin[dart_in_face]] == q.ext[i]);
  }
}

TEST_CASE("bipartition") {
  auto b = bipartition(cube());
  REQUIRE(b.size() == 8);
  auto m = cube();
  CHECK(b[m.origin[m.outer_dart]] == 1);
  for (int a = 0; a < m.nd(); ++a) CHECK(b[m.origin[a]] != b[m.head(a)]);
  CHECK(bipartition(tetrahedron()).empty());
}
