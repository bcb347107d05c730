#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "sk/corpus.hpp"
#include "sk/duality.hpp"

using namespace sk;

namespace {

std::vector<AngulationView> hosts() {
  std::vector<AngulationView> out{as_angulation(tetrahedron(), 3), as_angulation(cube(), 4),
                                  as_angulation(dodecahedron(), 5)};
  for (int d : {3, 4, 5})
    for (int f = 1; f <= (d == 5 ? 3 : 5); ++f)
      for (auto& m : enumerate_angulations(d, f, true))
        if (girth(m) == d) out.push_back(as_angulation(m, d));
  return out;
}

}  // namespace

TEST_CASE("dual labellings are regular labellings") {
  for (auto& g : hosts()) {
    auto r = dual_view(g);
    for (auto& o : lattice_enumerate(g)) {
      auto l = psi_inverse(g, o);
      auto ls = dual_labelling(g, r, l);
      CHECK(validate_regular_labelling(r, ls).empty());
      CHECK(primal_labelling(g, r, ls) == l);
    }
  }
}

TEST_CASE("xi round trip and tree properties") {
  for (auto& g : hosts()) {
    auto r = dual_view(g);
    for (auto& o : lattice_enumerate(g)) {
      auto ls = dual_labelling(g, r, psi_inverse(g, o));
      auto t = xi(r, ls);
      CHECK(validate_regular_decomposition(r, t).empty());
      CHECK(xi_inverse(r, t) == ls);
      for (int i = 1; i <= g.d; ++i) {
        int arcs = 0;
        for (int a = 0; a < r.map.nd(); ++a) arcs += (t.colors[a] >> (i - 1)) & 1;
        CHECK(arcs == r.map.nv - 1);
        CHECK(t.colors[r.map.twin[r.root_edges[i - 1]]] == color_bit(i));
      }
    }
  }
}

TEST_CASE("chi agrees with the corner route and is a complemented dual") {
  for (auto& g : hosts()) {
    auto r = dual_view(g);
    for (auto& o : lattice_enumerate(g)) {
      auto l = psi_inverse(g, o);
      auto s = phi(g, l);
      auto t = chi(g, r, s);
      CHECK(t == xi(r, dual_labelling(g, r, l)));
      CHECK(chi_inverse(g, r, t) == s);
      for (int i = 1; i <= g.d; ++i) {
        auto tree = primal_tree(g, s, i);
        for (int e = 0; e < g.map.ne(); ++e) {
          int a = g.map.edart[e];
          bool in_dual = (t.colors[a] | t.colors[g.map.twin[a]]) & color_bit(i);
          CHECK(in_dual == !tree[e]);
        }
      }
      // missing colors of a primal edge are the colors of its dual
      for (int e = 0; e < g.map.ne(); ++e) {
        int a = g.map.edart[e];
        if (g.ext_dart[a]) continue;
        uint64_t all = (uint64_t{1} << g.d) - 1;
        CHECK(((s.colors[a] | s.colors[g.map.twin[a]]) ^ all) == (t.colors[a] | t.colors[g.map.twin[a]]));
      }
    }
  }
}

TEST_CASE("tetrahedron dual has three spanning trees") {
  auto g = as_angulation(tetrahedron(), 3);
  auto r = dual_view(g);
  auto t = chi(g, r, phi(g, psi_inverse(g, compute_dd2_orientation(g))));
  for (int i = 1; i <= 3; ++i) {
    int arcs = 0;
    for (auto c : t.colors) arcs += (c >> (i - 1)) & 1;
    CHECK(arcs == 3);
  }
}

TEST_CASE("regular validators reject broken input") {
  auto g = as_angulation(cube(), 4);
  auto r = dual_view(g);
  auto ls = dual_labelling(g, r, psi_inverse(g, compute_dd2_orientation(g)));
  auto t = xi(r, ls);

  auto bad = t;
  int b = r.map.twin[r.root_edges[0]];
  bad.colors[b] = color_bit(2);
  CHECK_FALSE(validate_regular_decomposition(r, bad).empty());
  CHECK_THROWS_AS(xi_inverse(r, bad), Error);

  // rotating the outgoing colors at one vertex keeps (iii); whatever xi_inverse accepts must round trip
  int rejected = 0;
  for (int v = 0; v < r.map.nv; ++v) {
    if (v == r.root) continue;
    auto rot = t;
    for (int a : r.map.darts_at(v)) {
      int c = std::countr_zero(t.colors[a]) + 1;
      rot.colors[a] = color_bit(wrap_color(c + 1, 4));
    }
    CornerLabelling back;
    try {
      back = xi_inverse(r, rot);
    } catch (const Error& e) {
      CHECK(e.kind() == "InvalidDecomposition");
      ++rejected;
      continue;
    }
    CHECK(xi(r, back) == rot);
  }
  CHECK(rejected > 0);

  auto badl = ls;
  badl.color[r.root_edges[0]] = 3;
  CHECK_FALSE(validate_regular_labelling(r, badl).empty());
  CHECK_THROWS_AS(xi(r, badl), Error);
}
