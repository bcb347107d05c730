#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <functional>
#include <numeric>

#include "sk/corpus.hpp"
#include "sk/even.hpp"

using namespace sk;

namespace {

std::vector<AngulationView> even_hosts() {
  std::vector<AngulationView> out{as_angulation(cube(), 4)};
  for (int f = 1; f <= 6; ++f)
    for (auto& m : enumerate_angulations(4, f, true)) out.push_back(as_angulation(m, 4));
  for (int f = 1; f <= 3; ++f)
    for (auto& m : enumerate_angulations(6, f, true))
      if (girth(m) == 6) out.push_back(as_angulation(m, 6));
  return out;
}

// Tree on every vertex except `skip`.
bool tree_avoiding(const PlaneMap& m, const std::vector<uint8_t>& in, int skip) {
  std::vector<int> comp(m.nv);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  int edges = 0;
  for (int e = 0; e < m.ne(); ++e) {
    if (!in[e]) continue;
    ++edges;
    int a = m.edart[e], x = find(m.origin[a]), y = find(m.head(a));
    if (x == y || m.origin[a] == skip || m.head(a) == skip) return false;
    comp[x] = y;
  }
  return edges == m.nv - 2;
}

}  // namespace

TEST_CASE("parity characterizations agree") {
  int even = 0, odd = 0;
  for (auto& g : even_hosts()) {
    auto r = dual_view(g);
    for (auto& o : lattice_enumerate(g)) {
      auto l = psi_inverse(g, o);
      auto s = phi(g, l);
      auto t = chi(g, r, s);
      bool e = is_even(o);
      CHECK(is_even_labelling(g, l) == e);
      CHECK(is_even_schnyder(g, s) == e);
      CHECK(is_even_regular(r, t) == e);
      (e ? even : odd)++;
    }
  }
  CHECK(even > 0);
  CHECK(odd > 0);
}

TEST_CASE("odd d is rejected") {
  auto g = as_angulation(tetrahedron(), 3);
  auto l = psi_inverse(g, compute_dd2_orientation(g));
  try {
    is_even_labelling(g, l);
    FAIL("odd d accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "OddD");
  }
  CHECK_THROWS_AS(lambda(g, phi(g, l)), Error);
}

TEST_CASE("even color at a black vertex is not even") {
  auto g = as_angulation(cube(), 4);
  auto l = psi_inverse(g, scaled(compute_p_p1_orientation(g), 2));
  CHECK(is_even_labelling(g, l));
  auto bad = l;
  bad.color[g.ext_darts[0]] = 2;
  CHECK_FALSE(is_even_labelling(g, bad));
}

TEST_CASE("lambda round trip") {
  for (auto& g : even_hosts()) {
    for (auto& o : lattice_enumerate(g)) {
      if (!is_even(o)) continue;
      auto s = phi(g, psi_inverse(g, o));
      auto red = lambda(g, s);
      CHECK(validate_reduced_schnyder(g, red).empty());
      CHECK(lambda_inverse(g, red) == s);
      if (g.d == 4) {
        // adding the designated external edges gives two trees, avoiding u_3 and u_1
        auto& m = g.map;
        for (int i = 1; i <= 2; ++i) {
          std::vector<uint8_t> in(m.ne(), 0);
          for (int a = 0; a < m.nd(); ++a)
            if (red.colors[a] & color_bit(i)) in[m.edge[a]] = 1;
          auto ext_edge = [&](int k) { return m.edge[g.ext_darts[k - 1]]; };
          if (i == 1) in[ext_edge(4)] = in[ext_edge(1)] = 1;
          else in[ext_edge(2)] = in[ext_edge(3)] = 1;
          CHECK(tree_avoiding(m, in, g.ext[i == 1 ? 2 : 0]));
        }
      }
    }
  }
}

TEST_CASE("lambda star round trip and black faces") {
  for (auto& g : even_hosts()) {
    auto r = dual_view(g);
    auto fc = face_colors(r);
    auto black = bipartition(g.map);
    // dual faces inherit colors from primal vertices
    for (int a = 0; a < r.map.nd(); ++a) CHECK(fc[r.map.face[a]] == black[g.map.head(a)]);
    for (auto& o : lattice_enumerate(g)) {
      if (!is_even(o)) continue;
      auto t = chi(g, r, phi(g, psi_inverse(g, o)));
      auto red = lambda_star(r, t);
      CHECK(validate_reduced_regular(r, red).empty());
      CHECK(lambda_star_inverse(r, red) == t);
      for (int a = 0; a < r.map.nd(); ++a)
        if (t.colors[a]) CHECK(fc[r.map.face[r.map.twin[a]]] == (std::countr_zero(t.colors[a]) % 2 == 1));
    }
  }
}

TEST_CASE("even regular decomposition of the octahedron") {
  auto r = as_regular(octahedron(), 4, 0);
  auto t = compute_even_regular_decomposition(r);
  CHECK(validate_regular_decomposition(r, t).empty());
  CHECK(is_even_regular(r, t));
  for (int i = 1; i <= 4; ++i) CHECK(t.colors[r.map.twin[r.root_edges[i - 1]]] == color_bit(i));
  // trees 2 and 4 partition the edges other than e_1, e_3
  for (int e = 0; e < r.map.ne(); ++e) {
    int a = r.map.edart[e];
    uint64_t both = t.colors[a] | t.colors[r.map.twin[a]];
    int k = r.root_edge_index[a];
    int even_colors = std::popcount(both & (color_bit(2) | color_bit(4)));
    CHECK(even_colors == (k == 1 || k == 3 ? 0 : 1));
  }
}

TEST_CASE("pipeline on duals of quadrangulations") {
  for (int f = 3; f <= 7; ++f)
    for (auto& q : enumerate_angulations(4, f, true)) {
      auto d = dual(q);
      auto r = as_regular(d, 4, d.root_vertex);
      auto t = compute_even_regular_decomposition(r);
      CHECK(validate_regular_decomposition(r, t).empty());
      CHECK(is_even_regular(r, t));
    }
}

TEST_CASE("2-cut is rejected") {
  bool seen = false;
  for (auto& q : enumerate_angulations(4, 3, false)) {
    if (girth(q) != 2) continue;
    auto d = dual(q);
    auto r = as_regular(d, 4, d.root_vertex);
    try {
      compute_even_regular_decomposition(r);
      FAIL("2-cut accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == "MincutTooSmall");
    }
    seen = true;
  }
  CHECK(seen);
}
