#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "sk/corpus.hpp"
#include "sk/schnyder.hpp"

using namespace sk;

namespace {

std::vector<AngulationView> small_hosts() {
  std::vector<AngulationView> out{as_angulation(tetrahedron(), 3), as_angulation(cube(), 4),
                                  as_angulation(dodecahedron(), 5)};
  for (int d : {3, 4, 5})
    for (int f = 1; f <= (d == 5 ? 3 : 5); ++f)
      for (auto& m : enumerate_angulations(d, f, true))
        if (girth(m) == d) out.push_back(as_angulation(m, d));
  return out;
}

bool has_axiom(const std::vector<Violation>& v, const std::string& axiom) {
  for (auto& x : v)
    if (x.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("tetrahedron labelling") {
  auto g = as_angulation(tetrahedron(), 3);
  auto l = psi_inverse(g, compute_dd2_orientation(g));
  CHECK(validate_labelling(g, l).empty());
  auto s = phi(g, l);
  int singletons = 0;
  for (int a = 0; a < g.map.nd(); ++a) singletons += std::popcount(s.colors[a]) == 1;
  CHECK(singletons == 3);
  for (int i = 1; i <= 3; ++i) {
    int inner = -1;
    for (int v = 0; v < g.map.nv; ++v)
      if (g.internal_vertex(v)) inner = v;
    CHECK(forest_path_to_root(g, s, i, inner).size() == 2);
  }
}

TEST_CASE("labelling validator names the axiom") {
  auto g = as_angulation(tetrahedron(), 3);
  auto l = psi_inverse(g, compute_dd2_orientation(g));
  auto bad = l;
  bad.color[g.ext_darts[0]] = 2;
  CHECK(has_axiom(validate_labelling(g, bad), "ii"));

  auto c = as_angulation(cube(), 4);
  auto lc = psi_inverse(c, compute_dd2_orientation(c));
  for (int v = 0; v < c.map.nv; ++v) {
    if (!c.internal_vertex(v)) continue;
    auto b = lc;
    for (int x : c.map.darts_at(v)) b.color[x] = wrap_color(b.color[x] + 2 * (x % 2), 4);
    auto viol = validate_labelling(c, b);
    CHECK_FALSE(viol.empty());
  }
}

TEST_CASE("bijections round trip on small hosts") {
  for (auto& g : small_hosts()) {
    auto lat = lattice_enumerate(g);
    std::set<std::vector<int>> labels;
    std::set<std::vector<uint64_t>> decs;
    for (auto& o : lat) {
      auto l = psi_inverse(g, o);
      REQUIRE(validate_labelling(g, l).empty());
      CHECK(psi(g, l) == o);
      auto s = phi(g, l);
      REQUIRE(validate_decomposition(g, s).empty());
      CHECK(phi_inverse(g, s) == l);
      CHECK(gamma(g, s) == o);
      auto out = outdegrees(g.map, psi(g, l));
      for (int v = 0; v < g.map.nv; ++v) CHECK(out[v] == (g.internal_vertex(v) ? g.d : 0));
      labels.insert(l.color);
      decs.insert(s.colors);
    }
    CHECK(labels.size() == lat.size());
    CHECK(decs.size() == lat.size());
  }
}

TEST_CASE("labelling push commutes with cycle push") {
  int pushes = 0;
  for (auto& g : small_hosts()) {
    auto cycles = d_cycles(g);
    for (auto& o : lattice_enumerate(g)) {
      auto l = psi_inverse(g, o);
      for (auto& c : cycles) {
        if (!is_ccw_circuit(o, c)) {
          CHECK_THROWS_AS(labelling_push(g, l, c), Error);
          continue;
        }
        CHECK(labelling_push(g, l, c) == psi_inverse(g, push_cycle(o, c)));
        ++pushes;
      }
    }
  }
  CHECK(pushes > 10);
}

TEST_CASE("pushing a labelling d times is the identity") {
  auto g = as_angulation(cube(), 4);
  auto cycles = d_cycles(g);
  auto l = psi_inverse(g, compute_dd2_orientation(g));
  auto r = l;
  for (int t = 0; t < 4; ++t)
    for (int x = 0; x < g.map.nd(); ++x)
      if (cycles[0].inside[g.map.corner_face(x)]) r.color[x] = wrap_color(r.color[x] + 1, 4);
  CHECK(r == l);
}

TEST_CASE("decomposition validator") {
  auto g = as_angulation(dodecahedron(), 5);
  auto s = phi(g, psi_inverse(g, compute_dd2_orientation(g)));
  CHECK(validate_decomposition(g, s).empty());
  for (int i = 1; i <= 5; ++i)
    for (int v = 0; v < g.map.nv; ++v)
      if (g.internal_vertex(v)) CHECK(forest_path_to_root(g, s, i, v).size() <= static_cast<size_t>(g.map.nv));
  auto bad = s;
  for (int a = 0; a < g.map.nd(); ++a)
    if (bad.colors[a]) {
      bad.colors[a] &= bad.colors[a] - 1;
      break;
    }
  CHECK(has_axiom(validate_decomposition(g, bad), "i"));
  CHECK_THROWS_AS(phi_inverse(g, bad), Error);
}

TEST_CASE("orientation with a wrong outdegree fails to propagate") {
  auto g = as_angulation(cube(), 4);
  auto o = compute_dd2_orientation(g);
  for (int a = 0; a < g.map.nd(); ++a)
    if (o.value[a] > 0 && o.value[a] < o.k) {
      ++o.value[a];
      break;
    } else if (o.value[a] == 0) {
      o.value[a] = 1;
      break;
    }
  CHECK_THROWS_AS(psi_inverse(g, o), Error);
}

TEST_CASE("even labelling on the cube gives even jumps") {
  auto g = as_angulation(cube(), 4);
  auto o = scaled(compute_p_p1_orientation(g), 2);
  auto l = psi_inverse(g, o);
  CHECK(is_even(psi(g, l)));
}
