#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sk/corpus.hpp"
#include "sk/orientation.hpp"

using namespace sk;

namespace {

std::set<std::vector<int>> value_set(const std::vector<FracOrientation>& os) {
  std::set<std::vector<int>> s;
  for (auto& o : os) s.insert(o.value);
  return s;
}

}  // namespace

TEST_CASE("K4 has a single 3-orientation") {
  auto g = as_angulation(tetrahedron(), 3);
  auto o = compute_dd2_orientation(g);
  CHECK(check_dd2(g, o).empty());
  CHECK(brute_force_count(g) == 1);
  CHECK(lattice_enumerate(g).size() == 1);
}

TEST_CASE("cube lattice matches exhaustive search") {
  auto g = as_angulation(cube(), 4);
  std::vector<FracOrientation> brute;
  auto n = brute_force_count(g, &brute);
  auto lat = lattice_enumerate(g);
  CHECK(n > 1);
  CHECK(lat.size() == n);
  CHECK(value_set(lat) == value_set(brute));
  for (auto& o : lat) CHECK(check_dd2(g, o).empty());
}

TEST_CASE("dodecahedron admits a 5/3-orientation") {
  auto g = as_angulation(dodecahedron(), 5);
  auto o = compute_dd2_orientation(g);
  CHECK(o.k == 3);
  CHECK(check_dd2(g, o).empty());
}

TEST_CASE("flow succeeds exactly when girth equals d") {
  for (int d : {3, 4, 5}) {
    for (int f = 1; f <= (d == 5 ? 3 : 4); ++f) {
      for (auto& m : enumerate_angulations(d, f, false)) {
        auto g = as_angulation(m, d, false);
        bool girth_ok = girth(m) == d;
        try {
          auto o = compute_dd2_orientation(g);
          CHECK(girth_ok);
          CHECK(check_dd2(g, o).empty());
        } catch (const GirthTooSmall& e) {
          CHECK_FALSE(girth_ok);
          CHECK(static_cast<int>(e.cycle.size()) < d);
          CHECK_FALSE(e.subset.empty());
        }
      }
    }
  }
}

TEST_CASE("lattice size equals exhaustive count on small instances") {
  int checked = 0;
  for (int d : {3, 4, 5}) {
    for (int f = 1; f <= (d == 5 ? 3 : 5); ++f) {
      for (auto& m : enumerate_angulations(d, f, true)) {
        if (girth(m) != d) continue;
        auto g = as_angulation(m, d);
        if (m.ne() - d > 10) continue;
        CHECK(lattice_enumerate(g).size() == brute_force_count(g));
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("push then unpush is the identity") {
  auto g = as_angulation(cube(), 4);
  auto cycles = d_cycles(g);
  REQUIRE_FALSE(cycles.empty());
  int pushes = 0;
  for (auto& o : lattice_enumerate(g))
    for (auto& c : cycles)
      if (is_ccw_circuit(o, c)) {
        auto p = push_cycle(o, c);
        CHECK(is_cw_circuit(p, c));
        CHECK(unpush_cycle(p, c) == o);
        ++pushes;
      }
  CHECK(pushes > 0);
  auto lo = minimal_orientation(g);
  for (auto& c : cycles) CHECK_THROWS_AS(push_cycle(lo, c), Error);
}

TEST_CASE("minimum does not depend on the start") {
  auto g = as_angulation(dodecahedron(), 5);
  auto lat = lattice_enumerate(g);
  auto lo = minimal_orientation(g);
  CHECK(lat.front() == lo);
  for (size_t i = 0; i < lat.size(); i += std::max<size_t>(1, lat.size() / 7))
    CHECK(minimal_orientation(g, lat[i]) == lo);
}

TEST_CASE("p/(p-1) orientation") {
  auto g = as_angulation(cube(), 4);
  auto o = compute_p_p1_orientation(g);
  CHECK(o.k == 1);
  CHECK(check_dd2(g, scaled(o, 2)).empty());
  CHECK(is_even(scaled(o, 2)));
  try {
    compute_p_p1_orientation(as_angulation(dodecahedron(), 5));
    FAIL("odd d accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "OddD");
  }
}

TEST_CASE("lattice cap") {
  LatticeOptions opt;
  opt.cap = 2;
  CHECK_THROWS_AS(lattice_enumerate(as_angulation(dodecahedron(), 5), opt), Error);
}

TEST_CASE("parallel lattice enumeration agrees") {
  auto g = as_angulation(dodecahedron(), 5);
  LatticeOptions opt;
  opt.jobs = 4;
  CHECK(value_set(lattice_enumerate(g, opt)) == value_set(lattice_enumerate(g)));
}
