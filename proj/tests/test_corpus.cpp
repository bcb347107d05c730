#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sk/corpus.hpp"

using namespace sk;

namespace {

size_t rooted(int d, int f, bool simple) {
  size_t n = 0;
  for_each_angulation(d, f, simple, [&](const PlaneMap&) { ++n; });
  return n;
}

}  // namespace

TEST_CASE("rooted triangulation counts") {
  CHECK(rooted(3, 1, false) == 1);
  CHECK(rooted(3, 2, false) == 0);
  CHECK(rooted(3, 3, false) == 4);
  CHECK(rooted(3, 5, false) == 24);
  CHECK(rooted(3, 7, false) == 176);
}

TEST_CASE("quadrangulations are loopless so the count matches the recurrence") {
  for (int f = 1; f <= 4; ++f) CHECK(rooted(4, f, false) == static_cast<size_t>(count_rooted_maps(4, 4, f)));
  CHECK(rooted(4, 4, false) == 2916);
}

TEST_CASE("rooted simple quadrangulations") {
  const size_t expected[] = {1, 2, 6, 22, 91, 408};
  for (int f = 1; f <= 6; ++f) CHECK(rooted(4, f, true) == expected[f - 1]);
}

TEST_CASE("pentangulations") {
  CHECK(rooted(5, 1, false) == 16);
  CHECK(rooted(5, 2, false) == 0);
}

TEST_CASE("dedupe keeps one map per isomorphism class") {
  auto tri = enumerate_angulations(3, 3, false);
  CHECK(tri.size() >= 2);
  for (size_t i = 0; i < tri.size(); ++i)
    for (size_t j = i + 1; j < tri.size(); ++j) CHECK(canonical_outer(tri[i]) != canonical_outer(tri[j]));
  CHECK(enumerate_angulations(4, 1, true).size() == 1);
}

TEST_CASE("random draws are valid angulations") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto m = random_angulation(4, 7, true, rng);
    auto g = as_angulation(m, 4);
    CHECK(m.nf == 8);
    CHECK(girth(m) == 4);
  }
  auto q = grow_quadrangulation(50, rng);
  CHECK(q.nf == 50);
  CHECK(girth(q) == 4);
}
