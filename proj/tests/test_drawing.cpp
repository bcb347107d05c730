#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "sk/corpus.hpp"
#include "sk/drawing.hpp"
#include "sk/duality.hpp"
#include "sk/even.hpp"

using namespace sk;

namespace {

struct Instance {
  RegularView r;
  ColorDecomposition t;
};

// Every even regular decomposition of the duals of simple quadrangulations.
std::vector<Instance> instances(int max_faces) {
  std::vector<Instance> out;
  for (int f = 2; f <= max_faces; ++f)
    for (auto& q : enumerate_angulations(4, f, true)) {
      auto g = as_angulation(q, 4);
      auto r = dual_view(g);
      for (auto& o : lattice_enumerate(g))
        if (is_even(o)) out.push_back({r, chi(g, r, phi(g, psi_inverse(g, o)))});
    }
  return out;
}

Instance octahedron_instance() {
  auto r = as_regular(octahedron(), 4, 0);
  return {r, compute_even_regular_decomposition(r)};
}

bool is_permutation_of_grid(const RegularView& r, const std::vector<Point>& p) {
  std::vector<int> xs, ys;
  for (int v = 0; v < r.map.nv; ++v)
    if (v != r.root) xs.push_back(p[v].x), ys.push_back(p[v].y);
  std::vector<int> want(xs.size());
  std::iota(want.begin(), want.end(), 0);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  return xs == want && ys == want;
}

int total_bends(const GridDrawing& gd) {
  int k = 0;
  for (auto& e : gd.edges) k += static_cast<int>(e.bends.size());
  if (gd.root_routing)
    for (auto& r : gd.root_routing->routes) k += static_cast<int>(r.size()) - 2;
  return k;
}

void check_instance(const Instance& in) {
  const auto& r = in.r;
  const int n = r.map.nv;
  auto p = place_by_face_counting(r, in.t);
  CHECK(is_permutation_of_grid(r, p));
  CHECK(place_by_equatorial_lines(r, in.t) == p);
  CHECK(p[r.root_nbr[0]].y == 0);
  CHECK(p[r.root_nbr[1]].x == 0);
  CHECK(p[r.root_nbr[2]].y == n - 2);
  CHECK(p[r.root_nbr[3]].x == n - 2);

  auto gd = orthogonal_drawing(r, in.t, p);
  CHECK(static_cast<int>(gd.edges.size()) == 2 * n - 4);
  CHECK(total_bends(gd) == 2 * n - 4);
  CHECK(check_planarity(gd));
  CHECK(rotation_preserved(r, gd));

  auto rooted = add_root(gd);
  CHECK(total_bends(rooted) == 2 * n + 4);
  CHECK(check_planarity(rooted));
  CHECK(rotation_preserved(r, rooted));

  auto fc = classify_faces(r, in.t, p);
  CHECK(static_cast<int>(fc.faces.size()) == n - 2);
  auto dual_cls = dual_degree_classes(r, in.t);
  std::vector<int> special(r.map.ne(), 0);
  for (auto& f : fc.faces) {
    CHECK(dual_cls[f.face] == static_cast<int>(f.cls));
    ++special[f.special_a];
    ++special[f.special_b];
  }
  for (int e = 0; e < r.map.ne(); ++e)
    if (!r.root_edge_index[r.map.edart[e]]) CHECK(special[e] == 1);

  auto sl = straight_line_drawing(r, in.t, p);
  CHECK(check_planarity(sl));
  CHECK(nonempty_rectangles(gd).empty());

  std::mt19937_64 rng(17);
  std::vector<ReductionChoice> choices{balanced_reduction_choice(fc)};
  for (int k = 0; k < 3; ++k) choices.push_back(random_reduction_choice(fc, rng));
  for (auto& rc : choices) {
    REQUIRE(is_reduction_choice(fc, rc));
    auto red = apply_reduction(gd, rc);
    CHECK(check_planarity(red));
    CHECK(rotation_preserved(r, red));
    CHECK(total_bends(red) == 2 * n - 4);
    CHECK(check_planarity(add_root(red)));
    CHECK(check_planarity(apply_reduction(sl, rc)));
    CHECK(nonempty_rectangles(red).empty());
    // consecutive markers stay consecutive unless their line was deleted
    for (auto& f : fc.faces) {
      int ex = std::binary_search(rc.X.begin(), rc.X.end(), f.x) ? 0 : 1;
      int ey = std::binary_search(rc.Y.begin(), rc.Y.end(), f.y) ? 0 : 1;
      CHECK(red.coords[f.xm].x + ex == red.coords[f.xp].x);
      CHECK(red.coords[f.ym].y + ey == red.coords[f.yp].y);
    }
  }
}

}  // namespace

TEST_CASE("octahedron") {
  auto in = octahedron_instance();
  auto p = place_by_face_counting(in.r, in.t);
  CHECK(is_permutation_of_grid(in.r, p));
  auto gd = orthogonal_drawing(in.r, in.t, p);
  CHECK(gd.edges.size() == 8);
  CHECK(total_bends(add_root(gd)) == 16);
  auto rooted = add_root(gd);
  int lo = 0, hi = 0;
  for (auto& route : rooted.root_routing->routes)
    for (auto q : route) lo = std::min({lo, q.x, q.y}), hi = std::max({hi, q.x, q.y});
  CHECK(lo == -2);
  CHECK(hi == 5);
  check_instance(in);
}

TEST_CASE("equatorial lines visit everything once") {
  for (auto& in : instances(6)) {
    int n = in.r.map.nv;
    for (int i = 1; i <= 4; ++i) {
      auto line = equatorial_line(in.r, in.t, i);
      CHECK(static_cast<int>(line.size()) == (n - 1) + (n - 2));
      CHECK(line.front().id == in.r.root_nbr[i % 4]);
      CHECK(line.back().id == in.r.root_nbr[(i + 2) % 4]);
    }
  }
}

TEST_CASE("regions are totally ordered by inclusion") {
  for (auto& in : instances(6)) {
    const auto& r = in.r;
    for (int i = 1; i <= 4; ++i) {
      std::vector<std::vector<uint8_t>> reg(r.map.nv);
      for (int v = 0; v < r.map.nv; ++v)
        if (v != r.root) reg[v] = region_faces(r, in.t, v, i);
      for (int u = 0; u < r.map.nv; ++u)
        for (int v = u + 1; v < r.map.nv; ++v) {
          if (u == r.root || v == r.root) continue;
          bool uv = true, vu = true;
          for (int f = 0; f < r.map.nf; ++f) {
            uv = uv && (!reg[u][f] || reg[v][f]);
            vu = vu && (!reg[v][f] || reg[u][f]);
          }
          CHECK(uv != vu);
        }
    }
  }
}

TEST_CASE("drawing properties on duals of simple quadrangulations") {
  int count = 0, partly = 0, fully = 0;
  for (auto& in : instances(7)) {
    check_instance(in);
    auto fc = classify_faces(in.r, in.t, place_by_face_counting(in.r, in.t));
    partly += fc.count(FaceClass::partly_reducible);
    fully += fc.count(FaceClass::fully_reducible);
    ++count;
  }
  CHECK(count > 100);
  CHECK(partly > 0);
  CHECK(fully > 0);
  MESSAGE(count << " instances, " << partly << " partly and " << fully << " fully reducible faces");
}

TEST_CASE("grown instances") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    auto q = grow_quadrangulation(10 + 2 * k, rng);
    auto d = dual(q);
    auto r = as_regular(d, 4, d.root_vertex);
    check_instance({r, compute_even_regular_decomposition(r)});
  }
}

TEST_CASE("crossing oracle") {
  GridDrawing gd;
  gd.n = 5;
  gd.root = 4;
  gd.coords = {{0, 0}, {2, 0}, {1, 1}, {1, -1}, {-1, -1}};
  gd.edges = {{0, 0, 1, 0, 0, {}}, {1, 0, 2, 0, 0, {}}};
  CHECK(check_planarity(gd));  // shared vertex only
  gd.edges.push_back({2, 2, 3, 0, 0, {}});
  auto x = find_crossings(gd);
  REQUIRE(x.size() == 1);
  CHECK(x[0].e1 == 0);
  CHECK(x[0].e2 == 2);
  gd.edges = {{0, 0, 1, 0, 0, {}}, {1, 2, 3, 0, 0, {{1, 0}}}};
  CHECK_FALSE(check_planarity(gd));  // bend on another edge
  gd.edges = {{0, 0, 1, 0, 0, {}}, {1, 0, 1, 0, 0, {{1, 1}}}};
  CHECK(check_planarity(gd));  // parallel edges meeting at both ends

  auto in = octahedron_instance();
  auto p = place_by_face_counting(in.r, in.t);
  auto gd2 = orthogonal_drawing(in.r, in.t, p);
  // swapping two vertices breaks the drawing
  int u = in.r.root_nbr[0], v = in.r.root_nbr[2];
  std::swap(gd2.coords[u], gd2.coords[v]);
  CHECK_FALSE(check_planarity(gd2));
}

TEST_CASE("bad input is rejected") {
  auto in = octahedron_instance();
  auto bad = in.t;
  int a = in.r.map.twin[in.r.root_edges[0]];
  bad.colors[a] = color_bit(2);
  try {
    place_by_face_counting(in.r, bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "InvalidDecomposition");
  }
  auto p = place_by_face_counting(in.r, in.t);
  std::swap(p[in.r.root_nbr[0]], p[in.r.root_nbr[2]]);
  try {
    orthogonal_drawing(in.r, in.t, p);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "InternalInvariantViolation");
  }
}

TEST_CASE("json round trip and svg") {
  auto in = octahedron_instance();
  auto p = place_by_face_counting(in.r, in.t);
  auto gd = orthogonal_drawing(in.r, in.t, p);
  auto fc = classify_faces(in.r, in.t, p);
  for (auto& d : {gd, add_root(gd), apply_reduction(add_root(gd), balanced_reduction_choice(fc)),
                  straight_line_drawing(in.r, in.t, p)})
    CHECK(parse_drawing_json(emit_drawing_json(d)) == d);
  CHECK_THROWS_AS(parse_drawing_json("{\"n\": 3}"), Error);

  auto svg = emit_svg(add_root(gd));
  CHECK(svg == emit_svg(add_root(gd)));
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);
  std::ifstream golden(SK_GOLDEN_DIR "/octahedron_orthogonal.svg");
  REQUIRE(golden.good());
  std::stringstream ss;
  ss << golden.rdbuf();
  CHECK(ss.str() == svg);
}
