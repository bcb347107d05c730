#include "sk/drawing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "sk/duality.hpp"
#include "sk/even.hpp"

namespace sk {

namespace {

std::string str(int x) { return std::to_string(x); }
std::string str(Point p) { return "(" + str(p.x) + "," + str(p.y) + ")"; }

int col(const ColorDecomposition& t, int a) { return t.colors[a] ? std::countr_zero(t.colors[a]) + 1 : 0; }

void require_valid(const RegularView& r, const ColorDecomposition& t, const char* stage) {
  if (r.d != 4) throw Error(stage, "NotFourRegular", "degree " + str(r.d));
  auto v = validate_regular_decomposition(r, t);
  if (!v.empty()) throw Error(stage, "InvalidDecomposition", "axiom (" + v[0].axiom + "): " + v[0].detail);
  if (!is_even_regular(r, t)) throw Error(stage, "InvalidDecomposition", "decomposition is not even");
}

void invariant(bool ok, const char* stage, const std::string& detail) {
  if (!ok) throw Error(stage, "InternalInvariantViolation", detail);
}

// Unit vector of the ray of color c.
Point ray(int c) {
  static const std::array<Point, 5> dir{{{0, 0}, {0, -1}, {-1, 0}, {0, 1}, {1, 0}}};
  return dir[c];
}

// Strictly positive multiple of ray(c)?
bool along(Point from, Point to, int c) {
  Point d = ray(c);
  int dx = to.x - from.x, dy = to.y - from.y;
  if (d.x == 0) return dx == 0 && dy * d.y > 0;
  return dy == 0 && dx * d.x > 0;
}

// out[c][v]: the dart leaving v with color c.
std::array<std::vector<int>, 5> out_darts(const RegularView& r, const ColorDecomposition& t) {
  std::array<std::vector<int>, 5> out;
  for (auto& o : out) o.assign(r.map.nv, -1);
  for (int a = 0; a < r.map.nd(); ++a)
    if (r.map.origin[a] != r.root) out[col(t, a)][r.map.origin[a]] = a;
  return out;
}

std::vector<uint8_t> region(const RegularView& r, const std::array<std::vector<int>, 5>& out, int v, int i) {
  const auto& m = r.map;
  int j = wrap_color(i + 2, 4);
  std::vector<uint8_t> cut(m.ne(), 0), on_i(m.nv, 0);
  for (int w = v; w != r.root; w = m.head(out[i][w])) {
    on_i[w] = 1;
    cut[m.edge[out[i][w]]] = 1;
  }
  for (int w = v; w != r.root; w = m.head(out[j][w])) {
    if (w != v && on_i[w])
      throw Error("place_by_face_counting", "InvalidDecomposition",
                  "paths of colors " + str(i) + " and " + str(j) + " from " + str(v) + " meet at " + str(w));
    cut[m.edge[out[j][w]]] = 1;
  }
  std::vector<uint8_t> in(m.nf, 0);
  int start = m.face[r.root_edges[wrap_color(i + 1, 4) - 1]];
  std::deque<int> q{start};
  in[start] = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int x : m.face_darts(f)) {
      int h = m.face[m.twin[x]];
      if (cut[m.edge[x]] || in[h]) continue;
      in[h] = 1;
      q.push_back(h);
    }
  }
  return in;
}

int count_nonroot(const RegularView& r, const std::vector<uint8_t>& faces) {
  int k = 0;
  for (int f = 0; f < r.map.nf; ++f) k += faces[f] && !r.face_index[f];
  return k;
}

}  // namespace

std::vector<uint8_t> region_faces(const RegularView& r, const ColorDecomposition& t, int v, int i) {
  require_valid(r, t, "region_faces");
  if (v == r.root || v < 0 || v >= r.map.nv) throw Error("region_faces", "InvalidVertex", "vertex " + str(v));
  return region(r, out_darts(r, t), v, wrap_color(i, 4));
}

std::vector<Point> place_by_face_counting(const RegularView& r, const ColorDecomposition& t) {
  require_valid(r, t, "place_by_face_counting");
  auto out = out_darts(r, t);
  std::vector<Point> p(r.map.nv, {-1, -1});
  for (int v = 0; v < r.map.nv; ++v)
    if (v != r.root) p[v] = {count_nonroot(r, region(r, out, v, 1)), count_nonroot(r, region(r, out, v, 4))};
  return p;
}

std::vector<LineStep> equatorial_line(const RegularView& r, const ColorDecomposition& t, int i) {
  const char* stage = "equatorial_line";
  require_valid(r, t, stage);
  const auto& m = r.map;
  i = wrap_color(i, 4);
  const uint64_t ci = color_bit(i), cj = color_bit(wrap_color(i + 2, 4));
  // side of an edge: which of the colors i, i+2 it carries
  auto side = [&](int e) {
    uint64_t both = t.colors[m.edart[e]] | t.colors[m.twin[m.edart[e]]];
    return both & ci ? 1 : both & cj ? 2 : 0;
  };
  std::vector<std::vector<int>> at_vertex(m.nv), at_face(m.nf);
  for (int c = 0; c < m.nd(); ++c) {
    int v = m.origin[c], f = m.corner_face(c);
    if (v == r.root || r.face_index[f]) continue;
    int s1 = side(m.edge[c]), s2 = side(m.edge[m.next_cw[c]]);
    if (s1 && s2 && s1 != s2) {
      at_vertex[v].push_back(c);
      at_face[f].push_back(c);
    }
  }
  auto fail = [&](const std::string& why) { throw Error(stage, "InvalidDecomposition", why); };
  int start = r.root_nbr[wrap_color(i + 1, 4) - 1], end = r.root_nbr[wrap_color(i + 3, 4) - 1];
  if (at_vertex[start].size() != 1) fail("start vertex has " + str(at_vertex[start].size()) + " bicolored corners");
  std::vector<LineStep> line{{false, start}};
  int c = at_vertex[start][0];
  const int limit = m.nv + m.nf;
  while (true) {
    int f = m.corner_face(c);
    if (at_face[f].size() != 2) fail("face " + str(f) + " has " + str(at_face[f].size()) + " bicolored corners");
    c = at_face[f][0] == c ? at_face[f][1] : at_face[f][0];
    int w = m.origin[c];
    line.push_back({true, f});
    line.push_back({false, w});
    if (static_cast<int>(line.size()) > limit) fail("line does not terminate");
    if (at_vertex[w].size() == 1) {
      if (w != end) fail("line ends at " + str(w) + " instead of " + str(end));
      break;
    }
    if (at_vertex[w].size() != 2) fail("vertex " + str(w) + " has " + str(at_vertex[w].size()) + " bicolored corners");
    c = at_vertex[w][0] == c ? at_vertex[w][1] : at_vertex[w][0];
  }
  std::vector<uint8_t> seen_v(m.nv, 0), seen_f(m.nf, 0);
  for (auto& s : line) {
    auto& seen = s.is_face ? seen_f : seen_v;
    if (seen[s.id]++) fail(std::string(s.is_face ? "face " : "vertex ") + str(s.id) + " visited twice");
  }
  if (static_cast<int>(line.size()) != (m.nv - 1) + (m.nf - 4)) fail("line misses vertices or faces");
  return line;
}

std::vector<Point> place_by_equatorial_lines(const RegularView& r, const ColorDecomposition& t) {
  std::vector<Point> p(r.map.nv, {-1, -1});
  int rank = 0;
  for (auto& s : equatorial_line(r, t, 1))
    if (!s.is_face) p[s.id].x = rank++;
  rank = 0;
  for (auto& s : equatorial_line(r, t, 4))
    if (!s.is_face) p[s.id].y = rank++;
  return p;
}

GridDrawing orthogonal_drawing(const RegularView& r, const ColorDecomposition& t, const std::vector<Point>& coords) {
  const char* stage = "orthogonal_drawing";
  require_valid(r, t, stage);
  const auto& m = r.map;
  if (static_cast<int>(coords.size()) != m.nv) throw Error(stage, "InvalidCoordinates", "one point per vertex expected");
  GridDrawing gd{m.nv, r.root, r.root_nbr, coords, {}, std::nullopt, std::nullopt};
  gd.coords[r.root] = {-1, -1};
  for (int e = 0; e < m.ne(); ++e) {
    int a = m.edart[e];
    if (r.root_edge_index[a]) continue;
    int u = m.origin[a], v = m.head(a), cu = col(t, a), cv = col(t, m.twin[a]);
    invariant((cu - cv) % 2 != 0, stage, "edge " + str(e) + " has colors of equal parity");
    Point pu = coords[u], pv = coords[v];
    Point bend = cu % 2 ? Point{pu.x, pv.y} : Point{pv.x, pu.y};
    invariant(along(pu, bend, cu) && along(pv, bend, cv), stage,
              "edge " + str(e) + ": bend " + str(bend) + " is not on the rays of its arcs");
    gd.edges.push_back({e, u, v, cu, cv, {bend}});
  }
  invariant(rotation_preserved(r, gd), stage, "rotation system not preserved");
  auto x = find_crossings(gd);
  invariant(x.empty(), stage, x.empty() ? "" : "edges " + str(x[0].e1) + " and " + str(x[0].e2) + " cross at " + str(x[0].at));
  return gd;
}

GridDrawing straight_line_drawing(const RegularView& r, const ColorDecomposition& t, const std::vector<Point>& coords) {
  const char* stage = "straight_line_drawing";
  require_valid(r, t, stage);
  const auto& m = r.map;
  if (static_cast<int>(coords.size()) != m.nv) throw Error(stage, "InvalidCoordinates", "one point per vertex expected");
  GridDrawing gd{m.nv, r.root, r.root_nbr, coords, {}, std::nullopt, std::nullopt};
  gd.coords[r.root] = {-1, -1};
  std::vector<std::pair<int, int>> seen;
  for (int e = 0; e < m.ne(); ++e) {
    int a = m.edart[e];
    if (r.root_edge_index[a]) continue;
    int u = m.origin[a], v = m.head(a);
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    // a double edge bounds a face of degree 2; keep one copy
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    gd.edges.push_back({e, u, v, col(t, a), col(t, m.twin[a]), {}});
  }
  auto x = find_crossings(gd);
  invariant(x.empty(), stage, x.empty() ? "" : "edges " + str(x[0].e1) + " and " + str(x[0].e2) + " cross at " + str(x[0].at));
  return gd;
}

GridDrawing add_root(const GridDrawing& gd) {
  if (gd.root_routing) throw Error("add_root", "AlreadyRooted", "drawing already has a root");
  if (gd.root_nbr.size() != 4) throw Error("add_root", "NotFourRegular", "four root neighbours expected");
  int hx = 0, hy = 0;
  for (int v = 0; v < gd.n; ++v)
    if (v != gd.root) {
      hx = std::max(hx, gd.coords[v].x + 1);
      hy = std::max(hy, gd.coords[v].y + 1);
    }
  GridDrawing out = gd;
  const Point s{-1, -1};
  auto p = [&](int i) { return gd.coords[gd.root_nbr[i - 1]]; };
  RootRouting rr{s, {}};
  rr.routes.push_back({p(1), {p(1).x, -1}, s});
  rr.routes.push_back({p(2), {-1, p(2).y}, s});
  rr.routes.push_back({p(3), {p(3).x, hy}, {-2, hy}, {-2, -1}, s});
  rr.routes.push_back({p(4), {hx, p(4).y}, {hx, -2}, {-1, -2}, s});
  out.root_routing = rr;
  out.coords[gd.root] = s;
  return out;
}

bool rotation_preserved(const RegularView& r, const GridDrawing& gd) {
  const auto& m = r.map;
  std::vector<int> by_edge(m.ne(), -1);
  for (int k = 0; k < static_cast<int>(gd.edges.size()); ++k) by_edge[gd.edges[k].id] = k;
  // first point after the origin of dart a, if drawn
  auto first = [&](int a, Point& q) {
    int e = m.edge[a];
    int i = r.root_edge_index[a];
    if (i) {
      if (!gd.root_routing || m.origin[a] == r.root) return false;
      q = gd.root_routing->routes[i - 1][1];
      return true;
    }
    if (by_edge[e] < 0) return false;
    const auto& de = gd.edges[by_edge[e]];
    bool fwd = a == m.edart[e];
    if (de.bends.empty()) q = gd.coords[fwd ? de.v : de.u];
    else q = fwd ? de.bends.front() : de.bends.back();
    return true;
  };
  auto half = [](Point d) { return d.y < 0 || (d.y == 0 && d.x < 0); };
  auto ccw_less = [&](Point a, Point b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return int64_t{a.x} * b.y - int64_t{a.y} * b.x > 0;
  };
  for (int v = 0; v < m.nv; ++v) {
    if (v == r.root) continue;
    std::vector<std::pair<Point, int>> dirs;
    std::vector<int> order;
    for (int a : m.darts_at(v)) {
      Point q;
      if (!first(a, q)) continue;
      Point d{q.x - gd.coords[v].x, q.y - gd.coords[v].y};
      if (d.x == 0 && d.y == 0) return false;
      dirs.push_back({d, a});
      order.push_back(a);
    }
    // clockwise = descending counterclockwise angle
    std::sort(dirs.begin(), dirs.end(), [&](auto& p, auto& q) { return ccw_less(q.first, p.first); });
    for (size_t k = 0; k + 1 < dirs.size(); ++k)
      if (!ccw_less(dirs[k + 1].first, dirs[k].first)) return false;  // two darts in one direction
    if (dirs.empty()) continue;
    auto it = std::find(order.begin(), order.end(), dirs[0].second);
    std::rotate(order.begin(), it, order.end());
    for (size_t k = 0; k < dirs.size(); ++k)
      if (order[k] != dirs[k].second) return false;
  }
  return true;
}

const char* face_class_name(FaceClass c) {
  switch (c) {
    case FaceClass::non_reducible: return "non_reducible";
    case FaceClass::partly_reducible: return "partly_reducible";
    case FaceClass::fully_reducible: return "fully_reducible";
  }
  return "";
}

int FaceClassification::count(FaceClass c) const {
  return static_cast<int>(std::count_if(faces.begin(), faces.end(), [&](auto& f) { return f.cls == c; }));
}

FaceClassification classify_faces(const RegularView& r, const ColorDecomposition& t, const std::vector<Point>& coords) {
  const char* stage = "classify_faces";
  require_valid(r, t, stage);
  const auto& m = r.map;
  auto black = face_colors(r);
  FaceClassification out;
  for (int f = 0; f < m.nf; ++f) {
    if (r.face_index[f]) continue;
    // clockwise around f: twins of the face darts, in reverse
    auto fd = m.face_darts(f);
    std::vector<int> cw;
    for (auto it = fd.rbegin(); it != fd.rend(); ++it) cw.push_back(m.twin[*it]);
    FaceInfo fi;
    fi.face = f;
    fi.black = black[f];
    // (clockwise color, counterclockwise color) per stage: special a, run, special b, run
    static const int pat[2][4][2] = {{{3, 2}, {1, 2}, {1, 4}, {3, 4}}, {{4, 3}, {2, 3}, {2, 1}, {4, 1}}};
    auto stage_of = [&](int y) {
      for (int k = 0; k < 4; ++k)
        if (col(t, y) == pat[fi.black][k][0] && col(t, m.twin[y]) == pat[fi.black][k][1]) return k;
      return -1;
    };
    int n = static_cast<int>(cw.size()), start = -1;
    for (int k = 0; k < n; ++k)
      if (stage_of(cw[k]) == 0) start = k;
    invariant(start >= 0, stage, "face " + str(f) + " has no special edge a");
    int prev = 0, ya = cw[start], yb = -1;
    for (int k = 1; k < n; ++k) {
      int y = cw[(start + k) % n], st = stage_of(y);
      // a, then runs of stage 1, b, runs of stage 3
      bool ok = (st == prev && st % 2 == 1) || st == prev + 1 || (prev == 0 && st == 2);
      invariant(st > 0 && ok, stage, "face " + str(f) + " breaks the bend pattern");
      if (st == 2) yb = y;
      prev = st;
    }
    invariant(yb >= 0, stage, "face " + str(f) + " has no special edge b");
    fi.a = m.origin[ya], fi.a2 = m.head(ya), fi.b = m.origin[yb], fi.b2 = m.head(yb);
    fi.special_a = m.edge[ya], fi.special_b = m.edge[yb];
    if (fi.black) fi.xm = fi.a, fi.xp = fi.b, fi.ym = fi.a2, fi.yp = fi.b2;
    else fi.xm = fi.b2, fi.xp = fi.a2, fi.ym = fi.a, fi.yp = fi.b;
    invariant(coords[fi.xm].x + 1 == coords[fi.xp].x && coords[fi.ym].y + 1 == coords[fi.yp].y, stage,
              "face " + str(f) + " markers are not consecutive");
    fi.x = coords[fi.xm].x;
    fi.y = coords[fi.ym].y;
    std::vector<int> mk{fi.xm, fi.xp, fi.ym, fi.yp}, around;
    for (int y : cw) around.push_back(m.origin[y]);
    std::sort(mk.begin(), mk.end());
    std::sort(around.begin(), around.end());
    around.erase(std::unique(around.begin(), around.end()), around.end());
    if (std::adjacent_find(mk.begin(), mk.end()) != mk.end()) fi.cls = FaceClass::non_reducible;
    else fi.cls = around == mk ? FaceClass::partly_reducible : FaceClass::fully_reducible;
    out.faces.push_back(fi);
  }
  return out;
}

std::vector<int> dual_degree_classes(const RegularView& r, const ColorDecomposition& t) {
  require_valid(r, t, "dual_degree_classes");
  auto g = dual_quadrangulation(r);
  auto red = lambda(g, chi_inverse(g, r, t));
  const auto& q = g.map;
  std::vector<int> d1(q.nv, 0), d2(q.nv, 0);
  auto add = [&](std::vector<int>& d, int a) {
    ++d[q.origin[a]];
    ++d[q.head(a)];
  };
  for (int e = 0; e < q.ne(); ++e) {
    int a = q.edart[e];
    uint64_t both = red.colors[a] | red.colors[q.twin[a]];
    if (both & color_bit(1)) add(d1, a);
    if (both & color_bit(2)) add(d2, a);
  }
  // T_1' adds {u1,u2}, {u4,u1}; T_2' adds {u2,u3}, {u3,u4}
  add(d1, g.ext_darts[0]);
  add(d1, g.ext_darts[3]);
  add(d2, g.ext_darts[1]);
  add(d2, g.ext_darts[2]);
  std::vector<int> cls(r.map.nf, -1);
  for (int x = 0; x < r.map.nd(); ++x) {
    int f = r.map.face[x];
    if (r.face_index[f]) continue;
    int v = q.head(x);
    FaceClass c = d1[v] == 2 && d2[v] == 2  ? FaceClass::partly_reducible
                  : d1[v] >= 2 && d2[v] >= 2 ? FaceClass::fully_reducible
                                             : FaceClass::non_reducible;
    cls[f] = static_cast<int>(c);
  }
  return cls;
}

namespace {

ReductionChoice choice_from(const FaceClassification& fc, const std::vector<uint8_t>& partly_to_x) {
  ReductionChoice rc;
  std::vector<const FaceInfo*> partly;
  for (auto& f : fc.faces) {
    if (f.cls == FaceClass::fully_reducible) {
      rc.X.push_back(f.x);
      rc.Y.push_back(f.y);
    } else if (f.cls == FaceClass::partly_reducible) {
      partly.push_back(&f);
    }
  }
  std::sort(partly.begin(), partly.end(), [](auto* a, auto* b) { return a->x < b->x; });
  for (size_t k = 0; k < partly.size(); ++k) {
    if (partly_to_x[k]) rc.X.push_back(partly[k]->x);
    else rc.Y.push_back(partly[k]->y);
  }
  std::sort(rc.X.begin(), rc.X.end());
  std::sort(rc.Y.begin(), rc.Y.end());
  return rc;
}

}  // namespace

ReductionChoice balanced_reduction_choice(const FaceClassification& fc) {
  std::vector<uint8_t> to_x(fc.count(FaceClass::partly_reducible));
  for (size_t k = 0; k < to_x.size(); ++k) to_x[k] = k % 2 == 0;
  return choice_from(fc, to_x);
}

ReductionChoice random_reduction_choice(const FaceClassification& fc, std::mt19937_64& rng) {
  std::vector<uint8_t> to_x(fc.count(FaceClass::partly_reducible));
  for (auto& b : to_x) b = rng() & 1;
  return choice_from(fc, to_x);
}

bool is_reduction_choice(const FaceClassification& fc, const ReductionChoice& rc) {
  std::vector<int> X, Y;
  for (auto& f : fc.faces) {
    bool inx = std::binary_search(rc.X.begin(), rc.X.end(), f.x);
    bool iny = std::binary_search(rc.Y.begin(), rc.Y.end(), f.y);
    if (f.cls == FaceClass::fully_reducible && !(inx && iny)) return false;
    if (f.cls == FaceClass::partly_reducible && inx == iny) return false;
    if (f.cls != FaceClass::non_reducible) {
      if (inx) X.push_back(f.x);
      if (iny) Y.push_back(f.y);
    }
  }
  std::sort(X.begin(), X.end());
  std::sort(Y.begin(), Y.end());
  return X == rc.X && Y == rc.Y;
}

GridDrawing apply_reduction(const GridDrawing& gd, const ReductionChoice& rc) {
  if (gd.reduction) throw Error("apply_reduction", "AlreadyReduced", "drawing already reduced");
  auto shift = [](const std::vector<int>& del, int z) {
    return z - static_cast<int>(std::lower_bound(del.begin(), del.end(), z) - del.begin());
  };
  auto move = [&](Point& p) { p = {shift(rc.X, p.x), shift(rc.Y, p.y)}; };
  GridDrawing out = gd;
  for (auto& p : out.coords) move(p);
  for (auto& e : out.edges)
    for (auto& p : e.bends) move(p);
  if (out.root_routing) {
    move(out.root_routing->pos);
    for (auto& route : out.root_routing->routes)
      for (auto& p : route) move(p);
  }
  out.reduction = rc;
  return out;
}

namespace {

struct Seg {
  Point p, q;
  int tp, tq;  // vertex id, or a negative tag shared by the two sides of a bend
  int owner;
};

int64_t cross(Point o, Point a, Point b) {
  return int64_t{a.x - o.x} * (b.y - o.y) - int64_t{a.y - o.y} * (b.x - o.x);
}
int sgn(int64_t v) { return (v > 0) - (v < 0); }
bool on_seg(const Seg& s, Point p) {
  return cross(s.p, s.q, p) == 0 && std::min(s.p.x, s.q.x) <= p.x && p.x <= std::max(s.p.x, s.q.x) &&
         std::min(s.p.y, s.q.y) <= p.y && p.y <= std::max(s.p.y, s.q.y);
}

// Segments may only meet at a common endpoint with a common tag.
bool touch_ok(const Seg& s, const Seg& t, Point& at) {
  int o1 = sgn(cross(s.p, s.q, t.p)), o2 = sgn(cross(s.p, s.q, t.q));
  int o3 = sgn(cross(t.p, t.q, s.p)), o4 = sgn(cross(t.p, t.q, s.q));
  bool meet = (o1 * o2 < 0 && o3 * o4 < 0) || on_seg(s, t.p) || on_seg(s, t.q) || on_seg(t, s.p) || on_seg(t, s.q);
  if (!meet) return true;
  if (o1 == 0 && o2 == 0) {
    // collinear: the overlap must be a single point
    bool use_x = s.p.x != s.q.x || t.p.x != t.q.x;
    auto key = [&](Point p) { return use_x ? p.x : p.y; };
    int lo = std::max(std::min(key(s.p), key(s.q)), std::min(key(t.p), key(t.q)));
    int hi = std::min(std::max(key(s.p), key(s.q)), std::max(key(t.p), key(t.q)));
    if (lo < hi) {
      at = on_seg(s, t.p) ? t.p : t.q;
      return false;
    }
  }
  for (auto [ps, ts] : {std::pair{s.p, s.tp}, std::pair{s.q, s.tq}})
    for (auto [pt, tt] : {std::pair{t.p, t.tp}, std::pair{t.q, t.tq}})
      if (ps == pt) {
        // any other contact point would lie on a collinear overlap, handled above
        at = ps;
        return ts == tt;
      }
  at = on_seg(s, t.p) ? t.p : on_seg(s, t.q) ? t.q : on_seg(t, s.p) ? s.p : on_seg(t, s.q) ? s.q : s.p;
  return false;
}

std::vector<Seg> segments(const GridDrawing& gd) {
  std::vector<Seg> segs;
  int tag = -2;
  auto add = [&](const std::vector<Point>& pts, int first, int last, int owner) {
    int prev = first;
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
      int next = k + 2 == pts.size() ? last : tag--;
      segs.push_back({pts[k], pts[k + 1], prev, next, owner});
      prev = next;
    }
  };
  for (auto& e : gd.edges) {
    std::vector<Point> pts{gd.coords[e.u]};
    pts.insert(pts.end(), e.bends.begin(), e.bends.end());
    pts.push_back(gd.coords[e.v]);
    add(pts, e.u, e.v, e.id);
  }
  if (gd.root_routing)
    for (int i = 0; i < static_cast<int>(gd.root_routing->routes.size()); ++i)
      add(gd.root_routing->routes[i], gd.root_nbr[i], gd.root, -1 - i);
  return segs;
}

}  // namespace

std::vector<Crossing> find_crossings(const GridDrawing& gd) {
  auto segs = segments(gd);
  std::vector<Crossing> out;
  for (auto& s : segs)
    if (s.p == s.q) out.push_back({s.owner, s.owner, s.p});
  for (size_t i = 0; i < segs.size(); ++i) {
    const Seg& s = segs[i];
    int sx0 = std::min(s.p.x, s.q.x), sx1 = std::max(s.p.x, s.q.x);
    int sy0 = std::min(s.p.y, s.q.y), sy1 = std::max(s.p.y, s.q.y);
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const Seg& t = segs[j];
      if (std::max(t.p.x, t.q.x) < sx0 || std::min(t.p.x, t.q.x) > sx1 || std::max(t.p.y, t.q.y) < sy0 ||
          std::min(t.p.y, t.q.y) > sy1)
        continue;
      Point at;
      if (!touch_ok(s, t, at)) out.push_back({s.owner, t.owner, at});
    }
  }
  return out;
}

bool check_planarity(const GridDrawing& gd) { return find_crossings(gd).empty(); }

std::vector<int> nonempty_rectangles(const GridDrawing& gd) {
  std::vector<int> out;
  for (auto& e : gd.edges) {
    Point a = gd.coords[e.u], b = gd.coords[e.v];
    for (int w = 0; w < gd.n; ++w) {
      if (w == e.u || w == e.v || w == gd.root) continue;
      Point p = gd.coords[w];
      if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
          p.y <= std::max(a.y, b.y)) {
        out.push_back(e.id);
        break;
      }
    }
  }
  return out;
}

std::string emit_svg(const GridDrawing& gd, const SvgStyle& style) {
  static const char* palette[] = {"#444444", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e"};
  std::vector<Point> all;
  for (int v = 0; v < gd.n; ++v)
    if (v != gd.root || gd.root_routing) all.push_back(gd.coords[v]);
  for (auto& e : gd.edges) all.insert(all.end(), e.bends.begin(), e.bends.end());
  if (gd.root_routing)
    for (auto& r : gd.root_routing->routes) all.insert(all.end(), r.begin(), r.end());
  if (all.empty()) all.push_back({0, 0});
  int x0 = all[0].x, x1 = all[0].x, y0 = all[0].y, y1 = all[0].y;
  for (auto p : all) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  const int k = style.scale;
  auto X = [&](int x) { return (x - x0 + 1) * k; };
  auto Y = [&](int y) { return (y1 - y + 1) * k; };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (x1 - x0 + 2) * k << "\" height=\"" << (y1 - y0 + 2) * k
    << "\">\n";
  if (style.grid) {
    o << "<g stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
    for (int x = x0; x <= x1; ++x)
      o << "<line x1=\"" << X(x) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(y1) << "\"/>\n";
    for (int y = y0; y <= y1; ++y)
      o << "<line x1=\"" << X(x0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(x1) << "\" y2=\"" << Y(y) << "\"/>\n";
    o << "</g>\n";
  }
  auto path = [&](const std::string& id, const std::vector<Point>& pts, const char* stroke) {
    o << "<path id=\"" << id << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" d=\"";
    for (size_t i = 0; i < pts.size(); ++i) o << (i ? " L " : "M ") << X(pts[i].x) << " " << Y(pts[i].y);
    o << "\"/>\n";
  };
  for (auto& e : gd.edges) {
    std::vector<Point> pts{gd.coords[e.u]};
    pts.insert(pts.end(), e.bends.begin(), e.bends.end());
    pts.push_back(gd.coords[e.v]);
    path("e" + str(e.id), pts, palette[std::clamp(e.cu, 0, 4)]);
  }
  if (gd.root_routing)
    for (size_t i = 0; i < gd.root_routing->routes.size(); ++i)
      path("r" + str(static_cast<int>(i) + 1), gd.root_routing->routes[i], palette[i + 1]);
  for (int v = 0; v < gd.n; ++v) {
    if (v == gd.root && !gd.root_routing) continue;
    o << "<circle id=\"v" << v << "\" cx=\"" << X(gd.coords[v].x) << "\" cy=\"" << Y(gd.coords[v].y) << "\" r=\""
      << std::max(2, k / 8) << "\" fill=\"" << (v == gd.root ? "#888888" : "#000000") << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

namespace {

using ojson = nlohmann::ordered_json;

ojson pt(Point p) { return ojson::array({p.x, p.y}); }
Point pt(const ojson& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

}  // namespace

std::string emit_drawing_json(const GridDrawing& gd) {
  ojson j;
  j["n"] = gd.n;
  j["root_vertex"] = gd.root;
  j["root_nbr"] = gd.root_nbr;
  ojson coords = ojson::object(), bends = ojson::object(), edges = ojson::object();
  for (int v = 0; v < gd.n; ++v)
    if (v != gd.root) coords[str(v)] = pt(gd.coords[v]);
  for (auto& e : gd.edges) {
    edges[str(e.id)] = {e.u, e.v, e.cu, e.cv};
    if (e.bends.size() > 1) throw Error("emit_drawing_json", "UnsupportedDrawing", "edge with several bends");
    if (!e.bends.empty()) bends[str(e.id)] = pt(e.bends[0]);
  }
  j["coords"] = coords;
  j["bends"] = bends;
  j["edges"] = edges;
  if (gd.root_routing) {
    ojson routes = ojson::array();
    for (auto& r : gd.root_routing->routes) {
      ojson route = ojson::array();
      for (auto p : r) route.push_back(pt(p));
      routes.push_back(route);
    }
    j["root"] = {{"pos", pt(gd.root_routing->pos)}, {"routes", routes}};
  } else {
    j["root"] = nullptr;
  }
  if (gd.reduction) j["reduction"] = {{"X", gd.reduction->X}, {"Y", gd.reduction->Y}};
  else j["reduction"] = nullptr;
  return j.dump(1) + "\n";
}

GridDrawing parse_drawing_json(const std::string& text) {
  GridDrawing gd;
  try {
    auto j = ojson::parse(text);
    gd.n = j.at("n").get<int>();
    gd.root = j.at("root_vertex").get<int>();
    gd.root_nbr = j.at("root_nbr").get<std::vector<int>>();
    if (gd.n < 1 || gd.root < 0 || gd.root >= gd.n) throw Error("parse_drawing_json", "InvalidDrawing", "bad vertex count or root");
    gd.coords.assign(gd.n, {-1, -1});
    for (auto& [k, v] : j.at("coords").items()) gd.coords.at(std::stoi(k)) = pt(v);
    for (auto& [k, v] : j.at("edges").items()) {
      DrawnEdge e{std::stoi(k), v.at(0).get<int>(), v.at(1).get<int>(), v.at(2).get<int>(), v.at(3).get<int>(), {}};
      if (e.u < 0 || e.u >= gd.n || e.v < 0 || e.v >= gd.n)
        throw Error("parse_drawing_json", "InvalidDrawing", "edge " + k + " has a bad endpoint");
      if (j.at("bends").contains(k)) e.bends.push_back(pt(j["bends"][k]));
      gd.edges.push_back(e);
    }
    std::sort(gd.edges.begin(), gd.edges.end(), [](auto& a, auto& b) { return a.id < b.id; });
    if (!j.at("root").is_null()) {
      RootRouting rr;
      rr.pos = pt(j["root"].at("pos"));
      for (auto& route : j["root"].at("routes")) {
        rr.routes.emplace_back();
        for (auto& p : route) rr.routes.back().push_back(pt(p));
      }
      gd.root_routing = rr;
    }
    if (!j.at("reduction").is_null())
      gd.reduction = ReductionChoice{j["reduction"].at("X").get<std::vector<int>>(), j["reduction"].at("Y").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse_drawing_json", "InvalidDrawing", e.what());
  } catch (const std::out_of_range& e) {
    throw Error("parse_drawing_json", "InvalidDrawing", e.what());
  } catch (const std::invalid_argument& e) {
    throw Error("parse_drawing_json", "InvalidDrawing", e.what());
  }
  return gd;
}

}  // namespace sk
