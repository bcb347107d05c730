#include "sk/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace sk {

namespace {

using P3 = std::array<double, 3>;

PlaneMap solid(const std::vector<P3>& pts, double edge_len) {
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      if (std::abs(std::sqrt(s) - edge_len) < 1e-6) edges.push_back({int(i), int(j)});
    }
  return from_convex_polyhedron(pts, edges);
}

// cyclic permutations of (0, a, b) with all sign choices
void add_cyclic(std::vector<P3>& pts, double a, double b) {
  for (double sa : {-1.0, 1.0})
    for (double sb : {-1.0, 1.0}) {
      if ((a == 0 && sa < 0) || (b == 0 && sb < 0)) continue;
      pts.push_back({0, sa * a, sb * b});
      pts.push_back({sa * a, sb * b, 0});
      pts.push_back({sb * b, 0, sa * a});
    }
}

const double kPhi = (1 + std::sqrt(5.0)) / 2;

}  // namespace

PlaneMap tetrahedron() { return solid({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, std::sqrt(8.0)); }

PlaneMap cube() {
  std::vector<P3> pts;
  for (int m = 0; m < 8; ++m) pts.push_back({m & 1 ? 1.0 : -1.0, m & 2 ? 1.0 : -1.0, m & 4 ? 1.0 : -1.0});
  return solid(pts, 2.0);
}

PlaneMap octahedron() {
  return solid({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, std::sqrt(2.0));
}

PlaneMap dodecahedron() {
  std::vector<P3> pts;
  for (int m = 0; m < 8; ++m) pts.push_back({m & 1 ? 1.0 : -1.0, m & 2 ? 1.0 : -1.0, m & 4 ? 1.0 : -1.0});
  add_cyclic(pts, 1 / kPhi, kPhi);
  return solid(pts, 2 / kPhi);
}

PlaneMap icosahedron() {
  std::vector<P3> pts;
  add_cyclic(pts, 1, kPhi);
  return solid(pts, 2.0);
}

PlaneMap cycle_map(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = {(i + n - 1) % n, (i + 1) % n};
  return from_adjacency(adj, 0, 1);
}

// ---------------------------------------------------------------------------
// Root-edge decomposition of rooted maps with a boundary of length p and f inner
// faces of degree d. Either the root edge is a bridge joining two smaller maps, or
// it closes an inner face against the boundary of a map with one face less.

namespace {

struct Raw {
  std::vector<int> twin, next, origin;
  int root = -1;  // -1: single vertex
  int nv = 1;
};

int prev_of(const Raw& m, int a) {
  int p = a;
  while (m.next[p] != a) p = m.next[p];
  return p;
}

void insert_after(Raw& m, int p, int x) {
  m.next[x] = m.next[p];
  m.next[p] = x;
}

Raw join_bridge(const Raw& m1, const Raw& m2) {
  Raw r;
  const int nd1 = static_cast<int>(m1.twin.size()), nd2 = static_cast<int>(m2.twin.size());
  const int nd = nd1 + nd2 + 2;
  r.twin.resize(nd);
  r.next.resize(nd);
  r.origin.resize(nd);
  for (int a = 0; a < nd1; ++a) {
    r.twin[a] = m1.twin[a];
    r.next[a] = m1.next[a];
    r.origin[a] = m1.origin[a];
  }
  for (int a = 0; a < nd2; ++a) {
    r.twin[nd1 + a] = m2.twin[a] + nd1;
    r.next[nd1 + a] = m2.next[a] + nd1;
    r.origin[nd1 + a] = m2.origin[a] + m1.nv;
  }
  int x = nd - 2, y = nd - 1;
  r.twin[x] = y;
  r.twin[y] = x;
  r.origin[x] = m1.root >= 0 ? m1.origin[m1.root] : 0;
  r.origin[y] = (m2.root >= 0 ? m2.origin[m2.root] : 0) + m1.nv;
  if (m2.root >= 0) insert_after(r, prev_of(r, m2.root + nd1), y);
  else r.next[y] = y;
  if (m1.root >= 0) insert_after(r, prev_of(r, m1.root), x);
  else r.next[x] = x;
  r.nv = m1.nv + m2.nv;
  r.root = x;
  return r;
}

bool adjacent(const Raw& m, int a_at_u, int w) {
  int a = a_at_u;
  do {
    if (m.origin[m.twin[a]] == w) return true;
    a = m.next[a];
  } while (a != a_at_u);
  return false;
}

// Closes the d-face b_0..b_{d-2} with a new root edge. Returns false on a loop or,
// when simple, on a multiple edge.
bool close_face(const Raw& m, int d, bool simple, Raw& r) {
  if (m.root < 0) return false;
  std::vector<int> b{m.root};
  while (true) {
    int n = m.next[m.twin[b.back()]];
    if (n == m.root) break;
    b.push_back(n);
  }
  const int pp = static_cast<int>(b.size());
  if (pp < d) return false;
  int u = m.origin[b[0]], w = m.origin[b[d - 1]];
  if (u == w) return false;
  if (simple && adjacent(m, b[0], w)) return false;
  r = m;
  const int nd = static_cast<int>(m.twin.size()) + 2;
  r.twin.resize(nd);
  r.next.resize(nd);
  r.origin.resize(nd);
  int x = nd - 2, y = nd - 1;
  r.twin[x] = y;
  r.twin[y] = x;
  r.origin[x] = u;
  r.origin[y] = w;
  insert_after(r, m.twin[b[pp - 1]], x);
  insert_after(r, m.twin[b[d - 2]], y);
  r.root = x;
  return true;
}

struct CountTable {
  int d;
  std::map<std::pair<int, int>, double> memo;
  double operator()(int p, int f) {
    if (p < 0 || f < 0) return 0;
    if (p == 0) return f == 0 ? 1 : 0;
    auto key = std::make_pair(p, f);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    double s = 0;
    for (int p1 = 0; p1 <= p - 2; ++p1)
      for (int f1 = 0; f1 <= f; ++f1) {
        double c1 = (*this)(p1, f1);
        if (c1 > 0) s += c1 * (*this)(p - 2 - p1, f - f1);
      }
    if (f >= 1) s += (*this)(p + d - 2, f - 1);
    memo[key] = s;
    return s;
  }
};

class Enumerator {
 public:
  Enumerator(int d, bool simple) : d_(d), simple_(simple), count_{d, {}} {}

  void gen(int p, int f, const std::function<void(const Raw&)>& cb) {
    if (p == 0) {
      if (f == 0) cb(Raw{});
      return;
    }
    if (count_(p, f) == 0) return;
    auto key = std::make_pair(p, f);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      for (auto& r : it->second) cb(r);
      return;
    }
    if (count_(p, f) <= kMemoLimit) {
      std::vector<Raw> all;
      expand(p, f, [&](const Raw& r) { all.push_back(r); });
      auto& stored = memo_[key] = std::move(all);
      for (auto& r : stored) cb(r);
      return;
    }
    expand(p, f, cb);
  }

 private:
  static constexpr double kMemoLimit = 20000;

  void expand(int p, int f, const std::function<void(const Raw&)>& cb) {
    for (int p1 = 0; p1 <= p - 2; ++p1)
      for (int f1 = 0; f1 <= f; ++f1) {
        int p2 = p - 2 - p1, f2 = f - f1;
        if (count_(p1, f1) == 0 || count_(p2, f2) == 0) continue;
        gen(p1, f1, [&](const Raw& m1) {
          gen(p2, f2, [&](const Raw& m2) { cb(join_bridge(m1, m2)); });
        });
      }
    if (f >= 1) {
      Raw r;
      gen(p + d_ - 2, f - 1, [&](const Raw& m) {
        if (close_face(m, d_, simple_, r)) cb(r);
      });
    }
  }

  int d_;
  bool simple_;
  CountTable count_;
  std::map<std::pair<int, int>, std::vector<Raw>> memo_;
};

bool has_multi_edge(const Raw& r) {
  std::set<std::pair<int, int>> seen;
  for (size_t a = 0; a < r.twin.size(); ++a)
    if (!seen.insert({r.origin[a], r.origin[r.twin[a]]}).second) return true;
  return false;
}

PlaneMap to_map(const Raw& r) { return build_map(r.twin, r.next, r.origin, r.root); }

}  // namespace

double count_rooted_maps(int d, int p, int f) {
  CountTable t{d, {}};
  return t(p, f);
}

void for_each_angulation(int d, int f, bool simple, const std::function<void(const PlaneMap&)>& cb) {
  Enumerator e(d, simple);
  e.gen(d, f, [&](const Raw& r) {
    if (simple && has_multi_edge(r)) return;
    cb(to_map(r));
  });
}

std::vector<PlaneMap> enumerate_angulations(int d, int f, bool simple) {
  std::set<std::vector<int>> seen;
  std::vector<PlaneMap> out;
  for_each_angulation(d, f, simple, [&](const PlaneMap& m) {
    if (seen.insert(canonical_outer(m)).second) out.push_back(m);
  });
  return out;
}

PlaneMap random_angulation(int d, int f, bool simple, std::mt19937_64& rng) {
  CountTable count{d, {}};
  std::uniform_real_distribution<double> U(0, 1);
  // returns false when a loop (or forbidden multi-edge) shows up
  std::function<bool(int, int, Raw&)> draw = [&](int p, int ff, Raw& out) -> bool {
    if (p == 0) {
      out = Raw{};
      return true;
    }
    double t = U(rng) * count(p, ff);
    for (int p1 = 0; p1 <= p - 2; ++p1)
      for (int f1 = 0; f1 <= ff; ++f1) {
        double c = count(p1, f1) * count(p - 2 - p1, ff - f1);
        if (t < c) {
          Raw a, b;
          if (!draw(p1, f1, a) || !draw(p - 2 - p1, ff - f1, b)) return false;
          out = join_bridge(a, b);
          return true;
        }
        t -= c;
      }
    Raw m;
    if (!draw(p + d - 2, ff - 1, m)) return false;
    return close_face(m, d, simple, out);
  };
  if (count(d, f) == 0) throw Error("random_angulation", "Invalid", "no map with these parameters");
  for (;;) {
    Raw r;
    if (draw(d, f, r) && !(simple && has_multi_edge(r))) return to_map(r);
  }
}

PlaneMap grow_quadrangulation(int faces, std::mt19937_64& rng) {
  std::vector<std::vector<int>> adj{{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  auto replace = [&](int x, int from, int to) {
    for (int& y : adj[x])
      if (y == from) y = to;
  };
  auto insert_rel = [&](int x, int anchor, int nw, bool before) {
    auto& r = adj[x];
    auto it = std::find(r.begin(), r.end(), anchor);
    r.insert(before ? it : it + 1, nw);
  };
  for (int f = 2; f < faces; ++f) {
    int v = std::uniform_int_distribution<int>(0, int(adj.size()) - 1)(rng);
    int k = static_cast<int>(adj[v].size());
    int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
    int j = (i + 1 + std::uniform_int_distribution<int>(0, k - 2)(rng)) % k;
    int a = adj[v][i], b = adj[v][j];
    int w = static_cast<int>(adj.size());
    std::vector<int> moved, kept;
    for (int t = (i + 1) % k; t != j; t = (t + 1) % k) moved.push_back(adj[v][t]);
    for (int t = j; t != i; t = (t + 1) % k) kept.push_back(adj[v][t]);
    kept.insert(kept.begin(), a);  // a, b, m...
    adj[v] = kept;
    std::vector<int> rw{a};
    rw.insert(rw.end(), moved.begin(), moved.end());
    rw.push_back(b);
    adj.push_back(rw);
    for (int n : moved) replace(n, v, w);
    insert_rel(a, v, w, true);
    insert_rel(b, v, w, false);
  }
  int u = std::uniform_int_distribution<int>(0, int(adj.size()) - 1)(rng);
  int idx = std::uniform_int_distribution<int>(0, int(adj[u].size()) - 1)(rng);
  return from_adjacency(adj, u, adj[u][idx]);
}

}  // namespace sk
