#include "sk/planar_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace sk {

namespace {

[[noreturn]] void fail(const char* kind, const std::string& msg) {
  throw Error("build_map", kind, msg);
}

}  // namespace

int PlaneMap::degree(int v) const {
  int k = 0, a = vdart[v];
  do {
    ++k;
    a = next_cw[a];
  } while (a != vdart[v]);
  return k;
}

int PlaneMap::face_degree(int f) const {
  int k = 0, a = fdart[f];
  do {
    ++k;
    a = fnext(a);
  } while (a != fdart[f]);
  return k;
}

std::vector<int> PlaneMap::darts_at(int v) const {
  std::vector<int> out;
  int a = vdart[v];
  do {
    out.push_back(a);
    a = next_cw[a];
  } while (a != vdart[v]);
  return out;
}

std::vector<int> PlaneMap::face_darts(int f) const { return face_darts_from(fdart[f]); }

std::vector<int> PlaneMap::face_darts_from(int a0) const {
  std::vector<int> out;
  int a = a0;
  do {
    out.push_back(a);
    a = fnext(a);
  } while (a != a0);
  return out;
}

PlaneMap build_map(std::vector<int> twin, std::vector<int> next_cw, std::vector<int> origin,
                   int outer_dart, BuildOptions opt) {
  const int nd = static_cast<int>(twin.size());
  if (nd < 2 || nd % 2) fail("MalformedRotation", "dart count must be even and positive");
  if (static_cast<int>(next_cw.size()) != nd || static_cast<int>(origin.size()) != nd)
    fail("MalformedRotation", "table sizes differ");
  if (outer_dart < 0 || outer_dart >= nd) fail("MalformedRotation", "outer dart out of range");

  std::vector<int> prev(nd, -1);
  for (int a = 0; a < nd; ++a) {
    int t = twin[a], n = next_cw[a];
    if (t < 0 || t >= nd || t == a || twin[t] != a)
      fail("MalformedRotation", "twin is not a fixed-point-free involution at dart " + std::to_string(a));
    if (n < 0 || n >= nd || prev[n] != -1)
      fail("MalformedRotation", "next_cw is not a permutation at dart " + std::to_string(a));
    prev[n] = a;
    if (origin[a] < 0) fail("MalformedRotation", "negative origin at dart " + std::to_string(a));
  }

  PlaneMap m;
  int nv = 0;
  for (int o : origin) nv = std::max(nv, o + 1);
  m.vdart.assign(nv, -1);
  std::vector<char> seen(nd, 0);
  for (int a = 0; a < nd; ++a) {
    if (seen[a]) continue;
    int v = origin[a];
    if (m.vdart[v] != -1)
      fail("MalformedRotation", "vertex " + std::to_string(v) + " has two rotation cycles");
    m.vdart[v] = a;
    int b = a;
    do {
      if (origin[b] != v) fail("MalformedRotation", "origin differs along a rotation at dart " + std::to_string(b));
      seen[b] = 1;
      b = next_cw[b];
    } while (b != a);
  }
  for (int v = 0; v < nv; ++v)
    if (m.vdart[v] == -1) fail("MalformedRotation", "vertex id " + std::to_string(v) + " unused");
  if (!opt.allow_loops)
    for (int a = 0; a < nd; ++a)
      if (origin[twin[a]] == origin[a]) fail("MalformedRotation", "loop at dart " + std::to_string(a));

  // connectivity over vertices
  std::vector<char> vis(nv, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int a = m.vdart[v];
    do {
      int w = origin[twin[a]];
      if (!vis[w]) {
        vis[w] = 1;
        ++reached;
        stack.push_back(w);
      }
      a = next_cw[a];
    } while (a != m.vdart[v]);
  }
  if (reached != nv) throw Error("build_map", "Disconnected", "map has " + std::to_string(nv - reached) + " unreachable vertices");

  m.face.assign(nd, -1);
  int nf = 0;
  for (int a = 0; a < nd; ++a) {
    if (m.face[a] != -1) continue;
    m.fdart.push_back(a);
    int b = a;
    do {
      m.face[b] = nf;
      b = next_cw[twin[b]];
    } while (b != a);
    ++nf;
  }
  if (nv - nd / 2 + nf != 2)
    throw Error("build_map", "EulerViolation",
                "v - e + f = " + std::to_string(nv - nd / 2 + nf) + " (v=" + std::to_string(nv) +
                    ", e=" + std::to_string(nd / 2) + ", f=" + std::to_string(nf) + ")");

  m.edge.assign(nd, -1);
  for (int a = 0; a < nd; ++a)
    if (m.edge[a] == -1) {
      m.edge[a] = m.edge[twin[a]] = static_cast<int>(m.edart.size());
      m.edart.push_back(a);
    }
  m.twin = std::move(twin);
  m.next_cw = std::move(next_cw);
  m.origin = std::move(origin);
  m.prev_cw = std::move(prev);
  m.nv = nv;
  m.nf = nf;
  m.outer_dart = outer_dart;
  return m;
}

PlaneMap build_map(const std::vector<std::vector<int>>& rotations, const std::vector<int>& twin,
                   int outer_dart, BuildOptions opt) {
  const int nd = static_cast<int>(twin.size());
  std::vector<int> next(nd, -1), origin(nd, -1);
  for (int v = 0; v < static_cast<int>(rotations.size()); ++v) {
    const auto& r = rotations[v];
    if (r.empty()) fail("MalformedRotation", "vertex " + std::to_string(v) + " has an empty rotation");
    for (size_t i = 0; i < r.size(); ++i) {
      int a = r[i];
      if (a < 0 || a >= nd || origin[a] != -1)
        fail("MalformedRotation", "dart listed twice or out of range: " + std::to_string(a));
      origin[a] = v;
      next[a] = r[(i + 1) % r.size()];
    }
  }
  for (int a = 0; a < nd; ++a)
    if (origin[a] == -1) fail("MalformedRotation", "dart " + std::to_string(a) + " in no rotation");
  return build_map(twin, std::move(next), std::move(origin), outer_dart, opt);
}

PlaneMap from_adjacency(const std::vector<std::vector<int>>& adj, int root_u, int root_v) {
  std::map<std::pair<int, int>, int> id;
  std::vector<std::vector<int>> rot(adj.size());
  int nd = 0;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int v : adj[u]) {
      if (!id.emplace(std::make_pair(u, v), nd).second)
        fail("MalformedRotation", "repeated neighbour in adjacency list");
      rot[u].push_back(nd++);
    }
  std::vector<int> twin(nd, -1);
  for (auto& [uv, a] : id) {
    auto it = id.find({uv.second, uv.first});
    if (it == id.end()) fail("MalformedRotation", "adjacency is not symmetric");
    twin[a] = it->second;
  }
  auto r = id.find({root_u, root_v});
  if (r == id.end()) fail("MalformedRotation", "root edge not present");
  return build_map(rot, twin, r->second);
}

PlaneMap from_convex_polyhedron(const std::vector<std::array<double, 3>>& pts,
                                const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(pts.size());
  std::array<double, 3> c{0, 0, 0};
  for (auto& p : pts)
    for (int k = 0; k < 3; ++k) c[k] += p[k] / n;
  std::vector<std::vector<int>> nb(n);
  for (auto [u, v] : edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  auto sub = [](std::array<double, 3> a, std::array<double, 3> b) {
    return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  auto cross = [](std::array<double, 3> a, std::array<double, 3> b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto dot = [](std::array<double, 3> a, std::array<double, 3> b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  for (int v = 0; v < n; ++v) {
    auto nrm = sub(pts[v], c);
    auto e1 = sub(pts[nb[v][0]], pts[v]);
    double t = dot(e1, nrm) / dot(nrm, nrm);
    for (int k = 0; k < 3; ++k) e1[k] -= t * nrm[k];
    auto e2 = cross(nrm, e1);
    std::vector<std::pair<double, int>> ang;
    for (int w : nb[v]) {
      auto x = sub(pts[w], pts[v]);
      ang.push_back({std::atan2(dot(x, e2), dot(x, e1)), w});
    }
    // decreasing angle about the outward normal is clockwise seen from outside
    std::sort(ang.begin(), ang.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (size_t i = 0; i < ang.size(); ++i) nb[v][i] = ang[i].second;
  }
  return from_adjacency(nb, edges[0].first, edges[0].second);
}

PlaneMap dual(const PlaneMap& m) {
  const int nd = m.nd();
  std::vector<int> next(nd), origin(nd);
  for (int a = 0; a < nd; ++a) {
    next[a] = m.twin[m.prev_cw[a]];
    origin[a] = m.face[a];
  }
  PlaneMap d = build_map(m.twin, std::move(next), std::move(origin), m.outer_dart, {true});
  d.root_vertex = m.face[m.outer_dart];
  return d;
}

PlaneMap primal_of_regular(const PlaneMap& m, int root_dart) {
  const int nd = m.nd();
  std::vector<int> next(nd, -1);
  for (int a = 0; a < nd; ++a) next[m.twin[m.next_cw[a]]] = a;
  // primal vertices are the orbits of the rebuilt rotation (the faces of m)
  std::vector<int> orb(nd, -1);
  int nv = 0;
  for (int a = 0; a < nd; ++a) {
    if (orb[a] != -1) continue;
    int b = a;
    do {
      orb[b] = nv;
      b = next[b];
    } while (b != a);
    ++nv;
  }
  return build_map(m.twin, std::move(next), std::move(orb), root_dart, {true});
}

namespace {

struct GirthResult {
  int len = -1;
  std::vector<int> cycle;
};

GirthResult girth_search(const PlaneMap& m, bool want_cycle) {
  const int nv = m.nv;
  GirthResult best;
  std::vector<int> dist(nv), par(nv), q(nv);
  int bs = -1, ba = -1;
  for (int s = 0; s < nv; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    par[s] = -1;
    int qh = 0, qt = 0;
    q[qt++] = s;
    while (qh < qt) {
      int u = q[qh++];
      if (best.len != -1 && 2 * dist[u] + 1 >= best.len) break;
      int a = m.vdart[u];
      do {
        int w = m.head(a);
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          par[w] = a;
          q[qt++] = w;
        } else if (par[u] == -1 || m.edge[a] != m.edge[par[u]]) {
          int len = dist[u] + dist[w] + 1;
          if (best.len == -1 || len < best.len) {
            best.len = len;
            bs = s;
            ba = a;
          }
        }
        a = m.next_cw[a];
      } while (a != m.vdart[u]);
    }
  }
  if (best.len == -1) throw Error("girth", "Acyclic", "the map has no cycle");
  if (want_cycle) {
    // redo the BFS from the best source to rebuild both branches
    std::fill(dist.begin(), dist.end(), -1);
    dist[bs] = 0;
    par[bs] = -1;
    int qh = 0, qt = 0;
    q[qt++] = bs;
    while (qh < qt) {
      int u = q[qh++];
      int a = m.vdart[u];
      do {
        int w = m.head(a);
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          par[w] = a;
          q[qt++] = w;
        }
        a = m.next_cw[a];
      } while (a != m.vdart[u]);
    }
    // the recorded dart may have become a tree dart; find the first non-tree dart
    // realising the same length instead
    int u0 = m.origin[ba], w0 = m.head(ba);
    if (dist[u0] + dist[w0] + 1 != best.len || par[w0] == ba || (par[u0] != -1 && m.edge[par[u0]] == m.edge[ba])) {
      for (int a = 0; a < m.nd(); ++a) {
        int u = m.origin[a], w = m.head(a);
        if (dist[u] < 0 || dist[w] < 0) continue;
        if (par[w] == a || (par[u] != -1 && m.edge[par[u]] == m.edge[a])) continue;
        if (dist[u] + dist[w] + 1 == best.len) {
          ba = a;
          break;
        }
      }
    }
    std::vector<int> left, right;
    for (int v = m.origin[ba]; v != bs; v = m.origin[par[v]]) left.push_back(par[v]);
    for (int v = m.head(ba); v != bs; v = m.origin[par[v]]) right.push_back(par[v]);
    std::reverse(left.begin(), left.end());
    best.cycle = left;
    best.cycle.push_back(ba);
    for (int a : right) best.cycle.push_back(m.twin[a]);
  }
  return best;
}

}  // namespace

int girth(const PlaneMap& m) { return girth_search(m, false).len; }

std::vector<int> shortest_cycle(const PlaneMap& m) { return girth_search(m, true).cycle; }

bool mincut_at_least(const PlaneMap& m, int d) {
  try {
    return girth(dual(m)) >= d;
  } catch (const Error&) {
    return true;
  }
}

std::vector<int> canonical_order(const PlaneMap& m, int root) {
  std::vector<int> label(m.nd(), -1), order;
  order.reserve(m.nd());
  label[root] = 0;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    int a = order[i];
    for (int b : {m.next_cw[a], m.twin[a]})
      if (label[b] == -1) {
        label[b] = static_cast<int>(order.size());
        order.push_back(b);
      }
  }
  return order;
}

std::vector<int> canonical_code(const PlaneMap& m, int root) {
  auto order = canonical_order(m, root);
  std::vector<int> label(m.nd(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) label[order[i]] = i;
  std::vector<int> code;
  code.reserve(2 * m.nd());
  for (int a : order) {
    code.push_back(label[m.next_cw[a]]);
    code.push_back(label[m.twin[a]]);
  }
  return code;
}

std::vector<int> canonical_outer(const PlaneMap& m) {
  std::vector<int> best;
  for (int a : m.face_darts_from(m.outer_dart)) {
    auto c = canonical_code(m, a);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

bool isomorphic(const PlaneMap& a, const PlaneMap& b) {
  if (a.nd() != b.nd() || a.nv != b.nv || a.nf != b.nf) return false;
  auto ca = canonical_code(a, a.outer_dart);
  for (int r = 0; r < b.nd(); ++r)
    if (canonical_code(b, r) == ca) return true;
  return false;
}

std::vector<uint8_t> bipartition(const PlaneMap& m) {
  std::vector<int> col(m.nv, -1);
  int s = m.origin[m.outer_dart];
  col[s] = 1;
  std::vector<int> st{s};
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (int a : m.darts_at(u)) {
      int w = m.head(a);
      if (col[w] == -1) {
        col[w] = 1 - col[u];
        st.push_back(w);
      } else if (col[w] == col[u]) {
        return {};
      }
    }
  }
  return std::vector<uint8_t>(col.begin(), col.end());
}

AngulationView as_angulation(const PlaneMap& m, int d, bool require_distinct) {
  if (d < 3) throw Error("as_angulation", "NotDAngulation", "d must be at least 3");
  for (int f = 0; f < m.nf; ++f)
    if (m.face_degree(f) != d)
      throw Error("as_angulation", "NotDAngulation",
                  "face " + std::to_string(f) + " has degree " + std::to_string(m.face_degree(f)));
  AngulationView v;
  v.map = m;
  v.d = d;
  v.ext_darts = m.face_darts_from(m.outer_dart);
  v.ext_index.assign(m.nv, 0);
  for (int i = 0; i < d; ++i) {
    int u = m.origin[v.ext_darts[i]];
    v.ext.push_back(u);
    if (v.ext_index[u]) v.distinct = false;
    else v.ext_index[u] = i + 1;
  }
  if (!v.distinct && require_distinct)
    throw Error("as_angulation", "ExternalVerticesNotDistinct", "outer face repeats a vertex");
  v.ext_dart.assign(m.nd(), 0);
  for (int a : v.ext_darts) v.ext_dart[a] = v.ext_dart[m.twin[a]] = 1;
  return v;
}

RegularView as_regular(const PlaneMap& m, int d, int root) {
  if (root < 0 || root >= m.nv) throw Error("as_regular", "NotDRegular", "root vertex out of range");
  for (int v = 0; v < m.nv; ++v)
    if (m.degree(v) != d)
      throw Error("as_regular", "NotDRegular",
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(m.degree(v)));
  RegularView r;
  r.map = m;
  r.map.root_vertex = root;
  r.d = d;
  r.root = root;
  int e = m.origin[m.outer_dart] == root ? m.outer_dart : m.vdart[root];
  if (e != m.outer_dart) {
    for (int a : m.darts_at(root)) e = std::min(e, a);
  }
  r.face_index.assign(m.nf, 0);
  r.root_edge_index.assign(m.nd(), 0);
  for (int i = 0; i < d; ++i) {
    r.root_edges.push_back(e);
    r.root_faces.push_back(m.face[m.twin[e]]);
    r.root_nbr.push_back(m.head(e));
    r.face_index[m.face[m.twin[e]]] = i + 1;
    r.root_edge_index[e] = r.root_edge_index[m.twin[e]] = i + 1;
    e = m.prev_cw[e];
  }
  return r;
}

}  // namespace sk
