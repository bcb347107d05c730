#include "sk/duality.hpp"

#include <bit>
#include <deque>

namespace sk {

namespace {

std::string str(int x) { return std::to_string(x); }

// Parent dart (toward the roots) per vertex of the subgraph given by in_edge; -1 at roots.
// Throws when the subgraph is not a forest spanning every vertex from the roots.
std::vector<int> orient_toward(const PlaneMap& m, const std::vector<uint8_t>& in_edge,
                               const std::vector<int>& roots, const char* stage) {
  std::vector<int> parent(m.nv, -2);
  std::deque<int> q;
  for (int v : roots) {
    parent[v] = -1;
    q.push_back(v);
  }
  int used = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int a : m.darts_at(u)) {
      if (!in_edge[m.edge[a]] || a == parent[u]) continue;
      int w = m.head(a);
      if (parent[w] != -2) {
        // each tree edge is seen once from its parent side; any other hit closes a cycle
        if (parent[w] != m.twin[a]) throw Error(stage, "InvalidDecomposition", "color class contains a cycle");
        continue;
      }
      parent[w] = m.twin[a];
      ++used;
      q.push_back(w);
    }
  }
  int edges = 0;
  for (uint8_t x : in_edge) edges += x;
  for (int v = 0; v < m.nv; ++v)
    if (parent[v] == -2) throw Error(stage, "InvalidDecomposition", "vertex " + str(v) + " not reached");
  if (edges != used) throw Error(stage, "InvalidDecomposition", "color class is not a forest");
  return parent;
}

void require_empty(const std::vector<Violation>& v, const char* stage, const char* kind) {
  if (!v.empty())
    throw Error(stage, kind, "axiom (" + v[0].axiom + ") at " + v[0].where + " " + str(v[0].id) + ": " + v[0].detail);
}

}  // namespace

RegularView dual_view(const AngulationView& g) {
  auto d = dual(g.map);
  return as_regular(d, g.d, d.root_vertex);
}

int dual_corner(const PlaneMap& primal, int c) { return primal.next_cw[c]; }

std::vector<Violation> validate_regular_labelling(const RegularView& r, const CornerLabelling& l) {
  const auto& m = r.map;
  const int d = r.d;
  std::vector<Violation> out;
  if (l.d != d || static_cast<int>(l.color.size()) != m.nd()) {
    out.push_back({"structure", "corner", -1, "labelling does not match the host"});
    return out;
  }
  for (int c = 0; c < m.nd(); ++c)
    if (l.color[c] < 1 || l.color[c] > d) out.push_back({"structure", "corner", c, "color out of range"});
  if (!out.empty()) return out;
  for (int v = 0; v < m.nv; ++v) {
    int step = v == r.root ? -1 : 1;
    for (int c : m.darts_at(v))
      if (l.color[m.next_cw[c]] != wrap_color(l.color[c] + step, d)) {
        out.push_back({"i", "vertex", v, v == r.root ? "colors not counterclockwise around the root" : "colors not clockwise"});
        break;
      }
  }
  for (int c = 0; c < m.nd(); ++c) {
    int i = r.face_index[m.corner_face(c)];
    if (i && l.color[c] != i) out.push_back({"ii", "corner", c, "corner of root-face " + str(i) + " has color " + str(l.color[c])});
  }
  for (int f = 0; f < m.nf; ++f) {
    if (r.face_index[f]) continue;
    int descents = 0;
    for (int x : m.face_darts(f)) {
      int c = m.twin[x];
      if (l.color[c] > l.color[m.prev_cw[m.twin[c]]]) ++descents;
    }
    if (descents != 1) out.push_back({"iii", "face", f, str(descents) + " descents around the face"});
  }
  return out;
}

std::vector<Violation> validate_regular_decomposition(const RegularView& r, const ColorDecomposition& s) {
  const auto& m = r.map;
  const int d = r.d;
  std::vector<Violation> out;
  if (s.d != d || static_cast<int>(s.colors.size()) != m.nd()) {
    out.push_back({"structure", "dart", -1, "decomposition does not match the host"});
    return out;
  }
  const uint64_t all = (uint64_t{1} << d) - 1;
  for (int a = 0; a < m.nd(); ++a) {
    bool from_root = m.origin[a] == r.root;
    if (s.colors[a] & ~all) out.push_back({"structure", "dart", a, "color out of range"});
    else if (from_root && s.colors[a]) out.push_back({"structure", "dart", a, "arc leaving the root"});
    else if (!from_root && std::popcount(s.colors[a]) != 1)
      out.push_back({"iii", "dart", a, "arc carries " + str(std::popcount(s.colors[a])) + " colors"});
  }
  if (!out.empty()) return out;
  for (int e = 0; e < m.ne(); ++e) {
    int a = m.edart[e], b = m.twin[a];
    if (r.root_edge_index[a]) continue;
    if (s.colors[a] == s.colors[b]) out.push_back({"i", "dart", a, "both directions carry the same color"});
  }
  for (int i = 1; i <= d; ++i) {
    int b = m.twin[r.root_edges[i - 1]];
    if (s.colors[b] != color_bit(i)) out.push_back({"ii", "dart", b, "root-edge " + str(i) + " has another color"});
  }
  std::vector<std::vector<int>> parent(d + 1, std::vector<int>(m.nv, -1));
  for (int v = 0; v < m.nv; ++v) {
    if (v == r.root) continue;
    for (int c : m.darts_at(v)) {
      int col = std::countr_zero(s.colors[c]) + 1;
      parent[col][v] = c;
      if (s.colors[m.next_cw[c]] != color_bit(wrap_color(col + 1, d))) {
        out.push_back({"iii", "vertex", v, "outgoing colors not clockwise"});
        break;
      }
    }
  }
  if (!out.empty()) return out;
  for (int i = 1; i <= d; ++i) {
    std::vector<uint8_t> state(m.nv, 0);
    state[r.root] = 2;
    for (int v0 = 0; v0 < m.nv; ++v0) {
      std::vector<int> walk;
      int v = v0;
      while (state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        v = m.head(parent[i][v]);
      }
      if (state[v] == 1) {
        out.push_back({"tree", "color", i, "tree " + str(i) + " has a cycle"});
        break;
      }
      for (int w : walk) state[w] = 2;
    }
  }
  return out;
}

CornerLabelling dual_labelling(const AngulationView& g, const RegularView& r, const CornerLabelling& l) {
  CornerLabelling out{l.d, std::vector<int>(r.map.nd(), 0)};
  for (int c = 0; c < g.map.nd(); ++c) out.color[dual_corner(g.map, c)] = l.color[c];
  return out;
}

CornerLabelling primal_labelling(const AngulationView& g, const RegularView& r, const CornerLabelling& l) {
  (void)r;
  CornerLabelling out{l.d, std::vector<int>(g.map.nd(), 0)};
  for (int c = 0; c < g.map.nd(); ++c) out.color[c] = l.color[dual_corner(g.map, c)];
  return out;
}

ColorDecomposition xi(const RegularView& r, const CornerLabelling& l) {
  require_empty(validate_regular_labelling(r, l), "xi", "InvalidLabelling");
  const auto& m = r.map;
  ColorDecomposition s{r.d, std::vector<uint64_t>(m.nd(), 0)};
  for (int a = 0; a < m.nd(); ++a)
    if (m.origin[a] != r.root) s.colors[a] = color_bit(l.color[m.prev_cw[a]]);
  return s;
}

CornerLabelling xi_inverse(const RegularView& r, const ColorDecomposition& s) {
  require_empty(validate_regular_decomposition(r, s), "xi_inverse", "InvalidDecomposition");
  const auto& m = r.map;
  const int d = r.d;
  CornerLabelling l{d, std::vector<int>(m.nd(), 0)};
  for (int a = 0; a < m.nd(); ++a)
    if (m.origin[a] != r.root) l.color[m.prev_cw[a]] = std::countr_zero(s.colors[a]) + 1;
  for (int i = 1; i <= d; ++i) l.color[r.root_edges[i - 1]] = i;

  // sufficient conditions for a regular labelling, checked before the full validator
  auto fail = [](const std::string& why) { throw Error("xi_inverse", "InvalidDecomposition", why); };
  for (int e = 0; e < m.ne(); ++e) {
    int a = m.edart[e], b = m.twin[a];
    if (r.root_edge_index[a]) continue;
    if (l.color[m.prev_cw[a]] == l.color[m.prev_cw[b]]) fail("edge " + str(e) + " has equal preceding colors");
  }
  for (int i = 1; i <= d; ++i) {
    int e = r.root_edges[i - 1], b = m.twin[e];
    int ip = wrap_color(i + 1, d);
    if (l.color[m.prev_cw[e]] != ip || l.color[e] != i || l.color[m.prev_cw[b]] != i || l.color[b] != ip)
      fail("root-edge " + str(i) + " has wrong corner colors");
  }
  for (int f = 0; f < m.nf; ++f) {
    if (r.face_index[f]) continue;
    auto darts = m.face_darts(f);
    bool mono = true;
    for (int x : darts) mono = mono && l.color[m.twin[x]] == l.color[m.twin[darts[0]]];
    if (mono) fail("face " + str(f) + " is monochromatic");
  }
  require_empty(validate_regular_labelling(r, l), "xi_inverse", "InvalidDecomposition");
  return l;
}

std::vector<uint8_t> primal_tree(const AngulationView& g, const ColorDecomposition& s, int i) {
  const auto& m = g.map;
  std::vector<uint8_t> in(m.ne(), 0);
  for (int a = 0; a < m.nd(); ++a)
    if (s.colors[a] & color_bit(i)) in[m.edge[a]] = 1;
  int skip = m.edge[g.ext_darts[i - 1]];
  for (int a : g.ext_darts)
    if (m.edge[a] != skip) in[m.edge[a]] = 1;
  return in;
}

ColorDecomposition chi(const AngulationView& g, const RegularView& r, const ColorDecomposition& s) {
  require_empty(validate_decomposition(g, s), "chi", "InvalidDecomposition");
  const auto& m = r.map;
  ColorDecomposition out{g.d, std::vector<uint64_t>(m.nd(), 0)};
  for (int i = 1; i <= g.d; ++i) {
    auto t = primal_tree(g, s, i);
    for (auto& x : t) x = !x;
    auto parent = orient_toward(m, t, {r.root}, "chi");
    for (int v = 0; v < m.nv; ++v)
      if (parent[v] >= 0) out.colors[parent[v]] |= color_bit(i);
  }
  return out;
}

ColorDecomposition chi_inverse(const AngulationView& g, const RegularView& r, const ColorDecomposition& s) {
  require_empty(validate_regular_decomposition(r, s), "chi_inverse", "InvalidDecomposition");
  const auto& m = g.map;
  ColorDecomposition out{g.d, std::vector<uint64_t>(m.nd(), 0)};
  for (int i = 1; i <= g.d; ++i) {
    std::vector<uint8_t> forest(m.ne(), 1);
    for (int a = 0; a < m.nd(); ++a)
      if (s.colors[a] & color_bit(i)) forest[m.edge[a]] = 0;
    int skip = m.edge[g.ext_darts[i - 1]];
    for (int a : g.ext_darts)
      if (forest[m.edge[a]] != (m.edge[a] != skip))
        throw Error("chi_inverse", "InvalidDecomposition", "external edges do not match root-edge " + str(i));
    for (int a : g.ext_darts) forest[m.edge[a]] = 0;
    auto parent = orient_toward(m, forest, g.ext, "chi_inverse");
    for (int v = 0; v < m.nv; ++v)
      if (parent[v] >= 0) out.colors[parent[v]] |= color_bit(i);
  }
  require_empty(validate_decomposition(g, out), "chi_inverse", "InvalidDecomposition");
  return out;
}

}  // namespace sk
