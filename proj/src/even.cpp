#include "sk/even.hpp"

#include <bit>
#include <deque>

#include "sk/orientation.hpp"

namespace sk {

namespace {

std::string str(int x) { return std::to_string(x); }

void require_even_d(int d, const char* stage) {
  if (d % 2 != 0) throw Error(stage, "OddD", "d = " + str(d) + " is odd");
}

void require_empty(const std::vector<Violation>& v, const char* stage, const char* kind) {
  if (!v.empty())
    throw Error(stage, kind, "axiom (" + v[0].axiom + ") at " + v[0].where + " " + str(v[0].id) + ": " + v[0].detail);
}

// Position of a strictly inside the clockwise sector from lo to hi (a full turn when lo == hi).
bool strictly_between(int a, int lo, int hi, int deg) {
  int ra = (a - lo + deg) % deg, rh = lo == hi ? deg : (hi - lo + deg) % deg;
  return ra > 0 && ra < rh;
}

int only_color(uint64_t mask) { return std::countr_zero(mask) + 1; }

}  // namespace

bool is_even_labelling(const AngulationView& g, const CornerLabelling& l) {
  require_even_d(g.d, "is_even");
  auto black = bipartition(g.map);
  if (black.empty()) return false;
  for (int c = 0; c < g.map.nd(); ++c)
    if ((l.color[c] % 2 == 1) != (black[g.map.origin[c]] == 1)) return false;
  return true;
}

bool is_even_schnyder(const AngulationView& g, const ColorDecomposition& s) {
  require_even_d(g.d, "is_even");
  const uint64_t all = (uint64_t{1} << g.d) - 1;
  for (int e = 0; e < g.map.ne(); ++e) {
    int a = g.map.edart[e];
    if (g.ext_dart[a]) continue;
    auto missing = mask_colors(all & ~(s.colors[a] | s.colors[g.map.twin[a]]), g.d);
    if (missing.size() != 2 || missing[0] % 2 == missing[1] % 2) return false;
  }
  return true;
}

bool is_even_regular(const RegularView& r, const ColorDecomposition& t) {
  require_even_d(r.d, "is_even");
  for (int e = 0; e < r.map.ne(); ++e) {
    int a = r.map.edart[e], b = r.map.twin[a];
    if (r.root_edge_index[a]) continue;
    if (!t.colors[a] || !t.colors[b] || only_color(t.colors[a]) % 2 == only_color(t.colors[b]) % 2) return false;
  }
  return true;
}

std::vector<uint8_t> face_colors(const RegularView& r) {
  const auto& m = r.map;
  std::vector<int> col(m.nf, -1);
  std::deque<int> q{r.root_faces[0]};
  col[r.root_faces[0]] = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int a : m.face_darts(f)) {
      int h = m.face[m.twin[a]];
      if (col[h] < 0) {
        col[h] = 1 - col[f];
        q.push_back(h);
      } else if (col[h] == col[f]) {
        throw Error("face_colors", "NotEven", "faces are not 2-colorable");
      }
    }
  }
  return {col.begin(), col.end()};
}

ColorDecomposition lambda(const AngulationView& g, const ColorDecomposition& s) {
  if (g.d % 2 != 0) throw Error("lambda", "NotEven", "d = " + str(g.d) + " is odd");
  require_empty(validate_decomposition(g, s), "lambda", "InvalidDecomposition");
  if (!is_even_schnyder(g, s)) throw Error("lambda", "NotEven", "an internal edge has missing colors of equal parity");
  int p = g.d / 2;
  ColorDecomposition out{p, std::vector<uint64_t>(g.map.nd(), 0)};
  for (int a = 0; a < g.map.nd(); ++a)
    for (int i = 1; i <= p; ++i)
      if (s.colors[a] & color_bit(2 * i)) out.colors[a] |= color_bit(i);
  return out;
}

std::vector<Violation> validate_reduced_schnyder(const AngulationView& g, const ColorDecomposition& red) {
  const auto& m = g.map;
  std::vector<Violation> out;
  if (g.d % 2 != 0 || red.d * 2 != g.d || static_cast<int>(red.colors.size()) != m.nd()) {
    out.push_back({"structure", "dart", -1, "reduced decomposition does not match the host"});
    return out;
  }
  const int p = red.d, d = g.d;
  const uint64_t all = (uint64_t{1} << p) - 1;
  auto black = bipartition(m);
  if (black.empty()) {
    out.push_back({"structure", "vertex", -1, "host is not bipartite"});
    return out;
  }
  for (int a = 0; a < m.nd(); ++a) {
    if (red.colors[a] & ~all) out.push_back({"structure", "dart", a, "color outside 1.." + str(p)});
    else if (red.colors[a] && (g.ext_dart[a] || !g.internal_vertex(m.origin[a])))
      out.push_back({"ii'", "dart", a, "arc leaving an external vertex"});
  }
  if (!out.empty()) return out;
  for (int e = 0; e < m.ne(); ++e) {
    int a = m.edart[e], b = m.twin[a];
    if (g.ext_dart[a]) continue;
    if ((red.colors[a] & red.colors[b]) || std::popcount(red.colors[a] | red.colors[b]) != p - 1)
      out.push_back({"i'", "dart", a, "edge does not appear in p-1 forests"});
  }
  std::vector<std::vector<int>> parent(p + 1, std::vector<int>(m.nv, -1));
  for (int v = 0; v < m.nv; ++v) {
    if (!g.internal_vertex(v)) continue;
    auto darts = m.darts_at(v);
    std::vector<int> seq;
    for (int a : darts) {
      uint64_t mask = red.colors[a];
      if (!mask) continue;
      int start = -1;
      for (int c = 1; c <= p; ++c)
        if ((mask & color_bit(c)) && !(mask & color_bit(wrap_color(c - 1, p)))) start = c;
      int len = std::popcount(mask);
      if (start < 0 || color_interval(start, wrap_color(start + len, p), p) != mask) {
        seq.clear();
        break;
      }
      for (int t = 0; t < len; ++t) {
        seq.push_back(wrap_color(start + t, p));
        parent[wrap_color(start + t, p)][v] = a;
      }
    }
    bool cyclic = static_cast<int>(seq.size()) == p;
    for (size_t t = 0; cyclic && t < seq.size(); ++t) cyclic = seq[(t + 1) % seq.size()] == wrap_color(seq[t] + 1, p);
    if (!cyclic) {
      out.push_back({"iii'", "vertex", v, "parent edges not clockwise"});
      continue;
    }
    std::vector<int> pos(m.nd(), -1);
    int deg = static_cast<int>(darts.size());
    for (int t = 0; t < deg; ++t) pos[darts[t]] = t;
    for (int a : darts)
      for (int c : mask_colors(red.colors[m.twin[a]], p)) {
        int lo = black[v] ? parent[wrap_color(c + 1, p)][v] : parent[c][v];
        int hi = black[v] ? parent[c][v] : parent[wrap_color(c - 1, p)][v];
        if (!strictly_between(pos[a], pos[lo], pos[hi], deg))
          out.push_back({"iii'", "dart", a, "incoming color " + str(c) + " outside its sector"});
      }
  }
  if (!out.empty()) return out;
  for (int i = 1; i <= p; ++i) {
    std::vector<uint8_t> state(m.nv, 0);
    for (int v0 = 0; v0 < m.nv; ++v0) {
      if (!g.internal_vertex(v0) || state[v0]) continue;
      std::vector<int> walk;
      int v = v0;
      while (g.internal_vertex(v) && state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        v = m.head(parent[i][v]);
      }
      if (g.internal_vertex(v) && state[v] == 1) {
        out.push_back({"ii'", "color", i, "forest has a cycle"});
        return out;
      }
      if (!g.internal_vertex(v)) {
        int j = g.ext_index[v];
        if (j == 2 * i || j == wrap_color(2 * i + 1, d)) out.push_back({"ii'", "color", i, "tree rooted at u_" + str(j)});
      }
      for (int w : walk) state[w] = 2;
    }
  }
  return out;
}

ColorDecomposition lambda_inverse(const AngulationView& g, const ColorDecomposition& red) {
  require_empty(validate_reduced_schnyder(g, red), "lambda_inverse", "InvalidDecomposition");
  const auto& m = g.map;
  const int p = red.d, d = g.d;
  auto black = bipartition(m);
  ColorDecomposition s{d, std::vector<uint64_t>(m.nd(), 0)};
  for (int a = 0; a < m.nd(); ++a)
    for (int i = 1; i <= p; ++i)
      if (red.colors[a] & color_bit(i)) {
        s.colors[a] |= color_bit(2 * i);
        s.colors[a] |= color_bit(black[m.origin[a]] ? 2 * i - 1 : wrap_color(2 * i + 1, d));
      }
  require_empty(validate_decomposition(g, s), "lambda_inverse", "InvalidDecomposition");
  return s;
}

ColorDecomposition lambda_star(const RegularView& r, const ColorDecomposition& t) {
  if (r.d % 2 != 0) throw Error("lambda_star", "NotEven", "d = " + str(r.d) + " is odd");
  require_empty(validate_regular_decomposition(r, t), "lambda_star", "InvalidDecomposition");
  if (!is_even_regular(r, t)) throw Error("lambda_star", "NotEven", "a non-root edge has colors of equal parity");
  int p = r.d / 2;
  ColorDecomposition out{p, std::vector<uint64_t>(r.map.nd(), 0)};
  for (int a = 0; a < r.map.nd(); ++a)
    if (t.colors[a] && only_color(t.colors[a]) % 2 == 0) out.colors[a] = color_bit(only_color(t.colors[a]) / 2);
  return out;
}

std::vector<Violation> validate_reduced_regular(const RegularView& r, const ColorDecomposition& red) {
  const auto& m = r.map;
  std::vector<Violation> out;
  if (r.d % 2 != 0 || red.d * 2 != r.d || static_cast<int>(red.colors.size()) != m.nd()) {
    out.push_back({"structure", "dart", -1, "reduced decomposition does not match the host"});
    return out;
  }
  const int p = red.d;
  const uint64_t all = (uint64_t{1} << p) - 1;
  auto fc = face_colors(r);
  for (int a = 0; a < m.nd(); ++a) {
    uint64_t c = red.colors[a];
    if ((c & ~all) || std::popcount(c) > 1) out.push_back({"structure", "dart", a, "arc carries invalid colors"});
    else if (c && m.origin[a] == r.root) out.push_back({"structure", "dart", a, "arc leaving the root"});
    else if (c && !fc[m.face[m.twin[a]]]) out.push_back({"i'", "dart", a, "arc has a white face on its right"});
  }
  if (!out.empty()) return out;
  for (int e = 0; e < m.ne(); ++e) {
    int a = m.edart[e], b = m.twin[a];
    int k = r.root_edge_index[a];
    int covered = (red.colors[a] != 0) + (red.colors[b] != 0);
    if (k % 2 == 1) {
      if (covered) out.push_back({"ii'", "dart", a, "odd root-edge " + str(k) + " is covered"});
    } else if (k) {
      int up = m.origin[a] == r.root ? b : a;
      if (red.colors[up] != color_bit(k / 2) || red.colors[m.twin[up]])
        out.push_back({"ii'", "dart", up, "root-edge " + str(k) + " not in tree " + str(k / 2)});
    } else if (covered != 1) {
      out.push_back({"partition", "dart", a, "edge covered " + str(covered) + " times"});
    }
  }
  std::vector<std::vector<int>> parent(p + 1, std::vector<int>(m.nv, -1));
  for (int v = 0; v < m.nv; ++v) {
    if (v == r.root) continue;
    std::vector<int> seq;
    for (int a : m.darts_at(v))
      if (red.colors[a]) {
        seq.push_back(only_color(red.colors[a]));
        parent[seq.back()][v] = a;
      }
    bool cyclic = static_cast<int>(seq.size()) == p;
    for (size_t t = 0; cyclic && t < seq.size(); ++t) cyclic = seq[(t + 1) % seq.size()] == wrap_color(seq[t] + 1, p);
    if (!cyclic) out.push_back({"iii'", "vertex", v, "parent edges not clockwise"});
  }
  if (!out.empty()) return out;
  for (int i = 1; i <= p; ++i) {
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
        out.push_back({"tree", "color", i, "tree has a cycle"});
        break;
      }
      for (int w : walk) state[w] = 2;
    }
  }
  return out;
}

ColorDecomposition lambda_star_inverse(const RegularView& r, const ColorDecomposition& red) {
  require_empty(validate_reduced_regular(r, red), "lambda_star_inverse", "InvalidDecomposition");
  const auto& m = r.map;
  ColorDecomposition t{r.d, std::vector<uint64_t>(m.nd(), 0)};
  for (int a = 0; a < m.nd(); ++a)
    if (red.colors[a]) t.colors[a] = color_bit(2 * only_color(red.colors[a]));
  for (int a = 0; a < m.nd(); ++a) {
    if (!red.colors[a]) continue;
    int b = m.prev_cw[a];
    if (t.colors[b]) throw Error("lambda_star_inverse", "InvalidDecomposition", "outgoing arcs are not alternating");
    t.colors[b] = color_bit(2 * only_color(red.colors[a]) - 1);
  }
  require_empty(validate_regular_decomposition(r, t), "lambda_star_inverse", "InvalidDecomposition");
  return t;
}

AngulationView dual_quadrangulation(const RegularView& r) {
  return as_angulation(primal_of_regular(r.map, r.root_edges[0]), r.d);
}

ColorDecomposition compute_even_regular_decomposition(const RegularView& r) {
  const char* stage = "even_decomposition";
  if (r.d != 4) throw Error(stage, "NotFourRegular", "degree " + str(r.d));
  if (!mincut_at_least(r.map, 4)) throw Error(stage, "MincutTooSmall", "edge cut smaller than 4");
  auto g = dual_quadrangulation(r);
  auto o = scaled(compute_p_p1_orientation(g), 2);
  auto s = phi(g, psi_inverse(g, o));
  return chi(g, r, s);
}

}  // namespace sk
