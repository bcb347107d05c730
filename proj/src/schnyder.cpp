#include "sk/schnyder.hpp"

#include <bit>
#include <deque>

namespace sk {

namespace {

std::string str(int x) { return std::to_string(x); }

void require_valid(const AngulationView& g, const CornerLabelling& l, const char* stage) {
  auto v = validate_labelling(g, l);
  if (!v.empty())
    throw Error(stage, "InvalidLabelling", "axiom (" + v[0].axiom + ") at " + v[0].where + " " + str(v[0].id) + ": " + v[0].detail);
}

void require_valid(const AngulationView& g, const ColorDecomposition& s, const char* stage) {
  auto v = validate_decomposition(g, s);
  if (!v.empty())
    throw Error(stage, "InvalidDecomposition",
                "axiom (" + v[0].axiom + ") at " + v[0].where + " " + str(v[0].id) + ": " + v[0].detail);
}

}  // namespace

uint64_t color_interval(int i, int j, int d) {
  uint64_t mask = 0;
  for (int c = i; c != j; c = wrap_color(c + 1, d)) mask |= color_bit(c);
  return mask;
}

std::vector<int> mask_colors(uint64_t mask, int d) {
  std::vector<int> out;
  for (int c = 1; c <= d; ++c)
    if (mask & color_bit(c)) out.push_back(c);
  return out;
}

int jump(const PlaneMap& m, const CornerLabelling& l, int a) {
  return ((l.color[a] - l.color[m.prev_cw[a]]) % l.d + l.d) % l.d;
}

std::vector<Violation> validate_labelling(const AngulationView& g, const CornerLabelling& l) {
  const auto& m = g.map;
  std::vector<Violation> out;
  if (l.d != g.d || static_cast<int>(l.color.size()) != m.nd()) {
    out.push_back({"structure", "corner", -1, "labelling does not match the host"});
    return out;
  }
  bool ranged = true;
  for (int c = 0; c < m.nd(); ++c)
    if (l.color[c] < 1 || l.color[c] > l.d) {
      out.push_back({"structure", "corner", c, "color " + str(l.color[c]) + " outside 1.." + str(l.d)});
      ranged = false;
    }
  if (!ranged) return out;
  for (int f = 0; f < m.nf; ++f) {
    if (f == m.outer_face()) continue;
    for (int x : m.face_darts(f)) {
      int c = m.twin[x], n = m.prev_cw[m.twin[c]];
      if (l.color[n] != wrap_color(l.color[c] + 1, l.d)) {
        out.push_back({"i", "face", f, "corner " + str(c) + " then " + str(n) + " is not +1 clockwise"});
        break;
      }
    }
  }
  if (g.distinct)
    for (int v = 0; v < m.nv; ++v) {
      int i = g.ext_index[v];
      if (i == 0) continue;
      for (int c : m.darts_at(v))
        if (l.color[c] != i) out.push_back({"ii", "corner", c, "external vertex " + str(v) + " corner has color " + str(l.color[c])});
    }
  for (int v = 0; v < m.nv; ++v) {
    if (!g.internal_vertex(v)) continue;
    int descents = 0;
    for (int c : m.darts_at(v))
      if (l.color[c] > l.color[m.next_cw[c]]) ++descents;
    if (descents != 1) out.push_back({"iii", "vertex", v, str(descents) + " descents around the vertex"});
  }
  return out;
}

std::vector<Violation> validate_decomposition(const AngulationView& g, const ColorDecomposition& s) {
  const auto& m = g.map;
  const int d = g.d;
  std::vector<Violation> out;
  if (s.d != d || static_cast<int>(s.colors.size()) != m.nd()) {
    out.push_back({"structure", "dart", -1, "decomposition does not match the host"});
    return out;
  }
  const uint64_t all = d >= 64 ? ~uint64_t{0} : (uint64_t{1} << d) - 1;
  for (int a = 0; a < m.nd(); ++a) {
    if (s.colors[a] & ~all) out.push_back({"structure", "dart", a, "color outside 1.." + str(d)});
    if (g.ext_dart[a] && s.colors[a]) out.push_back({"structure", "dart", a, "external dart carries colors"});
  }
  if (!out.empty()) return out;

  for (int e = 0; e < m.ne(); ++e) {
    int a = m.edart[e], b = m.twin[a];
    if (g.ext_dart[a]) continue;
    if (s.colors[a] & s.colors[b]) out.push_back({"i", "dart", a, "both darts share a color"});
    else if (std::popcount(s.colors[a] | s.colors[b]) != d - 2)
      out.push_back({"i", "dart", a, "edge carries " + str(std::popcount(s.colors[a] | s.colors[b])) + " colors"});
  }

  // outgoing[v][i] = dart carrying outgoing color i, or -1
  std::vector<std::vector<int>> outgoing(m.nv, std::vector<int>(d + 1, -1));
  for (int v = 0; v < m.nv; ++v) {
    auto darts = m.darts_at(v);
    if (!g.internal_vertex(v)) {
      for (int a : darts)
        if (s.colors[a]) out.push_back({"ii", "vertex", v, "external vertex has an outgoing arc"});
      continue;
    }
    std::vector<int> seq;
    bool ok = true;
    for (int a : darts) {
      uint64_t mask = s.colors[a];
      if (!mask) continue;
      int start = -1;
      for (int c = 1; c <= d; ++c)
        if ((mask & color_bit(c)) && !(mask & color_bit(wrap_color(c - 1, d)))) start = c;
      int len = std::popcount(mask);
      if (start < 0 || color_interval(start, wrap_color(start + len, d), d) != mask) {
        out.push_back({"iii", "dart", a, "outgoing colors are not consecutive"});
        ok = false;
        break;
      }
      for (int t = 0; t < len; ++t) {
        int c = wrap_color(start + t, d);
        seq.push_back(c);
        outgoing[v][c] = a;
      }
    }
    if (!ok) continue;
    bool cyclic = static_cast<int>(seq.size()) == d;
    for (size_t t = 0; cyclic && t < seq.size(); ++t)
      cyclic = seq[(t + 1) % seq.size()] == wrap_color(seq[t] + 1, d);
    if (!cyclic) {
      out.push_back({"iii", "vertex", v, "outgoing colors are not 1..d clockwise"});
      continue;
    }
    std::vector<int> pos(m.nd(), -1);
    for (int t = 0; t < static_cast<int>(darts.size()); ++t) pos[darts[t]] = t;
    int deg = static_cast<int>(darts.size());
    for (int a : darts)
      for (int c : mask_colors(s.colors[m.twin[a]], d)) {
        int lo = pos[outgoing[v][wrap_color(c + 1, d)]], hi = pos[outgoing[v][wrap_color(c - 1, d)]];
        // a dart carrying c-1, c, c+1 makes the sector a full turn
        int ra = (pos[a] - lo + deg) % deg, rh = lo == hi ? deg : (hi - lo + deg) % deg;
        if (!(ra > 0 && ra < rh))
          out.push_back({"iii", "dart", a, "incoming color " + str(c) + " outside its sector"});
      }
  }
  if (!out.empty()) return out;

  for (int i = 1; i <= d; ++i) {
    // 0 unvisited, 1 on the current walk, 2 known to reach a root
    std::vector<uint8_t> state(m.nv, 0);
    for (int v0 = 0; v0 < m.nv; ++v0) {
      if (!g.internal_vertex(v0) || state[v0]) continue;
      std::vector<int> walk;
      int v = v0;
      while (g.internal_vertex(v) && state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        v = m.head(outgoing[v][i]);
      }
      if (g.internal_vertex(v) && state[v] == 1) {
        out.push_back({"ii", "color", i, "color class has a cycle through vertex " + str(v)});
        return out;
      }
      if (!g.internal_vertex(v) && g.distinct) {
        int j = g.ext_index[v];
        if (j == i || j == wrap_color(i + 1, d))
          out.push_back({"ii", "color", i, "tree rooted at u_" + str(j)});
      }
      for (int w : walk) state[w] = 2;
    }
  }
  return out;
}

FracOrientation psi(const AngulationView& g, const CornerLabelling& l) {
  require_valid(g, l, "psi");
  const auto& m = g.map;
  FracOrientation o;
  o.k = g.d - 2;
  o.value.assign(m.nd(), -1);
  for (int a = 0; a < m.nd(); ++a)
    if (!g.ext_dart[a]) o.value[a] = jump(m, l, a);
  return o;
}

CornerLabelling psi_inverse(const AngulationView& g, const FracOrientation& o) {
  const auto& m = g.map;
  const int d = g.d;
  if (static_cast<int>(o.value.size()) != m.nd())
    throw Error("psi_inverse", "PropagationConflict", "orientation does not match the host");
  CornerLabelling l{d, std::vector<int>(m.nd(), 0)};
  auto omega = [&](int a) { return o.value[a] > 0 ? o.value[a] : 0; };
  std::deque<int> q;
  auto assign = [&](int c, int col) {
    col = wrap_color(col, d);
    if (l.color[c] == 0) {
      l.color[c] = col;
      q.push_back(c);
    } else if (l.color[c] != col) {
      throw Error("psi_inverse", "PropagationConflict",
                  "corner " + str(c) + " reached with colors " + str(l.color[c]) + " and " + str(col));
    }
  };
  // seed: the corner of u_1 inside the first inner face clockwise from the outer face
  assign(g.ext_darts[0], 1);
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    int col = l.color[c];
    int n = m.next_cw[c], p = m.prev_cw[c];
    assign(n, col + omega(n));
    assign(p, col - omega(c));
    if (m.corner_face(c) != m.outer_face()) {
      assign(m.prev_cw[m.twin[c]], col + 1);
      assign(m.twin[m.next_cw[c]], col - 1);
    }
  }
  auto v = validate_labelling(g, l);
  if (!v.empty())
    throw Error("psi_inverse", "PropagationConflict",
                "result violates axiom (" + v[0].axiom + ") at " + v[0].where + " " + str(v[0].id));
  return l;
}

ColorDecomposition phi(const AngulationView& g, const CornerLabelling& l) {
  require_valid(g, l, "phi");
  const auto& m = g.map;
  ColorDecomposition s{g.d, std::vector<uint64_t>(m.nd(), 0)};
  for (int a = 0; a < m.nd(); ++a)
    if (!g.ext_dart[a]) s.colors[a] = color_interval(l.color[m.prev_cw[a]], l.color[a], g.d);
  return s;
}

FracOrientation gamma(const AngulationView& g, const ColorDecomposition& s) {
  FracOrientation o;
  o.k = g.d - 2;
  o.value.assign(g.map.nd(), -1);
  for (int a = 0; a < g.map.nd(); ++a)
    if (!g.ext_dart[a]) o.value[a] = std::popcount(s.colors[a]);
  return o;
}

CornerLabelling phi_inverse(const AngulationView& g, const ColorDecomposition& s) {
  require_valid(g, s, "phi_inverse");
  CornerLabelling l;
  try {
    l = psi_inverse(g, gamma(g, s));
  } catch (const Error& e) {
    throw Error("phi_inverse", "InvalidDecomposition", e.what());
  }
  if (phi(g, l) != s) throw Error("phi_inverse", "InvalidDecomposition", "colors do not match the labelling");
  return l;
}

CornerLabelling labelling_push(const AngulationView& g, const CornerLabelling& l, const Cycle& c) {
  const auto& m = g.map;
  for (int t : c.twins)
    if (l.color[m.prev_cw[t]] == l.color[t])
      throw Error("labelling_push", "NotAdmissible", "counterclockwise arc " + str(t) + " separates equal colors");
  CornerLabelling r = l;
  for (int x = 0; x < m.nd(); ++x)
    if (c.inside[m.corner_face(x)]) r.color[x] = wrap_color(r.color[x] + 1, l.d);
  return r;
}

std::vector<int> forest_path_to_root(const AngulationView& g, const ColorDecomposition& s, int i, int v) {
  const auto& m = g.map;
  std::vector<int> path{v};
  std::vector<uint8_t> seen(m.nv, 0);
  seen[v] = 1;
  while (g.internal_vertex(v)) {
    int next = -1;
    for (int a : m.darts_at(v))
      if (s.colors[a] & color_bit(i)) next = a;
    if (next < 0) throw Error("forest", "InvalidDecomposition", "vertex " + str(v) + " has no outgoing color " + str(i));
    v = m.head(next);
    if (seen[v]) throw Error("forest", "InvalidDecomposition", "color " + str(i) + " has a cycle");
    seen[v] = 1;
    path.push_back(v);
  }
  return path;
}

}  // namespace sk
