#include "sk/orientation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

namespace sk {

namespace {

struct Dinic {
  struct Arc {
    int to, rev;
    long long cap;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, it;

  explicit Dinic(int n) : g(n), level(n), it(n) {}

  // Returns the index of the forward arc in g[u].
  int add(int u, int v, long long c) {
    g[u].push_back({v, static_cast<int>(g[v].size()), c});
    g[v].push_back({u, static_cast<int>(g[u].size()) - 1, 0});
    return static_cast<int>(g[u].size()) - 1;
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::deque<int> q{s};
    level[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto& a : g[u])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push_back(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int u, int t, long long f) {
    if (u == t) return f;
    for (int& i = it[u]; i < static_cast<int>(g[u].size()); ++i) {
      auto& a = g[u][i];
      if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
      long long got = dfs(a.to, t, std::min(f, a.cap));
      if (got > 0) {
        a.cap -= got;
        g[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  long long run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) flow += f;
    }
    return flow;
  }

  std::vector<uint8_t> reachable(int s) const {
    std::vector<uint8_t> seen(g.size(), 0);
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (auto& a : g[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          st.push_back(a.to);
        }
    }
    return seen;
  }
};

// Connected component (through subset edges) of the set T with alpha(C) < k |E(C)|.
std::vector<int> deficient_component(const PlaneMap& m, const std::vector<uint8_t>& in_subset,
                                     const std::vector<int>& alpha, int k,
                                     const std::vector<uint8_t>& in_t) {
  std::vector<int> comp(m.nv, -1);
  for (int s = 0; s < m.nv; ++s) {
    if (!in_t[s] || comp[s] >= 0) continue;
    std::vector<int> members{s}, st{s};
    comp[s] = s;
    long long a_sum = 0, edges = 0;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      a_sum += alpha[u];
      for (int a : m.darts_at(u)) {
        if (!in_subset[m.edge[a]]) continue;
        int w = m.head(a);
        if (!in_t[w]) continue;
        if (a < m.twin[a]) ++edges;
        if (comp[w] < 0) {
          comp[w] = s;
          members.push_back(w);
          st.push_back(w);
        }
      }
    }
    if (a_sum < k * edges) {
      std::sort(members.begin(), members.end());
      return members;
    }
  }
  return {};
}

std::string key_of(const FracOrientation& o) {
  std::string s;
  s.reserve(o.value.size());
  for (int v : o.value) s.push_back(static_cast<char>(v));
  return s;
}

}  // namespace

FracOrientation compute_alpha_k_orientation(const PlaneMap& m, const std::vector<uint8_t>& in_subset,
                                            const std::vector<int>& alpha, int k) {
  const char* stage = "orientation";
  std::vector<int> sub_edges;
  for (int e = 0; e < m.ne(); ++e)
    if (in_subset[e]) sub_edges.push_back(e);
  long long need = static_cast<long long>(k) * sub_edges.size();
  long long total = std::accumulate(alpha.begin(), alpha.end(), 0LL);

  int src = m.nv + static_cast<int>(sub_edges.size()), snk = src + 1;
  Dinic net(snk + 1);
  for (int v = 0; v < m.nv; ++v)
    if (alpha[v] > 0) net.add(src, v, alpha[v]);
  // arc index of origin(a) -> edge node, per dart
  std::vector<int> arc_of(m.nd(), -1);
  for (int i = 0; i < static_cast<int>(sub_edges.size()); ++i) {
    int a = m.edart[sub_edges[i]];
    int node = m.nv + i;
    arc_of[a] = net.add(m.origin[a], node, k);
    arc_of[m.twin[a]] = net.add(m.head(a), node, k);
    net.add(node, snk, k);
  }
  long long flow = net.run(src, snk);

  if (flow < need || total != need) {
    std::vector<uint8_t> in_t(m.nv, 0);
    if (flow < need) {
      auto seen = net.reachable(src);
      for (int v = 0; v < m.nv; ++v) in_t[v] = !seen[v];
    } else {
      std::fill(in_t.begin(), in_t.end(), 1);
    }
    auto subset = deficient_component(m, in_subset, alpha, k, in_t);
    if (subset.empty()) {
      subset.resize(m.nv);
      std::iota(subset.begin(), subset.end(), 0);
    }
    throw NoSolution(stage,
                     "no orientation: outdegree total " + std::to_string(total) + ", max flow " +
                         std::to_string(flow) + ", required " + std::to_string(need),
                     std::move(subset));
  }

  FracOrientation o;
  o.k = k;
  o.value.assign(m.nd(), -1);
  for (int a = 0; a < m.nd(); ++a) {
    if (arc_of[a] < 0) continue;
    auto& arc = net.g[m.origin[a]][arc_of[a]];
    o.value[a] = static_cast<int>(k - arc.cap);
  }
  return o;
}

namespace {

FracOrientation angulation_orientation(const AngulationView& g, int alpha_int, int k) {
  const auto& m = g.map;
  std::vector<uint8_t> in_subset(m.ne(), 0);
  for (int e = 0; e < m.ne(); ++e) in_subset[e] = !g.ext_dart[m.edart[e]];
  std::vector<int> alpha(m.nv, 0);
  for (int v = 0; v < m.nv; ++v)
    if (g.internal_vertex(v)) alpha[v] = alpha_int;
  return compute_alpha_k_orientation(m, in_subset, alpha, k);
}

}  // namespace

FracOrientation compute_dd2_orientation(const AngulationView& g) {
  try {
    return angulation_orientation(g, g.d, g.d - 2);
  } catch (const NoSolution& e) {
    std::vector<int> cyc;
    int gi = 0;
    try {
      cyc = shortest_cycle(g.map);
      gi = static_cast<int>(cyc.size());
    } catch (const Error&) {
    }
    throw GirthTooSmall("orientation",
                        "girth " + std::to_string(gi) + " < d = " + std::to_string(g.d) + "; " + e.what(),
                        std::move(cyc), e.subset);
  }
}

FracOrientation compute_p_p1_orientation(const AngulationView& g) {
  if (g.d % 2 != 0) throw Error("orientation", "OddD", "d = " + std::to_string(g.d) + " is odd");
  int p = g.d / 2;
  return angulation_orientation(g, p, p - 1);
}

bool is_even(const FracOrientation& o) {
  return std::all_of(o.value.begin(), o.value.end(), [](int v) { return v < 0 || v % 2 == 0; });
}

FracOrientation scaled(const FracOrientation& o, int factor) {
  FracOrientation r = o;
  r.k *= factor;
  for (int& v : r.value)
    if (v >= 0) v *= factor;
  return r;
}

std::vector<int> outdegrees(const PlaneMap& m, const FracOrientation& o) {
  std::vector<int> out(m.nv, 0);
  for (int a = 0; a < m.nd(); ++a)
    if (o.value[a] > 0) out[m.origin[a]] += o.value[a];
  return out;
}

std::string check_dd2(const AngulationView& g, const FracOrientation& o) {
  const auto& m = g.map;
  if (static_cast<int>(o.value.size()) != m.nd()) return "value table has wrong size";
  if (o.k != g.d - 2) return "k differs from d-2";
  for (int a = 0; a < m.nd(); ++a) {
    int v = o.value[a];
    if (g.ext_dart[a]) {
      if (v != -1) return "external dart " + std::to_string(a) + " carries a value";
      continue;
    }
    if (v < 0 || v > o.k) return "dart " + std::to_string(a) + " out of range";
    if (v + o.value[m.twin[a]] != o.k) return "edge of dart " + std::to_string(a) + " does not sum to k";
  }
  auto out = outdegrees(m, o);
  for (int v = 0; v < m.nv; ++v) {
    int want = g.internal_vertex(v) ? g.d : 0;
    if (out[v] != want) return "vertex " + std::to_string(v) + " has outdegree " + std::to_string(out[v]);
  }
  return {};
}

Cycle make_cycle(const PlaneMap& m, std::vector<int> darts) {
  std::vector<uint8_t> on_cycle(m.ne(), 0);
  for (int a : darts) on_cycle[m.edge[a]] = 1;
  auto fill = [&](int start) {
    std::vector<uint8_t> in(m.nf, 0);
    std::vector<int> st{start};
    in[start] = 1;
    while (!st.empty()) {
      int f = st.back();
      st.pop_back();
      for (int a : m.face_darts(f)) {
        if (on_cycle[m.edge[a]]) continue;
        int h = m.face[m.twin[a]];
        if (!in[h]) {
          in[h] = 1;
          st.push_back(h);
        }
      }
    }
    return in;
  };
  auto in = fill(m.face[m.twin[darts[0]]]);
  if (in[m.outer_face()]) {
    std::reverse(darts.begin(), darts.end());
    for (int& a : darts) a = m.twin[a];
    in = fill(m.face[m.twin[darts[0]]]);
  }
  std::vector<int> twins;
  for (int a : darts) twins.push_back(m.twin[a]);
  return {std::move(darts), std::move(twins), std::move(in)};
}

std::vector<Cycle> d_cycles(const AngulationView& g) {
  const auto& m = g.map;
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<uint8_t> used(m.nv, 0);
  std::function<void(int, int)> dfs = [&](int s, int u) {
    for (int a : m.darts_at(u)) {
      int w = m.head(a);
      if (!g.internal_vertex(w) || w < s) continue;
      if (w == s) {
        if (static_cast<int>(path.size()) + 1 == g.d && m.edge[path[0]] < m.edge[a]) {
          auto cyc = path;
          cyc.push_back(a);
          out.push_back(make_cycle(m, std::move(cyc)));
        }
        continue;
      }
      if (used[w] || static_cast<int>(path.size()) + 1 >= g.d) continue;
      used[w] = 1;
      path.push_back(a);
      dfs(s, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < m.nv; ++s) {
    if (!g.internal_vertex(s)) continue;
    used[s] = 1;
    dfs(s, s);
    used[s] = 0;
  }
  return out;
}

bool is_ccw_circuit(const FracOrientation& o, const Cycle& c) {
  return std::all_of(c.darts.begin(), c.darts.end(), [&](int a) { return o.value[a] >= 0 && o.value[a] < o.k; });
}

bool is_cw_circuit(const FracOrientation& o, const Cycle& c) {
  return std::all_of(c.darts.begin(), c.darts.end(), [&](int a) { return o.value[a] > 0; });
}

std::vector<Cycle> find_ccw_d_circuits(const AngulationView& g, const FracOrientation& o) {
  std::vector<Cycle> out;
  for (auto& c : d_cycles(g))
    if (is_ccw_circuit(o, c)) out.push_back(std::move(c));
  return out;
}

FracOrientation push_cycle(const FracOrientation& o, const Cycle& c) {
  if (!is_ccw_circuit(o, c)) throw Error("push", "NotACircuit", "cycle is not a counterclockwise circuit");
  FracOrientation r = o;
  for (size_t i = 0; i < c.darts.size(); ++i) {
    ++r.value[c.darts[i]];
    --r.value[c.twins[i]];
  }
  return r;
}

FracOrientation unpush_cycle(const FracOrientation& o, const Cycle& c) {
  if (!is_cw_circuit(o, c)) throw Error("push", "NotACircuit", "cycle is not a clockwise circuit");
  FracOrientation r = o;
  for (size_t i = 0; i < c.darts.size(); ++i) {
    --r.value[c.darts[i]];
    ++r.value[c.twins[i]];
  }
  return r;
}

namespace {

FracOrientation minimize(const std::vector<Cycle>& cycles, FracOrientation o) {
  for (bool moved = true; moved;) {
    moved = false;
    for (auto& c : cycles)
      if (is_ccw_circuit(o, c)) {
        o = push_cycle(o, c);
        moved = true;
      }
  }
  return o;
}

}  // namespace

FracOrientation minimal_orientation(const AngulationView& g, const FracOrientation& start) {
  return minimize(d_cycles(g), start);
}

FracOrientation minimal_orientation(const AngulationView& g) {
  return minimal_orientation(g, compute_dd2_orientation(g));
}

std::vector<FracOrientation> lattice_enumerate(const AngulationView& g, LatticeOptions opt) {
  auto cycles = d_cycles(g);
  std::vector<FracOrientation> all{minimize(cycles, compute_dd2_orientation(g))};
  std::unordered_set<std::string> seen{key_of(all[0])};
  int jobs = std::max(1, opt.jobs);
  size_t level_begin = 0;
  while (level_begin < all.size()) {
    size_t level_end = all.size();
    size_t count = level_end - level_begin;
    std::vector<std::vector<FracOrientation>> succ(count);
    auto work = [&](size_t from, size_t to) {
      for (size_t i = from; i < to; ++i)
        for (auto& c : cycles)
          if (is_cw_circuit(all[level_begin + i], c)) succ[i].push_back(unpush_cycle(all[level_begin + i], c));
    };
    int t = static_cast<int>(std::min<size_t>(jobs, count));
    if (t <= 1) {
      work(0, count);
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < t; ++j) pool.emplace_back(work, count * j / t, count * (j + 1) / t);
      for (auto& th : pool) th.join();
    }
    for (auto& list : succ)
      for (auto& o : list)
        if (seen.insert(key_of(o)).second) {
          if (all.size() >= opt.cap)
            throw Error("lattice", "ExplosionGuard", "more than " + std::to_string(opt.cap) + " orientations");
          all.push_back(std::move(o));
        }
    level_begin = level_end;
  }
  return all;
}

std::size_t brute_force_count(const AngulationView& g, std::vector<FracOrientation>* all) {
  const auto& m = g.map;
  int k = g.d - 2;
  std::vector<int> edges;
  for (int e = 0; e < m.ne(); ++e)
    if (!g.ext_dart[m.edart[e]]) edges.push_back(e);
  std::vector<int> need(m.nv, 0), left(m.nv, 0);
  for (int v = 0; v < m.nv; ++v) need[v] = g.internal_vertex(v) ? g.d : 0;
  for (int e : edges) {
    int a = m.edart[e];
    ++left[m.origin[a]];
    ++left[m.head(a)];
  }
  FracOrientation o;
  o.k = k;
  o.value.assign(m.nd(), -1);
  std::size_t count = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == edges.size()) {
      ++count;
      if (all) all->push_back(o);
      return;
    }
    int a = m.edart[edges[i]], u = m.origin[a], w = m.head(a);
    --left[u];
    --left[w];
    for (int x = 0; x <= k; ++x) {
      need[u] -= x;
      need[w] -= k - x;
      bool ok = need[u] >= 0 && need[w] >= 0 && need[u] <= k * left[u] && need[w] <= k * left[w];
      if (ok) {
        o.value[a] = x;
        o.value[m.twin[a]] = k - x;
        rec(i + 1);
      }
      need[u] += x;
      need[w] += k - x;
    }
    ++left[u];
    ++left[w];
  };
  rec(0);
  return count;
}

}  // namespace sk
