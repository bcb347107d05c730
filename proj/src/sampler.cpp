#include "sk/sampler.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sk/corpus.hpp"
#include "sk/drawing.hpp"
#include "sk/duality.hpp"
#include "sk/even.hpp"
#include "sk/orientation.hpp"

namespace sk {

namespace {

using json = nlohmann::ordered_json;

std::string str(long long x) { return std::to_string(x); }

[[noreturn]] void fail(const std::string& kind, const std::string& detail) {
  throw Error("decode", kind, detail);
}

// Per dart: +i on the arc child -> parent of tree i (1 for T1', 2 for T2'), -i on its twin.
std::vector<int> tree_marks(const AngulationView& q, const ColorDecomposition& red) {
  const auto& m = q.map;
  std::vector<int> mark(m.nd(), 0);
  auto set = [&](int a, int i) { mark[a] = i, mark[m.twin[a]] = -i; };
  for (int a = 0; a < m.nd(); ++a)
    for (int i = 1; i <= 2; ++i)
      if (red.colors[a] & color_bit(i)) set(a, i);
  // u1u2 and u4u1 join T1', u2u3 and u3u4 join T2'
  set(m.twin[q.ext_darts[0]], 1);
  set(q.ext_darts[3], 1);
  set(q.ext_darts[1], 2);
  set(m.twin[q.ext_darts[2]], 2);
  return mark;
}

int sum(const std::vector<int>& v) {
  long long s = 0;
  for (int x : v) s += x;
  return s > (1 << 30) ? -1 : static_cast<int>(s);
}

}  // namespace

int faces_of(const EncodingTriple& t) { return sum(t.alpha); }

EncodingTriple encode(const AngulationView& q, const ColorDecomposition& s) {
  if (q.d != 4) throw Error("encode", "NotQuadrangulation", "d = " + str(q.d));
  auto red = lambda(q, s);
  const auto& m = q.map;
  auto mark = tree_marks(q, red);
  auto black = bipartition(m);
  const int u1 = q.ext[0];
  auto next_t1 = [&](int x) {
    do x = m.next_cw[x];
    while (std::abs(mark[x]) != 1);
    return x;
  };
  auto degree = [&](int v, int i) {
    int k = 0;
    for (int a : m.darts_at(v)) k += std::abs(mark[a]) == i;
    return k;
  };
  EncodingTriple t;
  auto discover = [&](int v) {
    if (black[v]) t.alpha.push_back(degree(v, 1));
    else t.beta.push_back(degree(v, 1)), t.gamma.push_back(degree(v, 2));
  };
  discover(u1);
  int a = q.ext_darts[0];
  do {
    if (mark[a] == -1) discover(m.head(a));
    a = next_t1(m.twin[a]);
  } while (a != q.ext_darts[0]);
  return t;
}

SchnyderPair decode(const EncodingTriple& t) {
  const auto &A = t.alpha, &B = t.beta, &C = t.gamma;
  for (auto* v : {&A, &B, &C})
    for (int x : *v)
      if (x < 1) fail("TreeReconstructionFailed", "entries must be positive");
  if (A.empty() || B.empty() || B.size() != C.size())
    fail("TreeReconstructionFailed", "need |alpha| >= 1 and |beta| = |gamma| >= 1");
  const int n = sum(A);
  if (n < 2 || static_cast<int>(A.size() + B.size()) - 1 != n || sum(B) != n)
    fail("TreeReconstructionFailed", "lengths and sums do not describe a tree with n edges");
  if (sum(C) != n) fail("ClosureFailed", "sum of gamma differs from n");

  // T1' in preorder; vertex 0 is u1.
  std::vector<uint8_t> black;
  std::vector<int> need, parent, rank;  // rank among vertices of the same color
  std::vector<std::vector<int>> kids;
  size_t ai = 0, bi = 0;
  auto add = [&](bool b, int p) {
    int deg = b ? A[ai++] : B[bi++];
    black.push_back(b);
    need.push_back(p < 0 ? deg : deg - 1);
    parent.push_back(p);
    rank.push_back(static_cast<int>(b ? ai : bi) - 1);
    kids.emplace_back();
    return static_cast<int>(black.size()) - 1;
  };
  add(true, -1);
  std::vector<int> st{0};
  while (!st.empty()) {
    int v = st.back();
    if (static_cast<int>(kids[v].size()) == need[v]) {
      st.pop_back();
      continue;
    }
    bool b = !black[v];
    if (b ? ai == A.size() : bi == B.size()) fail("TreeReconstructionFailed", "degree sequence runs out");
    int c = add(b, v);
    kids[v].push_back(c);
    st.push_back(c);
  }
  if (ai != A.size() || bi != B.size()) fail("TreeReconstructionFailed", "degree sequence not consumed");
  if (kids[0].size() < 2) fail("ClosureFailed", "root has fewer than two children");

  // Darts 2e (child -> parent) and 2e+1; vertex n+1 is u3.
  const int nv = n + 2, u3 = n + 1;
  std::vector<int> tw, org;
  auto edge = [&](int from, int to) {
    int a = static_cast<int>(tw.size());
    tw.push_back(a + 1), tw.push_back(a);
    org.push_back(from), org.push_back(to);
    return a;
  };
  std::vector<int> up(nv, -1);  // T1' arc child -> parent
  for (int v = 1; v < nv - 1; ++v) up[v] = edge(v, parent[v]);
  std::vector<uint8_t> t2(2 * (2 * n), 0);  // dart is the T2' arc child -> parent
  std::vector<std::vector<int>> at_black(nv), at_white(nv);

  // Contour closure: whites offer their T2' arcs at the last visit, blacks claim them at the first.
  struct Open {
    int w, slot;
  };
  std::vector<Open> open;
  auto first_visit = [&](int b) {
    if (b == 0) return;
    while (!open.empty() && open.back().slot == 0) {
      int w = open.back().w;
      open.pop_back();
      int a = edge(w, b);
      t2[a] = 1;
      at_white[w][0] = a;
      at_black[b].push_back(tw[a]);
    }
    if (open.empty()) fail("ClosureFailed", "black vertex finds no parent");
    auto [w, slot] = open.back();
    open.pop_back();
    int a = edge(b, w);
    t2[a] = 1;
    at_white[w][slot] = tw[a];
    at_black[b].push_back(a);
  };
  auto last_visit = [&](int w) {
    int g = C[rank[w]];
    at_white[w].assign(g, -1);
    for (int k = 0; k < g; ++k) open.push_back({w, k});
  };
  std::vector<std::pair<int, size_t>> walk{{0, 0}};
  while (!walk.empty()) {
    auto& [v, i] = walk.back();
    if (i == 0 && black[v]) first_visit(v);
    if (i < kids[v].size()) {
      int c = kids[v][i++];
      walk.push_back({c, 0});
      continue;
    }
    if (!black[v]) last_visit(v);
    walk.pop_back();
  }
  std::vector<int> rot_u3;
  while (!open.empty()) {
    auto [w, slot] = open.back();
    open.pop_back();
    if (slot != 0) fail("ClosureFailed", "unmatched arc toward a black vertex");
    int a = edge(w, u3);
    t2[a] = 1;
    at_white[w][0] = a;
    rot_u3.push_back(tw[a]);
  }

  std::vector<std::vector<int>> rot(nv);
  for (int v = 0; v < nv - 1; ++v) {
    if (v != 0) rot[v].push_back(up[v]);
    if (black[v]) rot[v].insert(rot[v].end(), at_black[v].begin(), at_black[v].end());
    for (int c : kids[v]) rot[v].push_back(tw[up[c]]);
    if (!black[v]) rot[v].insert(rot[v].end(), at_white[v].begin(), at_white[v].end());
  }
  rot[u3] = rot_u3;

  SchnyderPair out;
  try {
    auto m = build_map(rot, tw, tw[up[kids[0].front()]]);
    out.q = as_angulation(m, 4);
  } catch (const Error& e) {
    fail("ValidationFailed", std::string("not a quadrangulation: ") + e.what());
  }
  const auto& q = out.q;
  const auto& m = q.map;
  if (q.ext[1] != kids[0].front() || q.ext[2] != u3 || q.ext[3] != kids[0].back())
    fail("ValidationFailed", "outer face is not u1 u2 u3 u4");
  std::vector<int> seen(nv, -1);
  for (int v = 0; v < nv; ++v)
    for (int a : m.darts_at(v)) {
      if (seen[m.head(a)] == v) fail("ValidationFailed", "multiple edge");
      seen[m.head(a)] = v;
    }
  ColorDecomposition red{2, std::vector<uint64_t>(m.nd(), 0)};
  for (int a = 0; a < m.nd(); ++a) {
    if (q.ext_dart[a] || a >= static_cast<int>(t2.size())) continue;
    if (a % 2 == 0 && a < 2 * (nv - 2)) red.colors[a] = color_bit(1);
    else if (t2[a]) red.colors[a] = color_bit(2);
  }
  if (!validate_reduced_schnyder(q, red).empty()) fail("ValidationFailed", "trees do not form a reduced decomposition");
  out.s = lambda_inverse(q, red);
  if (!validate_decomposition(q, out.s).empty() || !is_even_schnyder(q, out.s))
    fail("ValidationFailed", "not an even Schnyder decomposition");
  return out;
}

std::vector<int64_t> pair_key(const AngulationView& q, const ColorDecomposition& s) {
  const auto& m = q.map;
  auto order = canonical_order(m, m.outer_dart);
  std::vector<int> label(m.nd(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) label[order[i]] = i;
  std::vector<int64_t> key;
  key.reserve(3 * order.size());
  for (int a : order) {
    key.push_back(label[m.next_cw[a]]);
    key.push_back(label[m.twin[a]]);
    key.push_back(static_cast<int64_t>(s.colors[a]));
  }
  return key;
}

std::mt19937_64 derived_stream(uint64_t seed, uint64_t index) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

int geometric2(std::mt19937_64& rng) {
  int k = 0;
  for (;;) {
    uint64_t x = rng();
    if (x) return k + std::countr_zero(x) + 1;
    k += 64;
  }
}

EncodingTriple sample_geometric_triple(int n, std::mt19937_64& rng) {
  EncodingTriple t;
  int total = 0;
  while (total < n) total += t.alpha.emplace_back(geometric2(rng));
  int s = n - static_cast<int>(t.alpha.size());
  for (int i = 0; i <= s; ++i) t.beta.push_back(geometric2(rng));
  for (int i = 0; i <= s; ++i) t.gamma.push_back(geometric2(rng));
  return t;
}

SampleResult rejection_sample(int n, std::mt19937_64& rng, long long max_attempts) {
  if (n < 2) throw Error("rejection_sample", "InvalidArgument", "n must be at least 2");
  SampleResult res;
  EncodingTriple t;
  while (res.attempts < max_attempts) {
    ++res.attempts;
    // Same draws as sample_geometric_triple; hopeless triples are dropped early.
    t.alpha.clear(), t.beta.clear(), t.gamma.clear();
    int total = 0;
    while (total < n) total += t.alpha.emplace_back(geometric2(rng));
    if (total != n) continue;
    int s = n - static_cast<int>(t.alpha.size());
    total = 0;
    for (int i = 0; i <= s; ++i) total += t.beta.emplace_back(geometric2(rng));
    if (total != n) continue;
    total = 0;
    for (int i = 0; i <= s; ++i) total += t.gamma.emplace_back(geometric2(rng));
    if (total != n) continue;
    try {
      res.pair = decode(t);
    } catch (const Error&) {
      continue;
    }
    res.triple = t;
    return res;
  }
  throw Error("rejection_sample", "RejectionLimitExceeded",
              "no valid triple after " + str(max_attempts) + " attempts at n = " + str(n));
}

PartFull part_full_counts(const EncodingTriple& t) {
  PartFull pf;
  for (size_t i = 0; i < t.beta.size() && i < t.gamma.size(); ++i) {
    if (t.beta[i] == 2 && t.gamma[i] == 2) ++pf.part;
    else if (t.beta[i] >= 2 && t.gamma[i] >= 2) ++pf.full;
  }
  return pf;
}

PartFull part_full_counts(const AngulationView& q, const ColorDecomposition& s, bool want_black) {
  auto red = lambda(q, s);
  const auto& m = q.map;
  auto mark = tree_marks(q, red);
  auto black = bipartition(m);
  PartFull pf;
  for (int v = 0; v < m.nv; ++v) {
    if (!q.internal_vertex(v) || static_cast<bool>(black[v]) != want_black) continue;
    int d1 = 0, d2 = 0;
    for (int a : m.darts_at(v)) d1 += std::abs(mark[a]) == 1, d2 += std::abs(mark[a]) == 2;
    if (d1 == 2 && d2 == 2) ++pf.part;
    else if (d1 >= 2 && d2 >= 2) ++pf.full;
  }
  return pf;
}

void for_each_pair(int n, const std::function<void(const SchnyderPair&)>& cb, EnumerateOptions opt) {
  if (n < 2) throw Error("enumerate_pairs", "InvalidArgument", "n must be at least 2");
  std::size_t count = 0;
  std::set<std::vector<int64_t>> seen;
  for_each_angulation(4, n - 1, true, [&](const PlaneMap& m) {
    auto q = as_angulation(m, 4);
    for (auto& o : lattice_enumerate(q, {opt.cap, 1})) {
      if (!is_even(o)) continue;
      SchnyderPair p{q, phi(q, psi_inverse(q, o))};
      if (!seen.insert(pair_key(p.q, p.s)).second) continue;
      if (++count > opt.cap)
        throw Error("enumerate_pairs", "CapExceeded", "more than " + str(opt.cap) + " pairs at n = " + str(n));
      cb(p);
    }
  });
}

std::vector<SchnyderPair> enumerate_pairs(int n, EnumerateOptions opt) {
  std::vector<SchnyderPair> out;
  for_each_pair(n, [&](const SchnyderPair& p) { out.push_back(p); }, opt);
  return out;
}

namespace {

SampleStats::Summary summarize(const std::vector<double>& xs) {
  SampleStats::Summary s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= xs.size();
  if (xs.size() > 1) {
    double v = 0;
    for (double x : xs) v += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(v / (xs.size() - 1));
  }
  s.half_width = 1.96 * s.stddev / std::sqrt(static_cast<double>(xs.size()));
  return s;
}

template <class T>
std::vector<double> as_double(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

SampleStats concentration_experiment(int n, int sample_count, uint64_t seed, int jobs, long long max_attempts) {
  if (n < 3) throw Error("concentration_experiment", "InvalidArgument", "n must be at least 3");
  SampleStats st;
  st.n = n;
  st.samples = sample_count;
  st.seed = seed;
  const size_t k = sample_count;
  st.sample_attempts.assign(k, 0);
  for (auto* v : {&st.part_counts, &st.full_counts, &st.reduced_width, &st.reduced_height,
                  &st.white_part_from_triple, &st.white_full_from_triple})
    v->assign(k, 0);
  std::vector<int> mismatch(k, 0);
  std::vector<std::string> errors(k);

  auto run = [&](size_t i) {
    try {
      auto rng = derived_stream(seed, i);
      auto res = rejection_sample(n, rng, max_attempts);
      st.sample_attempts[i] = res.attempts;
      auto r = dual_view(res.pair.q);
      auto t = chi(res.pair.q, r, res.pair.s);
      auto fc = classify_faces(r, t, place_by_equatorial_lines(r, t));
      st.part_counts[i] = fc.count(FaceClass::partly_reducible);
      st.full_counts[i] = fc.count(FaceClass::fully_reducible);
      auto rc = balanced_reduction_choice(fc);
      st.reduced_width[i] = (n - 1) - static_cast<int>(rc.X.size());
      st.reduced_height[i] = (n - 1) - static_cast<int>(rc.Y.size());
      auto pf = part_full_counts(res.triple);
      st.white_part_from_triple[i] = pf.part;
      st.white_full_from_triple[i] = pf.full;
      PartFull geo;
      for (auto& f : fc.faces)
        if (!f.black) {
          geo.part += f.cls == FaceClass::partly_reducible;
          geo.full += f.cls == FaceClass::fully_reducible;
        }
      mismatch[i] = !(geo == pf);
    } catch (const Error& e) {
      errors[i] = e.kind() + ": " + e.what();
      st.sample_attempts[i] = -1;
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (size_t i = j; i < k; i += jobs) run(i);
    });
  for (auto& th : pool) th.join();
  for (size_t i = 0; i < k; ++i)
    if (!errors[i].empty()) throw Error("concentration_experiment", "SampleFailed", "sample " + str(i) + ": " + errors[i]);

  st.accepted = sample_count;
  for (size_t i = 0; i < k; ++i) st.attempts += st.sample_attempts[i], st.classification_mismatches += mismatch[i];
  st.part = summarize(as_double(st.part_counts));
  st.full = summarize(as_double(st.full_counts));
  st.width = summarize(as_double(st.reduced_width));
  st.height = summarize(as_double(st.reduced_height));
  std::vector<double> side(k);
  for (size_t i = 0; i < k; ++i) side[i] = (st.reduced_width[i] + st.reduced_height[i]) / 2.0;
  st.side = summarize(side);
  return st;
}

std::string stats_json(const SampleStats& st) {
  auto sum_json = [&](const SampleStats::Summary& s) {
    return json{{"mean", s.mean}, {"stddev", s.stddev}, {"ci95_half_width", s.half_width},
                {"mean_over_n", s.mean / st.n}};
  };
  json j;
  j["n"] = st.n;
  j["seed"] = st.seed;
  j["samples"] = st.samples;
  j["accepted"] = st.accepted;
  j["attempts"] = st.attempts;
  j["classification_mismatches"] = st.classification_mismatches;
  j["summary"] = {{"part", sum_json(st.part)}, {"full", sum_json(st.full)}, {"reduced_width", sum_json(st.width)},
                  {"reduced_height", sum_json(st.height)}, {"reduced_side", sum_json(st.side)}};
  j["per_sample"] = {{"attempts", st.sample_attempts}, {"part", st.part_counts}, {"full", st.full_counts},
                     {"reduced_width", st.reduced_width}, {"reduced_height", st.reduced_height},
                     {"white_part_from_triple", st.white_part_from_triple},
                     {"white_full_from_triple", st.white_full_from_triple}};
  return j.dump(2) + "\n";
}

std::string stats_csv(const SampleStats& st) {
  std::ostringstream os;
  os << "index,attempts,part,full,reduced_width,reduced_height,white_part_from_triple,white_full_from_triple\n";
  for (size_t i = 0; i < st.part_counts.size(); ++i)
    os << i << ',' << st.sample_attempts[i] << ',' << st.part_counts[i] << ',' << st.full_counts[i] << ','
       << st.reduced_width[i] << ',' << st.reduced_height[i] << ',' << st.white_part_from_triple[i] << ','
       << st.white_full_from_triple[i] << '\n';
  return os.str();
}

std::string triple_json(const EncodingTriple& t) {
  return json{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}}.dump() + "\n";
}

EncodingTriple parse_triple_json(const std::string& text) {
  try {
    auto j = json::parse(text);
    EncodingTriple t;
    j.at("alpha").get_to(t.alpha);
    j.at("beta").get_to(t.beta);
    j.at("gamma").get_to(t.gamma);
    return t;
  } catch (const json::exception& e) {
    throw Error("parse_triple", "InvalidTriple", e.what());
  }
}

}  // namespace sk
