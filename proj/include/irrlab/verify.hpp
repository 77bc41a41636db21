#pragma once

// Theorem checkers and exhaustive scans. Every pass/fail decision is made in
// exact integer arithmetic; floating point only appears in slope fits.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "irrlab/constructions.hpp"
#include "irrlab/error.hpp"
#include "irrlab/graph.hpp"
#include "irrlab/graph_io.hpp"
#include "irrlab/measures.hpp"
#include "irrlab/trees.hpp"

namespace irrlab {

using BigInt = boost::multiprecision::cpp_int;
using Json = nlohmann::ordered_json;

inline constexpr int kDefaultLabeledGraphCap = 7;
inline constexpr int kDefaultExactPathCap = 12;

// ---------------------------------------------------------------------------
// Greedy increasing subsequences along walks.

/// A walk from a minimum-degree vertex to a maximum-degree vertex, with the
/// degrees recorded by keeping a running maximum and appending only strictly
/// larger values. r is the number of appended values after the first.
struct GreedyWalkResult {
  std::vector<Vertex> walk;
  int r = 0;
  std::vector<int> subsequence;
  std::vector<Vertex> representatives;  // vertex at which each value was recorded
};

/// Recomputes subsequence and representatives of a walk.
inline GreedyWalkResult replay_greedy_walk(const Graph& g, const std::vector<Vertex>& walk) {
  GreedyWalkResult res;
  res.walk = walk;
  for (Vertex v : walk) {
    const int d = g.degree(v);
    if (res.subsequence.empty() || d > res.subsequence.back()) {
      res.subsequence.push_back(d);
      res.representatives.push_back(v);
    }
  }
  res.r = res.subsequence.empty() ? 0 : static_cast<int>(res.subsequence.size()) - 1;
  return res;
}

/// Checks the stored result against a replay of its walk, plus the walk's
/// endpoints and adjacency.
inline bool replay_consistent(const Graph& g, const GreedyWalkResult& res) {
  if (res.walk.empty()) return false;
  for (std::size_t i = 0; i + 1 < res.walk.size(); ++i)
    if (!g.has_edge(res.walk[i], res.walk[i + 1])) return false;
  const DegreeVector d = degrees(g);
  const auto replay = replay_greedy_walk(g, res.walk);
  return replay.subsequence == res.subsequence && replay.r == res.r &&
         replay.representatives == res.representatives && res.subsequence.front() == d.min() &&
         res.subsequence.back() == d.max();
}

/// Minimises r over all walks from a min-degree vertex to a max-degree
/// vertex by shortest path over (vertex, threshold) states. Ties: fewer edges,
/// then the lexicographically smallest vertex sequence. Throws Disconnected.
inline GreedyWalkResult min_greedy_walk(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty graph");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "min_greedy_walk needs a connected graph");
  const DegreeVector d = degrees(g);
  const int delta = d.min();
  const int Delta = d.max();

  std::vector<int> levels = d.values;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t T = levels.size();
  auto level_of = [&](int degree) {
    return static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), degree) - levels.begin());
  };
  auto state = [&](std::size_t v, std::size_t t) { return v * T + t; };
  auto step = [&](std::size_t t, Vertex w) -> std::pair<std::size_t, int> {
    const int dw = d[static_cast<std::size_t>(w)];
    if (dw > levels[t]) return {level_of(dw), 1};
    return {t, 0};
  };

  using Cost = std::pair<int, int>;  // (threshold increases, edges)
  constexpr Cost kInf{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  std::vector<Cost> dist(n * T, kInf);
  std::vector<std::vector<std::pair<std::size_t, int>>> reverse(n * T);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t t = level_of(d[v]); t < T; ++t) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        auto [nt, inc] = step(t, w);
        reverse[state(static_cast<std::size_t>(w), nt)].emplace_back(state(v, t), inc);
      }
    }
  }

  using Item = std::pair<Cost, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (std::size_t v = 0; v < n; ++v) {
    dist[state(v, T - 1)] = {0, 0};
    pq.push({{0, 0}, state(v, T - 1)});
  }
  while (!pq.empty()) {
    auto [c, s] = pq.top();
    pq.pop();
    if (c != dist[s]) continue;
    for (auto [prev, inc] : reverse[s]) {
      Cost nc{c.first + inc, c.second + 1};
      if (nc < dist[prev]) {
        dist[prev] = nc;
        pq.push({nc, prev});
      }
    }
  }

  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (d[v] != delta) continue;
    if (start == n || dist[state(v, 0)] < dist[state(start, 0)]) start = v;
  }
  std::vector<Vertex> walk{static_cast<Vertex>(start)};
  std::size_t v = start;
  std::size_t t = 0;
  while (levels[t] != Delta) {
    const Cost here = dist[state(v, t)];
    bool moved = false;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      auto [nt, inc] = step(t, w);
      const Cost there = dist[state(static_cast<std::size_t>(w), nt)];
      if (there != kInf && Cost{there.first + inc, there.second + 1} == here) {
        walk.push_back(w);
        v = static_cast<std::size_t>(w);
        t = nt;
        moved = true;
        break;
      }
    }
    if (!moved) throw Error(ErrorKind::InvalidArgument, "walk reconstruction failed");
  }
  return replay_greedy_walk(g, walk);
}

/// Exact minimum over simple paths (exponential; n <= cap). Same objective and
/// tie-breaking as min_greedy_walk.
inline GreedyWalkResult min_greedy_simple_path(const Graph& g, int cap = kDefaultExactPathCap) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty graph");
  if (static_cast<int>(n) > cap) throw Error(ErrorKind::CapExceeded, "exact path search cap " + std::to_string(cap));
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "min_greedy_simple_path needs a connected graph");
  const DegreeVector d = degrees(g);
  const int delta = d.min();
  const int Delta = d.max();
  if (delta == Delta) return replay_greedy_walk(g, {0});

  std::vector<Vertex> best;
  int best_r = std::numeric_limits<int>::max();
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);

  auto dfs = [&](auto&& self, Vertex u, int threshold, int r) -> void {
    const int len = static_cast<int>(path.size()) - 1;
    if (r > best_r || (r == best_r && len >= static_cast<int>(best.size()) - 1)) return;
    if (d[static_cast<std::size_t>(u)] == Delta) {
      best = path;
      best_r = r;
      return;
    }
    for (Vertex w : g.neighbors(u)) {
      if (on_path[static_cast<std::size_t>(w)]) continue;
      const int dw = d[static_cast<std::size_t>(w)];
      path.push_back(w);
      on_path[static_cast<std::size_t>(w)] = 1;
      self(self, w, std::max(threshold, dw), r + (dw > threshold ? 1 : 0));
      on_path[static_cast<std::size_t>(w)] = 0;
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (d[s] != delta) continue;
    path = {static_cast<Vertex>(s)};
    on_path[s] = 1;
    dfs(dfs, static_cast<Vertex>(s), delta, 0);
    on_path[s] = 0;
  }
  return replay_greedy_walk(g, best);
}

/// Largest number of representatives adjacent to a single vertex.
inline int max_neighbours_among(const Graph& g, const std::vector<Vertex>& reps) {
  std::vector<char> is_rep(g.order(), 0);
  for (Vertex v : reps) is_rep[static_cast<std::size_t>(v)] = 1;
  int best = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    int c = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(u))) c += is_rep[static_cast<std::size_t>(w)];
    best = std::max(best, c);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Reports.

struct CheckResult {
  bool holds = true;
  bool equality = false;
  Json witness = Json::object();
};

struct TheoremReport {
  std::map<std::string, CheckResult> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.holds; });
  }
  const CheckResult& at(const std::string& name) const { return checks.at(name); }
  bool has(const std::string& name) const { return checks.count(name) != 0; }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& [name, c] : checks)
      if (!c.holds) out.push_back(name);
    return out;
  }

  Json to_json() const {
    Json j = Json::object();
    for (const auto& [name, c] : checks) j[name] = {{"holds", c.holds}, {"equality", c.equality}, {"witness", c.witness}};
    return j;
  }
};

inline std::string big_str(const BigInt& v) { return v.str(); }

/// Tree inequalities, all in integers:
///   irr_vs_variance     n irr > sigma_t
///   sigma_t_vs_sigma    (n-2) sigma >= sigma_t, equality exactly on paths
///   greedy_irr_bound    irr >= sum (d-2)^2 + 2(Delta-2)
///   centered_squares    sum (d-2)^2 <= (n-2)(Delta-2) + 2
///   star_equality       sigma <= sigma_t, equality exactly on stars
///   delta3_sigma_bound  (Delta = 3 only) two-case lower bound on sigma
inline TheoremReport check_tree_theorems(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "check_tree_theorems needs a tree");
  if (t.order() < 3) throw Error(ErrorKind::OrderTooSmall, "check_tree_theorems needs n >= 3");
  const MeasureReport m = measure_all(t);
  const DegreeVector d = degrees(t);
  const std::int64_t n = m.n;
  const std::int64_t sq = sum_centered_squares(d, 2);
  const bool path = is_path(t);
  const bool star = is_star(t);

  TheoremReport rep;
  {
    const std::int64_t lhs = n * m.irr;
    rep.checks["irr_vs_variance"] = {lhs > m.sigma_t, false, {{"n_irr", lhs}, {"sigma_t", m.sigma_t}}};
  }
  {
    const std::int64_t lhs = (n - 2) * m.sigma;
    const bool eq = lhs == m.sigma_t;
    rep.checks["sigma_t_vs_sigma"] = {lhs >= m.sigma_t && eq == path, eq,
                                      {{"n2_sigma", lhs}, {"sigma_t", m.sigma_t}, {"is_path", path}}};
  }
  {
    const std::int64_t rhs = sq + 2 * (m.Delta - 2);
    rep.checks["greedy_irr_bound"] = {m.irr >= rhs, m.irr == rhs, {{"irr", m.irr}, {"bound", rhs}}};
  }
  {
    const std::int64_t rhs = (n - 2) * (m.Delta - 2) + 2;
    rep.checks["centered_squares"] = {sq <= rhs, sq == rhs, {{"sum_sq", sq}, {"bound", rhs}}};
  }
  {
    const bool eq = m.sigma == m.sigma_t;
    rep.checks["star_equality"] = {m.sigma <= m.sigma_t && eq == star, eq,
                                   {{"sigma", m.sigma}, {"sigma_t", m.sigma_t}, {"is_star", star}}};
  }
  if (m.Delta == 3) {
    const Delta3Profile p = delta3_profile(t);
    const std::int64_t bound = p.y <= p.x + 2 ? 4 * (p.x + 2) - 2 * p.y : 2 * (p.x + 2);
    rep.checks["delta3_sigma_bound"] = {m.sigma >= bound, m.sigma == bound,
                                        {{"x", p.x}, {"y", p.y}, {"sigma", m.sigma}, {"bound", bound}}};
  }
  return rep;
}

/// Builds the greedy tree and checks g(T_x) = d(x) - 2 off the root,
/// g(T_root) = 2(Delta - 2), and irr = sum (d-2)^2 + 2(Delta-2).
inline bool check_greedy_identity(const DegreeSequence& seq) {
  const RootedTree t = greedy_tree(seq);
  const auto g = subtree_g_values(t);
  for (std::size_t v = 0; v < t.order(); ++v) {
    const std::int64_t want = static_cast<Vertex>(v) == t.root ? 2 * (t.degree[v] - 2) : t.degree[v] - 2;
    if (g[v] != want) return false;
  }
  const Graph tg = t.to_graph();
  const MeasureReport m = measure_all(tg);
  const DegreeVector d = degrees(tg);
  return m.irr == sum_centered_squares(d, 2) + 2 * (m.Delta - 2) && m.Delta == t.degree[static_cast<std::size_t>(t.root)];
}

/// Upper-bound machinery on a connected irregular graph:
///   walk_r_bound       r^2 <= 6n                       (walk-minimal r)
///   trivial_sigma_t    sigma_t <= C(n,2)(Delta-delta)^2
///   ratio_bound        2 sigma_t^2 <= 3 n^5 sigma^2
///   walk_replay        the walk result replays consistently
/// and for n <= exact_path_cap, on the exact simple-path minimiser:
///   path_r_bound       r^2 <= 6n
///   walk_le_path       walk r <= path r
///   path_amgm          r sigma >= (Delta-delta)^2
///   path_three_nbrs    no vertex has more than 3 neighbours among v_0..v_r
inline TheoremReport check_ratio_bounds(const Graph& g, int exact_path_cap = kDefaultExactPathCap) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "check_ratio_bounds needs a connected graph");
  const MeasureReport m = measure_all(g);
  if (m.sigma == 0) throw Error(ErrorKind::RegularGraph, "check_ratio_bounds needs an irregular graph");
  const BigInt n = m.n;
  const BigInt spread = m.Delta - m.delta;
  const BigInt sigma = m.sigma;
  const BigInt sigma_t = m.sigma_t;

  TheoremReport rep;
  const GreedyWalkResult walk = min_greedy_walk(g);
  rep.checks["walk_replay"] = {replay_consistent(g, walk), false, {{"r", walk.r}}};
  {
    const BigInt lhs = BigInt(walk.r) * walk.r;
    rep.checks["walk_r_bound"] = {lhs <= 6 * n, lhs == 6 * n, {{"r", walk.r}, {"six_n", big_str(6 * n)}}};
  }
  {
    const BigInt rhs = n * (n - 1) / 2 * spread * spread;
    rep.checks["trivial_sigma_t"] = {sigma_t <= rhs, sigma_t == rhs, {{"sigma_t", m.sigma_t}, {"bound", big_str(rhs)}}};
  }
  {
    const BigInt lhs = 2 * sigma_t * sigma_t;
    const BigInt rhs = 3 * n * n * n * n * n * sigma * sigma;
    rep.checks["ratio_bound"] = {lhs <= rhs, lhs == rhs, {{"two_sigma_t_sq", big_str(lhs)}, {"three_n5_sigma_sq", big_str(rhs)}}};
  }
  if (static_cast<int>(m.n) <= exact_path_cap) {
    const GreedyWalkResult path = min_greedy_simple_path(g, exact_path_cap);
    const BigInt r = path.r;
    rep.checks["path_r_bound"] = {r * r <= 6 * n, r * r == 6 * n, {{"r", path.r}}};
    rep.checks["walk_le_path"] = {walk.r <= path.r, walk.r == path.r, {{"walk_r", walk.r}, {"path_r", path.r}}};
    const BigInt lhs = r * sigma;
    const BigInt rhs = spread * spread;
    rep.checks["path_amgm"] = {lhs >= rhs, lhs == rhs, {{"r_sigma", big_str(lhs)}, {"spread_sq", big_str(rhs)}}};
    const int nb = max_neighbours_among(g, path.representatives);
    rep.checks["path_three_nbrs"] = {nb <= 3, nb == 3, {{"max_neighbours", nb}}};
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Labeled graph enumeration by edge bitmask. Bit b of the mask is the b-th
// pair (i, j), i < j, in row-major order.

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return p;
}

inline bool mask_connected(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::uint64_t mask) {
  if (n <= 1) return true;
  std::uint32_t adj[32] = {};
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if ((mask >> b) & 1u) {
      adj[pairs[b].first] |= 1u << pairs[b].second;
      adj[pairs[b].second] |= 1u << pairs[b].first;
    }
  }
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1u) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? 0xffffffffu : ((1u << n) - 1));
}

inline Graph graph_from_mask(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if ((mask >> b) & 1u) e.push_back(pairs[b]);
  return Graph::from_edge_list(static_cast<std::size_t>(n), e);
}

inline void check_labeled_cap(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  if (n > cap) throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " exceeds labeled-graph cap " + std::to_string(cap));
  if (n > 11) throw Error(ErrorKind::CapExceeded, "edge bitmask limited to n <= 11");
}

}  // namespace detail

inline std::uint64_t labeled_mask_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

/// Visits connected labeled graphs whose edge masks lie in [lo, hi).
template <class Visitor>
void for_each_connected_labeled_graph(int n, std::uint64_t lo, std::uint64_t hi, Visitor&& visit,
                                      int cap = kDefaultLabeledGraphCap) {
  detail::check_labeled_cap(n, cap);
  const auto pairs = detail::all_pairs(n);
  hi = std::min(hi, labeled_mask_count(n));
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    if (!detail::mask_connected(n, pairs, mask)) continue;
    visit(static_cast<const Graph&>(detail::graph_from_mask(n, pairs, mask)), mask);
  }
}

template <class Visitor>
void for_each_connected_labeled_graph(int n, Visitor&& visit, int cap = kDefaultLabeledGraphCap) {
  for_each_connected_labeled_graph(
      n, 0, labeled_mask_count(n), [&](const Graph& g, std::uint64_t) { visit(g); }, cap);
}

// ---------------------------------------------------------------------------
// Parallel helpers: split [0, total) into `jobs` contiguous chunks and merge
// results in chunk order, so the outcome does not depend on scheduling.

template <class Result, class Work>
std::vector<Result> run_partitioned(std::uint64_t total, int jobs, Work&& work) {
  jobs = std::max(1, jobs);
  const std::uint64_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(total, 1));
  std::vector<Result> results(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = total * c / chunks;
    const std::uint64_t hi = total * (c + 1) / chunks;
    if (chunks == 1) {
      results[c] = work(lo, hi);
    } else {
      threads.emplace_back([&, c, lo, hi] { results[c] = work(lo, hi); });
    }
  }
  for (auto& t : threads) t.join();
  return results;
}

struct Violation {
  std::string check;
  std::string graph6;
  Json witness;
};

inline Json violations_json(const std::vector<Violation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back({{"check", v.check}, {"graph6", v.graph6}, {"witness", v.witness}});
  return arr;
}

inline constexpr std::size_t kMaxRecordedViolations = 20;

struct TreeScanRow {
  int n = 0;
  std::uint64_t trees = 0;
  std::uint64_t violation_count = 0;
  std::uint64_t path_equalities = 0;   // (n-2) sigma = sigma_t
  std::uint64_t star_equalities = 0;   // sigma = sigma_t
  std::uint64_t greedy_bound_equalities = 0;
  Rational max_ratio{0, 1};
  std::string max_ratio_graph6;
  std::map<std::string, std::uint64_t> by_check;
  std::vector<Violation> violations;
};

struct TreeScanSummary {
  std::vector<TreeScanRow> rows;

  std::uint64_t violation_count() const {
    std::uint64_t v = 0;
    for (const auto& r : rows) v += r.violation_count;
    return v;
  }

  std::uint64_t violations_of(const std::string& check) const {
    std::uint64_t v = 0;
    for (const auto& r : rows)
      if (auto it = r.by_check.find(check); it != r.by_check.end()) v += it->second;
    return v;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"trees", r.trees},
                     {"violations", r.violation_count},
                     {"violations_by_check", r.by_check},
                     {"path_equalities", r.path_equalities},
                     {"star_equalities", r.star_equalities},
                     {"greedy_bound_equalities", r.greedy_bound_equalities},
                     {"max_ratio", r.max_ratio.str()},
                     {"max_ratio_graph6", r.max_ratio_graph6},
                     {"violation_list", violations_json(r.violations)}});
    }
    return {{"scan", "trees"}, {"total_violations", violation_count()}, {"rows", arr}};
  }
};

/// Runs check_tree_theorems on every free tree with n_min <= n <= n_max.
inline TreeScanSummary exhaustive_tree_scan(int n_min, int n_max, int jobs = 1, int cap = 16) {
  if (n_min < 3) throw Error(ErrorKind::OrderTooSmall, "tree scan starts at n >= 3");
  if (n_max > cap) throw Error(ErrorKind::CapExceeded, "n_max = " + std::to_string(n_max) + " exceeds tree cap " + std::to_string(cap));
  TreeScanSummary summary;
  for (int n = n_min; n <= n_max; ++n) {
    const std::vector<Graph> trees = free_trees(n, cap);
    auto parts = run_partitioned<TreeScanRow>(trees.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      TreeScanRow row;
      row.n = n;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const Graph& t = trees[i];
        const TheoremReport rep = check_tree_theorems(t);
        ++row.trees;
        row.path_equalities += rep.at("sigma_t_vs_sigma").equality;
        row.star_equalities += rep.at("star_equality").equality;
        row.greedy_bound_equalities += rep.at("greedy_irr_bound").equality;
        for (const auto& name : rep.failures()) {
          ++row.violation_count;
          ++row.by_check[name];
          if (row.violations.size() < kMaxRecordedViolations)
            row.violations.push_back({name, write_graph6(t), rep.at(name).witness});
        }
        const Rational q = ratio(measure_all(t));
        if (row.max_ratio_graph6.empty() || row.max_ratio < q) {
          row.max_ratio = q;
          row.max_ratio_graph6 = write_graph6(t);
        }
      }
      return row;
    });
    TreeScanRow merged;
    merged.n = n;
    for (auto& p : parts) {
      merged.trees += p.trees;
      merged.violation_count += p.violation_count;
      for (const auto& [name, c] : p.by_check) merged.by_check[name] += c;
      merged.path_equalities += p.path_equalities;
      merged.star_equalities += p.star_equalities;
      merged.greedy_bound_equalities += p.greedy_bound_equalities;
      for (auto& v : p.violations)
        if (merged.violations.size() < kMaxRecordedViolations) merged.violations.push_back(std::move(v));
      if (!p.max_ratio_graph6.empty() && (merged.max_ratio_graph6.empty() || merged.max_ratio < p.max_ratio)) {
        merged.max_ratio = p.max_ratio;
        merged.max_ratio_graph6 = p.max_ratio_graph6;
      }
    }
    summary.rows.push_back(std::move(merged));
  }
  return summary;
}

struct GraphScanRow {
  int n = 0;
  std::uint64_t connected = 0;
  std::uint64_t irregular = 0;
  std::uint64_t violation_count = 0;
  int max_walk_r = 0;
  Rational max_ratio{0, 1};
  std::string max_ratio_graph6;
  std::map<std::string, std::uint64_t> by_check;
  std::vector<Violation> violations;
};

struct GraphScanSummary {
  std::vector<GraphScanRow> rows;

  std::uint64_t violation_count() const {
    std::uint64_t v = 0;
    for (const auto& r : rows) v += r.violation_count;
    return v;
  }

  std::uint64_t violations_of(const std::string& check) const {
    std::uint64_t v = 0;
    for (const auto& r : rows)
      if (auto it = r.by_check.find(check); it != r.by_check.end()) v += it->second;
    return v;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"connected", r.connected},
                     {"irregular", r.irregular},
                     {"violations", r.violation_count},
                     {"violations_by_check", r.by_check},
                     {"max_walk_r", r.max_walk_r},
                     {"max_ratio", r.max_ratio.str()},
                     {"max_ratio_graph6", r.max_ratio_graph6},
                     {"violation_list", violations_json(r.violations)}});
    }
    return {{"scan", "graphs"}, {"total_violations", violation_count()}, {"rows", arr}};
  }
};

/// Runs check_ratio_bounds on every connected irregular labeled graph with
/// n_min <= n <= n_max; also asserts sigma <= sigma_t and irr <= sigma.
inline GraphScanSummary exhaustive_graph_scan(int n_min, int n_max, int jobs = 1, int cap = kDefaultLabeledGraphCap,
                                              int exact_path_cap = kDefaultExactPathCap) {
  GraphScanSummary summary;
  for (int n = std::max(1, n_min); n <= n_max; ++n) {
    detail::check_labeled_cap(n, cap);
    auto parts = run_partitioned<GraphScanRow>(labeled_mask_count(n), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      GraphScanRow row;
      row.n = n;
      auto record = [&](const std::string& name, const Graph& g, Json w) {
        ++row.violation_count;
        ++row.by_check[name];
        if (row.violations.size() < kMaxRecordedViolations) row.violations.push_back({name, write_graph6(g), std::move(w)});
      };
      for_each_connected_labeled_graph(
          n, lo, hi,
          [&](const Graph& g, std::uint64_t) {
            ++row.connected;
            const MeasureReport m = measure_all(g);
            if (m.sigma > m.sigma_t) record("sigma_le_sigma_t", g, {{"sigma", m.sigma}, {"sigma_t", m.sigma_t}});
            if (m.irr > m.sigma) record("irr_le_sigma", g, {{"irr", m.irr}, {"sigma", m.sigma}});
            if (m.sigma == 0) return;
            ++row.irregular;
            const TheoremReport rep = check_ratio_bounds(g, exact_path_cap);
            for (const auto& name : rep.failures()) record(name, g, rep.at(name).witness);
            row.max_walk_r = std::max(row.max_walk_r, rep.at("walk_r_bound").witness["r"].get<int>());
            const Rational q = ratio(m);
            if (row.max_ratio_graph6.empty() || row.max_ratio < q) {
              row.max_ratio = q;
              row.max_ratio_graph6 = write_graph6(g);
            }
          },
          cap);
      return row;
    });
    GraphScanRow merged;
    merged.n = n;
    for (auto& p : parts) {
      merged.connected += p.connected;
      merged.irregular += p.irregular;
      merged.violation_count += p.violation_count;
      for (const auto& [name, c] : p.by_check) merged.by_check[name] += c;
      merged.max_walk_r = std::max(merged.max_walk_r, p.max_walk_r);
      for (auto& v : p.violations)
        if (merged.violations.size() < kMaxRecordedViolations) merged.violations.push_back(std::move(v));
      if (!p.max_ratio_graph6.empty() && (merged.max_ratio_graph6.empty() || merged.max_ratio < p.max_ratio)) {
        merged.max_ratio = p.max_ratio;
        merged.max_ratio_graph6 = p.max_ratio_graph6;
      }
    }
    summary.rows.push_back(std::move(merged));
  }
  return summary;
}

struct GreedyScanRow {
  int n = 0;
  std::uint64_t sequences = 0;
  std::uint64_t identity_failures = 0;
  bool minimality_checked = false;
  std::uint64_t minimality_failures = 0;
  std::vector<std::string> failing_sequences;
};

struct GreedyScanSummary {
  std::vector<GreedyScanRow> rows;

  std::uint64_t violation_count() const {
    std::uint64_t v = 0;
    for (const auto& r : rows) v += r.identity_failures + r.minimality_failures;
    return v;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"sequences", r.sequences},
                     {"identity_failures", r.identity_failures},
                     {"minimality_checked", r.minimality_checked},
                     {"minimality_failures", r.minimality_failures},
                     {"failing_sequences", r.failing_sequences}});
    }
    return {{"scan", "greedy"}, {"total_violations", violation_count()}, {"rows", arr}};
  }
};

/// check_greedy_identity over every tree degree sequence with 2 <= n <= n_max;
/// for n <= minimality_max also compares irr of the greedy tree with the
/// minimum irr over all free trees sharing its degree sequence.
inline GreedyScanSummary greedy_scan(int n_max, int minimality_max, int cap = 16) {
  if (n_max > cap) throw Error(ErrorKind::CapExceeded, "n_max = " + std::to_string(n_max) + " exceeds tree cap " + std::to_string(cap));
  GreedyScanSummary summary;
  for (int n = 2; n <= n_max; ++n) {
    GreedyScanRow row;
    row.n = n;
    std::map<DegreeSequence, std::int64_t> min_irr;
    if (n <= minimality_max) {
      row.minimality_checked = true;
      for_each_free_tree(
          n,
          [&](const Graph& t) {
            const DegreeSequence s = degree_sequence(t);
            const std::int64_t irr = measure_all(t).irr;
            auto [it, fresh] = min_irr.emplace(s, irr);
            if (!fresh) it->second = std::min(it->second, irr);
          },
          cap);
    }
    for_each_tree_degree_sequence(n, [&](const DegreeSequence& s) {
      ++row.sequences;
      bool bad = false;
      if (!check_greedy_identity(s)) {
        ++row.identity_failures;
        bad = true;
      }
      if (row.minimality_checked) {
        const std::int64_t greedy_irr = measure_all(greedy_tree(s).to_graph()).irr;
        auto it = min_irr.find(s);
        if (it == min_irr.end() || it->second != greedy_irr) {
          ++row.minimality_failures;
          bad = true;
        }
      }
      if (bad && row.failing_sequences.size() < kMaxRecordedViolations) row.failing_sequences.push_back(s.str());
    });
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Growth of sigma_t / sigma along the extremal chain.

/// Least-squares slope of ln(y) against ln(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw Error(ErrorKind::InvalidArgument, "slope fit needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

struct RatioRow {
  int k = 0;
  std::int64_t n = 0;
  std::int64_t sigma = 0;
  std::int64_t sigma_t = 0;
  Rational ratio;
  double normalized = 0;  // ratio / n^{5/2}
};

struct RatioScan {
  int s = 0;
  std::vector<RatioRow> rows;
  double slope = 0;

  bool sigma_matches() const {
    return std::all_of(rows.begin(), rows.end(), [](const RatioRow& r) { return r.sigma == r.k - 6; });
  }
  bool strictly_increasing() const {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i - 1].ratio < rows[i].ratio)) return false;
    return true;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"k", r.k}, {"n", r.n}, {"sigma", r.sigma}, {"sigma_t", r.sigma_t}, {"ratio", r.ratio.str()},
                     {"ratio_over_n52", r.normalized}});
    }
    return {{"s", s}, {"slope", slope}, {"sigma_matches", sigma_matches()}, {"strictly_increasing", strictly_increasing()},
            {"rows", arr}};
  }

  std::string to_csv() const {
    std::string out = "k,n,sigma,sigma_t,ratio,ratio_over_n52\n";
    char buf[64];
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%.9g", r.normalized);
      out += std::to_string(r.k) + "," + std::to_string(r.n) + "," + std::to_string(r.sigma) + "," +
             std::to_string(r.sigma_t) + "," + r.ratio.str() + "," + buf + "\n";
    }
    return out;
  }
};

inline RatioScan ratio_scan(const std::vector<int>& k_list, int s) {
  RatioScan scan;
  scan.s = s;
  std::vector<double> xs, ys;
  for (int k : k_list) {
    if (k < 10 || k % 2 != 0) throw Error(ErrorKind::ParamsOutOfRange, "ratio scan needs even k >= 10");
    const ChainGraph c = extremal_chain({k, s, false});
    const MeasureReport m = measure_all(c.graph);
    RatioRow row{k, m.n, m.sigma, m.sigma_t, ratio(m), 0.0};
    row.normalized = row.ratio.to_double() / std::pow(static_cast<double>(m.n), 2.5);
    xs.push_back(static_cast<double>(m.n));
    ys.push_back(row.ratio.to_double());
    scan.rows.push_back(row);
  }
  if (xs.size() >= 2) scan.slope = loglog_slope(xs, ys);
  return scan;
}

}  // namespace irrlab
