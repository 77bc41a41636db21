#pragma once

// Extremal families built from circulant factors.
//
// Difference class i of K_k joins labels differing by i (mod k). For even k
// the classes 1..k/2-1 are spanning 2-regular subgraphs and class k/2 is a
// perfect matching; together they partition K_k.
//
// The chain glues blocks G_3, G_4, ..., G_{k-3}: every vertex of G_i has
// degree i except one deficient vertex v_i, and bridges v_i v_{i+1} restore
// the deficiency. Only the k-6 bridges join unequal degrees, so sigma = k-6
// while sigma_t grows like k^6.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "irrlab/error.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

namespace detail {

/// Accumulates edge-disjoint factors; any repeated edge is an InternalOverlap.
class DisjointEdgeSet {
 public:
  void add(Vertex a, Vertex b) {
    if (a == b) throw Error(ErrorKind::InternalOverlap, "loop " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen_.insert({a, b}).second) {
      throw Error(ErrorKind::InternalOverlap, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") added twice");
    }
    edges_.emplace_back(a, b);
  }
  void add_all(const EdgeList& list) {
    for (auto [a, b] : list) add(a, b);
  }
  Graph build(std::size_t n) const { return Graph::from_edge_list(n, edges_); }

 private:
  std::set<std::pair<Vertex, Vertex>> seen_;
  EdgeList edges_;
};

/// Edges {v, v+i mod m} for all v, deduplicated (only matters for i = m/2).
inline EdgeList circulant_class(int m, int i) {
  std::set<std::pair<Vertex, Vertex>> s;
  for (int v = 0; v < m; ++v) {
    Vertex a = v;
    Vertex b = (v + i) % m;
    if (a > b) std::swap(a, b);
    s.insert({a, b});
  }
  return {s.begin(), s.end()};
}

}  // namespace detail

/// Difference class i of K_k, 1 <= i <= k/2.
inline EdgeList difference_factor(int k, int i) {
  if (k < 4 || k % 2 != 0) throw Error(ErrorKind::BadClassIndex, "k must be even and >= 4, got " + std::to_string(k));
  if (i < 1 || i > k / 2) throw Error(ErrorKind::BadClassIndex, "class " + std::to_string(i) + " not in 1..k/2");
  return detail::circulant_class(k, i);
}

/// G_r: order k, degree r everywhere except vertex k-1 with degree r-2.
/// A cycle through 0..k-2 (classes 1 and 2), then (r-2)/2 full classes from
/// 3 upward, then the class-k/2 matching when r is odd.
inline Graph near_regular_block(int k, int r) {
  if (k < 8 || k % 2 != 0 || r < 4 || r > k - 4) {
    throw Error(ErrorKind::ParamsOutOfRange,
                "near_regular_block needs even k >= 8 and 4 <= r <= k-4 (k=" + std::to_string(k) +
                    ", r=" + std::to_string(r) + ")");
  }
  detail::DisjointEdgeSet es;
  for (int v = 0; v + 1 <= k - 2; ++v) es.add(v, v + 1);
  es.add(k - 2, 0);
  const int factors = (r - 2) / 2;
  for (int c = 3; c < 3 + factors; ++c) es.add_all(difference_factor(k, c));
  if (r % 2 == 1) es.add_all(difference_factor(k, k / 2));
  return es.build(static_cast<std::size_t>(k));
}

/// Odd order m, degree t everywhere except vertex 0 with degree t-1.
/// Base: the difference-2 Hamiltonian cycle on Z_m; then (t-3)/2 classes
/// from 3 upward; then the near-perfect matching (2j-1, 2j), j = 1..(m-1)/2.
inline Graph side_block(int m, int t) {
  const bool ok = m % 2 == 1 && ((t == 3 && m >= 5) || (t >= 5 && t % 2 == 1 && t <= m - 2));
  if (!ok) {
    throw Error(ErrorKind::ParamsOutOfRange, "side_block needs odd m and t = 3 (m >= 5) or odd 5 <= t <= m-2 (m=" +
                                                 std::to_string(m) + ", t=" + std::to_string(t) + ")");
  }
  detail::DisjointEdgeSet es;
  es.add_all(detail::circulant_class(m, 2));
  for (int c = 3; c < 3 + (t - 3) / 2; ++c) es.add_all(detail::circulant_class(m, c));
  for (int j = 1; j <= (m - 1) / 2; ++j) es.add(2 * j - 1, 2 * j);
  return es.build(static_cast<std::size_t>(m));
}

/// G_4 with one extra vertex: the class-1 Hamiltonian cycle on Z_{k+1} plus
/// difference-2 (mod k) edges on labels 0..k-1. Vertex k has degree 2.
inline Graph near_regular_block_odd4(int k) {
  if (k < 10 || k % 2 != 0) throw Error(ErrorKind::ParamsOutOfRange, "odd G_4 needs even k >= 10");
  detail::DisjointEdgeSet es;
  es.add_all(detail::circulant_class(k + 1, 1));
  es.add_all(detail::circulant_class(k, 2));
  return es.build(static_cast<std::size_t>(k + 1));
}

struct ChainParams {
  int k = 10;
  int s = 0;
  bool odd_order = false;

  void validate() const {
    if (k < 10 || k % 2 != 0 || s < 0) {
      throw Error(ErrorKind::ParamsOutOfRange,
                  "chain needs even k >= 10 and s >= 0 (k=" + std::to_string(k) + ", s=" + std::to_string(s) + ")");
    }
  }

  std::int64_t expected_order() const {
    return static_cast<std::int64_t>(k) * (k - 5) + 2 + 4 * s + (odd_order ? 1 : 0);
  }
};

/// Placement of one block inside the chain.
struct BlockInfo {
  int degree = 0;          // target degree i of G_i
  Vertex offset = 0;       // first vertex of the block
  int order = 0;
  Vertex deficient = 0;    // v_i, global index
  int deficiency = 0;      // 1 for the side blocks, 2 otherwise
};

struct ChainGraph {
  Graph graph;
  ChainParams params;
  std::vector<BlockInfo> blocks;  // G_3, G_4, ..., G_{k-3}
  EdgeList bridges;               // v_i v_{i+1}, i = 3..k-4

  nlohmann::ordered_json manifest() const {
    nlohmann::ordered_json j;
    j["k"] = params.k;
    j["s"] = params.s;
    j["odd_order"] = params.odd_order;
    j["order"] = graph.order();
    j["size"] = graph.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& b : blocks) {
      arr.push_back({{"degree", b.degree},
                     {"offset", b.offset},
                     {"order", b.order},
                     {"deficient_vertex", b.deficient},
                     {"deficiency", b.deficiency}});
    }
    j["blocks"] = arr;
    auto br = nlohmann::ordered_json::array();
    for (auto [a, b] : bridges) br.push_back({a, b});
    j["bridges"] = br;
    return j;
  }
};

inline ChainGraph extremal_chain(const ChainParams& p) {
  p.validate();
  const int side_order = p.k + 1 + 2 * p.s;
  ChainGraph out;
  out.params = p;

  detail::DisjointEdgeSet es;
  Vertex offset = 0;
  auto place = [&](const Graph& block, int degree, Vertex local_deficient, int deficiency) {
    for (auto [a, b] : block.edges()) es.add(a + offset, b + offset);
    out.blocks.push_back({degree, offset, static_cast<int>(block.order()), offset + local_deficient, deficiency});
    offset += static_cast<Vertex>(block.order());
  };

  place(side_block(side_order, 3), 3, 0, 1);
  for (int i = 4; i <= p.k - 4; ++i) {
    if (i == 4 && p.odd_order) {
      place(near_regular_block_odd4(p.k), 4, p.k, 2);
    } else {
      place(near_regular_block(p.k, i), i, p.k - 1, 2);
    }
  }
  place(side_block(side_order, p.k - 3), p.k - 3, 0, 1);

  for (std::size_t b = 0; b + 1 < out.blocks.size(); ++b) {
    const Vertex u = out.blocks[b].deficient;
    const Vertex v = out.blocks[b + 1].deficient;
    es.add(u, v);
    out.bridges.emplace_back(u, v);
  }
  out.graph = es.build(static_cast<std::size_t>(offset));
  return out;
}

/// Path P_{n/2} on 0..n/2-1 whose ends attach to the two non-adjacent
/// vertices of K_{n/2} minus an edge (on n/2..n-1).
inline Graph quadratic_example(int n) {
  if (n % 2 != 0 || n / 2 < 5) throw Error(ErrorKind::ParamsOutOfRange, "quadratic_example needs even n with n/2 >= 5");
  const int h = n / 2;
  detail::DisjointEdgeSet es;
  for (int v = 0; v + 1 < h; ++v) es.add(v, v + 1);
  const Vertex a = h;
  const Vertex b = h + 1;
  for (int u = h; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (!(u == a && w == b)) es.add(u, w);
  es.add(0, a);
  es.add(h - 1, b);
  return es.build(static_cast<std::size_t>(n));
}

}  // namespace irrlab
