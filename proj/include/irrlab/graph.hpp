#pragma once

// Undirected simple graphs on vertices 0..n-1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrlab/error.hpp"

namespace irrlab {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple graph. Edges are stored canonicalized (u < v) and sorted;
/// neighbour lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates unordered pairs. Throws SelfLoop or VertexOutOfRange.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      for (Vertex x : {a, b}) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
          throw Error(ErrorKind::VertexOutOfRange,
                      "vertex " + std::to_string(x) + " not in [0, " + std::to_string(n) + ")");
        }
      }
      if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
      edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
  }

  bool operator==(const Graph& other) const {
    return order() == other.order() && edges_ == other.edges_;
  }

 private:
  Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
    for (auto [u, v] : edges_) {
      adjacency_[static_cast<std::size_t>(u)].push_back(v);
      adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Degree of every vertex, plus the extremes.
struct DegreeVector {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  int operator[](std::size_t v) const { return values[v]; }
  int min() const { return values.empty() ? 0 : *std::min_element(values.begin(), values.end()); }
  int max() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }
  std::int64_t sum() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }
};

inline DegreeVector degrees(const Graph& g) {
  DegreeVector d;
  d.values.resize(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) d.values[v] = g.degree(static_cast<Vertex>(v));
  return d;
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

enum class TreeClass { NotTree, Path, Star, OtherTree };

constexpr std::string_view to_string(TreeClass c) {
  switch (c) {
    case TreeClass::NotTree: return "not_tree";
    case TreeClass::Path: return "path";
    case TreeClass::Star: return "star";
    case TreeClass::OtherTree: return "other_tree";
  }
  return "unknown";
}

/// A tree with exactly one non-leaf vertex (or n <= 2).
inline bool is_star(const Graph& g) {
  if (!is_tree(g)) return false;
  if (g.order() <= 2) return true;
  std::size_t inner = 0;
  for (std::size_t v = 0; v < g.order(); ++v) inner += g.degree(static_cast<Vertex>(v)) > 1;
  return inner == 1;
}

inline bool is_path(const Graph& g) { return is_tree(g) && degrees(g).max() <= 2; }

/// P_1, P_2 and P_3 are both paths and stars; they classify as Path.
/// Use is_star() for the star predicate itself.
inline TreeClass classify_tree(const Graph& g) {
  if (!is_tree(g)) return TreeClass::NotTree;
  if (degrees(g).max() <= 2) return TreeClass::Path;
  if (is_star(g)) return TreeClass::Star;
  return TreeClass::OtherTree;
}

/// Maps edge (u, v) to (perm[u], perm[v]).
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw Error(ErrorKind::NotAPermutation, "length mismatch");
  std::vector<char> hit(n, 0);
  for (Vertex p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[static_cast<std::size_t>(p)]) {
      throw Error(ErrorKind::NotAPermutation, "not a bijection on [0, n)");
    }
    hit[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size());
  for (auto [u, v] : g.edges()) pairs.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph::from_edge_list(n, pairs);
}

// Common families, used throughout the tests and the CLI.

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edge_list(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edge_list(n, e);
}

inline Graph star_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edge_list(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edge_list(n, e);
}

}  // namespace irrlab
