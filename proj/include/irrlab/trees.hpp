#pragma once

// Free trees and tree degree sequences: enumeration, canonical codes, the
// breadth-first greedy tree of a degree sequence, and the subtree g-values
//   g(T_x) = sum_{uv in E(T_x)} |d(u) - d(v)| - sum_{v in T_x} (d(v) - 2)^2
// where d is always the degree in the whole tree.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irrlab/error.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

inline constexpr int kDefaultTreeCap = 18;

/// Non-increasing positive degrees summing to 2(n-1).
struct DegreeSequence {
  std::vector<int> d;

  std::size_t size() const noexcept { return d.size(); }
  bool operator==(const DegreeSequence&) const = default;
  auto operator<=>(const DegreeSequence&) const = default;

  bool tree_realizable() const {
    if (d.empty()) return false;
    std::int64_t sum = 0;
    for (int x : d) {
      if (x < 1) return false;
      sum += x;
    }
    return sum == 2 * (static_cast<std::int64_t>(d.size()) - 1);
  }

  std::string str() const {
    std::string s;
    for (int x : d) {
      if (!s.empty()) s.push_back(',');
      s += std::to_string(x);
    }
    return s;
  }

  static DegreeSequence sorted(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return {std::move(values)};
  }
};

inline DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence::sorted(degrees(g).values); }

/// Visits each partition of 2(n-1) into exactly n positive parts, largest
/// parts first (reverse lexicographic order).
template <class Visitor>
void for_each_tree_degree_sequence(int n, Visitor&& visit) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "tree degree sequences need n >= 2");
  // Distribute the n-2 surplus over n slots as a partition with at most n parts.
  std::vector<int> extra;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      DegreeSequence seq;
      seq.d.assign(static_cast<std::size_t>(n), 1);
      for (std::size_t i = 0; i < extra.size(); ++i) seq.d[i] += extra[i];
      visit(static_cast<const DegreeSequence&>(seq));
      return;
    }
    if (static_cast<int>(extra.size()) == n) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      extra.push_back(part);
      rec(remaining - part, part);
      extra.pop_back();
    }
  };
  rec(n - 2, n - 2);
}

inline std::vector<DegreeSequence> tree_degree_sequences(int n) {
  std::vector<DegreeSequence> out;
  for_each_tree_degree_sequence(n, [&](const DegreeSequence& s) { out.push_back(s); });
  return out;
}

// ---------------------------------------------------------------------------
// Free tree enumeration by canonical level sequences (Wright, Richmond,
// Odlyzko and McKay). Level sequences are 0-based: the root has level 0.

/// Tree whose preorder vertex i sits at depth levels[i].
inline Graph tree_from_level_sequence(const std::vector<int>& levels) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> last_at_level(levels.size() + 1, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int lv = levels[i];
    if (lv > 0) edges.emplace_back(last_at_level[static_cast<std::size_t>(lv - 1)], static_cast<Vertex>(i));
    last_at_level[static_cast<std::size_t>(lv)] = static_cast<Vertex>(i);
  }
  return Graph::from_edge_list(levels.size(), edges);
}

class FreeTreeEnumerator {
 public:
  explicit FreeTreeEnumerator(int n, int cap = kDefaultTreeCap) : n_(n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
    if (n > cap) {
      throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " exceeds tree cap " + std::to_string(cap));
    }
    if (n == 1) {
      layout_ = {0};
      return;
    }
    for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
  }

  /// Next canonical level sequence, or nullopt when exhausted.
  std::optional<std::vector<int>> next_levels() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
      done_ = true;
      return layout_;
    }
    advance_to_valid();
    if (done_) return std::nullopt;
    std::vector<int> current = layout_;
    if (!next_rooted(layout_, std::nullopt)) done_ = true;
    return current;
  }

  std::optional<Graph> next() {
    auto lv = next_levels();
    if (!lv) return std::nullopt;
    return tree_from_level_sequence(*lv);
  }

 private:
  // Successor of a rooted level sequence, regenerating from position p.
  static bool next_rooted(std::vector<int>& seq, std::optional<std::size_t> start) {
    std::size_t p = 0;
    if (start) {
      p = *start;
    } else {
      p = seq.size() - 1;
      while (p > 0 && seq[p] == 1) --p;
    }
    if (p == 0) return false;
    std::size_t q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
    return true;
  }

  // Splits at the second vertex of level 1: the first root subtree (levels
  // shifted up by one) and the remainder with the root.
  static std::pair<std::vector<int>, std::vector<int>> split(const std::vector<int>& seq) {
    std::size_t m = seq.size();
    bool one_found = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == 1) {
        if (one_found) {
          m = i;
          break;
        }
        one_found = true;
      }
    }
    std::vector<int> left;
    for (std::size_t i = 1; i < m; ++i) left.push_back(seq[i] - 1);
    std::vector<int> rest{0};
    for (std::size_t i = m; i < seq.size(); ++i) rest.push_back(seq[i]);
    return {std::move(left), std::move(rest)};
  }

  void advance_to_valid() {
    auto [left, rest] = split(layout_);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && rest < left) {
        valid = false;
      }
    }
    if (valid) return;

    const std::size_t p = left.size();
    const int pivot = layout_[p];
    next_rooted(layout_, p);
    if (pivot > 2) {
      auto [new_left, new_rest] = split(layout_);
      const int h = *std::max_element(new_left.begin(), new_left.end());
      const std::size_t len = static_cast<std::size_t>(h + 1);
      for (std::size_t i = 0; i < len; ++i) layout_[layout_.size() - len + i] = static_cast<int>(i) + 1;
    }
  }

  int n_;
  std::vector<int> layout_;
  bool done_ = false;
};

/// Calls visit(const Graph&) for every unlabeled free tree of order n.
template <class Visitor>
void for_each_free_tree(int n, Visitor&& visit, int cap = kDefaultTreeCap) {
  FreeTreeEnumerator e(n, cap);
  while (auto t = e.next()) visit(static_cast<const Graph&>(*t));
}

inline std::vector<Graph> free_trees(int n, int cap = kDefaultTreeCap) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& t) { out.push_back(t); }, cap);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: rooted at the centre (minimum over both centres when
// bicentral), each subtree encoded "1" + sorted child codes + "0".

namespace detail {

inline std::string rooted_code(const Graph& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (std::size_t i = order.size(); i-- > 0;) {
    const Vertex v = order[i];
    auto& kids = child_codes[static_cast<std::size_t>(v)];
    std::sort(kids.begin(), kids.end());
    std::string c = "1";
    for (auto& k : kids) c += k;
    c += "0";
    if (v != root) child_codes[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(std::move(c));
    else code[static_cast<std::size_t>(v)] = std::move(c);
  }
  return code[static_cast<std::size_t>(root)];
}

}  // namespace detail

inline std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (std::size_t v = 0; v < n; ++v) all.push_back(static_cast<Vertex>(v));
    return all;
  }
  std::vector<int> deg = degrees(t).values;
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(static_cast<Vertex>(v));
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      deg[static_cast<std::size_t>(v)] = 0;
      for (Vertex w : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// Isomorphism-invariant code of a free tree. Throws NotATree.
inline std::string tree_canonical_code(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "canonical code needs a tree");
  std::string best;
  for (Vertex c : tree_centers(t)) {
    std::string code = detail::rooted_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// ---------------------------------------------------------------------------

/// Parent-array rooted tree; parent[root] = -1.
struct RootedTree {
  std::vector<Vertex> parent;
  Vertex root = 0;
  std::vector<int> degree;

  std::size_t order() const noexcept { return parent.size(); }

  std::vector<std::vector<Vertex>> children() const {
    std::vector<std::vector<Vertex>> ch(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v)
      if (parent[v] >= 0) ch[static_cast<std::size_t>(parent[v])].push_back(static_cast<Vertex>(v));
    return ch;
  }

  /// Vertices in breadth-first order from the root.
  std::vector<Vertex> bfs_order() const {
    const auto ch = children();
    std::vector<Vertex> order{root};
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex c : ch[static_cast<std::size_t>(order[i])]) order.push_back(c);
    return order;
  }

  Graph to_graph() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t v = 0; v < parent.size(); ++v)
      if (parent[v] >= 0) e.emplace_back(parent[v], static_cast<Vertex>(v));
    return Graph::from_edge_list(parent.size(), e);
  }

  /// "root;p_0,p_1,...", with -1 as the root's parent.
  std::string parent_line() const {
    std::string s = std::to_string(root) + ";";
    for (std::size_t v = 0; v < parent.size(); ++v) {
      if (v) s.push_back(',');
      s += std::to_string(parent[v]);
    }
    return s;
  }
};

/// Roots a tree at the given vertex. Throws NotATree.
inline RootedTree root_tree(const Graph& t, Vertex root) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "root_tree needs a tree");
  if (root < 0 || static_cast<std::size_t>(root) >= t.order()) throw Error(ErrorKind::VertexOutOfRange, "root");
  RootedTree rt;
  rt.root = root;
  rt.parent.assign(t.order(), -1);
  rt.degree = degrees(t).values;
  std::vector<char> seen(t.order(), 0);
  std::vector<Vertex> queue{root};
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : t.neighbors(queue[i])) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        rt.parent[static_cast<std::size_t>(w)] = queue[i];
        queue.push_back(w);
      }
    }
  }
  return rt;
}

/// Breadth-first greedy tree: the largest degree goes to the root, and each
/// dequeued vertex receives the next largest unassigned degrees as children.
/// Vertex i carries the i-th largest degree. Throws NotRealizable.
inline RootedTree greedy_tree(const DegreeSequence& input) {
  DegreeSequence seq = DegreeSequence::sorted(input.d);
  const std::size_t n = seq.size();
  std::int64_t sum = 0;
  for (int x : seq.d) {
    if (x < 1) throw Error(ErrorKind::NotRealizable, "degree < 1 in " + seq.str());
    sum += x;
  }
  if (n < 2 || sum != 2 * static_cast<std::int64_t>(n - 1)) {
    throw Error(ErrorKind::NotRealizable, "degree sum must be 2(n-1) for " + seq.str());
  }
  RootedTree t;
  t.root = 0;
  t.parent.assign(n, -1);
  t.degree = seq.d;
  std::size_t next = 1;
  // Children always get larger indices than their parent, so index order is
  // the FIFO queue order.
  for (std::size_t v = 0; v < n; ++v) {
    const int kids = seq.d[v] - (v == 0 ? 0 : 1);
    for (int c = 0; c < kids; ++c) {
      if (next >= n) throw Error(ErrorKind::NotRealizable, seq.str());
      t.parent[next++] = static_cast<Vertex>(v);
    }
  }
  return t;
}

/// g(T_x) for every x, bottom-up:
///   g(T_x) = -(d(x)-2)^2 + sum_{y child} [(d(x) - d(y)) + g(T_y)].
/// On greedy trees parents dominate children, so |d(x) - d(y)| = d(x) - d(y);
/// the absolute value keeps the result equal to the direct sum on any tree.
inline std::vector<std::int64_t> subtree_g_values(const RootedTree& t) {
  const auto order = t.bfs_order();
  const auto ch = t.children();
  std::vector<std::int64_t> g(t.order(), 0);
  for (std::size_t i = order.size(); i-- > 0;) {
    const auto x = static_cast<std::size_t>(order[i]);
    const std::int64_t dx = t.degree[x];
    std::int64_t val = -(dx - 2) * (dx - 2);
    for (Vertex y : ch[x]) {
      const std::int64_t diff = dx - t.degree[static_cast<std::size_t>(y)];
      val += (diff < 0 ? -diff : diff) + g[static_cast<std::size_t>(y)];
    }
    g[x] = val;
  }
  return g;
}

/// Counts for a tree with maximum degree at most 3.
struct Delta3Profile {
  std::int64_t x = 0;  // degree-3 vertices
  std::int64_t y = 0;  // degree-2 vertices
  std::int64_t leaves() const { return x + 2; }
  bool operator==(const Delta3Profile&) const = default;
};

inline Delta3Profile delta3_profile(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "delta3_profile needs a tree");
  if (t.order() < 2) throw Error(ErrorKind::OrderTooSmall, "delta3_profile needs n >= 2");
  Delta3Profile p;
  for (int d : degrees(t).values) {
    if (d > 3) throw Error(ErrorKind::MaxDegreeExceeds3, "vertex of degree " + std::to_string(d));
    p.x += d == 3;
    p.y += d == 2;
  }
  return p;
}

}  // namespace irrlab
