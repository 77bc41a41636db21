#pragma once

// graph6 and plain edge-list text formats.
//
// graph6: a size header followed by the upper triangle of the adjacency
// matrix, column by column (j = 1..n-1, i = 0..j-1), packed six bits per
// byte, most significant bit first, each byte offset by 63.

#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "irrlab/error.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

namespace detail {

constexpr int kG6Offset = 63;
constexpr int kG6Max = 126;

inline std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Largest order the 4-byte header form can carry.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorKind::InvalidArgument, "graph6 writer supports n <= 258047");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Offset));
  } else {
    out.push_back(static_cast<char>(detail::kG6Max));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + detail::kG6Offset));
    }
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> chunk((bits + 5) / 6, 0);
  // Bit index of (i, j), i < j, in column-major upper-triangle order.
  for (auto [u, v] : g.edges()) {
    const std::size_t j = static_cast<std::size_t>(v);
    const std::size_t i = static_cast<std::size_t>(u);
    const std::size_t k = j * (j - 1) / 2 + i;
    chunk[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (std::uint8_t c : chunk) out.push_back(static_cast<char>(c + detail::kG6Offset));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  text = detail::strip_line_end(text);
  if (text.empty()) throw Error(ErrorKind::MalformedHeader, "empty graph6 string");
  for (char ch : text) {
    const int b = static_cast<unsigned char>(ch);
    if (b < detail::kG6Offset || b > detail::kG6Max) {
      throw Error(ErrorKind::NonPrintableByte, "byte " + std::to_string(b) + " outside 63..126");
    }
  }
  auto val = [&](std::size_t idx) { return static_cast<std::size_t>(static_cast<unsigned char>(text[idx])) - detail::kG6Offset; };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != detail::kG6Max) {
    n = val(0);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) != detail::kG6Max) {
    if (text.size() < 4) throw Error(ErrorKind::MalformedHeader, "truncated 4-byte size header");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
    if (n <= 62) throw Error(ErrorKind::MalformedHeader, "long header used for n <= 62");
  } else {
    throw Error(ErrorKind::MalformedHeader, "8-byte size header not supported");
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw Error(ErrorKind::TruncatedBitfield, "expected " + std::to_string(need) + " bitfield bytes, got " +
                                                  std::to_string(text.size() - pos));
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if ((val(pos + k / 6) >> (5 - k % 6)) & 1u) {
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_edge_list(n, pairs);
}

/// Edge-list text: first line "n m", then m lines "u v".
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph parse_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorKind::MalformedEdgeList, "expected header line \"n m\"");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw Error(ErrorKind::MalformedEdgeList, "expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Reads every graph in a stream. A stream whose first non-blank character is
/// a digit is a single edge list; otherwise each non-blank line is graph6.
inline std::vector<Graph> read_graphs(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = all.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  if (std::isdigit(static_cast<unsigned char>(all[first]))) return {parse_edge_list(all)};

  std::vector<Graph> graphs;
  std::istringstream lines(all);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace irrlab
