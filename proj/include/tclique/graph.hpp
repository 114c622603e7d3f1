#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tclique/detail.hpp"

namespace tclique {

/// Undirected simple graph on vertices 0..n-1, adjacency stored as one
/// bitset row per vertex (flat array of 64-bit words).
class Graph {
 public:
  explicit Graph(int n)
      : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  }

  int vertex_count() const { return n_; }
  int words_per_row() const { return words_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1ULL;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    mut_row(u)[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
    mut_row(v)[static_cast<std::size_t>(u) / 64] |= 1ULL << (u % 64);
  }

  void clear_edges() { std::fill(adj_.begin(), adj_.end(), 0); }

  std::span<const std::uint64_t> neighbor_bits(int u) const {
    check_vertex(u);
    return row(u);
  }

  int degree(int u) const { return detail::popcount_words(neighbor_bits(u)); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int u = 0; u < n_; ++u) twice += static_cast<std::size_t>(degree(u));
    return twice / 2;
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    detail::for_each_bit(neighbor_bits(u), [&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
  }
  std::span<const std::uint64_t> row(int u) const {
    return {adj_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
  }
  std::span<std::uint64_t> mut_row(int u) {
    return {adj_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
};

/// Part sizes of a complete multipartite graph, largest first for the
/// balanced (Turan) case.
struct PartSizes {
  std::vector<int> sizes;

  int part_count() const { return static_cast<int>(sizes.size()); }
  int vertex_total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parse the plain edge-list format: first line the vertex count, then one
/// "u v" pair per line. Duplicate edges collapse; self-loops are an error.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("edge list, line " + std::to_string(line_no) + ": " + msg);
  };

  long n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    if (!(ls >> n)) {
      std::string tok;
      if (ls.clear(), ls >> tok) fail("expected vertex count");
      continue;  // blank first line
    }
    std::string rest;
    if (ls >> rest) fail("expected vertex count alone on the first line");
    break;
  }
  if (n < 1) fail("vertex count must be >= 1");

  Graph g(static_cast<int>(n));
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) fail("expected two vertex indices");
    std::string rest;
    if (ls >> rest) fail("trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex index out of range");
    if (u == v) fail("self-loop");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

/// Decode one graph6 line (printable bytes 63..126; header encodes n, then
/// the upper triangle column by column, six bits per byte, zero padded).
inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (line.starts_with(kPrefix)) line.remove_prefix(kPrefix.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty string");

  auto byte_at = [&](std::size_t i) -> int {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range 63..126");
    return c - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  int first = byte_at(0);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // '~': the next 3 bytes carry an 18-bit n (the 6-byte form for n > 258047
    // is outside this library's working range)
    if (line.size() < 4) throw std::invalid_argument("graph6: truncated size header");
    if (byte_at(1) == 63) throw std::invalid_argument("graph6: vertex count too large");
    n = (static_cast<long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
    pos = 4;
  }
  if (n < 1) throw std::invalid_argument("graph6: vertex count must be >= 1");

  const long pair_bits = n * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (line.size() - pos < payload) throw std::invalid_argument("graph6: truncated bit payload");
  if (line.size() - pos > payload) throw std::invalid_argument("graph6: trailing bytes");

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = byte_at(pos + static_cast<std::size_t>(bit / 6));
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

/// Encode to graph6, the exact inverse of parse_graph6 (n <= 62 uses the
/// one-byte header, larger n the '~' three-byte form).
inline std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("encode_graph6: vertex count too large");
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Graph gen_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph gen_complete_multipartite(const PartSizes& parts) {
  if (parts.sizes.empty()) throw std::invalid_argument("multipartite: empty part list");
  for (int s : parts.sizes)
    if (s < 1) throw std::invalid_argument("multipartite: part sizes must be >= 1");
  Graph g(parts.vertex_total());
  int a_begin = 0;
  for (std::size_t a = 0; a < parts.sizes.size(); ++a) {
    const int a_end = a_begin + parts.sizes[a];
    int b_begin = a_end;
    for (std::size_t b = a + 1; b < parts.sizes.size(); ++b) {
      const int b_end = b_begin + parts.sizes[b];
      for (int u = a_begin; u < a_end; ++u)
        for (int v = b_begin; v < b_end; ++v) g.add_edge(u, v);
      b_begin = b_end;
    }
    a_begin = a_end;
  }
  return g;
}

struct TuranGraph {
  Graph graph;
  PartSizes parts;
};

/// Balanced complete r-partite graph on n vertices: part sizes differ by at
/// most one, larger parts first, vertices assigned contiguously.
inline TuranGraph gen_turan(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("turan: need 1 <= r <= n");
  PartSizes parts;
  const int q = n / r;
  const int rem = n % r;
  for (int s = 0; s < r; ++s) parts.sizes.push_back(s < rem ? q + 1 : q);
  Graph g = gen_complete_multipartite(parts);
  return {std::move(g), std::move(parts)};
}

/// Seeded G(n, p): pair (u, v), u < v, in lexicographic order draws one
/// splitmix64 value; the edge is present iff the draw, mapped to [0, 1),
/// is below p. Identical (n, p, seed) give identical graphs everywhere.
inline Graph gen_random(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random: p must be in [0, 1]");
  Graph g(n);
  detail::Splitmix64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace tclique
