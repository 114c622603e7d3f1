#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tclique/graph.hpp"

namespace tclique {

/// The set C_t(G): all t-vertex cliques of a host graph, each stored as a
/// strictly increasing tuple, in lexicographic order. Storage is one flat
/// array with stride t.
class CliqueSet {
 public:
  CliqueSet(int t, int n) : t_(t), n_(n) {
    if (t < 2) throw std::invalid_argument("CliqueSet: order must be >= 2");
    if (n < 1) throw std::invalid_argument("CliqueSet: host vertex count must be >= 1");
  }

  int order() const { return t_; }
  int host_vertex_count() const { return n_; }
  std::size_t size() const { return flat_.size() / static_cast<std::size_t>(t_); }
  bool empty() const { return flat_.empty(); }

  std::span<const int> clique(std::size_t k) const {
    return {flat_.data() + k * static_cast<std::size_t>(t_), static_cast<std::size_t>(t_)};
  }

  void append(std::span<const int> verts) {
    flat_.insert(flat_.end(), verts.begin(), verts.end());
  }

  std::span<const int> flat() const { return flat_; }

 private:
  int t_;
  int n_;
  std::vector<int> flat_;
};

/// Enumerate all t-cliques in lexicographic order: depth-limited
/// Bron-Kerbosch-style recursion over bitset candidate sets, without the
/// maximality pruning (every size-t clique is wanted, maximal or not).
/// Branches die early when the candidate count cannot reach depth t.
inline CliqueSet enumerate_cliques(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("enumerate_cliques: order t must be >= 2");
  const int n = g.vertex_count();
  const int w = g.words_per_row();
  CliqueSet out(t, n);
  if (t > n) return out;

  // candidate bitsets, one row of w words per recursion level
  std::vector<std::uint64_t> cand(static_cast<std::size_t>(t) * w);
  std::vector<int> cur(static_cast<std::size_t>(t));

  // level 0: every vertex is a candidate
  for (int i = 0; i < n; ++i) cand[static_cast<std::size_t>(i) / 64] |= 1ULL << (i % 64);

  auto level_row = [&](int level) {
    return std::span<std::uint64_t>(cand.data() + static_cast<std::size_t>(level) * w,
                                    static_cast<std::size_t>(w));
  };

  auto rec = [&](auto&& self, int level) -> void {
    const auto row = level_row(level);
    const int remaining = t - level;
    if (detail::popcount_words(row) < remaining) return;
    detail::for_each_bit(row, [&](int v) {
      cur[static_cast<std::size_t>(level)] = v;
      if (level + 1 == t) {
        out.append(cur);
        return;
      }
      // next candidates: current ones above v that are adjacent to v
      const auto next = level_row(level + 1);
      const auto nbr = g.neighbor_bits(v);
      for (int wi = 0; wi < w; ++wi) next[static_cast<std::size_t>(wi)] = row[static_cast<std::size_t>(wi)] & nbr[static_cast<std::size_t>(wi)];
      const int vw = v / 64;
      next[static_cast<std::size_t>(vw)] &= ~((v % 64 == 63) ? ~0ULL : ((1ULL << (v % 64 + 1)) - 1));
      for (int wi = 0; wi < vw; ++wi) next[static_cast<std::size_t>(wi)] = 0;
      self(self, level + 1);
    });
  };
  rec(rec, 0);
  return out;
}

inline std::uint64_t clique_count(const Graph& g, int t) {
  return enumerate_cliques(g, t).size();
}

/// Count of t-cliques through each vertex; the entries sum to t * c_t(G).
inline std::vector<std::int64_t> per_vertex_clique_counts(const Graph& g, int t) {
  const CliqueSet cs = enumerate_cliques(g, t);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (int v : cs.clique(k)) ++counts[static_cast<std::size_t>(v)];
  return counts;
}

/// Number of r-cliques of the balanced r-partite graph on n vertices:
/// the product of the part sizes, prod_{s=0}^{r-1} floor((n+s)/r).
inline std::uint64_t turan_clique_count(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("turan_clique_count: need 1 <= r <= n");
  std::uint64_t prod = 1;
  for (int s = 0; s < r; ++s) prod *= static_cast<std::uint64_t>((n + s) / r);
  return prod;
}

}  // namespace tclique
