#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tclique/graph.hpp"

namespace tclique {

/// True iff g contains a (not necessarily induced) subgraph isomorphic to h.
/// Backtracking over injective vertex maps, pattern vertices ordered by
/// descending degree, with degree pruning at every assignment.
inline bool contains_subgraph(const Graph& g, const Graph& h) {
  const int nh = h.vertex_count();
  const int ng = g.vertex_count();
  if (nh > ng) return false;

  std::vector<int> order(static_cast<std::size_t>(nh));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int da = h.degree(a), db = h.degree(b);
    return da != db ? da > db : a < b;
  });

  std::vector<int> map(static_cast<std::size_t>(nh), -1);
  std::vector<bool> used(static_cast<std::size_t>(ng), false);

  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == nh) return true;
    const int hv = order[static_cast<std::size_t>(pos)];
    const int dh = h.degree(hv);
    for (int gv = 0; gv < ng; ++gv) {
      if (used[static_cast<std::size_t>(gv)] || g.degree(gv) < dh) continue;
      bool ok = true;
      for (int prev = 0; prev < pos; ++prev) {
        const int hu = order[static_cast<std::size_t>(prev)];
        if (h.adjacent(hv, hu) && !g.adjacent(gv, map[static_cast<std::size_t>(hu)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(gv)] = true;
      map[static_cast<std::size_t>(hv)] = gv;
      if (self(self, pos + 1)) return true;
      used[static_cast<std::size_t>(gv)] = false;
      map[static_cast<std::size_t>(hv)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

namespace detail {

// exact maximum clique size by bitset branch and bound (hosts are <= 16
// vertices here, so a single word always suffices)
inline int max_clique_size(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1ULL << u;
  }
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    while (cand != 0) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, cand & nbr[static_cast<std::size_t>(v)], size + 1);
    }
  };
  rec(rec, (n == 64) ? ~0ULL : ((1ULL << n) - 1), 0);
  return best;
}

inline bool colorable_with(const Graph& g, const std::vector<int>& order, int k) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int pos, int used) -> bool {
    if (pos == n) return true;
    const int v = order[static_cast<std::size_t>(pos)];
    // a fresh color is tried at most once per level; trying more than
    // used+1 colors only revisits symmetric assignments
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (self(self, pos + 1, std::max(used, c + 1))) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

/// Exact chromatic number by branch and bound: seed the search with the
/// clique number as a lower bound, then test k-colorability upward.
/// Instances above 16 vertices are rejected (search budget).
inline int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw std::invalid_argument("chromatic_number: vertex count above the 16-vertex budget");
  if (g.edge_count() == 0) return 1;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });

  for (int k = detail::max_clique_size(g); k <= n; ++k) {
    if (detail::colorable_with(g, order, k)) return k;
  }
  return n;  // unreachable: every graph is n-colorable
}

}  // namespace tclique
