#pragma once

// Test-only reference implementations, written against plain dense matrices
// so they share no code path with the tensor solver they cross-check.

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tclique/graph.hpp"
#include "tclique/tensor.hpp"

namespace testsupport {

// Dense reference for the contraction: walk all n^{t-1} index tuples through
// tensor entries and accumulate entry * product. O(n^t), usable up to toy
// sizes only, and independent of the clique-list walk inside apply.
inline std::vector<double> dense_apply(const tclique::ImplicitCliqueTensor& tensor,
                                       const std::vector<double>& x) {
  const int n = tensor.dimension();
  const int t = tensor.order();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(t), 0);
  for (int i = 0; i < n; ++i) {
    idx[0] = i;
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == t) {
        double prod = tensor.entry(idx);
        for (int k = 1; k < t; ++k)
          prod *= x[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        out[static_cast<std::size_t>(i)] += prod;
        return;
      }
      for (int v = 0; v < n; ++v) {
        idx[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 1);
  }
  return out;
}

// Spectral radius of the adjacency matrix: BFS component split, then a
// shifted dense power iteration with Collatz ratio brackets per component.
inline double adjacency_spectral_radius(const tclique::Graph& g, double tol = 1e-12,
                                        std::uint64_t max_iter = 2'000'000) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comp_count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = comp_count;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = comp_count;
          q.push(v);
        }
      }
    }
    ++comp_count;
  }

  double best = 0.0;
  for (int c = 0; c < comp_count; ++c) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);
    if (members.size() == 1) continue;  // isolated vertex: eigenvalue 0

    std::vector<double> x(members.size(), 1.0 / std::sqrt(static_cast<double>(members.size())));
    std::vector<double> y(members.size());
    double lambda = 0.0;
    for (std::uint64_t it = 0; it < max_iter; ++it) {
      // y = (A + I) x restricted to the component
      for (std::size_t a = 0; a < members.size(); ++a) {
        double sum = x[a];
        for (std::size_t b = 0; b < members.size(); ++b)
          if (g.adjacent(members[a], members[b])) sum += x[b];
        y[a] = sum;
      }
      double lo = std::numeric_limits<double>::infinity();
      double hi = -std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < members.size(); ++a) {
        const double ratio = y[a] / x[a];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      lambda = 0.5 * (lo + hi) - 1.0;
      if (hi - lo <= tol * std::max(1.0, hi)) break;
      double norm = 0.0;
      for (double v : y) norm += v * v;
      norm = std::sqrt(norm);
      for (std::size_t a = 0; a < members.size(); ++a) x[a] = y[a] / norm;
    }
    best = std::max(best, lambda);
  }
  return best;
}

}  // namespace testsupport
