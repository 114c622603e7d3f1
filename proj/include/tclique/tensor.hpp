#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "tclique/cliques.hpp"

namespace tclique {

/// Nonnegative weight vector over the vertices. The flag records whether the
/// entries are meant to satisfy sum_i x_i^t = 1; consumers that require the
/// unit t-norm verify it numerically.
struct WeightVector {
  std::vector<double> entries;
  bool unit_t_norm = false;
};

inline double t_norm_sum(std::span<const double> x, int t) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), t);
  return s;
}

/// Normalize to the unit t-norm sphere. Entries must be nonnegative and not
/// all zero.
inline WeightVector make_unit_t_norm(std::vector<double> entries, int t) {
  double s = 0.0;
  for (double v : entries) {
    if (v < 0.0) throw std::invalid_argument("make_unit_t_norm: negative entry");
    s += std::pow(v, t);
  }
  if (s <= 0.0) throw std::invalid_argument("make_unit_t_norm: zero vector");
  const double scale = std::pow(s, -1.0 / t);
  for (double& v : entries) v *= scale;
  return {std::move(entries), true};
}

/// Order-t, dimension-n view over a clique list. The tensor itself is never
/// materialized: an entry is 1/(t-1)! exactly when the index tuple is a
/// permutation of a t-clique, and the contraction walks the clique list, so
/// storage and apply cost scale with c_t(G) rather than n^t.
class ImplicitCliqueTensor {
 public:
  explicit ImplicitCliqueTensor(CliqueSet cliques)
      : cliques_(std::move(cliques)),
        incidence_offsets_(static_cast<std::size_t>(cliques_.host_vertex_count()) + 1, 0) {
    // per-vertex incidence index in CSR form
    const std::size_t m = cliques_.size();
    for (std::size_t k = 0; k < m; ++k)
      for (int v : cliques_.clique(k)) ++incidence_offsets_[static_cast<std::size_t>(v) + 1];
    for (std::size_t i = 1; i < incidence_offsets_.size(); ++i)
      incidence_offsets_[i] += incidence_offsets_[i - 1];
    incidence_.resize(incidence_offsets_.back());
    std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (std::size_t k = 0; k < m; ++k)
      for (int v : cliques_.clique(k)) incidence_[cursor[static_cast<std::size_t>(v)]++] = k;
  }

  int order() const { return cliques_.order(); }
  int dimension() const { return cliques_.host_vertex_count(); }
  const CliqueSet& cliques() const { return cliques_; }
  std::size_t clique_count() const { return cliques_.size(); }

  /// Clique ids containing vertex v, in lexicographic clique order.
  std::span<const std::size_t> incident_cliques(int v) const {
    check_vertex(v);
    return {incidence_.data() + incidence_offsets_[static_cast<std::size_t>(v)],
            incidence_offsets_[static_cast<std::size_t>(v) + 1] - incidence_offsets_[static_cast<std::size_t>(v)]};
  }

  bool vertex_supported(int v) const { return !incident_cliques(v).empty(); }

  /// Entry a_{i_1 ... i_t}: 1/(t-1)! when the indices are distinct and form a
  /// t-clique, 0 otherwise.
  double entry(std::span<const int> index_tuple) const {
    const int t = order();
    if (static_cast<int>(index_tuple.size()) != t)
      throw std::invalid_argument("tensor entry: tuple length must equal the order");
    for (int i : index_tuple) check_vertex(i);
    std::vector<int> sorted(index_tuple.begin(), index_tuple.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0.0;
    if (!is_clique(sorted)) return 0.0;
    double factorial = 1.0;
    for (int k = 2; k < t; ++k) factorial *= k;
    return 1.0 / factorial;
  }

  /// The contraction (A x^{t-1})_i = sum over cliques S containing i of the
  /// product of x over S minus i. The (t-1)! equal permutations of each
  /// clique cancel the 1/(t-1)! entry weight, so each clique contributes one
  /// plain product; prefix/suffix products avoid dividing by x_i (which may
  /// be zero). Accumulation order is fixed by the lexicographic clique order.
  void apply_into(std::span<const double> x, std::span<double> out) const {
    const std::size_t t = static_cast<std::size_t>(order());
    const std::size_t n = static_cast<std::size_t>(dimension());
    if (x.size() != n || out.size() != n)
      throw std::invalid_argument("apply: dimension mismatch");
    std::fill(out.begin(), out.end(), 0.0);
    std::vector<double> prefix(t + 1);
    std::vector<double> suffix(t + 1);
    for (std::size_t k = 0; k < cliques_.size(); ++k) {
      const auto verts = cliques_.clique(k);
      prefix[0] = 1.0;
      for (std::size_t j = 0; j < t; ++j)
        prefix[j + 1] = prefix[j] * x[static_cast<std::size_t>(verts[j])];
      suffix[t] = 1.0;
      for (std::size_t j = t; j-- > 0;)
        suffix[j] = suffix[j + 1] * x[static_cast<std::size_t>(verts[j])];
      for (std::size_t j = 0; j < t; ++j)
        out[static_cast<std::size_t>(verts[j])] += prefix[j] * suffix[j + 1];
    }
  }

  std::vector<double> apply(const WeightVector& x) const {
    std::vector<double> out(static_cast<std::size_t>(dimension()));
    apply_into(x.entries, out);
    return out;
  }

  /// x^T A x^{t-1} = t * sum over cliques of the product of x over the
  /// clique. Requires x on the unit t-norm sphere (checked to 1e-12).
  double rayleigh(const WeightVector& x) const {
    if (x.entries.size() != static_cast<std::size_t>(dimension()))
      throw std::invalid_argument("rayleigh: dimension mismatch");
    if (std::abs(t_norm_sum(x.entries, order()) - 1.0) > 1e-12)
      throw std::invalid_argument("rayleigh: x is not unit t-norm within tolerance");
    return rayleigh_unchecked(x.entries);
  }

  double rayleigh_unchecked(std::span<const double> x) const {
    const int t = order();
    double sum = 0.0;
    for (std::size_t k = 0; k < cliques_.size(); ++k) {
      double prod = 1.0;
      for (int v : cliques_.clique(k)) prod *= x[static_cast<std::size_t>(v)];
      sum += prod;
    }
    return static_cast<double>(t) * sum;
  }

  /// max_i | (A x^{t-1})_i - lambda * x_i^{t-1} |; zero for a true eigenpair.
  double residual(const WeightVector& x, double lambda) const {
    const int t = order();
    bool nonzero = false;
    for (double v : x.entries) nonzero |= (v != 0.0);
    if (!nonzero) throw std::invalid_argument("residual: x must be nonzero");
    std::vector<double> ax(static_cast<std::size_t>(dimension()));
    apply_into(x.entries, ax);
    double worst = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
      const double xi = x.entries[i];
      const double diff = std::abs(ax[i] - lambda * std::pow(xi, t - 1));
      worst = std::max(worst, diff);
    }
    return worst;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= dimension()) throw std::out_of_range("tensor: vertex index out of range");
  }

  bool is_clique(const std::vector<int>& sorted) const {
    // binary search in the lexicographically sorted clique list
    std::size_t lo = 0, hi = cliques_.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const auto c = cliques_.clique(mid);
      const auto ord =
          std::lexicographical_compare_three_way(c.begin(), c.end(), sorted.begin(), sorted.end());
      if (ord == std::strong_ordering::equal) return true;
      if (ord == std::strong_ordering::less)
        lo = mid + 1;
      else
        hi = mid;
    }
    return false;
  }

  CliqueSet cliques_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<std::size_t> incidence_;
};

}  // namespace tclique
