#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tclique/cliques.hpp"
#include "tclique/solver.hpp"

namespace tclique {

/// Lower bound t * c_t(G) / n on mu_t(G); attained with equality whenever
/// every vertex lies in the same number of t-cliques.
inline double clique_lower_bound(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("clique_lower_bound: order t must be >= 2");
  return static_cast<double>(t) * static_cast<double>(clique_count(g, t)) /
         static_cast<double>(g.vertex_count());
}

/// Wilf-type upper bound (t/n) * C(n,t)^{1/t} * c_t(G)^{(t-1)/t} on mu_t(G);
/// attained with equality by complete graphs and by graphs with no t-clique.
/// At t = 2 it reduces to the classical sqrt(2 (1 - 1/n) c_2(G)).
inline double wilf_upper_bound(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("wilf_upper_bound: order t must be >= 2");
  const double ct = static_cast<double>(clique_count(g, t));
  if (ct == 0.0) return 0.0;
  const int n = g.vertex_count();
  const double td = static_cast<double>(t);
  return td / n * std::pow(detail::binomial(n, t), 1.0 / td) * std::pow(ct, (td - 1.0) / td);
}

/// Reference scale n^{r-1} / r^{r-1} for the extremal spectral radius of
/// graphs forbidding an H of chromatic number r + 1; coincides with
/// turan_mu of the balanced r-partite graph exactly when r divides n.
inline double ess_reference(int r, int n) {
  if (r < 2) throw std::invalid_argument("ess_reference: r must be >= 2");
  return detail::ipow(static_cast<double>(n) / r, r - 1);
}

/// The three-term chain lower <= mu <= upper with equality diagnostics.
/// The numeric flags use an absolute 1e-8 window (an order above the solver
/// tolerance); the certificates name the combinatorial conditions that were
/// verified exactly, since a numeric coincidence alone proves nothing.
struct BoundReport {
  int n = 0;
  int t = 0;
  std::uint64_t c_t = 0;
  double lower = 0.0;
  double mu = 0.0;
  double upper = 0.0;
  bool lower_equality = false;
  bool upper_equality = false;
  std::vector<std::string> equality_certificates;
  SpectralResult spectral;
};

inline BoundReport bound_report(const Graph& g, int t, const SolverConfig& cfg) {
  if (t < 2) throw std::invalid_argument("bound_report: order t must be >= 2");
  constexpr double kEqualityWindow = 1e-8;

  BoundReport report;
  report.n = g.vertex_count();
  report.t = t;
  report.c_t = clique_count(g, t);
  report.lower = clique_lower_bound(g, t);
  report.upper = wilf_upper_bound(g, t);
  report.spectral = clique_spectral_radius(g, t, cfg);
  report.mu = report.spectral.mu;
  report.lower_equality = std::abs(report.lower - report.mu) <= kEqualityWindow;
  report.upper_equality = std::abs(report.upper - report.mu) <= kEqualityWindow;

  const auto counts = per_vertex_clique_counts(g, t);
  bool uniform = true;
  for (std::int64_t c : counts) uniform = uniform && (c == counts.front());
  if (uniform) report.equality_certificates.push_back("uniform-vertex-clique-counts");

  const std::size_t complete_edges =
      static_cast<std::size_t>(report.n) * (static_cast<std::size_t>(report.n) - 1) / 2;
  if (g.edge_count() == complete_edges) report.equality_certificates.push_back("complete-graph");
  if (report.c_t == 0) report.equality_certificates.push_back("t-clique-free");
  return report;
}

}  // namespace tclique
