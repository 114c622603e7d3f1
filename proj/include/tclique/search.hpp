#pragma once

#include <cstdint>
#include <functional>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tclique/bounds.hpp"
#include "tclique/cliques.hpp"
#include "tclique/graph.hpp"
#include "tclique/solver.hpp"
#include "tclique/subgraph.hpp"

namespace tclique {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SearchObjective { mu_t, c_t };
enum class SearchSource { all_labeled, graph6_stream };

struct SearchSpec {
  int n = 0;
  Graph forbidden{1};
  int t = 2;
  SearchObjective objective = SearchObjective::mu_t;
  SearchSource source = SearchSource::all_labeled;
};

struct ExtremalRecord {
  double best_value = 0.0;
  std::string witness_graph6;
  std::uint64_t examined = 0;
  std::uint64_t skipped_non_h_free = 0;
  bool matches_turan = false;
};

/// Sink for malformed stream lines: (1-based line number, message).
/// Processing continues after a report.
using StreamErrorSink = std::function<void(std::size_t, const std::string&)>;

namespace detail {

// objective values closer than this are treated as tied and the tie goes to
// the lexicographically smaller graph6 encoding
constexpr double kSearchTieWindow = 1e-9;

inline double evaluate_objective(const Graph& g, const SearchSpec& spec, const SolverConfig& cfg) {
  if (spec.objective == SearchObjective::c_t)
    return static_cast<double>(clique_count(g, spec.t));
  return clique_spectral_radius(g, spec.t, cfg).mu;
}

struct RunningBest {
  bool found = false;
  double value = -std::numeric_limits<double>::infinity();
  std::string graph6;

  void offer(double candidate_value, const Graph& g) {
    if (found && candidate_value <= value - kSearchTieWindow) return;
    std::string g6 = encode_graph6(g);
    if (!found || candidate_value > value + kSearchTieWindow || g6 < graph6) {
      found = true;
      value = candidate_value;
      graph6 = std::move(g6);
    }
  }
};

inline bool turan_comparison(const SearchSpec& spec, double best_value) {
  int chi = 0;
  try {
    chi = chromatic_number(spec.forbidden);
  } catch (const std::invalid_argument&) {
    return false;  // forbidden graph above the exact-chromatic budget
  }
  const int r = chi - 1;
  if (r < 2 || r > spec.n || r != spec.t) return false;
  if (spec.objective == SearchObjective::c_t)
    return best_value == static_cast<double>(turan_clique_count(spec.n, r));
  const TuranGraph tg = gen_turan(spec.n, r);
  return std::abs(best_value - turan_mu(tg.parts)) <= 1e-8;
}

}  // namespace detail

/// Exhaustive maximization over every labeled graph on spec.n vertices:
/// edge masks 0 .. 2^C(n,2)-1 in increasing order, bit k of the mask being
/// the k-th vertex pair in lexicographic order. Graphs containing the
/// forbidden subgraph are filtered out; ties in the objective are broken by
/// the lexicographically smallest graph6 encoding of the witness.
inline ExtremalRecord search(const SearchSpec& spec, const SolverConfig& cfg) {
  if (spec.source != SearchSource::all_labeled)
    throw std::invalid_argument("search: graph6-stream source requires an input stream");
  if (spec.t < 2) throw std::invalid_argument("search: order t must be >= 2");
  if (spec.n < 1) throw std::invalid_argument("search: n must be >= 1");
  if (spec.n > 8)
    throw budget_error("search: all-labeled enumeration is limited to n <= 8");

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < spec.n; ++u)
    for (int v = u + 1; v < spec.n; ++v) pairs.emplace_back(u, v);

  ExtremalRecord record;
  detail::RunningBest best;
  Graph g(spec.n);
  const std::uint64_t total = 1ULL << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    g.clear_edges();
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const auto& [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(bits))];
      g.add_edge(u, v);
    }
    if (contains_subgraph(g, spec.forbidden)) {
      ++record.skipped_non_h_free;
      continue;
    }
    ++record.examined;
    best.offer(detail::evaluate_objective(g, spec, cfg), g);
  }

  if (!best.found) throw std::runtime_error("search: no H-free graphs examined");
  record.best_value = best.value;
  record.witness_graph6 = best.graph6;
  record.matches_turan = detail::turan_comparison(spec, record.best_value);
  return record;
}

/// Same search over a graph6 stream, one graph per line. Malformed lines
/// (including graphs whose vertex count differs from spec.n) are reported to
/// the sink with their line number and skipped.
inline ExtremalRecord search(const SearchSpec& spec, std::istream& in, const SolverConfig& cfg,
                             const StreamErrorSink& on_error = {}) {
  if (spec.t < 2) throw std::invalid_argument("search: order t must be >= 2");
  if (spec.n < 1) throw std::invalid_argument("search: n must be >= 1");

  ExtremalRecord record;
  detail::RunningBest best;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Graph g(1);
    try {
      g = parse_graph6(line);
      if (g.vertex_count() != spec.n)
        throw std::invalid_argument("vertex count " + std::to_string(g.vertex_count()) +
                                    " does not match the search size " + std::to_string(spec.n));
    } catch (const std::exception& e) {
      if (on_error) on_error(line_no, e.what());
      continue;
    }
    if (contains_subgraph(g, spec.forbidden)) {
      ++record.skipped_non_h_free;
      continue;
    }
    ++record.examined;
    best.offer(detail::evaluate_objective(g, spec, cfg), g);
  }

  if (!best.found) {
    throw std::runtime_error(line_no == 0 ? "search: no graphs examined"
                                          : "search: no H-free graphs examined");
  }
  record.best_value = best.value;
  record.witness_graph6 = best.graph6;
  record.matches_turan = detail::turan_comparison(spec, record.best_value);
  return record;
}

// ---------------------------------------------------------------------------
// Finite-n ratio tables
// ---------------------------------------------------------------------------

struct ScalingRow {
  int n = 0;
  double mu = 0.0;
  double reference = 0.0;
  double ratio = 0.0;
};

/// Per n: the closed-form mu_r of the balanced r-partite graph against the
/// reference scale (n/r)^{r-1}. The ratio is exactly 1 when r divides n and
/// strictly below 1 otherwise.
inline std::vector<ScalingRow> scaling_table(int r, int n_from, int n_to) {
  if (r < 2) throw std::invalid_argument("scaling_table: r must be >= 2");
  if (n_from < r) throw std::invalid_argument("scaling_table: range must start at n >= r");
  if (n_to < n_from) throw std::invalid_argument("scaling_table: empty range");
  std::vector<ScalingRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    ScalingRow row;
    row.n = n;
    row.mu = turan_mu(gen_turan(n, r).parts);
    row.reference = ess_reference(r, n);
    row.ratio = row.mu / row.reference;
    rows.push_back(row);
  }
  return rows;
}

struct CliqueScalingRow {
  int n = 0;
  std::uint64_t clique_count = 0;
  double reference = 0.0;
  double ratio = 0.0;
};

/// Per n: the exact r-clique count of the balanced r-partite graph against
/// the reference scale (n/r)^r.
inline std::vector<CliqueScalingRow> clique_scaling_table(int r, int n_from, int n_to) {
  if (r < 2) throw std::invalid_argument("clique_scaling_table: r must be >= 2");
  if (n_from < r) throw std::invalid_argument("clique_scaling_table: range must start at n >= r");
  if (n_to < n_from) throw std::invalid_argument("clique_scaling_table: empty range");
  std::vector<CliqueScalingRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    CliqueScalingRow row;
    row.n = n;
    row.clique_count = turan_clique_count(n, r);
    row.reference = detail::ipow(static_cast<double>(n) / r, r);
    row.ratio = static_cast<double>(row.clique_count) / row.reference;
    rows.push_back(row);
  }
  return rows;
}

inline void write_csv(std::ostream& out, const std::vector<ScalingRow>& rows) {
  out << "n,mu,reference,ratio\n";
  out << std::setprecision(17);
  for (const auto& row : rows)
    out << row.n << ',' << row.mu << ',' << row.reference << ',' << row.ratio << '\n';
}

inline void write_csv(std::ostream& out, const std::vector<CliqueScalingRow>& rows) {
  out << "n,clique_count,reference,ratio\n";
  out << std::setprecision(17);
  for (const auto& row : rows)
    out << row.n << ',' << row.clique_count << ',' << row.reference << ',' << row.ratio << '\n';
}

}  // namespace tclique
