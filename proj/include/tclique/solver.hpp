#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tclique/detail.hpp"
#include "tclique/tensor.hpp"

namespace tclique {

enum class SolveMethod { power_iteration, closed_form, zero_cliques, ascent_oracle };

inline std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::power_iteration: return "power-iteration";
    case SolveMethod::closed_form: return "closed-form";
    case SolveMethod::zero_cliques: return "zero-cliques";
    case SolveMethod::ascent_oracle: return "ascent-oracle";
  }
  return "unknown";
}

enum class AscentRule { multiplicative_update };

struct SolverConfig {
  double tolerance = 1e-10;
  std::uint64_t max_iterations = 1'000'000;
  /// positive diagonal shift; any positive value makes the power iteration
  /// monotone and convergent on a component, the magnitude only affects speed
  double shift = 1.0;
  int ascent_restarts = 64;
  AscentRule ascent_rule = AscentRule::multiplicative_update;
  /// seed of the deterministic stream behind the ascent restarts
  std::uint64_t ascent_seed = 0x7C3A9D2F5E81B64DULL;
  /// optional per-step hook (iteration, lambda_min, lambda_max); used by
  /// tests to watch the Collatz bracket
  std::function<void(std::uint64_t, double, double)> bracket_observer;

  void validate() const {
    if (!(tolerance > 0.0)) throw std::invalid_argument("SolverConfig: tolerance must be positive");
    if (!(shift > 0.0)) throw std::invalid_argument("SolverConfig: shift must be positive");
    if (max_iterations < 1) throw std::invalid_argument("SolverConfig: max_iterations must be >= 1");
    if (ascent_restarts < 0) throw std::invalid_argument("SolverConfig: ascent_restarts must be >= 0");
  }
};

struct SpectralResult {
  double mu = 0.0;
  WeightVector eigenvector;
  double residual = 0.0;
  std::uint64_t iterations = 0;
  bool converged = false;
  SolveMethod method = SolveMethod::power_iteration;
};

/// Connected components of the hypergraph whose edges are the t-cliques.
/// Vertices lying in no clique are excluded from the partition and reported
/// separately. Components are listed by ascending smallest member.
struct CliqueComponents {
  std::vector<std::vector<int>> components;
  std::vector<int> unsupported;
};

inline CliqueComponents clique_components(const CliqueSet& cliques) {
  const int n = cliques.host_vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };

  std::vector<bool> supported(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const auto verts = cliques.clique(k);
    for (int v : verts) supported[static_cast<std::size_t>(v)] = true;
    for (std::size_t j = 1; j < verts.size(); ++j) {
      const int a = find(verts[0]), b = find(verts[j]);
      if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
  }

  CliqueComponents out;
  std::unordered_map<int, std::size_t> slot;
  for (int v = 0; v < n; ++v) {
    if (!supported[static_cast<std::size_t>(v)]) {
      out.unsupported.push_back(v);
      continue;
    }
    const int root = find(v);
    auto [it, fresh] = slot.try_emplace(root, out.components.size());
    if (fresh) out.components.emplace_back();
    out.components[it->second].push_back(v);
  }
  return out;
}

namespace detail {

// contraction restricted to a list of cliques, written into y over the
// component only (y must be pre-filled with the shift term)
inline void accumulate_clique_products(const CliqueSet& cliques,
                                       std::span<const std::size_t> ids,
                                       std::span<const double> x, std::span<double> y,
                                       std::span<double> prefix, std::span<double> suffix) {
  const std::size_t t = prefix.size() - 1;
  for (std::size_t id : ids) {
    const auto verts = cliques.clique(id);
    prefix[0] = 1.0;
    for (std::size_t j = 0; j < t; ++j)
      prefix[j + 1] = prefix[j] * x[static_cast<std::size_t>(verts[j])];
    suffix[t] = 1.0;
    for (std::size_t j = t; j-- > 0;)
      suffix[j] = suffix[j + 1] * x[static_cast<std::size_t>(verts[j])];
    for (std::size_t j = 0; j < t; ++j)
      y[static_cast<std::size_t>(verts[j])] += prefix[j] * suffix[j + 1];
  }
}

inline double pow_positive(double base, int e) { return ipow(base, e); }

}  // namespace detail

/// Shifted power iteration on the tensor restricted to one clique-connected
/// component, which is exactly the weakly irreducible case where the method
/// is guaranteed to converge. Per step, from the positive iterate x:
///
///   y_i      = (A x^{t-1})_i + shift * x_i^{t-1}
///   lambda_- = min_i y_i / x_i^{t-1} - shift,   lambda_+ = max_i ... - shift
///   x        <- y^{[1/(t-1)]}, renormalized to the unit t-norm sphere
///
/// The bracket [lambda_-, lambda_+] always contains mu, tightens
/// monotonically, and the iteration stops once its width drops below
/// tolerance * max(1, lambda_+). The reported mu is the bracket midpoint and
/// the eigenvector is the iterate the final bracket was measured at.
inline SpectralResult power_iteration(const ImplicitCliqueTensor& tensor,
                                      std::span<const int> component,
                                      const SolverConfig& cfg) {
  cfg.validate();
  if (component.empty()) throw std::invalid_argument("power_iteration: empty component");
  const int n = tensor.dimension();
  const int t = tensor.order();
  const int tm1 = t - 1;
  const double rho = cfg.shift;

  std::vector<bool> in_comp(static_cast<std::size_t>(n), false);
  for (int v : component) {
    if (v < 0 || v >= n) throw std::out_of_range("power_iteration: component vertex out of range");
    in_comp[static_cast<std::size_t>(v)] = true;
  }
  // restriction to the component: cliques with every vertex inside
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < tensor.cliques().size(); ++k) {
    const auto verts = tensor.cliques().clique(k);
    bool inside = true;
    for (int v : verts) inside = inside && in_comp[static_cast<std::size_t>(v)];
    if (inside) ids.push_back(k);
  }

  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  const double uniform = std::pow(static_cast<double>(component.size()), -1.0 / t);
  for (int v : component) x[static_cast<std::size_t>(v)] = uniform;

  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  std::vector<double> xpow(static_cast<std::size_t>(n), 0.0);
  std::vector<double> prefix(static_cast<std::size_t>(t) + 1), suffix(static_cast<std::size_t>(t) + 1);

  SpectralResult result;
  result.method = SolveMethod::power_iteration;
  double lambda_lo = -std::numeric_limits<double>::infinity();
  double lambda_hi = std::numeric_limits<double>::infinity();

  for (std::uint64_t iter = 1; iter <= cfg.max_iterations; ++iter) {
    for (int v : component) {
      const std::size_t i = static_cast<std::size_t>(v);
      xpow[i] = detail::pow_positive(x[i], tm1);
      y[i] = rho * xpow[i];
    }
    detail::accumulate_clique_products(tensor.cliques(), ids, x, y, prefix, suffix);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int v : component) {
      const std::size_t i = static_cast<std::size_t>(v);
      const double ratio = y[i] / xpow[i] - rho;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    result.iterations = iter;
    if (cfg.bracket_observer) cfg.bracket_observer(iter, lo, hi);
    // Collatz bounds tighten monotonically on a weakly irreducible component
    assert(lo >= lambda_lo - 1e-12 * std::max(1.0, std::abs(lo)));
    assert(hi <= lambda_hi + 1e-12 * std::max(1.0, std::abs(hi)));
    lambda_lo = lo;
    lambda_hi = hi;

    if (hi - lo <= cfg.tolerance * std::max(1.0, hi)) {
      result.converged = true;
      break;
    }
    if (iter == cfg.max_iterations) break;

    double norm_sum = 0.0;
    for (int v : component) {
      const std::size_t i = static_cast<std::size_t>(v);
      x[i] = (tm1 == 1) ? y[i] : ((tm1 == 2) ? std::sqrt(y[i]) : std::pow(y[i], 1.0 / tm1));
      norm_sum += detail::pow_positive(x[i], t);
    }
    const double scale = std::pow(norm_sum, -1.0 / t);
    for (int v : component) x[static_cast<std::size_t>(v)] *= scale;
  }

  result.mu = 0.5 * (lambda_hi + lambda_lo);
  result.eigenvector = {std::move(x), true};
  result.residual = tensor.residual(result.eigenvector, result.mu);
  return result;
}

/// Multi-start maximization of the Rayleigh form over the nonnegative unit
/// t-norm sphere; the independent cross-check for the power method. Each
/// start ascends by the multiplicative rule
///
///   x_i <- ( x_i * ((A x^{t-1})_i + shift * x_i^{t-1}) )^{1/t},  renormalized,
///
/// whose interior fixed points are exactly the tensor eigenpairs, and stops
/// once the eigen-equation residual falls below tolerance. Runs from the
/// uniform start plus ascent_restarts seeded random starts and returns the
/// best value found.
inline SpectralResult ascent_oracle(const ImplicitCliqueTensor& tensor, const SolverConfig& cfg) {
  cfg.validate();
  const int n = tensor.dimension();
  const int t = tensor.order();
  const int tm1 = t - 1;
  const double rho = cfg.shift;

  SpectralResult best;
  best.method = SolveMethod::ascent_oracle;

  if (tensor.clique_count() == 0) {
    // zero tensor: the form is identically zero
    best.mu = 0.0;
    best.eigenvector = make_unit_t_norm(std::vector<double>(static_cast<std::size_t>(n), 1.0), t);
    best.converged = true;
    return best;
  }

  detail::Splitmix64 rng(cfg.ascent_seed);
  std::vector<double> x, ax(static_cast<std::size_t>(n));
  std::vector<double> prefix(static_cast<std::size_t>(t) + 1), suffix(static_cast<std::size_t>(t) + 1);
  std::vector<std::size_t> all_ids(tensor.clique_count());
  std::iota(all_ids.begin(), all_ids.end(), std::size_t{0});

  double best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t total_steps = 0;

  const int starts = cfg.ascent_restarts + 1;
  for (int s = 0; s < starts; ++s) {
    if (s == 0) {
      x.assign(static_cast<std::size_t>(n), 1.0);
    } else {
      x.resize(static_cast<std::size_t>(n));
      for (double& v : x) v = rng.next_double() + 1e-3;
    }
    x = make_unit_t_norm(std::move(x), t).entries;

    double value = 0.0;
    double res = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (std::uint64_t step = 0;; ++step) {
      std::fill(ax.begin(), ax.end(), 0.0);
      detail::accumulate_clique_products(tensor.cliques(), all_ids, x, ax, prefix, suffix);
      value = 0.0;
      for (std::size_t i = 0; i < ax.size(); ++i) value += x[i] * ax[i];
      res = 0.0;
      for (std::size_t i = 0; i < ax.size(); ++i)
        res = std::max(res, std::abs(ax[i] - value * detail::pow_positive(x[i], tm1)));
      if (res <= cfg.tolerance) {
        converged = true;
        break;
      }
      if (step >= cfg.max_iterations) break;
      double norm_sum = 0.0;
      for (std::size_t i = 0; i < ax.size(); ++i) {
        const double z = x[i] * (ax[i] + rho * detail::pow_positive(x[i], tm1));
        x[i] = std::pow(z, 1.0 / t);
        norm_sum += z;  // z = new x_i^t before scaling
      }
      const double scale = std::pow(norm_sum, -1.0 / t);
      for (double& v : x) v *= scale;
      ++total_steps;
    }
    if (value > best_value) {
      best_value = value;
      best.mu = value;
      best.eigenvector = {x, true};
      best.residual = res;
      best.converged = converged;
    }
  }
  best.iterations = total_steps;
  return best;
}

/// mu_t(G): zero when the graph has no t-clique; otherwise the maximum of
/// the per-component power iterations, with the winning eigenvector embedded
/// into all n coordinates (zeros elsewhere). Ties go to the component with
/// the smallest vertex index; the convergence flag is the conjunction over
/// all components.
inline SpectralResult clique_spectral_radius(const Graph& g, int t, const SolverConfig& cfg) {
  if (t < 2) throw std::invalid_argument("clique_spectral_radius: order t must be >= 2");
  cfg.validate();
  ImplicitCliqueTensor tensor(enumerate_cliques(g, t));

  if (tensor.clique_count() == 0) {
    SpectralResult r;
    r.method = SolveMethod::zero_cliques;
    r.mu = 0.0;
    r.eigenvector = make_unit_t_norm(std::vector<double>(static_cast<std::size_t>(g.vertex_count()), 1.0), t);
    r.residual = 0.0;
    r.converged = true;
    return r;
  }

  const CliqueComponents comps = clique_components(tensor.cliques());
  SpectralResult best;
  bool have = false;
  bool all_converged = true;
  std::uint64_t total_iterations = 0;
  for (const auto& comp : comps.components) {
    SpectralResult r = power_iteration(tensor, comp, cfg);
    all_converged = all_converged && r.converged;
    total_iterations += r.iterations;
    if (!have || r.mu > best.mu) {
      best = std::move(r);
      have = true;
    }
  }
  best.converged = all_converged;
  best.iterations = total_iterations;
  return best;
}

/// mu_t of the complete graph on n vertices: (t/n) * C(n, t), computed as
/// the equivalent integer C(n-1, t-1). Zero when t exceeds n.
inline double complete_mu(int n, int t) {
  if (t < 2) throw std::invalid_argument("complete_mu: order t must be >= 2");
  if (n < 1) throw std::invalid_argument("complete_mu: n must be >= 1");
  if (t > n) return 0.0;
  return detail::binomial(n - 1, t - 1);
}

/// mu_r of the complete multipartite graph with the given part sizes, at
/// clique order t = r = number of parts: (n_1 n_2 ... n_r)^{(r-1)/r}. The
/// balanced case with all parts equal is computed by integer powers so that
/// ratio tables are exact.
inline double turan_mu(const PartSizes& parts) {
  const int r = parts.part_count();
  if (r < 2) throw std::invalid_argument("turan_mu: need at least 2 parts");
  double product = 1.0;
  bool all_equal = true;
  for (int s : parts.sizes) {
    if (s < 1) throw std::invalid_argument("turan_mu: part sizes must be >= 1");
    product *= static_cast<double>(s);
    all_equal = all_equal && (s == parts.sizes.front());
  }
  if (all_equal) return detail::ipow(static_cast<double>(parts.sizes.front()), r - 1);
  return std::pow(product, (static_cast<double>(r) - 1.0) / r);
}

}  // namespace tclique
