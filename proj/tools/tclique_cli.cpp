// Command-line front end: spectral radius, bound chain, extremal search, and
// scaling tables over the library's graph inputs.
//
// Exit codes: 0 success, 1 usage or input parse error, 2 solver
// non-convergence, 3 search budget exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tclique/json_io.hpp"
#include "tclique/tclique.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// Accepted graph inputs: generator specs ("complete:5", "turan:7,3",
// "multipartite:2,1,1", "random:8,0.5,42"), an explicit graph6 string
// ("g6:C~" or a bare graph6 word), or a path to an edge-list file.
tclique::Graph parse_graph_input(const std::string& input) {
  const auto colon = input.find(':');
  if (colon != std::string::npos) {
    const std::string head = input.substr(0, colon);
    const std::string rest = input.substr(colon + 1);
    if (head == "complete") {
      const auto v = parse_int_list(rest);
      if (v.size() != 1) throw std::invalid_argument("complete:n takes one number");
      return tclique::gen_complete(v[0]);
    }
    if (head == "turan") {
      const auto v = parse_int_list(rest);
      if (v.size() != 2) throw std::invalid_argument("turan:n,r takes two numbers");
      return tclique::gen_turan(v[0], v[1]).graph;
    }
    if (head == "multipartite") {
      return tclique::gen_complete_multipartite({parse_int_list(rest)});
    }
    if (head == "random") {
      std::stringstream ss(rest);
      int n = 0;
      double p = 0.0;
      std::uint64_t seed = 0;
      char c1 = 0, c2 = 0;
      if (!(ss >> n >> c1 >> p >> c2 >> seed) || c1 != ',' || c2 != ',' || ss.rdbuf()->in_avail() != 0)
        throw std::invalid_argument("random:n,p,seed expected");
      return tclique::gen_random(n, p, seed);
    }
    if (head == "g6") return tclique::parse_graph6(rest);
    throw std::invalid_argument("unknown generator '" + head + "'");
  }
  if (std::filesystem::exists(input)) {
    std::ifstream f(input);
    if (!f) throw std::runtime_error("cannot open '" + input + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return tclique::parse_edge_list(buf.str());
  }
  return tclique::parse_graph6(input);
}

struct OutputOptions {
  std::string format = "json";
};

void print_spectral(const tclique::SpectralResult& r, const OutputOptions& opt) {
  if (opt.format == "plain") {
    std::cout << std::setprecision(17) << r.mu << "\n";
  } else if (opt.format == "csv") {
    std::cout << "mu,residual,iterations,converged,method\n"
              << std::setprecision(17) << r.mu << ',' << r.residual << ',' << r.iterations << ','
              << (r.converged ? "true" : "false") << ',' << tclique::to_string(r.method) << "\n";
  } else {
    std::cout << nlohmann::json(r).dump(2) << "\n";
  }
}

void print_bounds(const tclique::BoundReport& r, const OutputOptions& opt) {
  if (opt.format == "plain") {
    std::cout << std::setprecision(17) << r.mu << "\n";
  } else if (opt.format == "csv") {
    std::cout << "n,t,c_t,lower,mu,upper,lower_equality,upper_equality\n"
              << r.n << ',' << r.t << ',' << r.c_t << ',' << std::setprecision(17) << r.lower
              << ',' << r.mu << ',' << r.upper << ',' << (r.lower_equality ? "true" : "false")
              << ',' << (r.upper_equality ? "true" : "false") << "\n";
  } else {
    std::cout << nlohmann::json(r).dump(2) << "\n";
  }
}

void print_record(const tclique::ExtremalRecord& r, const OutputOptions& opt) {
  if (opt.format == "plain") {
    std::cout << std::setprecision(17) << r.best_value << "\n";
  } else if (opt.format == "csv") {
    std::cout << "best_value,witness,examined,skipped_non_H_free,matches_turan\n"
              << std::setprecision(17) << r.best_value << ',' << r.witness_graph6 << ','
              << r.examined << ',' << r.skipped_non_h_free << ','
              << (r.matches_turan ? "true" : "false") << "\n";
  } else {
    std::cout << nlohmann::json(r).dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-clique tensor spectra of small graphs"};
  app.require_subcommand(1);

  tclique::SolverConfig cfg;
  std::string input;
  std::string forbidden;
  std::string objective = "mu";
  OutputOptions out;
  int t = 2;
  int r = 2;
  int n = 0;
  int n_from = 0;
  int n_to = 0;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--tol", cfg.tolerance, "convergence tolerance");
    cmd->add_option("--max-iter", cfg.max_iterations, "iteration cap");
    cmd->add_option("--shift", cfg.shift, "positive diagonal shift");
    cmd->add_option("--restarts", cfg.ascent_restarts, "ascent oracle restarts");
  };
  auto add_format_flag = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
  };

  auto* spectral = app.add_subcommand("spectral", "t-clique spectral radius of one graph");
  spectral->add_option("--input", input, "graph input")->required();
  spectral->add_option("--t", t, "clique order (>= 2)")->required();
  add_solver_flags(spectral);
  add_format_flag(spectral);

  auto* bounds = app.add_subcommand("bounds", "lower bound, mu, and upper bound with equality flags");
  bounds->add_option("--input", input, "graph input")->required();
  bounds->add_option("--t", t, "clique order (>= 2)")->required();
  add_solver_flags(bounds);
  add_format_flag(bounds);

  auto* search = app.add_subcommand("search", "maximize mu_t or c_t over H-free graphs");
  search->add_option("--n", n, "all-labeled search size (<= 8)");
  search->add_option("--input", input, "graph6 stream file, or '-' for stdin");
  search->add_option("--forbidden", forbidden, "forbidden subgraph H")->required();
  search->add_option("--t", t, "clique order of the objective")->required();
  search->add_option("--objective", objective, "objective")
      ->check(CLI::IsMember({"mu", "cliques"}));
  add_solver_flags(search);
  add_format_flag(search);

  auto* scaling = app.add_subcommand("scaling", "finite-n ratio table against the (n/r)^(r-1) scale");
  scaling->add_option("--r", r, "number of parts (>= 2)")->required();
  scaling->add_option("--n-from", n_from, "first n")->required();
  scaling->add_option("--n-to", n_to, "last n")->required();
  scaling->add_option("--objective", objective, "table contents")
      ->check(CLI::IsMember({"mu", "cliques"}));
  add_format_flag(scaling);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectral->parsed()) {
      const auto result = tclique::clique_spectral_radius(parse_graph_input(input), t, cfg);
      print_spectral(result, out);
      return result.converged ? kExitOk : kExitNotConverged;
    }

    if (bounds->parsed()) {
      const auto report = tclique::bound_report(parse_graph_input(input), t, cfg);
      print_bounds(report, out);
      return report.spectral.converged ? kExitOk : kExitNotConverged;
    }

    if (search->parsed()) {
      tclique::SearchSpec spec;
      spec.forbidden = parse_graph_input(forbidden);
      spec.t = t;
      spec.objective = (objective == "cliques") ? tclique::SearchObjective::c_t
                                                : tclique::SearchObjective::mu_t;
      tclique::ExtremalRecord record;
      const auto report_line = [](std::size_t line_no, const std::string& msg) {
        std::cerr << "line " << line_no << ": " << msg << "\n";
      };
      if (!input.empty()) {
        spec.source = tclique::SearchSource::graph6_stream;
        if (n == 0) throw std::invalid_argument("stream search requires --n (expected vertex count)");
        spec.n = n;
        if (input == "-") {
          record = tclique::search(spec, std::cin, cfg, report_line);
        } else {
          std::ifstream f(input);
          if (!f) throw std::runtime_error("cannot open '" + input + "'");
          record = tclique::search(spec, f, cfg, report_line);
        }
      } else {
        if (n == 0) throw std::invalid_argument("search needs --n or --input");
        spec.n = n;
        record = tclique::search(spec, cfg);
      }
      print_record(record, out);
      return kExitOk;
    }

    if (scaling->parsed()) {
      if (objective == "cliques") {
        const auto rows = tclique::clique_scaling_table(r, n_from, n_to);
        if (out.format == "json") {
          nlohmann::json j = nlohmann::json::array();
          for (const auto& row : rows)
            j.push_back({{"n", row.n},
                         {"clique_count", row.clique_count},
                         {"reference", row.reference},
                         {"ratio", row.ratio}});
          std::cout << j.dump(2) << "\n";
        } else {
          tclique::write_csv(std::cout, rows);
        }
      } else {
        const auto rows = tclique::scaling_table(r, n_from, n_to);
        if (out.format == "json") {
          nlohmann::json j = nlohmann::json::array();
          for (const auto& row : rows)
            j.push_back({{"n", row.n}, {"mu", row.mu}, {"reference", row.reference}, {"ratio", row.ratio}});
          std::cout << j.dump(2) << "\n";
        } else {
          tclique::write_csv(std::cout, rows);
        }
      }
      return kExitOk;
    }
  } catch (const tclique::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
