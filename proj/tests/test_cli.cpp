#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tclique/tclique.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / ("tclique_test_out_" + std::to_string(++counter) + ".txt");
  const fs::path err = dir / ("tclique_test_err_" + std::to_string(counter) + ".txt");
  const std::string cmd =
      std::string(TCLIQUE_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

}  // namespace

TEST_CASE("spectral subcommand") {
  SECTION("generator input, JSON output matches the library bit for bit") {
    const auto r = run_cli("spectral --input turan:6,3 --t 3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    tclique::SolverConfig cfg;
    const auto expected = tclique::clique_spectral_radius(tclique::gen_turan(6, 3).graph, 3, cfg);
    REQUIRE(j.at("mu").get<double>() == expected.mu);
    REQUIRE(j.at("residual").get<double>() == expected.residual);
    REQUIRE(j.at("iterations").get<std::uint64_t>() == expected.iterations);
    REQUIRE(j.at("method").get<std::string>() == "power-iteration");
    REQUIRE(j.at("converged").get<bool>());
  }
  SECTION("plain output prints the headline number") {
    const auto r = run_cli("spectral --input complete:4 --t 3 --format plain");
    REQUIRE(r.code == 0);
    REQUIRE(std::stod(r.out) == 3.0);
  }
  SECTION("graph6 literal input") {
    const auto r = run_cli("spectral --input C~ --t 3 --format plain");
    REQUIRE(r.code == 0);
    REQUIRE(std::stod(r.out) == 3.0);
    const auto prefixed = run_cli("spectral --input g6:C~ --t 3 --format plain");
    REQUIRE(std::stod(prefixed.out) == 3.0);
  }
  SECTION("identical invocations print identical bytes") {
    const auto a = run_cli("spectral --input random:8,0.5,7 --t 3");
    const auto b = run_cli("spectral --input random:8,0.5,7 --t 3");
    REQUIRE(a.out == b.out);
  }
  SECTION("non-convergence exits 2") {
    const auto r = run_cli("spectral --input multipartite:2,3 --t 2 --max-iter 1");
    REQUIRE(r.code == 2);
  }
  SECTION("unparseable input exits 1") {
    const auto r = run_cli("spectral --input 'no such file###' --t 3");
    REQUIRE(r.code == 1);
    const auto bad = run_cli("spectral --input complete:notanumber --t 3");
    REQUIRE(bad.code == 1);
  }
}

TEST_CASE("bounds subcommand") {
  SECTION("complete graph collapses the chain") {
    const auto r = run_cli("bounds --input complete:5 --t 3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("lower").get<double>() == 6.0);
    REQUIRE_THAT(j.at("mu").get<double>(), Catch::Matchers::WithinAbs(6.0, 1e-8));
    REQUIRE_THAT(j.at("upper").get<double>(), Catch::Matchers::WithinAbs(6.0, 1e-12));
    REQUIRE(j.at("lower_equality").get<bool>());
    REQUIRE(j.at("upper_equality").get<bool>());
  }
  SECTION("turan:6,3 keeps the upper bound strict") {
    const auto r = run_cli("bounds --input turan:6,3 --t 3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE_THAT(j.at("lower").get<double>(), Catch::Matchers::WithinAbs(4.0, 1e-12));
    REQUIRE_THAT(j.at("mu").get<double>(), Catch::Matchers::WithinAbs(4.0, 1e-8));
    REQUIRE_THAT(j.at("upper").get<double>(),
                 Catch::Matchers::WithinAbs(0.5 * std::cbrt(20.0) * std::pow(8.0, 2.0 / 3.0), 1e-12));
  }
  SECTION("edge-list file input, triangle-free chain is all zero") {
    const fs::path p = fs::temp_directory_path() / "tclique_c5.edges";
    std::ofstream(p) << "5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
    const auto r = run_cli("bounds --input " + p.string() + " --t 3");
    fs::remove(p);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("lower").get<double>() == 0.0);
    REQUIRE(j.at("mu").get<double>() == 0.0);
    REQUIRE(j.at("upper").get<double>() == 0.0);
  }
}

TEST_CASE("search subcommand") {
  SECTION("all-labeled spectral search") {
    const auto r = run_cli("search --n 5 --forbidden complete:3 --t 2 --objective mu");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE_THAT(j.at("best_value").get<double>(),
                 Catch::Matchers::WithinAbs(std::sqrt(6.0), 1e-8));
    REQUIRE(j.at("matches_turan").get<bool>());
  }
  SECTION("all-labeled clique search") {
    const auto r = run_cli("search --n 6 --forbidden complete:4 --t 3 --objective cliques");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("best_value").get<double>() == 8.0);
  }
  SECTION("stream mode") {
    const fs::path p = fs::temp_directory_path() / "tclique_stream.g6";
    std::ofstream(p) << "Dhc\nD]o\nD~{\n";
    const auto r = run_cli("search --n 5 --input " + p.string() + " --forbidden complete:3 --t 2");
    fs::remove(p);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE_THAT(j.at("best_value").get<double>(),
                 Catch::Matchers::WithinAbs(std::sqrt(6.0), 1e-8));
    REQUIRE(j.at("examined").get<std::uint64_t>() == 2);
    REQUIRE(j.at("skipped_non_H_free").get<std::uint64_t>() == 1);
  }
  SECTION("empty stream exits 1 with a message") {
    const fs::path p = fs::temp_directory_path() / "tclique_empty.g6";
    std::ofstream(p) << "";
    const auto r = run_cli("search --n 5 --input " + p.string() + " --forbidden complete:3 --t 2");
    fs::remove(p);
    REQUIRE(r.code == 1);
    REQUIRE(r.err.find("no graphs examined") != std::string::npos);
  }
  SECTION("over-budget all-labeled search exits 3") {
    const auto r = run_cli("search --n 9 --forbidden complete:3 --t 2");
    REQUIRE(r.code == 3);
  }
}

TEST_CASE("scaling subcommand") {
  SECTION("CSV with a header row") {
    const auto r = run_cli("scaling --r 3 --n-from 6 --n-to 9");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "n,mu,reference,ratio");
    std::size_t rows = 0;
    std::string first_ratio;
    while (std::getline(in, line)) {
      if (rows == 0) first_ratio = line.substr(line.rfind(',') + 1);
      ++rows;
    }
    REQUIRE(rows == 4);
    REQUIRE(std::stod(first_ratio) == 1.0);
  }
  SECTION("clique counts at r = 2") {
    const auto r = run_cli("scaling --r 2 --n-from 2 --n-to 4 --objective cliques");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "n,clique_count,reference,ratio");
    std::vector<int> counts;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      counts.push_back(std::stoi(line.substr(comma + 1)));
    }
    REQUIRE(counts == std::vector<int>{1, 2, 4});
  }
  SECTION("r = 1 is a usage error") {
    const auto r = run_cli("scaling --r 1 --n-from 2 --n-to 4");
    REQUIRE(r.code == 1);
  }
}
