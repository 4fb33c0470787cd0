#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bigcp/cli.hpp"
#include "bigcp/errors.hpp"

using namespace bigcp;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("bigcp_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

Complex value_of(const json& j, const char* key = "value") {
  return {j[key][0].get<double>(), j[key][1].get<double>()};
}

const std::string kC3 = "p 3\ne 0 1\ne 1 2\ne 2 0\n";

}  // namespace

TEST_CASE("complex arguments") {
  CHECK(parse_complex("0.5") == Complex(0.5, 0.0));
  CHECK(parse_complex("-1,2.5") == Complex(-1.0, 2.5));
  CHECK(parse_complex(" 1e-3 , -2 ") == Complex(1e-3, -2.0));
  CHECK_THROWS_AS(parse_complex("1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex(""), ParseError);
}

TEST_CASE("approx on the triangle") {
  const std::string g = write_temp("c3.txt", kC3);
  const Run r = run({"approx", "independence", "--graph", g, "--lambda", "0.1", "--epsilon", "0.01"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  for (const char* key : {"value", "log_value", "m", "power_sums", "epsilon", "elapsed_ms", "warnings"})
    CHECK(j.contains(key));
  CHECK(approx_matches(value_of(j), 1.3, 0.01));
  CHECK(std::abs(std::exp(value_of(j, "log_value")) - value_of(j)) < 1e-12);
}

TEST_CASE("exact Tutte on the triangle") {
  const std::string g = write_temp("c3.txt", kC3);
  const Run r = run({"exact", "tutte", "--graph", g, "--q", "3", "--w", "-1"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(value_of(json::parse(r.out)) - 6.0) < 1e-12);
}

TEST_CASE("power sums on the triangle") {
  const std::string g = write_temp("c3.txt", kC3);
  const Run r = run({"power-sums", "independence", "--graph", g, "--m", "3"});
  REQUIRE(r.code == 0);
  const json p = json::parse(r.out)["power_sums"];
  CHECK(p == json::parse("[[-3.0,0.0],[9.0,0.0],[-27.0,0.0]]"));
}

TEST_CASE("coeffs from engine and oracle agree") {
  const std::string g = write_temp("c3.txt", kC3);
  const Run a = run({"coeffs", "--polynomial", "tutte", "--graph", g, "--w", "-0.5,0.1"});
  const Run b = run({"coeffs", "--polynomial", "tutte", "--graph", g, "--w", "-0.5,0.1", "--oracle"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const json ja = json::parse(a.out)["coeffs"], jb = json::parse(b.out)["coeffs"];
  REQUIRE(ja.size() == jb.size());
  for (std::size_t i = 0; i < ja.size(); ++i)
    CHECK(std::abs(ja[i][0].get<double>() - jb[i][0].get<double>()) < 1e-12);
}

TEST_CASE("spin and edge-coloring through model files") {
  const std::string g = write_temp("c3.txt", kC3);
  const std::string spin = write_temp("spin.json", R"({"k": 2, "default": [[1.05, 1.0], [1.0, [0.95, 0.01]]]})");
  const std::string edge = write_temp("edge.json", R"({"k": 2, "default": 1, "entries": [{"counts": [2, 0], "value": [1.05, 0.02]}]})");
  for (const auto& [poly, model] : {std::pair{"spin", spin}, std::pair{"edge-coloring", edge}}) {
    const Run a = run({"approx", poly, "--graph", g, "--model", model});
    const Run e = run({"exact", poly, "--graph", g, "--model", model});
    REQUIRE(a.code == 0);
    REQUIRE(e.code == 0);
    CHECK(approx_matches(value_of(json::parse(a.out)), value_of(json::parse(e.out)), 0.01));
  }
  CHECK(run({"approx", "spin", "--graph", g}).code == 1);
  const std::string bad = write_temp("bad.json", "{\"k\": 2, ");
  CHECK(run({"approx", "spin", "--graph", g, "--model", bad}).code == 1);
}

TEST_CASE("multivariate weights file") {
  const std::string g = write_temp("k2.txt", "p 2\ne 0 1\n");
  const std::string z = write_temp("z.json", R"({"weights": [0.1, [0.05, 0]]})");
  const Run r = run({"approx", "independence-multivariate", "--graph", g, "--model", z});
  REQUIRE(r.code == 0);
  CHECK(approx_matches(value_of(json::parse(r.out)), 1.15, 0.01));
}

TEST_CASE("exit codes follow the error taxonomy") {
  const std::string g = write_temp("c3.txt", kC3);
  CHECK(run({"approx", "independence", "--graph", g, "--lambda", "0.3"}).code == 2);
  CHECK(run({"approx", "independence", "--graph", g, "--lambda", "0.15", "--max-degree", "3"}).code == 2);
  CHECK(run({"approx", "independence", "--graph", g, "--lambda", "x"}).code == 1);
  CHECK(run({"approx", "independence", "--graph", "/nonexistent/graph", "--lambda", "0.1"}).code == 1);
  CHECK(run({"approx", "independence", "--lambda", "0.1"}).code == 1);
  CHECK(run({"approx", "nonsense", "--graph", g}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"approx", "tutte", "--graph", g, "--q", "30", "--w", "1"}).code == 2);
  CHECK(run({"approx", "independence", "--graph", g, "--lambda", "0.1", "--resource-cap", "2"}).code == 3);
  const std::string loop = write_temp("loop.txt", "p 1\ne 0 0\n");
  CHECK(run({"approx", "independence", "--graph", loop, "--lambda", "0.1"}).code == 2);
  const std::string broken = write_temp("broken.txt", "p 2\ne 0 5\n");
  CHECK(run({"approx", "independence", "--graph", broken, "--lambda", "0.1"}).code == 1);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("approx") != std::string::npos);
}

TEST_CASE("enumerate lists the pattern dictionary") {
  const std::string g = write_temp("p4.txt", "p 4\ne 0 1\ne 1 2\ne 2 3\n");
  const Run r = run({"enumerate", "--graph", g, "--m", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["num_sets"] == 9);
  REQUIRE(j["classes"].size() == 3);
  CHECK(j["classes"][2]["count"] == 2);
}

TEST_CASE("bench output is deterministic") {
  const std::vector<std::string> args = {"bench", "independence", "--sizes", "10,20", "--lambda", "0.1",
                                         "--epsilon", "0.01", "--seed", "7", "--omit-timing"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json rows = json::parse(a.out);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row["rel_error"].get<double>() <= 0.01);
    CHECK(row["elapsed_ms"] == 0.0);
  }
  const Run c = run({"bench", "independence", "--sizes", "10", "--seed", "8", "--omit-timing"});
  CHECK(c.out != a.out);
}

TEST_CASE("random bounded-degree graphs respect the bound") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Multigraph g = random_bounded_degree_graph(50, 3, 3.0, seed);
    CHECK(max_degree(g) <= 3);
    CHECK(g.is_simple());
  }
  CHECK(random_bounded_degree_graph(30, 3, 1.0, 5).num_edges() == 15);
}
