#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bigcp/graph.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

/// "re" or "re,im".
Complex parse_complex(std::string_view text);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const std::vector<Complex>& zs);

/// Uniform random simple graph with maximum degree at most max_degree:
/// random vertex pairs are proposed and rejected when they repeat an edge or
/// would exceed the degree bound, until avg_degree·n/2 edges are placed or
/// proposals run out.
Multigraph random_bounded_degree_graph(int n, int max_degree, double avg_degree,
                                       std::uint64_t seed);

struct BenchConfig {
  std::vector<int> sizes{10, 20, 40, 80};
  int max_degree = 3;
  double avg_degree = 3.0;
  Complex lambda = 0.1;
  double epsilon = 0.01;
  std::uint64_t seed = 1;
  bool omit_timing = false;
  std::optional<std::size_t> resource_cap;
};

/// One row per size: n, edges, m_order, m_formula, elapsed_ms, and when the
/// oracle cap allows oracle_elapsed_ms and rel_error.
nlohmann::json run_bench(const BenchConfig& config);

/// Exit codes: 0 success, 1 parse error, 2 contract violation, 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bigcp
