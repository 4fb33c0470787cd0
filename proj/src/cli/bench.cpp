#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "bigcp/cli.hpp"
#include "bigcp/models.hpp"
#include "bigcp/oracle.hpp"

namespace bigcp {

Multigraph random_bounded_degree_graph(int n, int max_degree, double avg_degree,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n < 2) return Multigraph(n);
  const auto target = static_cast<std::size_t>(std::llround(avg_degree * n / 2.0));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> deg(n, 0);
  std::set<std::pair<int, int>> seen;
  const std::size_t proposals = 50 * target + 100;
  for (std::size_t tries = 0; tries < proposals && edges.size() < target; ++tries) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (deg[u] >= max_degree || deg[v] >= max_degree) continue;
    if (!seen.insert({u, v}).second) continue;
    ++deg[u];
    ++deg[v];
    edges.push_back({u, v});
  }
  return Multigraph(n, std::move(edges));
}

nlohmann::json run_bench(const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  nlohmann::json rows = nlohmann::json::array();
  ApproxOptions opts;
  opts.max_degree = config.max_degree;
  if (config.resource_cap) opts.limits.max_connected_sets = *config.resource_cap;
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    const int n = config.sizes[i];
    const Multigraph g = random_bounded_degree_graph(
        n, config.max_degree, config.avg_degree, config.seed * 1000003u + static_cast<std::uint64_t>(n));
    const ApproxResult r = approx_independence(g, config.lambda, config.epsilon, opts);
    nlohmann::json row;
    row["n"] = n;
    row["edges"] = g.num_edges();
    row["m_order"] = r.m;
    row["value"] = to_json(r.value);
    row["elapsed_ms"] = config.omit_timing ? 0.0 : r.elapsed.count();
    if (n <= kOracleCaps.max_independence_vertices) {
      const auto start = Clock::now();
      const Complex exact = exact_independence(g, config.lambda);
      const std::chrono::duration<double, std::milli> took = Clock::now() - start;
      row["oracle_elapsed_ms"] = config.omit_timing ? 0.0 : took.count();
      row["rel_error"] = std::abs(r.value / exact - 1.0);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bigcp
