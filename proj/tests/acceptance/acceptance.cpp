// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 all criteria
//   acceptance --criterion N   criterion N only (exit status 1 on FAIL)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bigcp/clawfree.hpp"
#include "bigcp/cli.hpp"
#include "bigcp/errors.hpp"
#include "bigcp/models.hpp"
#include "bigcp/oracle.hpp"
#include "bigcp/patterns.hpp"
#include "testing.hpp"

using namespace bigcp;
using namespace bigcp::testing;

namespace {

using Clock = std::chrono::steady_clock;

// Mean degree of the bench graphs for the scaling run.
constexpr double kBenchAverageDegree = 0.5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<Complex> expand_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (auto z : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= c[i - 1] / z;
  }
  return c;
}

int cli_exit(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("bigcp_acceptance_" + name);
  std::ofstream(path) << text;
  return path.string();
}

// 1. Newton round trip.
Outcome newton_round_trip() {
  const auto start = Clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = uniform_int(rng, 0, 30);
    PolynomialPrefix e{{1.0}};
    for (int i = 1; i <= m; ++i) e.coeffs.push_back(random_complex(rng, 1.0));
    const PolynomialPrefix back = coeffs_from_power_sums(power_sums_from_coeffs(e, m), m);
    worst = std::max(worst, max_abs_diff(back.coeffs, e.coeffs));
  }
  const double t = seconds_since(start);
  return {worst <= 1e-9 && t < 5.0, "max error " + fmt("%.2e", worst) + ", " + fmt("%.2f", t) + " s"};
}

// 2. Power sums of factored polynomials against inverse root powers.
Outcome root_oracle() {
  const auto start = Clock::now();
  Rng rng(102);
  double worst = 0.0, worst_eigen = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = uniform_int(rng, 1, 10);
    std::vector<Complex> roots;
    for (int i = 0; i < d; ++i) roots.push_back(std::polar(uniform(rng, 0.5, 2.0), uniform(rng, -M_PI, M_PI)));
    std::vector<Complex> expect(d, 0.0);
    for (auto z : roots)
      for (int j = 1; j <= d; ++j) expect[j - 1] += std::pow(z, -j);
    const auto c = expand_roots(roots);
    worst = std::max(worst, max_abs_diff(power_sums_from_coeffs({c}, d).p, expect));
    double scale = 1.0;
    for (auto x : expect) scale = std::max(scale, std::abs(x));
    worst_eigen = std::max(worst_eigen, max_abs_diff(power_sums_from_roots(c).p, expect) / scale);
  }
  const double t = seconds_since(start);
  return {worst <= 1e-8 && t < 5.0,
          "max error " + fmt("%.2e", worst) + " (companion-matrix oracle " + fmt("%.1e", worst_eigen) +
              " relative), " + fmt("%.2f", t) + " s"};
}

// 3. Engine coefficients against brute force on the subcubic catalog.
Outcome engine_exactness() {
  const auto start = Clock::now();
  const auto catalog = connected_catalog(7, 3);
  Rng rng(103);
  double worst = 0.0;
  std::map<std::string, double> per_model;
  for (const auto& g : catalog) {
    const int n = g.num_vertices();
    const int delta = std::max(max_degree(g), 1);
    auto check = [&](const std::string& name, const PreparedModel& pm, const std::vector<Complex>& exact) {
      const auto e = coeffs_from_power_sums(compute_power_sums(pm.host, *pm.model, n), n).coeffs;
      std::vector<Complex> prefix(exact.begin(), exact.begin() + std::min<std::size_t>(exact.size(), n + 1));
      const double err = max_abs_diff(e, prefix);
      per_model[name] = std::max(per_model[name], err);
      worst = std::max(worst, err);
    };
    check("independence", prepare_independence(g), exact_independence_coeffs(g).coeffs);
    check("tutte", prepare_tutte(g, -1.0), exact_tutte_inverted_coeffs(g, -1.0).coeffs);
    const SpinSystem s = random_spin_system(rng, g, 2, 0.34 / delta);
    check("spin", prepare_spin(g, s), exact_spin_q_coeffs(g, s).coeffs);
    const EdgeColoringSystem h = random_edge_system(rng, g, 2, 0.35 / (delta + 1));
    check("edge-coloring", prepare_edge_coloring(g, h), exact_edge_q_coeffs(g, h).coeffs);
  }
  const double t = seconds_since(start);
  std::string detail = std::to_string(catalog.size()) + " graphs;";
  for (const auto& [name, err] : per_model) detail += " " + name + " " + fmt("%.1e", err);
  detail += "; " + fmt("%.1f", t) + " s";
  return {catalog.size() == 113 && worst <= 1e-7 && t < 600.0, detail};
}

// 4. Independence approximation contract.
Outcome independence_contract() {
  const auto start = Clock::now();
  Rng rng(104);
  int passed = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int delta = uniform_int(rng, 2, 4);
    const int n = uniform_int(rng, 2, 16);
    const Multigraph g = random_graph(rng, n, delta, 2 * n);
    const Complex lambda = random_in_disk(rng, 0.9 * lambda_star(delta));
    ApproxOptions opts;
    opts.max_degree = delta;
    const ApproxResult r = approx_independence(g, lambda, 0.01, opts);
    const Complex exact = exact_independence(g, lambda);
    if (approx_matches(r.value, exact, 0.01)) ++passed;
    worst_ratio = std::max(worst_ratio, std::abs(std::log(r.value / exact)));
  }
  // The disk boundary at Δ = 3 is rejected with exit status 2.
  const std::string g = write_temp("claw.txt", "p 4\ne 0 1\ne 0 2\ne 0 3\n");
  const double ls = 4.0 / 27.0;
  bool boundary = std::abs(lambda_star(3) - ls) < 1e-15;
  for (const std::string& lam : std::vector<std::string>{fmt("%.17g", ls), fmt("%.17g", 1.0001 * ls), "0,0.15"})
    boundary = boundary && cli_exit({"approx", "independence", "--graph", g, "--lambda", lam}) == 2;
  boundary = boundary && cli_exit({"approx", "independence", "--graph", g, "--lambda", fmt("%.17g", 0.999 * ls)}) == 0;
  const double t = seconds_since(start);
  return {passed == 200 && boundary && t < 300.0,
          std::to_string(passed) + "/200 within ε, max |log ratio| " + fmt("%.2e", worst_ratio) +
              ", boundary " + (boundary ? "rejected" : "NOT rejected") + ", " + fmt("%.1f", t) + " s"};
}

// 5. Tutte approximation contract.
Outcome tutte_contract() {
  const auto start = Clock::now();
  Rng rng(105);
  int passed = 0, rescaled = 0;
  const double K = 6.91 * 3;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 2, 10);
    const Multigraph g = random_graph(rng, n, 3, uniform_int(rng, 1, 20), true);
    if (g.num_edges() > 14) {
      --trial;
      continue;
    }
    const Complex q = std::polar(1.1 * K, uniform(rng, -M_PI, M_PI));
    ApproxOptions opts;
    opts.max_degree = 3;
    const ApproxResult r = approx_tutte(g, q, -1.0, 0.01, opts);
    if (approx_matches(r.value, exact_tutte(g, q, -1.0), 0.01)) ++passed;
    const Complex scale = static_cast<double>(n) * std::log(q);
    if (std::abs(r.log_scale - scale) < 1e-12 &&
        std::abs(r.value - std::pow(q, n) * std::exp(r.unscaled_log_value)) <= 1e-9 * std::abs(r.value))
      ++rescaled;
  }
  const double t = seconds_since(start);
  return {passed == 100 && rescaled == 100 && t < 300.0,
          std::to_string(passed) + "/100 within ε, rescaling " + std::to_string(rescaled) + "/100, " +
              fmt("%.1f", t) + " s"};
}

// 6. Spin and edge-coloring approximation contracts.
Outcome spin_edge_contract() {
  const auto start = Clock::now();
  Rng rng(106);
  int spin_ok = 0, edge_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 2, 8);
    const Multigraph g = random_graph(rng, n, 3, 2 * n);
    const int delta = std::max(max_degree(g), 1);
    const SpinSystem s = random_spin_system(rng, g, 2, 0.34 / delta);
    if (approx_matches(approx_spin(g, s, 0.01).value, exact_spin(g, s), 0.01)) ++spin_ok;
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 2, 8);
    const Multigraph g = random_graph(rng, n, 3, uniform_int(rng, 1, 14), true, true);
    if (g.num_edges() > 10) {
      --trial;
      continue;
    }
    const int delta = max_degree(g);
    const EdgeColoringSystem h = random_edge_system(rng, g, 2, 0.35 / (delta + 1));
    if (approx_matches(approx_edge_coloring(g, h, 0.01).value, exact_edge_coloring(g, h), 0.01)) ++edge_ok;
  }
  const double t = seconds_since(start);
  return {spin_ok == 100 && edge_ok == 100 && t < 600.0,
          "spin " + std::to_string(spin_ok) + "/100, edge-coloring " + std::to_string(edge_ok) + "/100, " +
              fmt("%.1f", t) + " s"};
}

// 7. Claw-free transform on line graphs.
Outcome clawfree_contract() {
  const auto start = Clock::now();
  Rng rng(107);
  const Complex lambdas[] = {0.2, Complex(0.2, 0.1), Complex(0.0, 0.3)};
  int runs = 0, passed = 0;
  int max_m = 0;
  std::map<double, bool> invariants;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 3, 10);
    const Multigraph base = random_graph(rng, n, 3, 2 * n);
    const Multigraph l = line_graph(base);
    if (l.num_vertices() == 0) {
      --trial;
      continue;
    }
    for (Complex lam : lambdas) {
      ++runs;
      const ApproxResult r = approx_independence_clawfree(l, lam, 0.05);
      max_m = std::max(max_m, r.m);
      if (approx_matches(r.value, exact_independence(l, lam), 0.05)) ++passed;
      invariants.emplace(clawfree_rho(lam, max_degree(l)), true);
    }
  }
  int sampled = 0, outside = 0;
  double worst_fixed = 0.0;
  for (auto& [rho, ok] : invariants) {
    const ClawFreeTransform phi(rho);
    worst_fixed = std::max({worst_fixed, std::abs(phi(0.0)), std::abs(phi(1.0) - 1.0)});
    for (int i = 0; i < 1000; ++i) {
      ++sampled;
      if (!in_strip(phi(random_in_disk(rng, phi.beta())), rho)) {
        ++outside;
        ok = false;
      }
    }
  }
  const double t = seconds_since(start);
  return {passed == runs && worst_fixed <= 1e-9 && outside == 0 && t < 600.0,
          std::to_string(passed) + "/" + std::to_string(runs) + " within ε (max m " + std::to_string(max_m) +
              "), φ(0), φ(1) error " + fmt("%.1e", worst_fixed) + ", " + std::to_string(sampled - outside) + "/" +
              std::to_string(sampled) + " samples in strip, " + fmt("%.1f", t) + " s"};
}

// 8. Additivity and per-vertex enumeration bounds.
Outcome additivity_and_bounds() {
  Rng rng(108);
  double worst_abs = 0.0;
  const int m = 8;
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g1 = random_graph(rng, uniform_int(rng, 1, 8), 3, 12);
    const Multigraph g2 = random_graph(rng, uniform_int(rng, 1, 8), 3, 12);
    std::vector<std::pair<PreparedModel, std::array<PreparedModel, 2>>> cases;
    const int which = trial % 4;
    PowerSums pu, p1, p2;
    if (which == 0) {
      pu = prepared_power_sums(prepare_independence(disjoint_union(g1, g2)), m);
      p1 = prepared_power_sums(prepare_independence(g1), m);
      p2 = prepared_power_sums(prepare_independence(g2), m);
    } else if (which == 1) {
      pu = prepared_power_sums(prepare_tutte(disjoint_union(g1, g2), -1.0), m);
      p1 = prepared_power_sums(prepare_tutte(g1, -1.0), m);
      p2 = prepared_power_sums(prepare_tutte(g2, -1.0), m);
    } else if (which == 2) {
      const Multigraph u = disjoint_union(g1, g2);
      const SpinSystem s = random_spin_system(rng, u, 2, 0.1);
      SpinSystem s1{2, s.default_matrix, {}}, s2{2, s.default_matrix, {}};
      const int shift = g1.num_vertices();
      for (const auto& [key, a] : s.edge_matrices) {
        if (key.first < shift) s1.edge_matrices[key] = a;
        else s2.edge_matrices[{key.first - shift, key.second - shift}] = a;
      }
      pu = prepared_power_sums(prepare_spin(u, s), m);
      p1 = prepared_power_sums(prepare_spin(g1, s1), m);
      p2 = prepared_power_sums(prepare_spin(g2, s2), m);
    } else {
      const Multigraph u = disjoint_union(g1, g2);
      const EdgeColoringSystem h = random_edge_system(rng, u, 2, 0.08);
      EdgeColoringSystem h1{2, h.shared, {}}, h2{2, h.shared, {}};
      const int shift = g1.num_vertices();
      for (const auto& [v, sig] : h.per_vertex) {
        if (v < shift) h1.per_vertex[v] = sig;
        else h2.per_vertex[v - shift] = sig;
      }
      pu = prepared_power_sums(prepare_edge_coloring(u, h), m);
      p1 = prepared_power_sums(prepare_edge_coloring(g1, h1), m);
      p2 = prepared_power_sums(prepare_edge_coloring(g2, h2), m);
    }
    for (int k = 1; k <= m; ++k) worst_abs = std::max(worst_abs, std::abs(pu[k] - p1[k] - p2[k]));
  }
  const bool additive = worst_abs <= 1e-9;

  // Per-vertex counts of connected sets of order j containing v, against
  // (eΔ)^{j-1}/2 for j = 1..5.
  std::map<int, std::pair<int, int>> checked;  // j -> (violations, checks)
  int graphs = 0;
  auto count_graph = [&](const Multigraph& g) {
    const int delta = max_degree(g);
    if (delta == 0) return;
    ++graphs;
    std::vector<std::vector<int>> counts(g.num_vertices(), std::vector<int>(6, 0));
    for (const auto& s : enumerate_connected_sets(g, 5))
      for (int v : s) ++counts[v][s.size()];
    for (const auto& row : counts) {
      for (int j = 1; j <= 5; ++j) {
        ++checked[j].second;
        if (row[j] > count_connected_bound(delta, j)) ++checked[j].first;
      }
    }
  };
  for (const auto& g : connected_catalog(7, 3)) count_graph(g);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 1, 12);
    count_graph(random_graph(rng, n, uniform_int(rng, 1, 5), uniform_int(rng, 0, 3 * n)));
  }
  int violations = 0;
  std::string per_order;
  for (const auto& [j, vc] : checked) {
    violations += vc.first;
    per_order += " j=" + std::to_string(j) + ":" + std::to_string(vc.first);
  }
  return {additive && violations == 0,
          "additivity max error " + fmt("%.1e", worst_abs) + "; bound violations over " +
              std::to_string(graphs) + " graphs" + per_order +
              (checked[1].first > 0 ? " (order 1: one set per vertex against a bound of 1/2)" : "")};
}

// 9. Scaling sanity on sparse bounded-degree graphs.
Outcome scaling() {
  BenchConfig c;
  c.sizes = {25, 50, 100, 200};
  c.max_degree = 3;
  c.lambda = 0.1;
  c.epsilon = 0.01;
  c.seed = 9;
  c.avg_degree = kBenchAverageDegree;
  const auto start = Clock::now();
  const auto rows = run_bench(c);
  const double total = seconds_since(start);
  std::vector<double> xs, ys;
  bool orders = true;
  std::string detail;
  const double C = 1.0 / (1.0 - 0.1 / lambda_star(3));
  for (const auto& row : rows) {
    const int n = row["n"];
    const int m = row["m_order"];
    const double formula = C * std::log(n / (0.01 / 2));
    orders = orders && std::abs(m - formula) <= 1.0;
    const double ms = row["elapsed_ms"];
    xs.push_back(std::log(n));
    ys.push_back(std::log(std::max(ms, 1e-3)));
    detail += " n=" + std::to_string(n) + ":m=" + std::to_string(m) + "(" + fmt("%.2f", formula) + ")," +
              fmt("%.0f", ms) + "ms";
  }
  // Least-squares slope of log time against log n.
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
  const double slope = sxy / sxx;
  const double last = rows.back()["elapsed_ms"].get<double>() / 1000.0;
  return {slope < 8.0 && last < 600.0 && orders,
          "slope " + fmt("%.2f", slope) + ", n=200 in " + fmt("%.1f", last) + " s," + detail + "; total " +
              fmt("%.1f", total) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Newton round trip", newton_round_trip},
      {"root-oracle agreement", root_oracle},
      {"engine-coefficient exactness", engine_exactness},
      {"approximation contract (independence)", independence_contract},
      {"approximation contract (Tutte)", tutte_contract},
      {"approximation contract (spin, edge-coloring)", spin_edge_contract},
      {"claw-free transform", clawfree_contract},
      {"additivity and enumeration bounds", additivity_and_bounds},
      {"scaling sanity", scaling}};

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
