#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "bigcp/clawfree.hpp"
#include "bigcp/errors.hpp"
#include "bigcp/models.hpp"

namespace bigcp {

namespace {

using Clock = std::chrono::steady_clock;

void require_simple(const Multigraph& g, const std::string& what) {
  if (g.has_loops()) throw ContractError("invalid-input", what + " needs a graph without loops");
  if (g.has_parallel_edges())
    throw ContractError("invalid-input", what + " needs a graph without parallel edges");
}

int declared_degree(const Multigraph& g, const ApproxOptions& opts) {
  const int actual = max_degree(g);
  if (!opts.max_degree) return actual;
  if (actual > *opts.max_degree)
    throw ContractError("invalid-input", "graph has maximum degree " + std::to_string(actual) +
                                             " above the declared bound " +
                                             std::to_string(*opts.max_degree));
  return *opts.max_degree;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

/// Region violations are errors unless overridden, then warnings.
void region_check(bool ok, const std::string& message, const ApproxOptions& opts,
                  std::vector<std::string>& warnings) {
  if (ok) return;
  if (!opts.override_region_check) throw ContractError("out-of-region", message);
  warnings.push_back(message + " (region check overridden; the approximation guarantee lapses)");
}

int checked_order(Complex t, double M, double d, double eps, const ApproxOptions& opts) {
  const int m = taylor_order(t, M, std::max(d, 1.0), eps);
  if (m > opts.max_order)
    throw ResourceError("truncation order " + std::to_string(m) + " exceeds the cap of " +
                        std::to_string(opts.max_order));
  return m;
}

ApproxResult evaluate_prepared(const PreparedModel& pm, Complex t, double M, double eps,
                               const ApproxOptions& opts) {
  const int m = checked_order(t, M, pm.degree_bound, eps, opts);
  const PowerSums p = prepared_power_sums(pm, m, opts.limits);
  ApproxResult r = evaluate_truncated(1.0, p, t);
  r.epsilon = eps;
  return r;
}

void apply_scale(ApproxResult& r, Complex log_scale) {
  r.log_scale = log_scale;
  r.log_value = r.unscaled_log_value + log_scale;
  r.value = std::exp(r.log_value);
}

template <class F>
ApproxResult timed(F&& f) {
  const auto start = Clock::now();
  ApproxResult r = f();
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace

double lambda_star(int max_degree) {
  const double d = std::max(max_degree, 2);
  return std::pow(d - 1.0, d - 1.0) / std::pow(d, d);
}

PreparedModel prepare_independence(const Multigraph& g) {
  return {std::make_unique<IndependenceModel>(), g.without_colors(), g.num_vertices()};
}

PreparedModel prepare_independence_multivariate(const Multigraph& g,
                                                const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != g.num_vertices())
    throw ContractError("invalid-input", "need one weight per vertex");
  std::vector<Color> ids(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) ids[v] = v;
  return {std::make_unique<IndependenceModel>(z), g.without_colors().with_vertex_colors(ids),
          g.num_vertices()};
}

PreparedModel prepare_tutte(const Multigraph& g, Complex w) {
  if (g.has_loops()) throw ContractError("invalid-input", "Tutte model needs a loopless graph");
  return {std::make_unique<TutteModel>(w, max_degree(g)), g.without_colors(), g.num_vertices()};
}

PreparedModel prepare_spin(const Multigraph& g, const SpinSystem& s) {
  require_simple(g, "spin model");
  if (s.k < 1) throw ContractError("invalid-input", "spin model needs k >= 1");
  std::vector<SpinMatrix> matrices;
  std::vector<Color> ids(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const SpinMatrix& a = s.matrix_for(g.edge(e));
    if (a.k != s.k || static_cast<int>(a.entries.size()) != s.k * s.k)
      throw ContractError("invalid-input", "matrix size does not match k");
    if (!a.is_symmetric())
      throw ContractError("invalid-input", "interaction matrices must be symmetric");
    matrices.push_back(a);
    ids[e] = e;
  }
  return {std::make_unique<SpinModel>(s.k, std::move(matrices)),
          Multigraph(g.num_vertices(), {g.edges().begin(), g.edges().end()}, {}, ids),
          g.num_edges()};
}

PreparedModel prepare_edge_coloring(const Multigraph& g, const EdgeColoringSystem& s) {
  if (s.k < 1) throw ContractError("invalid-input", "edge-coloring model needs k >= 1");
  std::vector<EdgeSignature> sigs;
  std::vector<Color> ids(g.num_vertices());
  std::vector<int> loops(g.num_vertices(), 0);
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).u == g.edge(e).v) ++loops[g.edge(e).u];
  for (int v = 0; v < g.num_vertices(); ++v) {
    const EdgeSignature& h = s.at(v);
    // A loop adds its color twice, so only these count vectors can occur.
    for (const auto& lc : compositions(loops[v], s.k)) {
      for (const auto& counts : compositions(g.degree(v) - 2 * loops[v], s.k)) {
        std::vector<int> total = counts;
        for (int j = 0; j < s.k; ++j) total[j] += 2 * lc[j];
        if (!h.defined(total)) (void)h(total);  // throws with the offending vector
      }
    }
    sigs.push_back(h);
    ids[v] = v;
  }
  return {std::make_unique<EdgeColoringModel>(s.k, std::move(sigs), max_degree(g)),
          g.without_colors().with_vertex_colors(ids), g.num_vertices()};
}

PowerSums prepared_power_sums(const PreparedModel& pm, int m, const EngineLimits& limits) {
  const int d = pm.degree_bound;
  if (m <= d) return compute_power_sums(pm.host, *pm.model, m, limits);
  const PowerSums head = compute_power_sums(pm.host, *pm.model, d, limits);
  return power_sums_from_coeffs(coeffs_from_power_sums(head, d), m);
}

ApproxResult approx_independence(const Multigraph& g, Complex lambda, double eps,
                                 const ApproxOptions& opts) {
  return timed([&] {
    require_simple(g, "independence polynomial");
    const int delta = declared_degree(g, opts);
    const auto pm = prepare_independence(g);
    ApproxResult r = evaluate_prepared(pm, lambda, lambda_star(delta), eps, opts);
    apply_scale(r, 0.0);
    return r;
  });
}

ApproxResult approx_independence_even(const Multigraph& g, double lambda, double eps,
                                      const ApproxOptions& opts) {
  return timed([&] {
    require_simple(g, "independence polynomial");
    const int delta = declared_degree(g, opts);
    if (!(lambda >= 0.0 && lambda < lambda_star(delta)))
      throw ContractError("out-of-range", "even-cardinality evaluation needs 0 <= λ < " +
                                              fmt(lambda_star(delta)));
    const ApproxResult plus = approx_independence(g, lambda, eps, opts);
    const ApproxResult minus = approx_independence(g, -lambda, eps, opts);
    ApproxResult r;
    r.value = 0.5 * (plus.value + minus.value);
    r.log_value = std::log(r.value);
    r.unscaled_log_value = r.log_value;
    r.m = std::max(plus.m, minus.m);
    r.epsilon = eps;
    r.power_sums = plus.power_sums;
    return r;
  });
}

ApproxResult approx_independence_multivariate(const Multigraph& g, const std::vector<Complex>& z,
                                              double eps, const ApproxOptions& opts) {
  return timed([&] {
    require_simple(g, "independence polynomial");
    const int delta = declared_degree(g, opts);
    double zmax = 0.0;
    for (auto x : z) zmax = std::max(zmax, std::abs(x));
    const double ls = lambda_star(delta);
    if (zmax >= ls)
      throw ContractError("out-of-disk", "some |z_v| = " + fmt(zmax) + " is not below λ*(Δ) = " +
                                             fmt(ls));
    const auto pm = prepare_independence_multivariate(g, z);
    const double M = zmax == 0.0 ? HUGE_VAL : ls / zmax;
    ApproxResult r = evaluate_prepared(pm, 1.0, M, eps, opts);
    apply_scale(r, 0.0);
    return r;
  });
}

ApproxResult approx_independence_clawfree(const Multigraph& g, Complex lambda, double eps,
                                          const ApproxOptions& opts) {
  return timed([&] {
    require_simple(g, "independence polynomial");
    if (!is_claw_free(g)) throw ContractError("invalid-input", "graph contains a claw");
    if (lambda.imag() == 0.0 && lambda.real() < 0.0)
      throw ContractError("out-of-region", "λ on the negative real axis");
    const int delta = declared_degree(g, opts);
    const ClawFreeTransform phi(clawfree_rho(lambda, delta), opts.max_order);
    const int n = g.num_vertices();
    const double d = static_cast<double>(std::max(n, 1)) * static_cast<double>(phi.degree());
    const int m = checked_order(1.0, phi.beta(), d, eps, opts);

    const auto pm = prepare_independence(g);
    const int head = std::min(m, n);
    const PolynomialPrefix z_prefix =
        coeffs_from_power_sums(compute_power_sums(pm.host, *pm.model, head, opts.limits), head);
    PolynomialPrefix inner = phi.prefix(m);
    for (auto& c : inner.coeffs) c *= lambda;
    const PolynomialPrefix g_prefix = compose_truncate(z_prefix, inner, m);
    ApproxResult r = evaluate_truncated(1.0, power_sums_from_coeffs(g_prefix, m), 1.0);
    r.epsilon = eps;
    apply_scale(r, 0.0);
    return r;
  });
}

ApproxResult approx_tutte(const Multigraph& g, Complex q, Complex w, double eps,
                          const ApproxOptions& opts) {
  return timed([&] {
    if (g.has_loops()) throw ContractError("invalid-input", "Tutte model needs a loopless graph");
    const int delta = declared_degree(g, opts);
    double K = 0.0;
    if (opts.tutte_K) {
      K = *opts.tutte_K;
    } else if (std::abs(1.0 + w) <= 1.0) {
      K = 6.91 * delta;
    } else {
      throw ContractError("missing-constant",
                          "|1 + w| > 1: supply the zero-free constant K (--tutte-K)");
    }
    if (q == Complex{}) throw ContractError("out-of-disk", "q = 0");
    const auto pm = prepare_tutte(g, w);
    // With K = 0 (edgeless input, Δ = 0) every q is admissible.
    const double M = K > 0.0 ? 1.0 / K : HUGE_VAL;
    if (!(std::abs(q) > K))
      throw ContractError("out-of-disk", "|q| = " + fmt(std::abs(q)) + " must exceed K = " + fmt(K));
    ApproxResult r = evaluate_prepared(pm, 1.0 / q, M, eps, opts);
    apply_scale(r, static_cast<double>(g.num_vertices()) * std::log(q));
    return r;
  });
}

ApproxResult approx_spin(const Multigraph& g, const SpinSystem& s, double eps,
                         const ApproxOptions& opts) {
  return timed([&] {
    const int delta = declared_degree(g, opts);
    const auto pm = prepare_spin(g, s);
    std::vector<std::string> warnings;
    if (delta > 0) {
      double worst = 0.0;
      for (const auto& e : g.edges()) worst = std::max(worst, s.matrix_for(e).distance_from_ones());
      region_check(worst <= 0.34 / delta,
                   "max |A_ij - 1| = " + fmt(worst) + " exceeds 0.34/Δ = " + fmt(0.34 / delta),
                   opts, warnings);
    }
    ApproxResult r = evaluate_prepared(pm, 1.0, 1.0 + opts.radius_margin, eps, opts);
    apply_scale(r, static_cast<double>(g.num_vertices()) * std::log(static_cast<double>(s.k)));
    r.warnings = std::move(warnings);
    return r;
  });
}

ApproxResult approx_edge_coloring(const Multigraph& g, const EdgeColoringSystem& s, double eps,
                                  const ApproxOptions& opts) {
  return timed([&] {
    const int delta = declared_degree(g, opts);
    const auto pm = prepare_edge_coloring(g, s);
    std::vector<std::string> warnings;
    double worst = s.shared.distance_from_ones();
    for (const auto& [v, sig] : s.per_vertex) worst = std::max(worst, sig.distance_from_ones());
    const double bound = 0.35 / (delta + 1);
    region_check(worst <= bound,
                 "max |h(φ) - 1| = " + fmt(worst) + " exceeds 0.35/(Δ+1) = " + fmt(bound), opts,
                 warnings);
    ApproxResult r = evaluate_prepared(pm, 1.0, 1.0 + opts.radius_margin, eps, opts);
    apply_scale(r, static_cast<double>(g.num_edges()) * std::log(static_cast<double>(s.k)));
    r.warnings = std::move(warnings);
    return r;
  });
}

}  // namespace bigcp
