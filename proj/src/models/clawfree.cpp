#include "bigcp/clawfree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "bigcp/errors.hpp"

namespace bigcp {

ClawFreeTransform::ClawFreeTransform(double rho, std::int64_t max_degree) : rho_(rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw ContractError("invalid-input", "ρ must lie in (0, 1)");
  const double inv = 1.0 / rho;
  alpha_ = -std::expm1(-inv);
  beta_ = -std::expm1(-1.0 - inv) / alpha_;
  const double n_real = std::floor((1.0 + inv) * std::exp(1.0 + inv));
  if (!(n_real <= static_cast<double>(max_degree)))
    throw ResourceError("claw-free transform degree N = " + std::to_string(n_real) +
                        " exceeds the cap of " + std::to_string(max_degree) +
                        "; |λ| is too large for this budget");
  N_ = static_cast<std::int64_t>(n_real);
  // Σ_{i>=1} α^i / i = -ln(1 - α) = 1/ρ; subtract the tail past N.
  const double log_alpha = std::log(alpha_);
  double tail = 0.0;
  for (std::int64_t i = N_ + 1;; ++i) {
    const double term = std::exp(i * log_alpha) / static_cast<double>(i);
    tail += term;
    const double rest_bound = term * alpha_ / (1.0 - alpha_);
    if (rest_bound < 1e-18 * inv || term == 0.0) break;
  }
  sigma_ = inv - tail;
}

double ClawFreeTransform::sigma_direct() const {
  double s = 0.0;
  for (std::int64_t i = 1; i <= N_; ++i) s += std::pow(alpha_, static_cast<double>(i)) / i;
  return s;
}

PolynomialPrefix ClawFreeTransform::prefix(int m) const {
  PolynomialPrefix p;
  p.coeffs.assign(static_cast<std::size_t>(m) + 1, Complex{});
  const std::int64_t top = std::min<std::int64_t>(m, N_);
  for (std::int64_t i = 1; i <= top; ++i)
    p.coeffs[i] = std::pow(alpha_, static_cast<double>(i)) / (static_cast<double>(i) * sigma_);
  return p;
}

Complex ClawFreeTransform::operator()(Complex z) const {
  const Complex az = alpha_ * z;
  Complex acc{};
  for (std::int64_t i = N_; i >= 1; --i) acc = acc * az + 1.0 / static_cast<double>(i);
  return acc * az / sigma_;
}

double clawfree_rho(Complex lambda, int max_degree) {
  const double r = std::abs(lambda);
  if (r == 0.0) return 0.5;
  const double theta = std::arg(lambda);
  const double dm1 = std::max(max_degree, 2) - 1;
  const double rho = std::abs(theta) <= std::numbers::pi / 2
                         ? 1.0 / (9.0 * r * dm1)
                         : std::abs(std::sin(theta)) / (6.0 * r * dm1);
  return std::min(rho, 0.5);
}

bool in_strip(Complex z, double rho, double tol) {
  return z.real() >= -rho - tol && z.real() <= 1.0 + 2.0 * rho + tol &&
         std::abs(z.imag()) <= 2.0 * rho + tol;
}

bool is_claw_free(const Multigraph& g) {
  std::set<std::pair<int, int>> adjacent;
  for (const auto& e : g.edges())
    if (e.u != e.v) adjacent.insert(std::minmax(e.u, e.v));
  auto adj = [&](int a, int b) { return adjacent.count(std::minmax(a, b)) > 0; };
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::set<int> nb_set;
    for (auto inc : g.incidences(v))
      if (inc.neighbor != v) nb_set.insert(inc.neighbor);
    const std::vector<int> nb(nb_set.begin(), nb_set.end());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (adj(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c)
          if (!adj(nb[a], nb[c]) && !adj(nb[b], nb[c])) return false;
      }
  }
  return true;
}

}  // namespace bigcp
