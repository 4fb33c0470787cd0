#include <cmath>
#include <limits>

#include "bigcp/errors.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

int taylor_order(Complex t, double M, double d, double eps) {
  if (!(eps > 0.0)) throw ContractError("invalid-input", "epsilon must be positive");
  if (!(d >= 1.0)) throw ContractError("invalid-input", "degree bound must be at least 1");
  if (!(M > 0.0) || !(std::abs(t) < M))
    throw ContractError("out-of-disk", "|t| = " + std::to_string(std::abs(t)) +
                                           " is not inside the zero-free disk of radius " +
                                           std::to_string(M));
  // The expansion is exact at the origin.
  if (t == Complex{}) return 1;
  const double C = 1.0 / (1.0 - std::abs(t) / M);
  const double raw = std::ceil(C * std::log(d / (eps / 2.0)));
  if (!(raw < static_cast<double>(std::numeric_limits<int>::max())))
    throw ResourceError("truncation order overflows");
  return std::max(1, static_cast<int>(raw));
}

double truncation_bound(double q, int m, double d) {
  return d * std::pow(q, m + 1) / ((m + 1) * (1.0 - q));
}

ApproxResult evaluate_truncated(Complex a0, const PowerSums& p, Complex t) {
  if (a0 == Complex{}) throw ContractError("invalid-input", "a_0 must be nonzero");
  Complex sum{};
  Complex tj = 1.0;
  for (int j = 1; j <= p.size(); ++j) {
    tj *= t;
    sum += p[j] * tj / static_cast<double>(j);
  }
  ApproxResult r;
  r.log_value = std::log(a0) - sum;
  r.unscaled_log_value = r.log_value;
  r.value = std::exp(r.log_value);
  r.m = p.size();
  r.power_sums = p;
  return r;
}

PolynomialPrefix compose_truncate(const PolynomialPrefix& outer, const PolynomialPrefix& inner,
                                  int m) {
  if (m < 0) throw ContractError("invalid-input", "negative truncation order");
  if (!inner.coeffs.empty() && inner.coeffs[0] != Complex{})
    throw ContractError("invalid-input", "inner series must have zero constant term");
  std::vector<Complex> in(inner.coeffs.begin(),
                          inner.coeffs.begin() + std::min<std::size_t>(inner.coeffs.size(), m + 1));
  // Outer terms past z^m cannot reach the prefix because inner(0) = 0.
  int top = std::min(outer.order(), m);
  while (top > 0 && outer.coeffs[top] == Complex{}) --top;
  std::vector<Complex> acc;
  if (top >= 0) acc = {outer.coeffs[top]};
  for (int i = top - 1; i >= 0; --i) {
    acc = multiply_truncated(acc, in, m);
    if (acc.empty()) acc.resize(1);
    acc[0] += outer.coeffs[i];
  }
  acc.resize(m + 1);
  return PolynomialPrefix{std::move(acc)};
}

bool approx_matches(Complex xi, Complex q, double eps) {
  if (xi == Complex{} || q == Complex{})
    throw ContractError("invalid-input", "approx_matches needs nonzero arguments");
  const double ratio = std::abs(q) / std::abs(xi);
  if (ratio < std::exp(-eps) || ratio > std::exp(eps)) return false;
  return std::abs(std::arg(xi / q)) <= eps;
}

Complex evaluate_polynomial(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace bigcp
