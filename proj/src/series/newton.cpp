#include <algorithm>
#include <cmath>

#include "bigcp/errors.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

namespace {

constexpr int kFftThreshold = 1024;

// The quadratic recurrences accumulate in extended precision.
using Wide = std::complex<long double>;

Wide widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(Wide z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

void require_unit_constant(const PolynomialPrefix& e) {
  if (e.coeffs.empty() || std::abs(e.coeffs[0] - Complex(1.0)) > 1e-12)
    throw ContractError("invalid-input", "coefficient prefix must start with e_0 = 1");
}

}  // namespace

PowerSums power_sums_recurrence(const PolynomialPrefix& e, int m) {
  require_unit_constant(e);
  if (m < 0) throw ContractError("invalid-input", "negative power-sum count");
  const int d = e.order();
  std::vector<Wide> ew(d + 1), pw(m);
  for (int i = 0; i <= d; ++i) ew[i] = widen(e.coeffs[i]);
  for (int k = 1; k <= m; ++k) {
    Wide acc = k <= d ? -static_cast<long double>(k) * ew[k] : Wide{};
    const int top = std::min(k - 1, d);
    for (int i = 1; i <= top; ++i) acc -= ew[i] * pw[k - i - 1];
    pw[k - 1] = acc;
  }
  PowerSums out;
  out.p.resize(m);
  for (int k = 0; k < m; ++k) out.p[k] = narrow(pw[k]);
  return out;
}

PowerSums power_sums_from_coeffs(const PolynomialPrefix& e, int m) {
  require_unit_constant(e);
  const int effective = std::min(e.order(), m);
  if (effective <= kFftThreshold) return power_sums_recurrence(e, m);
  // Σ_k p_k z^k = -z g'(z) / g(z).
  std::vector<Complex> g(e.coeffs.begin(), e.coeffs.begin() + effective + 1);
  g[0] = 1.0;
  std::vector<Complex> zdg(effective + 1);
  for (int k = 1; k <= effective; ++k) zdg[k] = static_cast<double>(k) * g[k];
  const auto inv = series_inverse(g, m);
  const auto prod = multiply_truncated(zdg, inv, m);
  PowerSums out;
  out.p.resize(m);
  for (int k = 1; k <= m; ++k) out.p[k - 1] = k < static_cast<int>(prod.size()) ? -prod[k] : 0.0;
  return out;
}

PolynomialPrefix coeffs_from_power_sums(const PowerSums& p, int m) {
  if (m < 0) throw ContractError("invalid-input", "negative coefficient count");
  std::vector<Wide> pw(p.size() + 1), ew(m + 1);
  for (int j = 1; j <= p.size(); ++j) pw[j] = widen(p[j]);
  ew[0] = 1.0L;
  for (int k = 1; k <= m; ++k) {
    Wide acc{};
    for (int i = std::max(0, k - p.size()); i < k; ++i) acc += ew[i] * pw[k - i];
    ew[k] = -acc / static_cast<long double>(k);
  }
  PolynomialPrefix e;
  e.coeffs.resize(m + 1);
  for (int k = 0; k <= m; ++k) e.coeffs[k] = narrow(ew[k]);
  return e;
}

}  // namespace bigcp
