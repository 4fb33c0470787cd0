#pragma once

#include <chrono>
#include <complex>
#include <string>
#include <vector>

namespace bigcp {

using Complex = std::complex<double>;

/// Coefficients e_0..e_m of a polynomial (e_0 = 1 for graph polynomials).
struct PolynomialPrefix {
  std::vector<Complex> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Complex at(int i) const { return i < static_cast<int>(coeffs.size()) ? coeffs[i] : Complex{}; }
};

/// Inverse power sums p_1..p_m; p[j - 1] holds p_j.
struct PowerSums {
  std::vector<Complex> p;

  int size() const noexcept { return static_cast<int>(p.size()); }
  Complex operator[](int j) const { return p[j - 1]; }
};

struct ApproxResult {
  Complex value;
  Complex log_value;
  /// Logarithms of the rescaling factor and of the polynomial value before
  /// rescaling; log_value is their sum.
  Complex log_scale;
  Complex unscaled_log_value;
  int m = 0;
  double epsilon = 0.0;
  std::chrono::duration<double, std::milli> elapsed{0};
  PowerSums power_sums;
  std::vector<std::string> warnings;
};

/// Newton identities: k e_k = -Σ_{i<k} e_i p_{k-i}, coefficients past the
/// end of e read as 0. Long prefixes go through FFT series arithmetic.
PowerSums power_sums_from_coeffs(const PolynomialPrefix& e, int m);

/// Inverse of power_sums_from_coeffs; e_0 = 1.
PolynomialPrefix coeffs_from_power_sums(const PowerSums& p, int m);

/// Quadratic-time recurrences, kept separate so the fast path can be
/// checked against them.
PowerSums power_sums_recurrence(const PolynomialPrefix& e, int m);

/// ceil(C ln(2d/ε)) with C = 1/(1 - |t|/M), at least 1.
int taylor_order(Complex t, double M, double d, double eps);

/// d q^{m+1} / ((m+1)(1-q)) for q = |t|/M < 1.
double truncation_bound(double q, int m, double d);

/// log_value = ln(a0) - Σ_j p_j t^j / j, summed with j ascending.
ApproxResult evaluate_truncated(Complex a0, const PowerSums& p, Complex t);

/// First m+1 coefficients of outer(inner(z)); inner(0) must be 0.
PolynomialPrefix compose_truncate(const PolynomialPrefix& outer, const PolynomialPrefix& inner,
                                  int m);

/// e^{-ε} <= |q|/|ξ| <= e^{ε} and the angle between ξ and q is at most ε.
bool approx_matches(Complex xi, Complex q, double eps);

/// Truncated product of power series (first m+1 coefficients).
std::vector<Complex> multiply_truncated(const std::vector<Complex>& a,
                                        const std::vector<Complex>& b, int m);

/// First m+1 coefficients of 1/a; a[0] must be nonzero.
std::vector<Complex> series_inverse(const std::vector<Complex>& a, int m);

Complex evaluate_polynomial(const std::vector<Complex>& coeffs, Complex z);

}  // namespace bigcp
