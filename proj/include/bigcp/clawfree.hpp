#pragma once

#include <complex>
#include <cstdint>

#include "bigcp/graph.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

/// φ_ρ(z) = (1/σ) Σ_{i=1}^{N} (αz)^i / i, which maps the disk |z| <= β
/// into the strip S_ρ = {-ρ <= Re <= 1 + 2ρ, |Im| <= 2ρ}.
class ClawFreeTransform {
 public:
  /// ρ in (0, 1). Throws ResourceError when N would exceed max_degree.
  explicit ClawFreeTransform(double rho, std::int64_t max_degree = 50'000'000);

  double rho() const noexcept { return rho_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  std::int64_t degree() const noexcept { return N_; }
  /// Σ_{i<=N} α^i / i computed as 1/ρ minus the tail past N.
  double sigma() const noexcept { return sigma_; }
  /// Direct summation of the N terms (for cross-checks).
  double sigma_direct() const;

  /// Coefficients of φ up to z^m (zero past N).
  PolynomialPrefix prefix(int m) const;
  Complex operator()(Complex z) const;

 private:
  double rho_;
  double alpha_;
  double beta_;
  std::int64_t N_;
  double sigma_;
};

/// 1/(9r(Δ-1)) when |arg λ| <= π/2, else |sin θ|/(6r(Δ-1)); Δ is raised to
/// 2 when smaller and the result is capped at 1/2.
double clawfree_rho(Complex lambda, int max_degree);

bool in_strip(Complex z, double rho, double tol = 0.0);

/// No vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Multigraph& g);

}  // namespace bigcp
