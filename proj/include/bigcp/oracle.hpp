#pragma once

#include <cstdint>

#include "bigcp/graph.hpp"
#include "bigcp/parameters.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

/// Full coefficient vector of a graph polynomial, constant term first.
struct ExactPolynomial {
  std::vector<Complex> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Complex operator()(Complex z) const { return evaluate_polynomial(coeffs, z); }
};

/// Size caps of the brute-force evaluators; exceeding one throws ResourceError.
struct OracleCaps {
  int max_independence_vertices = 25;
  int max_tutte_edges = 22;
  std::uint64_t max_spin_assignments = 1u << 20;  // k^n
  std::uint64_t max_edge_colorings = 1u << 20;    // k^{|E|}
  int max_root_degree = 12;
};

inline constexpr OracleCaps kOracleCaps{};

Complex exact_independence(const Multigraph& g, Complex lambda);
ExactPolynomial exact_independence_coeffs(const Multigraph& g);
/// Σ_I Π_{v∈I} z_v.
Complex exact_independence_multivariate(const Multigraph& g, const std::vector<Complex>& z);

/// Σ_{A ⊆ E} q^{k(A)} w^{|A|}.
Complex exact_tutte(const Multigraph& g, Complex q, Complex w);
/// Coefficients of z^n Z(1/z, w), grouped by n - k(A).
ExactPolynomial exact_tutte_inverted_coeffs(const Multigraph& g, Complex w);

/// Σ_φ Π_e A^e_{φ(u)φ(v)}.
Complex exact_spin(const Multigraph& g, const SpinSystem& s);
/// Coefficients of k^{-n} Σ_φ Π_e (1 + z(A^e_{φ(u)φ(v)} - 1)).
ExactPolynomial exact_spin_q_coeffs(const Multigraph& g, const SpinSystem& s);

/// Σ_{φ: E -> [k]} Π_v h^v(color counts at v); a loop counts twice.
Complex exact_edge_coloring(const Multigraph& g, const EdgeColoringSystem& s);
/// Coefficients of k^{-|E|} Σ_φ Π_v (1 + z(h^v - 1)).
ExactPolynomial exact_edge_q_coeffs(const Multigraph& g, const EdgeColoringSystem& s);

/// p_1..p_m (m defaults to the degree) from companion-matrix roots.
/// Throws ContractError("ill-conditioned") when the constant term is
/// negligible next to the other coefficients.
PowerSums power_sums_from_roots(const std::vector<Complex>& coeffs, int m = -1);

}  // namespace bigcp
