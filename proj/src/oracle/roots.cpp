#include <Eigen/Eigenvalues>

#include "bigcp/errors.hpp"
#include "bigcp/oracle.hpp"

namespace bigcp {

PowerSums power_sums_from_roots(const std::vector<Complex>& coeffs, int m) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d > 0 && coeffs[d] == Complex{}) --d;
  if (m < 0) m = std::max(d, 0);
  if (d > kOracleCaps.max_root_degree) throw ResourceError("degree exceeds the root oracle cap");
  PowerSums out{std::vector<Complex>(m, 0.0)};
  if (d <= 0) return out;

  double scale = 0.0;
  for (int i = 1; i <= d; ++i) scale = std::max(scale, std::abs(coeffs[i]));
  if (std::abs(coeffs[0]) <= 1e-12 * scale)
    throw ContractError("ill-conditioned", "constant coefficient is numerically zero");

  // Companion matrix of the monic polynomial with the coefficients reversed:
  // its eigenvalues are the reciprocals 1/ζ of the roots.
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -coeffs[d - i] / coeffs[0];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  if (solver.info() != Eigen::Success) throw ContractError("ill-conditioned", "eigenvalue solver failed");
  const Eigen::VectorXcd inv = solver.eigenvalues();
  for (int r = 0; r < d; ++r) {
    Complex power = 1.0;
    for (int j = 1; j <= m; ++j) {
      power *= inv[r];
      out.p[j - 1] += power;
    }
  }
  return out;
}

}  // namespace bigcp
