#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bigcp/engine.hpp"
#include "bigcp/parameters.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

/// Independence polynomial. Univariate: plain flavor, λ_{H,i} = 1 for the
/// edgeless graph on i vertices. Multivariate: vertex-colored flavor, a
/// vertex of color c weighs vertex_weights[c].
class IndependenceModel final : public BigcpModel {
 public:
  IndependenceModel() = default;
  explicit IndependenceModel(std::vector<Complex> vertex_weights);

  std::string name() const override { return "independence"; }
  Flavor flavor() const override {
    return multivariate_ ? Flavor::vertex_colored : Flavor::plain;
  }
  int alpha() const override { return 1; }
  double beta() const override { return 1.0; }
  bool weight_vanishes_on_edges() const override { return true; }
  std::vector<Complex> weights(const Pattern& h, int m) const override;

 private:
  bool multivariate_ = false;
  std::vector<Complex> vertex_weights_;
};

/// p_T(G)(z) = z^n Z_T(G)(1/z, w). λ_{H,k} sums w^{|F|} over spanning
/// subgraphs F of H without isolated vertices and with |V(H)| - k components.
class TutteModel final : public BigcpModel {
 public:
  TutteModel(Complex w, int max_degree);

  std::string name() const override { return "tutte"; }
  Flavor flavor() const override { return Flavor::plain; }
  int alpha() const override { return 2; }
  double beta() const override;
  std::vector<Complex> weights(const Pattern& h, int m) const override;

 private:
  Complex w_;
  int max_degree_;
};

/// q(G)(z) = k^{-n} p(G)(J + z(A^e - J)) over an edge-colored host whose
/// edge colors index `matrices`.
class SpinModel final : public BigcpModel {
 public:
  SpinModel(int k, std::vector<SpinMatrix> matrices);

  std::string name() const override { return "spin"; }
  Flavor flavor() const override { return Flavor::edge_colored; }
  int alpha() const override { return 2; }
  double beta() const override { return k_; }
  std::vector<Complex> weights(const Pattern& h, int m) const override;

 private:
  int k_;
  std::vector<SpinMatrix> matrices_;
};

/// q(G)(z) = k^{-|E|} p(G)(J + z(h^v - J)) over fragments; vertex colors
/// index `signatures`, κ counts half edges.
class EdgeColoringModel final : public BigcpModel {
 public:
  EdgeColoringModel(int k, std::vector<EdgeSignature> signatures, int max_degree);

  std::string name() const override { return "edge-coloring"; }
  Flavor flavor() const override { return Flavor::fragment; }
  int alpha() const override { return 1; }
  double beta() const override;
  std::vector<Complex> weights(const Pattern& h, int m) const override;

 private:
  int k_;
  std::vector<EdgeSignature> signatures_;
  int max_degree_;
};

/// A model together with the colored host it runs on, the degree of the
/// resulting polynomial, and the evaluation geometry.
struct PreparedModel {
  std::unique_ptr<BigcpModel> model;
  Multigraph host;
  int degree_bound = 0;
};

PreparedModel prepare_independence(const Multigraph& g);
PreparedModel prepare_independence_multivariate(const Multigraph& g,
                                                const std::vector<Complex>& z);
PreparedModel prepare_tutte(const Multigraph& g, Complex w);
PreparedModel prepare_spin(const Multigraph& g, const SpinSystem& s);
PreparedModel prepare_edge_coloring(const Multigraph& g, const EdgeColoringSystem& s);

/// Power sums p_1..p_m of the prepared polynomial. The engine runs up to
/// min(m, degree bound); higher power sums follow from the Newton
/// identities because the remaining coefficients vanish.
PowerSums prepared_power_sums(const PreparedModel& pm, int m, const EngineLimits& limits = {});

struct ApproxOptions {
  /// Declared degree bound Δ; defaults to the maximum degree of the input.
  std::optional<int> max_degree;
  bool override_region_check = false;
  /// Zero-free margin δ for the spin and edge-coloring disks |z| <= 1 + δ.
  double radius_margin = 0.05;
  std::optional<double> tutte_K;
  EngineLimits limits;
  /// Cap on the truncation order m and on the claw-free transform degree N.
  int max_order = 4'000'000;
};

/// (Δ-1)^{Δ-1} / Δ^Δ, with Δ raised to 2 when smaller.
double lambda_star(int max_degree);

ApproxResult approx_independence(const Multigraph& g, Complex lambda, double eps,
                                 const ApproxOptions& opts = {});
ApproxResult approx_independence_even(const Multigraph& g, double lambda, double eps,
                                      const ApproxOptions& opts = {});
ApproxResult approx_independence_multivariate(const Multigraph& g, const std::vector<Complex>& z,
                                              double eps, const ApproxOptions& opts = {});
ApproxResult approx_independence_clawfree(const Multigraph& g, Complex lambda, double eps,
                                          const ApproxOptions& opts = {});
ApproxResult approx_tutte(const Multigraph& g, Complex q, Complex w, double eps,
                          const ApproxOptions& opts = {});
ApproxResult approx_spin(const Multigraph& g, const SpinSystem& s, double eps,
                         const ApproxOptions& opts = {});
ApproxResult approx_edge_coloring(const Multigraph& g, const EdgeColoringSystem& s, double eps,
                                  const ApproxOptions& opts = {});

}  // namespace bigcp
