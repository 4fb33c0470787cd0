#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bigcp/graph.hpp"
#include "bigcp/patterns.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

/// Coefficient weights of a bounded induced graph counting polynomial:
/// e_i(G) = Σ_H λ_{H,i} ind(H, G) over patterns with at most α·i vertices.
class BigcpModel {
 public:
  virtual ~BigcpModel() = default;

  virtual std::string name() const = 0;
  virtual Flavor flavor() const = 0;
  virtual int alpha() const = 0;
  /// Base of the weight-computation cost; informational only.
  virtual double beta() const = 0;

  /// λ_{H,0..m} for any pattern, connected or not. Entry 0 is 0 unless H is
  /// empty. Entries with |V(H)| > α·i are 0.
  virtual std::vector<Complex> weights(const Pattern& h, int m) const = 0;

  Complex weight(const Pattern& h, int i) const;

  /// True when λ_{H,i} = 0 for every H with at least one edge (the engine
  /// then only visits independent supports).
  virtual bool weight_vanishes_on_edges() const { return false; }
};

struct EngineLimits {
  std::size_t max_connected_sets = 20'000'000;
  /// Cap on (S, T) pairs visited while building the table.
  std::uint64_t max_pair_work = 20'000'000'000ull;
  /// Visit every support explicitly, ignoring model structure (cross-checks).
  bool force_generic = false;
};

/// a_{H,k} for every connected pattern class H of the host with
/// |V(H)| <= α·m. a[c][k] for k = 0..m; a[c][0] = 0.
class SupportTable {
 public:
  SupportTable(PatternIndex index, std::vector<std::vector<Complex>> a, int m)
      : index_(std::move(index)), a_(std::move(a)), m_(m) {}

  const PatternIndex& index() const noexcept { return index_; }
  int order() const noexcept { return m_; }
  Complex coefficient(int cls, int k) const { return a_[cls][k]; }
  const std::vector<Complex>& coefficients(int cls) const { return a_[cls]; }

  /// p_k = Σ_H a_{H,k} ind(H, G), summed in dictionary order.
  PowerSums power_sums() const;

 private:
  PatternIndex index_;
  std::vector<std::vector<Complex>> a_;
  int m_;
};

/// The host must already carry the colors the model's flavor reads.
SupportTable compute_support_table(const Multigraph& host, const BigcpModel& model, int m,
                                   const EngineLimits& limits = {});

PowerSums compute_power_sums(const Multigraph& host, const BigcpModel& model, int m,
                             const EngineLimits& limits = {});

}  // namespace bigcp
