#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigcp/graph.hpp"

namespace bigcp {

using Complex = std::complex<double>;

/// k×k interaction matrix, row-major.
struct SpinMatrix {
  int k = 0;
  std::vector<Complex> entries;

  Complex operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * k + j]; }
  bool is_symmetric(double tol = 1e-12) const;
  /// max |A_ij - 1|.
  double distance_from_ones() const;

  static SpinMatrix ones(int k);
};

/// Per-edge matrices; edges without their own matrix use the default.
struct SpinSystem {
  int k = 0;
  SpinMatrix default_matrix;
  std::map<std::pair<int, int>, SpinMatrix> edge_matrices;  // keyed by (min, max)

  const SpinMatrix& matrix_for(const Edge& e) const;
};

/// One vertex signature h: color-count vectors of length k to values.
struct EdgeSignature {
  std::optional<Complex> fallback;
  std::map<std::vector<int>, Complex> values;

  /// Throws ContractError("invalid-input") when undefined.
  Complex operator()(const std::vector<int>& counts) const;
  bool defined(const std::vector<int>& counts) const;
  /// max |h - 1| over stored values and the fallback.
  double distance_from_ones() const;
};

struct EdgeColoringSystem {
  int k = 0;
  EdgeSignature shared;
  std::map<int, EdgeSignature> per_vertex;

  const EdgeSignature& at(int v) const;
};

/// {"k": 2, "default": [[[1,0],[1,0]],[[1,0],[1,0]]], "edges": {"0-1": matrix}}
/// with entries as [re, im] pairs (a bare number is read as a real entry).
SpinSystem parse_spin_system(std::string_view json_text);
/// {"k": 2, "default": [re, im], "entries": [{"counts": [..], "value": [re, im]}],
///  "per_vertex": {"3": {"default": .., "entries": [..]}}}
EdgeColoringSystem parse_edge_coloring_system(std::string_view json_text);

SpinSystem read_spin_file(const std::filesystem::path& path);
EdgeColoringSystem read_edge_coloring_file(const std::filesystem::path& path);

std::string format_spin_system(const SpinSystem& s);
std::string format_edge_coloring_system(const EdgeColoringSystem& s);

/// All vectors of k nonnegative integers summing to total, lexicographic.
std::vector<std::vector<int>> compositions(int total, int k);

}  // namespace bigcp
