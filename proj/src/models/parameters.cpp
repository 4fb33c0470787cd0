#include <algorithm>
#include <cmath>

#include "bigcp/errors.hpp"
#include "bigcp/parameters.hpp"

namespace bigcp {

bool SpinMatrix::is_symmetric(double tol) const {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double SpinMatrix::distance_from_ones() const {
  double d = 0.0;
  for (const auto& a : entries) d = std::max(d, std::abs(a - Complex(1.0)));
  return d;
}

SpinMatrix SpinMatrix::ones(int k) {
  return SpinMatrix{k, std::vector<Complex>(static_cast<std::size_t>(k) * k, Complex(1.0))};
}

const SpinMatrix& SpinSystem::matrix_for(const Edge& e) const {
  auto it = edge_matrices.find(std::minmax(e.u, e.v));
  return it == edge_matrices.end() ? default_matrix : it->second;
}

Complex EdgeSignature::operator()(const std::vector<int>& counts) const {
  auto it = values.find(counts);
  if (it != values.end()) return it->second;
  if (fallback) return *fallback;
  std::string shown;
  for (int c : counts) shown += (shown.empty() ? "" : ",") + std::to_string(c);
  throw ContractError("invalid-input", "edge-coloring signature undefined at counts (" + shown +
                                           ") and no default given");
}

bool EdgeSignature::defined(const std::vector<int>& counts) const {
  return fallback.has_value() || values.count(counts) > 0;
}

double EdgeSignature::distance_from_ones() const {
  double d = fallback ? std::abs(*fallback - Complex(1.0)) : 0.0;
  for (const auto& [c, v] : values) d = std::max(d, std::abs(v - Complex(1.0)));
  return d;
}

const EdgeSignature& EdgeColoringSystem::at(int v) const {
  auto it = per_vertex.find(v);
  return it == per_vertex.end() ? shared : it->second;
}

std::vector<std::vector<int>> compositions(int total, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(k, 0);
  auto rec = [&](auto& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace bigcp
