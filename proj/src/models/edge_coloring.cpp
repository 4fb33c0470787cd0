#include <cmath>
#include <map>

#include "bigcp/errors.hpp"
#include "bigcp/models.hpp"

namespace bigcp {

EdgeColoringModel::EdgeColoringModel(int k, std::vector<EdgeSignature> signatures,
                                     int max_degree)
    : k_(k), signatures_(std::move(signatures)), max_degree_(max_degree) {}

double EdgeColoringModel::beta() const { return std::pow(k_, max_degree_); }

namespace {

double multinomial(const std::vector<int>& parts) {
  double r = 1.0;
  int total = 0;
  for (int p : parts) {
    for (int j = 1; j <= p; ++j) r = r * (total + j) / j;
    total += p;
  }
  return r;
}

}  // namespace

// λ_{F,i} = [|V(F)| = i] k^{-|E(F)|} Σ_{φ: E(F)→[k]} Π_v (h^v - J)(φ(δ(v))).
// Half edges touch a single vertex, so they are summed out per vertex first.
std::vector<Complex> EdgeColoringModel::weights(const Pattern& f, int m) const {
  std::vector<Complex> out(m + 1);
  const int n = f.size();
  if (n > m) return out;
  if (n == 0) {
    out[0] = 1.0;
    return out;
  }
  const auto& g = f.graph;
  std::vector<const EdgeSignature*> sig(n);
  int half_edges = 0;
  for (int v = 0; v < n; ++v) {
    const Color c = g.vertex_color(v);
    if (c < 0 || c >= static_cast<Color>(signatures_.size()))
      throw ContractError("invalid-input", "vertex color without a signature");
    sig[v] = &signatures_[c];
    half_edges += f.kappa.empty() ? 0 : f.kappa[v];
  }
  const int ne = g.num_edges();
  if (ne > 40) throw ResourceError("edge-coloring weight: fragment with more than 40 edges");

  // reduced[v][α] = Σ_{c: |c| = κ(v)} multinomial(c) (h^v - 1)(α + c)
  std::vector<std::map<std::vector<int>, Complex>> reduced(n);
  auto reduced_value = [&](int v, const std::vector<int>& alpha) {
    auto it = reduced[v].find(alpha);
    if (it != reduced[v].end()) return it->second;
    const int kappa = f.kappa.empty() ? 0 : f.kappa[v];
    Complex acc{};
    for (const auto& c : compositions(kappa, k_)) {
      std::vector<int> counts = alpha;
      for (int j = 0; j < k_; ++j) counts[j] += c[j];
      acc += multinomial(c) * ((*sig[v])(counts) - Complex(1.0));
    }
    reduced[v].emplace(alpha, acc);
    return acc;
  };

  std::vector<int> color(ne, 0);
  std::vector<std::vector<int>> alpha(n, std::vector<int>(k_, 0));
  Complex total{};
  while (true) {
    for (auto& a : alpha) std::fill(a.begin(), a.end(), 0);
    for (int e = 0; e < ne; ++e) {
      ++alpha[g.edge(e).u][color[e]];
      ++alpha[g.edge(e).v][color[e]];
    }
    Complex prod = 1.0;
    for (int v = 0; v < n && prod != Complex{}; ++v) prod *= reduced_value(v, alpha[v]);
    total += prod;
    int e = 0;
    while (e < ne && color[e] == k_ - 1) color[e++] = 0;
    if (e == ne) break;
    ++color[e];
  }
  out[n] = total * std::pow(static_cast<double>(k_), -(ne + half_edges));
  return out;
}

}  // namespace bigcp
