#include <cmath>

#include "bigcp/errors.hpp"
#include "bigcp/models.hpp"

namespace bigcp {

SpinModel::SpinModel(int k, std::vector<SpinMatrix> matrices)
    : k_(k), matrices_(std::move(matrices)) {}

// λ_{H,i} = k^{-h} Σ_{F ⊆ E(H), |F| = i, F covers V(H)} Σ_φ Π_{e∈F} (A^e - J)_{φ(u)φ(v)}.
// Inclusion-exclusion over the covered set X:
//   Σ_i λ_{H,i} y^i = k^{-h} Σ_X (-k)^{h-|X|} Σ_{φ: X→[k]} Π_{e ⊆ X} (1 + y (A^e - J)_{φ}).
std::vector<Complex> SpinModel::weights(const Pattern& h, int m) const {
  std::vector<Complex> out(m + 1);
  const int n = h.size();
  if (n == 0) {
    out[0] = 1.0;
    return out;
  }
  const auto& g = h.graph;
  for (const auto& e : g.edges())
    if (e.u == e.v) throw ContractError("invalid-input", "spin model needs a graph without loops");
  if (g.num_edges() == 0) return out;
  std::vector<const SpinMatrix*> mat(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Color c = g.edge_color(e);
    if (c < 0 || c >= static_cast<Color>(matrices_.size()))
      throw ContractError("invalid-input", "edge color without a matrix");
    mat[e] = &matrices_[c];
  }
  // state[v] = k means v is outside X.
  std::vector<int> state(n, 0);
  std::vector<Complex> poly;
  const double inv_k = 1.0 / k_;
  while (true) {
    int outside = 0;
    for (int v = 0; v < n; ++v) outside += state[v] == k_;
    poly.assign(1, Complex(1.0));
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.edge(e);
      if (state[u] == k_ || state[v] == k_) continue;
      const Complex b = (*mat[e])(state[u], state[v]) - Complex(1.0);
      const int top = std::min<int>(poly.size(), m);
      if (static_cast<int>(poly.size()) <= m) poly.push_back(0.0);
      for (int i = top; i >= 1; --i) poly[i] += b * poly[i - 1];
    }
    // (-k)^{outside} k^{-n}
    const double factor = std::pow(-1.0, outside) * std::pow(inv_k, n - outside);
    for (std::size_t i = 0; i < poly.size() && static_cast<int>(i) <= m; ++i)
      out[i] += factor * poly[i];
    int v = 0;
    while (v < n && state[v] == k_) state[v++] = 0;
    if (v == n) break;
    ++state[v];
  }
  // The i = 0 term is Σ_X (-k)^{h-|X|} k^{|X|} k^{-h} = (1 - 1)^h = 0 for h >= 1.
  out[0] = 0.0;
  return out;
}

}  // namespace bigcp
