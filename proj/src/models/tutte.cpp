#include <bit>
#include <cmath>
#include <numeric>

#include "bigcp/errors.hpp"
#include "bigcp/models.hpp"

namespace bigcp {

TutteModel::TutteModel(Complex w, int max_degree) : w_(w), max_degree_(max_degree) {}

double TutteModel::beta() const { return std::pow(2.0, max_degree_); }

std::vector<Complex> TutteModel::weights(const Pattern& h, int m) const {
  std::vector<Complex> out(m + 1);
  const int n = h.size();
  const auto edges = h.graph.edges();
  const int ne = static_cast<int>(edges.size());
  if (n == 0) {
    out[0] = 1.0;
    return out;
  }
  if (ne > 30) throw ResourceError("Tutte weight: pattern with more than 30 edges");
  for (const auto& e : edges)
    if (e.u == e.v) throw ContractError("invalid-input", "Tutte model needs a loopless graph");
  std::vector<Complex> wpow(ne + 1, 1.0);
  for (int i = 1; i <= ne; ++i) wpow[i] = wpow[i - 1] * w_;
  std::vector<int> parent(n);
  std::vector<int> deg(n);
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << ne); ++f) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(deg.begin(), deg.end(), 0);
    int components = n;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < ne; ++e) {
      if (!(f >> e & 1)) continue;
      ++deg[edges[e].u];
      ++deg[edges[e].v];
      const int a = find(edges[e].u), b = find(edges[e].v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    bool spanning = true;
    for (int v = 0; v < n && spanning; ++v) spanning = deg[v] > 0;
    if (!spanning) continue;
    const int k = n - components;
    if (k <= m) out[k] += wpow[std::popcount(f)];
  }
  return out;
}

}  // namespace bigcp
