#include <cmath>
#include <numeric>

#include "bigcp/errors.hpp"
#include "bigcp/oracle.hpp"

namespace bigcp {

namespace {

std::uint64_t checked_power(int base, int exponent, std::uint64_t cap, const char* what) {
  std::uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    total *= static_cast<std::uint64_t>(base);
    if (total > cap) throw ResourceError(std::string(what) + " exceeds the oracle cap");
  }
  return total;
}

struct UnionFind {
  std::vector<int> parent;
  int components;

  explicit UnionFind(int n) : parent(n), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
};

/// Counts of connected components k(A) over all edge subsets, by (|A|, k(A)).
template <class F>
void for_each_edge_subset(const Multigraph& g, F&& f) {
  const int ne = g.num_edges();
  if (ne > kOracleCaps.max_tutte_edges) throw ResourceError("edge count exceeds the oracle cap");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
    UnionFind uf(g.num_vertices());
    int size = 0;
    for (int e = 0; e < ne; ++e) {
      if (mask >> e & 1) {
        uf.unite(g.edge(e).u, g.edge(e).v);
        ++size;
      }
    }
    f(size, uf.components);
  }
}

void count_independent(const std::vector<std::uint32_t>& nbr, int v, std::uint32_t chosen, int size,
                       std::vector<double>& counts) {
  if (v == static_cast<int>(nbr.size())) {
    counts[size] += 1.0;
    return;
  }
  count_independent(nbr, v + 1, chosen, size, counts);
  if (!(nbr[v] & chosen)) count_independent(nbr, v + 1, chosen | (1u << v), size + 1, counts);
}

/// Multiply poly by (1 + z c) in place.
void times_linear(std::vector<Complex>& poly, int& deg, Complex c) {
  for (int i = deg; i >= 0; --i) poly[i + 1] += c * poly[i];
  ++deg;
}

}  // namespace

ExactPolynomial exact_independence_coeffs(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > kOracleCaps.max_independence_vertices)
    throw ResourceError("vertex count exceeds the oracle cap");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : g.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  std::vector<double> counts(n + 1, 0.0);
  count_independent(nbr, 0, 0, 0, counts);
  int deg = n;
  while (deg > 0 && counts[deg] == 0.0) --deg;
  return {std::vector<Complex>(counts.begin(), counts.begin() + deg + 1)};
}

Complex exact_independence(const Multigraph& g, Complex lambda) {
  return exact_independence_coeffs(g)(lambda);
}

Complex exact_independence_multivariate(const Multigraph& g, const std::vector<Complex>& z) {
  const int n = g.num_vertices();
  if (n > kOracleCaps.max_independence_vertices)
    throw ResourceError("vertex count exceeds the oracle cap");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : g.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  Complex total = 0.0;
  auto rec = [&](auto&& self, int v, std::uint32_t chosen, Complex prod) -> void {
    if (v == n) {
      total += prod;
      return;
    }
    self(self, v + 1, chosen, prod);
    if (!(nbr[v] & chosen)) self(self, v + 1, chosen | (1u << v), prod * z[v]);
  };
  rec(rec, 0, 0, 1.0);
  return total;
}

Complex exact_tutte(const Multigraph& g, Complex q, Complex w) {
  Complex total = 0.0;
  for_each_edge_subset(g, [&](int size, int k) { total += std::pow(q, k) * std::pow(w, size); });
  return total;
}

ExactPolynomial exact_tutte_inverted_coeffs(const Multigraph& g, Complex w) {
  const int n = g.num_vertices();
  std::vector<Complex> c(n + 1, 0.0);
  for_each_edge_subset(g, [&](int size, int k) { c[n - k] += std::pow(w, size); });
  return {c};
}

Complex exact_spin(const Multigraph& g, const SpinSystem& s) {
  const int n = g.num_vertices();
  const std::uint64_t total = checked_power(s.k, n, kOracleCaps.max_spin_assignments, "k^n");
  std::vector<int> phi(n, 0);
  Complex sum = 0.0;
  for (std::uint64_t a = 0; a < total; ++a) {
    std::uint64_t x = a;
    for (int v = 0; v < n; ++v, x /= s.k) phi[v] = static_cast<int>(x % s.k);
    Complex prod = 1.0;
    for (const auto& e : g.edges()) prod *= s.matrix_for(e)(phi[e.u], phi[e.v]);
    sum += prod;
  }
  return sum;
}

ExactPolynomial exact_spin_q_coeffs(const Multigraph& g, const SpinSystem& s) {
  const int n = g.num_vertices();
  const int ne = g.num_edges();
  const std::uint64_t total = checked_power(s.k, n, kOracleCaps.max_spin_assignments, "k^n");
  std::vector<int> phi(n, 0);
  std::vector<Complex> acc(ne + 1, 0.0), poly(ne + 1);
  for (std::uint64_t a = 0; a < total; ++a) {
    std::uint64_t x = a;
    for (int v = 0; v < n; ++v, x /= s.k) phi[v] = static_cast<int>(x % s.k);
    std::fill(poly.begin(), poly.end(), Complex{});
    poly[0] = 1.0;
    int deg = 0;
    for (const auto& e : g.edges())
      times_linear(poly, deg, s.matrix_for(e)(phi[e.u], phi[e.v]) - 1.0);
    for (int i = 0; i <= ne; ++i) acc[i] += poly[i];
  }
  const double scale = std::pow(static_cast<double>(s.k), -n);
  for (auto& c : acc) c *= scale;
  return {acc};
}

namespace {

template <class F>
void for_each_edge_coloring(const Multigraph& g, int k, F&& f) {
  const int n = g.num_vertices();
  const int ne = g.num_edges();
  const std::uint64_t total = checked_power(k, ne, kOracleCaps.max_edge_colorings, "k^|E|");
  std::vector<std::vector<int>> counts(n, std::vector<int>(k, 0));
  for (std::uint64_t a = 0; a < total; ++a) {
    for (auto& c : counts) std::fill(c.begin(), c.end(), 0);
    std::uint64_t x = a;
    for (int e = 0; e < ne; ++e, x /= k) {
      const int color = static_cast<int>(x % k);
      ++counts[g.edge(e).u][color];
      ++counts[g.edge(e).v][color];
    }
    f(counts);
  }
}

}  // namespace

Complex exact_edge_coloring(const Multigraph& g, const EdgeColoringSystem& s) {
  Complex sum = 0.0;
  for_each_edge_coloring(g, s.k, [&](const std::vector<std::vector<int>>& counts) {
    Complex prod = 1.0;
    for (int v = 0; v < g.num_vertices(); ++v) prod *= s.at(v)(counts[v]);
    sum += prod;
  });
  return sum;
}

ExactPolynomial exact_edge_q_coeffs(const Multigraph& g, const EdgeColoringSystem& s) {
  const int n = g.num_vertices();
  std::vector<Complex> acc(n + 1, 0.0), poly(n + 1);
  for_each_edge_coloring(g, s.k, [&](const std::vector<std::vector<int>>& counts) {
    std::fill(poly.begin(), poly.end(), Complex{});
    poly[0] = 1.0;
    int deg = 0;
    for (int v = 0; v < n; ++v) times_linear(poly, deg, s.at(v)(counts[v]) - 1.0);
    for (int i = 0; i <= n; ++i) acc[i] += poly[i];
  });
  const double scale = std::pow(static_cast<double>(s.k), -g.num_edges());
  for (auto& c : acc) c *= scale;
  return {acc};
}

}  // namespace bigcp
