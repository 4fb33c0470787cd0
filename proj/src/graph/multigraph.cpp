#include "bigcp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "bigcp/errors.hpp"

namespace bigcp {

Multigraph::Multigraph(int n, std::vector<Edge> edges, std::vector<Color> vertex_colors,
                       std::vector<Color> edge_colors)
    : n_(n),
      edges_(std::move(edges)),
      vertex_colors_(std::move(vertex_colors)),
      edge_colors_(std::move(edge_colors)) {
  if (n_ < 0) throw ContractError("invalid-input", "negative vertex count");
  if (!vertex_colors_.empty() && static_cast<int>(vertex_colors_.size()) != n_)
    throw ContractError("invalid-input", "vertex color map is not total");
  if (!edge_colors_.empty() && edge_colors_.size() != edges_.size())
    throw ContractError("invalid-input", "edge color map is not total");
  adjacency_.resize(n_);
  degree_.assign(n_, 0);
  for (int e = 0; e < num_edges(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw ContractError("invalid-input", "edge endpoint out of range");
    if (u == v) {
      adjacency_[u].push_back({u, e});
      degree_[u] += 2;
    } else {
      adjacency_[u].push_back({v, e});
      adjacency_[v].push_back({u, e});
      ++degree_[u];
      ++degree_[v];
    }
  }
}

bool Multigraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool Multigraph::has_parallel_edges() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
  }
  return false;
}

Multigraph Multigraph::with_vertex_colors(std::vector<Color> colors) const {
  return Multigraph(n_, edges_, std::move(colors), edge_colors_);
}

Multigraph Multigraph::with_edge_colors(std::vector<Color> colors) const {
  return Multigraph(n_, edges_, vertex_colors_, std::move(colors));
}

Multigraph Multigraph::without_colors() const { return Multigraph(n_, edges_); }

int max_degree(const Multigraph& g) {
  int best = 0;
  for (int v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  const int shift = a.num_vertices();
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  std::vector<Color> vc, ec;
  if (a.has_vertex_colors() && b.has_vertex_colors()) {
    vc.assign(a.vertex_colors().begin(), a.vertex_colors().end());
    vc.insert(vc.end(), b.vertex_colors().begin(), b.vertex_colors().end());
  }
  if (a.has_edge_colors() && b.has_edge_colors()) {
    ec.assign(a.edge_colors().begin(), a.edge_colors().end());
    ec.insert(ec.end(), b.edge_colors().begin(), b.edge_colors().end());
  }
  // Colors present on only one side cannot be made total.
  if (a.num_edges() == 0 && b.has_edge_colors()) ec.assign(b.edge_colors().begin(), b.edge_colors().end());
  if (b.num_edges() == 0 && a.has_edge_colors()) ec.assign(a.edge_colors().begin(), a.edge_colors().end());
  return Multigraph(a.num_vertices() + b.num_vertices(), std::move(edges), std::move(vc),
                    std::move(ec));
}

std::vector<std::vector<int>> connected_components(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto inc : g.incidences(members[head])) {
        if (comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = id;
          members.push_back(inc.neighbor);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

Multigraph line_graph(const Multigraph& g) {
  if (g.has_loops()) throw ContractError("invalid-input", "line graph of a graph with loops");
  const int m = g.num_edges();
  std::set<std::pair<int, int>> pairs;
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incidences(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        pairs.insert(std::minmax(inc[i].edge, inc[j].edge));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return Multigraph(m, std::move(edges));
}

Fragment::Fragment(Multigraph graph, std::vector<int> kappa, int degree_bound)
    : graph_(std::move(graph)), kappa_(std::move(kappa)), degree_bound_(degree_bound) {
  if (static_cast<int>(kappa_.size()) != graph_.num_vertices())
    throw ContractError("invalid-input", "half-edge map is not total");
  for (int v = 0; v < graph_.num_vertices(); ++v) {
    if (kappa_[v] < 0) throw ContractError("invalid-input", "negative half-edge count");
    if (graph_.degree(v) + kappa_[v] > degree_bound_)
      throw ContractError("invalid-input", "fragment vertex exceeds the declared degree bound");
  }
}

int Fragment::num_edges_with_half_edges() const noexcept {
  return graph_.num_edges() + std::accumulate(kappa_.begin(), kappa_.end(), 0);
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::plain: return "plain";
    case Flavor::vertex_colored: return "vertex-colored";
    case Flavor::edge_colored: return "edge-colored";
    case Flavor::fragment: return "fragment";
  }
  return "unknown";
}

}  // namespace bigcp
