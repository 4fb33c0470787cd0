#include <algorithm>
#include <numeric>

#include "bigcp/errors.hpp"
#include "bigcp/graph.hpp"

namespace bigcp {

Pattern as_pattern(const Multigraph& g) {
  Pattern p{g, std::vector<int>(g.num_vertices(), 0), {}};
  p.origin.resize(g.num_vertices());
  std::iota(p.origin.begin(), p.origin.end(), 0);
  return p;
}

Pattern as_pattern(const Fragment& f) {
  Pattern p = as_pattern(f.graph());
  p.kappa.assign(f.kappa().begin(), f.kappa().end());
  return p;
}

Pattern induced_pattern(const Multigraph& host, std::span<const int> vertices,
                        std::span<const int> host_kappa) {
  const int n = host.num_vertices();
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= n) throw ContractError("invalid-input", "vertex out of range");
    if (local[v] >= 0) throw ContractError("invalid-input", "repeated vertex");
    local[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<Color> ecolors;
  std::vector<int> kappa(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (!host_kappa.empty()) kappa[i] += host_kappa[v];
    for (auto inc : host.incidences(v)) {
      const int w = inc.neighbor;
      if (local[w] < 0) {
        ++kappa[i];
        continue;
      }
      // Each non-loop edge is seen from both ends; keep it once.
      if (w < v) continue;
      edges.push_back({static_cast<int>(i), local[w]});
      if (host.has_edge_colors()) ecolors.push_back(host.edge_color(inc.edge));
    }
  }
  std::vector<Color> vcolors;
  if (host.has_vertex_colors()) {
    for (int v : vertices) vcolors.push_back(host.vertex_color(v));
  }
  if (!host.has_edge_colors()) ecolors.clear();
  Pattern p{Multigraph(static_cast<int>(vertices.size()), std::move(edges), std::move(vcolors),
                       host.has_edge_colors() ? std::move(ecolors) : std::vector<Color>{}),
            std::move(kappa),
            std::vector<int>(vertices.begin(), vertices.end())};
  return p;
}

Pattern induced_pattern(const Pattern& host, std::span<const int> local_vertices) {
  Pattern p = induced_pattern(host.graph, local_vertices, host.kappa);
  if (!host.origin.empty()) {
    for (auto& o : p.origin) o = host.origin[o];
  }
  return p;
}

}  // namespace bigcp
