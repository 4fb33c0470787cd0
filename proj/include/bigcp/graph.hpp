#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bigcp {

using Color = std::int64_t;

struct Edge {
  int u = 0;
  int v = 0;
};

/// Undirected multigraph on vertices 0..n-1. A repeated pair is a parallel
/// edge and u == v is a loop; a loop adds 2 to the degree of its vertex.
/// Vertex and edge colors are optional, but total when present.
class Multigraph {
 public:
  struct Incidence {
    int neighbor;
    int edge;
  };

  Multigraph() = default;
  explicit Multigraph(int n, std::vector<Edge> edges = {},
                      std::vector<Color> vertex_colors = {},
                      std::vector<Color> edge_colors = {});

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  bool has_vertex_colors() const noexcept { return !vertex_colors_.empty(); }
  bool has_edge_colors() const noexcept { return !edge_colors_.empty(); }
  Color vertex_color(int v) const { return has_vertex_colors() ? vertex_colors_[v] : 0; }
  Color edge_color(int e) const { return has_edge_colors() ? edge_colors_[e] : 0; }
  std::span<const Color> vertex_colors() const noexcept { return vertex_colors_; }
  std::span<const Color> edge_colors() const noexcept { return edge_colors_; }

  int degree(int v) const { return degree_[v]; }

  /// Incident edges of v; a loop appears once with neighbor == v.
  std::span<const Incidence> incidences(int v) const { return adjacency_[v]; }

  bool has_loops() const noexcept;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  Multigraph with_vertex_colors(std::vector<Color> colors) const;
  Multigraph with_edge_colors(std::vector<Color> colors) const;
  Multigraph without_colors() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Color> vertex_colors_;
  std::vector<Color> edge_colors_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<int> degree_;
};

int max_degree(const Multigraph& g);

/// Vertices of b are shifted by a.num_vertices(). Colors are kept only when
/// both operands carry them.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Line graph of a loopless multigraph: one vertex per edge, adjacent when
/// the edges share an endpoint (simple, regardless of parallel edges).
Multigraph line_graph(const Multigraph& g);

/// Vertex-colored graph with κ(v) half edges at every vertex. The declared
/// degree bound caps deg(v) + κ(v).
class Fragment {
 public:
  Fragment(Multigraph graph, std::vector<int> kappa, int degree_bound);

  const Multigraph& graph() const noexcept { return graph_; }
  std::span<const int> kappa() const noexcept { return kappa_; }
  int degree_bound() const noexcept { return degree_bound_; }

  /// Edges including half edges.
  int num_edges_with_half_edges() const noexcept;

 private:
  Multigraph graph_;
  std::vector<int> kappa_;
  int degree_bound_;
};

/// A piece of a host graph: the induced multigraph with inherited colors,
/// the number of host edges leaving each vertex, and the host vertex ids.
struct Pattern {
  Multigraph graph;
  std::vector<int> kappa;
  std::vector<int> origin;

  int size() const noexcept { return graph.num_vertices(); }
};

Pattern as_pattern(const Multigraph& g);
Pattern as_pattern(const Fragment& f);

/// Induced piece on a sorted vertex list. κ counts non-loop edges to the
/// rest of the host plus the host's own κ (for fragment hosts).
Pattern induced_pattern(const Multigraph& host, std::span<const int> vertices,
                        std::span<const int> host_kappa = {});
Pattern induced_pattern(const Pattern& host, std::span<const int> local_vertices);

enum class Flavor { plain, vertex_colored, edge_colored, fragment };

std::string to_string(Flavor f);

}  // namespace bigcp
