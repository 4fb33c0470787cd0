// Backtracking embeddings. Deliberately independent of the canonical codes so
// the two can be checked against each other.
#include <algorithm>
#include <map>
#include <set>

#include "bigcp/errors.hpp"
#include "bigcp/patterns.hpp"

namespace bigcp {

namespace {

struct View {
  const Pattern& p;
  Flavor flavor;
  std::map<std::pair<int, int>, std::vector<Color>> pairs;

  View(const Pattern& pat, Flavor f) : p(pat), flavor(f) {
    const auto& g = p.graph;
    for (int e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.edge(e);
      pairs[std::minmax(u, v)].push_back(flavor == Flavor::edge_colored ? g.edge_color(e) : 0);
    }
    for (auto& [k, ms] : pairs) std::sort(ms.begin(), ms.end());
  }

  const std::vector<Color>& between(int u, int v) const {
    static const std::vector<Color> none;
    auto it = pairs.find(std::minmax(u, v));
    return it == pairs.end() ? none : it->second;
  }

  Color vertex_label(int v) const {
    return (flavor == Flavor::vertex_colored || flavor == Flavor::fragment)
               ? p.graph.vertex_color(v)
               : 0;
  }

  int kappa(int v) const { return p.kappa.empty() ? 0 : p.kappa[v]; }
};

class Embedder {
 public:
  Embedder(const View& h, const View& host) : h_(h), host_(host) {
    const int k = h.p.size();
    // BFS order of h so every vertex after the first has an earlier neighbor.
    std::vector<char> seen(k, 0);
    if (k > 0) {
      order_.push_back(0);
      parent_.push_back(-1);
      seen[0] = 1;
    }
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const int u = order_[head];
      for (auto inc : h.p.graph.incidences(u)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          order_.push_back(inc.neighbor);
          parent_.push_back(static_cast<int>(head));
        }
      }
    }
    if (static_cast<int>(order_.size()) != k)
      throw ContractError("invalid-input", "pattern must be connected");
    image_.assign(k, -1);
    used_.assign(host.p.size(), 0);
  }

  std::set<VertexSet> images() {
    found_.clear();
    if (order_.empty()) return found_;
    for (int x = 0; x < host_.p.size(); ++x) extend(0, x);
    return found_;
  }

 private:
  bool compatible(std::size_t i, int x) const {
    const int u = order_[i];
    if (h_.vertex_label(u) != host_.vertex_label(x)) return false;
    if (h_.between(u, u) != host_.between(x, x)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (h_.between(u, order_[j]) != host_.between(x, image_[j])) return false;
    }
    return true;
  }

  void extend(std::size_t i, int x) {
    if (used_[x] || !compatible(i, x)) return;
    image_[i] = x;
    used_[x] = 1;
    if (i + 1 == order_.size()) {
      record();
    } else {
      const int anchor = image_[parent_[i + 1]];
      std::set<int> tried;
      for (auto inc : host_.p.graph.incidences(anchor)) {
        if (tried.insert(inc.neighbor).second) extend(i + 1, inc.neighbor);
      }
    }
    used_[x] = 0;
    image_[i] = -1;
  }

  void record() {
    if (h_.flavor == Flavor::fragment) {
      for (std::size_t i = 0; i < order_.size(); ++i) {
        const int x = image_[i];
        int boundary = host_.kappa(x);
        for (auto inc : host_.p.graph.incidences(x))
          if (!used_[inc.neighbor]) ++boundary;
        if (boundary != h_.kappa(order_[i])) return;
      }
    }
    VertexSet s(image_.begin(), image_.end());
    std::sort(s.begin(), s.end());
    found_.insert(std::move(s));
  }

  const View& h_;
  const View& host_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::set<VertexSet> found_;
};

}  // namespace

std::int64_t count_induced(const Pattern& h, const Pattern& host, Flavor flavor) {
  View hv(h, flavor), gv(host, flavor);
  Embedder e(hv, gv);
  return static_cast<std::int64_t>(e.images().size());
}

std::int64_t count_induced(const Multigraph& h, const Multigraph& host, Flavor flavor) {
  return count_induced(as_pattern(h), as_pattern(host), flavor);
}

bool is_isomorphic_connected(const Pattern& h1, const Pattern& h2, Flavor flavor) {
  if (h1.size() != h2.size() || h1.graph.num_edges() != h2.graph.num_edges()) return false;
  return count_induced(h1, h2, flavor) > 0;
}

bool is_isomorphic_connected(const Multigraph& h1, const Multigraph& h2, Flavor flavor) {
  return is_isomorphic_connected(as_pattern(h1), as_pattern(h2), flavor);
}

}  // namespace bigcp
