// Canonical codes: colour refinement, then individualization of the first
// non-singleton cell, keeping the smallest leaf code. Automorphisms found at
// equal leaves prune sibling branches in the same orbit.
#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <tuple>

#include "bigcp/patterns.hpp"

namespace bigcp {

namespace {

struct Labeled {
  int n = 0;
  std::vector<std::vector<std::int64_t>> vertex_table;  // distinct vertex labels, sorted
  std::vector<std::vector<Color>> pair_table;           // distinct pair multisets, sorted
  std::vector<int> vlabel;                              // index into vertex_table
  std::vector<int> loop;                                // 0 = no loop, else 1 + pair index
  std::vector<std::vector<std::pair<int, int>>> nbrs;   // (w, 1 + pair index), w != v
};

Labeled label_pattern(const Pattern& p, Flavor flavor) {
  const Multigraph& g = p.graph;
  Labeled L;
  L.n = g.num_vertices();
  const bool use_vcolor = flavor == Flavor::vertex_colored || flavor == Flavor::fragment;
  const bool use_kappa = flavor == Flavor::fragment;
  const bool use_ecolor = flavor == Flavor::edge_colored;

  std::vector<std::vector<std::int64_t>> vl(L.n);
  for (int v = 0; v < L.n; ++v) {
    vl[v] = {use_vcolor ? g.vertex_color(v) : 0,
             use_kappa && !p.kappa.empty() ? p.kappa[v] : 0};
  }
  L.vertex_table = vl;
  std::sort(L.vertex_table.begin(), L.vertex_table.end());
  L.vertex_table.erase(std::unique(L.vertex_table.begin(), L.vertex_table.end()),
                       L.vertex_table.end());
  L.vlabel.resize(L.n);
  for (int v = 0; v < L.n; ++v) {
    L.vlabel[v] = static_cast<int>(
        std::lower_bound(L.vertex_table.begin(), L.vertex_table.end(), vl[v]) -
        L.vertex_table.begin());
  }

  std::map<std::pair<int, int>, std::vector<Color>> pairs;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    pairs[std::minmax(u, v)].push_back(use_ecolor ? g.edge_color(e) : 0);
  }
  for (auto& [key, ms] : pairs) std::sort(ms.begin(), ms.end());
  for (auto& [key, ms] : pairs) L.pair_table.push_back(ms);
  std::sort(L.pair_table.begin(), L.pair_table.end());
  L.pair_table.erase(std::unique(L.pair_table.begin(), L.pair_table.end()), L.pair_table.end());

  L.loop.assign(L.n, 0);
  L.nbrs.assign(L.n, {});
  for (auto& [key, ms] : pairs) {
    const int id = 1 + static_cast<int>(std::lower_bound(L.pair_table.begin(),
                                                         L.pair_table.end(), ms) -
                                        L.pair_table.begin());
    auto [u, v] = key;
    if (u == v) {
      L.loop[u] = id;
    } else {
      L.nbrs[u].push_back({v, id});
      L.nbrs[v].push_back({u, id});
    }
  }
  return L;
}

void append_int(std::string& out, std::int64_t x) {
  char buf[sizeof x];
  std::memcpy(buf, &x, sizeof x);
  out.append(buf, sizeof x);
}

class Canonizer {
 public:
  explicit Canonizer(Labeled L) : L_(std::move(L)) {
    header_.clear();
    append_int(header_, L_.n);
    append_int(header_, static_cast<std::int64_t>(L_.vertex_table.size()));
    for (const auto& t : L_.vertex_table)
      for (auto x : t) append_int(header_, x);
    append_int(header_, static_cast<std::int64_t>(L_.pair_table.size()));
    for (const auto& ms : L_.pair_table) {
      append_int(header_, static_cast<std::int64_t>(ms.size()));
      for (auto c : ms) append_int(header_, c);
    }
  }

  std::string run() {
    const int n = L_.n;
    if (n == 0) return header_;
    std::vector<int> cells(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int v) { return std::make_pair(L_.vlabel[v], L_.loop[v]); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    for (int i = 0; i < n; ++i) {
      const int v = order[i];
      cells[v] = (i > 0 && key(order[i - 1]) == key(v)) ? cells[order[i - 1]] : i;
    }
    std::vector<int> prefix;
    search(cells, prefix);
    return best_code_;
  }

 private:
  void refine(std::vector<int>& cells) const {
    const int n = L_.n;
    int distinct = count_cells(cells);
    std::vector<std::vector<std::int64_t>> sig(n);
    std::vector<int> order(n);
    while (distinct < n) {
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(cells[v]);
        std::vector<std::int64_t> nb;
        nb.reserve(L_.nbrs[v].size());
        for (auto [w, pid] : L_.nbrs[v])
          nb.push_back(static_cast<std::int64_t>(cells[w]) * (L_.pair_table.size() + 1) + pid);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return sig[a] != sig[b] ? sig[a] < sig[b] : a < b;
      });
      std::vector<int> next(n);
      for (int i = 0; i < n; ++i) {
        const int v = order[i];
        next[v] = (i > 0 && sig[order[i - 1]] == sig[v]) ? next[order[i - 1]] : i;
      }
      const int nd = count_cells(next);
      cells = std::move(next);
      if (nd == distinct) break;
      distinct = nd;
    }
  }

  static int count_cells(const std::vector<int>& cells) {
    std::vector<int> c = cells;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::string leaf_code(const std::vector<int>& lab) const {
    const int n = L_.n;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[lab[v]] = v;
    std::string code = header_;
    for (int i = 0; i < n; ++i) {
      append_int(code, L_.vlabel[inv[i]]);
      append_int(code, L_.loop[inv[i]]);
    }
    std::vector<std::tuple<int, int, int>> es;
    for (int v = 0; v < n; ++v)
      for (auto [w, pid] : L_.nbrs[v])
        if (lab[v] < lab[w]) es.emplace_back(lab[v], lab[w], pid);
    std::sort(es.begin(), es.end());
    append_int(code, static_cast<std::int64_t>(es.size()));
    for (auto [a, b, pid] : es) {
      append_int(code, a);
      append_int(code, b);
      append_int(code, pid);
    }
    return code;
  }

  void search(std::vector<int> cells, std::vector<int>& prefix) {
    refine(cells);
    const int n = L_.n;
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++count[cells[v]];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      std::string code = leaf_code(cells);
      if (!have_best_ || code < best_code_) {
        best_code_ = std::move(code);
        best_lab_ = cells;
        have_best_ = true;
      } else if (code == best_code_) {
        std::vector<int> inv_best(n);
        for (int v = 0; v < n; ++v) inv_best[best_lab_[v]] = v;
        std::vector<int> gamma(n);
        for (int v = 0; v < n; ++v) gamma[v] = inv_best[cells[v]];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
      if (cells[v] == target) candidates.push_back(v);
    std::vector<int> explored;
    for (int v : candidates) {
      if (in_explored_orbit(v, explored, prefix)) continue;
      explored.push_back(v);
      std::vector<int> next = cells;
      for (int w : candidates) next[w] = target + 1;
      next[v] = target;
      prefix.push_back(v);
      search(std::move(next), prefix);
      prefix.pop_back();
    }
  }

  // True when some automorphism fixing the prefix pointwise maps v into the
  // orbit of an already explored sibling.
  bool in_explored_orbit(int v, const std::vector<int>& explored,
                         const std::vector<int>& prefix) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    const int n = L_.n;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return g[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) parent[find(x)] = find(g[x]);
    }
    const int r = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == r; });
  }

  Labeled L_;
  std::string header_;
  std::string best_code_;
  std::vector<int> best_lab_;
  bool have_best_ = false;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

PatternKey canonical_key(const Pattern& p, Flavor flavor) {
  Canonizer c(label_pattern(p, flavor));
  return PatternKey{c.run()};
}

PatternKey canonical_key(const Multigraph& g, Flavor flavor) {
  return canonical_key(as_pattern(g), flavor);
}

}  // namespace bigcp
