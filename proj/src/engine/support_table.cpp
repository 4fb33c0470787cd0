#include <algorithm>
#include <bit>
#include <unordered_map>

#include "bigcp/engine.hpp"
#include "bigcp/errors.hpp"

namespace bigcp {

Complex BigcpModel::weight(const Pattern& h, int i) const {
  if (i < 0) return {};
  const auto w = weights(h, i);
  return i < static_cast<int>(w.size()) ? w[i] : Complex{};
}

PowerSums SupportTable::power_sums() const {
  PowerSums out;
  out.p.assign(m_, Complex{});
  const auto& classes = index_.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const double count = static_cast<double>(classes[c].count);
    for (int k = 1; k <= m_; ++k) out.p[k - 1] += count * a_[c][k];
  }
  return out;
}

namespace {

using Mask = std::uint64_t;

/// Polynomial in y stored from its lowest nonzero index.
struct Poly {
  int lo = 0;
  std::vector<Complex> c;

  bool zero() const { return c.empty(); }
};

Poly trim(const std::vector<Complex>& v) {
  int lo = 0, hi = static_cast<int>(v.size()) - 1;
  while (lo <= hi && v[lo] == Complex{}) ++lo;
  while (hi >= lo && v[hi] == Complex{}) --hi;
  if (lo > hi) return {};
  return Poly{lo, std::vector<Complex>(v.begin() + lo, v.begin() + hi + 1)};
}

Poly multiply(const Poly& a, const Poly& b, int m) {
  if (a.zero() || b.zero() || a.lo + b.lo > m) return {};
  const int lo = a.lo + b.lo;
  const int hi = std::min<int>(m, a.lo + static_cast<int>(a.c.size()) - 1 + b.lo +
                                      static_cast<int>(b.c.size()) - 1);
  std::vector<Complex> out(hi - lo + 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      const int idx = static_cast<int>(i + j);
      if (lo + idx > hi) break;
      out[idx] += a.c[i] * b.c[j];
    }
  }
  return Poly{lo, std::move(out)};
}

/// acc[i] += p[i] for dense acc of length m+1.
void add_into(std::vector<Complex>& acc, const Poly& p) {
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    const std::size_t idx = p.lo + j;
    if (idx < acc.size()) acc[idx] += p.c[j];
  }
}

/// acc[i + j] += f[i] * a[j] for i + j <= m.
void add_product(std::vector<Complex>& acc, const std::vector<Complex>& f,
                 const std::vector<Complex>& a) {
  const int m = static_cast<int>(acc.size()) - 1;
  for (int i = 1; i <= m; ++i) {
    if (f[i] == Complex{}) continue;
    for (int j = 1; i + j <= m; ++j) acc[i + j] += f[i] * a[j];
  }
}

// ESU enumeration: each connected set is produced once, from its smallest vertex.
template <class F>
void esu_extend(const std::vector<Mask>& adj, Mask sub, Mask closed, Mask ext, Mask allowed,
                F& fn) {
  fn(sub);
  while (ext) {
    const int w = std::countr_zero(ext);
    ext &= ext - 1;
    const Mask exclusive = adj[w] & allowed & ~closed;
    esu_extend(adj, sub | (Mask{1} << w), closed | adj[w], ext | exclusive, allowed, fn);
  }
}

/// Calls fn(mask) once for every nonempty connected vertex subset.
template <class F>
void for_each_connected_subset(const std::vector<Mask>& adj, F fn) {
  const int h = static_cast<int>(adj.size());
  for (int v = 0; v < h; ++v) {
    const Mask self = Mask{1} << v;
    const Mask allowed = v == 63 ? Mask{0} : ~((Mask{2} << v) - 1);
    esu_extend(adj, self, adj[v] | self, adj[v] & allowed, allowed, fn);
  }
}

class TableBuilder {
 public:
  TableBuilder(const Multigraph& host, const BigcpModel& model, int m, const EngineLimits& limits)
      : host_(host),
        model_(model),
        m_(m),
        limits_(limits),
        index_(host, std::min(model.alpha() * m, std::max(host.num_vertices(), 1)), model.flavor(),
               limits.max_connected_sets) {}

  SupportTable build() {
    const auto& classes = index_.classes();
    a_.assign(classes.size(), std::vector<Complex>(m_ + 1));
    class_weight_.resize(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) process(static_cast<int>(c));
    return SupportTable(std::move(index_), std::move(a_), m_);
  }

 private:
  struct Local {
    int cls;
    VertexSet rep;
    Pattern pattern;
    std::vector<Mask> adj;
    Mask full;
    std::unordered_map<Mask, int> class_cache;
  };

  int class_of_mask(Local& L, Mask s) {
    if (s == L.full) return L.cls;
    auto it = L.class_cache.find(s);
    if (it != L.class_cache.end()) return it->second;
    VertexSet set;
    for (Mask r = s; r; r &= r - 1) set.push_back(L.rep[std::countr_zero(r)]);
    const int c = index_.class_of(set);
    if (c < 0) throw std::logic_error("connected subpattern missing from the dictionary");
    L.class_cache.emplace(s, c);
    return c;
  }

  Poly support_weight(Local& L, Mask s) {
    Poly acc{0, {Complex(1.0)}};
    Mask rest = s;
    while (rest) {
      Mask comp = rest & (~rest + 1);
      Mask frontier = comp;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask nb = L.adj[v] & s & ~comp;
        comp |= nb;
        frontier |= nb;
      }
      rest &= ~comp;
      acc = multiply(acc, class_weight_[class_of_mask(L, comp)], m_);
      if (acc.zero()) break;
    }
    return acc;
  }

  void charge(std::uint64_t work) {
    work_ += work;
    if (work_ > limits_.max_pair_work)
      throw ResourceError("support-table construction exceeded the work cap of " +
                          std::to_string(limits_.max_pair_work) + " pattern pairs");
  }

  void process(int cls) {
    const auto& entry = index_.classes()[cls];
    const int h = static_cast<int>(entry.representative.size());
    if (h > 64) throw ResourceError("patterns above 64 vertices are not supported");
    Local L{cls, entry.representative, induced_pattern(host_, entry.representative), {}, 0, {}};
    L.adj.assign(h, 0);
    for (int i = 0; i < h; ++i) {
      for (auto inc : L.pattern.graph.incidences(i))
        if (inc.neighbor != i) L.adj[i] |= Mask{1} << inc.neighbor;
    }
    L.full = h == 64 ? ~Mask{0} : (Mask{1} << h) - 1;
    class_weight_[cls] = trim(model_.weights(L.pattern, m_));

    std::vector<Complex> E(m_ + 1), conv(m_ + 1);
    if (limits_.force_generic) {
      generic_supports(L, E, conv);
    } else if (model_.weight_vanishes_on_edges()) {
      independent_supports(L, E, conv);
    } else if (h <= 20 && (std::uint64_t{1} << h) * (m_ + 1) <= (std::uint64_t{1} << 22)) {
      dense_supports(L, E, conv);
    } else {
      generic_supports(L, E, conv);
    }

    auto& a = a_[cls];
    const int alpha = model_.alpha();
    for (int k = 1; k <= m_; ++k) {
      if (h > alpha * k) continue;
      Complex v = -static_cast<double>(k) * coefficient(class_weight_[cls], k) - conv[k];
      for (int i = 1; i < k; ++i) v -= E[i] * a[k - i];
      a[k] = v;
    }
  }

  static Complex coefficient(const Poly& p, int i) {
    const int j = i - p.lo;
    return (j >= 0 && j < static_cast<int>(p.c.size())) ? p.c[j] : Complex{};
  }

  // Supports are independent sets; W_S is the product of vertex weights.
  void independent_supports(Local& L, std::vector<Complex>& E, std::vector<Complex>& conv) {
    const int h = static_cast<int>(L.adj.size());
    std::vector<Poly> single(h);
    for (int v = 0; v < h; ++v) single[v] = class_weight_[class_of_mask(L, Mask{1} << v)];

    // Σ over independent S with X ⊆ S ⊆ X ∪ cand, S nonempty.
    auto superset_sum = [&](Mask X, Mask cand, const Poly& wx) {
      std::vector<Complex> acc(m_ + 1);
      std::uint64_t visited = 0;
      auto rec = [&](auto& self, Mask c, const Poly& w, bool nonempty) -> void {
        if (w.zero()) return;
        ++visited;
        if (!c) {
          if (nonempty) add_into(acc, w);
          return;
        }
        const int v = std::countr_zero(c);
        const Mask rest = c & (c - 1);
        self(self, rest, w, nonempty);
        self(self, rest & ~L.adj[v], multiply(w, single[v], m_), true);
      };
      rec(rec, cand, wx, X != 0);
      charge(visited);
      return acc;
    };

    Poly one{0, {Complex(1.0)}};
    E = superset_sum(0, L.full, one);
    for_each_connected_subset(L.adj, [&](Mask T) {
      if (T == L.full) return;
      const Mask X = L.full & ~T;
      Mask nx = 0;
      Poly wx = one;
      for (Mask r = X; r; r &= r - 1) {
        const int v = std::countr_zero(r);
        if (L.adj[v] & X) return;
        nx |= L.adj[v];
        wx = multiply(wx, single[v], m_);
      }
      const auto F = superset_sum(X, T & ~nx, wx);
      add_product(conv, F, a_[class_of_mask(L, T)]);
    });
  }

  // All 2^h supports tabulated, then summed over supersets.
  void dense_supports(Local& L, std::vector<Complex>& E, std::vector<Complex>& conv) {
    const int h = static_cast<int>(L.adj.size());
    const std::size_t size = std::size_t{1} << h;
    const int len = m_ + 1;
    charge(static_cast<std::uint64_t>(size) * h);
    std::vector<Complex> F(size * len);
    for (Mask s = 1; s < size; ++s) {
      const Poly w = support_weight(L, s);
      for (std::size_t j = 0; j < w.c.size(); ++j) {
        const std::size_t idx = w.lo + j;
        if (idx < static_cast<std::size_t>(len)) F[s * len + idx] = w.c[j];
      }
    }
    for (int b = 0; b < h; ++b) {
      const Mask bit = Mask{1} << b;
      for (Mask s = 0; s < size; ++s) {
        if (s & bit) continue;
        for (int i = 0; i < len; ++i) F[s * len + i] += F[(s | bit) * len + i];
      }
    }
    std::copy(F.begin(), F.begin() + len, E.begin());
    for_each_connected_subset(L.adj, [&](Mask T) {
      if (T == L.full) return;
      const Mask X = L.full & ~T;
      std::vector<Complex> f(F.begin() + X * len, F.begin() + (X + 1) * len);
      add_product(conv, f, a_[class_of_mask(L, T)]);
    });
  }

  // Any model, any size: visit every S ⊇ V∖T explicitly.
  void generic_supports(Local& L, std::vector<Complex>& E, std::vector<Complex>& conv) {
    auto superset_sum = [&](Mask X, Mask free) {
      std::vector<Complex> acc(m_ + 1);
      charge(std::uint64_t{1} << std::popcount(free));
      for (Mask y = free;; y = (y - 1) & free) {
        const Mask s = X | y;
        if (s) add_into(acc, support_weight(L, s));
        if (!y) break;
      }
      return acc;
    };
    E = superset_sum(0, L.full);
    for_each_connected_subset(L.adj, [&](Mask T) {
      if (T == L.full) return;
      const auto F = superset_sum(L.full & ~T, T);
      add_product(conv, F, a_[class_of_mask(L, T)]);
    });
  }

  const Multigraph& host_;
  const BigcpModel& model_;
  int m_;
  EngineLimits limits_;
  PatternIndex index_;
  std::vector<std::vector<Complex>> a_;
  std::vector<Poly> class_weight_;
  std::uint64_t work_ = 0;
};

}  // namespace

SupportTable compute_support_table(const Multigraph& host, const BigcpModel& model, int m,
                                   const EngineLimits& limits) {
  if (m < 0) throw ContractError("invalid-input", "negative power-sum count");
  if (m == 0 || host.num_vertices() == 0) {
    PatternIndex empty(Multigraph(0), 1, model.flavor());
    return SupportTable(std::move(empty), {}, m);
  }
  return TableBuilder(host, model, m, limits).build();
}

PowerSums compute_power_sums(const Multigraph& host, const BigcpModel& model, int m,
                             const EngineLimits& limits) {
  return compute_support_table(host, model, m, limits).power_sums();
}

}  // namespace bigcp
