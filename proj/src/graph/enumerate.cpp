#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "bigcp/errors.hpp"
#include "bigcp/patterns.hpp"

namespace bigcp {

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
  for (int v : s) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool shortlex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<VertexSet> enumerate_connected_sets(const Multigraph& g, int k, std::size_t max_sets) {
  if (k < 1) throw ContractError("invalid-input", "enumeration order must be at least 1");
  const int n = g.num_vertices();
  std::vector<VertexSet> out;
  std::vector<VertexSet> level;
  for (int v = 0; v < n; ++v) level.push_back({v});
  std::vector<char> inside(n, 0);
  for (int size = 1; size <= k && !level.empty(); ++size) {
    if (out.size() + level.size() > max_sets)
      throw ResourceError("connected-set enumeration exceeded the cap of " +
                          std::to_string(max_sets) + " sets at order " + std::to_string(size));
    out.insert(out.end(), level.begin(), level.end());
    if (size == k) break;
    std::unordered_set<VertexSet, VertexSetHash> next;
    for (const auto& s : level) {
      for (int v : s) inside[v] = 1;
      for (int v : s) {
        for (auto inc : g.incidences(v)) {
          const int w = inc.neighbor;
          if (inside[w]) continue;
          VertexSet t;
          t.reserve(s.size() + 1);
          auto pos = std::lower_bound(s.begin(), s.end(), w);
          t.insert(t.end(), s.begin(), pos);
          t.push_back(w);
          t.insert(t.end(), pos, s.end());
          next.insert(std::move(t));
        }
      }
      for (int v : s) inside[v] = 0;
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  return out;
}

double count_connected_bound(int max_degree, int k) {
  return std::pow(std::exp(1.0) * max_degree, k - 1) / 2.0;
}

PatternIndex::PatternIndex(const Multigraph& host, int k, Flavor flavor, std::size_t max_sets)
    : flavor_(flavor), k_(k) {
  sets_ = enumerate_connected_sets(host, k, max_sets);
  lookup_.reserve(sets_.size());
  std::vector<PatternKey> keys(sets_.size());
  std::unordered_map<PatternKey, int, PatternKeyHash> first_set;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    lookup_.emplace(sets_[i], static_cast<int>(i));
    keys[i] = canonical_key(induced_pattern(host, sets_[i]), flavor);
    first_set.emplace(keys[i], static_cast<int>(i));
  }
  // Order classes by (order, key); representative = first set in shortlex order.
  std::vector<std::pair<std::size_t, const PatternKey*>> order;
  order.reserve(first_set.size());
  for (const auto& [key, idx] : first_set) order.push_back({sets_[idx].size(), &key});
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : *a.second < *b.second;
  });
  std::unordered_map<PatternKey, int, PatternKeyHash> class_id;
  for (const auto& [size, key] : order) {
    class_id.emplace(*key, static_cast<int>(classes_.size()));
    classes_.push_back({*key, sets_[first_set.at(*key)], 0});
  }
  class_of_set_.resize(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const int c = class_id.at(keys[i]);
    class_of_set_[i] = c;
    ++classes_[c].count;
  }
}

int PatternIndex::class_of(const VertexSet& s) const {
  auto it = lookup_.find(s);
  return it == lookup_.end() ? -1 : class_of_set_[it->second];
}

std::vector<DictionaryEntry> pattern_dictionary(const Multigraph& g, int k, Flavor flavor) {
  return PatternIndex(g, k, flavor).classes();
}

}  // namespace bigcp
