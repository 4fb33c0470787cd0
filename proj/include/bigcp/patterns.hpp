#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigcp/graph.hpp"

namespace bigcp {

/// Sorted list of vertex ids.
using VertexSet = std::vector<int>;

/// Canonical code of an isomorphism class. Equal codes iff the patterns are
/// isomorphic in the flavor the code was computed for.
struct PatternKey {
  std::string code;

  friend bool operator==(const PatternKey&, const PatternKey&) = default;
  friend auto operator<=>(const PatternKey&, const PatternKey&) = default;
};

struct PatternKeyHash {
  std::size_t operator()(const PatternKey& k) const noexcept {
    return std::hash<std::string>{}(k.code);
  }
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

/// What the flavor looks at: vertex colors (vertex_colored, fragment), edge
/// colors (edge_colored), half-edge counts (fragment). Multiplicities of
/// parallel edges and loops always count.
PatternKey canonical_key(const Pattern& p, Flavor flavor);
PatternKey canonical_key(const Multigraph& g, Flavor flavor);

/// Size first, then lexicographic.
bool shortlex_less(const VertexSet& a, const VertexSet& b);

/// All S with |S| <= k and G[S] connected, in shortlex order. Grows level by
/// level by adding a neighbor to each set of the previous level. Throws
/// ResourceError once more than max_sets sets have been produced.
std::vector<VertexSet> enumerate_connected_sets(
    const Multigraph& g, int k,
    std::size_t max_sets = std::numeric_limits<std::size_t>::max());

/// (eΔ)^{k-1}/2.
double count_connected_bound(int max_degree, int k);

/// Backtracking isomorphism test; h1 must be connected.
bool is_isomorphic_connected(const Pattern& h1, const Pattern& h2, Flavor flavor);
bool is_isomorphic_connected(const Multigraph& h1, const Multigraph& h2, Flavor flavor);

/// Number of vertex sets S of the host with host[S] isomorphic to h. In the
/// fragment flavor the half-edge counts of host[S] (boundary edges plus the
/// host's own κ) must match as well. h must be connected.
std::int64_t count_induced(const Pattern& h, const Pattern& host, Flavor flavor);
std::int64_t count_induced(const Multigraph& h, const Multigraph& host, Flavor flavor);

struct DictionaryEntry {
  PatternKey key;
  VertexSet representative;
  std::int64_t count = 0;
};

/// Every connected set of order <= k of a host, grouped into isomorphism
/// classes. Classes are ordered by (order, key); sets keep shortlex order.
class PatternIndex {
 public:
  PatternIndex(const Multigraph& host, int k, Flavor flavor,
               std::size_t max_sets = std::numeric_limits<std::size_t>::max());

  Flavor flavor() const noexcept { return flavor_; }
  int max_order() const noexcept { return k_; }
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  const std::vector<DictionaryEntry>& classes() const noexcept { return classes_; }
  int class_of_set(std::size_t set_index) const { return class_of_set_[set_index]; }

  /// Class of a connected vertex set of the host, or -1 when the set is not
  /// connected or larger than max_order().
  int class_of(const VertexSet& s) const;

 private:
  Flavor flavor_;
  int k_;
  std::vector<VertexSet> sets_;
  std::vector<int> class_of_set_;
  std::vector<DictionaryEntry> classes_;
  std::unordered_map<VertexSet, int, VertexSetHash> lookup_;
};

std::vector<DictionaryEntry> pattern_dictionary(const Multigraph& g, int k, Flavor flavor);

}  // namespace bigcp
