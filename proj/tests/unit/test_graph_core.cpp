#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "bigcp/errors.hpp"
#include "bigcp/graph.hpp"
#include "bigcp/io.hpp"
#include "bigcp/patterns.hpp"
#include "testing.hpp"

using namespace bigcp;
using namespace bigcp::testing;

namespace {

Multigraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Multigraph(n, e);
}

Multigraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Multigraph(n, e);
}

int vertex_label(const Pattern& p, int v, Flavor f, int which) {
  if (which == 0) return (f == Flavor::vertex_colored || f == Flavor::fragment) ? static_cast<int>(p.graph.vertex_color(v)) : 0;
  return f == Flavor::fragment ? p.kappa[v] : 0;
}

// Permutation search over all n! maps.
bool brute_isomorphic(const Pattern& a, const Pattern& b, Flavor f) {
  const int n = a.size();
  if (n != b.size() || a.graph.num_edges() != b.graph.num_edges()) return false;
  auto edge_list = [&](const Pattern& p, const std::vector<int>& perm) {
    std::vector<std::tuple<int, int, Color>> out;
    for (int e = 0; e < p.graph.num_edges(); ++e) {
      int u = perm[p.graph.edge(e).u], v = perm[p.graph.edge(e).v];
      if (u > v) std::swap(u, v);
      out.emplace_back(u, v, f == Flavor::edge_colored ? p.graph.edge_color(e) : 0);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_list(b, id);
  std::vector<int> perm = id;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int w = 0; w < 2; ++w)
        ok = ok && vertex_label(a, v, f, w) == vertex_label(b, perm[v], f, w);
    if (ok && edge_list(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Pattern random_pattern(Rng& rng, int n, Flavor f) {
  Multigraph g = random_graph(rng, n, 4, uniform_int(rng, 0, 2 * n), true, f != Flavor::plain);
  std::vector<Color> vc(n), ec(g.num_edges());
  for (auto& c : vc) c = uniform_int(rng, 0, 1);
  for (auto& c : ec) c = uniform_int(rng, 0, 1);
  std::vector<int> kappa(n);
  for (auto& k : kappa) k = uniform_int(rng, 0, 1);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Multigraph colored(n, edges, f == Flavor::vertex_colored || f == Flavor::fragment ? vc : std::vector<Color>{},
                     f == Flavor::edge_colored ? ec : std::vector<Color>{});
  std::vector<int> origin(n);
  std::iota(origin.begin(), origin.end(), 0);
  return Pattern{colored, f == Flavor::fragment ? kappa : std::vector<int>(n, 0), origin};
}

Pattern relabel_pattern(const Pattern& p, const std::vector<int>& perm) {
  std::vector<int> kappa(p.size());
  for (int v = 0; v < p.size(); ++v) kappa[perm[v]] = p.kappa[v];
  return Pattern{relabel(p.graph, perm), kappa, p.origin};
}

}  // namespace

TEST_CASE("max_degree counts loops twice") {
  CHECK(max_degree(cycle(3)) == 2);
  CHECK(max_degree(Multigraph(1, {{0, 0}})) == 2);
  CHECK(max_degree(path(4)) == 2);
  CHECK(max_degree(Multigraph(3)) == 0);
}

TEST_CASE("multigraph rejects out-of-range endpoints and partial color maps") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), ContractError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 1}}, {1}), ContractError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 1}}, {}, {1, 2}), ContractError);
}

TEST_CASE("graph file parsing") {
  const Multigraph g = parse_graph("# triangle\np 3\ne 0 1\ne 1 2\n\ne 2 0\nc 1 7\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.vertex_color(1) == 7);
  CHECK(g.vertex_color(0) == 0);
  const Multigraph h = parse_graph(format_graph(g));
  CHECK(h.num_edges() == 3);
  CHECK(h.vertex_color(1) == 7);

  const Multigraph m = parse_graph("p 2\ne 0 1\ne 0 1\ne 1 1\n");
  CHECK(m.has_parallel_edges());
  CHECK(m.has_loops());
  CHECK(m.degree(1) == 4);

  CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2\ne 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2\nx 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2\ne 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p two\n"), ParseError);
}

TEST_CASE("components, unions and line graphs") {
  const Multigraph u = disjoint_union(cycle(3), path(2));
  CHECK(u.num_vertices() == 5);
  CHECK(connected_components(u).size() == 2);
  CHECK_FALSE(is_connected(u));
  CHECK(is_connected(cycle(4)));

  const Multigraph l = line_graph(path(4));
  CHECK(l.num_vertices() == 3);
  CHECK(l.num_edges() == 2);
  CHECK(line_graph(cycle(3)).num_edges() == 3);
  // Star K_{1,3} has a triangle as line graph.
  CHECK(line_graph(Multigraph(4, {{0, 1}, {0, 2}, {0, 3}})).num_edges() == 3);
}

TEST_CASE("fragments validate the degree bound") {
  const Multigraph edge(2, {{0, 1}}, {0, 0});
  CHECK_NOTHROW(Fragment(edge, {1, 0}, 2));
  CHECK_THROWS_AS(Fragment(edge, {2, 0}, 2), ContractError);
  CHECK(Fragment(edge, {1, 2}, 3).num_edges_with_half_edges() == 4);
}

TEST_CASE("induced patterns carry boundary counts") {
  const Pattern p = induced_pattern(path(4), std::vector<int>{1, 2});
  CHECK(p.size() == 2);
  CHECK(p.graph.num_edges() == 1);
  CHECK(p.kappa == std::vector<int>{1, 1});
  CHECK(p.origin == std::vector<int>{1, 2});
}

TEST_CASE("enumerate_connected_sets examples") {
  CHECK(enumerate_connected_sets(cycle(3), 2).size() == 6);
  const auto p3 = enumerate_connected_sets(path(3), 3);
  const std::vector<VertexSet> expect = {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}};
  CHECK(p3 == expect);
  CHECK(enumerate_connected_sets(cycle(5), 1).size() == 5);
  CHECK_THROWS_AS(enumerate_connected_sets(cycle(5), 0), ContractError);
  CHECK_THROWS_AS(enumerate_connected_sets(cycle(8), 8, 10), ResourceError);
}

TEST_CASE("enumerate_connected_sets equals the brute-force filter") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 1, 12);
    const int delta = uniform_int(rng, 1, 4);
    const Multigraph g = random_graph(rng, n, delta, uniform_int(rng, 0, 2 * n));
    const int k = uniform_int(rng, 1, 5);
    CHECK(enumerate_connected_sets(g, k) == brute_connected_sets(g, k));
  }
}

TEST_CASE("count_connected_bound") {
  CHECK(count_connected_bound(3, 1) == doctest::Approx(0.5));
  CHECK(count_connected_bound(3, 3) == doctest::Approx(std::pow(3 * std::exp(1.0), 2) / 2));
  CHECK(count_connected_bound(3, 3) == doctest::Approx(33.25).epsilon(1e-3));
}

TEST_CASE("per-vertex connected counts stay under the bound for orders two and up") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform_int(rng, 2, 6);
    const Multigraph g = random_graph(rng, n, 3, 3 * n);
    const int delta = max_degree(g);
    if (delta == 0) continue;
    std::map<std::pair<int, int>, int> count;
    for (const auto& s : enumerate_connected_sets(g, 3))
      for (int v : s) ++count[{v, static_cast<int>(s.size())}];
    for (const auto& [key, c] : count) {
      if (key.second == 1) {
        CHECK(c == 1);  // a single vertex: one set, above (eΔ)^0/2 = 1/2
      } else {
        CHECK(c <= count_connected_bound(delta, key.second));
      }
    }
  }
}

TEST_CASE("is_isomorphic_connected examples") {
  CHECK(is_isomorphic_connected(path(3), Multigraph(3, {{1, 0}, {0, 2}}), Flavor::plain));
  const Multigraph a(3, {{0, 1}, {1, 2}}, {1, 2, 1});
  const Multigraph b(3, {{0, 1}, {1, 2}}, {1, 1, 2});
  CHECK_FALSE(is_isomorphic_connected(a, b, Flavor::vertex_colored));
  CHECK(is_isomorphic_connected(a, b, Flavor::plain));
  const Multigraph e(2, {{0, 1}}, {0, 0});
  const Pattern f1{e, {1, 0}, {0, 1}};
  const Pattern f2{e, {0, 1}, {0, 1}};
  const Pattern f3{e, {1, 1}, {0, 1}};
  CHECK(is_isomorphic_connected(f1, f2, Flavor::fragment));
  CHECK_FALSE(is_isomorphic_connected(f1, f3, Flavor::fragment));
}

TEST_CASE("count_induced examples and additivity") {
  const Multigraph k1(1), k2(2, {{0, 1}});
  CHECK(count_induced(k2, cycle(3), Flavor::plain) == 3);
  CHECK(count_induced(path(3), path(4), Flavor::plain) == 2);
  CHECK(count_induced(k1, cycle(7), Flavor::plain) == 7);
  CHECK(count_induced(path(3), cycle(3), Flavor::plain) == 0);

  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Multigraph g1 = random_graph(rng, uniform_int(rng, 1, 8), 3, 10);
    const Multigraph g2 = random_graph(rng, uniform_int(rng, 1, 8), 3, 10);
    for (const auto& h : {k1, k2, path(3), cycle(3), path(4)}) {
      CHECK(count_induced(h, disjoint_union(g1, g2), Flavor::plain) ==
            count_induced(h, g1, Flavor::plain) + count_induced(h, g2, Flavor::plain));
    }
  }
}

TEST_CASE("count_induced agrees with the pattern dictionary") {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Multigraph g = random_graph(rng, uniform_int(rng, 2, 9), 3, 12);
    for (const auto& entry : pattern_dictionary(g, 4, Flavor::plain)) {
      const Pattern rep = induced_pattern(g, entry.representative);
      CHECK(count_induced(rep.graph, g, Flavor::plain) == entry.count);
    }
  }
}

TEST_CASE("pattern_dictionary examples") {
  const auto c3 = pattern_dictionary(cycle(3), 2, Flavor::plain);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].count == 3);
  CHECK(c3[1].count == 3);
  CHECK(c3[1].representative.size() == 2);

  const auto p4 = pattern_dictionary(path(4), 3, Flavor::plain);
  REQUIRE(p4.size() == 3);
  CHECK(p4[0].count == 4);
  CHECK(p4[1].count == 3);
  CHECK(p4[2].count == 2);

  const auto colored = pattern_dictionary(Multigraph(2, {{0, 1}}, {1, 2}), 2, Flavor::vertex_colored);
  CHECK(colored.size() == 3);
}

TEST_CASE("fragment dictionary counts outside neighbours") {
  const Multigraph g = path(3).with_vertex_colors({0, 0, 0});
  const auto dict = pattern_dictionary(g, 1, Flavor::fragment);
  // Ends have one outside neighbour, the middle two.
  REQUIRE(dict.size() == 2);
  CHECK(dict[0].count + dict[1].count == 3);
}

TEST_CASE("canonical keys coincide with brute-force isomorphism") {
  Rng rng(15);
  for (Flavor f : {Flavor::plain, Flavor::vertex_colored, Flavor::edge_colored, Flavor::fragment}) {
    CAPTURE(to_string(f));
    for (int trial = 0; trial < 300; ++trial) {
      const int n = uniform_int(rng, 1, 5);
      const Pattern a = random_pattern(rng, n, f);
      const Pattern b = trial % 2 == 0 ? relabel_pattern(a, random_permutation(rng, n))
                                       : random_pattern(rng, n, f);
      const bool iso = brute_isomorphic(a, b, f);
      CHECK((canonical_key(a, f) == canonical_key(b, f)) == iso);
    }
  }
}

TEST_CASE("canonical keys agree with the isomorphism tester on connected graphs up to ten vertices") {
  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 10);
    const Multigraph g = random_graph(rng, n, 3, 2 * n);
    if (!is_connected(g)) continue;
    const Multigraph same = relabel(g, random_permutation(rng, n));
    CHECK(canonical_key(g, Flavor::plain) == canonical_key(same, Flavor::plain));
    CHECK(is_isomorphic_connected(g, same, Flavor::plain));
    const Multigraph other = random_graph(rng, n, 3, 2 * n);
    if (!is_connected(other)) continue;
    CHECK((canonical_key(g, Flavor::plain) == canonical_key(other, Flavor::plain)) ==
          is_isomorphic_connected(g, other, Flavor::plain));
  }
}

TEST_CASE("connected catalog of subcubic graphs") {
  const auto catalog = connected_catalog(7, 3);
  std::vector<int> by_order(8, 0);
  for (const auto& g : catalog) ++by_order[g.num_vertices()];
  // Connected graphs with maximum degree at most 3, by order.
  CHECK(by_order == std::vector<int>{0, 1, 1, 2, 6, 10, 29, 64});
}
