#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "specq/canonical.hpp"
#include "specq/graph.hpp"
#include "specq/graph_io.hpp"
#include "specq/structure.hpp"

using namespace specq;

TEST_CASE("family constructions have the right shape") {
  CHECK_EQ(Graph::complete(5).size(), 10);
  CHECK_EQ(Graph::complete(1).size(), 0);
  CHECK_EQ(Graph::path(6).size(), 5);
  CHECK_EQ(Graph::cycle(5).size(), 5);
  CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
  CHECK_EQ(Graph::star(6).degree(0), 5);
  CHECK_EQ(Graph::star(6).degree_sequence(), std::vector<int>{5, 1, 1, 1, 1, 1});
  CHECK_EQ(Graph::complete_bipartite(2, 3).size(), 6);
  CHECK_EQ(Graph::complete_bipartite(2, 3).degree_sequence(), std::vector<int>{3, 3, 2, 2, 2});
  CHECK_EQ(Graph::complete_multipartite({2, 2, 2}).size(), 12);
  CHECK_EQ(Graph::complete_multipartite({2, 2, 2}).degree_sequence(),
           std::vector<int>(6, 4));
  CHECK_EQ(Graph::complete_minus_edge(4).size(), 5);
  CHECK_FALSE(Graph::complete_minus_edge(4).has_edge(0, 1));

  Graph ds = Graph::double_star(3, 2);  // 7 vertices, centers 0 and 1
  CHECK_EQ(ds.order(), 7);
  CHECK_EQ(ds.size(), 6);
  CHECK(is_tree(ds));
  CHECK_EQ(ds.degree(0), 4);
  CHECK_EQ(ds.degree(1), 3);

  Graph dsl = Graph::double_starlike(2, 4, 3);
  CHECK_EQ(dsl.order(), 9);
  CHECK(is_tree(dsl));
  CHECK_EQ(dsl.degree(0), 3);
  CHECK_EQ(dsl.degree(3), 4);
}

TEST_CASE("edge operations and views") {
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  CHECK(g.has_edge(2, 0));
  CHECK_EQ(g.size(), 2);
  CHECK_EQ(g.edges(), std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});
  g.remove_edge(0, 2);
  CHECK_EQ(g.size(), 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::out_of_range);

  Graph c5 = Graph::cycle(5);
  CHECK_EQ(c5.complement().size(), 5);
  CHECK(are_isomorphic(c5.complement(), c5));
  CHECK_EQ(Graph::complete(4).complement(), Graph(4));

  Graph u = Graph::cycle(3).disjoint_union(Graph::complete(2));
  CHECK_EQ(u.order(), 5);
  CHECK_EQ(u.size(), 4);
  CHECK(u.has_edge(3, 4));
  CHECK_FALSE(u.has_edge(2, 3));

  Graph j = Graph(2).join(Graph(3));  // K_{2,3}
  CHECK(are_isomorphic(j, Graph::complete_bipartite(2, 3)));

  CHECK_EQ(Graph::cycle(4).without_vertex(0).size(), 2);
  CHECK_EQ(Graph::complete(5).induced(0b10101u), Graph::complete(3));

  std::vector<int> rot{1, 2, 3, 4, 0};
  CHECK_EQ(Graph::cycle(5).relabeled(rot), Graph::cycle(5));
}

TEST_CASE("order caps") {
  CHECK_THROWS_AS(Graph::complete(construction_cap() + 1), CapExceeded);
  int old = construction_cap();
  set_construction_cap(14);
  CHECK_EQ(Graph::complete(14).order(), 14);
  set_construction_cap(old);
  CHECK_THROWS_AS(set_construction_cap(0), std::invalid_argument);
  CHECK_THROWS_AS(set_construction_cap(33), std::invalid_argument);
}

TEST_CASE("graph6 reference strings") {
  CHECK_EQ(to_graph6(Graph::complete(5)), "D~{");
  CHECK_EQ(to_graph6(Graph::complete(2)), "A_");
  CHECK_EQ(to_graph6(Graph(5)), "D??");
  CHECK_EQ(to_graph6(Graph(0)), "?");
  CHECK_EQ(to_graph6(Graph(1)), "@");
  CHECK_EQ(from_graph6("D~{"), Graph::complete(5));
  CHECK_EQ(from_graph6(">>graph6<<A_"), Graph::complete(2));
  CHECK_EQ(from_graph6("A_\n"), Graph::complete(2));
  CHECK_THROWS_AS(from_graph6("D"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
}

TEST_CASE("graph6 roundtrip on assorted graphs") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng() % 11);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    CHECK_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST_CASE("sparse6 reference string and roundtrip") {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(5, 6);
  CHECK_EQ(to_sparse6(g), ":Fa@x^");
  CHECK_EQ(from_sparse6(":Fa@x^"), g);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) h.add_edge(u, v);
    CHECK_EQ(from_sparse6(to_sparse6(h)), h);
    CHECK_EQ(parse_graph(to_sparse6(h)), h);
    CHECK_EQ(parse_graph(to_graph6(h)), h);
  }
  // power-of-two order needs careful padding
  for (int n : {2, 4, 8}) {
    Graph p = Graph::path(n);
    CHECK_EQ(from_sparse6(to_sparse6(p)), p);
    Graph e(n);
    if (n >= 2) e.add_edge(n - 2, n - 1);
    CHECK_EQ(from_sparse6(to_sparse6(e)), e);
  }
}

TEST_CASE("structure analysis") {
  StructureFacts f = analyze(Graph::cycle(5).disjoint_union(Graph::path(3)).disjoint_union(Graph(1)));
  CHECK_EQ(f.components, 3);
  CHECK_FALSE(f.connected);
  CHECK_FALSE(f.bipartite);          // C5 is odd
  CHECK_EQ(f.bipartite_components, 2);
  CHECK_FALSE(f.forest);

  CHECK(analyze(Graph::path(7)).tree);
  CHECK(analyze(Graph::cycle(6)).unicyclic);
  CHECK(analyze(Graph::cycle(6)).bipartite);
  CHECK_FALSE(analyze(Graph::cycle(6)).comps[0].odd_unicyclic);
  CHECK(analyze(Graph::cycle(7)).comps[0].odd_unicyclic);
  CHECK(analyze(Graph::complete_bipartite(3, 3)).comps[0].balanced_bipartite);
  CHECK_FALSE(analyze(Graph::complete_bipartite(2, 3)).comps[0].balanced_bipartite);
  CHECK(analyze(Graph(1)).bipartite);
  CHECK(analyze(Graph(1)).tree);
  CHECK(is_connected(Graph::complete(4)));
  CHECK_FALSE(is_connected(Graph(3)));
  CHECK(is_bipartite(Graph::star(9)));
}

TEST_CASE("spanning tree counts") {
  CHECK_EQ(spanning_tree_count(Graph::complete(4)), BigInt(16));
  CHECK_EQ(spanning_tree_count(Graph::complete(6)), BigInt(1296));  // 6^4
  CHECK_EQ(spanning_tree_count(Graph::cycle(5)), BigInt(5));
  CHECK_EQ(spanning_tree_count(Graph::complete_bipartite(2, 3)), BigInt(12));
  CHECK_EQ(spanning_tree_count(Graph::path(9)), BigInt(1));
  CHECK_EQ(spanning_tree_count(Graph(2)), BigInt(0));
  CHECK_EQ(spanning_tree_count(Graph(1)), BigInt(1));
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(2024);
  std::vector<Graph> pool{Graph::cycle(6),
                          Graph::star(7),
                          Graph::complete_bipartite(3, 4),
                          Graph::double_star(2, 3),
                          Graph::path(8),
                          Graph::complete(5).disjoint_union(Graph::cycle(3))};
  for (const Graph& g : pool) {
    std::string canon = canonical_g6(g);
    std::vector<int> perm(static_cast<size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 25; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK_EQ(canonical_g6(g.relabeled(perm)), canon);
    }
    // the canonical string itself parses back to an isomorphic graph
    CHECK(are_isomorphic(from_graph6(canon), g));
  }
}

TEST_CASE("isomorphism decisions") {
  CHECK(are_isomorphic(Graph::cycle(5), Graph::cycle(5).relabeled({3, 1, 4, 0, 2})));
  CHECK_FALSE(are_isomorphic(Graph::cycle(6), Graph::cycle(3).disjoint_union(Graph::cycle(3))));
  CHECK_FALSE(are_isomorphic(Graph::path(4), Graph::star(4)));
  // same degree sequence, not isomorphic
  Graph a = Graph::cycle(4).disjoint_union(Graph::cycle(4));
  Graph b = Graph::cycle(8);
  CHECK_FALSE(are_isomorphic(a, b));
}

TEST_CASE("automorphism group orders") {
  CHECK_EQ(automorphism_group_order(Graph::complete(4)), BigInt(24));
  CHECK_EQ(automorphism_group_order(Graph::cycle(5)), BigInt(10));
  CHECK_EQ(automorphism_group_order(Graph::cycle(6)), BigInt(12));
  CHECK_EQ(automorphism_group_order(Graph::path(4)), BigInt(2));
  CHECK_EQ(automorphism_group_order(Graph::star(5)), BigInt(24));
  CHECK_EQ(automorphism_group_order(Graph::complete_bipartite(3, 3)), BigInt(72));
  CHECK_EQ(automorphism_group_order(Graph(6)), BigInt(720));
  CHECK_EQ(automorphism_group_order(Graph::complete_bipartite(2, 3)), BigInt(12));
  CHECK_EQ(automorphism_group_order(Graph::double_star(2, 2)), BigInt(8));
  CHECK_EQ(automorphism_group_order(Graph(1)), BigInt(1));

  // Kneser graph on 2-subsets of a 5-set: the Petersen graph
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  Graph pet(10);
  for (int x = 0; x < 10; ++x)
    for (int y = x + 1; y < 10; ++y) {
      auto [a1, a2] = subsets[static_cast<size_t>(x)];
      auto [b1, b2] = subsets[static_cast<size_t>(y)];
      if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) pet.add_edge(x, y);
    }
  CHECK_EQ(pet.size(), 15);
  CHECK_EQ(automorphism_group_order(pet), BigInt(120));
}

TEST_CASE("vertex and pair orbits") {
  CanonResult star = canonical_form(Graph::star(6));
  std::set<int> star_orbits(star.orbit_of.begin(), star.orbit_of.end());
  CHECK_EQ(star_orbits.size(), 2);  // center, leaves

  CanonResult k4 = canonical_form(Graph::complete(4));
  auto po = pair_orbits(4, k4.generators);
  CHECK_EQ(std::set<int>(po.begin(), po.end()).size(), 1);

  CanonResult p4 = canonical_form(Graph::path(4));
  auto po2 = pair_orbits(4, p4.generators);
  // pairs under the flip 0123 -> 3210: {01,23} {02,13} {03} {12}
  CHECK_EQ(std::set<int>(po2.begin(), po2.end()).size(), 4);

  CHECK_EQ(pair_index(0, 1), 0);
  CHECK_EQ(pair_from_index(0, 4), std::pair<int, int>{0, 1});
  for (int v = 1; v < 6; ++v)
    for (int u = 0; u < v; ++u) CHECK_EQ(pair_from_index(pair_index(u, v), 6), std::pair<int, int>{u, v});
}
