#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "specq/canonical.hpp"
#include "specq/closed_forms.hpp"
#include "specq/enumerate.hpp"
#include "specq/family.hpp"
#include "specq/graph.hpp"
#include "specq/graph_io.hpp"
#include "specq/roots.hpp"
#include "specq/spectra.hpp"
#include "specq/structure.hpp"

using namespace specq;

TEST_CASE("matrix entries for each kind") {
  Graph p3 = Graph::path(3);
  IntMatrix a = matrix_of(p3, MatrixKind::Adjacency);
  IntMatrix l = matrix_of(p3, MatrixKind::Laplacian);
  IntMatrix q = matrix_of(p3, MatrixKind::SignlessLaplacian);
  CHECK_EQ(a.at(0, 1), 1);
  CHECK_EQ(a.at(0, 2), 0);
  CHECK_EQ(a.at(1, 1), 0);
  CHECK_EQ(l.at(1, 1), 2);
  CHECK_EQ(l.at(0, 1), -1);
  CHECK_EQ(q.at(1, 1), 2);
  CHECK_EQ(q.at(0, 1), 1);
}

TEST_CASE("reference characteristic polynomials") {
  // A(C4) = x^4 - 4x^2, roots 2, 0, 0, -2.
  CHECK_EQ(charpoly_of(Graph::cycle(4), MatrixKind::Adjacency),
           IntPoly::from_int_list({0, 0, -4, 0, 1}));
  // L(P3): spectrum {3, 1, 0}.
  CHECK_EQ(charpoly_of(Graph::path(3), MatrixKind::Laplacian),
           IntPoly::from_int_list({0, 3, -4, 1}));
  // Q(K4) = (x - 6)(x - 2)^3.
  CHECK_EQ(charpoly_of(Graph::complete(4), MatrixKind::SignlessLaplacian),
           IntPoly::linear_root(6) * IntPoly::linear_root(2) * IntPoly::linear_root(2) *
               IntPoly::linear_root(2));
  // Q(K5): 2n-2 once, n-2 with multiplicity n-1.
  Graph k5 = Graph::complete(5);
  RootIsolation r = isolate_real_roots(charpoly_of(k5, MatrixKind::SignlessLaplacian));
  REQUIRE_EQ(r.distinct_count(), 2);
  CHECK_EQ(r.roots()[0].lo, Rational(3));
  CHECK_EQ(r.roots()[0].mult, 4);
  CHECK_EQ(r.roots()[1].lo, Rational(8));
  CHECK_EQ(r.roots()[1].mult, 1);
}

TEST_CASE("trace and degree identities on every graph through order 6") {
  for (int n = 1; n <= 6; ++n) {
    EnumerationFilter f;
    f.n = n;
    enumerate_stream(f, [&](const Graph& g) {
      const BigInt two_m = BigInt(2) * g.size();
      for (MatrixKind kind :
           {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
        IntPoly p = charpoly_of(g, kind);
        REQUIRE_EQ(p.degree(), n);
        CHECK_EQ(p[n], 1);
        // coefficient of x^(n-1) is minus the trace
        CHECK_EQ(p[n - 1], kind == MatrixKind::Adjacency ? BigInt(0) : -two_m);
      }
    });
  }
}

TEST_CASE("zero multiplicities count components") {
  Graph g = Graph::path(3).disjoint_union(Graph::cycle(4)).disjoint_union(Graph(1));
  SpectrumReport l = spectrum_of(g, MatrixKind::Laplacian);
  SpectrumReport q = spectrum_of(g, MatrixKind::SignlessLaplacian);
  CHECK_EQ(l.components, 3);
  CHECK_EQ(q.bipartite_components, 3);  // every component here is bipartite

  Graph h = Graph::cycle(5).disjoint_union(Graph::cycle(6));
  CHECK_EQ(spectrum_of(h, MatrixKind::Laplacian).components, 2);
  CHECK_EQ(spectrum_of(h, MatrixKind::SignlessLaplacian).bipartite_components, 1);
}

TEST_CASE("bipartite graphs have equal Laplacian and signless Laplacian polynomials") {
  for (const char* name : {"P5", "C6", "K3,4", "S7", "G(2,2,3)"}) {
    Graph g = parse_family(name);
    CHECK_EQ(charpoly_of(g, MatrixKind::Laplacian),
             charpoly_of(g, MatrixKind::SignlessLaplacian));
  }
  // and an odd cycle separates them
  Graph c5 = Graph::cycle(5);
  CHECK_NE(charpoly_of(c5, MatrixKind::Laplacian),
           charpoly_of(c5, MatrixKind::SignlessLaplacian));
}

TEST_CASE("nonzero root products") {
  // connected bipartite: product of nonzero eigenvalues is n times the
  // spanning tree count, for L and Q alike
  for (const char* name : {"P6", "K2,5", "C8", "G(3,2,2)"}) {
    Graph g = parse_family(name);
    BigInt expected = BigInt(g.order()) * spanning_tree_count(g);
    CHECK_EQ(nonzero_root_product(charpoly_of(g, MatrixKind::Laplacian)), expected);
    CHECK_EQ(nonzero_root_product(charpoly_of(g, MatrixKind::SignlessLaplacian)), expected);
  }
  // odd unicyclic: det Q = 4
  for (const char* name : {"C3", "C5", "C7"}) {
    IntPoly p = charpoly_of(parse_family(name), MatrixKind::SignlessLaplacian);
    CHECK_EQ(nonzero_root_product(p), 4);
    CHECK_EQ(p[0] * (p.degree() % 2 == 0 ? 1 : -1), 4);  // det via constant term
  }
}

TEST_CASE("cospectrality decisions") {
  // the classic adjacency pair: star K_{1,4} and C4 + K1
  Graph star5 = Graph::star(5);
  Graph c4k1 = Graph::cycle(4).disjoint_union(Graph(1));
  CHECK(are_cospectral(star5, c4k1, MatrixKind::Adjacency));
  CHECK_FALSE(are_cospectral(star5, c4k1, MatrixKind::Laplacian));
  CHECK_FALSE(are_cospectral(star5, c4k1, MatrixKind::SignlessLaplacian));

  // K3 + K2 + K1 and K_{1,3} + K2 share the Q-polynomial
  Graph a = parse_family("K3+K2+K1");
  Graph b = parse_family("S4+K2");
  CHECK(are_cospectral(a, b, MatrixKind::SignlessLaplacian));
  CHECK_FALSE(are_isomorphic(a, b));

  CHECK_FALSE(are_cospectral(Graph::path(4), Graph::path(5), MatrixKind::Adjacency));
}

TEST_CASE("spectrum report json schema") {
  nlohmann::json j = spectrum_of(Graph::cycle(5), MatrixKind::SignlessLaplacian).to_json();
  CHECK_EQ(j["kind"], "signless_laplacian");
  CHECK_EQ(j["n"], 5);
  CHECK_EQ(j["m"], 5);
  CHECK_EQ(j["charpoly"].size(), 6);
  CHECK_EQ(j["charpoly"][5], 1);
  CHECK_EQ(j["bipartite_components"], 0);
  for (const auto& root : j["roots"]) {
    CHECK(root.contains("lo"));
    CHECK(root.contains("hi"));
    CHECK(root["mult"].get<int>() >= 1);
  }
}

TEST_CASE("family expressions build the advertised graphs") {
  CHECK(are_isomorphic(parse_family("K5"), Graph::complete(5)));
  CHECK(are_isomorphic(parse_family("K4-e"), Graph::complete_minus_edge(4)));
  CHECK(are_isomorphic(parse_family("K2,5"), Graph::complete_bipartite(2, 5)));
  CHECK(are_isomorphic(parse_family("K(2,2,2)"), Graph::complete_multipartite({2, 2, 2})));
  CHECK(are_isomorphic(parse_family("S6"), Graph::star(6)));
  CHECK(are_isomorphic(parse_family("P4"), Graph::path(4)));
  CHECK(are_isomorphic(parse_family("C6"), Graph::cycle(6)));
  CHECK(are_isomorphic(parse_family("G(3,2,2)"), Graph::double_starlike(3, 2, 2)));
  CHECK(are_isomorphic(parse_family("complement(C5)"), Graph::cycle(5)));
  CHECK(are_isomorphic(parse_family("join(K1, C4)"), parse_family("K(1,2,2)")));
  CHECK_EQ(parse_family("3*K1 + 2*K2").order(), 7);
  CHECK_EQ(parse_family("(K3 + K2) + K1").size(), 4);
  CHECK_EQ(parse_family(" join( K4-e , 3*K1 ) ").order(), 7);
}

TEST_CASE("family parse errors carry offsets") {
  auto offset_of = [](const std::string& text) -> size_t {
    try {
      parse_family(text);
    } catch (const FamilyParseError& e) {
      return e.offset;
    }
    return static_cast<size_t>(-1);
  };
  CHECK_EQ(offset_of(""), 0);
  CHECK_EQ(offset_of("K"), 1);
  CHECK_EQ(offset_of("Q5"), 0);
  CHECK_EQ(offset_of("K3 + + K2"), 5);
  CHECK_EQ(offset_of("join(K3)"), 7);       // missing second argument
  CHECK_EQ(offset_of("join(K3, K2"), 11);   // unclosed paren
  CHECK_EQ(offset_of("K3 K2"), 3);          // missing '+'
  CHECK_EQ(offset_of("0*K3"), 2);           // zero repetitions
}

TEST_CASE("graph6 parse errors carry offsets") {
  auto offset_of = [](const std::string& text) -> size_t {
    try {
      parse_graph(text);
    } catch (const GraphParseError& e) {
      return e.offset;
    }
    return static_cast<size_t>(-1);
  };
  CHECK_EQ(offset_of(""), 0);
  CHECK_EQ(offset_of("D~"), 2);            // truncated payload
  CHECK_EQ(offset_of("D~{x"), 3);          // trailing garbage
  CHECK_EQ(offset_of("D~\x05"), 2);        // byte below the graph6 range
  CHECK_EQ(offset_of(">>graph6<<D~"), 12); // offset counts the header
  CHECK_EQ(offset_of("  D~"), 4);          // and leading whitespace
  CHECK_EQ(offset_of(":"), 1);             // sparse6 marker alone

  // a valid string parses from under either header
  Graph g = parse_graph(">>graph6<<D~{");
  CHECK_EQ(g.order(), 5);
  CHECK_EQ(g.size(), 10);
}

TEST_CASE("adjacency list round trip") {
  EnumerationFilter f;
  f.n = 6;
  enumerate_stream(f, [&](const Graph& g) {
    Graph back = from_adjacency_list(to_adjacency_list(g));
    CHECK_EQ(to_graph6(back), to_graph6(g));  // labels preserved exactly
  });

  CHECK_EQ(from_adjacency_list("0\n").order(), 0);
  CHECK_EQ(from_adjacency_list("3\n0: 1\n1: 0\n").size(), 1);  // vertex 2 implicit
  CHECK_THROWS_AS(from_adjacency_list("2\n0: 1\n"), std::invalid_argument);   // one-sided edge
  CHECK_THROWS_AS(from_adjacency_list("2\n0: 0\n"), std::invalid_argument);   // loop
  CHECK_THROWS_AS(from_adjacency_list("2\n0: 5\n1:\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_adjacency_list("x\n"), std::invalid_argument);
}

TEST_CASE("closed form predictions match the computed polynomials") {
  int forms = 0;
  auto run = [&](const ClosedFormId& id) {
    ++forms;
    VerificationReport rep = verify_closed_form(id);
    CHECK_MESSAGE(rep.verdict, rep.claim, " ", rep.params.dump(), ": ", rep.details);
  };
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= p; ++q) run(DoubleStarQ{p, q});
  for (int n = 6; n <= 10; ++n)
    for (int alpha = 1; alpha <= n - 4; ++alpha) run(JoinCliqueMinusEdge{n, alpha});
  for (int n = 6; n <= 10; ++n) {
    run(ComplementStarK2{n});
    run(ComplementK24MinusE{n});
  }
  run(CompleteMultipartiteQ{{2, 2, 2}});
  run(CompleteMultipartiteQ{{3, 2, 1}});
  run(CompleteMultipartiteQ{{4, 4}});
  run(CompleteMultipartiteQ{{5}});
  CHECK_EQ(forms, 44);
}

TEST_CASE("closed form internals") {
  PredictedSpectrum ps = predict(DoubleStarQ{3, 2});
  CHECK_EQ(ps.total_degree(), 7);
  CHECK_EQ(ps.residual.degree(), 3);
  CHECK_EQ(ps.trace(), 12);  // twice the edge count of a 7-vertex tree
  CHECK_EQ(ps.expanded(), charpoly_of(Graph::double_star(3, 2), MatrixKind::SignlessLaplacian));

  // the double star form is symmetric in p and q
  CHECK_EQ(predict(DoubleStarQ{2, 3}).expanded(),
           charpoly_of(Graph::double_star(3, 2), MatrixKind::SignlessLaplacian));

  CHECK_THROWS_AS(predict(DoubleStarQ{0, 1}), std::domain_error);
  CHECK_THROWS_AS(predict(JoinCliqueMinusEdge{7, 5}), std::domain_error);  // n - alpha < 3
  CHECK_THROWS_AS(predict(ComplementStarK2{5}), std::domain_error);
  CHECK_THROWS_AS(predict(ComplementK24MinusE{5}), std::domain_error);
  CHECK_THROWS_AS(predict(CompleteMultipartiteQ{{}}), std::domain_error);
}

TEST_CASE("double star eigenvalue locations") {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= p; ++q) {
      VerificationReport rep = second_eigenvalue_location_check(p, q);
      CHECK_MESSAGE(rep.verdict, "p=", p, " q=", q, ": ", rep.details);
    }
}

TEST_CASE("counterexample pair polynomial identities") {
  Graph g = parse_graph("DK{");
  Graph h1 = parse_graph("EK^O");
  IntPoly pg = charpoly_of(g, MatrixKind::SignlessLaplacian);
  IntPoly ph = charpoly_of(h1, MatrixKind::SignlessLaplacian);
  // P_G = (x^2 - 7x + 8)(x - 3)(x - 1)^2 and P_H1 = P_G (x - 4)
  CHECK_EQ(pg, IntPoly::from_int_list({8, -7, 1}) * IntPoly::linear_root(3) *
                   IntPoly::linear_root(1) * IntPoly::linear_root(1));
  CHECK_EQ(ph, pg * IntPoly::linear_root(4));
  CHECK_FALSE(is_bipartite(h1));
  CHECK(is_connected(g));
  CHECK(is_connected(h1));

  Graph left = h1.disjoint_union(Graph::complete(2)).disjoint_union(Graph::complete(2));
  Graph right = g.disjoint_union(Graph::cycle(4)).disjoint_union(Graph(1));
  CHECK(are_cospectral(left, right, MatrixKind::SignlessLaplacian));
  CHECK_FALSE(are_isomorphic(left, right));
}
