#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "specq/canonical.hpp"
#include "specq/dqs.hpp"
#include "specq/enumerate.hpp"
#include "specq/family.hpp"
#include "specq/graph.hpp"
#include "specq/graph_io.hpp"
#include "specq/spectra.hpp"
#include "specq/structure.hpp"

using namespace specq;

namespace {

long long count_all(int n, int jobs = 1) {
  EnumerationFilter f;
  f.n = n;
  return count_classes(f, jobs);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return h;
}

}  // namespace

TEST_CASE("unlabeled graph counts match the classical table") {
  CHECK_EQ(count_all(1), 1);
  CHECK_EQ(count_all(2), 2);
  CHECK_EQ(count_all(3), 4);
  CHECK_EQ(count_all(4), 11);
  CHECK_EQ(count_all(5), 34);
  CHECK_EQ(count_all(6), 156);
  CHECK_EQ(count_all(7, 4), 1044);
  CHECK_EQ(count_all(8, 4), 12346);
}

TEST_CASE("connected and tree counts") {
  auto count = [](int n, auto&& set) {
    EnumerationFilter f;
    f.n = n;
    set(f);
    return count_classes(f, 2);
  };
  auto connected = [](EnumerationFilter& f) { f.connected = true; };
  auto tree = [](EnumerationFilter& f) { f.tree = true; };
  auto unicyclic = [](EnumerationFilter& f) { f.unicyclic = true; };

  CHECK_EQ(count(4, connected), 6);
  CHECK_EQ(count(5, connected), 21);
  CHECK_EQ(count(6, connected), 112);
  CHECK_EQ(count(7, connected), 853);
  CHECK_EQ(count(8, connected), 11117);

  const int tree_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) CHECK_EQ(count(n, tree), tree_counts[n - 1]);

  const int unicyclic_counts[] = {1, 2, 5, 13, 33, 89};
  for (int n = 3; n <= 8; ++n) CHECK_EQ(count(n, unicyclic), unicyclic_counts[n - 3]);
}

TEST_CASE("class sizes sum to the labeled counts") {
  // sum over classes of n!/|Aut| is 2^C(n,2)
  for (int n : {5, 6}) {
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    BigInt total = 0;
    EnumerationFilter f;
    f.n = n;
    enumerate_stream(f, [&](const Graph& g) { total += fact / automorphism_group_order(g); });
    BigInt expected = BigInt(1) << (n * (n - 1) / 2);
    CHECK_EQ(total, expected);
  }
  // and over trees it is Cayley's n^(n-2)
  for (int n : {7, 8, 9}) {
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    BigInt total = 0;
    EnumerationFilter f;
    f.n = n;
    f.tree = true;
    enumerate_stream(f, [&](const Graph& g) { total += fact / automorphism_group_order(g); });
    BigInt expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    CHECK_EQ(total, expected);
  }
}

TEST_CASE("filters agree with per-graph structure checks") {
  for (int n = 4; n <= 6; ++n) {
    long long bip = 0, conn = 0, uni = 0;
    EnumerationFilter all;
    all.n = n;
    enumerate_stream(all, [&](const Graph& g) {
      StructureFacts s = analyze(g);
      bip += s.bipartite ? 1 : 0;
      conn += s.connected ? 1 : 0;
      uni += s.unicyclic ? 1 : 0;
    });
    EnumerationFilter f;
    f.n = n;
    f.bipartite = true;
    CHECK_EQ(count_classes(f), bip);
    f = EnumerationFilter{};
    f.n = n;
    f.connected = true;
    CHECK_EQ(count_classes(f), conn);
    f = EnumerationFilter{};
    f.n = n;
    f.unicyclic = true;
    CHECK_EQ(count_classes(f), uni);
  }
}

TEST_CASE("edge count filter partitions the space") {
  long long total = 0;
  for (int m = 0; m <= 15; ++m) {
    EnumerationFilter f;
    f.n = 6;
    f.edges = m;
    total += count_classes(f);
  }
  CHECK_EQ(total, 156);

  EnumerationFilter f;
  f.n = 6;
  f.edges = 11;
  f.connected = true;
  CHECK_EQ(count_classes(f), 9);
  f.n = 5;
  f.edges = 8;
  CHECK_EQ(count_classes(f), 2);
}

TEST_CASE("enumeration is deterministic and duplicate free across jobs") {
  EnumerationFilter f;
  f.n = 6;
  f.edges = 7;
  std::vector<std::string> serial, parallel;
  enumerate_stream(f, [&](const Graph& g) { serial.push_back(to_graph6(g)); }, 1);
  enumerate_stream(f, [&](const Graph& g) { parallel.push_back(to_graph6(g)); }, 4);
  CHECK_EQ(serial, parallel);

  std::set<std::string> canon;
  for (const auto& s : serial) canon.insert(canonical_g6(parse_graph(s)));
  CHECK_EQ(canon.size(), serial.size());  // pairwise non-isomorphic

  std::vector<Graph> sorted = enumerate_sorted(f, 2);
  CHECK_EQ(sorted.size(), serial.size());
  std::vector<std::string> keys;
  for (const auto& g : sorted) keys.push_back(canonical_g6(g));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("degree sequence realizations") {
  CHECK(is_graphical({2, 2, 2}));
  CHECK(is_graphical({3, 3, 3, 3}));
  CHECK_FALSE(is_graphical({3, 3, 1, 1}));
  CHECK_FALSE(is_graphical({1}));  // odd sum
  CHECK_FALSE(is_graphical({4, 1, 1, 1}));  // degree exceeds n - 1
  CHECK(is_graphical({}));

  CHECK_EQ(realizations({2, 2, 2}).size(), 1);  // the triangle
  CHECK_EQ(realizations({3, 1, 1, 1}).size(), 1);  // the star
  CHECK_EQ(realizations({3, 3, 1, 1}).size(), 0);
  auto r = realizations({2, 2, 1, 1});
  REQUIRE_EQ(r.size(), 1);  // the path
  CHECK(are_isomorphic(r.front(), Graph::path(4)));
  // 2-regular on 6 vertices: C6 and 2C3
  CHECK_EQ(realizations({2, 2, 2, 2, 2, 2}).size(), 2);

  EnumerationFilter f;
  f.n = 6;
  f.degree_sequence = std::vector<int>{2, 2, 2, 2, 2, 2};
  CHECK_EQ(count_classes(f), 2);
}

TEST_CASE("spectral predicates select exactly") {
  // multL(1) = 2 on 6-vertex trees: the double stars G(3,2,1) and G(2,2,2)
  EnumerationFilter f;
  f.n = 6;
  f.tree = true;
  f.spectral = parse_spectral_predicate("multL(1) = 2");
  std::vector<Graph> hits = enumerate_sorted(f);
  REQUIRE_EQ(hits.size(), 2);
  for (const auto& g : hits) {
    std::vector<int> ds = g.degree_sequence();
    CHECK_EQ(ds[0] + ds[1], 6);  // two adjacent centers carry all other vertices
    CHECK_EQ(ds[2], 1);
  }

  // gamma1 of K6 is 10, of anything else on 6 vertices strictly less
  f = EnumerationFilter{};
  f.n = 6;
  f.spectral = parse_spectral_predicate("gamma1 >= 10");
  std::vector<Graph> top = enumerate_sorted(f);
  REQUIRE_EQ(top.size(), 1);
  CHECK(are_isomorphic(top.front(), Graph::complete(6)));

  // adjacency radius below 2 on 5-vertex trees: the path and the fork,
  // and only the path stays under 9/5
  f = EnumerationFilter{};
  f.n = 5;
  f.tree = true;
  f.spectral = parse_spectral_predicate("lambda1 < 2");
  CHECK_EQ(count_classes(f), 2);
  f.spectral = parse_spectral_predicate("lambda1 <= 9/5");
  std::vector<Graph> small = enumerate_sorted(f);
  REQUIRE_EQ(small.size(), 1);
  CHECK(are_isomorphic(small.front(), Graph::path(5)));

  // rational thresholds split the (7,9) bipartite classes as advertised
  f = EnumerationFilter{};
  f.n = 7;
  f.edges = 9;
  f.bipartite = true;
  f.spectral = parse_spectral_predicate("gamma1 > 32/5");
  CHECK_EQ(count_classes(f, 2), 1);

  CHECK_THROWS_AS(parse_spectral_predicate("gamma0 > 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spectral_predicate("foo > 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spectral_predicate("gamma1 >< 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spectral_predicate("gamma1 > 1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spectral_predicate("multQ(x) = 1"), std::invalid_argument);
}

TEST_CASE("cospectral mate search") {
  // K3 + K2 + K1 has exactly one Q-mate, the star union
  MateSearchResult r = cospectral_mates(parse_family("K3+K2+K1"), MatrixKind::SignlessLaplacian, 2);
  CHECK(r.exhaustive);
  CHECK_EQ(r.order, 6);
  CHECK_EQ(r.edges, 4);
  REQUIRE_EQ(r.mates.size(), 1);
  CHECK_EQ(r.mates.front(), canonical_g6(parse_family("S4+K2")));
  EnumerationFilter space;
  space.n = 6;
  space.edges = 4;
  CHECK_EQ(r.space_classes, count_classes(space));

  // K5 is determined by its Q-spectrum
  MateSearchResult k5 = cospectral_mates(Graph::complete(5), MatrixKind::SignlessLaplacian, 2);
  CHECK(k5.mates.empty());

  // the adjacency pair in both directions
  MateSearchResult star = cospectral_mates(Graph::star(5), MatrixKind::Adjacency, 2);
  REQUIRE_EQ(star.mates.size(), 1);
  CHECK_EQ(star.mates.front(), canonical_g6(Graph::cycle(4).disjoint_union(Graph(1))));

  nlohmann::json j = r.to_json();
  CHECK_EQ(j["kind"], "signless_laplacian");
  CHECK_EQ(j["mates"].size(), 1);
  CHECK(j["exhaustive"].get<bool>());
}

TEST_CASE("desk scale determination verdicts") {
  VerificationReport dqs = is_dqs_desk(Graph::complete(5), 2);
  CHECK(dqs.verdict);
  CHECK_FALSE(dqs.not_desk_verifiable);

  VerificationReport swap = is_dqs_desk(parse_family("K3+K2+K1"), 2);
  CHECK_FALSE(swap.verdict);
  REQUIRE_EQ(swap.witnesses.size(), 1);
  CHECK_EQ(swap.witnesses.front(), canonical_g6(parse_family("S4+K2")));

  VerificationReport dls = is_dls_desk(Graph::path(5), 2);
  CHECK(dls.verdict);
}

TEST_CASE("padding a union with isolated vertices can create and keep mates") {
  // K3 + K2 is determined; K3 + K2 + rK1 for r >= 1 has exactly the one
  // predicted mate K13 + K2 + (r-1)K1
  Graph base = parse_family("K3+K2");
  CHECK(cospectral_mates(base, MatrixKind::SignlessLaplacian, 2).mates.empty());
  for (int r = 1; r <= 3; ++r) {
    Graph g = base.disjoint_union(Graph(r));
    Graph mate = parse_family("S4+K2").disjoint_union(Graph(r - 1));
    MateSearchResult res = cospectral_mates(g, MatrixKind::SignlessLaplacian, 2);
    REQUIRE_EQ(res.mates.size(), 1);
    CHECK_EQ(res.mates.front(), canonical_g6(mate));
  }
}

TEST_CASE("invariants survive relabeling") {
  std::mt19937 rng(20240817);
  EnumerationFilter f;
  f.n = 7;
  f.edges = 9;
  f.connected = true;
  std::vector<Graph> pool = enumerate_sorted(f);
  REQUIRE_FALSE(pool.empty());
  std::vector<int> perm(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph& g = pool[static_cast<size_t>(rng() % pool.size())];
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    CHECK_EQ(canonical_g6(h), canonical_g6(g));
    for (MatrixKind kind :
         {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian})
      CHECK_EQ(charpoly_of(h, kind), charpoly_of(g, kind));
    CHECK_EQ(automorphism_group_order(h), automorphism_group_order(g));
  }
}

TEST_CASE("lemma verification reports") {
  CHECK_EQ(lemma_catalog().size(), 18);
  for (LemmaId id : lemma_catalog()) {
    CHECK_EQ(lemma_from_name(lemma_name(id)), id);
    CHECK(lemma_default_max_order(id) >= 6);
  }
  CHECK_EQ(lemma_from_name("siam"), LemmaId::SIAM_integer_divides);
  CHECK_EQ(lemma_from_name("SIAM_integer_divides"), LemmaId::SIAM_integer_divides);
  CHECK_FALSE(lemma_from_name("nope").has_value());

  VerificationReport rep = verify_lemma(LemmaId::D4_det_unicyclic, 6, 2);
  CHECK(rep.verdict);
  CHECK_EQ(rep.params["max_order"], 6);
  CHECK(rep.params["graphs_checked"].get<long long>() > 0);
}

TEST_CASE("theorem verification entry points") {
  VerificationReport join = verify_join_theorem(7, 2);
  CHECK(join.verdict);

  VerificationReport kn = verify_kn_k2_theorem(3, 1, 2);
  CHECK(kn.verdict);
  REQUIRE_EQ(kn.witnesses.size(), 1);
  CHECK_EQ(kn.witnesses.front(), canonical_g6(parse_family("S4+K2")));

  VerificationReport structure = verify_structure_theorem(4, 1, 2);
  CHECK(structure.verdict);

  std::vector<VerificationReport> unions = verify_union_theorems(8, 2);
  CHECK_EQ(unions.size(), 6);
  for (const auto& rep : unions) {
    CHECK_MESSAGE(rep.verdict, rep.claim, ": ", rep.details);
    long long driving = rep.params.contains("instances_in_hypothesis")
                            ? rep.params["instances_in_hypothesis"].get<long long>()
                            : rep.params["instances"].get<long long>();
    CHECK_EQ(rep.not_desk_verifiable, driving == 0);
  }
}

TEST_CASE("enumeration respects the order cap") {
  EnumerationFilter f;
  f.n = enumeration_cap() + 1;
  CHECK_THROWS_AS(count_classes(f), CapExceeded);
}
