#include "specq/verify_suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "specq/canonical.hpp"
#include "specq/closed_forms.hpp"
#include "specq/dqs.hpp"
#include "specq/enumerate.hpp"
#include "specq/graph_io.hpp"
#include "specq/roots.hpp"
#include "specq/spectra.hpp"

namespace specq {

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  CriterionResult r;
  Clock::time_point t0 = Clock::now();
  std::ostringstream fail;

  Criterion(int index, std::string name) {
    r.index = index;
    r.name = std::move(name);
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) fail << (fail.tellp() > 0 ? "; " : "") << what;
  }

  CriterionResult finish(const std::string& pass_detail) {
    r.pass = fail.tellp() == 0;
    r.detail = r.pass ? pass_detail : fail.str();
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return r;
  }
};

CriterionResult closed_form_equality(int) {
  Criterion c(1, "closed_form_equality");
  int count = 0;
  auto run = [&](const ClosedFormId& id) {
    ++count;
    VerificationReport rep = verify_closed_form(id);
    c.expect(rep.verdict, rep.claim + " " + rep.params.dump() + ": " + rep.details);
  };
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= p; ++q) run(DoubleStarQ{p, q});
  for (int n = 6; n <= 12; ++n)
    for (int alpha = 1; alpha <= n - 4; ++alpha) run(JoinCliqueMinusEdge{n, alpha});
  for (int n = 6; n <= 12; ++n) run(ComplementStarK2{n});
  for (int n = 6; n <= 12; ++n) run(ComplementK24MinusE{n});
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
      if (left == 0) {
        run(CompleteMultipartiteQ{parts});
        return;
      }
      for (int next = std::min(left, maxp); next >= 1; --next) {
        parts.push_back(next);
        rec(left - next, next);
        parts.pop_back();
      }
    };
    rec(n, n);
  }
  return c.finish(std::to_string(count) + " closed-form characteristic polynomials match exactly");
}

CriterionResult join_theorem_desk(int jobs) {
  Criterion c(2, "join_theorem_n7_n8_n9");
  for (int n = 7; n <= 9; ++n) {
    VerificationReport rep = verify_join_theorem(n, jobs);
    c.expect(rep.verdict, "n=" + std::to_string(n) + ": " + rep.details);
  }
  return c.finish("alpha != 3 always DQS, alpha = 3 yields exactly the predicted mate");
}

CriterionResult kn_k2_family(int jobs) {
  Criterion c(3, "kn_k2_union_dqs");
  const std::pair<int, int> dqs_cases[] = {{4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 0},
                                           {5, 1}, {5, 2}, {6, 0}, {6, 1}, {7, 0}};
  for (auto [n, r] : dqs_cases) {
    VerificationReport rep = verify_kn_k2_theorem(n, r, jobs);
    c.expect(rep.verdict,
             "(" + std::to_string(n) + "," + std::to_string(r) + "): " + rep.details);
  }
  for (int r = 1; r <= 2; ++r) {
    VerificationReport rep = verify_kn_k2_theorem(3, r, jobs);
    c.expect(rep.verdict, "(3," + std::to_string(r) + "): " + rep.details);
  }
  return c.finish("DQS for the ten (n,r) pairs; n = 3 reproduces the predicted mate");
}

CriterionResult maple_counts(int jobs) {
  Criterion c(4, "dense_and_bipartite_search_counts");

  EnumerationFilter f58;
  f58.n = 5;
  f58.edges = 8;
  f58.connected = true;
  c.expect(count_classes(f58, jobs) == 2, "(5,8) connected count != 2");
  EnumerationFilter f611;
  f611.n = 6;
  f611.edges = 11;
  f611.connected = true;
  c.expect(count_classes(f611, jobs) == 9, "(6,11) connected count != 9");

  EnumerationFilter b79;
  b79.n = 7;
  b79.edges = 9;
  b79.bipartite = true;
  b79.spectral = parse_spectral_predicate("gamma1 > 32/5");
  std::vector<Graph> hits;
  enumerate_stream(b79, [&](const Graph& g) { hits.push_back(g); }, jobs);
  Graph k25e = Graph::complete_bipartite(2, 5);
  k25e.remove_edge(0, 2);
  c.expect(hits.size() == 1 && are_isomorphic(hits[0], k25e),
           "bipartite (7,9) with gamma1 > 32/5 is not exactly K25 - e");

  EnumerationFilter b812;
  b812.n = 8;
  b812.edges = 12;
  b812.bipartite = true;
  b812.spectral = parse_spectral_predicate("gamma1 > 22/3");
  hits.clear();
  enumerate_stream(b812, [&](const Graph& g) { hits.push_back(g); }, jobs);
  bool k26 = hits.size() == 1 && are_isomorphic(hits[0], Graph::complete_bipartite(2, 6));
  c.expect(k26, "bipartite (8,12) with gamma1 > 22/3 is not exactly K26");
  if (k26) {
    RootIsolation iso =
        isolate_real_roots(charpoly_of(hits[0], MatrixKind::SignlessLaplacian));
    c.expect(iso.compare(iso.index_from_largest(2), Rational(6)) == Cmp::EQ,
             "gamma2(K26) != 6");
  }

  EnumerationFilter b916;
  b916.n = 9;
  b916.edges = 16;
  b916.bipartite = true;
  b916.spectral = parse_spectral_predicate("gamma1 >= 60/7");
  c.expect(count_classes(b916, jobs) == 0,
           "bipartite (9,16) with gamma1 >= 60/7 is not empty");

  return c.finish("(5,8)=2, (6,11)=9; unique K25-e, unique K26 with gamma2 = 6, empty (9,16)");
}

CriterionResult counterexample(int jobs) {
  Criterion c(5, "union_padding_counterexample");
  VerificationReport rep = verify_counterexample(jobs);
  c.expect(rep.verdict, rep.details);
  return c.finish(rep.details);
}

CriterionResult lemma_catalog_sweep(int jobs, int order_clamp) {
  Criterion c(6, "lemma_catalog_exhaustive");
  long long graphs = 0;
  for (LemmaId id : lemma_catalog()) {
    int max_order = lemma_default_max_order(id);
    if (order_clamp > 0) max_order = std::min(max_order, order_clamp);
    VerificationReport rep = verify_lemma(id, max_order, jobs);
    graphs += rep.params["graphs_checked"].get<long long>();
    c.expect(rep.verdict,
             rep.claim + ": " + rep.details +
                 (rep.witnesses.empty() ? "" : " [" + rep.witnesses.front() + "]"));
  }
  return c.finish("18 lemmas, " + std::to_string(graphs) +
                  " graph evaluations, zero counterexamples");
}

CriterionResult structure_theorem(int jobs) {
  Criterion c(7, "structure_theorem_shapes");
  const std::pair<int, int> cases[] = {{4, 0}, {4, 1}, {4, 2}, {5, 0}, {5, 1}, {6, 0}};
  long long cospectral = 0;
  for (auto [n, r] : cases) {
    VerificationReport rep = verify_structure_theorem(n, r, jobs);
    cospectral += rep.params["cospectral_graphs"].get<long long>();
    c.expect(rep.verdict,
             "(" + std::to_string(n) + "," + std::to_string(r) + "): " + rep.details);
  }
  return c.finish("all " + std::to_string(cospectral) +
                  " cospectral graphs across six (n,r) cases match a shape");
}

CriterionResult union_theorems(int jobs) {
  Criterion c(8, "union_theorems_order_9");
  auto reports = verify_union_theorems(9, jobs);
  long long in_range = 0;
  for (const auto& rep : reports) {
    c.expect(rep.verdict, rep.claim + ": " + rep.details);
    if (rep.params.contains("instances"))
      in_range += rep.params["instances"].get<long long>();
    else if (rep.params.contains("instances_in_hypothesis"))
      in_range += rep.params["instances_in_hypothesis"].get<long long>();
    // The honest-labeling assertion: a report with no in-hypothesis instance
    // must say so.
    bool no_instances =
        (rep.params.contains("instances") && rep.params["instances"] == 0) ||
        (rep.params.contains("instances_in_hypothesis") &&
         rep.params["instances_in_hypothesis"] == 0);
    c.expect(rep.not_desk_verifiable == no_instances,
             rep.claim + ": not_desk_verifiable labeling inconsistent");
  }
  c.expect(reports.size() == 6, "expected six union theorem reports");
  return c.finish(std::to_string(in_range) +
                  " in-hypothesis instances pass; out-of-range theorems labeled "
                  "not_desk_verifiable");
}

CriterionResult exactness_properties(int jobs) {
  Criterion c(9, "exactness_properties");
  for (int n = 1; n <= 7; ++n) {
    EnumerationFilter f;
    f.n = n;
    long long bad = 0;
    enumerate_stream(f, [&](const Graph& g) {
      BigInt m2(-2LL * g.size());
      if (charpoly_of(g, MatrixKind::SignlessLaplacian)[n - 1] != m2) ++bad;
      if (charpoly_of(g, MatrixKind::Laplacian)[n - 1] != m2) ++bad;
      if (charpoly_of(g, MatrixKind::Adjacency)[n - 1] != 0) ++bad;
    }, jobs);
    c.expect(bad == 0, "trace identity failed at n=" + std::to_string(n));
  }
  VerificationReport pro = verify_lemma(LemmaId::PRO_product, 7, jobs);
  c.expect(pro.verdict, "product identity: " + pro.details);
  VerificationReport d4 = verify_lemma(LemmaId::D4_det_unicyclic, 7, jobs);
  c.expect(d4.verdict, "det(Q) = 4 biconditional: " + d4.details);
  const long long expected[] = {11, 34, 156, 1044, 12346};
  for (int n = 4; n <= 8; ++n) {
    EnumerationFilter f;
    f.n = n;
    long long got = count_classes(f, jobs);
    c.expect(got == expected[n - 4], "class count at n=" + std::to_string(n) + " is " +
                                         std::to_string(got));
  }
  return c.finish("trace identities, product identity, det(Q) = 4, and class counts all exact");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int jobs, int lemma_order_clamp) {
  return {closed_form_equality(jobs),
          join_theorem_desk(jobs),
          kn_k2_family(jobs),
          maple_counts(jobs),
          counterexample(jobs),
          lemma_catalog_sweep(jobs, lemma_order_clamp),
          structure_theorem(jobs),
          union_theorems(jobs),
          exactness_properties(jobs)};
}

}  // namespace specq
