#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "specq/graph.hpp"
#include "specq/report.hpp"
#include "specq/spectra.hpp"

namespace specq {

// Exhaustive cospectral-mate search. The order and edge count are fixed by
// the characteristic polynomial, so the space is every isomorphism class
// with the target's (n, m).
struct MateSearchResult {
  std::string target;  // graph6
  MatrixKind kind = MatrixKind::SignlessLaplacian;
  int order = 0;
  int edges = 0;
  std::vector<std::string> mates;  // canonical graph6, sorted, target excluded
  long long space_classes = 0;     // isomorphism classes searched
  bool exhaustive = false;
  nlohmann::json to_json() const;
};

MateSearchResult cospectral_mates(const Graph& g, MatrixKind kind, int jobs = 1);

// A graph is determined by its Q- (resp. L-) spectrum at desk scale when the
// exhaustive mate search comes back empty.
VerificationReport is_dqs_desk(const Graph& g, int jobs = 1);
VerificationReport is_dls_desk(const Graph& g, int jobs = 1);

enum class LemmaId {
  L1_gamma1_bound,
  L2_mu1_bound,
  LQ_bipartite_equal,
  MULL_tree_mult,
  P_subgraph_strict,
  PRO_product,
  D4_det_unicyclic,
  DLSA_mu2_d2,
  DL1_tree_second_smallest,
  TREE_mu1_star,
  SIAM_integer_divides,
  KCDAS_gamman_dn,
  U2_unicyclic_mult,
  MUL_multiplicity_n_minus_2,
  LJV_gamma2_bound,
  JLDN_dn1_bound,
  JLD3_gamma3_bound,
  JLH_weyl,
};

std::vector<LemmaId> lemma_catalog();
std::string lemma_name(LemmaId id);
// Accepts the full name or its leading tag (case-insensitive), e.g. "siam".
std::optional<LemmaId> lemma_from_name(const std::string& name);
int lemma_default_max_order(LemmaId id);

// Evaluates the lemma's predicate on every graph of its class up to
// max_order. Any counterexample lands in witnesses and fails the verdict.
VerificationReport verify_lemma(LemmaId id, int max_order, int jobs = 1);

// The star-union theorems, one report each. Instances meeting every
// hypothesis drive the verdict; a report whose hypotheses admit no in-range
// instance carries not_desk_verifiable, with the below-floor instances still
// run as supplementary evidence (their mates never count against the
// theorem).
std::vector<VerificationReport> verify_union_theorems(int max_total_order,
                                                      int jobs = 1);

// Every Q-cospectral H of G union K2 union rK1, for every connected G of
// order n with m >= (n-2)(n-3)/2 + 5, matches one of the four component
// shapes H1+(r+1)K1, H1+K2+rK1, H1+2K2+(r-1)K1, H1+K12+rK1.
VerificationReport verify_structure_theorem(int n, int r, int jobs = 1);

// Kn union K2 union rK1 is DQS for n >= 4; for n = 3 the search must
// reproduce the mate K13 union K2 union (r-1)K1 exactly.
VerificationReport verify_kn_k2_theorem(int n, int r, int jobs = 1);

// The padding counterexample: a connected (5,6) graph G and a connected
// non-bipartite DQS (6,8) graph H1 with the stated Q-spectra exist, and
// H1+2K2 is Q-cospectral with G+C4+K1 without being isomorphic.
VerificationReport verify_counterexample(int jobs = 1);

// K_{n-a}-e join aK1 over all a with n-a > 3: DQS except a = 3, where the
// one mate is the complement of K13 union K2 union (n-6)K1.
VerificationReport verify_join_theorem(int n, int jobs = 1);

}  // namespace specq
