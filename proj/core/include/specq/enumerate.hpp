#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specq/graph.hpp"

namespace specq {

// Declarative selection of isomorphism classes at a fixed order. Structural
// conditions are pushed into the generation search where they prune
// monotonically; the spectral predicate runs on finished graphs only.
struct EnumerationFilter {
  int n = 0;
  std::optional<int> edges;
  bool connected = false;
  bool bipartite = false;
  bool tree = false;
  bool unicyclic = false;
  std::optional<std::vector<int>> degree_sequence;  // sorted non-increasing
  std::function<bool(const Graph&)> spectral;
  std::string spectral_text;  // echoed in reports
};

// Erdos-Gallai test; accepts the sequence in any order.
bool is_graphical(std::vector<int> degrees);

// Predicate grammar, one comparison per predicate:
//   gamma<k> OP r   k-th largest signless Laplacian eigenvalue vs rational r
//   mu<k>    OP r   k-th largest Laplacian eigenvalue
//   lambda<k> OP r  k-th largest adjacency eigenvalue
//   multQ(c) OP k   multiplicity of integer c in the Q-spectrum
//   multL(c) OP k   multiplicity of integer c in the L-spectrum
// OP is one of < <= = == != >= >; r is an integer or num/den fraction.
// Comparisons are decided exactly. A k beyond the order yields false.
std::function<bool(const Graph&)> parse_spectral_predicate(
    const std::string& text);

// One representative per isomorphism class, generated by canonical
// augmentation (an edge addition survives only when it lands in the
// automorphism orbit of the child's canonical deletion edge), so the stream
// is duplicate-free without any post-hoc isomorphism pass. Single-job order
// is the deterministic search order; with jobs > 1 the subtree results are
// merged back in search order, so the stream is deterministic either way.
void enumerate_stream(const EnumerationFilter& filter,
                      const std::function<void(const Graph&)>& yield,
                      int jobs = 1);

// Materialized stream sorted by canonical form ascending.
std::vector<Graph> enumerate_sorted(const EnumerationFilter& filter,
                                    int jobs = 1);

// Streaming cardinality of enumerate_stream; constant memory per job.
long long count_classes(const EnumerationFilter& filter, int jobs = 1);

// All isomorphism classes realizing the degree sequence; empty when the
// sequence is not graphical.
std::vector<Graph> realizations(const std::vector<int>& degree_sequence);

}  // namespace specq
