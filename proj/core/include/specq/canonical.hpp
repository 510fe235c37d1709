#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specq/bigint.hpp"
#include "specq/graph.hpp"

namespace specq {

struct CanonResult {
  std::string canon_g6;                       // graph6 of the canonical relabeling
  std::vector<int> labeling;                  // labeling[v] = canonical position of v
  std::vector<std::vector<int>> generators;   // automorphism generators, gen[v] = image
  std::vector<int> orbit_of;                  // smallest vertex of each vertex's orbit
};

// Canonical form by individualization-refinement, maximizing the relabeled
// upper-triangle bit string (so equal strings mean isomorphic graphs).
CanonResult canonical_form(const Graph& g);

std::string canonical_g6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// |Aut(G)| via a Schreier-Sims chain over the discovered generators.
BigInt automorphism_group_order(const Graph& g);

// Unordered vertex pairs {u,v}, u < v, indexed column-major:
// idx = v(v-1)/2 + u, matching graph6 bit order.
inline int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }
std::pair<int, int> pair_from_index(int idx, int n);

// Orbit partition of all C(n,2) pairs under the group generated by gens;
// entry is the smallest pair index in the orbit.
std::vector<int> pair_orbits(int n, const std::vector<std::vector<int>>& gens);

}  // namespace specq
