#pragma once

#include <cstdint>
#include <vector>

#include "specq/bigint.hpp"
#include "specq/graph.hpp"

namespace specq {

struct ComponentFacts {
  uint32_t mask = 0;
  int order = 0;
  int edges = 0;
  bool tree = false;
  bool unicyclic = false;
  bool odd_unicyclic = false;  // unicyclic with an odd cycle
  bool bipartite = false;
  bool balanced_bipartite = false;  // bipartite with equal part sizes
};

struct StructureFacts {
  int components = 0;
  int bipartite_components = 0;
  bool connected = false;
  bool bipartite = false;
  bool forest = false;
  bool tree = false;
  bool unicyclic = false;  // connected with exactly one cycle
  std::vector<ComponentFacts> comps;
};

StructureFacts analyze(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

// Kirchhoff count: determinant of a principal Laplacian minor. The empty
// graph counts 1; disconnected graphs count 0.
BigInt spanning_tree_count(const Graph& g);

}  // namespace specq
