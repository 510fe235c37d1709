#include "specq/structure.hpp"

#include "specq/intmatrix.hpp"

namespace specq {

StructureFacts analyze(const Graph& g) {
  const int n = g.order();
  StructureFacts f;
  std::vector<int> color(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    ComponentFacts c;
    bool two_colorable = true;
    int part[2] = {0, 0};
    std::vector<int> stack{s};
    color[static_cast<size_t>(s)] = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      c.mask |= 1u << u;
      ++c.order;
      ++part[color[static_cast<size_t>(u)]];
      uint32_t nb = g.neighbors(u);
      while (nb) {
        int v = __builtin_ctz(nb);
        nb &= nb - 1;
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = color[static_cast<size_t>(u)] ^ 1;
          stack.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          two_colorable = false;
        }
      }
    }
    uint32_t mm = c.mask;
    while (mm) {
      int u = __builtin_ctz(mm);
      mm &= mm - 1;
      c.edges += __builtin_popcount(g.neighbors(u) & c.mask);
    }
    c.edges /= 2;
    c.tree = c.edges == c.order - 1;
    c.unicyclic = c.edges == c.order;
    c.bipartite = two_colorable;
    c.odd_unicyclic = c.unicyclic && !c.bipartite;
    c.balanced_bipartite = two_colorable && part[0] == part[1];
    f.comps.push_back(c);
  }
  f.components = static_cast<int>(f.comps.size());
  f.connected = f.components == 1;
  f.bipartite = true;
  f.forest = true;
  for (const auto& c : f.comps) {
    if (c.bipartite) ++f.bipartite_components;
    f.bipartite = f.bipartite && c.bipartite;
    f.forest = f.forest && c.tree;
  }
  f.tree = f.connected && f.forest;
  f.unicyclic = f.connected && !f.comps.empty() && f.comps[0].unicyclic;
  return f;
}

bool is_connected(const Graph& g) { return analyze(g).connected; }
bool is_bipartite(const Graph& g) { return analyze(g).bipartite; }
bool is_tree(const Graph& g) { return analyze(g).tree; }

BigInt spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 1;
  IntMatrix m(n - 1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (i == j)
        m.at(i - 1, j - 1) = g.degree(i);
      else
        m.at(i - 1, j - 1) = g.has_edge(i, j) ? -1 : 0;
    }
  }
  return determinant(m);
}

}  // namespace specq
