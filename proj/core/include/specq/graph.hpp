#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specq {

// Raised when a construction or search would exceed the configured order cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Order cap for graph construction. Defaults to 12, override with the
// SPECQ_CONSTRUCTION_CAP environment variable or set_construction_cap();
// the hard ceiling of the representation is 32.
int construction_cap();
void set_construction_cap(int n);

// Order cap for exhaustive enumeration. Defaults to 10, override with
// SPECQ_ENUM_CAP or set_enumeration_cap().
int enumeration_cap();
void set_enumeration_cap(int n);

// Simple undirected graph on at most 32 vertices, adjacency kept as one
// bitmask per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit Graph(int n);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);  // n >= 3
  static Graph star(int n);   // K_{1,n-1}, center 0
  static Graph complete_bipartite(int a, int b);
  static Graph complete_multipartite(const std::vector<int>& parts);
  static Graph complete_minus_edge(int n);  // K_n minus the edge {0,1}, n >= 2
  // Path on ell vertices with p pendant vertices on one end and q on the
  // other; path first, then the p pendants, then the q pendants.
  static Graph double_starlike(int p, int ell, int q);
  static Graph double_star(int p, int q) { return double_starlike(p, 2, q); }

  int order() const { return n_; }
  int size() const;  // edge count

  bool has_edge(int u, int v) const { return (rows_[static_cast<size_t>(u)] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  uint32_t neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  std::vector<int> degree_sequence() const;        // descending

  Graph complement() const;
  Graph disjoint_union(const Graph& o) const;
  Graph join(const Graph& o) const;
  Graph without_vertex(int v) const;
  Graph induced(uint32_t mask) const;
  // perm[old] = new, a bijection on 0..n-1.
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph& o) const;
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  int n_;
  std::array<uint32_t, kMaxVertices> rows_{};
  void check_vertex(int v) const;
};

}  // namespace specq
