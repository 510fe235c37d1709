#include "specq/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace specq {
namespace {

int cap_from_env(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  int n = std::atoi(v);
  if (n < 1) return fallback;
  return std::min(n, Graph::kMaxVertices);
}

std::atomic<int> g_construction_cap{cap_from_env("SPECQ_CONSTRUCTION_CAP", 12)};
std::atomic<int> g_enum_cap{cap_from_env("SPECQ_ENUM_CAP", 10)};

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  if (n > g_construction_cap.load())
    throw CapExceeded("graph order " + std::to_string(n) + " exceeds construction cap " +
                      std::to_string(g_construction_cap.load()));
}

}  // namespace

int construction_cap() { return g_construction_cap.load(); }

void set_construction_cap(int n) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("construction cap must be between 1 and 32");
  g_construction_cap.store(n);
}

int enumeration_cap() { return g_enum_cap.load(); }

void set_enumeration_cap(int n) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("enumeration cap must be between 1 and 32");
  g_enum_cap.store(n);
}

Graph::Graph(int n) : n_(n) { check_order(n); }

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph Graph::star(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least 1 vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph Graph::complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("parts must be positive");
    n += p;
  }
  Graph g(n);
  int ustart = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int uend = ustart + parts[i];
    for (int u = ustart; u < uend; ++u)
      for (int v = uend; v < n; ++v) g.add_edge(u, v);
    ustart = uend;
  }
  return g;
}

Graph Graph::complete_minus_edge(int n) {
  if (n < 2) throw std::invalid_argument("needs at least 2 vertices");
  Graph g = complete(n);
  g.remove_edge(0, 1);
  return g;
}

Graph Graph::double_starlike(int p, int ell, int q) {
  if (p < 0 || q < 0 || ell < 1) throw std::invalid_argument("bad double starlike parameters");
  Graph g(p + ell + q);
  for (int v = 1; v < ell; ++v) g.add_edge(v - 1, v);
  for (int i = 0; i < p; ++i) g.add_edge(0, ell + i);
  for (int i = 0; i < q; ++i) g.add_edge(ell - 1, ell + p + i);
  return g;
}

int Graph::size() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += __builtin_popcount(rows_[static_cast<size_t>(v)]);
  return s / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[static_cast<size_t>(u)] |= 1u << v;
  rows_[static_cast<size_t>(v)] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<size_t>(u)] &= ~(1u << v);
  rows_[static_cast<size_t>(v)] &= ~(1u << u);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return __builtin_popcount(rows_[static_cast<size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u) {
    uint32_t above = rows_[static_cast<size_t>(u)] >> (u + 1);
    while (above) {
      int v = u + 1 + __builtin_ctz(above);
      e.emplace_back(u, v);
      above &= above - 1;
    }
  }
  return e;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph Graph::complement() const {
  Graph g(n_);
  const uint32_t all = n_ == 32 ? ~0u : (1u << n_) - 1;
  for (int v = 0; v < n_; ++v)
    g.rows_[static_cast<size_t>(v)] = (~rows_[static_cast<size_t>(v)] & all) & ~(1u << v);
  return g;
}

Graph Graph::disjoint_union(const Graph& o) const {
  Graph g(n_ + o.n_);
  for (int v = 0; v < n_; ++v) g.rows_[static_cast<size_t>(v)] = rows_[static_cast<size_t>(v)];
  for (int v = 0; v < o.n_; ++v)
    g.rows_[static_cast<size_t>(n_ + v)] = o.rows_[static_cast<size_t>(v)] << n_;
  return g;
}

Graph Graph::join(const Graph& o) const {
  Graph g = disjoint_union(o);
  for (int u = 0; u < n_; ++u)
    for (int v = n_; v < g.n_; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  const uint32_t all = n_ == 32 ? ~0u : (1u << n_) - 1;
  return induced(all & ~(1u << v));
}

Graph Graph::induced(uint32_t mask) const {
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v)
    if ((mask >> v) & 1u) keep.push_back(v);
  Graph g(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  Graph g(n_);
  for (const auto& [u, v] : edges()) g.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return g;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (rows_[static_cast<size_t>(v)] != o.rows_[static_cast<size_t>(v)]) return false;
  return true;
}

}  // namespace specq
