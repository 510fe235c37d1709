#include "specq/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "specq/graph_io.hpp"

namespace specq {
namespace {

using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// apply b first, then a
Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

struct Searcher {
  const Graph& g;
  int n;
  bool have_best = false;
  std::vector<uint64_t> best_bits;
  Perm best_labeling;
  bool have_first = false;
  std::vector<uint64_t> first_bits;
  Perm first_labeling;
  std::vector<Perm> gens;
  std::vector<int> prefix;

  explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

  // Split every multi-vertex cell by neighbor counts into the splitter masks
  // until the partition is equitable.
  void refine(std::vector<uint32_t>& cells, std::vector<uint32_t> work) const {
    while (!work.empty()) {
      uint32_t w = work.back();
      work.pop_back();
      std::vector<uint32_t> next;
      next.reserve(cells.size());
      bool split_any = false;
      for (uint32_t cell : cells) {
        if (__builtin_popcount(cell) <= 1) {
          next.push_back(cell);
          continue;
        }
        std::map<int, uint32_t> buckets;
        uint32_t m = cell;
        while (m) {
          int v = __builtin_ctz(m);
          m &= m - 1;
          buckets[__builtin_popcount(g.neighbors(v) & w)] |= 1u << v;
        }
        if (buckets.size() == 1) {
          next.push_back(cell);
          continue;
        }
        split_any = true;
        for (const auto& [cnt, mask] : buckets) {
          next.push_back(mask);
          work.push_back(mask);
        }
      }
      if (split_any) cells.swap(next);
    }
  }

  std::vector<uint64_t> leaf_bits(const Perm& seq) const {
    std::vector<uint64_t> bits((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    int pos = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(seq[static_cast<size_t>(u)], seq[static_cast<size_t>(v)]))
          bits[static_cast<size_t>(pos) / 64] |= 1ull << (63 - pos % 64);
        ++pos;
      }
    return bits;
  }

  void handle_leaf(const std::vector<uint32_t>& cells) {
    Perm seq(static_cast<size_t>(n));
    for (size_t i = 0; i < cells.size(); ++i) seq[i] = __builtin_ctz(cells[i]);
    std::vector<uint64_t> bits = leaf_bits(seq);
    Perm labeling = inverse(seq);
    if (!have_first) {
      have_first = true;
      first_bits = bits;
      first_labeling = labeling;
    } else if (bits == first_bits) {
      record_automorphism(first_labeling, labeling);
    }
    if (!have_best || bits > best_bits) {
      have_best = true;
      best_bits = std::move(bits);
      best_labeling = std::move(labeling);
      return;
    }
    if (bits == best_bits) record_automorphism(best_labeling, labeling);
  }

  void record_automorphism(const Perm& reference, const Perm& labeling) {
    Perm sigma = compose(inverse(reference), labeling);
    if (is_identity(sigma)) return;
    for (const Perm& s : gens)
      if (s == sigma) return;
    gens.push_back(std::move(sigma));
  }

  void recurse(std::vector<uint32_t> cells, std::vector<uint32_t> work) {
    refine(cells, std::move(work));
    int target = -1, target_size = n + 1;
    for (size_t i = 0; i < cells.size(); ++i) {
      int sz = __builtin_popcount(cells[i]);
      if (sz > 1 && sz < target_size) {
        target = static_cast<int>(i);
        target_size = sz;
        break;  // first smallest: cells are scanned in order, first cell of minimal size
      }
    }
    if (target == -1) {
      handle_leaf(cells);
      return;
    }
    // first cell of minimal size: rescan now that min size is known
    for (size_t i = 0; i < cells.size(); ++i) {
      int sz = __builtin_popcount(cells[i]);
      if (sz > 1 && sz < target_size) {
        target = static_cast<int>(i);
        target_size = sz;
      }
    }
    std::vector<int> candidates;
    uint32_t m = cells[static_cast<size_t>(target)];
    while (m) {
      candidates.push_back(__builtin_ctz(m));
      m &= m - 1;
    }
    std::vector<int> tried;
    for (int v : candidates) {
      if (pruned_by_orbit(v, tried)) continue;
      tried.push_back(v);
      std::vector<uint32_t> child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == target) {
          child.push_back(1u << v);
          child.push_back(cells[i] & ~(1u << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix.push_back(v);
      recurse(std::move(child), {1u << v});
      prefix.pop_back();
    }
  }

  bool pruned_by_orbit(int v, const std::vector<int>& tried) {
    if (tried.empty() || gens.empty()) return false;
    UnionFind uf(n);
    for (const Perm& s : gens) {
      bool fixes = true;
      for (int p : prefix)
        if (s[static_cast<size_t>(p)] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) uf.unite(x, s[static_cast<size_t>(x)]);
    }
    for (int u : tried)
      if (uf.find(u) == uf.find(v)) return true;
    return false;
  }
};

// Deterministic Schreier-Sims: stabilizer chain with explicit transversals.
// A generator stored at level j fixes the bases of levels 0..j-1, so the
// group at level l is generated by everything stored at levels >= l; orbits
// and Schreier elements are always taken over that union.
struct StabChain {
  struct Level {
    int base = -1;
    std::vector<Perm> gens;
    std::map<int, Perm> transversal;  // vertex -> perm mapping base to it
  };
  int n;
  std::vector<Level> levels;

  explicit StabChain(int n_) : n(n_) {}

  void add(const Perm& p) {
    auto [res, lvl] = sift(p, 0);
    if (is_identity(res)) return;
    insert(std::move(res), lvl);
    verify_down_from(static_cast<long>(lvl));
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& l : levels) o *= static_cast<int>(l.transversal.size());
    return o;
  }

 private:
  std::pair<Perm, size_t> sift(Perm p, size_t from) const {
    for (size_t l = from; l < levels.size(); ++l) {
      int img = p[static_cast<size_t>(levels[l].base)];
      auto it = levels[l].transversal.find(img);
      if (it == levels[l].transversal.end()) return {std::move(p), l};
      p = compose(inverse(it->second), p);
    }
    return {std::move(p), levels.size()};
  }

  std::vector<Perm> gens_from(size_t lvl) const {
    std::vector<Perm> out;
    for (size_t j = lvl; j < levels.size(); ++j)
      for (const Perm& g : levels[j].gens) out.push_back(g);
    return out;
  }

  void insert(Perm p, size_t lvl) {
    if (lvl == levels.size()) {
      int base = 0;
      while (p[static_cast<size_t>(base)] == base) ++base;
      Level l;
      l.base = base;
      levels.push_back(std::move(l));
    }
    levels[lvl].gens.push_back(std::move(p));
  }

  void rebuild_transversal(size_t lvl) {
    const int base = levels[lvl].base;
    const std::vector<Perm> gens = gens_from(lvl);
    std::map<int, Perm> tr;
    tr[base] = identity_perm(n);
    std::vector<int> frontier{base};
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (const Perm& s : gens) {
        int y = s[static_cast<size_t>(x)];
        if (!tr.count(y)) {
          tr[y] = compose(s, tr[x]);
          frontier.push_back(y);
        }
      }
    }
    levels[lvl].transversal = std::move(tr);
  }

  // Re-establish the chain condition at `from` and every shallower level.
  // Whenever a Schreier residue lands deeper, jump there and re-descend, so
  // on exit every level has a full orbit and all its Schreier elements sift
  // to the identity through the levels below it.
  void verify_down_from(long from) {
    long i = from;
    while (i >= 0) {
      rebuild_transversal(static_cast<size_t>(i));
      const std::vector<Perm> gens = gens_from(static_cast<size_t>(i));
      const std::map<int, Perm> tr = levels[static_cast<size_t>(i)].transversal;
      bool inserted = false;
      for (auto it = tr.begin(); it != tr.end() && !inserted; ++it) {
        for (const Perm& s : gens) {
          int y = s[static_cast<size_t>(it->first)];
          Perm schreier = compose(inverse(tr.at(y)), compose(s, it->second));
          auto [res, lvl] = sift(std::move(schreier), static_cast<size_t>(i) + 1);
          if (!is_identity(res)) {
            insert(std::move(res), lvl);
            i = static_cast<long>(lvl);
            inserted = true;
            break;
          }
        }
      }
      if (!inserted) --i;
    }
  }
};

}  // namespace

std::pair<int, int> pair_from_index(int idx, int n) {
  for (int v = 1; v < n; ++v) {
    int base = v * (v - 1) / 2;
    if (idx < base + v) return {idx - base, v};
  }
  throw std::out_of_range("pair index out of range");
}

CanonResult canonical_form(const Graph& g) {
  const int n = g.order();
  CanonResult r;
  if (n == 0) {
    r.canon_g6 = to_graph6(g);
    return r;
  }
  Searcher s(g);
  uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  s.recurse({full}, {full});
  r.labeling = s.best_labeling;
  r.generators = std::move(s.gens);
  r.canon_g6 = to_graph6(g.relabeled(r.labeling));
  UnionFind uf(n);
  for (const Perm& p : r.generators)
    for (int v = 0; v < n; ++v) uf.unite(v, p[static_cast<size_t>(v)]);
  r.orbit_of.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) r.orbit_of[static_cast<size_t>(v)] = uf.find(v);
  return r;
}

std::string canonical_g6(const Graph& g) { return canonical_form(g).canon_g6; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_g6(a) == canonical_g6(b);
}

BigInt automorphism_group_order(const Graph& g) {
  if (g.order() == 0) return 1;
  CanonResult c = canonical_form(g);
  StabChain chain(g.order());
  for (const auto& p : c.generators) chain.add(p);
  return chain.order();
}

std::vector<int> pair_orbits(int n, const std::vector<std::vector<int>>& gens) {
  const int np = n * (n - 1) / 2;
  UnionFind uf(np);
  for (const auto& s : gens) {
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        int iu = s[static_cast<size_t>(u)], iv = s[static_cast<size_t>(v)];
        if (iu > iv) std::swap(iu, iv);
        uf.unite(pair_index(u, v), pair_index(iu, iv));
      }
    }
  }
  std::vector<int> out(static_cast<size_t>(np));
  for (int i = 0; i < np; ++i) out[static_cast<size_t>(i)] = uf.find(i);
  return out;
}

}  // namespace specq
