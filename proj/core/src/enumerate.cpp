#include "specq/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "specq/canonical.hpp"
#include "specq/intmatrix.hpp"
#include "specq/roots.hpp"
#include "specq/spectra.hpp"
#include "specq/structure.hpp"

namespace specq {

namespace {

// Charpoly cost per emitted graph dominates, so spectral filters get a
// tighter ceiling than plain structural enumeration.
constexpr int kSpectralCap = 9;

bool cmp_ok(const std::string& op, Cmp c) {
  if (op == "<") return c == Cmp::LT;
  if (op == "<=") return c != Cmp::GT;
  if (op == "=" || op == "==") return c == Cmp::EQ;
  if (op == "!=") return c != Cmp::EQ;
  if (op == ">=") return c != Cmp::LT;
  return c == Cmp::GT;
}

bool int_cmp_ok(const std::string& op, long long a, long long b) {
  if (op == "<") return a < b;
  if (op == "<=") return a <= b;
  if (op == "=" || op == "==") return a == b;
  if (op == "!=") return a != b;
  if (op == ">=") return a >= b;
  return a > b;
}

struct Child {
  Graph g;
  std::vector<std::vector<int>> gens;
};

// Canonical-augmentation search over one filter. Structural conditions that
// survive edge deletion (bipartite, forest, cycle budget, degree domination,
// connectivity budget) prune partial graphs; exact conditions are re-checked
// at emission.
class Enumerator {
 public:
  explicit Enumerator(const EnumerationFilter& f) : f_(f), n_(f.n) {
    if (f.degree_sequence) {
      std::vector<int> d = *f.degree_sequence;
      std::sort(d.begin(), d.end(), std::greater<int>());
      if (n_ == 0) n_ = static_cast<int>(d.size());
      if (static_cast<int>(d.size()) != n_) {
        dead_ = true;
        return;
      }
      long long sum = 0;
      for (int x : d) {
        if (x < 0 || x > n_ - 1) {
          dead_ = true;
          return;
        }
        sum += x;
      }
      if (!is_graphical(d)) {
        dead_ = true;
        return;
      }
      const int m = static_cast<int>(sum / 2);
      if (f.edges && *f.edges != m) {
        dead_ = true;
        return;
      }
      exact_edges_ = m;
      degrees_ = std::move(d);
    } else if (f.edges) {
      exact_edges_ = *f.edges;
    }
    if (f.tree) {
      if (exact_edges_ && *exact_edges_ != n_ - 1) {
        dead_ = true;
        return;
      }
      exact_edges_ = n_ - 1;
      max_cycles_ = 0;
      need_connected_ = true;
    }
    if (f.unicyclic) {
      if (exact_edges_ && *exact_edges_ != n_) {
        dead_ = true;
        return;
      }
      exact_edges_ = n_;
      max_cycles_ = std::min(max_cycles_, 1);
      need_connected_ = true;
    }
    if (f.connected) need_connected_ = true;
    prune_nonbipartite_ = f.bipartite;
    const int all = n_ * (n_ - 1) / 2;
    if (exact_edges_ && (*exact_edges_ < 0 || *exact_edges_ > all)) {
      dead_ = true;
      return;
    }
    max_edges_ = exact_edges_ ? *exact_edges_ : all;
  }

  int order() const { return n_; }

  void stream(int jobs, const std::function<void(const Graph&)>& sink) const {
    if (dead_) return;
    Graph root(n_);
    std::vector<std::vector<int>> root_gens = canonical_form(root).generators;
    if (jobs <= 1) {
      dfs(root, root_gens, sink);
      return;
    }
    std::vector<Child> frontier = seed(std::move(root), std::move(root_gens),
                                       jobs, [&](const Graph& g) { sink(g); });
    if (frontier.empty()) return;
    std::vector<std::vector<Graph>> results(frontier.size());
    std::vector<unsigned char> done(frontier.size(), 0);
    std::atomic<size_t> head{0};
    std::mutex mu;
    std::condition_variable cv;
    auto worker = [&] {
      for (;;) {
        const size_t i = head.fetch_add(1);
        if (i >= frontier.size()) return;
        std::vector<Graph> buf;
        dfs(frontier[i].g, frontier[i].gens,
            [&](const Graph& g) { buf.push_back(g); });
        {
          std::lock_guard<std::mutex> lk(mu);
          results[i] = std::move(buf);
          done[i] = 1;
        }
        cv.notify_all();
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    {
      std::unique_lock<std::mutex> lk(mu);
      for (size_t i = 0; i < frontier.size(); ++i) {
        cv.wait(lk, [&] { return done[i] != 0; });
        std::vector<Graph> buf = std::move(results[i]);
        lk.unlock();
        for (const Graph& g : buf) sink(g);
        lk.lock();
      }
    }
    for (auto& t : pool) t.join();
  }

  long long count(int jobs) const {
    if (dead_) return 0;
    long long total = 0;
    Graph root(n_);
    std::vector<std::vector<int>> root_gens = canonical_form(root).generators;
    if (jobs <= 1) {
      dfs(root, root_gens, [&](const Graph&) { ++total; });
      return total;
    }
    std::vector<Child> frontier = seed(std::move(root), std::move(root_gens),
                                       jobs, [&](const Graph&) { ++total; });
    if (frontier.empty()) return total;
    std::atomic<long long> par{0};
    std::atomic<size_t> head{0};
    auto worker = [&] {
      long long mine = 0;
      for (;;) {
        const size_t i = head.fetch_add(1);
        if (i >= frontier.size()) break;
        dfs(frontier[i].g, frontier[i].gens, [&](const Graph&) { ++mine; });
      }
      par += mine;
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return total + par.load();
  }

 private:
  // Expands level by level, emitting along the way, until the frontier is
  // wide enough to split across jobs. Emits everything and returns empty
  // when the search bottoms out first.
  std::vector<Child> seed(Graph root, std::vector<std::vector<int>> root_gens,
                          int jobs,
                          const std::function<void(const Graph&)>& sink) const {
    std::vector<Child> frontier;
    frontier.push_back(Child{std::move(root), std::move(root_gens)});
    while (static_cast<int>(frontier.size()) < 4 * jobs) {
      std::vector<Child> next;
      for (const Child& it : frontier) {
        if (emit_ok(it.g)) sink(it.g);
        for (Child& c : expand(it.g, it.gens)) next.push_back(std::move(c));
      }
      if (next.empty()) return {};
      frontier = std::move(next);
    }
    return frontier;
  }

  void dfs(const Graph& g, const std::vector<std::vector<int>>& gens,
           const std::function<void(const Graph&)>& sink) const {
    if (emit_ok(g)) sink(g);
    if (g.size() >= max_edges_) return;
    for (Child& c : expand(g, gens)) dfs(c.g, c.gens, sink);
  }

  // One child per automorphism orbit of non-edges; a child survives only if
  // the added edge lies in the orbit of its canonical deletion edge (the
  // edge with the highest canonical pair index), which makes every
  // isomorphism class reachable exactly once.
  std::vector<Child> expand(const Graph& g,
                            const std::vector<std::vector<int>>& gens) const {
    std::vector<Child> out;
    if (g.size() >= max_edges_) return out;
    const std::vector<int> po = pair_orbits(n_, gens);
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(u, v)) continue;
        const int pi = pair_index(u, v);
        if (po[static_cast<size_t>(pi)] != pi) continue;
        Graph child = g;
        child.add_edge(u, v);
        if (!admissible(child)) continue;
        CanonResult canon = canonical_form(child);
        int best = -1;
        int del = -1;
        for (auto [a, b] : child.edges()) {
          int ca = canon.labeling[static_cast<size_t>(a)];
          int cb = canon.labeling[static_cast<size_t>(b)];
          if (ca > cb) std::swap(ca, cb);
          const int idx = pair_index(ca, cb);
          if (idx > best) {
            best = idx;
            del = pair_index(a, b);
          }
        }
        const std::vector<int> cpo = pair_orbits(n_, canon.generators);
        if (cpo[static_cast<size_t>(pi)] != cpo[static_cast<size_t>(del)])
          continue;
        out.push_back(Child{std::move(child), std::move(canon.generators)});
      }
    }
    return out;
  }

  bool admissible(const Graph& g) const {
    const StructureFacts facts = analyze(g);
    if (prune_nonbipartite_ && !facts.bipartite) return false;
    if (g.size() - n_ + facts.components > max_cycles_) return false;
    if (exact_edges_ && need_connected_ &&
        *exact_edges_ - g.size() < facts.components - 1)
      return false;
    if (degrees_) {
      const std::vector<int> d = g.degree_sequence();
      for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > (*degrees_)[i]) return false;
    }
    return true;
  }

  bool emit_ok(const Graph& g) const {
    if (exact_edges_ && g.size() != *exact_edges_) return false;
    const StructureFacts facts = analyze(g);
    if (need_connected_ && !facts.connected) return false;
    if (f_.bipartite && !facts.bipartite) return false;
    if (f_.tree && !facts.tree) return false;
    if (f_.unicyclic && !facts.unicyclic) return false;
    if (degrees_ && g.degree_sequence() != *degrees_) return false;
    return true;
  }

  EnumerationFilter f_;
  int n_ = 0;
  bool dead_ = false;
  std::optional<int> exact_edges_;
  std::optional<std::vector<int>> degrees_;
  bool need_connected_ = false;
  bool prune_nonbipartite_ = false;
  int max_cycles_ = std::numeric_limits<int>::max();
  int max_edges_ = 0;
};

// Exact edge counts past half the possible edges run on complements, whose
// classes correspond one to one; only valid when no structural flag rides
// along, since those do not commute with complementation.
bool use_complement(const EnumerationFilter& f) {
  if (!f.edges) return false;
  if (f.connected || f.bipartite || f.tree || f.unicyclic) return false;
  if (f.degree_sequence) return false;
  const int all = f.n * (f.n - 1) / 2;
  return 2 * *f.edges > all;
}

int effective_order(const EnumerationFilter& f) {
  if (f.n == 0 && f.degree_sequence)
    return static_cast<int>(f.degree_sequence->size());
  return f.n;
}

void check_caps(const EnumerationFilter& f) {
  const int n = effective_order(f);
  if (n < 0) throw std::invalid_argument("enumeration order is negative");
  if (n > enumeration_cap())
    throw CapExceeded("order " + std::to_string(n) +
                      " exceeds the enumeration cap " +
                      std::to_string(enumeration_cap()));
  if (f.spectral && n > kSpectralCap)
    throw CapExceeded("order " + std::to_string(n) +
                      " exceeds the spectral-filter cap " +
                      std::to_string(kSpectralCap));
}

}  // namespace

bool is_graphical(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  const int n = static_cast<int>(degrees.size());
  if (n == 0) return true;
  if (degrees.front() >= n || degrees.back() < 0) return false;
  long long sum = 0;
  for (int x : degrees) sum += x;
  if (sum % 2 != 0) return false;
  for (int k = 1; k <= n; ++k) {
    long long lhs = 0;
    for (int i = 0; i < k; ++i) lhs += degrees[static_cast<size_t>(i)];
    long long rhs = 1LL * k * (k - 1);
    for (int i = k; i < n; ++i)
      rhs += std::min(degrees[static_cast<size_t>(i)], k);
    if (lhs > rhs) return false;
  }
  return true;
}

std::function<bool(const Graph&)> parse_spectral_predicate(
    const std::string& text) {
  static const std::regex eig(
      R"(^\s*(gamma|mu|lambda)\s*(\d+)\s*(<=|>=|==|!=|<|>|=)\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex mult(
      R"(^\s*mult([QL])\s*\(\s*(-?\d+)\s*\)\s*(<=|>=|==|!=|<|>|=)\s*(-?\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, eig)) {
    const std::string name = m[1].str();
    const MatrixKind kind = name == "gamma"  ? MatrixKind::SignlessLaplacian
                            : name == "mu"   ? MatrixKind::Laplacian
                                             : MatrixKind::Adjacency;
    const int k = std::stoi(m[2].str());
    if (k < 1)
      throw std::invalid_argument("eigenvalue index must be positive: " + text);
    const std::string op = m[3].str();
    const BigInt num(m[4].str());
    const BigInt den = m[5].matched ? BigInt(m[5].str()) : BigInt(1);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    const Rational q(num, den);
    return [kind, k, op, q](const Graph& g) {
      RootIsolation iso = isolate_real_roots(charpoly_of(g, kind));
      if (k > iso.count_with_multiplicity()) return false;
      const int i = iso.index_from_largest(k);
      return cmp_ok(op, iso.compare(i, q));
    };
  }
  if (std::regex_match(text, m, mult)) {
    const MatrixKind kind = m[1].str() == "Q" ? MatrixKind::SignlessLaplacian
                                              : MatrixKind::Laplacian;
    const BigInt value(m[2].str());
    const std::string op = m[3].str();
    const long long bound = std::stoll(m[4].str());
    return [kind, value, op, bound](const Graph& g) {
      const int mu = integer_eigenvalue_multiplicity(matrix_of(g, kind), value);
      return int_cmp_ok(op, mu, bound);
    };
  }
  throw std::invalid_argument("cannot parse spectral predicate: " + text);
}

void enumerate_stream(const EnumerationFilter& filter,
                      const std::function<void(const Graph&)>& yield,
                      int jobs) {
  check_caps(filter);
  if (jobs < 1) jobs = 1;
  EnumerationFilter inner = filter;
  inner.spectral = nullptr;
  const bool flip = use_complement(filter);
  if (flip) inner.edges = filter.n * (filter.n - 1) / 2 - *filter.edges;
  const Enumerator e(inner);
  e.stream(jobs, [&](const Graph& g) {
    const Graph out = flip ? g.complement() : g;
    if (filter.spectral && !filter.spectral(out)) return;
    yield(out);
  });
}

std::vector<Graph> enumerate_sorted(const EnumerationFilter& filter,
                                    int jobs) {
  std::vector<Graph> out;
  enumerate_stream(
      filter, [&](const Graph& g) { out.push_back(g); }, jobs);
  std::vector<std::string> key(out.size());
  for (size_t i = 0; i < out.size(); ++i) key[i] = canonical_g6(out[i]);
  std::vector<size_t> idx(out.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return key[a] < key[b]; });
  std::vector<Graph> sorted;
  sorted.reserve(out.size());
  for (size_t i : idx) sorted.push_back(out[i]);
  return sorted;
}

long long count_classes(const EnumerationFilter& filter, int jobs) {
  check_caps(filter);
  if (jobs < 1) jobs = 1;
  if (!filter.spectral) {
    EnumerationFilter inner = filter;
    if (use_complement(filter))
      inner.edges = filter.n * (filter.n - 1) / 2 - *filter.edges;
    return Enumerator(inner).count(jobs);
  }
  long long total = 0;
  enumerate_stream(
      filter, [&](const Graph&) { ++total; }, jobs);
  return total;
}

std::vector<Graph> realizations(const std::vector<int>& degree_sequence) {
  EnumerationFilter f;
  f.n = static_cast<int>(degree_sequence.size());
  f.degree_sequence = degree_sequence;
  return enumerate_sorted(f);
}

}  // namespace specq
