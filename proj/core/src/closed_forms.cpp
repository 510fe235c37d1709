#include "specq/closed_forms.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "specq/graph_io.hpp"
#include "specq/roots.hpp"
#include "specq/spectra.hpp"

namespace specq {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

IntPoly cubic(const BigInt& c0, const BigInt& c1, const BigInt& c2) {
  return IntPoly({c0, c1, c2, 1});
}

struct Predictor {
  PredictedSpectrum operator()(const DoubleStarQ& f) const {
    if (f.p < 1 || f.q < 1)
      throw std::domain_error("double star needs p, q >= 1");
    const BigInt p = f.p, q = f.q;
    PredictedSpectrum s;
    if (f.p + f.q > 2) s.fixed.push_back({1, f.p + f.q - 2});
    s.fixed.push_back({0, 1});
    s.residual =
        cubic(-(p + q + 2), p * q + 2 * p + 2 * q + 5, -(p + q + 4));
    return s;
  }

  PredictedSpectrum operator()(const JoinCliqueMinusEdge& f) const {
    if (f.alpha < 1 || f.n - f.alpha < 3)
      throw std::domain_error(
          "clique-minus-edge join needs alpha >= 1 and n - alpha >= 3");
    const BigInt n = f.n, a = f.alpha;
    PredictedSpectrum s;
    if (f.alpha > 1) s.fixed.push_back({n - a, f.alpha - 1});
    if (f.n - f.alpha > 2) s.fixed.push_back({n - 2, f.n - f.alpha - 2});
    s.residual = cubic(
        -2 * (n - a - 2) * (n * n - (a + 3) * n + 4 * a),
        2 * a * a - 6 * a * n + 5 * n * n + 10 * a - 16 * n + 12,
        2 * a - 4 * n + 6);
    return s;
  }

  PredictedSpectrum operator()(const ComplementStarK2& f) const {
    if (f.n < 6) throw std::domain_error("star-K2 complement needs n >= 6");
    const BigInt n = f.n;
    PredictedSpectrum s;
    s.fixed.push_back({n - 3, 2});
    if (f.n > 5) s.fixed.push_back({n - 2, f.n - 5});
    s.residual = cubic(-2 * n * n * n + 22 * n * n - 84 * n + 120,
                       5 * n * n - 34 * n + 60, -4 * n + 12);
    return s;
  }

  PredictedSpectrum operator()(const ComplementK24MinusE& f) const {
    if (f.n < 6)
      throw std::domain_error("K24-minus-edge complement needs n >= 6");
    const BigInt n = f.n;
    PredictedSpectrum s;
    s.fixed.push_back({n - 4, 2});
    if (f.n > 6) s.fixed.push_back({n - 2, f.n - 6});
    s.residual = IntPoly(
        {2 * n * n * n * n - 34 * n * n * n + 220 * n * n - 644 * n + 708,
         -7 * n * n * n + 86 * n * n - 360 * n + 522,
         9 * n * n - 70 * n + 140, -5 * n + 18, 1});
    return s;
  }

  PredictedSpectrum operator()(const CompleteMultipartiteQ& f) const {
    if (f.parts.empty())
      throw std::domain_error("multipartite form needs at least one part");
    int n = 0;
    for (int p : f.parts) {
      if (p < 1) throw std::domain_error("multipartite parts must be >= 1");
      n += p;
    }
    PredictedSpectrum s;
    for (int p : f.parts)
      if (p > 1) s.fixed.push_back({BigInt(n - p), p - 1});
    IntPoly prod = IntPoly::constant(1);
    for (int p : f.parts) prod = prod * IntPoly::linear_root(BigInt(n - 2 * p));
    IntPoly residual = prod;
    for (int p : f.parts) {
      const IntPoly rest =
          prod.divide_exact(IntPoly::linear_root(BigInt(n - 2 * p)));
      residual = residual - IntPoly::constant(p) * rest;
    }
    s.residual = residual;
    return s;
  }
};

struct GraphBuilder {
  Graph operator()(const DoubleStarQ& f) const {
    return Graph::double_star(f.p, f.q);
  }
  Graph operator()(const JoinCliqueMinusEdge& f) const {
    return Graph::complete_minus_edge(f.n - f.alpha).join(Graph(f.alpha));
  }
  Graph operator()(const ComplementStarK2& f) const {
    return Graph::star(4)
        .disjoint_union(Graph::complete(2))
        .disjoint_union(Graph(f.n - 6))
        .complement();
  }
  Graph operator()(const ComplementK24MinusE& f) const {
    Graph k24e = Graph::complete_bipartite(2, 4);
    k24e.remove_edge(0, 2);
    return k24e.disjoint_union(Graph(f.n - 6)).complement();
  }
  Graph operator()(const CompleteMultipartiteQ& f) const {
    return Graph::complete_multipartite(f.parts);
  }
};

struct Namer {
  std::string operator()(const DoubleStarQ&) const {
    return "double_star_q_spectrum";
  }
  std::string operator()(const JoinCliqueMinusEdge&) const {
    return "clique_minus_edge_join_q_spectrum";
  }
  std::string operator()(const ComplementStarK2&) const {
    return "star_k2_complement_q_spectrum";
  }
  std::string operator()(const ComplementK24MinusE&) const {
    return "k24_minus_edge_complement_q_spectrum";
  }
  std::string operator()(const CompleteMultipartiteQ&) const {
    return "complete_multipartite_q_spectrum";
  }
};

struct ParamWriter {
  nlohmann::json operator()(const DoubleStarQ& f) const {
    return {{"p", f.p}, {"q", f.q}};
  }
  nlohmann::json operator()(const JoinCliqueMinusEdge& f) const {
    return {{"n", f.n}, {"alpha", f.alpha}};
  }
  nlohmann::json operator()(const ComplementStarK2& f) const {
    return {{"n", f.n}};
  }
  nlohmann::json operator()(const ComplementK24MinusE& f) const {
    return {{"n", f.n}};
  }
  nlohmann::json operator()(const CompleteMultipartiteQ& f) const {
    return {{"parts", f.parts}};
  }
};

}  // namespace

IntPoly PredictedSpectrum::expanded() const {
  IntPoly out = residual;
  for (const auto& [value, mult] : fixed) {
    const IntPoly factor = IntPoly::linear_root(value);
    for (int i = 0; i < mult; ++i) out = out * factor;
  }
  return out;
}

int PredictedSpectrum::total_degree() const {
  int d = residual.degree();
  for (const auto& [value, mult] : fixed) d += mult;
  return d;
}

BigInt PredictedSpectrum::trace() const {
  BigInt t = 0;
  for (const auto& [value, mult] : fixed) t += value * mult;
  const int d = residual.degree();
  if (d >= 1) t -= residual[d - 1];
  return t;
}

std::string claim_name(const ClosedFormId& id) {
  return std::visit(Namer{}, id);
}

nlohmann::json claim_params(const ClosedFormId& id) {
  return std::visit(ParamWriter{}, id);
}

Graph build_graph(const ClosedFormId& id) {
  return std::visit(GraphBuilder{}, id);
}

PredictedSpectrum predict(const ClosedFormId& id) {
  return std::visit(Predictor{}, id);
}

VerificationReport verify_closed_form(const ClosedFormId& id) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = claim_name(id);
  r.params = claim_params(id);
  const PredictedSpectrum ps = predict(id);
  const Graph g = build_graph(id);
  const IntPoly direct = charpoly_of(g, MatrixKind::SignlessLaplacian);
  const IntPoly expanded = ps.expanded();
  const bool trace_ok = ps.trace() == BigInt(2 * g.size());
  const bool poly_ok = direct == expanded;
  r.verdict = trace_ok && poly_ok;
  r.witnesses.push_back(to_graph6(g));
  if (!poly_ok)
    r.details =
        "predicted " + expanded.to_string() + ", computed " + direct.to_string();
  else if (!trace_ok)
    r.details = "trace does not match twice the edge count";
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport second_eigenvalue_location_check(int p, int q) {
  if (q < 1 || p < q)
    throw std::domain_error("location check needs p >= q >= 1");
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = "double_star_eigenvalue_locations";
  r.params = {{"p", p}, {"q", q}};
  RootIsolation iso =
      isolate_real_roots(predict(DoubleStarQ{p, q}).residual);
  const int i1 = iso.index_from_largest(1);
  const int i2 = iso.index_from_largest(2);
  const bool g1_above = iso.compare(i1, Rational(p + 2)) == Cmp::GT;
  const bool g1_below = iso.compare(i1, Rational(p + 3)) == Cmp::LT;
  const Cmp at_low = iso.compare(i2, Rational(q + 1));
  const bool g2_above = at_low != Cmp::LT;
  const bool g2_below = iso.compare(i2, Rational(q + 2)) == Cmp::LT;
  const bool equality_iff = (at_low == Cmp::EQ) == (p == q);
  r.verdict = g1_above && g1_below && g2_above && g2_below && equality_iff;
  r.witnesses.push_back(to_graph6(Graph::double_star(p, q)));
  if (!r.verdict)
    r.details = std::string("gamma1 in (p+2,p+3): ") +
                (g1_above && g1_below ? "yes" : "no") +
                "; gamma2 in [q+1,q+2): " +
                (g2_above && g2_below ? "yes" : "no") +
                "; equality iff p=q: " + (equality_iff ? "yes" : "no");
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace specq
