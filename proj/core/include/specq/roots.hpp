#pragma once

#include <vector>

#include "specq/bigint.hpp"
#include "specq/intpoly.hpp"

namespace specq {

enum class Cmp { LT, EQ, GT };

// One isolated real root. lo == hi means the root is the exact rational value;
// otherwise the open interval (lo, hi) contains exactly one real root of the
// polynomial (across all factors), and factor identifies the squarefree factor
// it belongs to.
struct IsolatedRoot {
  Rational lo, hi;
  int mult = 1;
  int factor = -1;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

// All real roots of an integer polynomial, isolated into pairwise disjoint
// intervals, sorted ascending, with multiplicities from the squarefree
// decomposition. Intervals can be refined on demand; every query is exact.
class RootIsolation {
 public:
  RootIsolation() = default;
  const std::vector<IsolatedRoot>& roots() const { return roots_; }
  const IntPoly& factor(int i) const { return factors_[static_cast<size_t>(i)]; }
  int distinct_count() const { return static_cast<int>(roots_.size()); }
  int count_with_multiplicity() const;

  // Index into roots() of the k-th largest root, k 1-based, counted with
  // multiplicity. Throws std::out_of_range when k exceeds the root count.
  int index_from_largest(int k) const;

  // Bisect the isolating interval of root i until its width is <= w.
  void refine_to(int i, const Rational& w);
  // One bisection step.
  void refine_once(int i);

  double approx(int i) const;

  // Exact comparison of root i against a rational.
  Cmp compare(int i, const Rational& q);

  friend RootIsolation isolate_real_roots(const IntPoly& p);
  friend Cmp compare_roots(RootIsolation& a, int ia, RootIsolation& b, int ib);
  friend Cmp compare_root_sum(RootIsolation& a, int ia, RootIsolation& b, int ib, const Rational& c);
  friend int sign_at_root(const IntPoly& q, RootIsolation& a, int ia);

 private:
  std::vector<IsolatedRoot> roots_;
  std::vector<IntPoly> factors_;
};

RootIsolation isolate_real_roots(const IntPoly& p);

// k-th largest real root of p (1-based, with multiplicity) versus rational q.
Cmp compare_root(const IntPoly& p, int k, const Rational& q);

// Root a versus root b; exact, decides equality through a gcd certificate.
Cmp compare_roots(RootIsolation& a, int ia, RootIsolation& b, int ib);

// (root a + root b) versus rational c.
Cmp compare_root_sum(RootIsolation& a, int ia, RootIsolation& b, int ib, const Rational& c);

// Exact sign of q evaluated at root ia of a: -1, 0, +1.
int sign_at_root(const IntPoly& q, RootIsolation& a, int ia);

}  // namespace specq
