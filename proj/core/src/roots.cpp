#include "specq/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace specq {
namespace {

constexpr int kMaxRefine = 4096;  // bisection safety stop; never reached for genuine inequality

// Divide out the content without touching the sign; Sturm chains survive only
// positive scalings.
IntPoly scale_down(const IntPoly& p) {
  IntPoly q = p.primitive_part();
  if (sign_of(p.leading()) < 0) return -q;
  return q;
}

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> s;
  s.push_back(f);
  s.push_back(f.derivative());
  while (s.back().degree() > 0) {
    IntPoly r = signed_prem(s[s.size() - 2], s.back());
    if (r.is_zero()) break;
    s.push_back(scale_down(-r));
  }
  return s;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Number of distinct real roots of the (squarefree) chain head in (a, b].
int roots_in(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_bound(const IntPoly& f) {
  BigInt m = 0;
  for (const auto& c : f.coeffs()) m = std::max(m, specq::abs(c));
  const BigInt lead = specq::abs(f.leading());
  // 1 + ceil(max|c_i| / |lead|)
  return Rational(1 + (m + lead - 1) / lead);
}

IntPoly linear_factor_of(const Rational& r) {
  return IntPoly(std::vector<BigInt>{-num(r), den(r)});
}

BigInt floor_rat(const Rational& q) {
  BigInt f = num(q) / den(q);
  if (q < 0 && Rational(f) != q) --f;
  return f;
}

// Isolate all real roots of squarefree f. Exact rational roots (found at
// bisection midpoints) are emitted as points referencing their own linear
// factor and divided out of f, so the polynomial an interval root references
// has that interval's root as its only root there, with non-root endpoints.
void isolate_squarefree(IntPoly f, int mult, std::vector<IntPoly>& factors,
                        std::vector<IsolatedRoot>& out) {
  const size_t first = out.size();
  auto emit_exact = [&](const Rational& r) {
    factors.push_back(linear_factor_of(r));
    out.push_back({r, r, mult, static_cast<int>(factors.size()) - 1});
  };
  for (;;) {
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
      emit_exact(Rational(-f[0], f[1]));
      return;
    }
    if (f[0] == 0) {
      emit_exact(Rational(0));
      f = f.divide_exact(IntPoly::x());
      continue;
    }
    break;
  }
  auto chain = sturm_chain(f);
  const Rational bound = cauchy_bound(f);
  struct Seg {
    Rational a, b;
    int count;
  };
  std::vector<Seg> work;
  {
    int total = roots_in(chain, -bound, bound);
    if (total == 0) return;
    work.push_back({-bound, bound, total});
  }
  bool have_intervals = false;
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      // One root strictly inside; endpoints are cut points, never roots.
      // Monic factors have integer rational roots, so narrow below width one
      // and test the single integer candidate; that keeps every rational
      // eigenvalue an exact point rather than an interval.
      Rational lo = s.a, hi = s.b;
      bool emitted = false;
      if (f.leading() == 1) {
        while (hi - lo >= 1) {
          Rational mid = (lo + hi) / 2;
          int sm = f.sign_at(mid);
          if (sm == 0) {
            emit_exact(mid);
            emitted = true;
            break;
          }
          if (sm == f.sign_at(lo))
            lo = mid;
          else
            hi = mid;
        }
        if (!emitted) {
          BigInt k = floor_rat(lo) + 1;
          if (Rational(k) > lo && Rational(k) < hi && f.eval(k) == 0) {
            emit_exact(Rational(k));
            emitted = true;
          }
        }
      }
      if (!emitted) {
        out.push_back({lo, hi, mult, -2});
        have_intervals = true;
      }
      continue;
    }
    Rational mid = (s.a + s.b) / 2;
    if (f.sign_at(mid) == 0) {
      emit_exact(mid);
      f = f.divide_exact(linear_factor_of(mid));
      if (f.degree() == 0) break;
      chain = sturm_chain(f);
      int left = roots_in(chain, s.a, mid);
      int right = roots_in(chain, mid, s.b);
      if (left > 0) work.push_back({s.a, mid, left});
      if (right > 0) work.push_back({mid, s.b, right});
      continue;
    }
    int left = roots_in(chain, s.a, mid);
    int right = s.count - left;
    if (left > 0) work.push_back({s.a, mid, left});
    if (right > 0) work.push_back({mid, s.b, right});
  }
  if (have_intervals) {
    // Interval roots reference f with every peeled rational root divided out;
    // peels happened in disjoint segments, so each interval still holds
    // exactly one root of the final f.
    factors.push_back(f);
    const int id = static_cast<int>(factors.size()) - 1;
    for (size_t i = first; i < out.size(); ++i)
      if (out[i].factor == -2) out[i].factor = id;
  }
}

}  // namespace

int RootIsolation::count_with_multiplicity() const {
  int c = 0;
  for (const auto& r : roots_) c += r.mult;
  return c;
}

int RootIsolation::index_from_largest(int k) const {
  if (k < 1) throw std::out_of_range("root rank must be >= 1");
  int acc = 0;
  for (int i = static_cast<int>(roots_.size()) - 1; i >= 0; --i) {
    acc += roots_[static_cast<size_t>(i)].mult;
    if (acc >= k) return i;
  }
  throw std::out_of_range("root rank exceeds number of real roots");
}

void RootIsolation::refine_once(int i) {
  IsolatedRoot& r = roots_[static_cast<size_t>(i)];
  if (r.exact()) return;
  const IntPoly& f = factors_[static_cast<size_t>(r.factor)];
  Rational mid = (r.lo + r.hi) / 2;
  int sm = f.sign_at(mid);
  if (sm == 0) {
    r.lo = r.hi = mid;
    return;
  }
  // f has a single simple root inside, so the endpoint signs differ.
  int slo = f.sign_at(r.lo);
  if (slo == sm)
    r.lo = mid;
  else
    r.hi = mid;
}

void RootIsolation::refine_to(int i, const Rational& w) {
  int guard = 0;
  while (!roots_[static_cast<size_t>(i)].exact() && roots_[static_cast<size_t>(i)].width() > w) {
    refine_once(i);
    if (++guard > kMaxRefine) throw std::logic_error("refine_to: bisection guard tripped");
  }
}

double RootIsolation::approx(int i) const {
  const IsolatedRoot& r = roots_[static_cast<size_t>(i)];
  Rational mid = (r.lo + r.hi) / 2;
  return num(mid).convert_to<double>() / den(mid).convert_to<double>();
}

Cmp RootIsolation::compare(int i, const Rational& q) {
  IsolatedRoot& r = roots_[static_cast<size_t>(i)];
  if (r.exact()) {
    if (r.lo < q) return Cmp::LT;
    if (r.lo > q) return Cmp::GT;
    return Cmp::EQ;
  }
  const IntPoly& f = factors_[static_cast<size_t>(r.factor)];
  if (q > r.lo && q < r.hi && f.sign_at(q) == 0) return Cmp::EQ;
  int guard = 0;
  while (q > r.lo && q < r.hi) {
    refine_once(i);
    if (r.exact()) return compare(i, q);
    if (++guard > kMaxRefine) throw std::logic_error("compare: bisection guard tripped");
  }
  // Root lies in (lo, hi); q is outside or on the boundary.
  if (q <= r.lo) return Cmp::GT;
  return Cmp::LT;
}

RootIsolation isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  RootIsolation iso;
  if (p.degree() == 0) return iso;
  auto factors = square_free_factorization(p);
  for (const auto& [f, mult] : factors) isolate_squarefree(f, mult, iso.factors_, iso.roots_);
  std::sort(iso.roots_.begin(), iso.roots_.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  // Distinct roots can always be separated by refinement.
  bool changed = true;
  int guard = 0;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < iso.roots_.size(); ++i) {
      IsolatedRoot& a = iso.roots_[i];
      IsolatedRoot& b = iso.roots_[i + 1];
      const bool overlap = !(a.hi <= b.lo) && !(a.exact() && b.exact());
      if (overlap) {
        iso.refine_once(static_cast<int>(i));
        iso.refine_once(static_cast<int>(i) + 1);
        changed = true;
      }
    }
    if (changed) {
      std::sort(iso.roots_.begin(), iso.roots_.end(),
                [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
      if (++guard > kMaxRefine) throw std::logic_error("isolate_real_roots: separation guard tripped");
    }
  }
  return iso;
}

Cmp compare_root(const IntPoly& p, int k, const Rational& q) {
  RootIsolation iso = isolate_real_roots(p);
  int i = iso.index_from_largest(k);
  return iso.compare(i, q);
}

Cmp compare_roots(RootIsolation& a, int ia, RootIsolation& b, int ib) {
  IsolatedRoot& ra = a.roots_[static_cast<size_t>(ia)];
  IsolatedRoot& rb = b.roots_[static_cast<size_t>(ib)];
  if (ra.exact() && rb.exact()) {
    if (ra.lo < rb.lo) return Cmp::LT;
    if (ra.lo > rb.lo) return Cmp::GT;
    return Cmp::EQ;
  }
  if (ra.exact()) {
    Cmp c = b.compare(ib, ra.lo);
    return c == Cmp::LT ? Cmp::GT : (c == Cmp::GT ? Cmp::LT : Cmp::EQ);
  }
  if (rb.exact()) return a.compare(ia, rb.lo);

  const IntPoly& fa = a.factors_[static_cast<size_t>(ra.factor)];
  const IntPoly& fb = b.factors_[static_cast<size_t>(rb.factor)];
  IntPoly g = poly_gcd(fa, fb);
  std::vector<IntPoly> chain;
  if (g.degree() > 0) chain = sturm_chain(g);
  for (int guard = 0; guard <= kMaxRefine; ++guard) {
    if (g.degree() > 0) {
      // A root of g inside both intervals is a root of fa and of fb there,
      // hence equals both roots.
      Rational lo = std::max(ra.lo, rb.lo), hi = std::min(ra.hi, rb.hi);
      if (lo < hi && roots_in(chain, lo, hi) > 0) return Cmp::EQ;
    }
    if (ra.hi <= rb.lo) return Cmp::LT;
    if (rb.hi <= ra.lo) return Cmp::GT;
    a.refine_once(ia);
    b.refine_once(ib);
    if (ra.exact() || rb.exact()) return compare_roots(a, ia, b, ib);
  }
  throw std::logic_error("compare_roots: guard tripped");
}

Cmp compare_root_sum(RootIsolation& a, int ia, RootIsolation& b, int ib, const Rational& c) {
  IsolatedRoot& ra = a.roots_[static_cast<size_t>(ia)];
  IsolatedRoot& rb = b.roots_[static_cast<size_t>(ib)];
  if (ra.exact()) return b.compare(ib, c - ra.lo);
  if (rb.exact()) return a.compare(ia, c - rb.lo);

  const IntPoly& fa = a.factors_[static_cast<size_t>(ra.factor)];
  const IntPoly& fb = b.factors_[static_cast<size_t>(rb.factor)];
  // Equality means root b is a common root of fb and fa(c - x).
  IntPoly g = poly_gcd(fa.reflect_about(c), fb);
  std::vector<IntPoly> chain;
  if (g.degree() > 0) chain = sturm_chain(g);
  for (int guard = 0; guard <= kMaxRefine; ++guard) {
    Rational sum_lo = ra.lo + rb.lo, sum_hi = ra.hi + rb.hi;
    if (g.degree() > 0) {
      // Certificate window: roots of g inside I_b intersected with c - I_a.
      Rational lo = std::max(rb.lo, Rational(c - ra.hi));
      Rational hi = std::min(rb.hi, Rational(c - ra.lo));
      if (lo < hi && roots_in(chain, lo, hi) > 0) return Cmp::EQ;
      if (sum_hi < c) return Cmp::LT;
      if (sum_lo > c) return Cmp::GT;
    } else {
      // Roots sit strictly inside their intervals.
      if (sum_hi <= c) return Cmp::LT;
      if (sum_lo >= c) return Cmp::GT;
    }
    a.refine_once(ia);
    b.refine_once(ib);
    if (ra.exact() || rb.exact()) return compare_root_sum(a, ia, b, ib, c);
  }
  throw std::logic_error("compare_root_sum: guard tripped");
}

int sign_at_root(const IntPoly& q, RootIsolation& a, int ia) {
  if (q.is_zero()) return 0;
  if (q.degree() == 0) return sign_of(q[0]);
  IsolatedRoot& r = a.roots_[static_cast<size_t>(ia)];
  if (r.exact()) return q.sign_at(r.lo);
  const IntPoly& f = a.factors_[static_cast<size_t>(r.factor)];
  IntPoly g = poly_gcd(f, q);
  std::vector<IntPoly> chain;
  if (g.degree() > 0) chain = sturm_chain(g);
  auto qchain = sturm_chain(square_free_part(q));
  for (int guard = 0; guard <= kMaxRefine; ++guard) {
    if (g.degree() > 0 && roots_in(chain, r.lo, r.hi) > 0) return 0;
    int slo = q.sign_at(r.lo), shi = q.sign_at(r.hi);
    if (slo == shi && slo != 0 && roots_in(qchain, r.lo, r.hi) == 0) return slo;
    a.refine_once(ia);
    if (r.exact()) return q.sign_at(r.lo);
  }
  throw std::logic_error("sign_at_root: guard tripped");
}

}  // namespace specq
