#include "specq/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace specq {
namespace {

// Berkowitz: p_k = T_k p_{k-1} where T_k is the (k+1) x k lower-triangular
// Toeplitz matrix built from the k-th row/column border of the leading minor.
// Coefficients are kept highest degree first. Division-free.
template <class I>
std::vector<I> berkowitz(const std::vector<I>& m, int n) {
  auto at = [&](int i, int j) -> const I& { return m[static_cast<size_t>(i) * n + j]; };
  std::vector<I> v{I(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<I> t(static_cast<size_t>(k) + 1);
    t[0] = I(1);
    t[1] = -at(k - 1, k - 1);
    if (k >= 2) {
      std::vector<I> w(static_cast<size_t>(k) - 1);
      for (int i = 0; i < k - 1; ++i) w[static_cast<size_t>(i)] = at(i, k - 1);
      for (int j = 2; j <= k; ++j) {
        I dot = I(0);
        for (int i = 0; i < k - 1; ++i) dot += at(k - 1, i) * w[static_cast<size_t>(i)];
        t[static_cast<size_t>(j)] = -dot;
        if (j < k) {
          std::vector<I> w2(static_cast<size_t>(k) - 1);
          for (int i = 0; i < k - 1; ++i) {
            I s = I(0);
            for (int l = 0; l < k - 1; ++l) s += at(i, l) * w[static_cast<size_t>(l)];
            w2[static_cast<size_t>(i)] = s;
          }
          w.swap(w2);
        }
      }
    }
    std::vector<I> v2(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
      I s = I(0);
      const int jmax = std::min(i, k - 1);
      for (int j = 0; j <= jmax; ++j) s += t[static_cast<size_t>(i - j)] * v[static_cast<size_t>(j)];
      v2[static_cast<size_t>(i)] = s;
    }
    v.swap(v2);
  }
  return v;
}

// Max absolute row sum. Bounds the spectral radius and, via the estimates in
// charpoly()/determinant(), every intermediate of the fixed-width kernels.
bool rowsum_below(const IntMatrix& m, long long bound) {
  for (int i = 0; i < m.order(); ++i) {
    BigInt s = 0;
    for (int j = 0; j < m.order(); ++j) s += specq::abs(m.at(i, j));
    if (s > bound) return false;
  }
  return true;
}

template <class I>
std::vector<I> to_flat(const IntMatrix& m) {
  const int n = m.order();
  std::vector<I> f(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f[static_cast<size_t>(i) * n + j] = static_cast<I>(m.at(i, j).convert_to<long long>());
  return f;
}

template <class I>
BigInt to_big(const I& v) {
  return BigInt(v);
}

template <>
BigInt to_big<Int128>(const Int128& v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<unsigned long long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long long>(u);
  return neg ? -r : r;
}

template <class I>
BigInt bareiss_det(std::vector<I> a, int n) {
  if (n == 0) return BigInt(1);
  auto at = [&](int i, int j) -> I& { return a[static_cast<size_t>(i) * n + j]; };
  I denom = I(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == I(0)) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != I(0)) {
          p = i;
          break;
        }
      if (p < 0) return BigInt(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / denom;
    denom = at(k, k);
  }
  BigInt d = to_big(at(n - 1, n - 1));
  return sign > 0 ? d : -d;
}

}  // namespace

IntMatrix IntMatrix::minor_without(int row, int col) const {
  IntMatrix r(n_ - 1);
  for (int i = 0, ri = 0; i < n_; ++i) {
    if (i == row) continue;
    for (int j = 0, rj = 0; j < n_; ++j) {
      if (j == col) continue;
      r.at(ri, rj) = at(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

IntPoly charpoly(const IntMatrix& m) {
  const int n = m.order();
  if (n == 0) return IntPoly::constant(1);
  std::vector<BigInt> desc;  // highest degree first
  // With row sums <= R: |coeff| <= (1+R)^n and |border dot| <= R^(n+1), so the
  // products stay under 2^126 for (n, R) = (12, 24) and under 2^254 for (20, 64).
  if (n <= 12 && rowsum_below(m, 24)) {
    auto v = berkowitz<Int128>(to_flat<Int128>(m), n);
    desc.reserve(v.size());
    for (const auto& x : v) desc.push_back(to_big(x));
  } else {
    bool done = false;
    if (n <= 20 && rowsum_below(m, 64)) {
      try {
        auto v = berkowitz<Int256>(to_flat<Int256>(m), n);
        desc.reserve(v.size());
        for (const auto& x : v) desc.push_back(to_big(x));
        done = true;
      } catch (const std::runtime_error&) {
        desc.clear();
      }
    }
    if (!done) {
      std::vector<BigInt> flat(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = m.at(i, j);
      desc = berkowitz<BigInt>(flat, n);
    }
  }
  std::reverse(desc.begin(), desc.end());
  return IntPoly(std::move(desc));
}

BigInt determinant(const IntMatrix& m) {
  // Bareiss intermediates are minors, bounded by (max l2 row norm)^n, and the
  // row-sum gates keep their pairwise products inside the fixed widths.
  const int n = m.order();
  if (n <= 12 && rowsum_below(m, 24)) return bareiss_det(to_flat<Int128>(m), n);
  if (n <= 20 && rowsum_below(m, 64)) {
    try {
      return bareiss_det(to_flat<Int256>(m), n);
    } catch (const std::runtime_error&) {
    }
  }
  std::vector<BigInt> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = m.at(i, j);
  return bareiss_det(std::move(flat), n);
}

int rank_exact(const IntMatrix& m) {
  const int n = m.order();
  std::vector<std::vector<Rational>> a(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(m.at(i, j));
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(piv)]);
    const Rational p = a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    for (int i = rank + 1; i < n; ++i) {
      const Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] / p;
      if (f == 0) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

int nullity(const IntMatrix& m) { return m.order() - rank_exact(m); }

int integer_eigenvalue_multiplicity(const IntMatrix& m, const BigInt& lambda) {
  IntMatrix s = m;
  for (int i = 0; i < m.order(); ++i) s.at(i, i) -= lambda;
  return nullity(s);
}

}  // namespace specq
