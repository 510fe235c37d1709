#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specq/bigint.hpp"

namespace specq {

// Dense univariate polynomial over Z. Coefficients are stored constant term
// first with no trailing zeros; the zero polynomial has an empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(BigInt v);
  static IntPoly x();
  // (x - r)
  static IntPoly linear_root(const BigInt& r);
  static IntPoly from_int_list(const std::vector<long long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  IntPoly derivative() const;
  BigInt content() const;      // gcd of coefficients, nonnegative; sign of leading kept out
  IntPoly primitive_part() const;  // content removed, leading coefficient made positive
  // Exact division; throws std::domain_error if the division leaves a remainder
  // or a fractional coefficient.
  IntPoly divide_exact(const IntPoly& d) const;
  // p(c - x) scaled by den(c)^deg so the result stays in Z[x].
  IntPoly reflect_about(const Rational& c) const;
  // Multiply variable: p(x) -> p(x) * x^k.
  IntPoly shift_up(int k) const;

  std::string to_string() const;               // human form, highest degree first
  std::vector<std::string> coeff_strings() const;  // decimal, constant term first

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Pseudo-remainder adjusted so its sign equals the sign of the true rational
// remainder of a by b (needed for Sturm sequences).
IntPoly signed_prem(const IntPoly& a, const IntPoly& b);
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive leading coeff
IntPoly square_free_part(const IntPoly& p);
// Yun decomposition: list of (factor, multiplicity), factors primitive,
// squarefree, pairwise coprime, multiplicities strictly increasing.
std::vector<std::pair<IntPoly, int>> square_free_factorization(const IntPoly& p);

}  // namespace specq
