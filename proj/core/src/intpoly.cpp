#include "specq/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specq {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::x() { return IntPoly({BigInt(0), BigInt(1)}); }

IntPoly IntPoly::linear_root(const BigInt& r) { return IntPoly({-r, BigInt(1)}); }

IntPoly IntPoly::from_int_list(const std::vector<long long>& coeffs) {
  std::vector<BigInt> v(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.c_.size()) r[i] += a.c_[i];
    if (i < b.c_.size()) r[i] += b.c_[i];
  }
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.c_.size()) r[i] += a.c_[i];
    if (i < b.c_.size()) r[i] -= b.c_[i];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r(c_);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
  return r;
}

int IntPoly::sign_at(const Rational& x) const {
  // Horner over Z on the numerator: p(a/b) * b^deg.
  if (is_zero()) return 0;
  const BigInt a = num(x), b = den(x);
  BigInt r = 0;
  BigInt bp = 1;  // b^(deg - i) accumulated in reverse
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * a + *it * bp;
    if (it + 1 != c_.rend()) bp *= b;
  }
  return r.sign();
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<unsigned>(i));
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = specq::gcd(g, v);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  std::vector<BigInt> r(c_);
  for (auto& v : r) v /= g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) throw std::domain_error("IntPoly: inexact division");
  std::vector<Rational> rem(c_.begin(), c_.end());
  const int dd = d.degree();
  const Rational lead(d.c_.back());
  std::vector<Rational> q(static_cast<size_t>(degree() - dd) + 1);
  for (int i = degree() - dd; i >= 0; --i) {
    Rational f = rem[static_cast<size_t>(i + dd)] / lead;
    q[static_cast<size_t>(i)] = f;
    if (f != 0)
      for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i + j)] -= f * Rational(d.c_[static_cast<size_t>(j)]);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("IntPoly: inexact division (remainder)");
  std::vector<BigInt> out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (den(q[i]) != 1) throw std::domain_error("IntPoly: inexact division (fraction)");
    out[i] = num(q[i]);
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reflect_about(const Rational& c) const {
  // Horner: r(x) = p_n, then r = r*(c - x) + p_i, over Q; scale by den(c)^deg at the end.
  if (is_zero()) return IntPoly();
  std::vector<Rational> r{Rational(c_.back())};
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    std::vector<Rational> nr(r.size() + 1);
    for (size_t i = 0; i < r.size(); ++i) {
      nr[i] += r[i] * c;       // constant part of (c - x)
      nr[i + 1] -= r[i];       // -x part
    }
    nr[0] += Rational(*it);
    r = std::move(nr);
  }
  BigInt scale = 1;
  const BigInt d = den(c);
  for (int i = 0; i < degree(); ++i) scale *= d;
  std::vector<BigInt> out(r.size());
  for (size_t i = 0; i < r.size(); ++i) {
    Rational v = r[i] * Rational(scale);
    if (den(v) != 1) throw std::logic_error("IntPoly::reflect_about: scale mismatch");
    out[i] = num(v);
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shift_up(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> r(c_.size() + static_cast<size_t>(k));
  for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& v = c_[static_cast<size_t>(i)];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    first = false;
    BigInt a = specq::abs(v);
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.str());
  return out;
}

IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("signed_prem: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coeffs());
  const int db = b.degree();
  const BigInt lb = b.leading();
  int steps = a.degree() - db + 1;
  // r <- lb * r - lead(r) * b * x^k repeatedly; total multiplier lb^steps.
  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt top = r[static_cast<size_t>(k + db)];
    for (auto& v : r) v *= lb;
    if (top != 0)
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(k + j)] -= top * b[j];
  }
  IntPoly rem{std::vector<BigInt>(r.begin(), r.begin() + db)};
  // Multiplier was lb^steps; flip sign when that is negative so the result has
  // the sign of the true remainder.
  if (lb < 0 && (steps % 2) != 0) return -rem;
  return rem;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = signed_prem(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p.primitive_part();
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  return p.primitive_part().divide_exact(g).primitive_part();
}

std::vector<std::pair<IntPoly, int>> square_free_factorization(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  IntPoly f = p.primitive_part();
  IntPoly g = poly_gcd(f, f.derivative());
  // With f primitive and g primitive these divisions are exact over Z, and w/y
  // must keep their relative scale for z = y - w' to be meaningful.
  IntPoly w = f.divide_exact(g);
  IntPoly y = f.derivative().divide_exact(g);
  int i = 1;
  while (w.degree() > 0) {
    IntPoly z = y - w.derivative();
    if (z.is_zero()) {
      out.emplace_back(w.primitive_part(), i);
      break;
    }
    IntPoly ai = poly_gcd(w, z);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    w = w.divide_exact(ai);
    y = z.divide_exact(ai);
    ++i;
  }
  // Reconstruction check: product of factor^mult equals the primitive part.
  IntPoly prod = IntPoly::constant(1);
  for (const auto& [fac, mult] : out)
    for (int k = 0; k < mult; ++k) prod = prod * fac;
  if (prod.primitive_part() != f)
    throw std::logic_error("square_free_factorization: reconstruction mismatch");
  return out;
}

}  // namespace specq
