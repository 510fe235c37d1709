#pragma once

#include <vector>

#include "specq/bigint.hpp"
#include "specq/intpoly.hpp"

namespace specq {

// Dense square matrix over Z.
class IntMatrix {
 public:
  IntMatrix() : n_(0) {}
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}

  int order() const { return n_; }
  BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  IntMatrix minor_without(int row, int col) const;
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_;
  std::vector<BigInt> a_;
};

// Characteristic polynomial det(xI - M), monic, via the division-free
// Berkowitz recursion. Independent of determinant() below by construction.
IntPoly charpoly(const IntMatrix& m);

// Fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& m);

// Exact rank over Q (Gaussian elimination on rationals).
int rank_exact(const IntMatrix& m);
int nullity(const IntMatrix& m);

// Multiplicity of lambda as an eigenvalue of M, computed as nullity(M - lambda I).
int integer_eigenvalue_multiplicity(const IntMatrix& m, const BigInt& lambda);

}  // namespace specq
