#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "specq/intmatrix.hpp"
#include "specq/intpoly.hpp"
#include "specq/roots.hpp"

using namespace specq;

namespace {

IntPoly P(const std::vector<long long>& c) { return IntPoly::from_int_list(c); }

IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  IntPoly a = P({-1, 1});  // x - 1
  IntPoly b = P({1, 1});   // x + 1
  CHECK_EQ(a * b, P({-1, 0, 1}));
  CHECK_EQ(a + b, P({0, 2}));
  CHECK_EQ(b - b, IntPoly());
  CHECK(IntPoly().is_zero());
  CHECK_EQ((a * b).degree(), 2);
  CHECK_EQ(IntPoly::linear_root(3), P({-3, 1}));
  CHECK_EQ(IntPoly::x(), P({0, 1}));
  CHECK_EQ(IntPoly::constant(7), P({7}));
  CHECK(P({-4, 9, -6, 1}).is_monic());
  CHECK_EQ(P({-1, 0, 1}).eval(BigInt(3)), BigInt(8));
  CHECK_EQ(P({-1, 0, 1}).eval(Rational(1, 2)), Rational(-3, 4));
  CHECK_EQ(P({-2, 0, 1}).sign_at(Rational(3, 2)), 1);
  CHECK_EQ(P({-2, 0, 1}).sign_at(Rational(7, 5)), -1);
  CHECK_EQ(P({-4, 4, 8}).content(), BigInt(4));
  CHECK_EQ(P({-4, 4, 8}).primitive_part(), P({-1, 1, 2}));
  CHECK_EQ(P({4, -4, -8}).primitive_part(), P({-1, 1, 2}));
  CHECK_EQ(P({0, 0, 5}).derivative(), P({0, 10}));
  CHECK_EQ(P({-3, 1}).shift_up(2), P({0, 0, -3, 1}));
}

TEST_CASE("exact division") {
  IntPoly prod = P({-1, 1}) * P({2, 3}) * P({5, 0, 1});
  CHECK_EQ(prod.divide_exact(P({2, 3})), P({-1, 1}) * P({5, 0, 1}));
  CHECK_THROWS_AS(P({-1, 0, 1}).divide_exact(P({-2, 1})), std::domain_error);
}

TEST_CASE("reflection about a rational point") {
  CHECK_EQ(P({0, 0, 1}).reflect_about(Rational(1)), P({1, -2, 1}));
  CHECK_EQ(P({0, 0, 1}).reflect_about(Rational(1, 2)), P({1, -4, 4}));
  // reflect moves root r to c - r
  IntPoly f = P({-6, 1});  // root 6
  IntPoly g = f.reflect_about(Rational(10));
  CHECK_EQ(g.sign_at(Rational(4)), 0);
}

TEST_CASE("gcd and squarefree structure") {
  IntPoly g = poly_gcd(P({-1, 1}) * P({-2, 1}), P({-1, 1}) * P({-3, 1}));
  CHECK_EQ(g, P({-1, 1}));
  CHECK_EQ(poly_gcd(P({-2, 0, 1}), P({-3, 0, 1})).degree(), 0);
  CHECK_EQ(square_free_part(P({2, -3, 0, 1})), P({-2, 1, 1}));  // (x+2)(x-1)^2 -> (x+2)(x-1)

  auto fac = square_free_factorization(P({2, -3, 0, 1}));
  REQUIRE_EQ(fac.size(), 2);
  CHECK_EQ(fac[0].first, P({2, 1}));
  CHECK_EQ(fac[0].second, 1);
  CHECK_EQ(fac[1].first, P({-1, 1}));
  CHECK_EQ(fac[1].second, 2);

  auto cube = square_free_factorization(P({-1, 3, -3, 1}));
  REQUIRE_EQ(cube.size(), 1);
  CHECK_EQ(cube[0].first, P({-1, 1}));
  CHECK_EQ(cube[0].second, 3);

  // (x^2-7x+8)(x-3)(x-1)^2
  auto quint = square_free_factorization(P({-24, 77, -92, 50, -12, 1}));
  REQUIRE_EQ(quint.size(), 2);
  CHECK_EQ(quint[0].first, P({-24, 29, -10, 1}));
  CHECK_EQ(quint[0].second, 1);
  CHECK_EQ(quint[1].first, P({-1, 1}));
  CHECK_EQ(quint[1].second, 2);
}

TEST_CASE("characteristic polynomials of small fixed matrices") {
  // path on 3 vertices, adjacency
  CHECK_EQ(charpoly(mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})), P({0, -2, 0, 1}));
  // triangle, signless Laplacian
  CHECK_EQ(charpoly(mat({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}})), P({-4, 9, -6, 1}));
  // triangle, Laplacian
  CHECK_EQ(charpoly(mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), P({0, 9, -6, 1}));
  // K4, signless Laplacian
  CHECK_EQ(charpoly(mat({{3, 1, 1, 1}, {1, 3, 1, 1}, {1, 1, 3, 1}, {1, 1, 1, 3}})),
           P({48, -80, 48, -12, 1}));
  CHECK_EQ(charpoly(IntMatrix(0)), P({1}));
  CHECK_EQ(charpoly(mat({{5}})), P({-5, 1}));
}

TEST_CASE("determinant and rank") {
  CHECK_EQ(determinant(mat({{1, 2}, {3, 4}})), BigInt(-2));
  CHECK_EQ(determinant(mat({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}})), BigInt(4));
  CHECK_EQ(determinant(mat({{1, 2}, {2, 4}})), BigInt(0));
  CHECK_EQ(determinant(IntMatrix(0)), BigInt(1));
  CHECK_EQ(rank_exact(mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), 2);
  CHECK_EQ(nullity(mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), 1);
  CHECK_EQ(rank_exact(mat({{1, 2}, {2, 4}})), 1);
  CHECK_EQ(rank_exact(IntMatrix(3)), 0);
}

TEST_CASE("integer eigenvalue multiplicity") {
  IntMatrix q = mat({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  CHECK_EQ(integer_eigenvalue_multiplicity(q, 1), 2);
  CHECK_EQ(integer_eigenvalue_multiplicity(q, 4), 1);
  CHECK_EQ(integer_eigenvalue_multiplicity(q, 2), 0);
  IntMatrix l = mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK_EQ(integer_eigenvalue_multiplicity(l, 0), 1);
  CHECK_EQ(integer_eigenvalue_multiplicity(l, 3), 2);
}

TEST_CASE("charpoly agrees with determinant and trace on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    IntMatrix m(n);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = d(rng);
        if (i == j) tr += m.at(i, j);
      }
    IntPoly cp = charpoly(m);
    REQUIRE_EQ(cp.degree(), n);
    CHECK(cp.is_monic());
    BigInt c0 = cp[0];
    if (n % 2 == 1) c0 = -c0;
    CHECK_EQ(c0, determinant(m));
    CHECK_EQ(cp[n - 1], -tr);
  }
}

TEST_CASE("charpoly wide entry paths agree") {
  // constant matrix: rank one, eigenvalues {n v, 0^(n-1)}
  for (int n : {11, 12}) {
    for (long long v : {5LL, 50LL}) {
      IntMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v;
      IntPoly cp = charpoly(m);
      IntPoly expect = IntPoly::linear_root(BigInt(n) * v).shift_up(n - 1);
      CHECK_EQ(cp, expect);
    }
  }
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> d(-30, 30);
  IntMatrix m(12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m.at(i, j) = d(rng);
  IntPoly cp = charpoly(m);
  CHECK_EQ(cp[0], determinant(m));  // n even
}

TEST_CASE("root isolation of simple quadratics") {
  RootIsolation iso = isolate_real_roots(P({-2, 0, 1}));
  REQUIRE_EQ(iso.distinct_count(), 2);
  CHECK_EQ(iso.count_with_multiplicity(), 2);
  CHECK_FALSE(iso.roots()[0].exact());
  CHECK_FALSE(iso.roots()[1].exact());
  int top = iso.index_from_largest(1);
  CHECK_EQ(top, 1);
  CHECK_EQ(iso.compare(top, Rational(3, 2)), Cmp::LT);
  CHECK_EQ(iso.compare(top, Rational(7, 5)), Cmp::GT);
  CHECK_EQ(iso.compare(iso.index_from_largest(2), Rational(0)), Cmp::LT);

  RootIsolation none = isolate_real_roots(P({1, 0, 1}));
  CHECK_EQ(none.distinct_count(), 0);
}

TEST_CASE("root isolation with rational roots and multiplicities") {
  RootIsolation q = isolate_real_roots(P({-4, 9, -6, 1}));
  REQUIRE_EQ(q.distinct_count(), 2);
  CHECK_EQ(q.count_with_multiplicity(), 3);
  CHECK(q.roots()[0].exact());
  CHECK_EQ(q.roots()[0].lo, Rational(1));
  CHECK_EQ(q.roots()[0].mult, 2);
  CHECK(q.roots()[1].exact());
  CHECK_EQ(q.roots()[1].lo, Rational(4));
  CHECK_EQ(q.index_from_largest(1), 1);
  CHECK_EQ(q.index_from_largest(2), 0);
  CHECK_EQ(q.index_from_largest(3), 0);
  CHECK_THROWS_AS(q.index_from_largest(4), std::out_of_range);

  RootIsolation z = isolate_real_roots(P({0, -2, 0, 1}));
  REQUIRE_EQ(z.distinct_count(), 3);
  CHECK(z.roots()[1].exact());
  CHECK_EQ(z.roots()[1].lo, Rational(0));

  // (x^2-7x+8)(x-3)(x-1)^2: roots 1,1, (7-sqrt17)/2, 3, (7+sqrt17)/2
  RootIsolation g = isolate_real_roots(P({-24, 77, -92, 50, -12, 1}));
  REQUIRE_EQ(g.distinct_count(), 4);
  CHECK_EQ(g.count_with_multiplicity(), 5);
  CHECK_EQ(g.roots()[0].lo, Rational(1));
  CHECK_EQ(g.roots()[0].mult, 2);
  CHECK(g.roots()[2].exact());
  CHECK_EQ(g.roots()[2].lo, Rational(3));
  int big = g.index_from_largest(1);
  CHECK_EQ(g.compare(big, Rational(11, 2)), Cmp::GT);
  CHECK_EQ(g.compare(big, Rational(6)), Cmp::LT);
}

TEST_CASE("interval refinement") {
  RootIsolation iso = isolate_real_roots(P({-2, 0, 1}));
  int top = iso.index_from_largest(1);
  Rational w(1, BigInt(1) << 40);
  iso.refine_to(top, w);
  const auto& r = iso.roots()[static_cast<size_t>(top)];
  CHECK((r.exact() || r.width() <= w));
  double a = iso.approx(top);
  CHECK(a > 1.41421356);
  CHECK(a < 1.41421357);
}

TEST_CASE("comparing algebraic roots exactly") {
  RootIsolation r2 = isolate_real_roots(P({-2, 0, 1}));
  RootIsolation r3 = isolate_real_roots(P({-3, 0, 1}));
  RootIsolation prod = isolate_real_roots(P({-2, 0, 1}) * P({-3, 0, 1}));
  REQUIRE_EQ(prod.distinct_count(), 4);
  int a = r2.index_from_largest(1);
  int b = r3.index_from_largest(1);
  CHECK_EQ(compare_roots(r2, a, r3, b), Cmp::LT);
  CHECK_EQ(compare_roots(r3, b, r2, a), Cmp::GT);
  // same algebraic number through different isolations
  CHECK_EQ(compare_roots(r2, a, prod, 2), Cmp::EQ);
  CHECK_EQ(compare_roots(r2, a, r2, a), Cmp::EQ);
  // rational versus interval root
  RootIsolation withone = isolate_real_roots(P({-1, 1}) * P({-2, 0, 1}));
  REQUIRE_EQ(withone.distinct_count(), 3);
  CHECK_EQ(compare_roots(withone, 1, r2, a), Cmp::LT);
}

TEST_CASE("root sums against rational targets") {
  RootIsolation r2 = isolate_real_roots(P({-2, 0, 1}));
  int pos = r2.index_from_largest(1);
  int neg = r2.index_from_largest(2);
  CHECK_EQ(compare_root_sum(r2, pos, r2, neg, Rational(0)), Cmp::EQ);
  CHECK_EQ(compare_root_sum(r2, pos, r2, pos, Rational(3)), Cmp::LT);
  CHECK_EQ(compare_root_sum(r2, pos, r2, pos, Rational(14, 5)), Cmp::GT);
  RootIsolation one = isolate_real_roots(P({-1, 1}));
  CHECK_EQ(compare_root_sum(one, 0, r2, pos, Rational(5, 2)), Cmp::LT);
}

TEST_CASE("polynomial sign at an algebraic root") {
  RootIsolation r2 = isolate_real_roots(P({-2, 0, 1}));
  int pos = r2.index_from_largest(1);
  CHECK_EQ(sign_at_root(P({-2, 0, 1}), r2, pos), 0);
  CHECK_EQ(sign_at_root(P({-2, 0, 1}) * P({-5, 1}), r2, pos), 0);
  CHECK_EQ(sign_at_root(P({-1, 1}), r2, pos), 1);
  CHECK_EQ(sign_at_root(P({-2, 1}), r2, pos), -1);
  CHECK_EQ(sign_at_root(P({7}), r2, pos), 1);
}

TEST_CASE("compare_root convenience wrapper") {
  IntPoly q = P({-4, 9, -6, 1});
  CHECK_EQ(compare_root(q, 1, Rational(4)), Cmp::EQ);
  CHECK_EQ(compare_root(q, 2, Rational(1)), Cmp::EQ);
  CHECK_EQ(compare_root(q, 3, Rational(1)), Cmp::EQ);
  CHECK_EQ(compare_root(q, 1, Rational(7, 2)), Cmp::GT);
  CHECK_EQ(compare_root(q, 1, Rational(9, 2)), Cmp::LT);
}
