#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "specq/bigint.hpp"
#include "specq/graph.hpp"
#include "specq/intpoly.hpp"
#include "specq/report.hpp"

namespace specq {

// Families with a known factored Q-charpoly: a block of exact integer
// eigenvalues plus one small residual polynomial.

// Double star G(p,2,q): 1 with multiplicity p+q-2, 0 once, and a cubic.
struct DoubleStarQ {
  int p = 1, q = 1;
};

// (K_{n-alpha} - e) join alpha*K1: n-alpha with multiplicity alpha-1,
// n-2 with multiplicity n-alpha-2, and a cubic.
struct JoinCliqueMinusEdge {
  int n = 6, alpha = 1;
};

// Complement of K_{1,3} u K2 u (n-6)K1: n-3 twice, n-2 with multiplicity
// n-5, and a cubic.
struct ComplementStarK2 {
  int n = 6;
};

// Complement of (K_{2,4} - e) u (n-6)K1: n-4 twice, n-2 with multiplicity
// n-6, and a quartic.
struct ComplementK24MinusE {
  int n = 6;
};

// Complete multipartite K_{n1,...,nr}: n-ni with multiplicity ni-1 per part
// plus a degree-r residual obtained by clearing the rational form.
struct CompleteMultipartiteQ {
  std::vector<int> parts;
};

using ClosedFormId = std::variant<DoubleStarQ, JoinCliqueMinusEdge,
                                  ComplementStarK2, ComplementK24MinusE,
                                  CompleteMultipartiteQ>;

struct PredictedSpectrum {
  std::vector<std::pair<BigInt, int>> fixed;  // (eigenvalue, multiplicity)
  IntPoly residual;                           // monic

  // residual times prod (x - v)^mult; equals the full charpoly when the
  // prediction is right.
  IntPoly expanded() const;
  int total_degree() const;
  // Sum of all predicted roots; must equal twice the edge count.
  BigInt trace() const;
};

std::string claim_name(const ClosedFormId& id);
nlohmann::json claim_params(const ClosedFormId& id);

// The graph whose Q-spectrum the closed form describes.
Graph build_graph(const ClosedFormId& id);

// The closed form itself; throws std::domain_error outside the stated
// parameter range.
PredictedSpectrum predict(const ClosedFormId& id);

// Builds the graph, computes its Q-charpoly directly, and requires exact
// polynomial equality with the expanded prediction plus the trace identity.
VerificationReport verify_closed_form(const ClosedFormId& id);

// Exact root-location facts of the double star cubic, p >= q >= 1:
// gamma1 lies strictly inside (p+2, p+3), gamma2 in [q+1, q+2), and
// gamma2 = q+1 exactly when p = q.
VerificationReport second_eigenvalue_location_check(int p, int q);

// All partitions of n into parts >= 1, non-increasing, lexicographically
// descending; used to sweep the complete multipartite grid.
std::vector<std::vector<int>> partitions(int n);

}  // namespace specq
