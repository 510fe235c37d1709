#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "specq/bigint.hpp"
#include "specq/graph.hpp"
#include "specq/intmatrix.hpp"
#include "specq/intpoly.hpp"
#include "specq/roots.hpp"

namespace specq {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& s);

// A, L = D - A, or Q = D + A of g, with exact integer entries.
IntMatrix matrix_of(const Graph& g, MatrixKind kind);

// Monic characteristic polynomial det(xI - M).
IntPoly charpoly_of(const Graph& g, MatrixKind kind);

// Product of the nonzero roots of a monic integer charpoly: with z the
// multiplicity of the zero root, this is (-1)^(deg-z) times the lowest
// nonzero coefficient, an exact integer. Zero polynomial-degree gives 1.
BigInt nonzero_root_product(const IntPoly& charpoly);

// Everything the spectrum determines: the charpoly (the cospectrality
// certificate), isolated roots with multiplicities, and the invariants
// that can be read off exactly. `components` is the multiplicity of the
// zero Laplacian eigenvalue; `bipartite_components` the multiplicity of
// the zero signless-Laplacian eigenvalue; each is populated only for its
// own matrix kind.
struct SpectrumReport {
  MatrixKind kind = MatrixKind::Adjacency;
  int n = 0;
  int m = 0;
  IntPoly charpoly;
  RootIsolation roots;
  int components = -1;
  int bipartite_components = -1;
  BigInt nonzero_product;

  // Schema: {kind, n, m, charpoly: [c0..cn], roots: [{lo, hi, mult}],
  // components?, bipartite_components?, nonzero_product}. Coefficients are
  // JSON numbers when they fit in 64 bits and decimal strings otherwise;
  // root endpoints are exact rationals rendered as strings.
  nlohmann::json to_json() const;
};

SpectrumReport spectrum_of(const Graph& g, MatrixKind kind);

// True iff the charpolys coincide as integer sequences. Exact and total;
// equal degree is necessary since the degree is the vertex count.
bool are_cospectral(const Graph& g, const Graph& h, MatrixKind kind);

}  // namespace specq
