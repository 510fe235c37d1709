#include "specq/spectra.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace specq {

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
  static const BigInt kMin = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt kMax = BigInt(std::numeric_limits<std::int64_t>::max());
  if (v >= kMin && v <= kMax) return static_cast<std::int64_t>(v);
  return v.str();
}

std::string rational_to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

}  // namespace

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency:
      return "adjacency";
    case MatrixKind::Laplacian:
      return "laplacian";
    case MatrixKind::SignlessLaplacian:
      return "signless_laplacian";
  }
  throw std::logic_error("unknown matrix kind");
}

MatrixKind matrix_kind_from_string(const std::string& s) {
  if (s == "adjacency" || s == "A" || s == "a") return MatrixKind::Adjacency;
  if (s == "laplacian" || s == "L" || s == "l") return MatrixKind::Laplacian;
  if (s == "signless_laplacian" || s == "Q" || s == "q")
    return MatrixKind::SignlessLaplacian;
  throw std::invalid_argument("unknown matrix kind: " + s);
}

IntMatrix matrix_of(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  IntMatrix mat(n);
  for (int v = 0; v < n; ++v) {
    if (kind != MatrixKind::Adjacency) mat.at(v, v) = g.degree(v);
    for (int u = 0; u < n; ++u) {
      if (u == v || !g.has_edge(u, v)) continue;
      mat.at(v, u) = (kind == MatrixKind::Laplacian) ? -1 : 1;
    }
  }
  return mat;
}

IntPoly charpoly_of(const Graph& g, MatrixKind kind) {
  return charpoly(matrix_of(g, kind));
}

BigInt nonzero_root_product(const IntPoly& p) {
  const int d = p.degree();
  if (d <= 0) return 1;
  int z = 0;
  while (z <= d && p[z] == 0) ++z;
  BigInt c = p[z];
  if ((d - z) % 2 != 0) c = -c;
  return c;
}

SpectrumReport spectrum_of(const Graph& g, MatrixKind kind) {
  SpectrumReport r;
  r.kind = kind;
  r.n = g.order();
  r.m = g.size();
  IntMatrix mat = matrix_of(g, kind);
  r.charpoly = charpoly(mat);
  r.roots = isolate_real_roots(r.charpoly);
  r.nonzero_product = nonzero_root_product(r.charpoly);
  if (kind == MatrixKind::Laplacian)
    r.components = integer_eigenvalue_multiplicity(mat, 0);
  if (kind == MatrixKind::SignlessLaplacian)
    r.bipartite_components = integer_eigenvalue_multiplicity(mat, 0);
  return r;
}

nlohmann::json SpectrumReport::to_json() const {
  nlohmann::json j;
  j["kind"] = specq::to_string(kind);
  j["n"] = n;
  j["m"] = m;
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i <= charpoly.degree(); ++i)
    coeffs.push_back(bigint_to_json(charpoly[i]));
  j["charpoly"] = std::move(coeffs);
  nlohmann::json roots_json = nlohmann::json::array();
  RootIsolation refined = roots;
  const Rational width(1, BigInt(1) << 40);
  for (int i = 0; i < static_cast<int>(refined.roots().size()); ++i) {
    if (!refined.roots()[static_cast<size_t>(i)].exact())
      refined.refine_to(i, width);
    const IsolatedRoot& root = refined.roots()[static_cast<size_t>(i)];
    nlohmann::json rj;
    rj["lo"] = rational_to_string(root.lo);
    rj["hi"] = rational_to_string(root.hi);
    rj["mult"] = root.mult;
    roots_json.push_back(std::move(rj));
  }
  j["roots"] = std::move(roots_json);
  if (components >= 0) j["components"] = components;
  if (bipartite_components >= 0)
    j["bipartite_components"] = bipartite_components;
  j["nonzero_product"] = bigint_to_json(nonzero_product);
  return j;
}

bool are_cospectral(const Graph& g, const Graph& h, MatrixKind kind) {
  if (g.order() != h.order()) return false;
  return charpoly_of(g, kind) == charpoly_of(h, kind);
}

}  // namespace specq
