#pragma once

#include "a1mod/polyalg/poly_matrix.hpp"

#include <vector>

namespace a1mod::polyalg {

// Smith normal form over ℚ (zero variables) or ℚ[x] (one variable).
// left * A * right = diagonal of diag padded with zeros; each factor divides
// the next; nonzero factors are monic; left/right are unimodular.
struct SnfResult {
  PolyMatrix left;
  PolyMatrix right;
  std::vector<Poly> diag;   // the nonzero invariant factors, divisibility order
  size_t rank_deficiency = 0;  // min(rows, cols) - #nonzero factors
  Rational left_det;   // tracked exactly through the elementary operations
  Rational right_det;

  PolyMatrix diagonal_matrix(size_t rows, size_t cols) const;
};

// Pivot rule: lowest-degree nonzero entry, ties broken by smallest (row, col).
// Throws std::invalid_argument for matrices over >= 2 variables.
SnfResult smith_normal_form(const PolyMatrix& a);

}  // namespace a1mod::polyalg
