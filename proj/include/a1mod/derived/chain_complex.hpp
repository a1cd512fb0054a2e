#pragma once

#include "a1mod/modcat/fp_module.hpp"
#include "a1mod/polyalg/linalg.hpp"

#include <vector>

namespace a1mod::derived {

using modcat::EndoPair;
using polyalg::QMat;
using polyalg::Rational;

// Bounded complex of finite-dimensional ℚ-spaces, homological indexing:
// differentials[i]: degree (min_degree+i+1) -> degree (min_degree+i).
// Validated on construction: shapes match and d∘d = 0 exactly.
struct ChainComplex {
  int min_degree = 0;
  std::vector<size_t> dims;          // dims[i] = dim in degree min_degree+i
  std::vector<QMat> differentials;   // size = dims.size()-1 (empty if <=1 degree)

  ChainComplex() = default;
  ChainComplex(int min_deg, std::vector<size_t> dims_, std::vector<QMat> diffs);

  size_t dim_at(int degree) const;        // 0 outside the range
  QMat differential_from(int degree) const;  // d: degree -> degree-1
  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  long long euler_characteristic() const;
};

ChainComplex complex_direct_sum(const ChainComplex& a, const ChainComplex& b);

// Degreewise map of complexes; validated to commute with differentials.
struct ComplexMap {
  ChainComplex source;
  ChainComplex target;
  std::vector<QMat> components;  // per degree of the common hull, source-indexed

  ComplexMap(ChainComplex src, ChainComplex tgt, std::vector<QMat> comps);
  QMat component_at(int degree) const;
};

// Mapping cone: degree n is target_n ⊕ source_{n-1}, differential
// [[d_target, f], [0, -d_source]] (connecting map unsigned).
ChainComplex cone(const ComplexMap& f);

// Cone of T as a map of one-degree complexes: H0 = coker T, H1 = ker T.
ChainComplex ev_zero_derived(const EndoPair& m);

// Cone of (T - alpha I): the derived fiber at a scalar.
ChainComplex ev_alpha_derived(const EndoPair& m, const Rational& alpha);

// dim ker(d: n -> n-1) - rank(d: n+1 -> n); 0 outside the degree range.
size_t homology(const ChainComplex& c, int n);

bool is_acyclic(const ChainComplex& c);

}  // namespace a1mod::derived
