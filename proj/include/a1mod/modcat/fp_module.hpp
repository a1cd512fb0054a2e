#pragma once

#include "a1mod/polyalg/linalg.hpp"
#include "a1mod/polyalg/poly_matrix.hpp"
#include "a1mod/polyalg/snf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace a1mod::modcat {

using polyalg::Poly;
using polyalg::PolyMatrix;
using polyalg::QMat;
using polyalg::Rational;

// Finitely presented module over ℚ[vars]: coker(presentation), a g x r matrix
// whose columns are relations among the g generators.
struct FpModule {
  std::vector<std::string> ring;  // empty = ℚ, one entry = ℚ[t], etc.
  size_t generators = 0;
  PolyMatrix presentation;  // generators x relations, over ring

  static FpModule free_module(std::vector<std::string> ring, size_t rank);
  static FpModule zero_module(std::vector<std::string> ring);
  // Cyclic module ℚ[vars]/(p1, ..., pk).
  static FpModule cyclic(std::vector<std::string> ring, const std::vector<Poly>& relations);

  size_t relations() const { return presentation.cols(); }
  void validate() const;  // shape and variable-list consistency
};

FpModule direct_sum(const FpModule& a, const FpModule& b);

// ℚ-vector space with a distinguished endomorphism: the underlying diagram of
// a torsion f.p. ℚ[t]-module.
struct EndoPair {
  size_t dim = 0;
  QMat endo;

  static EndoPair scalar(const Rational& value);           // dim 1
  static EndoPair jordan(size_t size, const Rational& eigenvalue);
  static EndoPair companion(const Poly& monic);            // of a monic univariate
  void validate() const;
};

EndoPair endo_direct_sum(const EndoPair& a, const EndoPair& b);

// Ring homomorphism ℚ[sourceVars] -> ℚ[targetVars], one image per source var.
struct RingMap {
  std::vector<std::string> source_vars;
  std::vector<std::string> target_vars;
  std::vector<Poly> images;  // over target_vars

  static RingMap identity(std::vector<std::string> vars);
  void validate() const;
};

// Composite g after f (apply f's images, then substitute via g).
RingMap compose(const RingMap& g, const RingMap& f);

// The object (𝟙, alpha): free rank-1 module with the variable acting by
// multiplication by alpha, over ℚ[targetVars].
struct TypeWitness {
  std::vector<std::string> target_vars;  // at most one entry
  Poly alpha;                            // over target_vars

  static TypeWitness scalar(const Rational& value);  // alpha constant, over ℚ
  static TypeWitness polynomial(const std::string& var, const Poly& alpha);
  void validate() const;
};

// Canonical form of an f.p. module over <= 1 variable: the non-unit monic
// invariant factors (divisibility order) plus the free rank.
struct CanonicalForm {
  std::vector<Poly> invariant_factors;
  size_t free_rank = 0;

  bool operator==(const CanonicalForm& o) const;
  std::string str() const;
  // Torsion dimension over ℚ: sum of factor degrees (0 variables: always 0).
  size_t torsion_dim() const;
  bool is_torsion() const { return free_rank == 0; }
};

CanonicalForm canonical_form(const FpModule& m);  // requires ring size <= 1

// ℚ-dimension of a torsion module (ring size <= 1); throws if free rank > 0
// over one variable. Over ℚ every module is free; its rank is returned.
size_t q_dimension(const FpModule& m);

// Characteristic presentation (x*I - T) of an EndoPair, over ℚ[var].
FpModule endo_to_fp(const EndoPair& m, const std::string& var = "t");

// Torsion f.p. module over one variable back to its underlying (space, endo),
// via companion blocks of the invariant factors. Throws if free rank > 0.
EndoPair fp_to_endo(const FpModule& m);

}  // namespace a1mod::modcat
