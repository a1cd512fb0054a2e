#pragma once

#include "a1mod/modcat/fp_module.hpp"
#include "a1mod/modcat/ops.hpp"

#include <string>
#include <vector>

namespace a1mod::univ {

using modcat::EndoPair;
using modcat::FpModule;
using modcat::Poly;
using modcat::PolyMatrix;
using modcat::RingMap;
using modcat::TypeWitness;

// Cocontinuous strong monoidal functor between one-variable module categories,
// encoded by the ring map t -> p(s) it extends scalars along.
struct MonFunctorSpec {
  RingMap phi;  // one source variable, at most one target variable

  static MonFunctorSpec from_image(const std::string& source_var,
                                   const std::string& target_var, const Poly& p);
  void validate() const;
};

MonFunctorSpec compose_specs(const MonFunctorSpec& outer, const MonFunctorSpec& inner);

// Iterated family: t1..tn -> images over the target ring.
struct AnSpec {
  size_t n = 0;
  std::vector<std::string> source_vars;  // t1..tn
  std::vector<std::string> target_vars;  // at most one
  std::vector<Poly> images;              // per source variable

  void validate() const;
};

// The functor's value on the merge-restricted unit, read off as (𝟙, p(s)):
// builds restrict_plus(free rank 1), base-changes the first variable along
// phi, eliminates the auxiliary variable, and validates the result restricts
// to the unit.
TypeWitness extract_type(const MonFunctorSpec& spec);

// The coefficient inclusion ℚ -> target ring.
RingMap extract_base(const MonFunctorSpec& spec);

// F(M) versus ev_{type} of the coefficient-extended presentation: true iff
// the two routes agree under iso_test.
bool decompose_check(const MonFunctorSpec& spec, const FpModule& m);

// restrict_plus(M) versus the two-variable product of the coefficient
// extension of M with restrict_plus(unit), probed at t1 = t2 = beta for the
// given scalars and compared by iso_test.
bool plus_star_factorization_check(const FpModule& m,
                                   const std::vector<modcat::Rational>& probes = {
                                       modcat::Rational(0), modcat::Rational(1),
                                       modcat::Rational(2)});

// Applies the n type witnesses one variable at a time (t1 first, spectators
// retained) and compares with the single-shot substitution of all variables.
bool an_decompose_check(const AnSpec& spec, const FpModule& m);

// phi_!(m ⊗ phi^* n) versus phi_!(m) ⊗ n over the target ring, with the
// pointwise tensor (V ⊗ W, T ⊗ S); compares invariant factors.
bool projection_iso_check(const MonFunctorSpec& spec, const EndoPair& m, const EndoPair& n);

// The transformation induced by an intertwiner q: (𝟙, alpha) -> (𝟙, beta):
// requires q * (alpha - beta) = 0; returns ev_alpha(M), ev_beta(M), the map
// q * I on presentations, and whether it is well-defined on relations.
struct TypeMorphism {
  FpModule ev_source;
  FpModule ev_target;
  PolyMatrix map;  // q * I_g over the target ring
  bool well_defined = false;
};

TypeMorphism type_morphism_transform(const Poly& q, const TypeWitness& alpha,
                                     const TypeWitness& beta, const FpModule& m);

}  // namespace a1mod::univ
