#pragma once

#include "a1mod/fincat/fin_cat.hpp"
#include "a1mod/fincat/kan.hpp"
#include "a1mod/modcat/fp_module.hpp"
#include "a1mod/univ/univ.hpp"

#include <random>
#include <vector>

namespace a1mod::cli {

// Seeded corpus generation; every draw is a pure function of the engine state
// so a fixed seed fully determines the corpus.
class Corpus {
 public:
  explicit Corpus(uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  modcat::Rational small_rational();           // numerators -3..3, denominators 1..2
  modcat::Rational eigenvalue();               // integers -2..2
  modcat::Rational nonzero_eigenvalue();       // {-2,-1,1,2}

  // Univariate polynomial, degree <= max_deg, small coefficients.
  modcat::Poly poly(const std::string& var, int max_deg, bool force_nonzero = false);
  modcat::Poly monic_poly(const std::string& var, int deg);

  // Torsion pair drawn as a direct sum of Jordan and companion blocks with
  // eigenvalues in {-2..2}, total dimension in [1, max_dim].
  modcat::EndoPair endo_pair(int max_dim);
  // Same but every block eigenvalue nonzero (invertible endomorphism).
  modcat::EndoPair invertible_endo_pair(int max_dim);

  // Mixed module: torsion part (dim <= max_dim) ⊕ free part (rank <= max_free).
  modcat::FpModule fp_module(const std::string& var, int max_dim, int max_free);
  // Free module over ℚ of rank in [0, max_rank].
  modcat::FpModule q_module(int max_rank);

  // Random poset on <= max_objects objects (transitive closure of a random DAG).
  fincat::CatPtr poset(int max_objects);
  // Monotone map between two drawn posets.
  fincat::FunctorData poset_functor(int max_objects);
  // Functorial diagram: a direct sum of representables with dims <= max_dim.
  fincat::VectDiagram diagram(const fincat::CatPtr& shape, int max_dim);

  univ::MonFunctorSpec spec(int max_deg);

 private:
  std::mt19937_64 rng_;
};

}  // namespace a1mod::cli
