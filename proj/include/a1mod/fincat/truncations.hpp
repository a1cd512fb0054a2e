#pragma once

#include "a1mod/fincat/fin_cat.hpp"

#include <vector>

namespace a1mod::fincat {

// Bounded replicas of the one-object-monoid comma categories, with all entry
// labels <= k. Everything here is k-uniform: the same formulas define the
// functors and adjunctions for every k.
struct NnTruncations {
  int k = 0;

  // Pair category: objects (m, n) with m + n <= k; a morphism
  // (m, n) -> (m', n') is the unique pair (a1, a2) with a1 + m = m' and
  // a1 + a2 + n' = n, when it exists.
  CatPtr pair_category;
  std::vector<std::pair<int, int>> pair_objects;

  // Ambient product: descending chain x ascending chain on {0..k}.
  CatPtr product_ambient;
  // Fully faithful embedding (m, n) -> (m + n, m) of the pair category.
  FunctorData pair_embedding;

  // Image of the embedding: full subcategory on {(x, y): y <= x <= k}.
  CatPtr lower;
  std::vector<std::pair<int, int>> lower_objects;

  // First-coordinate chain {(x, 0)} inside lower.
  CatPtr chain;
  // Inclusion chain -> lower is left adjoint to the retraction (x,y) -> (x,0).
  AdjunctionData chain_adjunction;

  // Merge-over-point comma: objects (a, b) with a + b <= k; morphisms
  // (j, k, l): (a, b) -> (c, d) with j + k + c = a and l + d = b,
  // composed by componentwise addition.
  CatPtr c_cat;
  std::vector<std::pair<int, int>> c_objects;

  // Sum-over-point comma: objects m <= k; morphisms (i, j): m -> m' with
  // i + j + m' = m.
  CatPtr d_cat;

  // Full subcategory of c_cat on the objects (a, 0).
  CatPtr c0_cat;
  FunctorData i0;        // inclusion c0 -> c
  FunctorData g_functor; // G: c -> d, (a,b) -> a+b, (j,k,l) -> (j, k+l)
  FunctorData g_i0;      // G restricted to c0: an isomorphism of categories

  // L: c -> c0, (a,b) -> (a,0); left adjoint to i0.
  AdjunctionData l_adjunction;
  // F: d -> c0, m -> (m,0); left adjoint to G∘i0 (mutually inverse on the nose).
  AdjunctionData f_adjunction;
};

NnTruncations nn_truncations(int k);

}  // namespace a1mod::fincat
