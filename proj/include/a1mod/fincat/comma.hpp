#pragma once

#include "a1mod/fincat/fin_cat.hpp"

#include <array>
#include <utility>
#include <vector>

namespace a1mod::fincat {

enum class CommaSide { Over, Under };

// Slice (u/b): objects (a, f: u(a)->b); morphisms g: a->a' with f'∘u(g) = f.
// Under-side (b/u): objects (a, f: b->u(a)); morphisms with u(g)∘f = f'.
struct CommaResult {
  CatPtr category;
  FunctorData projection;            // forgets the arrow component
  std::vector<std::pair<int, int>> object_data;  // (object of source, morphism of target)
};

CommaResult comma_category(const FunctorData& u, int b, CommaSide side);

// The double-sided comma of a square at (a, b, gamma: v2(a) -> v1(b)):
// objects (d, f: a -> u1(d), g: u2(d) -> b) with v1(g)∘alpha(d)∘v2(f) = gamma;
// morphisms h: d -> d' with u1(h)∘f = f' and g'∘u2(h) = g.
struct TripleCommaResult {
  CatPtr category;
  std::vector<std::array<int, 3>> object_data;  // (d, f, g)
};

TripleCommaResult triple_comma(const SquareData& sq, int a, int b, int gamma);

// The canonical square of the slice: u1 = pr: (u/b) -> A, u2 = pi: (u/b) -> e,
// v2 = u: A -> B, v1 = b: e -> B, alpha at (a, f) given by f itself.
SquareData slice_square(const FunctorData& u, int b);

}  // namespace a1mod::fincat
