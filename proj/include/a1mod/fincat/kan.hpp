#pragma once

#include "a1mod/fincat/comma.hpp"
#include "a1mod/fincat/fin_cat.hpp"
#include "a1mod/polyalg/linalg.hpp"

#include <vector>

namespace a1mod::fincat {

using polyalg::QMat;

// Functor shape -> finite-dimensional ℚ-spaces: a dimension per object and a
// matrix per morphism. validate() checks identities and composition.
struct VectDiagram {
  CatPtr shape;
  std::vector<size_t> dims;   // per object
  std::vector<QMat> maps;     // per morphism, dims[dst] x dims[src]

  void validate() const;
  static VectDiagram constant(const CatPtr& shape, size_t dim);
  // Representable at an object: dimension |Hom(o, a)| at a, maps by
  // post-composition (a projective diagram; always functorial).
  static VectDiagram representable(const CatPtr& shape, int o);
};

VectDiagram diagram_direct_sum(const VectDiagram& a, const VectDiagram& b);

// Restriction along u: (u^* X)(a) = X(u(a)).
VectDiagram restrict_diagram(const FunctorData& u, const VectDiagram& x);

// Colimit as coker(Phi: ⊕_{f: i->j} X_i -> ⊕_i X_i), Phi = incl_src - incl_dst∘X(f);
// the cocone maps X_i -> colim realize the universal property.
struct ColimitResult {
  size_t dim = 0;
  std::vector<QMat> cocone;  // per object of the shape
};
ColimitResult colimit(const VectDiagram& x);

// Limit as the dual kernel, with the cone maps lim -> X_i.
struct LimitResult {
  size_t dim = 0;
  std::vector<QMat> cone;
};
LimitResult limit(const VectDiagram& x);

enum class KanDirection { Left, Right };

// Pointwise Kan extension along u: value at b is the colimit over (u/b)
// (left) or the limit over (b/u) (right) of the restricted diagram; the
// structure maps for morphisms of B are induced on the comma level.
VectDiagram kan_extend_finvect(const FunctorData& u, const VectDiagram& x,
                               KanDirection direction);

// Comparison data for the pointwise formula at one object b: the dimension of
// colim over (u/b) and whether the canonical map to the Kan value is an iso.
struct KanComparison {
  size_t kan_dim = 0;
  size_t comma_colim_dim = 0;
  bool comparison_iso = false;
};
KanComparison kan_pointwise_comparison(const FunctorData& u, const VectDiagram& x, int b);

}  // namespace a1mod::fincat
