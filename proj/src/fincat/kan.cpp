#include "a1mod/fincat/kan.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace a1mod::fincat {

using polyalg::QVec;
using polyalg::Rational;

namespace {

// maps[dst_dim x mid_dim] * maps[mid_dim x src_dim] with the degenerate cases
// settled by shape alone (a zero middle forces the zero map).
bool composite_matches(const QMat& g, const QMat& f, const QMat& gf, size_t dst_dim,
                       size_t mid_dim, size_t src_dim) {
  if (dst_dim == 0) return true;  // all three agree as 0-row matrices
  if (mid_dim == 0) return polyalg::q_is_zero(gf) || src_dim == 0;
  return polyalg::q_mul(g, f) == gf;
}

QMat block_diag(const QMat& a, size_t ar, size_t ac, const QMat& b, size_t br, size_t bc) {
  QMat out = polyalg::q_zero(ar + br, ac + bc);
  for (size_t i = 0; i < ar; ++i)
    for (size_t j = 0; j < ac; ++j) out[i][j] = a[i][j];
  for (size_t i = 0; i < br; ++i)
    for (size_t j = 0; j < bc; ++j) out[ar + i][ac + j] = b[i][j];
  return out;
}

}  // namespace

void VectDiagram::validate() const {
  if (!shape) throw std::invalid_argument("diagram: missing shape");
  if (dims.size() != shape->num_objects())
    throw std::invalid_argument("diagram: one dimension per object");
  if (maps.size() != shape->num_morphisms())
    throw std::invalid_argument("diagram: one matrix per morphism");
  for (size_t m = 0; m < maps.size(); ++m) {
    const FinCat::Mor& mor = shape->morphism(static_cast<int>(m));
    if (maps[m].size() != dims[mor.dst])
      throw std::invalid_argument("diagram: matrix rows must match the target dimension");
    for (const auto& row : maps[m])
      if (row.size() != dims[mor.src])
        throw std::invalid_argument("diagram: matrix columns must match the source dimension");
  }
  for (size_t o = 0; o < shape->num_objects(); ++o)
    if (maps[shape->identity_of(static_cast<int>(o))] != polyalg::q_identity(dims[o]))
      throw std::invalid_argument("diagram: identities must map to identity matrices");
  for (size_t f = 0; f < maps.size(); ++f) {
    if (shape->is_identity(static_cast<int>(f))) continue;
    const FinCat::Mor& fm = shape->morphism(static_cast<int>(f));
    for (size_t g = 0; g < maps.size(); ++g) {
      if (shape->is_identity(static_cast<int>(g))) continue;
      const FinCat::Mor& gm = shape->morphism(static_cast<int>(g));
      if (gm.src != fm.dst) continue;
      int gf = shape->compose(static_cast<int>(g), static_cast<int>(f));
      if (!composite_matches(maps[g], maps[f], maps[gf], dims[gm.dst], dims[fm.dst],
                             dims[fm.src]))
        throw std::invalid_argument("diagram: composition law violated");
    }
  }
}

VectDiagram VectDiagram::constant(const CatPtr& shape, size_t dim) {
  if (!shape) throw std::invalid_argument("diagram: missing shape");
  VectDiagram x;
  x.shape = shape;
  x.dims.assign(shape->num_objects(), dim);
  x.maps.assign(shape->num_morphisms(), polyalg::q_identity(dim));
  return x;
}

VectDiagram VectDiagram::representable(const CatPtr& shape, int o) {
  if (!shape) throw std::invalid_argument("diagram: missing shape");
  if (o < 0 || o >= static_cast<int>(shape->num_objects()))
    throw std::invalid_argument("diagram: object out of range");
  VectDiagram x;
  x.shape = shape;
  std::vector<std::vector<int>> homs(shape->num_objects());
  for (size_t a = 0; a < shape->num_objects(); ++a) {
    homs[a] = shape->hom(o, static_cast<int>(a));
    x.dims.push_back(homs[a].size());
  }
  auto position = [](const std::vector<int>& v, int m) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == m) return i;
    throw std::logic_error("representable: post-composition left the hom set");
  };
  x.maps.resize(shape->num_morphisms());
  for (size_t m = 0; m < shape->num_morphisms(); ++m) {
    const FinCat::Mor& mor = shape->morphism(static_cast<int>(m));
    QMat mm = polyalg::q_zero(x.dims[mor.dst], x.dims[mor.src]);
    for (size_t c = 0; c < homs[mor.src].size(); ++c)
      mm[position(homs[mor.dst], shape->compose(static_cast<int>(m), homs[mor.src][c]))][c] =
          Rational(1);
    x.maps[m] = std::move(mm);
  }
  return x;
}

VectDiagram diagram_direct_sum(const VectDiagram& a, const VectDiagram& b) {
  a.validate();
  b.validate();
  if (!same_category(*a.shape, *b.shape))
    throw std::invalid_argument("direct sum: shapes differ");
  VectDiagram out;
  out.shape = a.shape;
  for (size_t o = 0; o < a.dims.size(); ++o) out.dims.push_back(a.dims[o] + b.dims[o]);
  for (size_t m = 0; m < a.maps.size(); ++m) {
    const FinCat::Mor& mor = a.shape->morphism(static_cast<int>(m));
    out.maps.push_back(block_diag(a.maps[m], a.dims[mor.dst], a.dims[mor.src], b.maps[m],
                                  b.dims[mor.dst], b.dims[mor.src]));
  }
  return out;
}

VectDiagram restrict_diagram(const FunctorData& u, const VectDiagram& x) {
  u.validate();
  x.validate();
  if (!same_category(*u.target, *x.shape))
    throw std::invalid_argument("restriction: functor target differs from diagram shape");
  VectDiagram r;
  r.shape = u.source;
  for (size_t o = 0; o < u.source->num_objects(); ++o)
    r.dims.push_back(x.dims[u.object_map[o]]);
  for (size_t m = 0; m < u.source->num_morphisms(); ++m)
    r.maps.push_back(x.maps[u.morphism_map[m]]);
  return r;
}

ColimitResult colimit(const VectDiagram& x) {
  x.validate();
  const FinCat& s = *x.shape;
  std::vector<size_t> off(s.num_objects() + 1, 0);
  for (size_t i = 0; i < s.num_objects(); ++i) off[i + 1] = off[i] + x.dims[i];
  size_t total = off.back();

  size_t ncols = 0;
  for (size_t m = 0; m < s.num_morphisms(); ++m)
    if (!s.is_identity(static_cast<int>(m))) ncols += x.dims[s.morphism(static_cast<int>(m)).src];
  QMat phi = polyalg::q_zero(total, ncols);
  size_t col = 0;
  for (size_t m = 0; m < s.num_morphisms(); ++m) {
    if (s.is_identity(static_cast<int>(m))) continue;
    const FinCat::Mor& mor = s.morphism(static_cast<int>(m));
    for (size_t c = 0; c < x.dims[mor.src]; ++c) {
      phi[off[mor.src] + c][col + c] = phi[off[mor.src] + c][col + c] + Rational(1);
      for (size_t r = 0; r < x.dims[mor.dst]; ++r)
        phi[off[mor.dst] + r][col + c] = phi[off[mor.dst] + r][col + c] - x.maps[m][r][c];
    }
    col += x.dims[mor.src];
  }

  polyalg::Cokernel ck = polyalg::cokernel(phi);
  ColimitResult out;
  out.dim = ck.dim;
  for (size_t i = 0; i < s.num_objects(); ++i) {
    QMat block = polyalg::q_zero(out.dim, x.dims[i]);
    for (size_t r = 0; r < out.dim; ++r)
      for (size_t c = 0; c < x.dims[i]; ++c) block[r][c] = ck.projection[r][off[i] + c];
    out.cocone.push_back(std::move(block));
  }
  return out;
}

LimitResult limit(const VectDiagram& x) {
  x.validate();
  const FinCat& s = *x.shape;
  std::vector<size_t> off(s.num_objects() + 1, 0);
  for (size_t i = 0; i < s.num_objects(); ++i) off[i + 1] = off[i] + x.dims[i];
  size_t total = off.back();

  size_t nrows = 0;
  for (size_t m = 0; m < s.num_morphisms(); ++m)
    if (!s.is_identity(static_cast<int>(m))) nrows += x.dims[s.morphism(static_cast<int>(m)).dst];

  std::vector<QVec> basis;
  if (nrows == 0) {
    // no constraints: every tuple is compatible
    for (size_t j = 0; j < total; ++j) {
      QVec e(total, Rational(0));
      e[j] = Rational(1);
      basis.push_back(std::move(e));
    }
  } else {
    QMat con = polyalg::q_zero(nrows, total);
    size_t row = 0;
    for (size_t m = 0; m < s.num_morphisms(); ++m) {
      if (s.is_identity(static_cast<int>(m))) continue;
      const FinCat::Mor& mor = s.morphism(static_cast<int>(m));
      for (size_t r = 0; r < x.dims[mor.dst]; ++r) {
        con[row + r][off[mor.dst] + r] = Rational(-1);
        for (size_t c = 0; c < x.dims[mor.src]; ++c)
          con[row + r][off[mor.src] + c] = con[row + r][off[mor.src] + c] + x.maps[m][r][c];
      }
      row += x.dims[mor.dst];
    }
    basis = polyalg::kernel_basis(con);
  }

  LimitResult out;
  out.dim = basis.size();
  for (size_t i = 0; i < s.num_objects(); ++i) {
    QMat block = polyalg::q_zero(x.dims[i], out.dim);
    for (size_t r = 0; r < x.dims[i]; ++r)
      for (size_t c = 0; c < out.dim; ++c) block[r][c] = basis[c][off[i] + r];
    out.cone.push_back(std::move(block));
  }
  return out;
}

namespace {

struct PointValue {
  size_t dim = 0;
  std::vector<QMat> legs;                 // cocone (left) or cone (right), per cell
  std::vector<std::pair<int, int>> cells;  // comma cell data (a, f)
  std::map<std::pair<int, int>, int> cell_index;
  std::vector<size_t> cell_dims;
};

PointValue point_value(const FunctorData& u, const VectDiagram& x, int b,
                       KanDirection direction) {
  CommaSide side = direction == KanDirection::Left ? CommaSide::Over : CommaSide::Under;
  CommaResult comma = comma_category(u, b, side);
  VectDiagram restricted = restrict_diagram(comma.projection, x);
  PointValue pv;
  pv.cells = comma.object_data;
  for (size_t i = 0; i < pv.cells.size(); ++i) {
    pv.cell_index[pv.cells[i]] = static_cast<int>(i);
    pv.cell_dims.push_back(restricted.dims[i]);
  }
  if (direction == KanDirection::Left) {
    ColimitResult c = colimit(restricted);
    pv.dim = c.dim;
    pv.legs = std::move(c.cocone);
  } else {
    LimitResult l = limit(restricted);
    pv.dim = l.dim;
    pv.legs = std::move(l.cone);
  }
  return pv;
}

// Unique M with M * [stacked cocones of src] = [stacked relabelled cocones];
// the stacked cocone matrix has full row rank by construction.
QMat induced_left(const PointValue& src, const PointValue& dst, const FinCat& tgt_cat, int g) {
  if (src.dim == 0) return polyalg::q_zero(dst.dim, 0);
  if (dst.dim == 0) return polyalg::q_zero(0, src.dim);
  size_t total = 0;
  for (size_t d : src.cell_dims) total += d;
  QMat p = polyalg::q_zero(src.dim, total);
  QMat q = polyalg::q_zero(dst.dim, total);
  size_t col = 0;
  for (size_t i = 0; i < src.cells.size(); ++i) {
    auto [a, f] = src.cells[i];
    int f2 = tgt_cat.compose(g, f);
    const QMat& dleg = dst.legs[dst.cell_index.at({a, f2})];
    for (size_t c = 0; c < src.cell_dims[i]; ++c) {
      for (size_t r = 0; r < src.dim; ++r) p[r][col + c] = src.legs[i][r][c];
      for (size_t r = 0; r < dst.dim; ++r) q[r][col + c] = dleg[r][c];
    }
    col += src.cell_dims[i];
  }
  QMat pt = polyalg::q_transpose(p);
  QMat m = polyalg::q_zero(dst.dim, src.dim);
  for (size_t r = 0; r < dst.dim; ++r) {
    std::optional<QVec> sol = polyalg::solve(pt, q[r]);
    if (!sol) throw std::logic_error("left extension: induced map is over-determined");
    m[r] = std::move(*sol);
  }
  return m;
}

// Unique M with [stacked cones of dst] * M = [stacked relabelled cones of src];
// the stacked cone matrix has full column rank by construction.
QMat induced_right(const PointValue& src, const PointValue& dst, const FinCat& tgt_cat, int g) {
  if (src.dim == 0) return polyalg::q_zero(dst.dim, 0);
  if (dst.dim == 0) return polyalg::q_zero(0, src.dim);
  size_t total = 0;
  for (size_t d : dst.cell_dims) total += d;
  QMat cmat = polyalg::q_zero(total, dst.dim);
  QMat dmat = polyalg::q_zero(total, src.dim);
  size_t row = 0;
  for (size_t i = 0; i < dst.cells.size(); ++i) {
    auto [a, f2] = dst.cells[i];
    int f = tgt_cat.compose(f2, g);
    const QMat& sleg = src.legs[src.cell_index.at({a, f})];
    for (size_t r = 0; r < dst.cell_dims[i]; ++r) {
      for (size_t c = 0; c < dst.dim; ++c) cmat[row + r][c] = dst.legs[i][r][c];
      for (size_t c = 0; c < src.dim; ++c) dmat[row + r][c] = sleg[r][c];
    }
    row += dst.cell_dims[i];
  }
  QMat m = polyalg::q_zero(dst.dim, src.dim);
  for (size_t c = 0; c < src.dim; ++c) {
    QVec rhs(total, Rational(0));
    for (size_t r = 0; r < total; ++r) rhs[r] = dmat[r][c];
    std::optional<QVec> sol = polyalg::solve(cmat, rhs);
    if (!sol) throw std::logic_error("right extension: induced map is over-determined");
    for (size_t r = 0; r < dst.dim; ++r) m[r][c] = (*sol)[r];
  }
  return m;
}

}  // namespace

VectDiagram kan_extend_finvect(const FunctorData& u, const VectDiagram& x,
                               KanDirection direction) {
  u.validate();
  x.validate();
  if (!same_category(*u.source, *x.shape))
    throw std::invalid_argument("extension: functor source differs from diagram shape");
  const FinCat& tgt = *u.target;

  std::vector<PointValue> values;
  for (size_t b = 0; b < tgt.num_objects(); ++b)
    values.push_back(point_value(u, x, static_cast<int>(b), direction));

  VectDiagram out;
  out.shape = u.target;
  for (const PointValue& pv : values) out.dims.push_back(pv.dim);
  out.maps.resize(tgt.num_morphisms());
  for (size_t m = 0; m < tgt.num_morphisms(); ++m) {
    const FinCat::Mor& mor = tgt.morphism(static_cast<int>(m));
    if (tgt.is_identity(static_cast<int>(m))) {
      out.maps[m] = polyalg::q_identity(values[mor.src].dim);
      continue;
    }
    out.maps[m] = direction == KanDirection::Left
                      ? induced_left(values[mor.src], values[mor.dst], tgt, static_cast<int>(m))
                      : induced_right(values[mor.src], values[mor.dst], tgt, static_cast<int>(m));
  }
  return out;
}

KanComparison kan_pointwise_comparison(const FunctorData& u, const VectDiagram& x, int b) {
  if (b < 0 || (u.target && b >= static_cast<int>(u.target->num_objects())))
    throw std::invalid_argument("comparison: object out of range");
  VectDiagram lan = kan_extend_finvect(u, x, KanDirection::Left);
  KanComparison out;
  out.kan_dim = lan.dims[b];
  CommaResult comma = comma_category(u, b, CommaSide::Over);
  out.comma_colim_dim = colimit(restrict_diagram(comma.projection, x)).dim;
  out.comparison_iso = out.kan_dim == out.comma_colim_dim;
  return out;
}

}  // namespace a1mod::fincat
