#include "a1mod/derived/chain_complex.hpp"

#include <stdexcept>

namespace a1mod::derived {

using polyalg::q_is_zero;
using polyalg::q_mul;
using polyalg::q_rank;
using polyalg::q_zero;

namespace {
size_t cols_of(const QMat& a) { return a.empty() ? 0 : a[0].size(); }

void check_shape(const QMat& m, size_t rows, size_t cols, const char* what) {
  if (m.size() != rows || (rows > 0 && cols_of(m) != cols) || (rows == 0 && cols > 0 && !m.empty()))
    throw std::invalid_argument(std::string(what) + ": matrix shape mismatch");
}
}  // namespace

ChainComplex::ChainComplex(int min_deg, std::vector<size_t> dims_, std::vector<QMat> diffs)
    : min_degree(min_deg), dims(std::move(dims_)), differentials(std::move(diffs)) {
  size_t expected = dims.empty() ? 0 : dims.size() - 1;
  if (differentials.size() != expected)
    throw std::invalid_argument("complex: need one differential per adjacent pair");
  for (size_t i = 0; i < differentials.size(); ++i)
    check_shape(differentials[i], dims[i], dims[i + 1], "complex differential");
  for (size_t i = 0; i + 1 < differentials.size(); ++i) {
    if (dims[i] == 0 || dims[i + 2] == 0) continue;
    if (!q_is_zero(q_mul(differentials[i], differentials[i + 1])))
      throw std::invalid_argument("complex: d after d is nonzero");
  }
}

size_t ChainComplex::dim_at(int degree) const {
  int idx = degree - min_degree;
  if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
  return dims[static_cast<size_t>(idx)];
}

QMat ChainComplex::differential_from(int degree) const {
  int idx = degree - min_degree - 1;
  if (idx < 0 || idx >= static_cast<int>(differentials.size()))
    return q_zero(dim_at(degree - 1), dim_at(degree));
  return differentials[static_cast<size_t>(idx)];
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    long long sign = ((min_degree + static_cast<int>(i)) % 2 == 0) ? 1 : -1;
    chi += sign * static_cast<long long>(dims[i]);
  }
  return chi;
}

ChainComplex complex_direct_sum(const ChainComplex& a, const ChainComplex& b) {
  int lo = a.min_degree < b.min_degree ? a.min_degree : b.min_degree;
  int hi = a.max_degree() > b.max_degree() ? a.max_degree() : b.max_degree();
  if (a.dims.empty()) return b;
  if (b.dims.empty()) return a;
  std::vector<size_t> dims;
  std::vector<QMat> diffs;
  for (int d = lo; d <= hi; ++d) dims.push_back(a.dim_at(d) + b.dim_at(d));
  for (int d = lo + 1; d <= hi; ++d) {
    QMat da = a.differential_from(d);
    QMat db = b.differential_from(d);
    QMat block = q_zero(a.dim_at(d - 1) + b.dim_at(d - 1), a.dim_at(d) + b.dim_at(d));
    for (size_t i = 0; i < da.size(); ++i)
      for (size_t j = 0; j < (da.empty() ? 0 : da[i].size()); ++j) block[i][j] = da[i][j];
    for (size_t i = 0; i < db.size(); ++i)
      for (size_t j = 0; j < (db.empty() ? 0 : db[i].size()); ++j)
        block[a.dim_at(d - 1) + i][a.dim_at(d) + j] = db[i][j];
    diffs.push_back(std::move(block));
  }
  return ChainComplex(lo, std::move(dims), std::move(diffs));
}

ComplexMap::ComplexMap(ChainComplex src, ChainComplex tgt, std::vector<QMat> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
  if (components.size() != source.dims.size())
    throw std::invalid_argument("complex map: one component per source degree");
  for (size_t i = 0; i < components.size(); ++i) {
    int deg = source.min_degree + static_cast<int>(i);
    check_shape(components[i], target.dim_at(deg), source.dims[i], "complex map component");
  }
  // commutes with the differentials: f d_src = d_tgt f
  for (size_t i = 0; i + 1 < components.size(); ++i) {
    int deg = source.min_degree + static_cast<int>(i) + 1;  // the higher degree
    QMat lhs = q_mul(component_at(deg - 1), source.differential_from(deg));
    QMat rhs = q_mul(target.differential_from(deg), component_at(deg));
    if (lhs.size() != rhs.size())
      throw std::invalid_argument("complex map: frame mismatch");
    if (!q_is_zero(polyalg::q_sub(lhs, rhs)))
      throw std::invalid_argument("complex map: does not commute with d");
  }
}

QMat ComplexMap::component_at(int degree) const {
  int idx = degree - source.min_degree;
  if (idx < 0 || idx >= static_cast<int>(components.size()))
    return q_zero(target.dim_at(degree), source.dim_at(degree));
  return components[static_cast<size_t>(idx)];
}

ChainComplex cone(const ComplexMap& f) {
  int lo = f.target.min_degree < f.source.min_degree + 1 ? f.target.min_degree
                                                         : f.source.min_degree + 1;
  int hi_t = f.target.dims.empty() ? f.target.min_degree - 1 : f.target.max_degree();
  int hi_s = f.source.dims.empty() ? f.source.min_degree : f.source.max_degree() + 1;
  int hi = hi_t > hi_s ? hi_t : hi_s;
  std::vector<size_t> dims;
  std::vector<QMat> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(f.target.dim_at(n) + f.source.dim_at(n - 1));
  for (int n = lo + 1; n <= hi; ++n) {
    size_t rows = f.target.dim_at(n - 1) + f.source.dim_at(n - 2);
    size_t cols = f.target.dim_at(n) + f.source.dim_at(n - 1);
    QMat d = q_zero(rows, cols);
    QMat dt = f.target.differential_from(n);
    QMat fc = f.component_at(n - 1);
    QMat ds = f.source.differential_from(n - 1);
    for (size_t i = 0; i < f.target.dim_at(n - 1); ++i)
      for (size_t j = 0; j < f.target.dim_at(n); ++j) d[i][j] = dt[i][j];
    for (size_t i = 0; i < f.target.dim_at(n - 1); ++i)
      for (size_t j = 0; j < f.source.dim_at(n - 1); ++j)
        d[i][f.target.dim_at(n) + j] = fc[i][j];
    for (size_t i = 0; i < f.source.dim_at(n - 2); ++i)
      for (size_t j = 0; j < f.source.dim_at(n - 1); ++j)
        d[f.target.dim_at(n - 1) + i][f.target.dim_at(n) + j] = -ds[i][j];
    diffs.push_back(std::move(d));
  }
  return ChainComplex(lo, std::move(dims), std::move(diffs));
}

ChainComplex ev_zero_derived(const EndoPair& m) {
  m.validate();
  return ChainComplex(0, {m.dim, m.dim}, {m.endo});
}

ChainComplex ev_alpha_derived(const EndoPair& m, const Rational& alpha) {
  m.validate();
  QMat d = m.endo;
  for (size_t i = 0; i < m.dim; ++i) d[i][i] -= alpha;
  return ChainComplex(0, {m.dim, m.dim}, {d});
}

size_t homology(const ChainComplex& c, int n) {
  size_t dim_n = c.dim_at(n);
  if (dim_n == 0) return 0;
  QMat out = c.differential_from(n);        // n -> n-1
  QMat in = c.differential_from(n + 1);     // n+1 -> n
  size_t rank_out = c.dim_at(n - 1) == 0 ? 0 : q_rank(out);
  size_t rank_in = c.dim_at(n + 1) == 0 ? 0 : q_rank(in);
  return dim_n - rank_out - rank_in;
}

bool is_acyclic(const ChainComplex& c) {
  for (int n = c.min_degree; n <= c.max_degree(); ++n)
    if (homology(c, n) != 0) return false;
  return true;
}

}  // namespace a1mod::derived
