#include "a1mod/polyalg/linalg.hpp"

#include <stdexcept>

namespace a1mod::polyalg {

QMat q_identity(size_t n) {
  QMat m(n, QVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat q_zero(size_t rows, size_t cols) { return QMat(rows, QVec(cols, Rational(0))); }

namespace {
size_t cols_of(const QMat& a) { return a.empty() ? 0 : a[0].size(); }

void check_rect(const QMat& a) {
  for (const QVec& row : a)
    if (row.size() != a[0].size()) throw std::invalid_argument("ragged matrix");
}
}  // namespace

QMat q_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = cols_of(a), m = cols_of(b);
  if (k != b.size()) throw std::invalid_argument("q_mul: inner dimensions");
  QMat r = q_zero(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

QMat q_add(const QMat& a, const QMat& b) {
  if (a.size() != b.size() || cols_of(a) != cols_of(b))
    throw std::invalid_argument("q_add: shapes");
  QMat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

QMat q_sub(const QMat& a, const QMat& b) {
  if (a.size() != b.size() || cols_of(a) != cols_of(b))
    throw std::invalid_argument("q_sub: shapes");
  QMat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

QMat q_scale(const QMat& a, const Rational& c) {
  QMat r = a;
  for (QVec& row : r)
    for (Rational& x : row) x *= c;
  return r;
}

QMat q_transpose(const QMat& a) {
  QMat r = q_zero(cols_of(a), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

QMat q_kron(const QMat& a, const QMat& b) {
  size_t ar = a.size(), ac = cols_of(a), br = b.size(), bc = cols_of(b);
  QMat r = q_zero(ar * br, ac * bc);
  for (size_t i = 0; i < ar; ++i)
    for (size_t j = 0; j < ac; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t k = 0; k < br; ++k)
        for (size_t l = 0; l < bc; ++l) r[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    }
  return r;
}

QVec q_apply(const QMat& a, const QVec& v) {
  if (cols_of(a) != v.size()) throw std::invalid_argument("q_apply: shapes");
  QVec r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

bool q_is_zero(const QMat& a) {
  for (const QVec& row : a)
    for (const Rational& x : row)
      if (x != 0) return false;
  return true;
}

std::vector<size_t> rref(QMat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  check_rect(a);
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t q_rank(QMat a) { return rref(a).size(); }

std::vector<QVec> kernel_basis(const QMat& a) {
  size_t cols = cols_of(a);
  QMat m = a;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: shapes");
  size_t cols = cols_of(a);
  QMat aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  if (aug.empty()) return QVec(cols, Rational(0));
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
  QVec x(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::optional<QMat> inverse(const QMat& a) {
  size_t n = a.size();
  if (n != cols_of(a) && n != 0) throw std::invalid_argument("inverse: square only");
  QMat aug = a;
  for (size_t i = 0; i < n; ++i) {
    QVec e(n, Rational(0));
    e[i] = 1;
    aug[i].insert(aug[i].end(), e.begin(), e.end());
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  QMat inv = q_zero(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Cokernel cokernel(const QMat& a) {
  // rows of a = ambient dimension; quotient by the column space
  size_t ambient = a.size();
  QMat cols_as_rows = q_transpose(a);
  QMat m = cols_as_rows;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> in_span(ambient, false);
  for (size_t c : pivots) in_span[c] = true;
  // coordinates not hit by a pivot survive; express the quotient map as
  // "subtract the span part", computed by reducing each basis vector
  Cokernel result;
  result.dim = ambient - pivots.size();
  result.projection = q_zero(result.dim, ambient);
  // the quotient sends e_j to its residue: for pivot columns, e_j reduces via
  // the row echelon relations; build by Gaussian elimination on [I | basis]
  // Simpler: complete the pivot rows of m to a basis, invert, and keep the
  // coordinate rows of the non-pivot part.
  QMat basis;  // rows: first the span, then the surviving coordinate vectors
  for (size_t r = 0; r < pivots.size(); ++r) basis.push_back(m[r]);
  std::vector<size_t> free_rows;
  for (size_t j = 0; j < ambient; ++j)
    if (!in_span[j]) {
      QVec e(ambient, Rational(0));
      e[j] = 1;
      free_rows.push_back(basis.size());
      basis.push_back(std::move(e));
    }
  if (result.dim == 0) return result;
  QMat change = q_transpose(basis);  // columns are the basis vectors
  QMat inv = *inverse(change);       // full rank by construction
  for (size_t k = 0; k < free_rows.size(); ++k) result.projection[k] = inv[free_rows[k]];
  return result;
}

}  // namespace a1mod::polyalg
