#include "a1mod/polyalg/snf.hpp"

#include <stdexcept>
#include <utility>

namespace a1mod::polyalg {

namespace {

// Division usable in both supported rings: ℚ (exact) and ℚ[x] (Euclidean).
std::pair<Poly, Poly> divide(const Poly& a, const Poly& b) {
  if (a.vars().size() == 1) return divmod(a, b);
  // constants: exact division
  return {Poly::constant(a.vars(), a.constant_value() / b.constant_value()),
          Poly::zero(a.vars())};
}

struct Worker {
  size_t rows, cols;
  std::vector<std::string> vars;
  std::vector<std::vector<Poly>> m;
  PolyMatrix left, right;
  Rational left_det = 1, right_det = 1;

  explicit Worker(const PolyMatrix& a)
      : rows(a.rows()), cols(a.cols()), vars(a.vars()),
        left(PolyMatrix::identity(a.rows(), a.vars())),
        right(PolyMatrix::identity(a.cols(), a.vars())) {
    m.assign(rows, std::vector<Poly>(cols, Poly::zero(vars)));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
  }

  // left-multiplication bookkeeping: every row op applies to m and to left
  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    for (size_t c = 0; c < rows; ++c) {
      Poly tmp = left.at(i, c);
      left.set(i, c, left.at(j, c));
      left.set(j, c, tmp);
    }
    left_det = -left_det;
  }

  void add_row(size_t dst, size_t src, const Poly& q) {  // row_dst -= q * row_src
    if (q.is_zero()) return;
    for (size_t c = 0; c < cols; ++c) m[dst][c] = m[dst][c] - q * m[src][c];
    for (size_t c = 0; c < rows; ++c) left.set(dst, c, left.at(dst, c) - q * left.at(src, c));
  }

  void scale_row(size_t i, const Rational& c) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j].scaled(c);
    for (size_t j = 0; j < rows; ++j) left.set(i, j, left.at(i, j).scaled(c));
    left_det *= c;
  }

  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
    for (size_t r = 0; r < cols; ++r) {
      Poly tmp = right.at(r, i);
      right.set(r, i, right.at(r, j));
      right.set(r, j, tmp);
    }
    right_det = -right_det;
  }

  void add_col(size_t dst, size_t src, const Poly& q) {  // col_dst -= q * col_src
    if (q.is_zero()) return;
    for (size_t r = 0; r < rows; ++r) m[r][dst] = m[r][dst] - q * m[r][src];
    for (size_t r = 0; r < cols; ++r) right.set(r, dst, right.at(r, dst) - q * right.at(r, src));
  }

  bool find_pivot(size_t t, size_t* pi, size_t* pj) const {
    int best = -1;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        int d = m[i][j].total_degree();
        if (best < 0 || d < best) {
          best = d;
          *pi = i;
          *pj = j;
        }
      }
    return best >= 0;
  }

  void run(std::vector<Poly>* diag) {
    size_t limit = rows < cols ? rows : cols;
    for (size_t t = 0; t < limit; ++t) {
      size_t pi = t, pj = t;
      if (!find_pivot(t, &pi, &pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool restart = false;
        for (size_t i = t + 1; i < rows && !restart; ++i) {
          if (m[i][t].is_zero()) continue;
          auto [q, r] = divide(m[i][t], m[t][t]);
          add_row(i, t, q);
          if (!r.is_zero()) {  // lower degree remainder becomes the pivot
            swap_rows(t, i);
            restart = true;
          }
        }
        if (restart) continue;
        for (size_t j = t + 1; j < cols && !restart; ++j) {
          if (m[t][j].is_zero()) continue;
          auto [q, r] = divide(m[t][j], m[t][t]);
          add_col(j, t, q);
          if (!r.is_zero()) {
            swap_cols(t, j);
            restart = true;
          }
        }
        if (restart) continue;
        // pivot must divide the rest of the block; pull a bad row up and retry
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
          for (size_t j = t + 1; j < cols && !fixed; ++j) {
            if (m[i][j].is_zero()) continue;
            if (divide(m[i][j], m[t][t]).second.is_zero()) continue;
            add_row(t, i, Poly::constant(vars, Rational(-1)));  // row_t += row_i
            fixed = true;
          }
        if (!fixed) break;
      }
      scale_row(t, Rational(1) / m[t][t].leading_coeff());
      diag->push_back(m[t][t]);
    }
  }
};

}  // namespace

PolyMatrix SnfResult::diagonal_matrix(size_t rows, size_t cols) const {
  PolyMatrix d(rows, cols, left.vars());
  for (size_t i = 0; i < diag.size(); ++i) d.set(i, i, diag[i]);
  return d;
}

SnfResult smith_normal_form(const PolyMatrix& a) {
  if (a.vars().size() >= 2)
    throw std::invalid_argument("smith_normal_form: at most one variable");
  Worker w(a);
  SnfResult result;
  w.run(&result.diag);
  result.left = std::move(w.left);
  result.right = std::move(w.right);
  result.left_det = w.left_det;
  result.right_det = w.right_det;
  size_t limit = a.rows() < a.cols() ? a.rows() : a.cols();
  result.rank_deficiency = limit - result.diag.size();
  return result;
}

}  // namespace a1mod::polyalg
