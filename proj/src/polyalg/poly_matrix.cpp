#include "a1mod/polyalg/poly_matrix.hpp"

#include <stdexcept>

namespace a1mod::polyalg {

PolyMatrix::PolyMatrix(size_t rows, size_t cols, std::vector<std::string> vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)),
      entries_(rows * cols, Poly::zero(vars_)) {}

PolyMatrix PolyMatrix::identity(size_t n, std::vector<std::string> vars) {
  PolyMatrix m(n, n, std::move(vars));
  for (size_t i = 0; i < n; ++i) m.set(i, i, Poly::constant(m.vars_, Rational(1)));
  return m;
}

void PolyMatrix::set(size_t i, size_t j, const Poly& p) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("poly matrix: index");
  entries_[i * cols_ + j] = p.vars() == vars_ ? p : p.with_vars(vars_);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || vars_ != o.vars_)
    throw std::invalid_argument("poly matrix mul: shape or variables");
  PolyMatrix r(rows_, o.cols_, vars_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.entries_[i * r.cols_ + j] = r.at(i, j) + a * o.at(k, j);
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || vars_ != o.vars_)
    throw std::invalid_argument("poly matrix add: shape or variables");
  PolyMatrix r(rows_, cols_, vars_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || vars_ != o.vars_)
    throw std::invalid_argument("poly matrix sub: shape or variables");
  PolyMatrix r(rows_, cols_, vars_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && vars_ == o.vars_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::substitute(const std::vector<Poly>& images,
                                  const std::vector<std::string>& target_vars) const {
  PolyMatrix r(rows_, cols_, target_vars);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      r.entries_[i * cols_ + j] = at(i, j).substitute(images, target_vars);
  return r;
}

PolyMatrix PolyMatrix::with_vars(const std::vector<std::string>& new_vars) const {
  PolyMatrix r(rows_, cols_, new_vars);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].with_vars(new_vars);
  return r;
}

PolyMatrix PolyMatrix::augment_cols(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || vars_ != o.vars_)
    throw std::invalid_argument("augment: row counts and variables must agree");
  PolyMatrix r(rows_, cols_ + o.cols_, vars_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.entries_[i * r.cols_ + j] = at(i, j);
    for (size_t j = 0; j < o.cols_; ++j) r.entries_[i * r.cols_ + cols_ + j] = o.at(i, j);
  }
  return r;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("kronecker: variables must agree");
  PolyMatrix r(rows_ * o.rows_, cols_ * o.cols_, vars_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l)
          r.entries_[(i * o.rows_ + k) * r.cols_ + (j * o.cols_ + l)] = at(i, j) * o.at(k, l);
    }
  return r;
}

Poly PolyMatrix::det_expansion() const {
  if (rows_ != cols_) throw std::invalid_argument("det: square matrices only");
  if (rows_ == 0) return Poly::constant(vars_, Rational(1));
  if (rows_ == 1) return at(0, 0);
  Poly det = Poly::zero(vars_);
  for (size_t j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    PolyMatrix minor(rows_ - 1, cols_ - 1, vars_);
    for (size_t i = 1; i < rows_; ++i) {
      size_t jj = 0;
      for (size_t k = 0; k < cols_; ++k) {
        if (k == j) continue;
        minor.entries_[(i - 1) * minor.cols_ + jj] = at(i, k);
        ++jj;
      }
    }
    Poly piece = at(0, j) * minor.det_expansion();
    det = (j % 2 == 0) ? det + piece : det - piece;
  }
  return det;
}

std::string PolyMatrix::str() const {
  std::string out;
  for (size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]\n";
  }
  return out;
}

}  // namespace a1mod::polyalg
