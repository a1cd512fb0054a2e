#pragma once

#include "a1mod/polyalg/poly.hpp"

#include <string>
#include <vector>

namespace a1mod::polyalg {

// Dense matrix of Poly entries over a shared variable list.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols, std::vector<std::string> vars);

  static PolyMatrix identity(size_t n, std::vector<std::string> vars);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const std::vector<std::string>& vars() const { return vars_; }

  const Poly& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  void set(size_t i, size_t j, const Poly& p);  // reindexes p over vars(); checks fit

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;

  // Substitutes variables in every entry; result lives over target_vars.
  PolyMatrix substitute(const std::vector<Poly>& images,
                        const std::vector<std::string>& target_vars) const;
  PolyMatrix with_vars(const std::vector<std::string>& new_vars) const;

  // [this | o] side by side; row counts must agree.
  PolyMatrix augment_cols(const PolyMatrix& o) const;
  // Kronecker product; variable lists must agree.
  PolyMatrix kronecker(const PolyMatrix& o) const;

  // Laplace expansion; intended for small matrices (tests only).
  Poly det_expansion() const;

  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<std::string> vars_;
  std::vector<Poly> entries_;
};

}  // namespace a1mod::polyalg
