#pragma once

#include "a1mod/polyalg/rational.hpp"

#include <optional>
#include <vector>

namespace a1mod::polyalg {

// Dense exact linear algebra over Rational.
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major; all rows same length

QMat q_identity(size_t n);
QMat q_zero(size_t rows, size_t cols);
QMat q_mul(const QMat& a, const QMat& b);
QMat q_add(const QMat& a, const QMat& b);
QMat q_sub(const QMat& a, const QMat& b);
QMat q_scale(const QMat& a, const Rational& c);
QMat q_transpose(const QMat& a);
// Kronecker product a (x) b.
QMat q_kron(const QMat& a, const QMat& b);
QVec q_apply(const QMat& a, const QVec& v);
bool q_is_zero(const QMat& a);

size_t q_rank(QMat a);

// Basis of the null space {v : a v = 0}; size = cols - rank.
std::vector<QVec> kernel_basis(const QMat& a);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(QMat& a);

// One solution of a x = b, if any.
std::optional<QVec> solve(const QMat& a, const QVec& b);

std::optional<QMat> inverse(const QMat& a);

// Cokernel of a: a projection ℚ^rows -> ℚ^(rows-rank) onto coordinates
// complementary to the column space, with the reduction matrix realizing it.
struct Cokernel {
  size_t dim = 0;
  QMat projection;  // dim x rows; applies the quotient map
};
Cokernel cokernel(const QMat& a);

}  // namespace a1mod::polyalg
