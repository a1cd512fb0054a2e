#include <doctest.h>

#include "a1mod/polyalg/linalg.hpp"
#include "a1mod/polyalg/poly_matrix.hpp"
#include "a1mod/polyalg/snf.hpp"

#include <random>

using namespace a1mod::polyalg;

namespace {
const std::vector<std::string> T{"t"};

PolyMatrix mat(size_t r, size_t c, const std::vector<std::string>& vars,
               const std::vector<std::string>& entries) {
  PolyMatrix m(r, c, vars);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.set(i, j, parse_poly(entries[i * c + j], vars));
  return m;
}

void check_snf_contract(const PolyMatrix& a, const SnfResult& s) {
  // left * A * right = diag padded with zeros
  CHECK(s.left * a * s.right == s.diagonal_matrix(a.rows(), a.cols()));
  // unit determinants, tracked exactly
  CHECK(s.left_det != 0);
  CHECK(s.right_det != 0);
  // divisibility chain of monic factors
  for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
    auto [q, r] = divmod(s.diag[i + 1].with_vars(T), s.diag[i].with_vars(T));
    CHECK(r.is_zero());
  }
  for (const auto& d : s.diag) CHECK(d.leading_coeff() == 1);
}
}  // namespace

TEST_CASE("snf of [[t,1],[0,t]] has invariant factors (1, t^2)") {
  PolyMatrix a = mat(2, 2, T, {"t", "1", "0", "t"});
  SnfResult s = smith_normal_form(a);
  REQUIRE(s.diag.size() == 2);
  CHECK(s.diag[0] == parse_poly("1", T));
  CHECK(s.diag[1] == parse_poly("t^2", T));
  CHECK(s.rank_deficiency == 0);
  check_snf_contract(a, s);
}

TEST_CASE("snf of the identity is all ones") {
  PolyMatrix a = PolyMatrix::identity(3, T);
  SnfResult s = smith_normal_form(a);
  REQUIRE(s.diag.size() == 3);
  for (const auto& d : s.diag) CHECK(d == parse_poly("1", T));
  CHECK(s.rank_deficiency == 0);
}

TEST_CASE("snf of the zero matrix is all zeros") {
  PolyMatrix a(2, 3, T);
  SnfResult s = smith_normal_form(a);
  CHECK(s.diag.empty());
  CHECK(s.rank_deficiency == 2);  // min(rows, cols)
}

TEST_CASE("snf rejects two-variable matrices") {
  PolyMatrix a(1, 1, {"t1", "t2"});
  a.set(0, 0, parse_poly("t1", {"t1", "t2"}));
  CHECK_THROWS(smith_normal_form(a));
}

TEST_CASE("snf handles constant matrices as the zero-variable ring") {
  PolyMatrix a = mat(2, 2, {}, {"2", "4", "1", "3"});  // det = 2, rank 2
  SnfResult s = smith_normal_form(a);
  REQUIRE(s.diag.size() == 2);
  for (const auto& d : s.diag) CHECK(d == Poly::constant({}, 1));
}

TEST_CASE("snf idempotence and contract on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    PolyMatrix a(r, c, T);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) {
        Poly p(T);
        int deg = static_cast<int>(rng() % 3);
        for (int d = 0; d <= deg; ++d) {
          int coeff = static_cast<int>(rng() % 5) - 2;
          if (coeff != 0) p.add_term({d}, Rational(coeff));
        }
        a.set(i, j, p);
      }
    SnfResult s = smith_normal_form(a);
    check_snf_contract(a, s);
    // applying SNF to the diagonal of an SnfResult returns the same factors
    SnfResult again = smith_normal_form(s.diagonal_matrix(r, c));
    REQUIRE(again.diag.size() == s.diag.size());
    for (size_t i = 0; i < s.diag.size(); ++i) CHECK(again.diag[i] == s.diag[i]);
    // unimodularity cross-check by Laplace expansion at these sizes
    CHECK(s.left.det_expansion() == Poly::constant(T, s.left_det));
    CHECK(s.right.det_expansion() == Poly::constant(T, s.right_det));
  }
}

TEST_CASE("kernel_basis frozen values") {
  // [[1,1]] -> {(1,-1)}
  QMat a{{Rational(1), Rational(1)}};
  auto basis = kernel_basis(a);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] * Rational(-1) == basis[0][1]);
  // identity -> empty basis
  CHECK(kernel_basis(q_identity(3)).empty());
  // [[0,1],[0,0]] -> {(1,0)}
  QMat b{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
  auto kb = kernel_basis(b);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0] != 0);
  CHECK(kb[0][1] == 0);
}

TEST_CASE("kernel vectors always annihilate and count cols minus rank") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    QMat a(r, QVec(c));
    for (auto& row : a)
      for (auto& x : row) x = Rational(static_cast<int>(rng() % 5) - 2);
    auto basis = kernel_basis(a);
    CHECK(basis.size() == c - q_rank(a));
    for (const auto& v : basis) {
      QVec av = q_apply(a, v);
      for (const auto& x : av) CHECK(x == 0);
    }
  }
}

TEST_CASE("cokernel projection has full rank and kills the image") {
  QMat a{{Rational(1), Rational(0)}, {Rational(2), Rational(0)}, {Rational(0), Rational(0)}};
  Cokernel ck = cokernel(a);
  CHECK(ck.dim == 2);  // 3 rows - rank 1
  CHECK(q_rank(ck.projection) == 2);
  CHECK(q_is_zero(q_mul(ck.projection, a)));
}
