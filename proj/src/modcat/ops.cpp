#include "a1mod/modcat/ops.hpp"

#include <stdexcept>

namespace a1mod::modcat {

using polyalg::PolyMatrix;
using polyalg::QMat;

namespace {
Poly var_monomial(const std::vector<std::string>& vars, const std::string& var) {
  return Poly::monomial(vars, var, 1, Rational(1));
}
}  // namespace

FpModule base_change(const FpModule& m, const RingMap& phi) {
  m.validate();
  phi.validate();
  if (m.ring != phi.source_vars)
    throw std::invalid_argument("base_change: map does not start at the module ring");
  FpModule out;
  out.ring = phi.target_vars;
  out.generators = m.generators;
  out.presentation = m.presentation.substitute(phi.images, phi.target_vars);
  return out;
}

FpModule structure_i(const FpModule& v, const std::string& var) {
  v.validate();
  if (!v.ring.empty())
    throw std::invalid_argument("structure_i: input must be a plain vector space");
  FpModule out;
  out.ring = {var};
  out.generators = v.generators;
  out.presentation = v.presentation.with_vars(out.ring);
  return out;
}

FpModule external_product(const FpModule& m, const FpModule& n,
                          const std::string& var1, const std::string& var2) {
  m.validate();
  n.validate();
  if (m.ring.size() != 1 || n.ring.size() != 1)
    throw std::invalid_argument("external_product: one-variable modules only");
  std::vector<std::string> ring{var1, var2};
  PolyMatrix a = m.presentation.substitute({var_monomial(ring, var1)}, ring);
  PolyMatrix b = n.presentation.substitute({var_monomial(ring, var2)}, ring);
  PolyMatrix left = a.kronecker(PolyMatrix::identity(n.generators, ring));
  PolyMatrix right = PolyMatrix::identity(m.generators, ring).kronecker(b);
  FpModule out;
  out.ring = ring;
  out.generators = m.generators * n.generators;
  out.presentation = left.augment_cols(right);
  return out;
}

FpModule plus_shriek(const FpModule& p, const std::string& var) {
  p.validate();
  if (p.ring.empty()) throw std::invalid_argument("plus_shriek: nothing to merge");
  std::vector<std::string> ring{var};
  std::vector<Poly> images(p.ring.size(), var_monomial(ring, var));
  FpModule out;
  out.ring = ring;
  out.generators = p.generators;
  out.presentation = p.presentation.substitute(images, ring);
  return out;
}

FpModule tensor_a1(const FpModule& m, const FpModule& n) {
  if (m.ring.size() != 1)
    throw std::invalid_argument("tensor_a1: one-variable modules only");
  return plus_shriek(external_product(m, n), m.ring[0]);
}

EndoPair tensor_coeq(const EndoPair& m, const EndoPair& n) {
  m.validate();
  n.validate();
  size_t total = m.dim * n.dim;
  if (total == 0) return EndoPair{0, {}};
  QMat t_side = polyalg::q_kron(m.endo, polyalg::q_identity(n.dim));
  QMat s_side = polyalg::q_kron(polyalg::q_identity(m.dim), n.endo);
  QMat k = polyalg::q_sub(t_side, s_side);
  polyalg::Cokernel ck = polyalg::cokernel(k);
  if (ck.dim == 0) return EndoPair{0, {}};
  // induced endomorphism: solve E * P = P * (T (x) I); P has a right inverse
  QMat pt = polyalg::q_transpose(ck.projection);
  QMat gram = polyalg::q_mul(ck.projection, pt);
  QMat right_inv = polyalg::q_mul(pt, *polyalg::inverse(gram));
  QMat e = polyalg::q_mul(polyalg::q_mul(ck.projection, t_side), right_inv);
  // well-definedness: the action must kill the image of k
  QMat residue = polyalg::q_mul(polyalg::q_mul(ck.projection, t_side), k);
  if (!polyalg::q_is_zero(residue))
    throw std::logic_error("tensor_coeq: action does not descend");
  return EndoPair{ck.dim, e};
}

FpModule ev_alpha(const FpModule& m, const TypeWitness& w) {
  m.validate();
  w.validate();
  if (m.ring.size() != 1)
    throw std::invalid_argument("ev_alpha: one-variable modules only");
  FpModule out;
  out.ring = w.target_vars;
  out.generators = m.generators;
  out.presentation = m.presentation.substitute({w.alpha}, w.target_vars);
  return out;
}

FpModule ev_alpha_boxed(const FpModule& m, const TypeWitness& w) {
  m.validate();
  w.validate();
  if (m.ring.size() != 1)
    throw std::invalid_argument("ev_alpha_boxed: one-variable modules only");
  const std::string& aux = m.ring[0];
  for (const std::string& v : w.target_vars)
    if (v == aux)
      throw std::invalid_argument("ev_alpha_boxed: witness variable shadows the module variable");
  // two-variable stage: [A(aux) | (aux - alpha) I] over {aux} + target vars
  std::vector<std::string> big{aux};
  big.insert(big.end(), w.target_vars.begin(), w.target_vars.end());
  PolyMatrix a_block = m.presentation.with_vars(big);
  PolyMatrix shift = PolyMatrix::identity(m.generators, big);
  Poly factor = var_monomial(big, aux) - w.alpha.with_vars(big);
  PolyMatrix scaled(m.generators, m.generators, big);
  for (size_t i = 0; i < m.generators; ++i) scaled.set(i, i, factor);
  PolyMatrix staged = a_block.augment_cols(scaled);
  // eliminate the auxiliary variable along aux -> alpha
  std::vector<Poly> images;
  images.push_back(w.alpha);
  for (const std::string& v : w.target_vars) images.push_back(var_monomial(w.target_vars, v));
  FpModule out;
  out.ring = w.target_vars;
  out.generators = m.generators;
  out.presentation = staged.substitute(images, w.target_vars);
  return out;
}

FpModule ev_one_via_colimit(const EndoPair& m) {
  m.validate();
  if (m.dim == 0) return FpModule::zero_module({});
  QMat k = polyalg::q_sub(m.endo, polyalg::q_identity(m.dim));
  polyalg::Cokernel ck = polyalg::cokernel(k);
  return FpModule::free_module({}, ck.dim);
}

FpModule restrict_plus(const FpModule& m, const std::string& var1, const std::string& var2) {
  m.validate();
  if (m.ring.size() != 1)
    throw std::invalid_argument("restrict_plus: one-variable modules only");
  std::vector<std::string> ring{var1, var2};
  PolyMatrix a = m.presentation.substitute({var_monomial(ring, var1)}, ring);
  Poly diff = var_monomial(ring, var1) - var_monomial(ring, var2);
  PolyMatrix glue(m.generators, m.generators, ring);
  for (size_t i = 0; i < m.generators; ++i) glue.set(i, i, diff);
  FpModule out;
  out.ring = ring;
  out.generators = m.generators;
  out.presentation = a.augment_cols(glue);
  return out;
}

EndoPair hom_fp(const EndoPair& m, const EndoPair& n) {
  m.validate();
  n.validate();
  size_t total = n.dim * m.dim;  // entries of X: n.dim x m.dim, row-major
  if (total == 0) return EndoPair{0, {}};
  // constraint X T_m - T_n X = 0 on vec(X)
  QMat lhs = polyalg::q_kron(polyalg::q_identity(n.dim), polyalg::q_transpose(m.endo));
  QMat rhs = polyalg::q_kron(n.endo, polyalg::q_identity(m.dim));
  QMat constraint = polyalg::q_sub(lhs, rhs);
  std::vector<polyalg::QVec> basis = polyalg::kernel_basis(constraint);
  size_t d = basis.size();
  if (d == 0) return EndoPair{0, {}};
  // post-composition with T_n in kernel coordinates
  QMat basis_cols = polyalg::q_zero(total, d);
  for (size_t b = 0; b < d; ++b)
    for (size_t i = 0; i < total; ++i) basis_cols[i][b] = basis[b][i];
  QMat post = polyalg::q_kron(n.endo, polyalg::q_identity(m.dim));
  QMat endo = polyalg::q_zero(d, d);
  for (size_t b = 0; b < d; ++b) {
    polyalg::QVec image = polyalg::q_apply(post, basis[b]);
    std::optional<polyalg::QVec> coeffs = polyalg::solve(basis_cols, image);
    if (!coeffs) throw std::logic_error("hom_fp: post-composition leaves the kernel");
    for (size_t i = 0; i < d; ++i) endo[i][b] = (*coeffs)[i];
  }
  return EndoPair{d, endo};
}

bool iso_test(const FpModule& m, const FpModule& n) {
  if (m.ring != n.ring)
    throw std::invalid_argument("iso_test: modules over different rings");
  return canonical_form(m) == canonical_form(n);
}

}  // namespace a1mod::modcat
