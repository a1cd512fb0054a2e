#include "a1mod/modcat/fp_module.hpp"

#include <stdexcept>

namespace a1mod::modcat {

using polyalg::smith_normal_form;
using polyalg::SnfResult;

FpModule FpModule::free_module(std::vector<std::string> ring, size_t rank) {
  FpModule m;
  m.ring = std::move(ring);
  m.generators = rank;
  m.presentation = PolyMatrix(rank, 0, m.ring);
  return m;
}

FpModule FpModule::zero_module(std::vector<std::string> ring) {
  return free_module(std::move(ring), 0);
}

FpModule FpModule::cyclic(std::vector<std::string> ring, const std::vector<Poly>& relations) {
  FpModule m;
  m.ring = std::move(ring);
  m.generators = 1;
  m.presentation = PolyMatrix(1, relations.size(), m.ring);
  for (size_t j = 0; j < relations.size(); ++j) m.presentation.set(0, j, relations[j]);
  return m;
}

void FpModule::validate() const {
  if (presentation.rows() != generators)
    throw std::invalid_argument("module: presentation rows must equal generators");
  if (presentation.vars() != ring)
    throw std::invalid_argument("module: presentation over the wrong ring");
}

FpModule direct_sum(const FpModule& a, const FpModule& b) {
  if (a.ring != b.ring) throw std::invalid_argument("direct_sum: rings differ");
  FpModule s;
  s.ring = a.ring;
  s.generators = a.generators + b.generators;
  s.presentation = PolyMatrix(s.generators, a.relations() + b.relations(), s.ring);
  for (size_t i = 0; i < a.generators; ++i)
    for (size_t j = 0; j < a.relations(); ++j) s.presentation.set(i, j, a.presentation.at(i, j));
  for (size_t i = 0; i < b.generators; ++i)
    for (size_t j = 0; j < b.relations(); ++j)
      s.presentation.set(a.generators + i, a.relations() + j, b.presentation.at(i, j));
  return s;
}

EndoPair EndoPair::scalar(const Rational& value) {
  EndoPair e;
  e.dim = 1;
  e.endo = {{value}};
  return e;
}

EndoPair EndoPair::jordan(size_t size, const Rational& eigenvalue) {
  EndoPair e;
  e.dim = size;
  e.endo = polyalg::q_zero(size, size);
  for (size_t i = 0; i < size; ++i) {
    e.endo[i][i] = eigenvalue;
    if (i + 1 < size) e.endo[i][i + 1] = 1;
  }
  return e;
}

EndoPair EndoPair::companion(const Poly& monic) {
  if (monic.vars().size() != 1)
    throw std::invalid_argument("companion: univariate polynomial required");
  int deg = monic.total_degree();
  if (deg < 1 || monic.leading_coeff() != 1)
    throw std::invalid_argument("companion: monic of degree >= 1 required");
  size_t n = static_cast<size_t>(deg);
  EndoPair e;
  e.dim = n;
  e.endo = polyalg::q_zero(n, n);
  for (size_t i = 0; i + 1 < n; ++i) e.endo[i + 1][i] = 1;
  for (size_t i = 0; i < n; ++i) {
    polyalg::Exponents exp(1, static_cast<int>(i));
    auto it = monic.terms().find(exp);
    if (it != monic.terms().end()) e.endo[i][n - 1] = -it->second;
  }
  return e;
}

void EndoPair::validate() const {
  if (endo.size() != dim) throw std::invalid_argument("endo pair: row count");
  for (const auto& row : endo)
    if (row.size() != dim) throw std::invalid_argument("endo pair: column count");
}

EndoPair endo_direct_sum(const EndoPair& a, const EndoPair& b) {
  EndoPair s;
  s.dim = a.dim + b.dim;
  s.endo = polyalg::q_zero(s.dim, s.dim);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) s.endo[i][j] = a.endo[i][j];
  for (size_t i = 0; i < b.dim; ++i)
    for (size_t j = 0; j < b.dim; ++j) s.endo[a.dim + i][a.dim + j] = b.endo[i][j];
  return s;
}

RingMap RingMap::identity(std::vector<std::string> vars) {
  RingMap r;
  r.source_vars = vars;
  r.target_vars = vars;
  for (const std::string& v : vars) r.images.push_back(Poly::monomial(vars, v, 1, Rational(1)));
  return r;
}

void RingMap::validate() const {
  if (images.size() != source_vars.size())
    throw std::invalid_argument("ring map: one image per source variable");
  for (const Poly& p : images)
    if (p.vars() != target_vars)
      throw std::invalid_argument("ring map: image over the wrong variables");
}

RingMap compose(const RingMap& g, const RingMap& f) {
  f.validate();
  g.validate();
  if (f.target_vars != g.source_vars)
    throw std::invalid_argument("ring map compose: middle rings differ");
  RingMap r;
  r.source_vars = f.source_vars;
  r.target_vars = g.target_vars;
  for (const Poly& p : f.images) r.images.push_back(p.substitute(g.images, g.target_vars));
  return r;
}

TypeWitness TypeWitness::scalar(const Rational& value) {
  TypeWitness w;
  w.alpha = Poly::constant({}, value);
  return w;
}

TypeWitness TypeWitness::polynomial(const std::string& var, const Poly& alpha) {
  TypeWitness w;
  w.target_vars = {var};
  w.alpha = alpha.vars() == w.target_vars ? alpha : alpha.with_vars(w.target_vars);
  return w;
}

void TypeWitness::validate() const {
  if (target_vars.size() > 1)
    throw std::invalid_argument("type witness: at most one target variable");
  if (alpha.vars() != target_vars)
    throw std::invalid_argument("type witness: value over the wrong variables");
}

bool CanonicalForm::operator==(const CanonicalForm& o) const {
  return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
}

std::string CanonicalForm::str() const {
  std::string out = "free^" + std::to_string(free_rank);
  for (const Poly& p : invariant_factors) out += " (+) tors(" + p.str() + ")";
  return out;
}

size_t CanonicalForm::torsion_dim() const {
  size_t d = 0;
  for (const Poly& p : invariant_factors) d += static_cast<size_t>(p.total_degree());
  return d;
}

CanonicalForm canonical_form(const FpModule& m) {
  m.validate();
  if (m.ring.size() > 1)
    throw std::invalid_argument("canonical_form: at most one variable");
  SnfResult snf = smith_normal_form(m.presentation);
  CanonicalForm c;
  c.free_rank = m.generators - snf.diag.size();
  for (const Poly& d : snf.diag)
    if (d.total_degree() > 0) c.invariant_factors.push_back(d);
  return c;
}

size_t q_dimension(const FpModule& m) {
  CanonicalForm c = canonical_form(m);
  if (m.ring.empty()) return c.free_rank;  // all torsion factors are units over ℚ
  if (c.free_rank > 0)
    throw std::invalid_argument("q_dimension: module has a free part");
  return c.torsion_dim();
}

FpModule endo_to_fp(const EndoPair& m, const std::string& var) {
  m.validate();
  std::vector<std::string> ring{var};
  FpModule out;
  out.ring = ring;
  out.generators = m.dim;
  out.presentation = PolyMatrix(m.dim, m.dim, ring);
  for (size_t i = 0; i < m.dim; ++i)
    for (size_t j = 0; j < m.dim; ++j) {
      Poly entry = Poly::constant(ring, -m.endo[i][j]);
      if (i == j) entry = entry + Poly::monomial(ring, var, 1, Rational(1));
      out.presentation.set(i, j, entry);
    }
  return out;
}

EndoPair fp_to_endo(const FpModule& m) {
  if (m.ring.size() != 1)
    throw std::invalid_argument("fp_to_endo: exactly one variable");
  CanonicalForm c = canonical_form(m);
  if (c.free_rank > 0)
    throw std::invalid_argument("fp_to_endo: module has a free part");
  EndoPair out;
  out.dim = 0;
  out.endo = {};
  for (const Poly& f : c.invariant_factors)
    out = endo_direct_sum(out, EndoPair::companion(f));
  return out;
}

}  // namespace a1mod::modcat
