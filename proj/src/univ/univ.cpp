#include "a1mod/univ/univ.hpp"

#include <stdexcept>
#include <utility>

namespace a1mod::univ {

using modcat::CanonicalForm;
using modcat::Rational;
using modcat::canonical_form;
using modcat::iso_test;
using polyalg::Exponents;
using polyalg::QMat;

MonFunctorSpec MonFunctorSpec::from_image(const std::string& source_var,
                                          const std::string& target_var, const Poly& p) {
  MonFunctorSpec s;
  s.phi.source_vars = {source_var};
  s.phi.target_vars = {target_var};
  if (p.vars() != s.phi.target_vars)
    throw std::invalid_argument("functor spec: image must live over the target variable");
  s.phi.images = {p};
  s.validate();
  return s;
}

void MonFunctorSpec::validate() const {
  phi.validate();
  if (phi.source_vars.size() != 1)
    throw std::invalid_argument("functor spec: exactly one source variable");
  if (phi.target_vars.size() > 1)
    throw std::invalid_argument("functor spec: at most one target variable");
}

MonFunctorSpec compose_specs(const MonFunctorSpec& outer, const MonFunctorSpec& inner) {
  outer.validate();
  inner.validate();
  MonFunctorSpec out;
  out.phi = modcat::compose(outer.phi, inner.phi);
  out.validate();
  return out;
}

void AnSpec::validate() const {
  if (source_vars.size() != n || images.size() != n)
    throw std::invalid_argument("family: one source variable and one image per slot");
  if (target_vars.size() > 1)
    throw std::invalid_argument("family: at most one target variable");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (source_vars[i] == source_vars[j])
        throw std::invalid_argument("family: duplicate source variable");
  for (const std::string& tv : target_vars)
    for (const std::string& sv : source_vars)
      if (tv == sv) throw std::invalid_argument("family: target variable shadows a source");
  for (const Poly& im : images)
    if (im.vars() != target_vars)
      throw std::invalid_argument("family: images must live over the target variables");
}

TypeWitness extract_type(const MonFunctorSpec& spec) {
  spec.validate();
  const std::string& svar = spec.phi.source_vars[0];
  const std::vector<std::string>& tvars = spec.phi.target_vars;
  std::string aux = (tvars.empty() ? std::string("u") : tvars[0]) + "0";

  FpModule unit = FpModule::free_module({svar}, 1);
  FpModule doubled = modcat::restrict_plus(unit, svar, aux);

  std::vector<std::string> mixed = tvars;
  mixed.push_back(aux);
  RingMap step;
  step.source_vars = {svar, aux};
  step.target_vars = mixed;
  step.images = {spec.phi.images[0].with_vars(mixed),
                 Poly::monomial(mixed, aux, 1, Rational(1))};
  FpModule moved = modcat::base_change(doubled, step);
  if (moved.generators != 1 || moved.presentation.cols() != 1)
    throw std::logic_error("type extraction: unexpected unit presentation");

  // The single relation must read A(target) + B * aux with constant B != 0;
  // the eliminated action is then aux = -A / B.
  const Poly& rel = moved.presentation.at(0, 0);
  size_t aux_pos = mixed.size() - 1;
  Poly a_part(tvars);
  Rational b(0);
  bool saw_aux = false;
  for (const auto& [e, c] : rel.terms()) {
    if (e[aux_pos] == 0) {
      a_part.add_term(Exponents(e.begin(), e.end() - 1), c);
    } else if (e[aux_pos] == 1) {
      for (size_t i = 0; i < aux_pos; ++i)
        if (e[i] != 0)
          throw std::logic_error("type extraction: auxiliary variable mixes with the target");
      if (saw_aux) throw std::logic_error("type extraction: repeated auxiliary term");
      saw_aux = true;
      b = c;
    } else {
      throw std::logic_error("type extraction: auxiliary variable appears nonlinearly");
    }
  }
  if (!saw_aux || b == Rational(0))
    throw std::logic_error("type extraction: auxiliary variable was already eliminated");

  TypeWitness w;
  w.target_vars = tvars;
  w.alpha = a_part.scaled(Rational(-1) / b);
  w.validate();

  // Substituting the action back in must collapse the relation entirely.
  RingMap kill;
  kill.source_vars = mixed;
  kill.target_vars = tvars;
  for (size_t i = 0; i < aux_pos; ++i)
    kill.images.push_back(Poly::monomial(tvars, mixed[i], 1, Rational(1)));
  kill.images.push_back(w.alpha);
  CanonicalForm cf = canonical_form(modcat::base_change(moved, kill));
  if (cf.free_rank != 1 || !cf.invariant_factors.empty())
    throw std::logic_error("type extraction: the witness does not restrict to the unit");
  return w;
}

RingMap extract_base(const MonFunctorSpec& spec) {
  spec.validate();
  RingMap base;
  base.target_vars = spec.phi.target_vars;
  return base;
}

bool decompose_check(const MonFunctorSpec& spec, const FpModule& m) {
  try {
    TypeWitness w = extract_type(spec);
    FpModule direct = modcat::base_change(m, spec.phi);
    FpModule staged = modcat::ev_alpha_boxed(m, w);
    return iso_test(direct, staged);
  } catch (...) {
    return false;
  }
}

namespace {

// coker presentation of X (x)_{ring} Y: [A (x) I | I (x) B].
FpModule tensor_presentations(const FpModule& x, const FpModule& y) {
  PolyMatrix igx = PolyMatrix::identity(x.generators, x.ring);
  PolyMatrix igy = PolyMatrix::identity(y.generators, y.ring);
  FpModule out;
  out.ring = x.ring;
  out.generators = x.generators * y.generators;
  out.presentation = x.presentation.kronecker(igy).augment_cols(igx.kronecker(y.presentation));
  return out;
}

QMat poly_at_matrix(const Poly& p, const QMat& mat) {
  size_t d = mat.size();
  QMat acc = polyalg::q_zero(d, d);
  for (const auto& [e, c] : p.terms()) {
    int k = e.empty() ? 0 : e[0];
    QMat pw = polyalg::q_identity(d);
    for (int i = 0; i < k; ++i) pw = polyalg::q_mul(pw, mat);
    acc = polyalg::q_add(acc, polyalg::q_scale(pw, c));
  }
  return acc;
}

}  // namespace

bool plus_star_factorization_check(const FpModule& m, const std::vector<Rational>& probes) {
  try {
    m.validate();
    if (m.ring.size() != 1) return false;
    FpModule lhs = modcat::restrict_plus(m);

    std::vector<std::string> tv{"t1", "t2"};
    RingMap widen;
    widen.source_vars = m.ring;
    widen.target_vars = tv;
    widen.images = {Poly::monomial(tv, "t1", 1, Rational(1))};
    FpModule extended = modcat::base_change(m, widen);
    FpModule merged_unit = modcat::restrict_plus(FpModule::free_module(m.ring, 1));
    FpModule rhs = tensor_presentations(extended, merged_unit);

    for (const Rational& beta : probes) {
      RingMap at;
      at.source_vars = tv;
      at.images = {Poly::constant({}, beta), Poly::constant({}, beta)};
      if (!iso_test(modcat::base_change(lhs, at), modcat::base_change(rhs, at))) return false;
    }
    return true;
  } catch (...) {
    return false;
  }
}

bool an_decompose_check(const AnSpec& spec, const FpModule& m) {
  try {
    spec.validate();
    m.validate();
    if (m.ring != spec.source_vars) return false;

    RingMap all;
    all.source_vars = spec.source_vars;
    all.target_vars = spec.target_vars;
    all.images = spec.images;
    FpModule single = modcat::base_change(m, all);

    FpModule cur = m;
    for (size_t i = 0; i < spec.n; ++i) {
      std::vector<std::string> next = spec.target_vars;
      for (size_t j = i + 1; j < spec.n; ++j) next.push_back(spec.source_vars[j]);
      RingMap step;
      step.source_vars = cur.ring;
      step.target_vars = next;
      for (const std::string& v : cur.ring) {
        if (v == spec.source_vars[i])
          step.images.push_back(spec.images[i].with_vars(next));
        else
          step.images.push_back(Poly::monomial(next, v, 1, Rational(1)));
      }
      cur = modcat::base_change(cur, step);
    }
    return iso_test(cur, single);
  } catch (...) {
    return false;
  }
}

bool projection_iso_check(const MonFunctorSpec& spec, const EndoPair& m, const EndoPair& n) {
  try {
    spec.validate();
    m.validate();
    n.validate();
    const std::string& svar = spec.phi.source_vars[0];
    const Poly& p = spec.phi.images[0];

    QMat twist = poly_at_matrix(p, n.endo);
    EndoPair tensored{m.dim * n.dim, polyalg::q_kron(m.endo, twist)};
    CanonicalForm lhs =
        canonical_form(modcat::base_change(modcat::endo_to_fp(tensored, svar), spec.phi));

    EndoPair pushed =
        modcat::fp_to_endo(modcat::base_change(modcat::endo_to_fp(m, svar), spec.phi));
    EndoPair rhs_pair{pushed.dim * n.dim, polyalg::q_kron(pushed.endo, n.endo)};
    std::string tvar = spec.phi.target_vars.empty() ? svar : spec.phi.target_vars[0];
    CanonicalForm rhs = canonical_form(modcat::endo_to_fp(rhs_pair, tvar));
    return lhs == rhs;
  } catch (...) {
    return false;
  }
}

TypeMorphism type_morphism_transform(const Poly& q, const TypeWitness& alpha,
                                     const TypeWitness& beta, const FpModule& m) {
  alpha.validate();
  beta.validate();
  m.validate();
  if (alpha.target_vars != beta.target_vars)
    throw std::invalid_argument("transform: witnesses live over different rings");

  TypeMorphism out;
  out.ev_source = modcat::ev_alpha(m, alpha);
  out.ev_target = modcat::ev_alpha(m, beta);
  const std::vector<std::string>& tv = alpha.target_vars;
  Poly mult = q.with_vars(tv);
  PolyMatrix map(out.ev_source.generators, out.ev_source.generators, tv);
  for (size_t i = 0; i < out.ev_source.generators; ++i) map.set(i, i, mult);
  out.map = map;
  out.well_defined = (mult * (alpha.alpha - beta.alpha)).is_zero();
  return out;
}

}  // namespace a1mod::univ
