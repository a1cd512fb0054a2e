#include <doctest.h>

#include "a1mod/univ/univ.hpp"

using namespace a1mod::univ;
using a1mod::modcat::CanonicalForm;
using a1mod::modcat::Rational;
using a1mod::modcat::canonical_form;
using a1mod::modcat::iso_test;
using a1mod::modcat::q_dimension;
using a1mod::polyalg::parse_poly;

namespace {
const std::vector<std::string> T{"t"};
const std::vector<std::string> S{"s"};
Poly pt(const std::string& v) { return parse_poly(v, T); }
Poly ps(const std::string& v) { return parse_poly(v, S); }

MonFunctorSpec square_spec() { return MonFunctorSpec::from_image("t", "s", ps("s^2")); }
}  // namespace

TEST_CASE("type extraction recovers the image") {
  TypeWitness w = extract_type(square_spec());
  CHECK(w.target_vars == S);
  CHECK(w.alpha == ps("s^2"));

  MonFunctorSpec ident = MonFunctorSpec::from_image("t", "s", ps("s"));
  CHECK(extract_type(ident).alpha == ps("s"));

  MonFunctorSpec at0 = MonFunctorSpec::from_image("t", "s", Poly::zero(S));
  CHECK(extract_type(at0).alpha.is_zero());

  for (const std::string& text : {"s^3-s", "2*s+1", "s^5", "-s^2+1/2"}) {
    MonFunctorSpec spec = MonFunctorSpec::from_image("t", "s", ps(text));
    CHECK(extract_type(spec).alpha == ps(text));
  }
}

TEST_CASE("the base map is the coefficient inclusion") {
  RingMap base = extract_base(square_spec());
  CHECK(base.source_vars.empty());
  CHECK(base.target_vars == S);
  CHECK(base.images.empty());
}

TEST_CASE("spec composition composes the images") {
  MonFunctorSpec inner = square_spec();
  MonFunctorSpec outer =
      MonFunctorSpec::from_image("s", "r", parse_poly("r+1", {"r"}));
  MonFunctorSpec both = compose_specs(outer, inner);
  CHECK(extract_type(both).alpha == parse_poly("r^2+2*r+1", {"r"}));
}

TEST_CASE("decomposition holds on frozen modules") {
  MonFunctorSpec spec = square_spec();
  CHECK(decompose_check(spec, FpModule::cyclic(T, {pt("t-4")})));
  CHECK(decompose_check(spec, FpModule::cyclic(T, {pt("t^2")})));
  CHECK(decompose_check(spec, FpModule::free_module(T, 2)));
  CHECK(decompose_check(spec, a1mod::modcat::direct_sum(
                                  FpModule::cyclic(T, {pt("t^2-1")}),
                                  FpModule::free_module(T, 1))));

  MonFunctorSpec at0 = MonFunctorSpec::from_image("t", "s", Poly::zero(S));
  CHECK(decompose_check(at0, FpModule::cyclic(T, {pt("t^2")})));
  MonFunctorSpec ident = MonFunctorSpec::from_image("t", "s", ps("s"));
  CHECK(decompose_check(ident, FpModule::cyclic(T, {pt("t^3-2*t")})));
}

TEST_CASE("restriction along the merge factors through the probes") {
  CHECK(plus_star_factorization_check(FpModule::free_module(T, 1)));
  CHECK(plus_star_factorization_check(FpModule::cyclic(T, {pt("t-1")})));
  CHECK(plus_star_factorization_check(FpModule::cyclic(T, {pt("t^2")})));
  CHECK(plus_star_factorization_check(
      a1mod::modcat::direct_sum(FpModule::cyclic(T, {pt("t-2")}),
                                FpModule::free_module(T, 1))));
}

TEST_CASE("iterated decomposition in two variables") {
  const std::vector<std::string> T2{"t1", "t2"};
  SUBCASE("diagonal module under the diagonal family") {
    AnSpec spec{2, T2, S, {ps("s"), ps("s")}};
    spec.validate();
    FpModule m = FpModule::cyclic(T2, {parse_poly("t1-t2", T2)});
    CHECK(an_decompose_check(spec, m));
  }
  SUBCASE("zero family on a free module") {
    AnSpec spec{2, T2, S, {Poly::zero(S), Poly::zero(S)}};
    FpModule m = FpModule::free_module(T2, 2);
    CHECK(an_decompose_check(spec, m));
  }
  SUBCASE("split scalars collapse a product of witnesses") {
    AnSpec spec{2, T2, S, {Poly::zero(S), Poly::constant(S, Rational(1))}};
    FpModule m = FpModule::cyclic(T2, {parse_poly("t1", T2), parse_poly("t2-1", T2)});
    CHECK(an_decompose_check(spec, m));
  }
}

TEST_CASE("projection comparison with a dualizable twist") {
  MonFunctorSpec spec = square_spec();
  SUBCASE("invertible scalars agree") {
    CHECK(projection_iso_check(spec, EndoPair::scalar(Rational(4)),
                               EndoPair::scalar(Rational(2))));
  }
  SUBCASE("identity twist on a nilpotent block") {
    CHECK(projection_iso_check(spec, EndoPair::jordan(2, Rational(0)),
                               EndoPair::scalar(Rational(1))));
  }
  SUBCASE("non invertible twist is the recorded boundary") {
    CHECK_FALSE(projection_iso_check(spec, EndoPair::scalar(Rational(1)),
                                     EndoPair::scalar(Rational(0))));
  }
}

TEST_CASE("transformations between evaluation functors") {
  FpModule m = FpModule::cyclic(T, {pt("t^2")});
  SUBCASE("equal witnesses accept any multiplier") {
    TypeWitness w = TypeWitness::scalar(Rational(0));
    TypeMorphism tm = type_morphism_transform(Poly::constant({}, Rational(5)), w, w, m);
    CHECK(tm.well_defined);
    CHECK(q_dimension(tm.ev_source) == 1);
    CHECK(q_dimension(tm.ev_target) == 1);
    CHECK(tm.map.at(0, 0).constant_value() == Rational(5));
  }
  SUBCASE("distinct scalars force the zero map") {
    TypeWitness a = TypeWitness::scalar(Rational(0));
    TypeWitness b = TypeWitness::scalar(Rational(1));
    TypeMorphism zero = type_morphism_transform(Poly::zero({}), a, b, m);
    CHECK(zero.well_defined);
    TypeMorphism bad = type_morphism_transform(Poly::constant({}, Rational(1)), a, b, m);
    CHECK_FALSE(bad.well_defined);
  }
  SUBCASE("polynomial witnesses with a polynomial multiplier") {
    TypeWitness w = TypeWitness::polynomial("s", ps("s^2"));
    TypeMorphism tm = type_morphism_transform(ps("s"), w, w, m);
    CHECK(tm.well_defined);
    CHECK(canonical_form(tm.ev_source) == canonical_form(tm.ev_target));
  }
}
