#include <doctest.h>

#include "a1mod/modcat/fp_module.hpp"
#include "a1mod/modcat/ops.hpp"

using namespace a1mod::modcat;
using a1mod::polyalg::parse_poly;

namespace {
const std::vector<std::string> T{"t"};
Poly pt(const std::string& s) { return parse_poly(s, T); }
}  // namespace

TEST_CASE("canonical form of cyclic torsion modules") {
  FpModule m = FpModule::cyclic(T, {pt("t^2")});
  CanonicalForm c = canonical_form(m);
  REQUIRE(c.invariant_factors.size() == 1);
  CHECK(c.invariant_factors[0] == pt("t^2"));
  CHECK(c.free_rank == 0);
  CHECK(c.torsion_dim() == 2);
  CHECK(q_dimension(m) == 2);
}

TEST_CASE("canonical form drops unit factors and counts free rank") {
  // coker of 2x1 [t; 0]: one torsion factor t plus one free generator
  FpModule m{T, 2, PolyMatrix(2, 1, T)};
  m.presentation.set(0, 0, pt("t"));
  CanonicalForm c = canonical_form(m);
  REQUIRE(c.invariant_factors.size() == 1);
  CHECK(c.invariant_factors[0] == pt("t"));
  CHECK(c.free_rank == 1);
  // free module: no factors at all
  CHECK(canonical_form(FpModule::free_module(T, 3)).free_rank == 3);
  CHECK(canonical_form(FpModule::free_module(T, 3)).invariant_factors.empty());
}

TEST_CASE("iso_test distinguishes (t^2) from (t, t)") {
  FpModule a = FpModule::cyclic(T, {pt("t^2")});
  FpModule b = direct_sum(FpModule::cyclic(T, {pt("t")}), FpModule::cyclic(T, {pt("t")}));
  CHECK(q_dimension(a) == q_dimension(b));  // both dim 2 over ℚ
  CHECK_FALSE(iso_test(a, b));              // factors (t^2) vs (t, t)
  CHECK(iso_test(a, a));
  // free rank 2 vs torsion dim 2
  CHECK_FALSE(iso_test(FpModule::free_module(T, 2), b));
}

TEST_CASE("iso_test requires a shared small ring") {
  FpModule a = FpModule::cyclic(T, {pt("t")});
  FpModule b = FpModule::cyclic({"s"}, {parse_poly("s", {"s"})});
  CHECK_THROWS(iso_test(a, b));  // different rings
  FpModule c = FpModule::free_module({"t1", "t2"}, 1);
  CHECK_THROWS(iso_test(c, c));  // two variables unsupported
}

TEST_CASE("characteristic presentation of an EndoPair") {
  EndoPair j2 = EndoPair::jordan(2, Rational(0));
  FpModule m = endo_to_fp(j2);
  CHECK(m.generators == 2);
  CanonicalForm c = canonical_form(m);
  REQUIRE(c.invariant_factors.size() == 1);
  CHECK(c.invariant_factors[0] == pt("t^2"));  // J2(0) is one nilpotent block
  CHECK(c.free_rank == 0);
}

TEST_CASE("module to endo round trip preserves the canonical form") {
  FpModule m = direct_sum(FpModule::cyclic(T, {pt("t^2-1")}),
                          FpModule::cyclic(T, {pt("t-1")}));
  EndoPair e = fp_to_endo(m);
  CHECK(e.dim == 3);
  FpModule back = endo_to_fp(e);
  CHECK(iso_test(m, back));
  CHECK_THROWS(fp_to_endo(FpModule::free_module(T, 1)));  // torsion only
}

TEST_CASE("companion matrix realizes its polynomial") {
  EndoPair c = EndoPair::companion(pt("t^2-4"));
  FpModule m = endo_to_fp(c);
  CanonicalForm f = canonical_form(m);
  REQUIRE(f.invariant_factors.size() == 1);
  CHECK(f.invariant_factors[0] == pt("t^2-4"));
}

TEST_CASE("direct sum is a block presentation") {
  FpModule a = FpModule::cyclic(T, {pt("t")});
  FpModule b = FpModule::free_module(T, 2);
  FpModule s = direct_sum(a, b);
  CHECK(s.generators == 3);
  CHECK(s.relations() == 1);
  CanonicalForm c = canonical_form(s);
  CHECK(c.free_rank == 2);
  REQUIRE(c.invariant_factors.size() == 1);
  CHECK(c.invariant_factors[0] == pt("t"));
}

TEST_CASE("ring map composition substitutes images") {
  RingMap f{{"t"}, {"s"}, {parse_poly("s^2", {"s"})}};
  RingMap g{{"s"}, {"r"}, {parse_poly("r+1", {"r"})}};
  RingMap gf = compose(g, f);
  REQUIRE(gf.images.size() == 1);
  CHECK(gf.images[0] == parse_poly("r^2+2*r+1", {"r"}));
  CHECK(gf.source_vars == std::vector<std::string>{"t"});
  CHECK(gf.target_vars == std::vector<std::string>{"r"});
}
