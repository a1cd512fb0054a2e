#include <doctest.h>

#include "a1mod/fincat/certificate.hpp"
#include "a1mod/fincat/truncations.hpp"

using namespace a1mod::fincat;

namespace {
CatPtr empty_cat() {
  return make_poset({}, [](int, int) { return false; });
}

// zigzag path a0 -> a1 <- a2 -> a3 <- ... of the given length (edges)
CatPtr zigzag_path(int edges) {
  int n = edges + 1;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  auto leq = [](int a, int b) {
    if (a == b) return true;
    // even vertices are sources: 2i -> 2i+1 and 2i -> 2i-1
    return a % 2 == 0 && (b == a + 1 || b == a - 1);
  };
  return make_poset(names, leq);
}
}  // namespace

TEST_CASE("extremal objects are found first") {
  Certificate one = contractibility_certificate(terminal_category());
  CHECK(one.verdict == Verdict::ContractibleByInitial);
  CHECK(one.witness_object == 0);
  CHECK(revalidate_certificate(terminal_category(), one));

  CatPtr cospan = make_poset({"0", "1", "2"}, [](int a, int b) {
    return a == b || (b == 2 && a != 2);
  });
  Certificate c = contractibility_certificate(cospan);
  CHECK(c.verdict == Verdict::ContractibleByTerminal);
  CHECK(cospan->object_name(c.witness_object) == "2");
  CHECK(revalidate_certificate(cospan, c));
}

TEST_CASE("empty categories are reported as such") {
  Certificate c = contractibility_certificate(empty_cat());
  CHECK(c.verdict == Verdict::Empty);
  CHECK(revalidate_certificate(empty_cat(), c));
}

TEST_CASE("a single dismantling run closes the five object path") {
  CatPtr p = zigzag_path(4);
  CHECK_FALSE(p->has_initial_object());
  CHECK_FALSE(p->has_terminal_object());
  Certificate c = contractibility_certificate(p);
  CHECK(c.verdict == Verdict::ContractibleByAdjunctionZigzag);
  CHECK(c.zigzag.size() == 1);
  CHECK(c.final_step == Verdict::ContractibleByInitial);
  CHECK(revalidate_certificate(p, c));
  for (const AdjunctionData& step : c.zigzag) CHECK(check_adjunction(step));
}

TEST_CASE("a longer path needs two runs and respects the budget") {
  CatPtr p = zigzag_path(6);
  Certificate c = contractibility_certificate(p);
  CHECK(c.verdict == Verdict::ContractibleByAdjunctionZigzag);
  CHECK(c.zigzag.size() == 2);
  CHECK(c.final_step == Verdict::ContractibleByTerminal);
  CHECK(revalidate_certificate(p, c));

  Certificate tight = contractibility_certificate(p, 1);
  CHECK(tight.verdict == Verdict::Unknown);
}

TEST_CASE("the four point circle stays unknown") {
  CatPtr circle = make_poset({"a", "b", "c", "d"}, [](int a, int b) {
    return a == b || ((a == 0 || a == 1) && (b == 2 || b == 3));
  });
  Certificate c = contractibility_certificate(circle);
  CHECK(c.verdict == Verdict::Unknown);
  CHECK_FALSE(revalidate_certificate(circle, c));
}

TEST_CASE("tampered certificates fail revalidation") {
  CatPtr a = make_chain(2);
  Certificate c = contractibility_certificate(a);
  CHECK(c.verdict == Verdict::ContractibleByInitial);
  CHECK(c.witness_object == 0);
  Certificate bad = c;
  bad.witness_object = 1;  // terminal, not initial
  CHECK_FALSE(revalidate_certificate(a, bad));
  Certificate wrong = c;
  wrong.verdict = Verdict::Empty;
  CHECK_FALSE(revalidate_certificate(a, wrong));
}

TEST_CASE("the bounded corner gives every truncation an initial object") {
  for (int k : {2, 3, 5}) {
    NnTruncations t = nn_truncations(k);
    Certificate c = contractibility_certificate(t.lower);
    CHECK(c.verdict == Verdict::ContractibleByInitial);
    CHECK(t.lower->object_name(c.witness_object) ==
          "(" + std::to_string(k) + ",0)");
    CHECK(revalidate_certificate(t.lower, c));
  }
}

TEST_CASE("squares with empty cells are refuted") {
  CatPtr e = terminal_category();
  CatPtr none = empty_cat();
  FunctorData from_empty{none, e, {}, {}};
  from_empty.validate();
  FunctorData ide = identity_functor(e);
  NatTransData alpha{compose_functors(ide, from_empty), compose_functors(ide, from_empty), {}};
  SquareData sq{from_empty, from_empty, ide, ide, alpha};
  sq.validate();
  SquareReport r = exact_square_check(sq);
  CHECK(r.verdict == SquareVerdict::RefutedByEmpty);
  CHECK(r.cells_total == 1);
}

TEST_CASE("identity squares certify with initial cells") {
  CatPtr a = make_chain(2);
  FunctorData id = identity_functor(a);
  SquareData sq{id, id, id, id, identity_nat(id)};
  SquareReport r = exact_square_check(sq);
  CHECK(r.verdict == SquareVerdict::Certified);
  CHECK(r.cells_total == 3);  // one cell per morphism gamma of the chain
  for (const CellReport& cell : r.cells)
    CHECK(cell.certificate.verdict == Verdict::ContractibleByInitial);
  SquareReport tight = exact_square_check(sq, 1);
  CHECK(tight.budget_exceeded);
  CHECK(tight.verdict == SquareVerdict::Inconclusive);
}
