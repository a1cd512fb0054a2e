// Acceptance battery: eight pinned criteria, one line each, exit 0 iff all
// pass. Kept independent of the unit tests so a green run is meaningful on
// its own.

#include "a1mod/cli/corpus.hpp"
#include "a1mod/cli/suite.hpp"
#include "a1mod/derived/chain_complex.hpp"
#include "a1mod/fincat/certificate.hpp"
#include "a1mod/fincat/kan.hpp"
#include "a1mod/fincat/truncations.hpp"
#include "a1mod/modcat/ops.hpp"
#include "a1mod/univ/univ.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace a1mod;
using modcat::CanonicalForm;
using modcat::EndoPair;
using modcat::FpModule;
using modcat::Rational;
using modcat::TypeWitness;
using polyalg::Poly;
using polyalg::parse_poly;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("[%d/8] %-52s %s%s\n", index, name.c_str(), ok ? "PASS" : "FAIL",
              note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

const std::vector<std::string> T{"t"};
const std::vector<std::string> S{"s"};

bool unit_law() {
  cli::Corpus corpus(101);
  FpModule unit = modcat::structure_i(FpModule::free_module({}, 1));
  for (int i = 0; i < 100; ++i) {
    FpModule m = corpus.fp_module("t", 5, 2);
    if (!modcat::iso_test(modcat::tensor_a1(unit, m), m)) return false;
    if (!modcat::iso_test(modcat::tensor_a1(m, unit), m)) return false;
  }
  return true;
}

bool tensor_routes_agree() {
  cli::Corpus corpus(102);
  for (int i = 0; i < 100; ++i) {
    EndoPair a = corpus.endo_pair(5);
    EndoPair b = corpus.endo_pair(5);
    CanonicalForm via_modules =
        modcat::canonical_form(modcat::tensor_a1(modcat::endo_to_fp(a), modcat::endo_to_fp(b)));
    CanonicalForm via_coker =
        modcat::canonical_form(modcat::endo_to_fp(modcat::tensor_coeq(a, b)));
    if (!(via_modules == via_coker)) return false;
  }
  return true;
}

bool evaluation_suite() {
  cli::Corpus corpus(103);
  std::vector<TypeWitness> witnesses{
      TypeWitness::scalar(Rational(0)), TypeWitness::scalar(Rational(1)),
      TypeWitness::scalar(Rational(2)),
      TypeWitness::polynomial("s", parse_poly("s^2", S))};
  // section: evaluation undoes coefficient extension
  for (int i = 0; i < 100; ++i) {
    FpModule v = corpus.q_module(4);
    size_t want = modcat::q_dimension(v);
    FpModule up = modcat::structure_i(v);
    for (const TypeWitness& w : witnesses) {
      CanonicalForm c = modcat::canonical_form(modcat::ev_alpha(up, w));
      if (c.free_rank != want || !c.invariant_factors.empty()) return false;
    }
  }
  // the two routes to evaluation at one coincide
  for (int i = 0; i < 100; ++i) {
    EndoPair e = corpus.endo_pair(5);
    size_t via_colim = modcat::q_dimension(modcat::ev_one_via_colimit(e));
    size_t via_sub = modcat::q_dimension(
        modcat::ev_alpha(modcat::endo_to_fp(e), TypeWitness::scalar(Rational(1))));
    if (via_colim != via_sub) return false;
  }
  // evaluation is strong monoidal, scalar and polynomial alike
  for (int i = 0; i < 100; ++i) {
    FpModule m = modcat::endo_to_fp(corpus.endo_pair(4));
    FpModule n = modcat::endo_to_fp(corpus.endo_pair(4));
    FpModule mn = modcat::tensor_a1(m, n);
    for (const TypeWitness& w : witnesses) {
      FpModule lhs = modcat::ev_alpha(mn, w);
      if (w.target_vars.empty()) {
        size_t dims = modcat::q_dimension(modcat::ev_alpha(m, w)) *
                      modcat::q_dimension(modcat::ev_alpha(n, w));
        if (modcat::q_dimension(lhs) != dims) return false;
        continue;
      }
      FpModule rhs = modcat::tensor_a1(modcat::ev_alpha(m, w), modcat::ev_alpha(n, w));
      if (!modcat::iso_test(lhs, rhs)) return false;
    }
  }
  return true;
}

bool derived_fibers() {
  cli::Corpus corpus(104);
  for (int i = 0; i < 100; ++i) {
    EndoPair e = corpus.endo_pair(5);
    derived::ChainComplex c = derived::ev_zero_derived(e);
    size_t rank = polyalg::q_rank(e.endo);
    if (derived::homology(c, 0) != e.dim - rank) return false;
    if (derived::homology(c, 1) != e.dim - rank) return false;
    EndoPair inv = corpus.invertible_endo_pair(5);
    if (!derived::is_acyclic(derived::ev_zero_derived(inv))) return false;
  }
  return true;
}

bool closed_structure() {
  cli::Corpus corpus(105);
  // internal hom adjunction, as modules
  for (int i = 0; i < 50; ++i) {
    EndoPair l = corpus.endo_pair(3);
    EndoPair m = corpus.endo_pair(3);
    EndoPair n = corpus.endo_pair(3);
    CanonicalForm lhs =
        modcat::canonical_form(modcat::endo_to_fp(modcat::hom_fp(modcat::tensor_coeq(l, m), n)));
    CanonicalForm rhs = modcat::canonical_form(
        modcat::endo_to_fp(modcat::hom_fp(l, modcat::hom_fp(m, n))));
    if (!(lhs == rhs)) return false;
  }
  // projection comparison for the monomial family, twists dualizable
  for (int d = 1; d <= 5; ++d) {
    univ::MonFunctorSpec spec = univ::MonFunctorSpec::from_image(
        "t", "s", Poly::monomial(S, "s", d, Rational(1)));
    for (int i = 0; i < 10; ++i) {
      EndoPair m = corpus.endo_pair(3);
      EndoPair n = corpus.invertible_endo_pair(3);
      if (!univ::projection_iso_check(spec, m, n)) return false;
    }
  }
  return true;
}

bool universal_property() {
  cli::Corpus corpus(106);
  for (int i = 0; i < 100; ++i) {
    univ::MonFunctorSpec spec = corpus.spec(3);
    FpModule m = corpus.fp_module("t", 4, 1);
    if (!univ::decompose_check(spec, m)) return false;
  }
  for (int i = 0; i < 100; ++i) {
    Poly p = corpus.poly("s", 5);
    univ::MonFunctorSpec spec = univ::MonFunctorSpec::from_image("t", "s", p);
    if (!(univ::extract_type(spec).alpha == p)) return false;
  }
  for (int i = 0; i < 50; ++i) {
    univ::AnSpec spec{2, {"t1", "t2"}, S, {corpus.poly("s", 3), corpus.poly("s", 3)}};
    FpModule two = (i % 2 == 0)
                       ? modcat::restrict_plus(corpus.fp_module("t", 3, 1))
                       : modcat::external_product(corpus.fp_module("t", 2, 1),
                                                  corpus.fp_module("t", 2, 1));
    if (!univ::an_decompose_check(spec, two)) return false;
  }
  return true;
}

bool category_engine() {
  cli::Corpus corpus(107);
  // pointwise extension formula on random shapes
  for (int i = 0; i < 50; ++i) {
    fincat::FunctorData u = corpus.poset_functor(4);
    fincat::VectDiagram x = corpus.diagram(u.source, 3);
    for (size_t b = 0; b < u.target->num_objects(); ++b) {
      fincat::KanComparison k =
          fincat::kan_pointwise_comparison(u, x, static_cast<int>(b));
      if (!k.comparison_iso) return false;
    }
  }
  // slice squares certify cell by cell
  for (int i = 0; i < 20; ++i) {
    fincat::FunctorData u = corpus.poset_functor(4);
    for (size_t b = 0; b < u.target->num_objects(); ++b) {
      fincat::SquareData sq = fincat::slice_square(u, static_cast<int>(b));
      fincat::SquareReport r = fincat::exact_square_check(sq);
      bool empty_ok = r.verdict == fincat::SquareVerdict::RefutedByEmpty &&
                      fincat::comma_category(u, static_cast<int>(b), fincat::CommaSide::Over)
                              .category->num_objects() == 0;
      if (r.verdict != fincat::SquareVerdict::Certified && !empty_ok) return false;
    }
  }
  // the bounded comma structure carries its adjunctions at every cap
  for (int k = 2; k <= 8; ++k) {
    fincat::NnTruncations t = fincat::nn_truncations(k);
    if (!fincat::check_adjunction(t.chain_adjunction)) return false;
    if (!fincat::check_adjunction(t.l_adjunction)) return false;
    if (!fincat::check_adjunction(t.f_adjunction)) return false;
    fincat::Certificate c = fincat::contractibility_certificate(t.lower);
    if (c.verdict != fincat::Verdict::ContractibleByInitial) return false;
    if (!fincat::revalidate_certificate(t.lower, c)) return false;
  }
  return true;
}

bool deterministic_reports() {
  cli::SuiteConfig cfg;
  cfg.seed = 1;
  cfg.max_dim = 4;
  cfg.max_deg = 4;
  cfg.trunc_k = 5;
  cfg.validate();
  cli::Report r1 = cli::run_suite(cfg);
  cli::Report r2 = cli::run_suite(cfg);
  if (!r1.all_pass || !r2.all_pass) return false;
  return r1.to_json(cfg).dump(2) == r2.to_json(cfg).dump(2);
}

}  // namespace

int main() {
  criterion(1, "tensor unit law on random modules", unit_law);
  criterion(2, "tensor routes agree on invariant factors", tensor_routes_agree);
  criterion(3, "evaluation: section, colimit route, monoidality", evaluation_suite);
  criterion(4, "derived fibers compute kernel and cokernel", derived_fibers);
  criterion(5, "closed structure: hom adjunction and projection", closed_structure);
  criterion(6, "universal property: decompose, types, iteration", universal_property);
  criterion(7, "category engine: extensions, squares, adjunctions", category_engine);
  criterion(8, "suite reports are byte-stable across runs", deterministic_reports);
  if (failures == 0) {
    std::printf("ACCEPTANCE: 8/8 PASS\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d/8 FAILED\n", failures);
  return 1;
}
