#include "a1mod/cli/suite.hpp"

#include "a1mod/cli/corpus.hpp"
#include "a1mod/derived/chain_complex.hpp"
#include "a1mod/fincat/certificate.hpp"
#include "a1mod/fincat/comma.hpp"
#include "a1mod/fincat/kan.hpp"
#include "a1mod/fincat/truncations.hpp"
#include "a1mod/modcat/ops.hpp"
#include "a1mod/polyalg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace a1mod::cli {

using modcat::CanonicalForm;
using modcat::EndoPair;
using modcat::FpModule;
using modcat::TypeWitness;
using modcat::canonical_form;
using modcat::endo_to_fp;
using modcat::iso_test;

const std::vector<std::string> kAllSuites = {
    "unit", "tensor", "evaluation", "derived", "squares", "kan", "closed"};

void SuiteConfig::validate() const {
  if (max_dim < 1 || max_deg < 1)
    throw std::invalid_argument("suite config: max_dim and max_deg must be positive");
  if (trunc_k < 2)
    throw std::invalid_argument("suite config: trunc_k must be at least 2");
  for (const std::string& s : suites)
    if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
      throw std::invalid_argument("suite config: unknown suite " + s);
}

namespace {

void add_check(Report& r, const std::string& suite, const std::string& name,
               bool pass, Json details = Json::object()) {
  CheckResult c;
  c.suite = suite;
  c.name = name;
  c.pass = pass;
  c.details = std::move(details);
  r.checks.push_back(std::move(c));
}

std::string tag(const char* base, int i) {
  return std::string(base) + "/" + std::to_string(i);
}

void suite_unit(const SuiteConfig& cfg, Report& r) {
  Corpus c(cfg.seed);
  for (int i = 0; i < 8; ++i) {
    FpModule m = c.fp_module("t", cfg.max_dim, 2);
    FpModule n = c.fp_module("t", cfg.max_dim, 2);
    Json d = Json::object();
    d["m"] = canonical_form_to_json(canonical_form(m));
    d["n"] = canonical_form_to_json(canonical_form(n));
    add_check(r, "unit", tag("self-iso", i), iso_test(m, m), d);
    add_check(r, "unit", tag("sum-commutes", i),
              iso_test(modcat::direct_sum(m, n), modcat::direct_sum(n, m)), d);
    CanonicalForm cm = canonical_form(m);
    CanonicalForm cn = canonical_form(n);
    CanonicalForm cs = canonical_form(modcat::direct_sum(m, n));
    bool additive = cs.torsion_dim() == cm.torsion_dim() + cn.torsion_dim() &&
                    cs.free_rank == cm.free_rank + cn.free_rank;
    add_check(r, "unit", tag("invariants-additive", i), additive, d);
  }
}

void suite_tensor(const SuiteConfig& cfg, Report& r) {
  Corpus c(cfg.seed);
  for (int i = 0; i < 6; ++i) {
    EndoPair m = c.endo_pair(cfg.max_dim);
    EndoPair n = c.endo_pair(cfg.max_dim);
    CanonicalForm staged =
        canonical_form(modcat::tensor_a1(endo_to_fp(m, "t"), endo_to_fp(n, "t")));
    CanonicalForm direct = canonical_form(endo_to_fp(modcat::tensor_coeq(m, n), "t"));
    Json d = Json::object();
    d["staged"] = canonical_form_to_json(staged);
    d["direct"] = canonical_form_to_json(direct);
    add_check(r, "tensor", tag("dual-route", i), staged == direct, d);
    CanonicalForm swapped = canonical_form(endo_to_fp(modcat::tensor_coeq(n, m), "t"));
    add_check(r, "tensor", tag("commutes", i), direct == swapped, d);
  }
}

void suite_evaluation(const SuiteConfig& cfg, Report& r) {
  Corpus c(cfg.seed);
  for (int i = 0; i < 6; ++i) {
    FpModule m = c.fp_module("t", cfg.max_dim, 2);
    TypeWitness w = TypeWitness::polynomial("s", c.poly("s", cfg.max_deg));
    FpModule direct = modcat::ev_alpha(m, w);
    FpModule boxed = modcat::ev_alpha_boxed(m, w);
    Json d = Json::object();
    d["direct"] = canonical_form_to_json(canonical_form(direct));
    d["boxed"] = canonical_form_to_json(canonical_form(boxed));
    add_check(r, "evaluation", tag("boxed-route", i), iso_test(direct, boxed), d);

    EndoPair pair = c.endo_pair(cfg.max_dim);
    size_t via_colimit = modcat::q_dimension(modcat::ev_one_via_colimit(pair));
    size_t via_sub =
        modcat::q_dimension(modcat::ev_alpha(endo_to_fp(pair, "t"), TypeWitness::scalar(1)));
    Json d2 = Json::object();
    d2["colimit"] = via_colimit;
    d2["substitution"] = via_sub;
    add_check(r, "evaluation", tag("colimit-dimension", i), via_colimit == via_sub, d2);
  }
}

void suite_derived(const SuiteConfig& cfg, Report& r) {
  Corpus c(cfg.seed);
  for (int i = 0; i < 6; ++i) {
    EndoPair pair = c.endo_pair(cfg.max_dim);
    derived::ChainComplex cx = derived::ev_zero_derived(pair);
    size_t corank = pair.dim - polyalg::q_rank(pair.endo);
    Json d = Json::object();
    d["dim"] = pair.dim;
    d["corank"] = corank;
    add_check(r, "derived", tag("cone-homology", i),
              derived::homology(cx, 0) == corank && derived::homology(cx, 1) == corank, d);

    EndoPair inv = c.invertible_endo_pair(cfg.max_dim);
    add_check(r, "derived", tag("invertible-acyclic", i),
              derived::is_acyclic(derived::ev_zero_derived(inv)),
              Json::object({{"dim", inv.dim}}));
  }
  EndoPair pair = c.endo_pair(cfg.max_dim);
  derived::ChainComplex base = derived::ev_zero_derived(pair);
  derived::ComplexMap ident(base, base,
                            {polyalg::q_identity(base.dims[0]),
                             polyalg::q_identity(base.dims[1])});
  derived::ChainComplex cn = derived::cone(ident);
  add_check(r, "derived", "identity-cone",
            derived::is_acyclic(cn) && cn.euler_characteristic() == 0,
            Json::object({{"dims", cn.dims}}));
}

void suite_squares(const SuiteConfig& cfg, Report& r) {
  Corpus c(cfg.seed);
  for (int i = 0; i < 4; ++i) {
    fincat::FunctorData u = c.poset_functor(4);
    bool all_ok = true;
    for (size_t b = 0; b < u.target->num_objects(); ++b) {
      fincat::SquareReport rep =
          fincat::exact_square_check(fincat::slice_square(u, static_cast<int>(b)));
      if (rep.verdict != fincat::SquareVerdict::Certified) all_ok = false;
    }
    Json d = Json::object();
    d["sourceObjects"] = u.source->num_objects();
    d["targetObjects"] = u.target->num_objects();
    add_check(r, "squares", tag("slice-exact", i), all_ok, d);
  }
  fincat::NnTruncations t = fincat::nn_truncations(cfg.trunc_k);
  add_check(r, "squares", "chain-adjunction", fincat::check_adjunction(t.chain_adjunction),
            Json::object({{"k", t.k}}));
  add_check(r, "squares", "merge-adjunction", fincat::check_adjunction(t.l_adjunction),
            Json::object({{"k", t.k}}));
  add_check(r, "squares", "sum-adjunction", fincat::check_adjunction(t.f_adjunction),
            Json::object({{"k", t.k}}));
  fincat::Certificate cert = fincat::contractibility_certificate(t.lower);
  bool lower_ok = cert.verdict == fincat::Verdict::ContractibleByInitial &&
                  fincat::revalidate_certificate(t.lower, cert);
  add_check(r, "squares", "lower-contractible", lower_ok,
            Json::object({{"verdict", fincat::verdict_name(cert.verdict)}}));
}

void suite_kan(const SuiteConfig& cfg, Report& r) {
  Corpus c(cfg.seed);
  for (int i = 0; i < 3; ++i) {
    fincat::FunctorData u = c.poset_functor(4);
    fincat::VectDiagram x = c.diagram(u.source, std::min(cfg.max_dim, 3));
    bool valid = true;
    try {
      fincat::kan_extend_finvect(u, x, fincat::KanDirection::Left).validate();
      fincat::kan_extend_finvect(u, x, fincat::KanDirection::Right).validate();
    } catch (const std::exception&) {
      valid = false;
    }
    add_check(r, "kan", tag("extension-valid", i), valid,
              Json::object({{"dims", x.dims}}));

    bool all_iso = true;
    for (size_t b = 0; b < u.target->num_objects(); ++b)
      if (!fincat::kan_pointwise_comparison(u, x, static_cast<int>(b)).comparison_iso)
        all_iso = false;
    add_check(r, "kan", tag("pointwise-formula", i), all_iso,
              Json::object({{"targetObjects", u.target->num_objects()}}));

    fincat::VectDiagram ident = fincat::kan_extend_finvect(
        fincat::identity_functor(u.source), x, fincat::KanDirection::Left);
    add_check(r, "kan", tag("identity-extension", i), ident.dims == x.dims,
              Json::object({{"dims", x.dims}}));
  }
}

void suite_closed(const SuiteConfig& cfg, Report& r) {
  Corpus c(cfg.seed);
  int bound = std::min(cfg.max_dim, 3);
  for (int i = 0; i < 5; ++i) {
    EndoPair m = c.endo_pair(bound);
    EndoPair n = c.endo_pair(bound);
    EndoPair p = c.endo_pair(bound);
    CanonicalForm lhs =
        canonical_form(endo_to_fp(modcat::hom_fp(modcat::tensor_coeq(m, n), p), "t"));
    CanonicalForm rhs =
        canonical_form(endo_to_fp(modcat::hom_fp(m, modcat::hom_fp(n, p)), "t"));
    Json d = Json::object();
    d["lhs"] = canonical_form_to_json(lhs);
    d["rhs"] = canonical_form_to_json(rhs);
    add_check(r, "closed", tag("adjunction", i), lhs == rhs, d);
    add_check(r, "closed", tag("self-hom", i), modcat::hom_fp(m, m).dim >= 1,
              Json::object({{"dim", m.dim}}));
  }
}

}  // namespace

Json Report::to_json(const SuiteConfig& cfg) const {
  Json j = Json::object();
  Json conf = Json::object();
  conf["seed"] = cfg.seed;
  conf["maxDim"] = cfg.max_dim;
  conf["maxDeg"] = cfg.max_deg;
  conf["truncK"] = cfg.trunc_k;
  conf["suites"] = cfg.suites.empty() ? kAllSuites : cfg.suites;
  j["config"] = conf;
  Json arr = Json::array();
  for (const CheckResult& c : checks) {
    Json e = Json::object();
    e["suite"] = c.suite;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["details"] = c.details;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["allPass"] = all_pass;
  return j;
}

std::string Report::text_mirror() const {
  std::ostringstream out;
  for (const CheckResult& c : checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.suite << "/" << c.name << "\n";
  out << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return out.str();
}

Report run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const std::vector<std::string>& active = cfg.suites.empty() ? kAllSuites : cfg.suites;
  Report r;
  for (const std::string& name : active) {
    try {
      if (name == "unit") suite_unit(cfg, r);
      else if (name == "tensor") suite_tensor(cfg, r);
      else if (name == "evaluation") suite_evaluation(cfg, r);
      else if (name == "derived") suite_derived(cfg, r);
      else if (name == "squares") suite_squares(cfg, r);
      else if (name == "kan") suite_kan(cfg, r);
      else if (name == "closed") suite_closed(cfg, r);
    } catch (const std::exception& e) {
      add_check(r, name, "suite crashed", false, Json::object({{"error", e.what()}}));
    }
  }
  r.all_pass = !r.checks.empty();
  for (const CheckResult& c : r.checks)
    if (!c.pass) r.all_pass = false;
  return r;
}

}  // namespace a1mod::cli
