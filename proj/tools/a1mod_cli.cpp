// Command-line front end. Every subcommand reads JSON per the library
// schemas, writes a JSON report fragment (stdout or --out), and follows the
// exit-status contract: pass iff exit 0.
#include <CLI11.hpp>

#include "a1mod/cli/io_json.hpp"
#include "a1mod/cli/suite.hpp"
#include "a1mod/derived/chain_complex.hpp"
#include "a1mod/fincat/certificate.hpp"
#include "a1mod/fincat/comma.hpp"
#include "a1mod/fincat/truncations.hpp"
#include "a1mod/modcat/ops.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using a1mod::cli::Json;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

// --out is resolved against A1MOD_OUT_DIR when relative; empty means stdout.
void emit(const Json& j, const std::string& out_path) {
  std::string path = out_path;
  if (!path.empty() && path.front() != '/') {
    if (const char* dir = std::getenv("A1MOD_OUT_DIR")) path = std::string(dir) + "/" + path;
  }
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string square_verdict_name(a1mod::fincat::SquareVerdict v) {
  switch (v) {
    case a1mod::fincat::SquareVerdict::Certified: return "Certified";
    case a1mod::fincat::SquareVerdict::RefutedByEmpty: return "RefutedByEmpty";
    default: return "Inconclusive";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for modules with a distinguished endomorphism"};
  app.require_subcommand(1);
  app.fallthrough();  // --out is accepted after any subcommand

  int exit_code = 0;
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to this file instead of stdout")
      ->capture_default_str();

  // ---- mod ----------------------------------------------------------------
  auto* mod = app.add_subcommand("mod", "Module-level operations");
  mod->require_subcommand(1);

  std::string mod_left, mod_right, mod_module, mod_alpha = "0", mod_target_var = "s";

  auto* mod_tensor = mod->add_subcommand("tensor", "Tensor of two modules; prints canonical form");
  mod_tensor->add_option("--left", mod_left, "Left module JSON")->required();
  mod_tensor->add_option("--right", mod_right, "Right module JSON")->required();
  mod_tensor->callback([&] {
    auto m = a1mod::cli::fp_module_from_json(read_json_file(mod_left));
    auto n = a1mod::cli::fp_module_from_json(read_json_file(mod_right));
    auto t = a1mod::modcat::tensor_a1(m, n);
    Json j;
    j["module"] = a1mod::cli::fp_module_to_json(t);
    j["canonical"] = a1mod::cli::canonical_form_to_json(a1mod::modcat::canonical_form(t));
    emit(j, out_path);
  });

  auto* mod_evalpha = mod->add_subcommand("evalpha", "Evaluate a module at a witness");
  mod_evalpha->add_option("--module", mod_module, "Module JSON")->required();
  mod_evalpha->add_option("--alpha", mod_alpha,
                          "Witness: a rational, or a polynomial in --target-var");
  mod_evalpha->add_option("--target-var", mod_target_var, "Variable for polynomial witnesses");
  mod_evalpha->callback([&] {
    auto m = a1mod::cli::fp_module_from_json(read_json_file(mod_module));
    a1mod::modcat::TypeWitness w = [&] {
      try {
        return a1mod::modcat::TypeWitness::scalar(a1mod::polyalg::rat_parse(mod_alpha));
      } catch (const std::exception&) {
        return a1mod::modcat::TypeWitness::polynomial(
            mod_target_var, a1mod::polyalg::parse_poly(mod_alpha, {mod_target_var}));
      }
    }();
    auto v = a1mod::modcat::ev_alpha(m, w);
    Json j;
    j["module"] = a1mod::cli::fp_module_to_json(v);
    j["canonical"] = a1mod::cli::canonical_form_to_json(a1mod::modcat::canonical_form(v));
    emit(j, out_path);
  });

  auto* mod_iso = mod->add_subcommand("iso", "Invariant-factor isomorphism test");
  mod_iso->add_option("--left", mod_left, "Left module JSON")->required();
  mod_iso->add_option("--right", mod_right, "Right module JSON")->required();
  mod_iso->callback([&] {
    auto m = a1mod::cli::fp_module_from_json(read_json_file(mod_left));
    auto n = a1mod::cli::fp_module_from_json(read_json_file(mod_right));
    bool iso = a1mod::modcat::iso_test(m, n);
    Json j;
    j["iso"] = iso;
    j["left"] = a1mod::cli::canonical_form_to_json(a1mod::modcat::canonical_form(m));
    j["right"] = a1mod::cli::canonical_form_to_json(a1mod::modcat::canonical_form(n));
    emit(j, out_path);
    if (!iso) exit_code = 1;
  });

  auto* mod_hom = mod->add_subcommand("hom", "Intertwiner space of two endomorphism pairs");
  mod_hom->add_option("--left", mod_left, "Left endomorphism JSON")->required();
  mod_hom->add_option("--right", mod_right, "Right endomorphism JSON")->required();
  mod_hom->callback([&] {
    auto m = a1mod::cli::endo_pair_from_json(read_json_file(mod_left));
    auto n = a1mod::cli::endo_pair_from_json(read_json_file(mod_right));
    auto h = a1mod::modcat::hom_fp(m, n);
    Json j;
    j["endo"] = a1mod::cli::endo_pair_to_json(h);
    j["canonical"] = a1mod::cli::canonical_form_to_json(
        a1mod::modcat::canonical_form(a1mod::modcat::endo_to_fp(h, "t")));
    emit(j, out_path);
  });

  // ---- derived ------------------------------------------------------------
  auto* der = app.add_subcommand("derived", "Two-term complex operations");
  der->require_subcommand(1);
  std::string der_endo;

  auto* der_ev0 = der->add_subcommand("ev0", "Evaluation at 0 as a two-term complex");
  der_ev0->add_option("--endo", der_endo, "Endomorphism JSON")->required();
  der_ev0->callback([&] {
    auto m = a1mod::cli::endo_pair_from_json(read_json_file(der_endo));
    auto c = a1mod::derived::ev_zero_derived(m);
    Json j;
    j["complex"] = a1mod::cli::complex_to_json(c);
    j["h0"] = a1mod::derived::homology(c, 0);
    j["h1"] = a1mod::derived::homology(c, 1);
    j["acyclic"] = a1mod::derived::is_acyclic(c);
    emit(j, out_path);
  });

  // ---- fincat -------------------------------------------------------------
  auto* fc = app.add_subcommand("fincat", "Finite-category engine");
  fc->require_subcommand(1);
  std::string fc_functor, fc_source, fc_target, fc_cat, fc_object, fc_side = "over";
  int fc_k = 4;

  auto* fc_comma = fc->add_subcommand("comma", "Comma category of a functor at an object");
  fc_comma->add_option("--functor", fc_functor, "Functor JSON")->required();
  fc_comma->add_option("--source", fc_source, "Source category JSON")->required();
  fc_comma->add_option("--target", fc_target, "Target category JSON")->required();
  fc_comma->add_option("--object", fc_object, "Target object name")->required();
  fc_comma->add_option("--side", fc_side, "over | under");
  fc_comma->callback([&] {
    auto src = a1mod::cli::fin_cat_from_json(read_json_file(fc_source));
    auto tgt = a1mod::cli::fin_cat_from_json(read_json_file(fc_target));
    auto u = a1mod::cli::functor_from_json(read_json_file(fc_functor), src, tgt);
    auto b = tgt->find_object(fc_object);
    if (!b) throw std::runtime_error("unknown target object " + fc_object);
    auto side = fc_side == "under" ? a1mod::fincat::CommaSide::Under
                                   : a1mod::fincat::CommaSide::Over;
    auto comma = a1mod::fincat::comma_category(u, *b, side);
    Json j;
    j["category"] = a1mod::cli::fin_cat_to_json(*comma.category);
    Json cells = Json::array();
    for (const auto& [a, f] : comma.object_data) {
      Json e;
      e["object"] = src->object_name(a);
      e["arrow"] = tgt->morphism(f).name;
      cells.push_back(e);
    }
    j["cells"] = cells;
    emit(j, out_path);
  });

  auto* fc_exact = fc->add_subcommand("exact", "Check the canonical slice square of a functor");
  fc_exact->add_option("--functor", fc_functor, "Functor JSON")->required();
  fc_exact->add_option("--source", fc_source, "Source category JSON")->required();
  fc_exact->add_option("--target", fc_target, "Target category JSON")->required();
  fc_exact->add_option("--object", fc_object, "Target object name")->required();
  fc_exact->callback([&] {
    auto src = a1mod::cli::fin_cat_from_json(read_json_file(fc_source));
    auto tgt = a1mod::cli::fin_cat_from_json(read_json_file(fc_target));
    auto u = a1mod::cli::functor_from_json(read_json_file(fc_functor), src, tgt);
    auto b = tgt->find_object(fc_object);
    if (!b) throw std::runtime_error("unknown target object " + fc_object);
    auto report = a1mod::fincat::exact_square_check(a1mod::fincat::slice_square(u, *b));
    Json j;
    j["verdict"] = square_verdict_name(report.verdict);
    j["cellsTotal"] = report.cells_total;
    j["budgetExceeded"] = report.budget_exceeded;
    emit(j, out_path);
    if (report.verdict != a1mod::fincat::SquareVerdict::Certified) exit_code = 1;
  });

  auto* fc_sieve = fc->add_subcommand("sieve", "Contractibility certificate for a category");
  fc_sieve->add_option("--cat", fc_cat, "Category JSON")->required();
  fc_sieve->callback([&] {
    auto c = a1mod::cli::fin_cat_from_json(read_json_file(fc_cat));
    auto cert = a1mod::fincat::contractibility_certificate(c);
    bool ok = (cert.verdict == a1mod::fincat::Verdict::ContractibleByInitial ||
               cert.verdict == a1mod::fincat::Verdict::ContractibleByTerminal ||
               cert.verdict == a1mod::fincat::Verdict::ContractibleByAdjunctionZigzag) &&
              a1mod::fincat::revalidate_certificate(c, cert);
    Json j;
    j["verdict"] = a1mod::fincat::verdict_name(cert.verdict);
    if (cert.witness_object >= 0) j["witness"] = c->object_name(cert.witness_object);
    j["zigzagLength"] = cert.zigzag.size();
    if (!cert.note.empty()) j["note"] = cert.note;
    j["revalidated"] = ok;
    emit(j, out_path);
    if (!ok) exit_code = 1;
  });

  auto* fc_trunc = fc->add_subcommand("trunc", "Adjunction checks on the bounded comma replicas");
  fc_trunc->add_option("--k", fc_k, "Truncation bound (>= 2)")->capture_default_str();
  fc_trunc->callback([&] {
    auto t = a1mod::fincat::nn_truncations(fc_k);
    bool chain = a1mod::fincat::check_adjunction(t.chain_adjunction);
    bool merge = a1mod::fincat::check_adjunction(t.l_adjunction);
    bool sum = a1mod::fincat::check_adjunction(t.f_adjunction);
    auto cert = a1mod::fincat::contractibility_certificate(t.lower);
    bool lower = cert.verdict == a1mod::fincat::Verdict::ContractibleByInitial &&
                 a1mod::fincat::revalidate_certificate(t.lower, cert);
    Json j;
    j["k"] = t.k;
    j["chainAdjunction"] = chain;
    j["mergeAdjunction"] = merge;
    j["sumAdjunction"] = sum;
    j["lowerContractible"] = lower;
    emit(j, out_path);
    if (!(chain && merge && sum && lower)) exit_code = 1;
  });

  // ---- univ ---------------------------------------------------------------
  auto* uv = app.add_subcommand("univ", "Classification of extension-of-scalars functors");
  uv->require_subcommand(1);
  std::string uv_spec, uv_module, uv_left, uv_right;

  auto* uv_type = uv->add_subcommand("type", "Extract the witness of a functor spec");
  uv_type->add_option("--spec", uv_spec, "Spec JSON")->required();
  uv_type->callback([&] {
    auto s = a1mod::cli::spec_from_json(read_json_file(uv_spec));
    auto w = a1mod::univ::extract_type(s);
    Json j;
    j["type"] = w.alpha.str();
    j["base"] = w.target_vars;
    emit(j, out_path);
  });

  auto* uv_dec = uv->add_subcommand("decompose", "Check the witness route against base change");
  uv_dec->add_option("--spec", uv_spec, "Spec JSON")->required();
  uv_dec->add_option("--module", uv_module, "Module JSON")->required();
  uv_dec->callback([&] {
    auto s = a1mod::cli::spec_from_json(read_json_file(uv_spec));
    auto m = a1mod::cli::fp_module_from_json(read_json_file(uv_module));
    auto direct = a1mod::modcat::base_change(m, s.phi);
    auto staged = a1mod::modcat::ev_alpha_boxed(m, a1mod::univ::extract_type(s));
    bool ok = a1mod::univ::decompose_check(s, m);
    Json j;
    j["direct"] = a1mod::cli::canonical_form_to_json(a1mod::modcat::canonical_form(direct));
    j["staged"] = a1mod::cli::canonical_form_to_json(a1mod::modcat::canonical_form(staged));
    j["verdict"] = ok;
    emit(j, out_path);
    if (!ok) exit_code = 1;
  });

  auto* uv_an = uv->add_subcommand("an", "Iterated decomposition over several variables");
  uv_an->add_option("--spec", uv_spec, "Spec JSON (one image per source variable)")->required();
  uv_an->add_option("--module", uv_module, "Module JSON")->required();
  uv_an->callback([&] {
    Json js = read_json_file(uv_spec);
    a1mod::univ::AnSpec s;
    s.source_vars = js.at("source").get<std::vector<std::string>>();
    s.target_vars = js.at("target").get<std::vector<std::string>>();
    s.n = s.source_vars.size();
    for (const Json& p : js.at("images"))
      s.images.push_back(a1mod::polyalg::parse_poly(p.get<std::string>(), s.target_vars));
    s.validate();
    auto m = a1mod::cli::fp_module_from_json(read_json_file(uv_module));
    bool ok = a1mod::univ::an_decompose_check(s, m);
    Json j;
    j["n"] = s.n;
    j["verdict"] = ok;
    emit(j, out_path);
    if (!ok) exit_code = 1;
  });

  auto* uv_proj = uv->add_subcommand("projection", "Projection morphism invertibility check");
  uv_proj->add_option("--spec", uv_spec, "Spec JSON")->required();
  uv_proj->add_option("--left", uv_left, "Endomorphism JSON (module side)")->required();
  uv_proj->add_option("--right", uv_right, "Endomorphism JSON (twist side)")->required();
  uv_proj->callback([&] {
    auto s = a1mod::cli::spec_from_json(read_json_file(uv_spec));
    auto m = a1mod::cli::endo_pair_from_json(read_json_file(uv_left));
    auto n = a1mod::cli::endo_pair_from_json(read_json_file(uv_right));
    bool ok = a1mod::univ::projection_iso_check(s, m, n);
    Json j;
    j["verdict"] = ok;
    emit(j, out_path);
    if (!ok) exit_code = 1;
  });

  // ---- suite --------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "Property suites");
  suite->require_subcommand(1);
  a1mod::cli::SuiteConfig cfg;
  std::vector<std::string> suite_names;

  auto* suite_run = suite->add_subcommand("run", "Run the selected invariant suites");
  suite_run->add_option("--seed", cfg.seed, "Corpus seed")->capture_default_str();
  suite_run->add_option("--max-dim", cfg.max_dim, "Module dimension cap")->capture_default_str();
  suite_run->add_option("--max-deg", cfg.max_deg, "Polynomial degree cap")->capture_default_str();
  suite_run->add_option("--trunc-k", cfg.trunc_k, "Truncation bound")->capture_default_str();
  suite_run->add_option("--suites", suite_names, "Subset of suites to run")->delimiter(',');
  suite_run->callback([&] {
    cfg.suites = suite_names;
    auto report = a1mod::cli::run_suite(cfg);
    emit(report.to_json(cfg), out_path);
    std::cerr << report.text_mirror();
    if (!report.all_pass) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
