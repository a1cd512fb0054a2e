#pragma once

#include "a1mod/derived/chain_complex.hpp"
#include "a1mod/fincat/fin_cat.hpp"
#include "a1mod/modcat/fp_module.hpp"
#include "a1mod/univ/univ.hpp"

#include <json.hpp>

namespace a1mod::cli {

// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

// fpmodule: {ring: [vars], generators: int, relations: [[poly-string]]}
Json fp_module_to_json(const modcat::FpModule& m);
modcat::FpModule fp_module_from_json(const Json& j);

// endopair: {dim: int, matrix: [[rational-string]]}
Json endo_pair_to_json(const modcat::EndoPair& m);
modcat::EndoPair endo_pair_from_json(const Json& j);

// complex: {minDegree: int, dims: [int], differentials: [[[rational-string]]]}
Json complex_to_json(const derived::ChainComplex& c);
derived::ChainComplex complex_from_json(const Json& j);

// fincat: {objects: [names], morphisms: [{name, src, dst}], identities: [name],
//          compose: [{g, f, gf}]} (non-identity composites)
Json fin_cat_to_json(const fincat::FinCat& c);
fincat::CatPtr fin_cat_from_json(const Json& j);

// functor: {objects: {name: name}, morphisms: {name: name}}
Json functor_to_json(const fincat::FunctorData& f);
fincat::FunctorData functor_from_json(const Json& j, const fincat::CatPtr& src,
                                      const fincat::CatPtr& tgt);

// spec: {source: [vars], target: [vars], images: [poly-string]}
Json spec_to_json(const univ::MonFunctorSpec& s);
univ::MonFunctorSpec spec_from_json(const Json& j);

Json canonical_form_to_json(const modcat::CanonicalForm& c);

}  // namespace a1mod::cli
