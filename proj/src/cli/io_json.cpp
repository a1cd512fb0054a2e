#include "a1mod/cli/io_json.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace a1mod::cli {

using modcat::EndoPair;
using modcat::FpModule;
using polyalg::Poly;
using polyalg::PolyMatrix;
using polyalg::QMat;
using polyalg::Rational;

namespace {

Json qmat_to_json(const QMat& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(polyalg::rat_str(v));
    rows.push_back(r);
  }
  return rows;
}

QMat qmat_from_json(const Json& j) {
  QMat m;
  for (const Json& row : j) {
    std::vector<Rational> r;
    for (const Json& v : row) r.push_back(polyalg::rat_parse(v.get<std::string>()));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

Json fp_module_to_json(const FpModule& m) {
  Json j = Json::object();
  j["ring"] = m.ring;
  j["generators"] = m.generators;
  Json rel = Json::array();
  for (size_t i = 0; i < m.presentation.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.presentation.cols(); ++k) row.push_back(m.presentation.at(i, k).str());
    rel.push_back(row);
  }
  j["relations"] = rel;
  return j;
}

FpModule fp_module_from_json(const Json& j) {
  FpModule m;
  m.ring = j.at("ring").get<std::vector<std::string>>();
  m.generators = j.at("generators").get<size_t>();
  const Json& rel = j.at("relations");
  if (rel.size() != m.generators)
    throw std::invalid_argument("fpmodule json: one relation row per generator");
  size_t cols = rel.empty() ? 0 : rel.at(0).size();
  m.presentation = PolyMatrix(m.generators, cols, m.ring);
  for (size_t i = 0; i < rel.size(); ++i) {
    if (rel.at(i).size() != cols)
      throw std::invalid_argument("fpmodule json: ragged relation rows");
    for (size_t k = 0; k < cols; ++k)
      m.presentation.set(i, k, polyalg::parse_poly(rel.at(i).at(k).get<std::string>(), m.ring));
  }
  m.validate();
  return m;
}

Json endo_pair_to_json(const EndoPair& m) {
  Json j = Json::object();
  j["dim"] = m.dim;
  j["matrix"] = qmat_to_json(m.endo);
  return j;
}

EndoPair endo_pair_from_json(const Json& j) {
  EndoPair m;
  m.dim = j.at("dim").get<size_t>();
  m.endo = qmat_from_json(j.at("matrix"));
  m.validate();
  return m;
}

Json complex_to_json(const derived::ChainComplex& c) {
  Json j = Json::object();
  j["minDegree"] = c.min_degree;
  j["dims"] = c.dims;
  Json diffs = Json::array();
  for (const QMat& d : c.differentials) diffs.push_back(qmat_to_json(d));
  j["differentials"] = diffs;
  return j;
}

derived::ChainComplex complex_from_json(const Json& j) {
  int min_degree = j.at("minDegree").get<int>();
  std::vector<size_t> dims = j.at("dims").get<std::vector<size_t>>();
  std::vector<QMat> diffs;
  for (const Json& d : j.at("differentials")) diffs.push_back(qmat_from_json(d));
  return derived::ChainComplex(min_degree, std::move(dims), std::move(diffs));
}

Json fin_cat_to_json(const fincat::FinCat& c) {
  Json j = Json::object();
  j["objects"] = c.objects();
  Json mors = Json::array();
  for (size_t m = 0; m < c.num_morphisms(); ++m) {
    const fincat::FinCat::Mor& mor = c.morphism(static_cast<int>(m));
    Json e = Json::object();
    e["name"] = mor.name;
    e["src"] = mor.src;
    e["dst"] = mor.dst;
    mors.push_back(e);
  }
  j["morphisms"] = mors;
  Json ids = Json::array();
  for (size_t o = 0; o < c.num_objects(); ++o)
    ids.push_back(c.morphism(c.identity_of(static_cast<int>(o))).name);
  j["identities"] = ids;
  Json comp = Json::array();
  for (size_t f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(static_cast<int>(f))) continue;
    for (size_t g = 0; g < c.num_morphisms(); ++g) {
      if (c.is_identity(static_cast<int>(g))) continue;
      if (c.morphism(static_cast<int>(g)).src != c.morphism(static_cast<int>(f)).dst) continue;
      Json e = Json::object();
      e["g"] = c.morphism(static_cast<int>(g)).name;
      e["f"] = c.morphism(static_cast<int>(f)).name;
      e["gf"] = c.morphism(c.compose(static_cast<int>(g), static_cast<int>(f))).name;
      comp.push_back(e);
    }
  }
  j["compose"] = comp;
  return j;
}

fincat::CatPtr fin_cat_from_json(const Json& j) {
  fincat::FinCat c;
  std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
  for (const std::string& name : objects) c.add_object(name);
  const Json& ids = j.at("identities");
  if (ids.size() != objects.size())
    throw std::invalid_argument("fincat json: one identity name per object");
  std::unordered_map<std::string, int> by_name;
  for (size_t o = 0; o < objects.size(); ++o)
    by_name[ids.at(o).get<std::string>()] = c.identity_of(static_cast<int>(o));
  for (const Json& e : j.at("morphisms")) {
    std::string name = e.at("name").get<std::string>();
    if (by_name.count(name)) continue;  // an identity, already present
    by_name[name] = c.add_morphism(name, e.at("src").get<int>(), e.at("dst").get<int>());
  }
  for (const Json& e : j.at("compose"))
    c.set_composite(by_name.at(e.at("g").get<std::string>()),
                    by_name.at(e.at("f").get<std::string>()),
                    by_name.at(e.at("gf").get<std::string>()));
  return std::make_shared<const fincat::FinCat>(std::move(c));
}

Json functor_to_json(const fincat::FunctorData& f) {
  f.validate();
  Json j = Json::object();
  Json objs = Json::object();
  for (size_t o = 0; o < f.source->num_objects(); ++o)
    objs[f.source->object_name(static_cast<int>(o))] =
        f.target->object_name(f.object_map[o]);
  j["objects"] = objs;
  Json mors = Json::object();
  for (size_t m = 0; m < f.source->num_morphisms(); ++m)
    mors[f.source->morphism(static_cast<int>(m)).name] =
        f.target->morphism(f.morphism_map[m]).name;
  j["morphisms"] = mors;
  return j;
}

fincat::FunctorData functor_from_json(const Json& j, const fincat::CatPtr& src,
                                      const fincat::CatPtr& tgt) {
  if (!src || !tgt) throw std::invalid_argument("functor json: missing categories");
  fincat::FunctorData f;
  f.source = src;
  f.target = tgt;
  f.object_map.assign(src->num_objects(), -1);
  for (const auto& [k, v] : j.at("objects").items()) {
    auto so = src->find_object(k);
    auto to = tgt->find_object(v.get<std::string>());
    if (!so || !to) throw std::invalid_argument("functor json: unknown object name");
    f.object_map[*so] = *to;
  }
  f.morphism_map.assign(src->num_morphisms(), -1);
  for (const auto& [k, v] : j.at("morphisms").items()) {
    auto sm = src->find_morphism(k);
    auto tm = tgt->find_morphism(v.get<std::string>());
    if (!sm || !tm) throw std::invalid_argument("functor json: unknown morphism name");
    f.morphism_map[*sm] = *tm;
  }
  f.validate();
  return f;
}

Json spec_to_json(const univ::MonFunctorSpec& s) {
  s.validate();
  Json j = Json::object();
  j["source"] = s.phi.source_vars;
  j["target"] = s.phi.target_vars;
  Json images = Json::array();
  for (const Poly& p : s.phi.images) images.push_back(p.str());
  j["images"] = images;
  return j;
}

univ::MonFunctorSpec spec_from_json(const Json& j) {
  univ::MonFunctorSpec s;
  s.phi.source_vars = j.at("source").get<std::vector<std::string>>();
  s.phi.target_vars = j.at("target").get<std::vector<std::string>>();
  for (const Json& p : j.at("images"))
    s.phi.images.push_back(polyalg::parse_poly(p.get<std::string>(), s.phi.target_vars));
  s.validate();
  return s;
}

Json canonical_form_to_json(const modcat::CanonicalForm& c) {
  Json j = Json::object();
  Json factors = Json::array();
  for (const Poly& p : c.invariant_factors) factors.push_back(p.str());
  j["invariantFactors"] = factors;
  j["freeRank"] = c.free_rank;
  return j;
}

}  // namespace a1mod::cli
