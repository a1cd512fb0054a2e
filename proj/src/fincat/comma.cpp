#include "a1mod/fincat/comma.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace a1mod::fincat {

CommaResult comma_category(const FunctorData& u, int b, CommaSide side) {
  u.validate();
  const FinCat& src = *u.source;
  const FinCat& tgt = *u.target;
  if (b < 0 || b >= static_cast<int>(tgt.num_objects()))
    throw std::invalid_argument("comma: object out of range");

  FinCat c;
  std::vector<std::pair<int, int>> cells;
  for (size_t a = 0; a < src.num_objects(); ++a) {
    int ua = u.object_map[a];
    std::vector<int> legs = side == CommaSide::Over ? tgt.hom(ua, b) : tgt.hom(b, ua);
    for (int f : legs) {
      c.add_object("x" + std::to_string(cells.size()));
      cells.push_back({static_cast<int>(a), f});
    }
  }

  // (i, j, g): a source-category morphism g between the cells' base objects
  // satisfying the triangle condition over/under b.
  std::map<std::tuple<int, int, int>, int> mors;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = 0; j < cells.size(); ++j) {
      auto [ai, fi] = cells[i];
      auto [aj, fj] = cells[j];
      for (int g : src.hom(ai, aj)) {
        if (src.is_identity(g)) continue;  // cell identities are automatic
        int ug = u.morphism_map[g];
        bool ok = side == CommaSide::Over ? tgt.compose(fj, ug) == fi
                                          : tgt.compose(ug, fi) == fj;
        if (!ok) continue;
        int id = c.add_morphism("m" + std::to_string(mors.size()), static_cast<int>(i),
                                static_cast<int>(j));
        mors[{static_cast<int>(i), static_cast<int>(j), g}] = id;
      }
    }

  for (const auto& [key1, m1] : mors)
    for (const auto& [key2, m2] : mors) {
      auto [i, j1, g1] = key1;
      auto [j2, k, g2] = key2;
      if (j1 != j2) continue;
      int g21 = src.compose(g2, g1);
      int composite = src.is_identity(g21) ? c.identity_of(i) : mors.at({i, k, g21});
      c.set_composite(m2, m1, composite);
    }

  CommaResult out;
  out.category = std::make_shared<const FinCat>(std::move(c));
  out.object_data = cells;
  out.projection.source = out.category;
  out.projection.target = u.source;
  out.projection.object_map.reserve(cells.size());
  for (const auto& [a, f] : cells) {
    (void)f;
    out.projection.object_map.push_back(a);
  }
  out.projection.morphism_map.assign(out.category->num_morphisms(), -1);
  for (size_t i = 0; i < cells.size(); ++i)
    out.projection.morphism_map[out.category->identity_of(static_cast<int>(i))] =
        src.identity_of(cells[i].first);
  for (const auto& [key, m] : mors) out.projection.morphism_map[m] = std::get<2>(key);
  return out;
}

TripleCommaResult triple_comma(const SquareData& sq, int a, int b, int gamma) {
  sq.validate();
  const FinCat& dcat = *sq.u1.source;
  const FinCat& acat = *sq.u1.target;
  const FinCat& bcat = *sq.u2.target;
  const FinCat& ccat = *sq.v2.target;
  if (a < 0 || a >= static_cast<int>(acat.num_objects()) || b < 0 ||
      b >= static_cast<int>(bcat.num_objects()))
    throw std::invalid_argument("double comma: object out of range");
  if (gamma < 0 || gamma >= static_cast<int>(ccat.num_morphisms()))
    throw std::invalid_argument("double comma: morphism out of range");
  const FinCat::Mor& gm = ccat.morphism(gamma);
  if (gm.src != sq.v2.object_map[a] || gm.dst != sq.v1.object_map[b])
    throw std::invalid_argument("double comma: frame mismatch for the connecting morphism");

  FinCat c;
  std::vector<std::array<int, 3>> cells;
  for (size_t d = 0; d < dcat.num_objects(); ++d)
    for (int f : acat.hom(a, sq.u1.object_map[d]))
      for (int g : bcat.hom(sq.u2.object_map[d], b)) {
        int lhs = ccat.compose(sq.v1.morphism_map[g],
                               ccat.compose(sq.alpha.components[d], sq.v2.morphism_map[f]));
        if (lhs != gamma) continue;
        c.add_object("x" + std::to_string(cells.size()));
        cells.push_back({static_cast<int>(d), f, g});
      }

  std::map<std::tuple<int, int, int>, int> mors;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = 0; j < cells.size(); ++j) {
      auto [di, fi, gi] = cells[i];
      auto [dj, fj, gj] = cells[j];
      for (int h : dcat.hom(di, dj)) {
        if (dcat.is_identity(h)) continue;
        if (acat.compose(sq.u1.morphism_map[h], fi) != fj) continue;
        if (bcat.compose(gj, sq.u2.morphism_map[h]) != gi) continue;
        int id = c.add_morphism("m" + std::to_string(mors.size()), static_cast<int>(i),
                                static_cast<int>(j));
        mors[{static_cast<int>(i), static_cast<int>(j), h}] = id;
      }
    }

  for (const auto& [key1, m1] : mors)
    for (const auto& [key2, m2] : mors) {
      auto [i, j1, h1] = key1;
      auto [j2, k, h2] = key2;
      if (j1 != j2) continue;
      int h21 = dcat.compose(h2, h1);
      int composite = dcat.is_identity(h21) ? c.identity_of(i) : mors.at({i, k, h21});
      c.set_composite(m2, m1, composite);
    }

  TripleCommaResult out;
  out.category = std::make_shared<const FinCat>(std::move(c));
  out.object_data = cells;
  return out;
}

SquareData slice_square(const FunctorData& u, int b) {
  u.validate();
  if (b < 0 || b >= static_cast<int>(u.target->num_objects()))
    throw std::invalid_argument("slice square: object out of range");
  CommaResult comma = comma_category(u, b, CommaSide::Over);
  CatPtr point = terminal_category();
  SquareData sq;
  sq.u1 = comma.projection;
  sq.u2 = constant_functor(comma.category, point, 0);
  sq.v2 = u;
  sq.v1 = constant_functor(point, u.target, b);
  sq.alpha.source = compose_functors(sq.v2, sq.u1);
  sq.alpha.target = compose_functors(sq.v1, sq.u2);
  for (const auto& [a, f] : comma.object_data) {
    (void)a;
    sq.alpha.components.push_back(f);
  }
  return sq;
}

}  // namespace a1mod::fincat
