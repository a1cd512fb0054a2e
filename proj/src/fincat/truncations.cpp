#include "a1mod/fincat/truncations.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace a1mod::fincat {

namespace {

// Internal validation caps: generous enough for every k these builders meet.
constexpr size_t kObjCap = 512;
constexpr size_t kMorCap = 65536;

std::string pair_name(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

int thin_arrow(const FinCat& c, int src, int dst) { return c.hom(src, dst).at(0); }

// Functor into a thin category is determined by its object map.
void fill_thin_morphisms(FunctorData& f) {
  f.morphism_map.resize(f.source->num_morphisms());
  for (size_t m = 0; m < f.source->num_morphisms(); ++m) {
    const FinCat::Mor& mor = f.source->morphism(static_cast<int>(m));
    f.morphism_map[m] = thin_arrow(*f.target, f.object_map[mor.src], f.object_map[mor.dst]);
  }
}

}  // namespace

NnTruncations nn_truncations(int k) {
  if (k < 0) throw std::invalid_argument("nn_truncations: cap must be nonnegative");
  NnTruncations t;
  t.k = k;

  // Pair category: the unique (a1, a2) for (m,n) -> (m',n') needs
  // a1 = m' - m >= 0 and a2 = (n - n') - a1 >= 0.
  for (int m = 0; m <= k; ++m)
    for (int n = 0; m + n <= k; ++n) t.pair_objects.push_back({m, n});
  {
    std::vector<std::string> names;
    for (auto [m, n] : t.pair_objects) names.push_back(pair_name(m, n));
    auto leq = [objs = t.pair_objects](int i, int j) {
      auto [m, n] = objs[i];
      auto [m2, n2] = objs[j];
      return m2 >= m && n - n2 >= m2 - m;
    };
    t.pair_category = make_poset(names, leq);
    t.pair_category->validate(kObjCap, kMorCap);
  }

  t.product_ambient =
      product_category(opposite_category(make_chain(k + 1)), make_chain(k + 1));
  t.product_ambient->validate(kObjCap, kMorCap);

  t.pair_embedding.source = t.pair_category;
  t.pair_embedding.target = t.product_ambient;
  for (auto [m, n] : t.pair_objects)
    t.pair_embedding.object_map.push_back((m + n) * (k + 1) + m);
  fill_thin_morphisms(t.pair_embedding);

  // Lower region: (x,y) -> (x',y') iff x >= x' and y <= y'.
  auto lidx = [](int x, int y) { return x * (x + 1) / 2 + y; };
  for (int x = 0; x <= k; ++x)
    for (int y = 0; y <= x; ++y) t.lower_objects.push_back({x, y});
  {
    std::vector<std::string> names;
    for (auto [x, y] : t.lower_objects) names.push_back(pair_name(x, y));
    auto leq = [objs = t.lower_objects](int i, int j) {
      auto [x, y] = objs[i];
      auto [x2, y2] = objs[j];
      return x >= x2 && y <= y2;
    };
    t.lower = make_poset(names, leq);
    t.lower->validate(kObjCap, kMorCap);
  }

  {
    std::vector<std::string> names;
    for (int x = 0; x <= k; ++x) names.push_back(pair_name(x, 0));
    auto leq = [](int i, int j) { return i >= j; };
    t.chain = make_poset(names, leq);
    t.chain->validate(kObjCap, kMorCap);
  }

  {
    FunctorData incl;
    incl.source = t.chain;
    incl.target = t.lower;
    for (int x = 0; x <= k; ++x) incl.object_map.push_back(lidx(x, 0));
    fill_thin_morphisms(incl);
    FunctorData retr;
    retr.source = t.lower;
    retr.target = t.chain;
    for (auto [x, y] : t.lower_objects) {
      (void)y;
      retr.object_map.push_back(x);
    }
    fill_thin_morphisms(retr);
    t.chain_adjunction.left = incl;
    t.chain_adjunction.right = retr;
    t.chain_adjunction.unit.source = identity_functor(t.chain);
    t.chain_adjunction.unit.target = compose_functors(retr, incl);
    for (int x = 0; x <= k; ++x)
      t.chain_adjunction.unit.components.push_back(t.chain->identity_of(x));
    t.chain_adjunction.counit.source = compose_functors(incl, retr);
    t.chain_adjunction.counit.target = identity_functor(t.lower);
    for (size_t o = 0; o < t.lower->num_objects(); ++o) {
      auto [x, y] = t.lower_objects[o];
      (void)y;
      t.chain_adjunction.counit.components.push_back(
          thin_arrow(*t.lower, lidx(x, 0), static_cast<int>(o)));
    }
  }

  // Merge comma. Morphism records carry (src object, j, k, l); identities are
  // the all-zero labels, so composition is componentwise addition throughout.
  std::map<std::pair<int, int>, int> cidx;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b) {
      cidx[{a, b}] = static_cast<int>(t.c_objects.size());
      t.c_objects.push_back({a, b});
    }
  std::map<std::tuple<int, int, int, int>, int> cmor;
  {
    FinCat c;
    for (auto [a, b] : t.c_objects) c.add_object(pair_name(a, b));
    struct Rec {
      int id, src, j, kk, l;
    };
    std::vector<Rec> recs;
    for (auto [a, b] : t.c_objects) {
      int src = cidx.at({a, b});
      cmor[{src, 0, 0, 0}] = c.identity_of(src);
      for (int cc = a; cc >= 0; --cc)
        for (int d = b; d >= 0; --d) {
          int l = b - d;
          for (int j = 0; j <= a - cc; ++j) {
            int kk = a - cc - j;
            if (j == 0 && kk == 0 && l == 0) continue;
            std::string name = "(" + std::to_string(j) + "," + std::to_string(kk) + "," +
                               std::to_string(l) + ")@" + pair_name(a, b);
            int id = c.add_morphism(name, src, cidx.at({cc, d}));
            cmor[{src, j, kk, l}] = id;
            recs.push_back({id, src, j, kk, l});
          }
        }
    }
    for (const Rec& r1 : recs)
      for (const Rec& r2 : recs) {
        if (c.morphism(r2.id).src != c.morphism(r1.id).dst) continue;
        c.set_composite(r2.id, r1.id,
                        cmor.at({r1.src, r1.j + r2.j, r1.kk + r2.kk, r1.l + r2.l}));
      }
    t.c_cat = std::make_shared<const FinCat>(std::move(c));
    t.c_cat->validate(kObjCap, kMorCap);
  }

  // Sum comma on total labels.
  std::map<std::tuple<int, int, int>, int> dmor;
  {
    FinCat d;
    for (int m = 0; m <= k; ++m) d.add_object(std::to_string(m));
    struct Rec {
      int id, src, i, j;
    };
    std::vector<Rec> recs;
    for (int m = 0; m <= k; ++m) {
      dmor[{m, 0, 0}] = d.identity_of(m);
      for (int m2 = m; m2 >= 0; --m2)
        for (int i = 0; i <= m - m2; ++i) {
          int j = m - m2 - i;
          if (i == 0 && j == 0) continue;
          std::string name =
              "(" + std::to_string(i) + "," + std::to_string(j) + ")@" + std::to_string(m);
          int id = d.add_morphism(name, m, m2);
          dmor[{m, i, j}] = id;
          recs.push_back({id, m, i, j});
        }
    }
    for (const Rec& r1 : recs)
      for (const Rec& r2 : recs) {
        if (d.morphism(r2.id).src != d.morphism(r1.id).dst) continue;
        d.set_composite(r2.id, r1.id, dmor.at({r1.src, r1.i + r2.i, r1.j + r2.j}));
      }
    t.d_cat = std::make_shared<const FinCat>(std::move(d));
    t.d_cat->validate(kObjCap, kMorCap);
  }

  // Base row as its own category.
  std::map<std::tuple<int, int, int>, int> c0mor;
  {
    FinCat c0;
    for (int a = 0; a <= k; ++a) c0.add_object(pair_name(a, 0));
    struct Rec {
      int id, src, j, kk;
    };
    std::vector<Rec> recs;
    for (int a = 0; a <= k; ++a) {
      c0mor[{a, 0, 0}] = c0.identity_of(a);
      for (int cc = a; cc >= 0; --cc)
        for (int j = 0; j <= a - cc; ++j) {
          int kk = a - cc - j;
          if (j == 0 && kk == 0) continue;
          std::string name = "(" + std::to_string(j) + "," + std::to_string(kk) + ",0)@" +
                             pair_name(a, 0);
          int id = c0.add_morphism(name, a, cc);
          c0mor[{a, j, kk}] = id;
          recs.push_back({id, a, j, kk});
        }
    }
    for (const Rec& r1 : recs)
      for (const Rec& r2 : recs) {
        if (c0.morphism(r2.id).src != c0.morphism(r1.id).dst) continue;
        c0.set_composite(r2.id, r1.id, c0mor.at({r1.src, r1.j + r2.j, r1.kk + r2.kk}));
      }
    t.c0_cat = std::make_shared<const FinCat>(std::move(c0));
    t.c0_cat->validate(kObjCap, kMorCap);
  }

  // Morphism-level data of c_cat/d_cat/c0_cat, recovered from the maps built
  // above, keyed by morphism id.
  auto c_label = [&](int m) {
    for (const auto& [key, id] : cmor)
      if (id == m) return key;
    throw std::logic_error("unlabelled merge-comma morphism");
  };
  auto d_label = [&](int m) {
    for (const auto& [key, id] : dmor)
      if (id == m) return key;
    throw std::logic_error("unlabelled sum-comma morphism");
  };
  auto c0_label = [&](int m) {
    for (const auto& [key, id] : c0mor)
      if (id == m) return key;
    throw std::logic_error("unlabelled base-row morphism");
  };

  t.i0.source = t.c0_cat;
  t.i0.target = t.c_cat;
  for (int a = 0; a <= k; ++a) t.i0.object_map.push_back(cidx.at({a, 0}));
  t.i0.morphism_map.resize(t.c0_cat->num_morphisms());
  for (size_t m = 0; m < t.c0_cat->num_morphisms(); ++m) {
    auto [a, j, kk] = c0_label(static_cast<int>(m));
    t.i0.morphism_map[m] = cmor.at({cidx.at({a, 0}), j, kk, 0});
  }

  t.g_functor.source = t.c_cat;
  t.g_functor.target = t.d_cat;
  for (auto [a, b] : t.c_objects) t.g_functor.object_map.push_back(a + b);
  t.g_functor.morphism_map.resize(t.c_cat->num_morphisms());
  for (size_t m = 0; m < t.c_cat->num_morphisms(); ++m) {
    auto [src, j, kk, l] = c_label(static_cast<int>(m));
    auto [a, b] = t.c_objects[src];
    t.g_functor.morphism_map[m] = dmor.at({a + b, j, kk + l});
  }

  t.g_i0 = compose_functors(t.g_functor, t.i0);

  {
    FunctorData big_l;
    big_l.source = t.c_cat;
    big_l.target = t.c0_cat;
    for (auto [a, b] : t.c_objects) {
      (void)b;
      big_l.object_map.push_back(a);
    }
    big_l.morphism_map.resize(t.c_cat->num_morphisms());
    for (size_t m = 0; m < t.c_cat->num_morphisms(); ++m) {
      auto [src, j, kk, l] = c_label(static_cast<int>(m));
      (void)l;
      auto [a, b] = t.c_objects[src];
      (void)b;
      big_l.morphism_map[m] = c0mor.at({a, j, kk});
    }
    t.l_adjunction.left = big_l;
    t.l_adjunction.right = t.i0;
    t.l_adjunction.unit.source = identity_functor(t.c_cat);
    t.l_adjunction.unit.target = compose_functors(t.i0, big_l);
    for (size_t o = 0; o < t.c_cat->num_objects(); ++o) {
      auto [a, b] = t.c_objects[o];
      (void)a;
      t.l_adjunction.unit.components.push_back(cmor.at({static_cast<int>(o), 0, 0, b}));
    }
    t.l_adjunction.counit.source = compose_functors(big_l, t.i0);
    t.l_adjunction.counit.target = identity_functor(t.c0_cat);
    for (int a = 0; a <= k; ++a)
      t.l_adjunction.counit.components.push_back(t.c0_cat->identity_of(a));
  }

  {
    FunctorData big_f;
    big_f.source = t.d_cat;
    big_f.target = t.c0_cat;
    for (int m = 0; m <= k; ++m) big_f.object_map.push_back(m);
    big_f.morphism_map.resize(t.d_cat->num_morphisms());
    for (size_t m = 0; m < t.d_cat->num_morphisms(); ++m) {
      auto [src, i, j] = d_label(static_cast<int>(m));
      big_f.morphism_map[m] = c0mor.at({src, i, j});
    }
    t.f_adjunction.left = big_f;
    t.f_adjunction.right = t.g_i0;
    t.f_adjunction.unit.source = identity_functor(t.d_cat);
    t.f_adjunction.unit.target = compose_functors(t.g_i0, big_f);
    for (int m = 0; m <= k; ++m)
      t.f_adjunction.unit.components.push_back(t.d_cat->identity_of(m));
    t.f_adjunction.counit.source = compose_functors(big_f, t.g_i0);
    t.f_adjunction.counit.target = identity_functor(t.c0_cat);
    for (int a = 0; a <= k; ++a)
      t.f_adjunction.counit.components.push_back(t.c0_cat->identity_of(a));
  }

  return t;
}

}  // namespace a1mod::fincat
