#include "a1mod/fincat/fin_cat.hpp"

#include <algorithm>
#include <stdexcept>

namespace a1mod::fincat {

namespace {
uint64_t pair_key(int g, int f) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(g)) << 32) | static_cast<uint32_t>(f);
}

bool same_functor_maps(const FunctorData& x, const FunctorData& y) {
  return x.source && y.source && x.target && y.target &&
         same_category(*x.source, *y.source) && same_category(*x.target, *y.target) &&
         x.object_map == y.object_map && x.morphism_map == y.morphism_map;
}
}  // namespace

int FinCat::add_object(const std::string& name) {
  if (find_object(name)) throw std::invalid_argument("duplicate object name: " + name);
  int o = static_cast<int>(objects_.size());
  objects_.push_back(name);
  std::string id_name = "id_" + name;
  if (find_morphism(id_name)) throw std::invalid_argument("identity name collision: " + id_name);
  morphisms_.push_back({id_name, o, o});
  identities_.push_back(static_cast<int>(morphisms_.size()) - 1);
  return o;
}

int FinCat::add_morphism(const std::string& name, int src, int dst) {
  int n = static_cast<int>(objects_.size());
  if (src < 0 || src >= n || dst < 0 || dst >= n)
    throw std::invalid_argument("morphism endpoints out of range: " + name);
  if (find_morphism(name)) throw std::invalid_argument("duplicate morphism name: " + name);
  morphisms_.push_back({name, src, dst});
  return static_cast<int>(morphisms_.size()) - 1;
}

void FinCat::set_composite(int g, int f, int gf) {
  int n = static_cast<int>(morphisms_.size());
  if (f < 0 || f >= n || g < 0 || g >= n || gf < 0 || gf >= n)
    throw std::invalid_argument("set_composite: morphism out of range");
  if (morphisms_[f].dst != morphisms_[g].src)
    throw std::invalid_argument("set_composite: not composable");
  if (morphisms_[gf].src != morphisms_[f].src || morphisms_[gf].dst != morphisms_[g].dst)
    throw std::invalid_argument("set_composite: composite frame mismatch");
  // identity factors are resolved by compose(); only consistency is enforced
  if (is_identity(f)) {
    if (gf != g) throw std::invalid_argument("set_composite: identity law violated");
    return;
  }
  if (is_identity(g)) {
    if (gf != f) throw std::invalid_argument("set_composite: identity law violated");
    return;
  }
  auto [it, inserted] = comp_.emplace(pair_key(g, f), gf);
  if (!inserted && it->second != gf)
    throw std::invalid_argument("set_composite: conflicting entry");
}

int FinCat::compose(int g, int f) const {
  int n = static_cast<int>(morphisms_.size());
  if (f < 0 || f >= n || g < 0 || g >= n)
    throw std::invalid_argument("compose: morphism out of range");
  if (morphisms_[f].dst != morphisms_[g].src)
    throw std::invalid_argument("compose: not composable: " + morphisms_[g].name + " after " +
                                morphisms_[f].name);
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  auto it = comp_.find(pair_key(g, f));
  if (it == comp_.end())
    throw std::logic_error("compose: composite not set: " + morphisms_[g].name + " after " +
                           morphisms_[f].name);
  return it->second;
}

std::optional<int> FinCat::find_object(const std::string& name) const {
  for (size_t o = 0; o < objects_.size(); ++o)
    if (objects_[o] == name) return static_cast<int>(o);
  return std::nullopt;
}

std::optional<int> FinCat::find_morphism(const std::string& name) const {
  for (size_t m = 0; m < morphisms_.size(); ++m)
    if (morphisms_[m].name == name) return static_cast<int>(m);
  return std::nullopt;
}

std::vector<int> FinCat::hom(int src, int dst) const {
  std::vector<int> out;
  for (size_t m = 0; m < morphisms_.size(); ++m)
    if (morphisms_[m].src == src && morphisms_[m].dst == dst) out.push_back(static_cast<int>(m));
  return out;
}

void FinCat::validate(size_t max_objects, size_t max_morphisms) const {
  if (objects_.size() > max_objects) throw std::invalid_argument("object cap exceeded");
  if (morphisms_.size() > max_morphisms) throw std::invalid_argument("morphism cap exceeded");
  std::vector<std::vector<int>> by_src(objects_.size());
  for (size_t m = 0; m < morphisms_.size(); ++m)
    if (!is_identity(static_cast<int>(m))) by_src[morphisms_[m].src].push_back(static_cast<int>(m));
  // closure: every composable non-identity pair has a framed composite
  for (size_t f = 0; f < morphisms_.size(); ++f) {
    if (is_identity(static_cast<int>(f))) continue;
    for (int g : by_src[morphisms_[f].dst]) {
      int gf = compose(g, static_cast<int>(f));
      if (morphisms_[gf].src != morphisms_[f].src || morphisms_[gf].dst != morphisms_[g].dst)
        throw std::logic_error("composite frame mismatch");
    }
  }
  for (size_t f = 0; f < morphisms_.size(); ++f) {
    if (is_identity(static_cast<int>(f))) continue;
    for (int g : by_src[morphisms_[f].dst]) {
      int gf = compose(g, static_cast<int>(f));
      for (int h : by_src[morphisms_[g].dst])
        if (compose(h, gf) != compose(compose(h, g), static_cast<int>(f)))
          throw std::logic_error("associativity violated at " + morphisms_[f].name);
    }
  }
}

bool FinCat::has_initial_object(int* witness) const {
  size_t n = objects_.size();
  std::vector<std::vector<size_t>> counts(n, std::vector<size_t>(n, 0));
  for (const Mor& m : morphisms_) counts[m.src][m.dst]++;
  for (size_t o = 0; o < n; ++o) {
    bool ok = true;
    for (size_t x = 0; x < n && ok; ++x) ok = counts[o][x] == 1;
    if (ok) {
      if (witness) *witness = static_cast<int>(o);
      return true;
    }
  }
  return false;
}

bool FinCat::has_terminal_object(int* witness) const {
  size_t n = objects_.size();
  std::vector<std::vector<size_t>> counts(n, std::vector<size_t>(n, 0));
  for (const Mor& m : morphisms_) counts[m.src][m.dst]++;
  for (size_t o = 0; o < n; ++o) {
    bool ok = true;
    for (size_t x = 0; x < n && ok; ++x) ok = counts[x][o] == 1;
    if (ok) {
      if (witness) *witness = static_cast<int>(o);
      return true;
    }
  }
  return false;
}

bool FinCat::is_thin() const {
  size_t n = objects_.size();
  std::vector<std::vector<size_t>> counts(n, std::vector<size_t>(n, 0));
  for (const Mor& m : morphisms_)
    if (++counts[m.src][m.dst] > 1) return false;
  return true;
}

bool same_category(const FinCat& a, const FinCat& b) {
  if (&a == &b) return true;
  if (a.objects() != b.objects()) return false;
  if (a.num_morphisms() != b.num_morphisms()) return false;
  for (size_t m = 0; m < a.num_morphisms(); ++m) {
    const FinCat::Mor& ma = a.morphism(static_cast<int>(m));
    const FinCat::Mor& mb = b.morphism(static_cast<int>(m));
    if (ma.name != mb.name || ma.src != mb.src || ma.dst != mb.dst) return false;
  }
  for (size_t o = 0; o < a.num_objects(); ++o)
    if (a.identity_of(static_cast<int>(o)) != b.identity_of(static_cast<int>(o))) return false;
  for (size_t f = 0; f < a.num_morphisms(); ++f) {
    if (a.is_identity(static_cast<int>(f))) continue;
    for (size_t g = 0; g < a.num_morphisms(); ++g) {
      if (a.is_identity(static_cast<int>(g))) continue;
      if (a.morphism(static_cast<int>(f)).dst != a.morphism(static_cast<int>(g)).src) continue;
      if (a.compose(static_cast<int>(g), static_cast<int>(f)) !=
          b.compose(static_cast<int>(g), static_cast<int>(f)))
        return false;
    }
  }
  return true;
}

CatPtr make_poset(const std::vector<std::string>& objects,
                  const std::function<bool(int, int)>& leq) {
  FinCat c;
  int n = static_cast<int>(objects.size());
  for (const std::string& name : objects) c.add_object(name);
  std::vector<std::vector<int>> mor(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    mor[a][a] = c.identity_of(a);
    for (int b = 0; b < n; ++b)
      if (a != b && leq(a, b)) mor[a][b] = c.add_morphism(objects[a] + "->" + objects[b], a, b);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || mor[a][b] < 0) continue;
      for (int d = 0; d < n; ++d) {
        if (d == b || mor[b][d] < 0) continue;
        if (mor[a][d] < 0) throw std::invalid_argument("relation is not transitive");
        c.set_composite(mor[b][d], mor[a][b], mor[a][d]);
      }
    }
  return std::make_shared<const FinCat>(std::move(c));
}

CatPtr make_chain(size_t n_plus_one) {
  std::vector<std::string> names;
  for (size_t i = 0; i < n_plus_one; ++i) names.push_back(std::to_string(i));
  return make_poset(names, [](int a, int b) { return a <= b; });
}

CatPtr terminal_category() {
  return make_poset({"0"}, [](int, int) { return true; });
}

CatPtr truncated_addition_monoid(int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  FinCat c;
  int o = c.add_object("*");
  std::vector<int> by_value(static_cast<size_t>(cap) + 1);
  by_value[0] = c.identity_of(o);
  for (int v = 1; v <= cap; ++v) by_value[v] = c.add_morphism(std::to_string(v), o, o);
  for (int x = 1; x <= cap; ++x)
    for (int y = 1; y <= cap; ++y)
      c.set_composite(by_value[x], by_value[y], by_value[std::min(x + y, cap)]);
  return std::make_shared<const FinCat>(std::move(c));
}

CatPtr disjoint_union(const CatPtr& a, const CatPtr& b) {
  FinCat c;
  auto import = [&c](const FinCat& s, const std::string& prefix, int obj_off) {
    std::vector<int> mor_map(s.num_morphisms(), -1);
    for (size_t o = 0; o < s.num_objects(); ++o) c.add_object(prefix + s.object_name(static_cast<int>(o)));
    for (size_t m = 0; m < s.num_morphisms(); ++m) {
      const FinCat::Mor& mm = s.morphism(static_cast<int>(m));
      mor_map[m] = s.is_identity(static_cast<int>(m))
                       ? c.identity_of(obj_off + mm.src)
                       : c.add_morphism(prefix + mm.name, obj_off + mm.src, obj_off + mm.dst);
    }
    for (size_t f = 0; f < s.num_morphisms(); ++f) {
      if (s.is_identity(static_cast<int>(f))) continue;
      for (size_t g = 0; g < s.num_morphisms(); ++g) {
        if (s.is_identity(static_cast<int>(g))) continue;
        if (s.morphism(static_cast<int>(f)).dst != s.morphism(static_cast<int>(g)).src) continue;
        int gf = s.compose(static_cast<int>(g), static_cast<int>(f));
        c.set_composite(mor_map[g], mor_map[f], mor_map[gf]);
      }
    }
  };
  import(*a, "L:", 0);
  import(*b, "R:", static_cast<int>(a->num_objects()));
  return std::make_shared<const FinCat>(std::move(c));
}

CatPtr product_category(const CatPtr& a, const CatPtr& b) {
  FinCat c;
  int nb = static_cast<int>(b->num_objects());
  for (size_t i = 0; i < a->num_objects(); ++i)
    for (size_t j = 0; j < b->num_objects(); ++j)
      c.add_object("(" + a->object_name(static_cast<int>(i)) + "," +
                   b->object_name(static_cast<int>(j)) + ")");
  auto obj = [nb](int i, int j) { return i * nb + j; };
  std::vector<std::vector<int>> pm(a->num_morphisms(), std::vector<int>(b->num_morphisms(), -1));
  for (size_t f = 0; f < a->num_morphisms(); ++f) {
    const FinCat::Mor& fm = a->morphism(static_cast<int>(f));
    for (size_t g = 0; g < b->num_morphisms(); ++g) {
      const FinCat::Mor& gm = b->morphism(static_cast<int>(g));
      int src = obj(fm.src, gm.src), dst = obj(fm.dst, gm.dst);
      pm[f][g] = (a->is_identity(static_cast<int>(f)) && b->is_identity(static_cast<int>(g)))
                     ? c.identity_of(src)
                     : c.add_morphism("(" + fm.name + "," + gm.name + ")", src, dst);
    }
  }
  std::vector<std::vector<int>> a_by_src(a->num_objects()), b_by_src(b->num_objects());
  for (size_t m = 0; m < a->num_morphisms(); ++m)
    a_by_src[a->morphism(static_cast<int>(m)).src].push_back(static_cast<int>(m));
  for (size_t m = 0; m < b->num_morphisms(); ++m)
    b_by_src[b->morphism(static_cast<int>(m)).src].push_back(static_cast<int>(m));
  for (size_t f1 = 0; f1 < a->num_morphisms(); ++f1)
    for (size_t g1 = 0; g1 < b->num_morphisms(); ++g1) {
      if (a->is_identity(static_cast<int>(f1)) && b->is_identity(static_cast<int>(g1))) continue;
      for (int f2 : a_by_src[a->morphism(static_cast<int>(f1)).dst])
        for (int g2 : b_by_src[b->morphism(static_cast<int>(g1)).dst]) {
          if (a->is_identity(f2) && b->is_identity(g2)) continue;
          c.set_composite(pm[f2][g2], pm[f1][g1],
                          pm[a->compose(f2, static_cast<int>(f1))]
                            [b->compose(g2, static_cast<int>(g1))]);
        }
    }
  return std::make_shared<const FinCat>(std::move(c));
}

CatPtr opposite_category(const CatPtr& a) {
  FinCat c;
  for (size_t o = 0; o < a->num_objects(); ++o) c.add_object(a->object_name(static_cast<int>(o)));
  std::vector<int> t(a->num_morphisms(), -1);
  for (size_t m = 0; m < a->num_morphisms(); ++m) {
    const FinCat::Mor& mm = a->morphism(static_cast<int>(m));
    t[m] = a->is_identity(static_cast<int>(m)) ? c.identity_of(mm.src)
                                               : c.add_morphism(mm.name, mm.dst, mm.src);
  }
  for (size_t p = 0; p < a->num_morphisms(); ++p) {
    if (a->is_identity(static_cast<int>(p))) continue;
    for (size_t q = 0; q < a->num_morphisms(); ++q) {
      if (a->is_identity(static_cast<int>(q))) continue;
      if (a->morphism(static_cast<int>(q)).dst != a->morphism(static_cast<int>(p)).src) continue;
      int pq = a->compose(static_cast<int>(p), static_cast<int>(q));
      c.set_composite(t[q], t[p], t[pq]);
    }
  }
  return std::make_shared<const FinCat>(std::move(c));
}

void FunctorData::validate() const {
  if (!source || !target) throw std::invalid_argument("functor: null category");
  if (object_map.size() != source->num_objects())
    throw std::invalid_argument("functor: object map size mismatch");
  if (morphism_map.size() != source->num_morphisms())
    throw std::invalid_argument("functor: morphism map size mismatch");
  for (int v : object_map)
    if (v < 0 || v >= static_cast<int>(target->num_objects()))
      throw std::invalid_argument("functor: object image out of range");
  for (int v : morphism_map)
    if (v < 0 || v >= static_cast<int>(target->num_morphisms()))
      throw std::invalid_argument("functor: morphism image out of range");
  for (size_t o = 0; o < source->num_objects(); ++o)
    if (morphism_map[source->identity_of(static_cast<int>(o))] != target->identity_of(object_map[o]))
      throw std::invalid_argument("functor: identity not preserved");
  for (size_t m = 0; m < source->num_morphisms(); ++m) {
    const FinCat::Mor& mm = source->morphism(static_cast<int>(m));
    const FinCat::Mor& im = target->morphism(morphism_map[m]);
    if (im.src != object_map[mm.src] || im.dst != object_map[mm.dst])
      throw std::invalid_argument("functor: frame not preserved at " + mm.name);
  }
  for (size_t f = 0; f < source->num_morphisms(); ++f) {
    if (source->is_identity(static_cast<int>(f))) continue;
    for (size_t g = 0; g < source->num_morphisms(); ++g) {
      if (source->is_identity(static_cast<int>(g))) continue;
      if (source->morphism(static_cast<int>(f)).dst != source->morphism(static_cast<int>(g)).src)
        continue;
      if (morphism_map[source->compose(static_cast<int>(g), static_cast<int>(f))] !=
          target->compose(morphism_map[g], morphism_map[f]))
        throw std::invalid_argument("functor: composition not preserved");
    }
  }
}

bool FunctorData::is_fully_faithful() const {
  for (size_t x = 0; x < source->num_objects(); ++x)
    for (size_t y = 0; y < source->num_objects(); ++y) {
      std::vector<int> hs = source->hom(static_cast<int>(x), static_cast<int>(y));
      std::vector<int> ht = target->hom(object_map[x], object_map[y]);
      if (hs.size() != ht.size()) return false;
      std::vector<int> img;
      img.reserve(hs.size());
      for (int m : hs) img.push_back(morphism_map[m]);
      std::sort(img.begin(), img.end());
      std::sort(ht.begin(), ht.end());
      if (img != ht) return false;
    }
  return true;
}

bool FunctorData::is_injective_on_objects() const {
  std::vector<int> v = object_map;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

FunctorData identity_functor(const CatPtr& c) {
  FunctorData f{c, c, {}, {}};
  for (size_t o = 0; o < c->num_objects(); ++o) f.object_map.push_back(static_cast<int>(o));
  for (size_t m = 0; m < c->num_morphisms(); ++m) f.morphism_map.push_back(static_cast<int>(m));
  return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  if (!f.target || !g.source || !same_category(*f.target, *g.source))
    throw std::invalid_argument("functor composition: middle category mismatch");
  FunctorData out{f.source, g.target, {}, {}};
  out.object_map.reserve(f.object_map.size());
  for (int o : f.object_map) out.object_map.push_back(g.object_map[o]);
  out.morphism_map.reserve(f.morphism_map.size());
  for (int m : f.morphism_map) out.morphism_map.push_back(g.morphism_map[m]);
  return out;
}

FunctorData constant_functor(const CatPtr& src, const CatPtr& tgt, int object) {
  if (object < 0 || object >= static_cast<int>(tgt->num_objects()))
    throw std::invalid_argument("constant functor: object out of range");
  FunctorData f{src, tgt, std::vector<int>(src->num_objects(), object),
                std::vector<int>(src->num_morphisms(), tgt->identity_of(object))};
  return f;
}

void NatTransData::validate() const {
  source.validate();
  target.validate();
  if (!same_category(*source.source, *target.source) ||
      !same_category(*source.target, *target.target))
    throw std::invalid_argument("transformation: functors not parallel");
  const FinCat& a = *source.source;
  const FinCat& b = *source.target;
  if (components.size() != a.num_objects())
    throw std::invalid_argument("transformation: one component per object required");
  for (size_t o = 0; o < a.num_objects(); ++o) {
    int co = components[o];
    if (co < 0 || co >= static_cast<int>(b.num_morphisms()))
      throw std::invalid_argument("transformation: component out of range");
    const FinCat::Mor& cm = b.morphism(co);
    if (cm.src != source.object_map[o] || cm.dst != target.object_map[o])
      throw std::invalid_argument("transformation: component frame mismatch");
  }
  for (size_t m = 0; m < a.num_morphisms(); ++m) {
    const FinCat::Mor& mm = a.morphism(static_cast<int>(m));
    if (b.compose(components[mm.dst], source.morphism_map[m]) !=
        b.compose(target.morphism_map[m], components[mm.src]))
      throw std::invalid_argument("transformation: naturality fails at " + mm.name);
  }
}

NatTransData identity_nat(const FunctorData& f) {
  NatTransData n{f, f, {}};
  for (size_t o = 0; o < f.source->num_objects(); ++o)
    n.components.push_back(f.target->identity_of(f.object_map[o]));
  return n;
}

void SquareData::validate() const {
  u1.validate();
  u2.validate();
  v2.validate();
  v1.validate();
  if (!same_category(*u1.source, *u2.source))
    throw std::invalid_argument("square: the two projections disagree on the corner");
  if (!same_category(*u1.target, *v2.source))
    throw std::invalid_argument("square: u1/v2 frame mismatch");
  if (!same_category(*u2.target, *v1.source))
    throw std::invalid_argument("square: u2/v1 frame mismatch");
  if (!same_category(*v2.target, *v1.target))
    throw std::invalid_argument("square: codomain mismatch");
  alpha.validate();
  if (!same_functor_maps(alpha.source, compose_functors(v2, u1)))
    throw std::invalid_argument("square: alpha source is not v2 after u1");
  if (!same_functor_maps(alpha.target, compose_functors(v1, u2)))
    throw std::invalid_argument("square: alpha target is not v1 after u2");
}

bool check_adjunction(const FunctorData& f, const FunctorData& g,
                      const NatTransData& unit, const NatTransData& counit) {
  try {
    f.validate();
    g.validate();
    unit.validate();
    counit.validate();
    const FinCat& a = *f.source;
    const FinCat& b = *f.target;
    if (!same_category(*g.source, b) || !same_category(*g.target, a)) return false;
    if (!same_functor_maps(unit.source, identity_functor(f.source))) return false;
    if (!same_functor_maps(unit.target, compose_functors(g, f))) return false;
    if (!same_functor_maps(counit.source, compose_functors(f, g))) return false;
    if (!same_functor_maps(counit.target, identity_functor(g.source))) return false;
    for (size_t o = 0; o < a.num_objects(); ++o) {
      int fo = f.object_map[o];
      if (b.compose(counit.components[fo], f.morphism_map[unit.components[o]]) !=
          b.identity_of(fo))
        return false;
    }
    for (size_t o = 0; o < b.num_objects(); ++o) {
      int go = g.object_map[o];
      if (a.compose(g.morphism_map[counit.components[o]], unit.components[go]) !=
          a.identity_of(go))
        return false;
    }
    return true;
  } catch (...) {
    return false;
  }
}

bool check_adjunction(const AdjunctionData& adj) {
  return check_adjunction(adj.left, adj.right, adj.unit, adj.counit);
}

SieveReport sieve_cosieve(const FunctorData& u) {
  try {
    u.validate();
  } catch (const std::exception& e) {
    return {SieveKind::Neither, std::string("invalid functor: ") + e.what()};
  }
  if (!u.is_fully_faithful()) return {SieveKind::Neither, "inclusion is not fully faithful"};
  if (!u.is_injective_on_objects())
    return {SieveKind::Neither, "inclusion is not injective on objects"};
  const FinCat& t = *u.target;
  std::vector<char> in_image(t.num_objects(), 0);
  for (int v : u.object_map) in_image[v] = 1;
  bool sieve = true, cosieve = true;
  for (size_t m = 0; m < t.num_morphisms(); ++m) {
    const FinCat::Mor& mm = t.morphism(static_cast<int>(m));
    if (in_image[mm.dst] && !in_image[mm.src]) sieve = false;
    if (in_image[mm.src] && !in_image[mm.dst]) cosieve = false;
  }
  if (sieve && cosieve) return {SieveKind::Both, ""};
  if (sieve) return {SieveKind::Sieve, ""};
  if (cosieve) return {SieveKind::Cosieve, ""};
  return {SieveKind::Neither, "image not closed under incoming or outgoing morphisms"};
}

}  // namespace a1mod::fincat
