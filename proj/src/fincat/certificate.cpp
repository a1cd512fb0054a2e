#include "a1mod/fincat/certificate.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "a1mod/fincat/comma.hpp"

namespace a1mod::fincat {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ContractibleByInitial: return "ContractibleByInitial";
    case Verdict::ContractibleByTerminal: return "ContractibleByTerminal";
    case Verdict::ContractibleByAdjunctionZigzag: return "ContractibleByAdjunctionZigzag";
    case Verdict::Empty: return "Empty";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

bool is_initial_in(const FinCat& c, int o) {
  if (o < 0 || o >= static_cast<int>(c.num_objects())) return false;
  for (size_t x = 0; x < c.num_objects(); ++x)
    if (c.hom(o, static_cast<int>(x)).size() != 1) return false;
  return true;
}

bool is_terminal_in(const FinCat& c, int o) {
  if (o < 0 || o >= static_cast<int>(c.num_objects())) return false;
  for (size_t x = 0; x < c.num_objects(); ++x)
    if (c.hom(static_cast<int>(x), o).size() != 1) return false;
  return true;
}

// Retraction data for one dismantling pass: target[x] is where x is sent,
// equal to x for every kept object.
struct Beats {
  std::vector<int> removed;
  std::vector<int> target;
};

// up = true looks for objects whose strict up-set has a minimum; up = false
// looks for objects whose strict down-set has a maximum.  Only points whose
// retraction target survives the pass are removed, so the pass is consistent.
std::optional<Beats> find_beats(const FinCat& c, bool up) {
  int n = static_cast<int>(c.num_objects());
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (size_t m = 0; m < c.num_morphisms(); ++m) {
    const FinCat::Mor& mor = c.morphism(static_cast<int>(m));
    if (mor.src != mor.dst) rel[mor.src][mor.dst] = 1;
  }
  auto reaches = [&](int x, int y) { return up ? rel[x][y] != 0 : rel[y][x] != 0; };

  std::vector<int> beat_target(n, -1);
  for (int x = 0; x < n; ++x) {
    std::vector<int> strict;
    for (int y = 0; y < n; ++y)
      if (y != x && reaches(x, y)) strict.push_back(y);
    for (int m : strict) {
      bool extremal = true;
      for (int y : strict)
        if (y != m && !reaches(m, y)) {
          extremal = false;
          break;
        }
      if (extremal) {
        beat_target[x] = m;
        break;
      }
    }
  }

  Beats b;
  b.target.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (beat_target[x] != -1 && beat_target[beat_target[x]] == -1) {
      b.removed.push_back(x);
      b.target[x] = beat_target[x];
    } else {
      b.target[x] = x;
    }
  }
  if (b.removed.empty()) return std::nullopt;
  return b;
}

struct StepBuild {
  CatPtr sub;
  AdjunctionData adj;
};

// Full subcategory on the kept objects plus the retraction/inclusion pair.
// In a thin category the retraction is a functor because beat targets are
// comparable with every neighbour of the removed point.
StepBuild dismantle(const CatPtr& cur, const Beats& beats, bool up) {
  const FinCat& c = *cur;
  int n = static_cast<int>(c.num_objects());
  std::vector<char> kept(n, 1);
  for (int x : beats.removed) kept[x] = 0;

  FinCat s;
  std::vector<int> sub_of(n, -1);
  std::vector<int> orig_of;
  for (int o = 0; o < n; ++o)
    if (kept[o]) {
      sub_of[o] = s.add_object(c.object_name(o));
      orig_of.push_back(o);
    }
  std::vector<int> sub_mor(c.num_morphisms(), -1);
  for (size_t m = 0; m < c.num_morphisms(); ++m) {
    const FinCat::Mor& mor = c.morphism(static_cast<int>(m));
    if (!kept[mor.src] || !kept[mor.dst]) continue;
    if (c.is_identity(static_cast<int>(m)))
      sub_mor[m] = s.identity_of(sub_of[mor.src]);
    else
      sub_mor[m] = s.add_morphism(mor.name, sub_of[mor.src], sub_of[mor.dst]);
  }
  for (size_t f = 0; f < c.num_morphisms(); ++f) {
    if (sub_mor[f] == -1 || c.is_identity(static_cast<int>(f))) continue;
    for (size_t g = 0; g < c.num_morphisms(); ++g) {
      if (sub_mor[g] == -1 || c.is_identity(static_cast<int>(g))) continue;
      if (c.morphism(static_cast<int>(f)).dst != c.morphism(static_cast<int>(g)).src) continue;
      int gf = c.compose(static_cast<int>(g), static_cast<int>(f));
      s.set_composite(sub_mor[g], sub_mor[f], sub_mor[gf]);
    }
  }
  CatPtr sub = std::make_shared<const FinCat>(std::move(s));

  FunctorData retract;
  retract.source = cur;
  retract.target = sub;
  retract.object_map.resize(n);
  for (int o = 0; o < n; ++o) retract.object_map[o] = sub_of[beats.target[o]];
  retract.morphism_map.resize(c.num_morphisms());
  for (size_t m = 0; m < c.num_morphisms(); ++m) {
    const FinCat::Mor& mor = c.morphism(static_cast<int>(m));
    retract.morphism_map[m] =
        sub->hom(retract.object_map[mor.src], retract.object_map[mor.dst]).at(0);
  }

  FunctorData incl;
  incl.source = sub;
  incl.target = cur;
  incl.object_map = orig_of;
  incl.morphism_map.resize(sub->num_morphisms());
  for (size_t m = 0; m < c.num_morphisms(); ++m)
    if (sub_mor[m] != -1) incl.morphism_map[sub_mor[m]] = static_cast<int>(m);

  StepBuild out;
  out.sub = sub;
  AdjunctionData& adj = out.adj;
  if (up) {
    adj.left = retract;
    adj.right = incl;
    adj.unit.source = identity_functor(cur);
    adj.unit.target = compose_functors(incl, retract);
    for (int x = 0; x < n; ++x)
      adj.unit.components.push_back(c.hom(x, beats.target[x]).at(0));
    adj.counit.source = compose_functors(retract, incl);
    adj.counit.target = identity_functor(sub);
    for (size_t o = 0; o < sub->num_objects(); ++o)
      adj.counit.components.push_back(sub->identity_of(static_cast<int>(o)));
  } else {
    adj.left = incl;
    adj.right = retract;
    adj.unit.source = identity_functor(sub);
    adj.unit.target = compose_functors(retract, incl);
    for (size_t o = 0; o < sub->num_objects(); ++o)
      adj.unit.components.push_back(sub->identity_of(static_cast<int>(o)));
    adj.counit.source = compose_functors(incl, retract);
    adj.counit.target = identity_functor(cur);
    for (int x = 0; x < n; ++x)
      adj.counit.components.push_back(c.hom(beats.target[x], x).at(0));
  }
  return out;
}

}  // namespace

Certificate contractibility_certificate(const CatPtr& c, size_t max_intermediates) {
  Certificate cert;
  if (!c) {
    cert.note = "missing category";
    return cert;
  }
  if (c->num_objects() == 0) {
    cert.verdict = Verdict::Empty;
    return cert;
  }
  int w = -1;
  if (c->has_initial_object(&w)) {
    cert.verdict = Verdict::ContractibleByInitial;
    cert.witness_object = w;
    return cert;
  }
  if (c->has_terminal_object(&w)) {
    cert.verdict = Verdict::ContractibleByTerminal;
    cert.witness_object = w;
    return cert;
  }
  if (!c->is_thin()) {
    cert.note = "no extremal object; dismantling covers thin categories only";
    return cert;
  }

  CatPtr cur = c;
  std::vector<AdjunctionData> steps;
  for (;;) {
    if (steps.size() >= max_intermediates) {
      cert.note = "intermediate budget exhausted";
      return cert;
    }
    bool dir_up = true;
    std::optional<Beats> beats = find_beats(*cur, true);
    if (!beats) {
      dir_up = false;
      beats = find_beats(*cur, false);
    }
    if (!beats) {
      cert.note = "no beat points";
      return cert;
    }
    StepBuild sb = dismantle(cur, *beats, dir_up);
    if (!check_adjunction(sb.adj)) {
      cert.note = "dismantling step failed its own adjunction check";
      return cert;
    }
    steps.push_back(std::move(sb.adj));
    cur = sb.sub;
    if (cur->has_initial_object(&w)) {
      cert.verdict = Verdict::ContractibleByAdjunctionZigzag;
      cert.final_step = Verdict::ContractibleByInitial;
      cert.zigzag = std::move(steps);
      return cert;
    }
    if (cur->has_terminal_object(&w)) {
      cert.verdict = Verdict::ContractibleByAdjunctionZigzag;
      cert.final_step = Verdict::ContractibleByTerminal;
      cert.zigzag = std::move(steps);
      return cert;
    }
  }
}

bool revalidate_certificate(const CatPtr& c, const Certificate& cert) {
  if (!c) return false;
  try {
    switch (cert.verdict) {
      case Verdict::Empty: return c->num_objects() == 0;
      case Verdict::ContractibleByInitial: return is_initial_in(*c, cert.witness_object);
      case Verdict::ContractibleByTerminal: return is_terminal_in(*c, cert.witness_object);
      case Verdict::ContractibleByAdjunctionZigzag: {
        if (cert.zigzag.empty()) return false;
        CatPtr cur = c;
        for (const AdjunctionData& step : cert.zigzag) {
          if (!check_adjunction(step)) return false;
          if (step.left.source && same_category(*step.left.source, *cur))
            cur = step.left.target;
          else if (step.left.target && same_category(*step.left.target, *cur))
            cur = step.left.source;
          else
            return false;
          if (!cur) return false;
        }
        if (cert.final_step == Verdict::ContractibleByInitial) return cur->has_initial_object();
        if (cert.final_step == Verdict::ContractibleByTerminal) return cur->has_terminal_object();
        return false;
      }
      case Verdict::Unknown: return false;
    }
  } catch (...) {
    return false;
  }
  return false;
}

SquareReport exact_square_check(const SquareData& sq, size_t budget) {
  SquareReport rep;
  try {
    sq.validate();
  } catch (...) {
    return rep;
  }
  const FinCat& acat = *sq.u1.target;
  const FinCat& bcat = *sq.u2.target;
  const FinCat& ccat = *sq.v2.target;

  for (size_t a = 0; a < acat.num_objects(); ++a)
    for (size_t b = 0; b < bcat.num_objects(); ++b)
      rep.cells_total += ccat.hom(sq.v2.object_map[a], sq.v1.object_map[b]).size();

  bool any_empty = false;
  bool any_unknown = false;
  for (size_t a = 0; a < acat.num_objects() && !rep.budget_exceeded; ++a)
    for (size_t b = 0; b < bcat.num_objects() && !rep.budget_exceeded; ++b)
      for (int gamma : ccat.hom(sq.v2.object_map[a], sq.v1.object_map[b])) {
        if (rep.cells.size() >= budget) {
          rep.budget_exceeded = true;
          break;
        }
        TripleCommaResult tc = triple_comma(sq, static_cast<int>(a), static_cast<int>(b), gamma);
        CellReport cell;
        cell.a = static_cast<int>(a);
        cell.b = static_cast<int>(b);
        cell.gamma = gamma;
        cell.certificate = contractibility_certificate(tc.category);
        if (cell.certificate.verdict == Verdict::Empty) any_empty = true;
        if (cell.certificate.verdict == Verdict::Unknown) any_unknown = true;
        rep.cells.push_back(std::move(cell));
      }

  if (any_empty)
    rep.verdict = SquareVerdict::RefutedByEmpty;
  else if (rep.budget_exceeded || any_unknown)
    rep.verdict = SquareVerdict::Inconclusive;
  else
    rep.verdict = SquareVerdict::Certified;
  return rep;
}

}  // namespace a1mod::fincat
