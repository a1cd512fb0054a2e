#include "a1mod/cli/corpus.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace a1mod::cli {

using fincat::CatPtr;
using fincat::FunctorData;
using fincat::VectDiagram;
using modcat::EndoPair;
using modcat::FpModule;
using modcat::Poly;
using modcat::Rational;

int Corpus::uniform(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("corpus: empty range");
  // Deliberately not std::uniform_int_distribution: its output is
  // implementation-defined, and the corpus must be byte-stable across
  // platforms for a fixed seed.
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational Corpus::small_rational() {
  return Rational(uniform(-3, 3)) / uniform(1, 2);
}

Rational Corpus::eigenvalue() { return Rational(uniform(-2, 2)); }

Rational Corpus::nonzero_eigenvalue() {
  static const int pool[4] = {-2, -1, 1, 2};
  return Rational(pool[uniform(0, 3)]);
}

Poly Corpus::poly(const std::string& var, int max_deg, bool force_nonzero) {
  std::vector<std::string> vars{var};
  int deg = uniform(0, max_deg);
  Poly p = Poly::zero(vars);
  for (int k = 0; k <= deg; ++k) {
    Rational c = small_rational();
    if (c != 0) p = p + Poly::monomial(vars, var, static_cast<size_t>(k), c);
  }
  if (force_nonzero && p.is_zero()) p = Poly::constant(vars, 1);
  return p;
}

Poly Corpus::monic_poly(const std::string& var, int deg) {
  std::vector<std::string> vars{var};
  Poly p = Poly::monomial(vars, var, static_cast<size_t>(deg), 1);
  for (int k = 0; k < deg; ++k) {
    Rational c = small_rational();
    if (c != 0) p = p + Poly::monomial(vars, var, static_cast<size_t>(k), c);
  }
  return p;
}

EndoPair Corpus::endo_pair(int max_dim) {
  if (max_dim < 1) throw std::invalid_argument("corpus: max_dim must be positive");
  int total = uniform(1, max_dim);
  EndoPair acc;
  bool first = true;
  int remaining = total;
  while (remaining > 0) {
    int size = uniform(1, remaining);
    EndoPair block = uniform(0, 1) == 0
                         ? EndoPair::jordan(static_cast<size_t>(size), eigenvalue())
                         : EndoPair::companion(monic_poly("t", size));
    acc = first ? block : modcat::endo_direct_sum(acc, block);
    first = false;
    remaining -= size;
  }
  return acc;
}

EndoPair Corpus::invertible_endo_pair(int max_dim) {
  if (max_dim < 1) throw std::invalid_argument("corpus: max_dim must be positive");
  int total = uniform(1, max_dim);
  EndoPair acc;
  bool first = true;
  int remaining = total;
  while (remaining > 0) {
    int size = uniform(1, remaining);
    EndoPair block = EndoPair::jordan(static_cast<size_t>(size), nonzero_eigenvalue());
    acc = first ? block : modcat::endo_direct_sum(acc, block);
    first = false;
    remaining -= size;
  }
  return acc;
}

FpModule Corpus::fp_module(const std::string& var, int max_dim, int max_free) {
  FpModule torsion = modcat::endo_to_fp(endo_pair(max_dim), var);
  FpModule free = FpModule::free_module({var}, static_cast<size_t>(uniform(0, max_free)));
  return modcat::direct_sum(torsion, free);
}

FpModule Corpus::q_module(int max_rank) {
  return FpModule::free_module({}, static_cast<size_t>(uniform(0, max_rank)));
}

CatPtr Corpus::poset(int max_objects) {
  if (max_objects < 1) throw std::invalid_argument("corpus: max_objects must be positive");
  int n = uniform(1, max_objects);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform(0, 2) == 0) reach[i][j] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return fincat::make_poset(names,
                            [reach](int a, int b) { return a == b || reach[a][b]; });
}

FunctorData Corpus::poset_functor(int max_objects) {
  CatPtr a = poset(max_objects);
  CatPtr b = poset(max_objects);
  int na = static_cast<int>(a->num_objects());
  int nb = static_cast<int>(b->num_objects());
  auto leq_a = [&](int x, int y) { return !a->hom(x, y).empty(); };
  auto leq_b = [&](int x, int y) { return !b->hom(x, y).empty(); };

  // Objects of a drawn poset are indexed along a linear extension, so
  // predecessors of i always sit at indices < i and the greedy assignment
  // below preserves order whenever any candidate exists at each step.
  std::vector<int> image(na, -1);
  bool stuck = false;
  for (int i = 0; i < na && !stuck; ++i) {
    std::vector<int> candidates;
    for (int t = 0; t < nb; ++t) {
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (leq_a(j, i) && !leq_b(image[j], t)) {
          ok = false;
          break;
        }
      if (ok) candidates.push_back(t);
    }
    if (candidates.empty()) {
      stuck = true;
      break;
    }
    image[i] = candidates[uniform(0, static_cast<int>(candidates.size()) - 1)];
  }
  if (stuck) image.assign(na, 0);  // constant maps are always monotone

  FunctorData f;
  f.source = a;
  f.target = b;
  f.object_map = image;
  f.morphism_map.assign(a->num_morphisms(), -1);
  for (size_t m = 0; m < a->num_morphisms(); ++m) {
    const fincat::FinCat::Mor& mor = a->morphism(static_cast<int>(m));
    f.morphism_map[m] = b->hom(image[mor.src], image[mor.dst]).at(0);
  }
  f.validate();
  return f;
}

VectDiagram Corpus::diagram(const CatPtr& shape, int max_dim) {
  if (!shape || shape->num_objects() == 0)
    throw std::invalid_argument("corpus: diagram needs a nonempty shape");
  int k = uniform(1, max_dim);
  VectDiagram acc;
  bool first = true;
  for (int i = 0; i < k; ++i) {
    int o = uniform(0, static_cast<int>(shape->num_objects()) - 1);
    VectDiagram rep = VectDiagram::representable(shape, o);
    acc = first ? rep : fincat::diagram_direct_sum(acc, rep);
    first = false;
  }
  return acc;
}

univ::MonFunctorSpec Corpus::spec(int max_deg) {
  return univ::MonFunctorSpec::from_image("t", "s", poly("s", max_deg));
}

}  // namespace a1mod::cli
