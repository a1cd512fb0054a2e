#include <doctest.h>

#include "a1mod/fincat/truncations.hpp"

#include <algorithm>

using namespace a1mod::fincat;

namespace {
int pair_index(const std::vector<std::pair<int, int>>& v, int a, int b) {
  auto it = std::find(v.begin(), v.end(), std::make_pair(a, b));
  REQUIRE(it != v.end());
  return static_cast<int>(it - v.begin());
}
}  // namespace

TEST_CASE("pair category at cap two") {
  NnTruncations t = nn_truncations(2);
  t.pair_category->validate();
  CHECK(t.pair_objects.size() == 6);
  CHECK(t.pair_category->is_thin());
  int a = pair_index(t.pair_objects, 0, 2);
  int b = pair_index(t.pair_objects, 1, 0);
  CHECK(t.pair_category->hom(a, b).size() == 1);  // (a1,a2) = (1,1)
  int c = pair_index(t.pair_objects, 0, 1);
  int d = pair_index(t.pair_objects, 1, 1);
  CHECK(t.pair_category->hom(c, d).empty());  // would need a2 = -1
  CHECK(t.pair_category->hom(b, a).empty());  // first coordinate cannot drop
}

TEST_CASE("embedding into the ambient product is fully faithful") {
  for (int k : {2, 3, 4}) {
    NnTruncations t = nn_truncations(k);
    t.product_ambient->validate();
    CHECK(t.product_ambient->num_objects() == static_cast<size_t>((k + 1) * (k + 1)));
    t.pair_embedding.validate();
    CHECK(t.pair_embedding.is_fully_faithful());
    CHECK(t.pair_embedding.is_injective_on_objects());
    // image convention: (m, n) lands on (m + n, m)
    int src = pair_index(t.pair_objects, 1, 0);
    int img = t.pair_embedding.on_object(src);
    CHECK(t.product_ambient->object_name(img) == "(1,1)");
  }
}

TEST_CASE("lower region and its spine") {
  NnTruncations t = nn_truncations(2);
  t.lower->validate();
  CHECK(t.lower_objects.size() == 6);
  for (auto [x, y] : t.lower_objects) {
    CHECK(y <= x);
    CHECK(x <= 2);
  }
  int w = -1;
  CHECK(t.lower->has_initial_object(&w));
  CHECK(t.lower->object_name(w) == "(2,0)");
  t.chain->validate();
  CHECK(t.chain->num_objects() == 3);
  CHECK(t.chain->has_terminal_object(&w));
  CHECK(t.chain->object_name(w) == "(0,0)");
}

TEST_CASE("spine inclusion is a left adjoint") {
  for (int k = 2; k <= 5; ++k) {
    NnTruncations t = nn_truncations(k);
    t.chain_adjunction.left.validate();
    t.chain_adjunction.right.validate();
    CHECK(check_adjunction(t.chain_adjunction));
  }
}

TEST_CASE("merge comma at cap two") {
  NnTruncations t = nn_truncations(2);
  t.c_cat->validate();
  CHECK(t.c_objects.size() == 6);
  CHECK_FALSE(t.c_cat->is_thin());
  int a20 = pair_index(t.c_objects, 2, 0);
  int a10 = pair_index(t.c_objects, 1, 0);
  int a00 = pair_index(t.c_objects, 0, 0);
  CHECK(t.c_cat->hom(a20, a10).size() == 2);  // (0,1,0) and (1,0,0)
  CHECK(t.c_cat->hom(a20, a00).size() == 3);
  CHECK(t.c_cat->hom(a00, a20).empty());
  int a11 = pair_index(t.c_objects, 1, 1);
  CHECK(t.c_cat->hom(a11, a10).size() == 1);  // only (0,0,1)
  CHECK(t.c_cat->hom(a11, a00).size() == 2);  // (0,1,1) and (1,0,1)
}

TEST_CASE("sum comma at cap two") {
  NnTruncations t = nn_truncations(2);
  t.d_cat->validate();
  CHECK(t.d_cat->num_objects() == 3);
  CHECK_FALSE(t.d_cat->is_thin());
  int m2 = *t.d_cat->find_object("2");
  int m1 = *t.d_cat->find_object("1");
  int m0 = *t.d_cat->find_object("0");
  CHECK(t.d_cat->hom(m2, m1).size() == 2);
  CHECK(t.d_cat->hom(m2, m0).size() == 3);
  CHECK(t.d_cat->hom(m1, m2).empty());
}

TEST_CASE("total label functor") {
  NnTruncations t = nn_truncations(3);
  t.g_functor.validate();
  int a11 = pair_index(t.c_objects, 1, 1);
  int img = t.g_functor.on_object(a11);
  CHECK(t.d_cat->object_name(img) == "2");
  CHECK_FALSE(t.g_functor.is_injective_on_objects());
}

TEST_CASE("base row is closed and equivalent to the sum comma") {
  for (int k = 2; k <= 5; ++k) {
    NnTruncations t = nn_truncations(k);
    t.c0_cat->validate();
    CHECK(t.c0_cat->num_objects() == static_cast<size_t>(k + 1));
    t.i0.validate();
    CHECK(t.i0.is_fully_faithful());
    t.g_i0.validate();
    CHECK(t.g_i0.is_fully_faithful());
    CHECK(t.g_i0.is_injective_on_objects());
    CHECK(t.g_i0.source->num_objects() == t.g_i0.target->num_objects());
    CHECK(t.g_i0.source->num_morphisms() == t.g_i0.target->num_morphisms());
  }
}

TEST_CASE("reflection onto the base row") {
  for (int k = 2; k <= 5; ++k) {
    NnTruncations t = nn_truncations(k);
    CHECK(check_adjunction(t.l_adjunction));
    CHECK(check_adjunction(t.f_adjunction));
  }
}
