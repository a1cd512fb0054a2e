#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace a1mod::fincat {

// Explicit finite category: named objects and morphisms, identities, and a
// composition table over all composable pairs. validate() checks identity and
// associativity laws over the full table.
class FinCat {
 public:
  struct Mor {
    std::string name;
    int src = 0;
    int dst = 0;
  };

  static constexpr size_t kDefaultMaxObjects = 64;
  static constexpr size_t kDefaultMaxMorphisms = 4096;

  FinCat() = default;

  size_t num_objects() const { return objects_.size(); }
  size_t num_morphisms() const { return morphisms_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Mor>& morphisms() const { return morphisms_; }
  const std::string& object_name(int o) const { return objects_[o]; }
  const Mor& morphism(int m) const { return morphisms_[m]; }
  int identity_of(int object) const { return identities_[object]; }
  bool is_identity(int m) const { return identities_[morphisms_[m].src] == m; }

  int add_object(const std::string& name);
  // Identity morphisms are added automatically per object; this adds a
  // non-identity morphism.
  int add_morphism(const std::string& name, int src, int dst);
  void set_composite(int g, int f, int gf);  // g after f

  // g after f; both the composability and table-completeness are enforced.
  int compose(int g, int f) const;

  std::optional<int> find_object(const std::string& name) const;
  std::optional<int> find_morphism(const std::string& name) const;
  std::vector<int> hom(int src, int dst) const;

  // Identity/associativity/closure over the whole table; throws on violation
  // or when the size caps are exceeded.
  void validate(size_t max_objects = kDefaultMaxObjects,
                size_t max_morphisms = kDefaultMaxMorphisms) const;

  bool has_initial_object(int* witness = nullptr) const;
  bool has_terminal_object(int* witness = nullptr) const;
  // Thin = at most one morphism between any two objects.
  bool is_thin() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Mor> morphisms_;
  std::vector<int> identities_;
  std::unordered_map<uint64_t, int> comp_;
};

using CatPtr = std::shared_ptr<const FinCat>;

// Structural equality: same object/morphism names, frames, identities, and
// composites. Frame checks everywhere use this, never pointer identity.
bool same_category(const FinCat& a, const FinCat& b);

// Builds a thin category from a reflexive-transitive relation.
CatPtr make_poset(const std::vector<std::string>& objects,
                  const std::function<bool(int, int)>& leq);

// Chain 0 -> 1 -> ... -> n (ascending) as a poset category.
CatPtr make_chain(size_t n_plus_one);

CatPtr terminal_category();  // one object, one morphism

// One-object category with morphisms {0..cap}, composition min(a+b, cap).
CatPtr truncated_addition_monoid(int cap);

// Disjoint union; object/morphism names prefixed to stay unique.
CatPtr disjoint_union(const CatPtr& a, const CatPtr& b);

// Product category; objects "(a,b)", morphisms componentwise.
CatPtr product_category(const CatPtr& a, const CatPtr& b);

CatPtr opposite_category(const CatPtr& a);

// Functor between explicit categories; validate() checks identities,
// composition, and frame consistency.
struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  void validate() const;
  int on_object(int o) const { return object_map[o]; }
  int on_morphism(int m) const { return morphism_map[m]; }
  bool is_fully_faithful() const;
  bool is_injective_on_objects() const;
};

FunctorData identity_functor(const CatPtr& c);
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);  // g after f
FunctorData constant_functor(const CatPtr& src, const CatPtr& tgt, int object);

// Natural transformation between parallel functors; validate() checks the
// naturality square for every morphism of the source.
struct NatTransData {
  FunctorData source;  // F
  FunctorData target;  // G, parallel to F
  std::vector<int> components;  // per source object, a morphism F(a) -> G(a)

  void validate() const;
};

NatTransData identity_nat(const FunctorData& f);

// Square with a filling transformation alpha: v2∘u1 -> v1∘u2, where
// u1: D->A, u2: D->B, v2: A->C, v1: B->C.
struct SquareData {
  FunctorData u1, u2, v2, v1;
  NatTransData alpha;

  void validate() const;
};

// Adjunction F ⊣ G packaged with its unit and counit.
struct AdjunctionData {
  FunctorData left;    // F: A -> B
  FunctorData right;   // G: B -> A
  NatTransData unit;   // Id_A -> G∘F
  NatTransData counit; // F∘G -> Id_B
};

// True iff frames validate and both triangle identities hold at every object.
bool check_adjunction(const FunctorData& f, const FunctorData& g,
                      const NatTransData& unit, const NatTransData& counit);
bool check_adjunction(const AdjunctionData& adj);

enum class SieveKind { Sieve, Cosieve, Both, Neither };
struct SieveReport {
  SieveKind kind = SieveKind::Neither;
  std::string reason;
};

// Classifies a fully faithful, object-injective inclusion by whether its
// image is closed under incoming (sieve) or outgoing (cosieve) morphisms.
// Returns Neither with a reason when the preconditions fail.
SieveReport sieve_cosieve(const FunctorData& u);

}  // namespace a1mod::fincat
