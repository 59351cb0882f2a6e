#ifndef MULTICAT_FUNCTOR_HPP
#define MULTICAT_FUNCTOR_HPP

#include <utility>

#include "multicat/category.hpp"

namespace mcat {

// Functor between finite categories; functoriality is verified exhaustively
// by validate(). Holds shared ownership of both endpoints so derived
// categories stay alive as long as any functor into/out of them.
class FinFunctor {
public:
  std::string name;
  CatPtr src, dst;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  const FinCategory& source() const { return *src; }
  const FinCategory& target() const { return *dst; }
  int on_obj(int a) const { return obj_map[a]; }
  int on_mor(int f) const { return mor_map[f]; }

  void validate() const; // throws NotFunctorial / DanglingRef

  bool is_full() const;
  bool is_faithful() const;
  bool is_injective_on_objects() const;
};

FinFunctor identity_functor(CatPtr c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f); // g after f
FinFunctor opposite_functor(const FinFunctor& f); // same maps between opposite categories

// Builds the subcategory on the given objects and morphisms (which must
// contain the identities of the objects and be closed under composition) and
// its inclusion; object/morphism names are inherited.
FinFunctor subcategory_inclusion(CatPtr c, const std::vector<int>& objects, const std::vector<int>& morphisms);

struct RawFunctor {
  std::string name, src, dst;
  std::vector<std::pair<std::string, std::string>> obj_entries;
  std::vector<std::pair<std::string, std::string>> mor_entries;
};

// Identity morphisms are mapped automatically; explicit entries must agree.
FinFunctor validate_functor(const RawFunctor& raw, CatPtr src, CatPtr dst);

// Natural transformation data between parallel functors.
struct NatTrans {
  const FinFunctor* source = nullptr;
  const FinFunctor* target = nullptr;
  std::vector<int> components; // per object of source()->src: morphism of dst
  void validate() const;       // endpoint coherence + naturality squares
};

// A diagram is a functor out of a finite shape.
struct Diagram {
  FinFunctor functor;
  const FinCategory& shape() const { return *functor.src; }
  const FinCategory& ambient() const { return *functor.dst; }
};

struct SliceResult {
  CatPtr cat;
  FinFunctor projection;        // slice -> ambient
  std::vector<int> object_mors; // slice object -> morphism of the ambient into/out of the base
};

SliceResult slice(CatPtr c, int base, int cap = kDefaultCap);
SliceResult coslice(CatPtr c, int base, int cap = kDefaultCap);

struct ArrowCatResult {
  CatPtr cat;
  // morphisms of the arrow category are commuting squares (p, q)
  std::vector<std::pair<int, int>> square_parts;
};

ArrowCatResult arrow_category(CatPtr c, int cap = kDefaultCap);

struct CommaResult {
  CatPtr cat;
  FinFunctor projection;                      // B>U -> source of U
  std::vector<std::pair<int, int>> obj_pairs; // comma object -> (source object A, target morphism f : B -> U(A))
  std::vector<int> mor_us;                    // comma morphism -> morphism u of the source

  int find_pair(int a, int f) const {
    for (int k = 0; k < static_cast<int>(obj_pairs.size()); ++k)
      if (obj_pairs[k].first == a && obj_pairs[k].second == f) return k;
    return -1;
  }
};

CommaResult comma(int base, const FinFunctor& u, int cap = kDefaultCap);

} // namespace mcat

#endif
