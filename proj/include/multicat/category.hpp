#ifndef MULTICAT_CATEGORY_HPP
#define MULTICAT_CATEGORY_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multicat/error.hpp"

namespace mcat {

inline constexpr int kDefaultCap = 10000; // morphism cap for constructed categories

struct Morphism {
  std::string name;
  int dom = -1;
  int cod = -1;
};

// Explicit finite category: object list, morphism list (identities first, in
// object order, then declared arrows in declaration order) and a total
// composition table on composable pairs. Immutable once built.
class FinCategory {
public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identity; // object -> identity morphism index

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }

  int dom(int m) const { return morphisms[m].dom; }
  int cod(int m) const { return morphisms[m].cod; }
  bool is_identity(int m) const { return identity[morphisms[m].dom] == m && morphisms[m].dom == morphisms[m].cod; }

  bool composable(int g, int f) const { return cod(f) == dom(g); }
  // g after f; -1 when not composable
  int compose(int g, int f) const { return comp_[static_cast<size_t>(g) * morphisms.size() + f]; }
  void set_composite(int g, int f, int h) { comp_[static_cast<size_t>(g) * morphisms.size() + f] = h; }
  void alloc_table() { comp_.assign(morphisms.size() * morphisms.size(), -1); }

  std::vector<int> hom(int x, int y) const;
  int hom_count(int x, int y) const;

  // two-sided inverse search; fills *inverse when found
  bool is_iso(int m, int* inverse = nullptr) const;
  std::vector<int> iso_list() const; // all isomorphisms

  int find_object(std::string_view n) const;   // -1 when absent
  int find_morphism(std::string_view n) const; // -1 when absent
  int object_checked(std::string_view n) const;
  int morphism_checked(std::string_view n) const;

  // exhaustive law check (identity, associativity, dom/cod coherence);
  // throws LawViolation / MissingComposite with a witness
  void check_laws() const;

  const std::vector<int>& table() const { return comp_; }

private:
  std::vector<int> comp_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

struct RawArrow {
  std::string name, dom, cod;
};
struct RawComposite {
  std::string g, f, h; // g . f = h
};
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawArrow> arrows;
  std::vector<RawComposite> composites;
};

// Synthesizes identities (named id_<object>), fills identity composites and
// checks every law exhaustively.
FinCategory validate_category(const RawCategory& raw);

FinCategory opposite(const FinCategory& c);

} // namespace mcat

#endif
