#ifndef MULTICAT_FAMILY_HPP
#define MULTICAT_FAMILY_HPP

#include <optional>

#include "multicat/functor.hpp"

namespace mcat {

// Object of the bounded free product completion: a finite family of objects
// of the ambient category, indexed by 0..size-1 in order.
struct FinFamily {
  CatPtr ambient;
  std::vector<int> assignment;
  int size() const { return static_cast<int>(assignment.size()); }
  bool operator==(const FinFamily& o) const {
    return ambient.get() == o.ambient.get() && assignment == o.assignment;
  }
};

// (alpha, components) : F -> G with alpha : G.index -> F.index and
// components[j] : F[alpha(j)] -> G[j]
struct FamilyMorphism {
  std::vector<int> reindex;
  std::vector<int> components;
  bool operator==(const FamilyMorphism& o) const { return reindex == o.reindex && components == o.components; }
};

FinFamily embed(CatPtr ambient, int obj);

std::vector<FamilyMorphism> family_hom(const FinFamily& f, const FinFamily& g);
int family_hom_count(const FinFamily& f, const FinFamily& g);

FamilyMorphism identity_family_morphism(const FinFamily& f);
FamilyMorphism compose_family_morphisms(const FamilyMorphism& g, const FamilyMorphism& f,
                                        const FinFamily& mid_source); // g after f; mid_source = f's source

struct FamilyProduct {
  FinFamily product;
  std::vector<FamilyMorphism> projections;
  std::vector<int> offsets; // start of each factor's index block
};

FamilyProduct family_product(CatPtr ambient, const std::vector<FinFamily>& factors);

// probes all product decompositions with total size <= probe_bound
bool is_coconnected(const FinFamily& f, int probe_bound);

FinFamily pi_on_family(const FinFunctor& u, const FinFamily& f);
FamilyMorphism pi_on_morphism(const FinFunctor& u, const FamilyMorphism& m);

struct UnitFamily {
  FinFamily family;            // apexes of the local units, component order
  std::vector<int> unit_arrows; // per index, the unit arrow B -> U(apex)
};

UnitFamily relative_left_adjoint_object(const FinFunctor& u, int base);
FamilyMorphism relative_left_adjoint_morphism(const FinFunctor& u, int f); // L on f : B1 -> B2

struct PiAdjunctionLine {
  std::vector<int> target_family; // objects of the target
  std::vector<int> source_family; // objects of the source
  int lhs = 0;                    // |PiA[L(targets), sources]|
  int rhs = 0;                    // |PiB[targets, U(sources)]|
};

struct PiAdjunctionReport {
  bool ok = true;
  std::string failure;
  int pairs_checked = 0;
  std::vector<PiAdjunctionLine> object_lines; // the singleton-by-singleton table
};

// cardinality equality for all families up to the bound plus an explicit
// natural bijection at object level, verified exhaustively
PiAdjunctionReport verify_pi_adjunction(const FinFunctor& u, int family_bound);

} // namespace mcat

#endif
