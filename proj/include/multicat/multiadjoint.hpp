#ifndef MULTICAT_MULTIADJOINT_HPP
#define MULTICAT_MULTIADJOINT_HPP

#include <optional>
#include <span>
#include <string>

#include "multicat/connectivity.hpp"
#include "multicat/functor.hpp"

namespace mcat {

// Comma data for a base object B of the target: objects are pairs
// (A, f : B -> U(A)) in lexicographic order, with connected components and the
// canonical initial object of each component (the local unit) when it exists.
// Reusable: compute() clears and refills, so hot loops can share one instance.
class CommaSkeleton {
public:
  void compute(const FinCategory& src, const FinCategory& dst, std::span<const int> obj_map,
               std::span<const int> mor_map, int base);
  void compute(const FinFunctor& u, int base) {
    compute(u.source(), u.target(), u.obj_map, u.mor_map, base);
  }

  std::vector<std::pair<int, int>> pairs; // (A, f)
  std::vector<int> block_of;              // per pair
  int block_count = 0;
  std::vector<int> unit_of_block;         // pair index, -1 when the component has no initial object
  int failing_block = -1;                 // first component without an initial object, -1 if none
  bool all_units() const { return failing_block < 0; }

  int find_pair(int a, int f) const;
  // number of comma morphisms (A1,f1) -> (A2,f2)
  int arrows_between(const FinCategory& src, const FinCategory& dst, std::span<const int> mor_map, int o1,
                     int o2) const;

private:
  std::vector<int> uf_;
};

struct LocalUnitEntry {
  int index;      // component index in canonical order
  int unit_arrow; // morphism of the target, dom = base
  int apex;       // object of the source
  int comma_object;
};

struct LocalUnitRecord {
  int base;
  std::vector<LocalUnitEntry> entries;
};

struct LocalUnitsResult {
  int base = -1;
  std::vector<std::pair<int, int>> comma_objects;
  std::vector<int> block_of;
  std::optional<LocalUnitRecord> record;
  std::optional<AbsentComponent> absent; // block_objects carry comma object indices
  bool ok() const { return record.has_value(); }
};

LocalUnitsResult local_units(const FinFunctor& u, int base);

struct LraResult {
  bool value = false;
  int failing_base = -1;                 // object of the target
  std::optional<AbsentComponent> absent; // failing component of that comma
  std::vector<std::pair<int, int>> failing_comma_objects;
};

LraResult is_local_right_adjoint(const FinFunctor& u);

struct MraResult {
  bool value = false;
  LraResult lra;
  std::string note; // records that the solution set condition is automatic at finite scale
};

MraResult is_right_multi_adjoint(const FinFunctor& u);

// The slice-level adjunction L_A -| U_A with verified triangle identities.
struct LocalAdjunction {
  int at = -1;
  SliceResult source_slice; // source/A
  SliceResult target_slice; // target/U(A)
  FinFunctor restriction;   // U_A : source/A -> target/U(A)
  FinFunctor left;          // L_A : target/U(A) -> source/A
  std::vector<int> unit_components;   // per target-slice object
  std::vector<int> counit_components; // per source-slice object
  void verify() const; // naturality + both triangle identities; throws InternalInconsistency
};

LocalAdjunction local_left_adjoint(const FinFunctor& u, int at);

struct BCResult {
  int at_u = -1, at_f = -1;
  int sigma = -1; // morphism of the source, apex of U(u).f unit -> apex of f unit
  bool is_iso = false;
  std::optional<int> inverse;
  int apex_from = -1, apex_to = -1;
};

BCResult beck_chevalley(const FinFunctor& u, int at_u, int at_f);

struct ConerveLine {
  int obj;                      // A in the source
  int hom_count;                // |target(B, U(A))|
  std::vector<int> unit_counts; // per unit x, |source(A_x, A)|
};

struct ConerveReport {
  int base = -1;
  bool ok = false;
  std::vector<ConerveLine> lines;
  std::string failure;
};

ConerveReport conerve_decomposition(const FinFunctor& u, int base);

struct WidePullbackReport {
  bool value = true;
  int checked = 0;
  int skipped = 0; // diagrams whose source limit does not exist
  std::vector<int> witness_arrows;
  std::string detail;
};

WidePullbackReport preserves_wide_pullbacks(const FinFunctor& u, int arity_cap = 3);

} // namespace mcat

#endif
