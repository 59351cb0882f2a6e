#ifndef MULTICAT_MULTILIMITS_HPP
#define MULTICAT_MULTILIMITS_HPP

#include <functional>
#include <optional>

#include "multicat/connectivity.hpp"
#include "multicat/functor.hpp"

namespace mcat {

struct ConeRecord {
  int apex = -1;
  std::vector<int> legs; // per shape object
  bool operator==(const ConeRecord& o) const { return apex == o.apex && legs == o.legs; }
};

struct ConeCatResult {
  CatPtr cat;
  std::vector<ConeRecord> cones;
  std::vector<int> mediators; // per morphism of the (co)cone category: carrier arrow of the ambient
};

ConeCatResult cone_category(const Diagram& d, int cap = kDefaultCap);
ConeCatResult cocone_category(const Diagram& d, int cap = kDefaultCap);

// legs enumerated in deterministic DFS order
void for_each_cone(const Diagram& d, int apex, const std::function<void(const std::vector<int>&)>& fn);
void for_each_cocone(const Diagram& d, int apex, const std::function<void(const std::vector<int>&)>& fn);
int count_cocones(const Diagram& d, int apex);
int count_cones(const Diagram& d, int apex);

// Multi-terminal family of cones (for limits) or multi-initial family of
// cocones (for colimits), computed on cone records directly. The empty family
// (no cones at all) is a legal value; absent reports a component without the
// required (co)universal member.
struct MultiversalFamily {
  bool colimit = false;
  std::vector<ConeRecord> cones; // every (co)cone over the diagram
  std::vector<int> block_of;
  std::vector<int> members;                 // cone indices, component order
  std::vector<std::pair<int, int>> witness; // per cone: (member position, mediating ambient arrow)
  std::optional<AbsentComponent> absent;
  bool ok() const { return !absent.has_value(); }
  const ConeRecord& member_cone(int pos) const { return cones[members[pos]]; }
  int find_cone(const ConeRecord& c) const;
};

MultiversalFamily multilimit(const Diagram& d, int cap = kDefaultCap);
MultiversalFamily multicolimit(const Diagram& d, int cap = kDefaultCap);

struct PreservationReport {
  bool preserved = false;
  bool vacuous = false;       // no source family members
  std::vector<int> partition; // per source member: the target member its image factors through
  std::string detail;
  bool source_absent = false, target_absent = false;
};

PreservationReport preserves_multilimits(const FinFunctor& u, const Diagram& d, int cap = kDefaultCap);

struct MreflectResult {
  std::vector<ConeRecord> family; // cocones built from the local units of the target colimit
  MultiversalFamily direct;       // direct multicolimit search in the source
  bool matches = false;           // member-wise isomorphic to the direct family
};

MreflectResult multireflective_multicolimit(const FinFunctor& u, const Diagram& d, int cap = kDefaultCap);
// core construction, taking the already computed target colimit family (which
// must be a singleton) and skipping precondition re-validation
MreflectResult multireflective_core(const FinFunctor& u, const Diagram& d, const MultiversalFamily& target,
                                    int cap = kDefaultCap);

struct ConnectedLimitResult {
  ConeRecord cone; // limiting cone in the source
  int unit_arrow = -1;
  int unit_inverse = -1;
};

ConnectedLimitResult connected_limit_via_units(const FinFunctor& u, const Diagram& d, int cap = kDefaultCap);
ConnectedLimitResult connected_limit_core(const FinFunctor& u, const Diagram& d, const MultiversalFamily& target);

struct HomFormulaLine {
  int obj;
  int cocone_count;
  int member_hom_sum;
};

struct HomFormulaReport {
  bool ok = true;
  std::vector<HomFormulaLine> lines;
};

HomFormulaReport verify_multicolimit_hom_formula(const Diagram& d, const MultiversalFamily& family);

// basic (co)limits of small shapes, by exhaustive search
struct SpanCorner {
  int apex, p, q;
};
std::optional<SpanCorner> pullback(const FinCategory& c, int f, int g); // cospan f : X->Z, g : Y->Z
std::optional<SpanCorner> pushout(const FinCategory& c, int f, int g);  // span  f : X->Y, g : X->Z
std::optional<std::pair<int, int>> equalizer(const FinCategory& c, int a, int b);
std::optional<std::pair<int, int>> coequalizer(const FinCategory& c, int a, int b);

} // namespace mcat

#endif
