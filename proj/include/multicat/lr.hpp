#ifndef MULTICAT_LR_HPP
#define MULTICAT_LR_HPP

#include "multicat/multilimits.hpp"
#include "multicat/orthogonality.hpp"

namespace mcat {

std::optional<int> terminal_object(const FinCategory& c); // canonical representative

struct ReflectionTriple {
  int left = -1, apex = -1, right = -1;
};

struct LRClassification {
  int terminal = -1;
  std::vector<int> l_objects, r_objects;
  std::vector<ReflectionTriple> reflections; // per object
};

LRClassification classify_lr(CatPtr c, const MorphismClass& left, const MorphismClass& right);

struct ReflectionUniversalReport {
  bool ok = true;
  int checked = 0;
  std::string failure;
};

ReflectionUniversalReport reflection_universal(CatPtr c, const MorphismClass& left, const MorphismClass& right,
                                               int obj);

struct CancellationResult {
  bool value = true;
  int witness_l = -1, witness_f = -1; // f.l in L' and l in L, yet f outside L'
};

CancellationResult check_right_l_cancellation(const FinCategory& c, const MorphismClass& left,
                                              const MorphismClass& lprime);

struct StalkLine {
  int point;             // p : 1 -> B
  int fiber_obj = -1;    // pullback apex
  int fiber_map = -1;    // projection fiber -> 1 (its terminal map)
  bool exists = false;   // pullback exists
  bool in_lprime = false;
};

struct StalkReport {
  bool stalkwise = false; // all existing fibers pass and none is missing
  bool partial = false;   // some fiber pullback does not exist
  std::vector<StalkLine> lines;
};

StalkReport stalkwise_classify(CatPtr c, int f, const MorphismClass& lprime);

std::vector<int> lprime_forms(const FinCategory& c, const MorphismClass& lprime, const MorphismClass& right, int obj);

struct CostableReport {
  bool cancellation = false;
  bool costable = false; // the opposite of the inclusion into the opposite slice is stable
  bool relff = false;
  int objects = 0; // size of the built category of forms over the base
};

CostableReport costable_inclusion_check(CatPtr c, const MorphismClass& left, const MorphismClass& lprime, int base);

} // namespace mcat

#endif
