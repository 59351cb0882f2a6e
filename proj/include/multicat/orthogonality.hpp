#ifndef MULTICAT_ORTHOGONALITY_HPP
#define MULTICAT_ORTHOGONALITY_HPP

#include <array>
#include <optional>

#include "multicat/functor.hpp"

namespace mcat {

struct MorphismClass {
  CatPtr cat;
  std::vector<int> members; // sorted, unique

  bool contains(int m) const;
  static MorphismClass of(CatPtr cat, std::vector<int> members);
};

struct LiftReport {
  std::array<int, 4> square{}; // (l, top, r, bottom)
  std::vector<int> fillers;
};

// all diagonal fillers of the square r.top = bottom.l, in canonical order
LiftReport lift(const FinCategory& c, int l, int r, int top, int bottom);

// unique-filler count for a single (l, r) pair over every commuting square
bool orthogonal_pair(const FinCategory& c, int l, int r);

MorphismClass right_orthogonal(const FinCategory& c, const MorphismClass& left);
MorphismClass left_orthogonal(const FinCategory& c, const MorphismClass& right);

// n : B -> U(apex) with unique source-level diagonalization against every
// arrow in the range of U
bool is_candidate(const FinFunctor& u, int n, int apex);

// membership in the left orthogonal of the range of U
bool is_diagonally_universal(const FinFunctor& u, int n);

struct StableFactorization {
  int of = -1;         // f : B -> U(apex_of)
  int apex_of = -1;    // declared apex A
  int candidate = -1;  // n_f in the target
  int apex = -1;       // A_f in the source
  int right_part = -1; // u_f : A_f -> A in the source
};

StableFactorization stable_factorization(const FinFunctor& u, int f, int apex_of);

struct StableResult {
  bool value = false;
  int failing_obj = -1; // apex A of the witness
  int failing_mor = -1; // f : B -> U(A) without a candidate factorization
};

// independent decider: direct candidate-factorization search for every arrow
// into the range
StableResult is_stable(const FinFunctor& u);

struct FsFailure {
  std::string axiom;
  std::string witness;
};

struct FsReport {
  bool valid = true;
  std::vector<FsFailure> failures;
};

FsReport validate_factorization_system(const FinCategory& c, const MorphismClass& left, const MorphismClass& right);

struct Factorization {
  int left, apex, right;
};

std::vector<Factorization> factor_via_classes(const FinCategory& c, int f, const MorphismClass& left,
                                              const MorphismClass& right);

struct SkippedPushout {
  int member, along;
};

struct SaturationResult {
  MorphismClass closure;
  std::vector<SkippedPushout> skipped; // pushout obligations with no pushout in the category
};

// least fixpoint of: isomorphisms, composition, right-cancellation, pushouts
// of members along arbitrary morphisms when the pushout exists
SaturationResult saturate(const FinCategory& c, const MorphismClass& v, int cap = kDefaultCap);

struct RelffResult {
  bool value = false;
  // witness triangle U(u2).f = U(u1) with preimage count != 1
  int witness_f = -1, witness_u1 = -1, witness_u2 = -1;
  int preimages = 0;
};

RelffResult is_relatively_full_faithful(const FinFunctor& u);

struct LiftsRResult {
  bool value = false;
  int witness_obj = -1; // A with r : B -> U(A) not of the form U(u) up to iso
  int witness_mor = -1;
};

LiftsRResult lifts_r_maps(const FinFunctor& u, const MorphismClass& r_class);

struct GlidingResult {
  CatPtr subcat;        // objects with gliding property, right-class maps
  FinFunctor inclusion; // subcat -> ambient
};

GlidingResult gliding_inclusion(CatPtr c, const MorphismClass& left, const MorphismClass& right,
                                const std::vector<int>& objects);

} // namespace mcat

#endif
