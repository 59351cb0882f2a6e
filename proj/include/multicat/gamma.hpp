#ifndef MULTICAT_GAMMA_HPP
#define MULTICAT_GAMMA_HPP

#include "multicat/orthogonality.hpp"

namespace mcat {

struct ConeSpec {
  int vertex = -1;
  std::vector<int> legs; // arrows out of the vertex
};

struct GammaClass {
  CatPtr cat;
  std::vector<ConeSpec> cones;
  MorphismClass v_gamma; // union of all legs

  static GammaClass of(CatPtr cat, std::vector<ConeSpec> cones);
};

bool is_gamma_local(const FinCategory& c, const GammaClass& gamma, int obj);
bool is_strongly_gamma_local(const FinCategory& c, const GammaClass& gamma, int obj);

MorphismClass gamma_local_morphisms(const FinCategory& c, const GammaClass& gamma);

struct BGammaResult {
  CatPtr subcat;
  FinFunctor inclusion;
  std::vector<int> local_objects;   // ambient objects
  std::vector<int> local_morphisms; // ambient morphisms between local objects
};

BGammaResult build_b_gamma(CatPtr c, const GammaClass& gamma, bool strong);

struct GammaTheoremReport {
  bool relff = false;
  bool stable = false;
  bool multi_adjoint = false;
  bool gliding = false;
  bool units_in_saturation = false; // finite shadow of the last theorem bullet
  bool all() const { return relff && stable && multi_adjoint && gliding; }
  BGammaResult b_gamma;
};

GammaTheoremReport verify_gamma_theorem(CatPtr c, const GammaClass& gamma, bool strong);

} // namespace mcat

#endif
