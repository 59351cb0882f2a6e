#ifndef MULTICAT_DSL_HPP
#define MULTICAT_DSL_HPP

#include <string>

#include "multicat/functor.hpp"
#include "multicat/gamma.hpp"
#include "multicat/orthogonality.hpp"

namespace mcat {

// Name-indexed workspace of validated artifacts, in declaration order.
struct Workspace {
  std::vector<std::pair<std::string, CatPtr>> categories;
  std::vector<std::pair<std::string, FinFunctor>> functors;

  struct ClassDef {
    std::string name, cat;
    MorphismClass cls;
  };
  std::vector<ClassDef> classes;

  struct GammaDef {
    std::string name, cat;
    GammaClass gamma;
  };
  std::vector<GammaDef> gammas;

  struct DiagramDef {
    std::string name, shape, cat;
    FinFunctor functor;
  };
  std::vector<DiagramDef> diagrams;

  CatPtr category(const std::string& name) const;
  const FinFunctor& functor_named(const std::string& name) const;
  const ClassDef& class_named(const std::string& name) const;
  const GammaDef& gamma_named(const std::string& name) const;
  const DiagramDef& diagram_named(const std::string& name) const;
};

// Parses workspace text; syntax errors carry 1-based line/column and the
// offending token; validation errors carry the position of the block header.
Workspace parse_workspace(const std::string& text);
void parse_workspace_into(const std::string& text, Workspace& ws);

// Canonical printer; parse(print(w)) reproduces identical tables.
std::string print_workspace(const Workspace& ws);

} // namespace mcat

#endif
