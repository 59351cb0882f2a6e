#include "multicat/category.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace mcat {

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::MissingComposite: return "MissingComposite";
    case ErrKind::LawViolation: return "LawViolation";
    case ErrKind::DanglingRef: return "DanglingRef";
    case ErrKind::DuplicateName: return "DuplicateName";
    case ErrKind::UnknownObject: return "UnknownObject";
    case ErrKind::UnknownMorphism: return "UnknownMorphism";
    case ErrKind::NotFunctorial: return "NotFunctorial";
    case ErrKind::SizeCap: return "SizeCap";
    case ErrKind::AmbientMismatch: return "AmbientMismatch";
    case ErrKind::ApexMismatch: return "ApexMismatch";
    case ErrKind::NotASquare: return "NotASquare";
    case ErrKind::NotLocalRightAdjoint: return "NotLocalRightAdjoint";
    case ErrKind::NotMultiAdjoint: return "NotMultiAdjoint";
    case ErrKind::InternalInconsistency: return "InternalInconsistency";
    case ErrKind::GlidingViolation: return "GlidingViolation";
    case ErrKind::NotAFactorizationSystem: return "NotAFactorizationSystem";
    case ErrKind::NoTerminal: return "NoTerminal";
    case ErrKind::NoTargetColimit: return "NoTargetColimit";
    case ErrKind::NoTargetLimit: return "NoTargetLimit";
    case ErrKind::NotFull: return "NotFull";
    case ErrKind::CancellationFails: return "CancellationFails";
    case ErrKind::NotASubclass: return "NotASubclass";
    case ErrKind::NotStable: return "NotStable";
    case ErrKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (morphisms[m].dom == x && morphisms[m].cod == y) out.push_back(m);
  return out;
}

int FinCategory::hom_count(int x, int y) const {
  int n = 0;
  for (const auto& m : morphisms)
    if (m.dom == x && m.cod == y) ++n;
  return n;
}

bool FinCategory::is_iso(int m, int* inverse) const {
  int x = dom(m), y = cod(m);
  for (int w = 0; w < morphism_count(); ++w) {
    if (morphisms[w].dom != y || morphisms[w].cod != x) continue;
    if (compose(w, m) == identity[x] && compose(m, w) == identity[y]) {
      if (inverse) *inverse = w;
      return true;
    }
  }
  return false;
}

std::vector<int> FinCategory::iso_list() const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (is_iso(m)) out.push_back(m);
  return out;
}

int FinCategory::find_object(std::string_view n) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects[i] == n) return i;
  return -1;
}

int FinCategory::find_morphism(std::string_view n) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms[i].name == n) return i;
  return -1;
}

int FinCategory::object_checked(std::string_view n) const {
  int i = find_object(n);
  if (i < 0) throw Error(ErrKind::UnknownObject, "unknown object '" + std::string(n) + "' in category " + name);
  return i;
}

int FinCategory::morphism_checked(std::string_view n) const {
  int i = find_morphism(n);
  if (i < 0) throw Error(ErrKind::UnknownMorphism, "unknown morphism '" + std::string(n) + "' in category " + name);
  return i;
}

void FinCategory::check_laws() const {
  const int m = morphism_count();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int h = compose(g, f);
      if (!composable(g, f)) {
        if (h != -1)
          throw Error(ErrKind::LawViolation,
                      "composite defined on non-composable pair (" + morphisms[g].name + ", " + morphisms[f].name + ")");
        continue;
      }
      if (h < 0)
        throw Error(ErrKind::MissingComposite,
                    "missing composite " + morphisms[g].name + " . " + morphisms[f].name + " in category " + name);
      if (dom(h) != dom(f) || cod(h) != cod(g))
        throw Error(ErrKind::LawViolation,
                    "dom/cod mismatch for " + morphisms[g].name + " . " + morphisms[f].name + " = " + morphisms[h].name);
    }
  for (int f = 0; f < m; ++f) {
    if (compose(identity[cod(f)], f) != f || compose(f, identity[dom(f)]) != f)
      throw Error(ErrKind::LawViolation, "identity law fails at " + morphisms[f].name);
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (!composable(h, g)) continue;
      int hg = compose(h, g);
      for (int f = 0; f < m; ++f) {
        if (!composable(g, f)) continue;
        if (compose(h, compose(g, f)) != compose(hg, f))
          throw Error(ErrKind::LawViolation, "associativity fails at triple (" + morphisms[h].name + ", " +
                                                 morphisms[g].name + ", " + morphisms[f].name + ")");
      }
    }
}

FinCategory validate_category(const RawCategory& raw) {
  FinCategory c;
  c.name = raw.name;

  std::unordered_map<std::string, int> obj_ix;
  for (const auto& o : raw.objects) {
    if (o.empty()) throw Error(ErrKind::DanglingRef, "empty object name in category " + raw.name);
    if (!obj_ix.emplace(o, c.object_count()).second)
      throw Error(ErrKind::DuplicateName, "duplicate object '" + o + "' in category " + raw.name);
    c.objects.push_back(o);
  }

  std::unordered_map<std::string, int> mor_ix;
  c.identity.resize(c.object_count());
  for (int i = 0; i < c.object_count(); ++i) {
    std::string id_name = "id_" + c.objects[i];
    c.identity[i] = c.morphism_count();
    mor_ix.emplace(id_name, c.morphism_count());
    c.morphisms.push_back({id_name, i, i});
  }
  for (const auto& a : raw.arrows) {
    auto d = obj_ix.find(a.dom);
    auto e = obj_ix.find(a.cod);
    if (d == obj_ix.end())
      throw Error(ErrKind::DanglingRef, "arrow '" + a.name + "' refers to unknown object '" + a.dom + "'");
    if (e == obj_ix.end())
      throw Error(ErrKind::DanglingRef, "arrow '" + a.name + "' refers to unknown object '" + a.cod + "'");
    if (!mor_ix.emplace(a.name, c.morphism_count()).second)
      throw Error(ErrKind::DuplicateName, "duplicate morphism '" + a.name + "' in category " + raw.name);
    c.morphisms.push_back({a.name, d->second, e->second});
  }

  c.alloc_table();
  const int m = c.morphism_count();
  // identity composites
  for (int f = 0; f < m; ++f) {
    c.set_composite(c.identity[c.cod(f)], f, f);
    c.set_composite(f, c.identity[c.dom(f)], f);
  }
  for (const auto& e : raw.composites) {
    auto look = [&](const std::string& n) {
      auto it = mor_ix.find(n);
      if (it == mor_ix.end())
        throw Error(ErrKind::DanglingRef, "composition entry refers to unknown morphism '" + n + "'");
      return it->second;
    };
    int g = look(e.g), f = look(e.f), h = look(e.h);
    if (!c.composable(g, f))
      throw Error(ErrKind::LawViolation, "composition entry " + e.g + " . " + e.f + " on a non-composable pair");
    if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
      throw Error(ErrKind::LawViolation, "composition entry " + e.g + " . " + e.f + " = " + e.h + " breaks dom/cod coherence");
    int prev = c.compose(g, f);
    if (prev != -1 && prev != h)
      throw Error(ErrKind::LawViolation,
                  "conflicting composites for " + e.g + " . " + e.f + ": " + c.morphisms[prev].name + " vs " + e.h);
    c.set_composite(g, f, h);
  }
  c.check_laws();
  return c;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory o;
  o.name = c.name.empty() ? std::string("op") : "op_" + c.name;
  o.objects = c.objects;
  o.identity = c.identity;
  o.morphisms = c.morphisms;
  for (auto& m : o.morphisms) std::swap(m.dom, m.cod);
  o.alloc_table();
  const int m = c.morphism_count();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (o.composable(g, f)) o.set_composite(g, f, c.compose(f, g));
  return o;
}

} // namespace mcat
