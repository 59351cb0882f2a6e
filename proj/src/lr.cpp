#include "multicat/lr.hpp"

#include <algorithm>

namespace mcat {

std::optional<int> terminal_object(const FinCategory& c) {
  std::vector<int> t = terminal_objects(c);
  if (t.empty()) return std::nullopt;
  return t.front();
}

LRClassification classify_lr(CatPtr cp, const MorphismClass& left, const MorphismClass& right) {
  const FinCategory& c = *cp;
  FsReport fs = validate_factorization_system(c, left, right);
  if (!fs.valid)
    throw Error(ErrKind::NotAFactorizationSystem,
                "classify_lr: (" + fs.failures.front().axiom + ") fails at " + fs.failures.front().witness);
  std::optional<int> t = terminal_object(c);
  if (!t) throw Error(ErrKind::NoTerminal, "classify_lr: the category has no terminal object");
  LRClassification out;
  out.terminal = *t;
  auto terminal_map = [&](int x) { return c.hom(x, *t).front(); };
  for (int x = 0; x < c.object_count(); ++x) {
    int bang = terminal_map(x);
    if (left.contains(bang)) out.l_objects.push_back(x);
    if (right.contains(bang)) out.r_objects.push_back(x);
    auto facts = factor_via_classes(c, bang, left, right);
    if (facts.empty()) throw Error(ErrKind::InternalInconsistency, "terminal map lost its factorization");
    out.reflections.push_back({facts.front().left, facts.front().apex, facts.front().right});
  }
  // the terminal's isomorphism class is exactly the both-sided class
  for (int x = 0; x < c.object_count(); ++x) {
    bool both = left.contains(terminal_map(x)) && right.contains(terminal_map(x));
    bool iso_to_terminal = c.is_iso(terminal_map(x));
    if (both != iso_to_terminal)
      throw Error(ErrKind::InternalInconsistency, "two-sided objects differ from the terminal's iso class");
  }
  // the right reflection of a left object is the terminal, up to iso
  for (int x : out.l_objects) {
    int apex = out.reflections[x].apex;
    if (!c.is_iso(terminal_map(apex)))
      throw Error(ErrKind::InternalInconsistency, "reflection of a left object is not terminal");
  }
  return out;
}

ReflectionUniversalReport reflection_universal(CatPtr cp, const MorphismClass& left, const MorphismClass& right,
                                               int obj) {
  const FinCategory& c = *cp;
  LRClassification cls = classify_lr(cp, left, right);
  ReflectionUniversalReport rep;
  const ReflectionTriple refl = cls.reflections[obj];
  std::vector<char> is_r_obj(c.object_count(), 0);
  for (int r : cls.r_objects) is_r_obj[r] = 1;
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.dom(f) != obj || !is_r_obj[c.cod(f)]) continue;
    int mediators = 0;
    for (int m : right.members) {
      if (c.dom(m) != refl.apex || c.cod(m) != c.cod(f)) continue;
      if (c.compose(m, refl.left) == f) ++mediators;
    }
    ++rep.checked;
    if (mediators != 1) {
      rep.ok = false;
      rep.failure = "no unique right mediator for " + c.morphisms[f].name;
      return rep;
    }
  }
  return rep;
}

CancellationResult check_right_l_cancellation(const FinCategory& c, const MorphismClass& left,
                                              const MorphismClass& lprime) {
  for (int m : lprime.members)
    if (!left.contains(m))
      throw Error(ErrKind::NotASubclass, "check_right_l_cancellation: the distinguished class is not a subclass");
  CancellationResult res;
  for (int l : left.members)
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (!c.composable(f, l)) continue;
      if (lprime.contains(c.compose(f, l)) && !lprime.contains(f)) {
        res.value = false;
        res.witness_l = l;
        res.witness_f = f;
        return res;
      }
    }
  return res;
}

StalkReport stalkwise_classify(CatPtr cp, int f, const MorphismClass& lprime) {
  const FinCategory& c = *cp;
  std::optional<int> t = terminal_object(c);
  if (!t) throw Error(ErrKind::NoTerminal, "stalkwise_classify: the category has no terminal object");
  StalkReport rep;
  bool all_pass = true;
  for (int p = 0; p < c.morphism_count(); ++p) {
    if (c.dom(p) != *t || c.cod(p) != c.cod(f)) continue;
    StalkLine line;
    line.point = p;
    auto pb = pullback(c, f, p);
    if (!pb) {
      rep.partial = true;
      all_pass = false;
      rep.lines.push_back(line);
      continue;
    }
    line.exists = true;
    line.fiber_obj = pb->apex;
    line.fiber_map = pb->q; // the leg onto the terminal
    line.in_lprime = lprime.contains(pb->q);
    if (!line.in_lprime) all_pass = false;
    rep.lines.push_back(line);
  }
  rep.stalkwise = all_pass;
  return rep;
}

std::vector<int> lprime_forms(const FinCategory& c, const MorphismClass& lprime, const MorphismClass& right,
                              int obj) {
  std::optional<int> t = terminal_object(c);
  if (!t) throw Error(ErrKind::NoTerminal, "lprime_forms: the category has no terminal object");
  std::vector<int> out;
  for (int r : right.members) {
    if (c.cod(r) != obj) continue;
    int bang = c.hom(c.dom(r), *t).front();
    if (lprime.contains(bang)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CostableReport costable_inclusion_check(CatPtr cp, const MorphismClass& left, const MorphismClass& lprime,
                                        int base) {
  const FinCategory& c = *cp;
  CostableReport rep;
  CancellationResult canc = check_right_l_cancellation(c, left, lprime);
  rep.cancellation = canc.value;
  if (!canc.value)
    throw Error(ErrKind::CancellationFails,
                "costable_inclusion_check: cancellation fails at " + c.morphisms[canc.witness_f].name + " after " +
                    c.morphisms[canc.witness_l].name);
  for (int x = 0; x < c.object_count(); ++x)
    if (!left.contains(c.identity[x]))
      throw Error(ErrKind::NotAFactorizationSystem, "costable_inclusion_check: the left class must contain identities");
  for (int g : left.members)
    for (int f : left.members)
      if (c.composable(g, f) && !left.contains(c.compose(g, f)))
        throw Error(ErrKind::NotAFactorizationSystem,
                    "costable_inclusion_check: the left class must be closed under composition");

  SliceResult sl = slice(cp, base);
  const FinCategory& s = *sl.cat;
  // forms over the base: slice objects with a distinguished map, triangles with
  // a left carrier between them
  std::vector<int> obj_of, mor_of;
  std::vector<char> in_obj(s.object_count(), 0);
  for (int o = 0; o < s.object_count(); ++o)
    if (lprime.contains(sl.object_mors[o])) {
      obj_of.push_back(o);
      in_obj[o] = 1;
    }
  rep.objects = static_cast<int>(obj_of.size());
  for (int m = 0; m < s.morphism_count(); ++m)
    if (in_obj[s.dom(m)] && in_obj[s.cod(m)] && left.contains(sl.projection.mor_map[m])) mor_of.push_back(m);

  FinFunctor incl = subcategory_inclusion(sl.cat, obj_of, mor_of);
  incl.name = "forms";
  incl.validate();

  FinFunctor op = opposite_functor(incl);
  rep.costable = is_stable(op).value;
  rep.relff = is_relatively_full_faithful(op).value;
  return rep;
}

} // namespace mcat
