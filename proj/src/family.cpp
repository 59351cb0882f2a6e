#include "multicat/family.hpp"

#include <algorithm>
#include <functional>

#include "multicat/multiadjoint.hpp"

namespace mcat {

FinFamily embed(CatPtr ambient, int obj) {
  if (obj < 0 || obj >= ambient->object_count()) throw Error(ErrKind::UnknownObject, "embed: object out of range");
  return FinFamily{std::move(ambient), {obj}};
}

std::vector<FamilyMorphism> family_hom(const FinFamily& f, const FinFamily& g) {
  if (f.ambient.get() != g.ambient.get())
    throw Error(ErrKind::AmbientMismatch, "family_hom: families over different ambient categories");
  const FinCategory& c = *f.ambient;
  std::vector<FamilyMorphism> out;
  const int s = f.size(), t = g.size();
  if (t == 0) {
    out.push_back(FamilyMorphism{{}, {}});
    return out;
  }
  if (s == 0) return out;
  std::vector<int> alpha(t, 0);
  while (true) {
    // enumerate componentwise arrows for this reindexing, lexicographically
    std::vector<std::vector<int>> cand(t);
    bool feasible = true;
    for (int j = 0; j < t && feasible; ++j) {
      cand[j] = c.hom(f.assignment[alpha[j]], g.assignment[j]);
      feasible = !cand[j].empty();
    }
    if (feasible) {
      std::vector<size_t> pos(t, 0);
      int depth = 0;
      std::vector<int> comp(t);
      while (depth >= 0) {
        if (depth == t) {
          out.push_back(FamilyMorphism{alpha, comp});
          --depth;
          continue;
        }
        if (pos[depth] >= cand[depth].size()) {
          pos[depth] = 0;
          --depth;
          continue;
        }
        comp[depth] = cand[depth][pos[depth]++];
        ++depth;
      }
    }
    int k = t - 1;
    while (k >= 0 && alpha[k] == s - 1) alpha[k--] = 0;
    if (k < 0) break;
    ++alpha[k];
  }
  return out;
}

int family_hom_count(const FinFamily& f, const FinFamily& g) {
  if (f.ambient.get() != g.ambient.get())
    throw Error(ErrKind::AmbientMismatch, "family_hom_count: families over different ambient categories");
  const FinCategory& c = *f.ambient;
  if (g.size() == 0) return 1;
  long long total = 1;
  for (int j = 0; j < g.size(); ++j) {
    long long col = 0;
    for (int i = 0; i < f.size(); ++i) col += c.hom_count(f.assignment[i], g.assignment[j]);
    total *= col;
    if (total == 0) return 0;
  }
  return static_cast<int>(total);
}

FamilyMorphism identity_family_morphism(const FinFamily& f) {
  FamilyMorphism m;
  m.reindex.resize(f.size());
  m.components.resize(f.size());
  for (int i = 0; i < f.size(); ++i) {
    m.reindex[i] = i;
    m.components[i] = f.ambient->identity[f.assignment[i]];
  }
  return m;
}

FamilyMorphism compose_family_morphisms(const FamilyMorphism& g, const FamilyMorphism& f,
                                        const FinFamily& mid_source) {
  const FinCategory& c = *mid_source.ambient;
  FamilyMorphism h;
  const int t = static_cast<int>(g.reindex.size());
  h.reindex.resize(t);
  h.components.resize(t);
  for (int j = 0; j < t; ++j) {
    int mid = g.reindex[j];
    h.reindex[j] = f.reindex[mid];
    h.components[j] = c.compose(g.components[j], f.components[mid]);
  }
  return h;
}

FamilyProduct family_product(CatPtr ambient, const std::vector<FinFamily>& factors) {
  FamilyProduct out;
  out.product.ambient = std::move(ambient);
  for (const auto& f : factors) {
    if (f.ambient.get() != out.product.ambient.get())
      throw Error(ErrKind::AmbientMismatch, "family_product: mixed ambient categories");
    out.offsets.push_back(out.product.size());
    out.product.assignment.insert(out.product.assignment.end(), f.assignment.begin(), f.assignment.end());
  }
  for (size_t k = 0; k < factors.size(); ++k) {
    FamilyMorphism pr;
    for (int j = 0; j < factors[k].size(); ++j) {
      pr.reindex.push_back(out.offsets[k] + j);
      pr.components.push_back(out.product.ambient->identity[factors[k].assignment[j]]);
    }
    out.projections.push_back(std::move(pr));
  }
  return out;
}

namespace {

// probes: the empty product plus every list of nonempty families with
// non-decreasing assignment code and total size <= bound
void for_each_probe(const CatPtr& ambient, int bound,
                    const std::function<void(const std::vector<FinFamily>&)>& fn) {
  const int n = ambient->object_count();
  std::vector<FinFamily> all;
  for (int size = 1; size <= bound; ++size) {
    std::vector<int> a(size, 0);
    while (true) {
      all.push_back(FinFamily{ambient, a});
      int k = size - 1;
      while (k >= 0 && a[k] == n - 1) a[k--] = 0;
      if (k < 0) break;
      ++a[k];
    }
    if (n == 0) break;
  }
  std::vector<FinFamily> probe;
  fn(probe); // empty product
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    for (size_t i = from; i < all.size(); ++i) {
      if (all[i].size() > left) continue;
      probe.push_back(all[i]);
      fn(probe);
      rec(i, left - all[i].size());
      probe.pop_back();
    }
  };
  rec(0, bound);
}

} // namespace

bool is_coconnected(const FinFamily& f, int probe_bound) {
  bool ok = true;
  for_each_probe(f.ambient, probe_bound, [&](const std::vector<FinFamily>& probe) {
    if (!ok) return;
    std::vector<FamilyMorphism> into_f;
    std::vector<FamilyMorphism> via_proj; // arrows obtained as t . projection
    if (probe.empty()) {
      FinFamily empty{f.ambient, {}};
      into_f = family_hom(empty, f);
    } else {
      FamilyProduct prod = family_product(f.ambient, probe);
      into_f = family_hom(prod.product, f);
      for (size_t k = 0; k < probe.size(); ++k)
        for (const auto& t : family_hom(probe[k], f))
          via_proj.push_back(compose_family_morphisms(t, prod.projections[k], probe[k]));
    }
    // the coproduct of the factor hom-sets must biject onto hom(product, f)
    std::vector<int> hits(into_f.size(), 0);
    for (const auto& m : via_proj) {
      auto it = std::find(into_f.begin(), into_f.end(), m);
      if (it == into_f.end()) {
        ok = false;
        return;
      }
      ++hits[static_cast<size_t>(it - into_f.begin())];
    }
    for (int h : hits)
      if (h != 1) {
        ok = false;
        return;
      }
  });
  return ok;
}

FinFamily pi_on_family(const FinFunctor& u, const FinFamily& f) {
  if (f.ambient.get() != u.src.get()) throw Error(ErrKind::AmbientMismatch, "pi_on_family: wrong ambient");
  FinFamily g;
  g.ambient = u.dst;
  for (int a : f.assignment) g.assignment.push_back(u.obj_map[a]);
  return g;
}

FamilyMorphism pi_on_morphism(const FinFunctor& u, const FamilyMorphism& m) {
  FamilyMorphism out;
  out.reindex = m.reindex;
  for (int c : m.components) out.components.push_back(u.mor_map[c]);
  return out;
}

UnitFamily relative_left_adjoint_object(const FinFunctor& u, int base) {
  LocalUnitsResult lu = local_units(u, base);
  if (!lu.ok())
    throw Error(ErrKind::NotMultiAdjoint, "relative left adjoint needs local units under every object");
  UnitFamily out;
  out.family.ambient = u.src;
  for (const auto& e : lu.record->entries) {
    out.family.assignment.push_back(e.apex);
    out.unit_arrows.push_back(e.unit_arrow);
  }
  return out;
}

FamilyMorphism relative_left_adjoint_morphism(const FinFunctor& u, int f) {
  const FinCategory& a = u.source();
  const FinCategory& b = u.target();
  const int b1 = b.dom(f), b2 = b.cod(f);
  UnitFamily from = relative_left_adjoint_object(u, b1);
  UnitFamily to = relative_left_adjoint_object(u, b2);
  CommaSkeleton sk;
  sk.compute(u, b1);
  FamilyMorphism out;
  for (int x = 0; x < to.family.size(); ++x) {
    int composite = b.compose(to.unit_arrows[x], f); // n_x . f : B1 -> U(A_x)
    int po = sk.find_pair(to.family.assignment[x], composite);
    int uo = sk.unit_of_block[sk.block_of[po]];
    // locate the unit in the family of units under B1
    int y = -1;
    for (int i = 0; i < from.family.size(); ++i)
      if (from.unit_arrows[i] == sk.pairs[uo].second && from.family.assignment[i] == sk.pairs[uo].first) y = i;
    if (y < 0) throw Error(ErrKind::InternalInconsistency, "unit index lookup failed");
    int carrier = -1;
    for (int w = 0; w < a.morphism_count(); ++w) {
      if (a.dom(w) != from.family.assignment[y] || a.cod(w) != to.family.assignment[x]) continue;
      if (b.compose(u.mor_map[w], from.unit_arrows[y]) != composite) continue;
      if (carrier >= 0) throw Error(ErrKind::InternalInconsistency, "unit factorization is not unique");
      carrier = w;
    }
    if (carrier < 0) throw Error(ErrKind::InternalInconsistency, "unit factorization is missing");
    out.reindex.push_back(y);
    out.components.push_back(carrier);
  }
  return out;
}

namespace {

void for_each_family(const CatPtr& c, int bound, const std::function<void(const std::vector<int>&)>& fn) {
  const int n = c->object_count();
  std::vector<int> a;
  fn(a);
  if (n == 0) return;
  for (int size = 1; size <= bound; ++size) {
    a.assign(size, 0);
    while (true) {
      fn(a);
      int k = size - 1;
      while (k >= 0 && a[k] == n - 1) a[k--] = 0;
      if (k < 0) break;
      ++a[k];
    }
  }
}

} // namespace

PiAdjunctionReport verify_pi_adjunction(const FinFunctor& u, int family_bound) {
  const FinCategory& a = u.source();
  const FinCategory& b = u.target();
  if (!is_right_multi_adjoint(u).value)
    throw Error(ErrKind::NotMultiAdjoint, "verify_pi_adjunction: functor is not a right multi-adjoint");
  PiAdjunctionReport rep;

  std::vector<UnitFamily> units;
  std::vector<CommaSkeleton> skels(b.object_count());
  for (int base = 0; base < b.object_count(); ++base) {
    units.push_back(relative_left_adjoint_object(u, base));
    skels[base].compute(u, base);
  }
  // L on every morphism of the target, computed once
  std::vector<FamilyMorphism> lgs(b.morphism_count());
  for (int g = 0; g < b.morphism_count(); ++g) {
    const UnitFamily& from = units[b.dom(g)];
    const UnitFamily& to = units[b.cod(g)];
    const CommaSkeleton& sk = skels[b.dom(g)];
    FamilyMorphism lg;
    for (int x = 0; x < to.family.size(); ++x) {
      int composite = b.compose(to.unit_arrows[x], g);
      int po = sk.find_pair(to.family.assignment[x], composite);
      int uo = sk.unit_of_block[sk.block_of[po]];
      int y = -1;
      for (int i = 0; i < from.family.size(); ++i)
        if (from.unit_arrows[i] == sk.pairs[uo].second && from.family.assignment[i] == sk.pairs[uo].first) y = i;
      int carrier = -1;
      for (int w = 0; w < a.morphism_count(); ++w) {
        if (y < 0 || a.dom(w) != from.family.assignment[y] || a.cod(w) != to.family.assignment[x]) continue;
        if (b.compose(u.mor_map[w], from.unit_arrows[y]) != composite) continue;
        carrier = w;
        break;
      }
      lg.reindex.push_back(y);
      lg.components.push_back(carrier);
    }
    lgs[g] = std::move(lg);
  }

  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failure = std::move(msg);
  };

  // the transpose of h : base -> U(obj) along the units under base
  auto phi_at = [&](int base, int obj, int h) {
    const CommaSkeleton& sk = skels[base];
    const UnitFamily& lb = units[base];
    int po = sk.find_pair(obj, h);
    int uo = sk.unit_of_block[sk.block_of[po]];
    FamilyMorphism m;
    int x = -1;
    for (int i = 0; i < lb.family.size(); ++i)
      if (lb.unit_arrows[i] == sk.pairs[uo].second && lb.family.assignment[i] == sk.pairs[uo].first) x = i;
    int carrier = -1;
    for (int w = 0; w < a.morphism_count(); ++w) {
      if (x < 0 || a.dom(w) != lb.family.assignment[x] || a.cod(w) != obj) continue;
      if (b.compose(u.mor_map[w], lb.unit_arrows[x]) != h) continue;
      carrier = w;
      break;
    }
    m.reindex = {x};
    m.components = {carrier};
    return m;
  };

  // singleton level: explicit bijection plus naturality
  for (int base = 0; base < b.object_count() && rep.ok; ++base) {
    const UnitFamily& lb = units[base];
    for (int obj = 0; obj < a.object_count() && rep.ok; ++obj) {
      FinFamily ia = embed(u.src, obj);
      auto psi = [&](const FamilyMorphism& m) {
        return b.compose(u.mor_map[m.components[0]], lb.unit_arrows[m.reindex[0]]);
      };
      std::vector<FamilyMorphism> homs = family_hom(lb.family, ia);
      std::vector<int> bhoms = b.hom(base, u.obj_map[obj]);
      ++rep.pairs_checked;
      PiAdjunctionLine line;
      line.target_family = {base};
      line.source_family = {obj};
      line.lhs = static_cast<int>(homs.size());
      line.rhs = static_cast<int>(bhoms.size());
      rep.object_lines.push_back(line);
      if (homs.size() != bhoms.size()) {
        fail("hom cardinality mismatch at " + b.objects[base] + " vs " + a.objects[obj]);
        break;
      }
      for (int h : bhoms) {
        FamilyMorphism m = phi_at(base, obj, h);
        if (m.reindex[0] < 0 || m.components[0] < 0 || psi(m) != h) {
          fail("bijection is not mutually inverse at " + b.morphisms[h].name);
          break;
        }
      }
      for (const auto& m : homs) {
        FamilyMorphism again = phi_at(base, obj, psi(m));
        if (!(again == m)) {
          fail("bijection is not injective on family morphisms at " + b.objects[base]);
          break;
        }
      }
      if (!rep.ok) break;
      // naturality: phi(U(v) . h . g) == embed(v) . phi(h) . L(g)
      for (int g = 0; g < b.morphism_count() && rep.ok; ++g) {
        if (b.cod(g) != base) continue;
        const FamilyMorphism& lg = lgs[g];
        const UnitFamily& lb2 = units[b.dom(g)];
        for (int v = 0; v < a.morphism_count() && rep.ok; ++v) {
          if (a.dom(v) != obj) continue;
          FamilyMorphism iv{{0}, {v}};
          for (int h : bhoms) {
            int lhs_mor = b.compose(u.mor_map[v], b.compose(h, g));
            FamilyMorphism left = phi_at(b.dom(g), a.cod(v), lhs_mor);
            FamilyMorphism right =
                compose_family_morphisms(iv, compose_family_morphisms(phi_at(base, obj, h), lg, lb2.family),
                                         lb2.family);
            if (!(left == right)) {
              fail("naturality fails at " + b.morphisms[h].name);
              break;
            }
          }
        }
      }
    }
  }

  // family level: cardinality equality for all families up to the bound
  if (rep.ok) {
    std::vector<std::vector<int>> target_fams, source_fams;
    for_each_family(u.dst, family_bound, [&](const std::vector<int>& f) { target_fams.push_back(f); });
    for_each_family(u.src, family_bound, [&](const std::vector<int>& f) { source_fams.push_back(f); });
    for (const auto& tf : target_fams) {
      FinFamily lb{u.src, {}};
      for (int base : tf)
        for (int apex : units[base].family.assignment) lb.assignment.push_back(apex);
      for (const auto& sf : source_fams) {
        FinFamily sa{u.src, sf};
        FinFamily usa{u.dst, {}};
        for (int o : sf) usa.assignment.push_back(u.obj_map[o]);
        FinFamily tb{u.dst, tf};
        int lhs = family_hom_count(lb, sa);
        int rhs = family_hom_count(tb, usa);
        ++rep.pairs_checked;
        if (lhs != rhs) {
          fail("family-level hom cardinality mismatch (" + std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
          return rep;
        }
      }
    }
  }
  return rep;
}

} // namespace mcat
