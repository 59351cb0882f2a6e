#include "multicat/multilimits.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "multicat/multiadjoint.hpp"

namespace mcat {

namespace {

void legs_dfs(const FinCategory& c, const Diagram& d, int apex, bool cocone,
              const std::function<void(const std::vector<int>&)>& fn) {
  const FinCategory& sh = d.shape();
  const int k = sh.object_count();
  std::vector<std::vector<int>> cand(k);
  for (int i = 0; i < k; ++i)
    cand[i] = cocone ? c.hom(d.functor.obj_map[i], apex) : c.hom(apex, d.functor.obj_map[i]);
  std::vector<int> cur(k);
  std::vector<size_t> pos(k, 0);
  int depth = 0;
  auto compatible = [&](int filled) {
    for (int s = 0; s < sh.morphism_count(); ++s) {
      int i = sh.dom(s), j = sh.cod(s);
      if (i >= filled || j >= filled) continue;
      int ds = d.functor.mor_map[s];
      if (cocone) {
        if (c.compose(cur[j], ds) != cur[i]) return false;
      } else {
        if (c.compose(ds, cur[i]) != cur[j]) return false;
      }
    }
    return true;
  };
  if (k == 0) {
    fn(cur);
    return;
  }
  while (depth >= 0) {
    if (depth == k) {
      fn(cur);
      --depth;
      continue;
    }
    if (pos[depth] >= cand[depth].size()) {
      pos[depth] = 0;
      --depth;
      continue;
    }
    cur[depth] = cand[depth][pos[depth]++];
    if (compatible(depth + 1)) ++depth;
  }
}

// number of mediating arrows h between two (co)cones; fills *first
int mediators_between(const FinCategory& c, const ConeRecord& c1, const ConeRecord& c2, bool cocone, int* first,
                      int limit = 2) {
  int n = 0;
  for (int h = 0; h < c.morphism_count() && n < limit; ++h) {
    if (c.dom(h) != c1.apex || c.cod(h) != c2.apex) continue;
    bool ok = true;
    for (size_t i = 0; i < c1.legs.size() && ok; ++i) {
      if (cocone)
        ok = c.compose(h, c1.legs[i]) == c2.legs[i];
      else
        ok = c.compose(c2.legs[i], h) == c1.legs[i];
    }
    if (ok) {
      if (n == 0 && first) *first = h;
      ++n;
    }
  }
  return n;
}

ConeCatResult build_cone_like(const Diagram& d, bool cocone, int cap) {
  const FinCategory& c = d.ambient();
  ConeCatResult out;
  for (int apex = 0; apex < c.object_count(); ++apex) {
    legs_dfs(c, d, apex, cocone, [&](const std::vector<int>& legs) {
      out.cones.push_back({apex, legs});
      if (static_cast<int>(out.cones.size()) > cap)
        throw Error(ErrKind::SizeCap, "size cap exceeded while enumerating cones");
    });
  }
  const int n = static_cast<int>(out.cones.size());
  FinCategory s;
  s.name = cocone ? "cocones" : "cones";
  for (int i = 0; i < n; ++i) s.objects.push_back((cocone ? "cocone" : "cone") + std::to_string(i));
  s.identity.resize(n);
  struct M {
    int h, o1, o2;
  };
  std::vector<M> ms;
  std::unordered_map<long long, int> ix;
  auto key = [&](int h, int o1, int o2) { return (static_cast<long long>(h) * n + o1) * n + o2; };
  auto add = [&](int h, int o1, int o2) {
    ix[key(h, o1, o2)] = static_cast<int>(ms.size());
    ms.push_back({h, o1, o2});
    s.morphisms.push_back({"w" + std::to_string(ms.size()), o1, o2});
  };
  auto connects = [&](int h, int o1, int o2) {
    const auto& c1 = out.cones[o1];
    const auto& c2 = out.cones[o2];
    if (c.dom(h) != c1.apex || c.cod(h) != c2.apex) return false;
    for (size_t i = 0; i < c1.legs.size(); ++i) {
      if (cocone) {
        if (c.compose(h, c1.legs[i]) != c2.legs[i]) return false;
      } else {
        if (c.compose(c2.legs[i], h) != c1.legs[i]) return false;
      }
    }
    return true;
  };
  for (int o = 0; o < n; ++o) {
    s.identity[o] = o;
    add(c.identity[out.cones[o].apex], o, o);
    s.morphisms.back().name = "id_" + s.objects[o];
  }
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int h = 0; h < c.morphism_count(); ++h) {
        if (o1 == o2 && c.is_identity(h)) continue;
        if (!connects(h, o1, o2)) continue;
        add(h, o1, o2);
        if (static_cast<int>(s.morphisms.size()) > cap)
          throw Error(ErrKind::SizeCap, "size cap exceeded while building the cone category");
      }
  s.alloc_table();
  for (size_t g = 0; g < ms.size(); ++g)
    for (size_t f = 0; f < ms.size(); ++f) {
      if (ms[f].o2 != ms[g].o1) continue;
      auto it = ix.find(key(c.compose(ms[g].h, ms[f].h), ms[f].o1, ms[g].o2));
      s.set_composite(static_cast<int>(g), static_cast<int>(f), it == ix.end() ? -1 : it->second);
    }
  for (const auto& m : ms) out.mediators.push_back(m.h);
  out.cat = std::make_shared<FinCategory>(std::move(s));
  return out;
}

} // namespace

ConeCatResult cone_category(const Diagram& d, int cap) { return build_cone_like(d, false, cap); }
ConeCatResult cocone_category(const Diagram& d, int cap) { return build_cone_like(d, true, cap); }

void for_each_cone(const Diagram& d, int apex, const std::function<void(const std::vector<int>&)>& fn) {
  legs_dfs(d.ambient(), d, apex, false, fn);
}
void for_each_cocone(const Diagram& d, int apex, const std::function<void(const std::vector<int>&)>& fn) {
  legs_dfs(d.ambient(), d, apex, true, fn);
}
int count_cocones(const Diagram& d, int apex) {
  int n = 0;
  for_each_cocone(d, apex, [&](const std::vector<int>&) { ++n; });
  return n;
}
int count_cones(const Diagram& d, int apex) {
  int n = 0;
  for_each_cone(d, apex, [&](const std::vector<int>&) { ++n; });
  return n;
}

int MultiversalFamily::find_cone(const ConeRecord& c) const {
  for (size_t i = 0; i < cones.size(); ++i)
    if (cones[i] == c) return static_cast<int>(i);
  return -1;
}

namespace {

MultiversalFamily multiversal(const Diagram& d, bool colimit, int cap) {
  const FinCategory& c = d.ambient();
  MultiversalFamily out;
  out.colimit = colimit;
  for (int apex = 0; apex < c.object_count(); ++apex) {
    legs_dfs(c, d, apex, colimit, [&](const std::vector<int>& legs) {
      out.cones.push_back({apex, legs});
      if (static_cast<int>(out.cones.size()) > cap)
        throw Error(ErrKind::SizeCap, "size cap exceeded while enumerating cones");
    });
  }
  const int n = static_cast<int>(out.cones.size());
  // components via mediating arrows (either direction)
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (find(i) == find(j)) continue;
      if (mediators_between(c, out.cones[i], out.cones[j], colimit, nullptr, 1) > 0) {
        int a = find(i), b = find(j);
        uf[std::max(a, b)] = std::min(a, b);
      }
    }
  out.block_of.assign(n, -1);
  std::vector<int> root_block(n, -1);
  int blocks = 0;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (root_block[r] < 0) root_block[r] = blocks++;
    out.block_of[i] = root_block[r];
  }
  // per block: the canonical member (initial cocones for colimits, terminal
  // cones for limits: "every cone maps uniquely to the member")
  std::vector<int> member_of_block(blocks, -1);
  for (int b = 0; b < blocks; ++b) {
    for (int x = 0; x < n && member_of_block[b] < 0; ++x) {
      if (out.block_of[x] != b) continue;
      bool ok = true;
      for (int y = 0; y < n && ok; ++y) {
        if (out.block_of[y] != b) continue;
        int cnt = colimit ? mediators_between(c, out.cones[x], out.cones[y], true, nullptr)
                          : mediators_between(c, out.cones[y], out.cones[x], false, nullptr);
        ok = cnt == 1;
      }
      if (ok) member_of_block[b] = x;
    }
    if (member_of_block[b] < 0) {
      AbsentComponent a;
      a.block = b;
      for (int x = 0; x < n; ++x)
        if (out.block_of[x] == b) a.block_objects.push_back(x);
      out.absent = std::move(a);
      return out;
    }
  }
  out.witness.assign(n, {-1, -1});
  for (int b = 0; b < blocks; ++b) {
    int pos = static_cast<int>(out.members.size());
    out.members.push_back(member_of_block[b]);
    for (int y = 0; y < n; ++y) {
      if (out.block_of[y] != b) continue;
      int h = -1;
      if (colimit)
        mediators_between(c, out.cones[member_of_block[b]], out.cones[y], true, &h);
      else
        mediators_between(c, out.cones[y], out.cones[member_of_block[b]], false, &h);
      out.witness[y] = {pos, h};
    }
  }
  return out;
}

} // namespace

MultiversalFamily multilimit(const Diagram& d, int cap) { return multiversal(d, false, cap); }
MultiversalFamily multicolimit(const Diagram& d, int cap) { return multiversal(d, true, cap); }

PreservationReport preserves_multilimits(const FinFunctor& u, const Diagram& d, int cap) {
  if (d.functor.dst.get() != u.src.get())
    throw Error(ErrKind::AmbientMismatch, "preserves_multilimits: diagram does not land in the functor source");
  PreservationReport rep;
  MultiversalFamily src_fam = multilimit(d, cap);
  if (!src_fam.ok()) {
    rep.source_absent = true;
    rep.detail = "source multilimit absent";
    return rep;
  }
  Diagram image{compose_functors(u, d.functor)};
  MultiversalFamily tgt_fam = multilimit(image, cap);
  if (!tgt_fam.ok()) {
    rep.target_absent = true;
    rep.detail = "target multilimit absent";
    return rep;
  }
  rep.vacuous = src_fam.members.empty();
  const FinCategory& b = u.target();
  std::vector<std::vector<int>> groups(tgt_fam.members.size());
  for (size_t j = 0; j < src_fam.members.size(); ++j) {
    const ConeRecord& cone = src_fam.member_cone(static_cast<int>(j));
    ConeRecord img;
    img.apex = u.obj_map[cone.apex];
    for (int leg : cone.legs) img.legs.push_back(u.mor_map[leg]);
    int found = tgt_fam.find_cone(img);
    if (found < 0) {
      rep.partition.push_back(-1);
      rep.detail = "image of a source member is not a cone over the image diagram";
      return rep;
    }
    int k = tgt_fam.witness[found].first;
    rep.partition.push_back(k);
    groups[k].push_back(static_cast<int>(j));
  }
  // hom-cardinality bookkeeping: each target member apex counts as the
  // coproduct of the image apexes of its group
  for (size_t k = 0; k < tgt_fam.members.size(); ++k) {
    int mk = tgt_fam.member_cone(static_cast<int>(k)).apex;
    for (int x = 0; x < b.object_count(); ++x) {
      long long prod = 1;
      for (int j : groups[k]) prod *= b.hom_count(u.obj_map[src_fam.member_cone(j).apex], x);
      if (b.hom_count(mk, x) != prod) {
        rep.detail =
            "coproduct bookkeeping fails at target member " + std::to_string(k) + " and object " + b.objects[x];
        return rep;
      }
    }
  }
  rep.preserved = true;
  return rep;
}

MreflectResult multireflective_multicolimit(const FinFunctor& u, const Diagram& d, int cap) {
  if (d.functor.dst.get() != u.src.get())
    throw Error(ErrKind::AmbientMismatch, "multireflective_multicolimit: diagram does not land in the functor source");
  if (!u.is_full() || !u.is_faithful())
    throw Error(ErrKind::NotFull, "multireflective_multicolimit: the inclusion must be full and faithful");
  if (!is_right_multi_adjoint(u).value)
    throw Error(ErrKind::NotMultiAdjoint, "multireflective_multicolimit: functor is not a right multi-adjoint");
  Diagram image{compose_functors(u, d.functor)};
  MultiversalFamily target = multicolimit(image, cap);
  // the target colimit exists when the family is one cocone receiving all
  if (!target.ok() || target.members.size() != 1)
    throw Error(ErrKind::NoTargetColimit, "the target colimit does not exist");
  return multireflective_core(u, d, target, cap);
}

MreflectResult multireflective_core(const FinFunctor& u, const Diagram& d, const MultiversalFamily& target,
                                    int cap) {
  const FinCategory& a = u.source();
  const FinCategory& b = u.target();
  const ConeRecord& colim = target.member_cone(0);

  LocalUnitsResult units = local_units(u, colim.apex);
  if (!units.ok()) throw Error(ErrKind::InternalInconsistency, "right multi-adjoint lost its local units");

  MreflectResult out;
  for (const auto& e : units.record->entries) {
    ConeRecord member;
    member.apex = e.apex;
    for (size_t i = 0; i < colim.legs.size(); ++i) {
      int want = b.compose(e.unit_arrow, colim.legs[i]);
      int pre = -1;
      for (int w = 0; w < a.morphism_count(); ++w) {
        if (a.dom(w) != d.functor.obj_map[i] || a.cod(w) != e.apex) continue;
        if (u.mor_map[w] != want) continue;
        if (pre >= 0) throw Error(ErrKind::NotFull, "composite with a unit has several preimages");
        pre = w;
      }
      if (pre < 0) throw Error(ErrKind::NotFull, "composite with a unit has no preimage");
      member.legs.push_back(pre);
    }
    out.family.push_back(member);
  }

  out.direct = multicolimit(d, cap);
  out.matches = false;
  if (out.direct.ok() && out.direct.members.size() == out.family.size()) {
    std::vector<bool> used(out.direct.members.size(), false);
    bool all = true;
    for (const auto& member : out.family) {
      int obj = out.direct.find_cone(member);
      if (obj < 0) {
        all = false;
        break;
      }
      int pos = out.direct.witness[obj].first;
      if (used[pos]) {
        all = false;
        break;
      }
      used[pos] = true;
      int direct_obj = out.direct.members[pos];
      // isomorphic in the cocone category: mediators both ways composing to
      // identities
      bool iso = false;
      if (obj == direct_obj) {
        iso = true;
      } else {
        int h1 = -1, h2 = -1;
        if (mediators_between(a, out.direct.cones[direct_obj], out.direct.cones[obj], true, &h1) >= 1 &&
            mediators_between(a, out.direct.cones[obj], out.direct.cones[direct_obj], true, &h2) >= 1)
          iso = a.compose(h2, h1) == a.identity[out.direct.cones[direct_obj].apex] &&
                a.compose(h1, h2) == a.identity[out.direct.cones[obj].apex];
      }
      if (!iso) {
        all = false;
        break;
      }
    }
    out.matches = all && std::all_of(used.begin(), used.end(), [](bool x) { return x; });
  }
  return out;
}

ConnectedLimitResult connected_limit_via_units(const FinFunctor& u, const Diagram& d, int cap) {
  if (d.functor.dst.get() != u.src.get())
    throw Error(ErrKind::AmbientMismatch, "connected_limit_via_units: diagram does not land in the functor source");
  if (connected_components(d.shape()).count() != 1)
    throw Error(ErrKind::LawViolation, "connected_limit_via_units: the shape is not connected");
  if (!u.is_full() || !u.is_faithful())
    throw Error(ErrKind::NotFull, "connected_limit_via_units: the inclusion must be full and faithful");
  if (!is_right_multi_adjoint(u).value)
    throw Error(ErrKind::NotMultiAdjoint, "connected_limit_via_units: functor is not a right multi-adjoint");
  Diagram image{compose_functors(u, d.functor)};
  MultiversalFamily target = multilimit(image, cap);
  if (!target.ok() || target.members.size() != 1)
    throw Error(ErrKind::NoTargetLimit, "the target limit does not exist");
  return connected_limit_core(u, d, target);
}

ConnectedLimitResult connected_limit_core(const FinFunctor& u, const Diagram& d, const MultiversalFamily& target) {
  const FinCategory& sh = d.shape();
  const FinCategory& a = u.source();
  const FinCategory& b = u.target();
  const ConeRecord& lim = target.member_cone(0);

  CommaSkeleton sk;
  sk.compute(u, lim.apex);
  int first = sk.find_pair(d.functor.obj_map[0], lim.legs[0]);
  if (first < 0) throw Error(ErrKind::InternalInconsistency, "limit projection is not a comma object");
  int block = sk.block_of[first];
  for (size_t i = 1; i < lim.legs.size(); ++i) {
    int o = sk.find_pair(d.functor.obj_map[i], lim.legs[i]);
    if (o < 0 || sk.block_of[o] != block)
      throw Error(ErrKind::InternalInconsistency, "limit projections do not share a connected component");
  }
  int uo = sk.unit_of_block[block];
  if (uo < 0) throw Error(ErrKind::InternalInconsistency, "right multi-adjoint lost its local units");
  auto [apex, eta] = sk.pairs[uo];

  ConnectedLimitResult out;
  out.cone.apex = apex;
  out.unit_arrow = eta;
  for (size_t i = 0; i < lim.legs.size(); ++i) {
    int leg = -1;
    for (int w = 0; w < a.morphism_count(); ++w) {
      if (a.dom(w) != apex || a.cod(w) != d.functor.obj_map[i]) continue;
      if (b.compose(u.mor_map[w], eta) != lim.legs[i]) continue;
      if (leg >= 0) throw Error(ErrKind::InternalInconsistency, "unit factorization of a projection is not unique");
      leg = w;
    }
    if (leg < 0) throw Error(ErrKind::InternalInconsistency, "a projection does not factor through the unit");
    out.cone.legs.push_back(leg);
  }
  for (int s = 0; s < sh.morphism_count(); ++s)
    if (a.compose(d.functor.mor_map[s], out.cone.legs[sh.dom(s)]) != out.cone.legs[sh.cod(s)])
      throw Error(ErrKind::InternalInconsistency, "unit cone does not commute");
  bool limiting = true;
  for (int x = 0; x < a.object_count() && limiting; ++x) {
    for_each_cone(d, x, [&](const std::vector<int>& legs) {
      int n = 0;
      for (int h = 0; h < a.morphism_count() && n < 2; ++h) {
        if (a.dom(h) != x || a.cod(h) != apex) continue;
        bool ok = true;
        for (size_t i = 0; i < legs.size() && ok; ++i) ok = a.compose(out.cone.legs[i], h) == legs[i];
        if (ok) ++n;
      }
      if (n != 1) limiting = false;
    });
  }
  if (!limiting) throw Error(ErrKind::InternalInconsistency, "unit cone is not limiting in the source");
  int inv = -1;
  if (!b.is_iso(eta, &inv))
    throw Error(ErrKind::InternalInconsistency, "the unit of a created connected limit must be an isomorphism");
  out.unit_inverse = inv;
  return out;
}

HomFormulaReport verify_multicolimit_hom_formula(const Diagram& d, const MultiversalFamily& family) {
  HomFormulaReport rep;
  const FinCategory& c = d.ambient();
  for (int x = 0; x < c.object_count(); ++x) {
    HomFormulaLine line;
    line.obj = x;
    line.cocone_count = count_cocones(d, x);
    line.member_hom_sum = 0;
    for (size_t j = 0; j < family.members.size(); ++j)
      line.member_hom_sum += c.hom_count(family.member_cone(static_cast<int>(j)).apex, x);
    if (line.cocone_count != line.member_hom_sum) rep.ok = false;
    rep.lines.push_back(line);
  }
  return rep;
}

namespace {

std::optional<SpanCorner> span_corner(const FinCategory& c, int f, int g, bool colimit) {
  struct Cand {
    int apex, p, q;
  };
  std::vector<Cand> cands;
  for (int w = 0; w < c.object_count(); ++w)
    for (int p = 0; p < c.morphism_count(); ++p) {
      if (colimit ? (c.dom(p) != c.cod(f) || c.cod(p) != w) : (c.dom(p) != w || c.cod(p) != c.dom(f))) continue;
      for (int q = 0; q < c.morphism_count(); ++q) {
        if (colimit ? (c.dom(q) != c.cod(g) || c.cod(q) != w) : (c.dom(q) != w || c.cod(q) != c.dom(g))) continue;
        if (colimit ? (c.compose(p, f) != c.compose(q, g)) : (c.compose(f, p) != c.compose(g, q))) continue;
        cands.push_back({w, p, q});
      }
    }
  for (const auto& cand : cands) {
    bool universal = true;
    for (const auto& other : cands) {
      int n = 0;
      for (int h = 0; h < c.morphism_count() && n < 2; ++h) {
        if (colimit) {
          if (c.dom(h) != cand.apex || c.cod(h) != other.apex) continue;
          if (c.compose(h, cand.p) == other.p && c.compose(h, cand.q) == other.q) ++n;
        } else {
          if (c.dom(h) != other.apex || c.cod(h) != cand.apex) continue;
          if (c.compose(cand.p, h) == other.p && c.compose(cand.q, h) == other.q) ++n;
        }
      }
      if (n != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return SpanCorner{cand.apex, cand.p, cand.q};
  }
  return std::nullopt;
}

} // namespace

std::optional<SpanCorner> pullback(const FinCategory& c, int f, int g) {
  if (c.cod(f) != c.cod(g)) throw Error(ErrKind::NotASquare, "pullback requires a cospan");
  return span_corner(c, f, g, false);
}

std::optional<SpanCorner> pushout(const FinCategory& c, int f, int g) {
  if (c.dom(f) != c.dom(g)) throw Error(ErrKind::NotASquare, "pushout requires a span");
  return span_corner(c, f, g, true);
}

std::optional<std::pair<int, int>> equalizer(const FinCategory& c, int a, int b) {
  if (c.dom(a) != c.dom(b) || c.cod(a) != c.cod(b))
    throw Error(ErrKind::NotASquare, "equalizer requires a parallel pair");
  struct Cand {
    int obj, e;
  };
  std::vector<Cand> cands;
  for (int e = 0; e < c.morphism_count(); ++e)
    if (c.cod(e) == c.dom(a) && c.compose(a, e) == c.compose(b, e)) cands.push_back({c.dom(e), e});
  for (const auto& cand : cands) {
    bool universal = true;
    for (const auto& other : cands) {
      int n = 0;
      for (int h = 0; h < c.morphism_count() && n < 2; ++h)
        if (c.dom(h) == other.obj && c.cod(h) == cand.obj && c.compose(cand.e, h) == other.e) ++n;
      if (n != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return std::make_pair(cand.obj, cand.e);
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> coequalizer(const FinCategory& c, int a, int b) {
  if (c.dom(a) != c.dom(b) || c.cod(a) != c.cod(b))
    throw Error(ErrKind::NotASquare, "coequalizer requires a parallel pair");
  struct Cand {
    int obj, q;
  };
  std::vector<Cand> cands;
  for (int q = 0; q < c.morphism_count(); ++q)
    if (c.dom(q) == c.cod(a) && c.compose(q, a) == c.compose(q, b)) cands.push_back({c.cod(q), q});
  for (const auto& cand : cands) {
    bool universal = true;
    for (const auto& other : cands) {
      int n = 0;
      for (int h = 0; h < c.morphism_count() && n < 2; ++h)
        if (c.dom(h) == cand.obj && c.cod(h) == other.obj && c.compose(h, cand.q) == other.q) ++n;
      if (n != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return std::make_pair(cand.obj, cand.q);
  }
  return std::nullopt;
}

} // namespace mcat
