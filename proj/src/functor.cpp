#include "multicat/functor.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace mcat {

void FinFunctor::validate() const {
  const FinCategory& a = *src;
  const FinCategory& b = *dst;
  if (static_cast<int>(obj_map.size()) != a.object_count() || static_cast<int>(mor_map.size()) != a.morphism_count())
    throw Error(ErrKind::NotFunctorial, "functor " + name + " does not cover all objects/morphisms of its source");
  for (int x : obj_map)
    if (x < 0 || x >= b.object_count()) throw Error(ErrKind::DanglingRef, "functor " + name + ": object image out of range");
  for (int f : mor_map)
    if (f < 0 || f >= b.morphism_count()) throw Error(ErrKind::DanglingRef, "functor " + name + ": morphism image out of range");
  for (int f = 0; f < a.morphism_count(); ++f) {
    if (b.dom(mor_map[f]) != obj_map[a.dom(f)] || b.cod(mor_map[f]) != obj_map[a.cod(f)])
      throw Error(ErrKind::NotFunctorial, "functor " + name + " breaks dom/cod at " + a.morphisms[f].name);
  }
  for (int x = 0; x < a.object_count(); ++x)
    if (mor_map[a.identity[x]] != b.identity[obj_map[x]])
      throw Error(ErrKind::NotFunctorial, "functor " + name + " does not preserve the identity of " + a.objects[x]);
  for (int g = 0; g < a.morphism_count(); ++g)
    for (int f = 0; f < a.morphism_count(); ++f) {
      if (!a.composable(g, f)) continue;
      if (mor_map[a.compose(g, f)] != b.compose(mor_map[g], mor_map[f]))
        throw Error(ErrKind::NotFunctorial, "functor " + name + " breaks composition at pair (" + a.morphisms[g].name +
                                                ", " + a.morphisms[f].name + ")");
    }
}

bool FinFunctor::is_full() const {
  const FinCategory& a = *src;
  const FinCategory& b = *dst;
  for (int x = 0; x < a.object_count(); ++x)
    for (int y = 0; y < a.object_count(); ++y) {
      for (int g = 0; g < b.morphism_count(); ++g) {
        if (b.dom(g) != obj_map[x] || b.cod(g) != obj_map[y]) continue;
        bool hit = false;
        for (int f = 0; f < a.morphism_count() && !hit; ++f)
          hit = a.dom(f) == x && a.cod(f) == y && mor_map[f] == g;
        if (!hit) return false;
      }
    }
  return true;
}

bool FinFunctor::is_faithful() const {
  const FinCategory& a = *src;
  for (int f = 0; f < a.morphism_count(); ++f)
    for (int g = f + 1; g < a.morphism_count(); ++g)
      if (a.dom(f) == a.dom(g) && a.cod(f) == a.cod(g) && mor_map[f] == mor_map[g]) return false;
  return true;
}

bool FinFunctor::is_injective_on_objects() const {
  for (size_t i = 0; i < obj_map.size(); ++i)
    for (size_t j = i + 1; j < obj_map.size(); ++j)
      if (obj_map[i] == obj_map[j]) return false;
  return true;
}

FinFunctor identity_functor(CatPtr c) {
  FinFunctor f;
  f.name = "id";
  f.src = c;
  f.dst = c;
  f.obj_map.resize(c->object_count());
  f.mor_map.resize(c->morphism_count());
  for (int i = 0; i < c->object_count(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c->morphism_count(); ++i) f.mor_map[i] = i;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.dst.get() != g.src.get())
    throw Error(ErrKind::AmbientMismatch, "functor composition endpoint mismatch");
  FinFunctor h;
  h.name = g.name + "." + f.name;
  h.src = f.src;
  h.dst = g.dst;
  h.obj_map.resize(f.obj_map.size());
  h.mor_map.resize(f.mor_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) h.obj_map[i] = g.obj_map[f.obj_map[i]];
  for (size_t i = 0; i < f.mor_map.size(); ++i) h.mor_map[i] = g.mor_map[f.mor_map[i]];
  return h;
}

FinFunctor opposite_functor(const FinFunctor& f) {
  FinFunctor g;
  g.name = f.name.empty() ? std::string("op") : "op_" + f.name;
  g.src = std::make_shared<FinCategory>(opposite(*f.src));
  g.dst = std::make_shared<FinCategory>(opposite(*f.dst));
  g.obj_map = f.obj_map;
  g.mor_map = f.mor_map;
  return g;
}

FinFunctor subcategory_inclusion(CatPtr cp, const std::vector<int>& objects, const std::vector<int>& morphisms) {
  const FinCategory& c = *cp;
  FinCategory s;
  s.name = c.name + "_sub";
  std::vector<int> obj_of = objects;
  std::vector<int> mor_of;
  auto sub_obj = [&](int o) {
    for (int i = 0; i < static_cast<int>(obj_of.size()); ++i)
      if (obj_of[i] == o) return i;
    return -1;
  };
  for (int o : obj_of) s.objects.push_back(c.objects[o]);
  s.identity.resize(obj_of.size());
  for (size_t i = 0; i < obj_of.size(); ++i) {
    s.identity[i] = static_cast<int>(i);
    mor_of.push_back(c.identity[obj_of[i]]);
    s.morphisms.push_back({c.morphisms[c.identity[obj_of[i]]].name, static_cast<int>(i), static_cast<int>(i)});
  }
  for (int m : morphisms) {
    if (c.is_identity(m)) continue;
    int o1 = sub_obj(c.dom(m)), o2 = sub_obj(c.cod(m));
    if (o1 < 0 || o2 < 0)
      throw Error(ErrKind::UnknownObject, "subcategory morphism endpoint outside the chosen objects");
    mor_of.push_back(m);
    s.morphisms.push_back({c.morphisms[m].name, o1, o2});
  }
  s.alloc_table();
  auto sub_mor = [&](int m) {
    for (int i = 0; i < static_cast<int>(mor_of.size()); ++i)
      if (mor_of[i] == m) return i;
    return -1;
  };
  for (size_t g = 0; g < mor_of.size(); ++g)
    for (size_t f = 0; f < mor_of.size(); ++f) {
      if (s.cod(static_cast<int>(f)) != s.dom(static_cast<int>(g))) continue;
      int h = sub_mor(c.compose(mor_of[g], mor_of[f]));
      if (h < 0)
        throw Error(ErrKind::InternalInconsistency, "subcategory morphisms are not closed under composition");
      s.set_composite(static_cast<int>(g), static_cast<int>(f), h);
    }
  FinFunctor incl;
  incl.name = "incl";
  incl.src = std::make_shared<FinCategory>(std::move(s));
  incl.dst = std::move(cp);
  incl.obj_map = std::move(obj_of);
  incl.mor_map = std::move(mor_of);
  return incl;
}

FinFunctor validate_functor(const RawFunctor& raw, CatPtr src, CatPtr dst) {
  FinFunctor f;
  f.name = raw.name;
  f.src = std::move(src);
  f.dst = std::move(dst);
  const FinCategory& a = *f.src;
  const FinCategory& b = *f.dst;
  f.obj_map.assign(a.object_count(), -1);
  f.mor_map.assign(a.morphism_count(), -1);
  for (const auto& [from, to] : raw.obj_entries) {
    int x = a.find_object(from);
    if (x < 0) throw Error(ErrKind::DanglingRef, "functor " + raw.name + ": unknown source object '" + from + "'");
    int y = b.find_object(to);
    if (y < 0) throw Error(ErrKind::DanglingRef, "functor " + raw.name + ": unknown target object '" + to + "'");
    if (f.obj_map[x] != -1 && f.obj_map[x] != y)
      throw Error(ErrKind::DuplicateName, "functor " + raw.name + ": conflicting images for object '" + from + "'");
    f.obj_map[x] = y;
  }
  for (int x = 0; x < a.object_count(); ++x)
    if (f.obj_map[x] < 0)
      throw Error(ErrKind::NotFunctorial, "functor " + raw.name + ": no image for object '" + a.objects[x] + "'");
  for (int x = 0; x < a.object_count(); ++x) f.mor_map[a.identity[x]] = b.identity[f.obj_map[x]];
  for (const auto& [from, to] : raw.mor_entries) {
    int m = a.find_morphism(from);
    if (m < 0) throw Error(ErrKind::DanglingRef, "functor " + raw.name + ": unknown source morphism '" + from + "'");
    int w = b.find_morphism(to);
    if (w < 0) throw Error(ErrKind::DanglingRef, "functor " + raw.name + ": unknown target morphism '" + to + "'");
    if (f.mor_map[m] != -1 && f.mor_map[m] != w)
      throw Error(ErrKind::DuplicateName, "functor " + raw.name + ": conflicting images for morphism '" + from + "'");
    f.mor_map[m] = w;
  }
  for (int m = 0; m < a.morphism_count(); ++m)
    if (f.mor_map[m] < 0)
      throw Error(ErrKind::NotFunctorial, "functor " + raw.name + ": no image for morphism '" + a.morphisms[m].name + "'");
  f.validate();
  return f;
}

void NatTrans::validate() const {
  if (!source || !target) throw Error(ErrKind::DanglingRef, "natural transformation without endpoints");
  if (source->src.get() != target->src.get() || source->dst.get() != target->dst.get())
    throw Error(ErrKind::AmbientMismatch, "natural transformation endpoints are not parallel functors");
  const FinCategory& a = source->source();
  const FinCategory& b = source->target();
  if (static_cast<int>(components.size()) != a.object_count())
    throw Error(ErrKind::DanglingRef, "natural transformation has wrong component count");
  for (int x = 0; x < a.object_count(); ++x) {
    int c = components[x];
    if (b.dom(c) != source->obj_map[x] || b.cod(c) != target->obj_map[x])
      throw Error(ErrKind::LawViolation, "natural transformation component at " + a.objects[x] + " has wrong endpoints");
  }
  for (int f = 0; f < a.morphism_count(); ++f) {
    int x = a.dom(f), y = a.cod(f);
    if (b.compose(components[y], source->mor_map[f]) != b.compose(target->mor_map[f], components[x]))
      throw Error(ErrKind::LawViolation, "naturality square fails at " + a.morphisms[f].name);
  }
}

namespace {

void cap_check(size_t n, int cap, const char* what) {
  if (static_cast<long long>(n) > cap)
    throw Error(ErrKind::SizeCap, std::string("size cap exceeded while building ") + what);
}

class NamePool {
public:
  std::string fresh(std::string base) {
    if (base.empty()) base = "m";
    if (used_.insert(base).second) return base;
    int k = 1;
    std::string cand;
    do {
      cand = base + "_" + std::to_string(++k);
    } while (!used_.insert(cand).second);
    return cand;
  }

private:
  std::unordered_set<std::string> used_;
};

// shared assembly for the "structured morphism between indexed objects"
// categories (slice, coslice, arrow, comma): a morphism is a carrier arrow h
// of the ambient plus endpoint object indices, composed by the ambient table.
struct CellIndex {
  std::unordered_map<long long, int> map;
  long long key(int h, int o1, int o2, int n) const {
    return (static_cast<long long>(h) * n + o1) * n + o2;
  }
  void put(int h, int o1, int o2, int n, int ix) { map[key(h, o1, o2, n)] = ix; }
  int get(int h, int o1, int o2, int n) const {
    auto it = map.find(key(h, o1, o2, n));
    return it == map.end() ? -1 : it->second;
  }
};

} // namespace

SliceResult slice(CatPtr cp, int base, int cap) {
  const FinCategory& c = *cp;
  if (base < 0 || base >= c.object_count()) throw Error(ErrKind::UnknownObject, "slice base out of range");
  FinCategory s;
  s.name = c.name + "/" + c.objects[base];
  std::vector<int> obj_mors;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (c.cod(f) == base) {
      obj_mors.push_back(f);
      s.objects.push_back(c.morphisms[f].name);
    }
  const int n = static_cast<int>(obj_mors.size());
  NamePool names;
  s.identity.resize(n);
  struct Tri {
    int h, o1, o2;
  };
  std::vector<Tri> tris;
  CellIndex ix;
  auto add = [&](int h, int o1, int o2, const std::string& base_name) {
    ix.put(h, o1, o2, n, static_cast<int>(tris.size()));
    tris.push_back({h, o1, o2});
    s.morphisms.push_back({names.fresh(base_name), o1, o2});
  };
  for (int o = 0; o < n; ++o) {
    s.identity[o] = o;
    add(c.identity[c.dom(obj_mors[o])], o, o, "id_" + s.objects[o]);
  }
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int h = 0; h < c.morphism_count(); ++h) {
        if (c.is_identity(h)) continue;
        if (c.dom(h) != c.dom(obj_mors[o1]) || c.cod(h) != c.dom(obj_mors[o2])) continue;
        if (c.compose(obj_mors[o2], h) != obj_mors[o1]) continue;
        add(h, o1, o2, c.morphisms[h].name);
        cap_check(s.morphisms.size(), cap, "slice category");
      }
  s.alloc_table();
  for (size_t g = 0; g < tris.size(); ++g)
    for (size_t f = 0; f < tris.size(); ++f) {
      if (tris[f].o2 != tris[g].o1) continue;
      s.set_composite(static_cast<int>(g), static_cast<int>(f),
                      ix.get(c.compose(tris[g].h, tris[f].h), tris[f].o1, tris[g].o2, n));
    }

  SliceResult out;
  out.cat = std::make_shared<FinCategory>(std::move(s));
  out.object_mors = obj_mors;
  out.projection.name = "dom";
  out.projection.src = out.cat;
  out.projection.dst = cp;
  for (int o = 0; o < n; ++o) out.projection.obj_map.push_back(c.dom(obj_mors[o]));
  for (const auto& t : tris) out.projection.mor_map.push_back(t.h);
  return out;
}

SliceResult coslice(CatPtr cp, int base, int cap) {
  const FinCategory& c = *cp;
  if (base < 0 || base >= c.object_count()) throw Error(ErrKind::UnknownObject, "coslice base out of range");
  FinCategory s;
  s.name = c.objects[base] + "\\" + c.name;
  std::vector<int> obj_mors;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (c.dom(f) == base) {
      obj_mors.push_back(f);
      s.objects.push_back(c.morphisms[f].name);
    }
  const int n = static_cast<int>(obj_mors.size());
  NamePool names;
  s.identity.resize(n);
  struct Tri {
    int h, o1, o2;
  };
  std::vector<Tri> tris;
  CellIndex ix;
  auto add = [&](int h, int o1, int o2, const std::string& base_name) {
    ix.put(h, o1, o2, n, static_cast<int>(tris.size()));
    tris.push_back({h, o1, o2});
    s.morphisms.push_back({names.fresh(base_name), o1, o2});
  };
  for (int o = 0; o < n; ++o) {
    s.identity[o] = o;
    add(c.identity[c.cod(obj_mors[o])], o, o, "id_" + s.objects[o]);
  }
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int h = 0; h < c.morphism_count(); ++h) {
        if (c.is_identity(h)) continue;
        if (c.dom(h) != c.cod(obj_mors[o1]) || c.cod(h) != c.cod(obj_mors[o2])) continue;
        if (c.compose(h, obj_mors[o1]) != obj_mors[o2]) continue;
        add(h, o1, o2, c.morphisms[h].name);
        cap_check(s.morphisms.size(), cap, "coslice category");
      }
  s.alloc_table();
  for (size_t g = 0; g < tris.size(); ++g)
    for (size_t f = 0; f < tris.size(); ++f) {
      if (tris[f].o2 != tris[g].o1) continue;
      s.set_composite(static_cast<int>(g), static_cast<int>(f),
                      ix.get(c.compose(tris[g].h, tris[f].h), tris[f].o1, tris[g].o2, n));
    }

  SliceResult out;
  out.cat = std::make_shared<FinCategory>(std::move(s));
  out.object_mors = obj_mors;
  out.projection.name = "cod";
  out.projection.src = out.cat;
  out.projection.dst = cp;
  for (int o = 0; o < n; ++o) out.projection.obj_map.push_back(c.cod(obj_mors[o]));
  for (const auto& t : tris) out.projection.mor_map.push_back(t.h);
  return out;
}

ArrowCatResult arrow_category(CatPtr cp, int cap) {
  const FinCategory& c = *cp;
  FinCategory s;
  s.name = c.name + "^2";
  const int n = c.morphism_count();
  for (int f = 0; f < n; ++f) s.objects.push_back(c.morphisms[f].name);
  NamePool names;
  s.identity.resize(n);
  struct Sq {
    int p, q, o1, o2;
  };
  std::vector<Sq> sqs;
  std::unordered_map<long long, int> ix;
  auto key = [&](int p, int q, int o1, int o2) {
    return ((static_cast<long long>(p) * n + q) * n + o1) * n + o2;
  };
  auto add = [&](int p, int q, int o1, int o2, const std::string& base_name) {
    ix[key(p, q, o1, o2)] = static_cast<int>(sqs.size());
    sqs.push_back({p, q, o1, o2});
    s.morphisms.push_back({names.fresh(base_name), o1, o2});
  };
  for (int o = 0; o < n; ++o) {
    s.identity[o] = o;
    add(c.identity[c.dom(o)], c.identity[c.cod(o)], o, o, "id_" + s.objects[o]);
  }
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int p = 0; p < n; ++p) {
        if (c.dom(p) != c.dom(o1) || c.cod(p) != c.dom(o2)) continue;
        for (int q = 0; q < n; ++q) {
          if (c.dom(q) != c.cod(o1) || c.cod(q) != c.cod(o2)) continue;
          if (o1 == o2 && c.is_identity(p) && c.is_identity(q)) continue;
          if (c.compose(o2, p) != c.compose(q, o1)) continue;
          add(p, q, o1, o2, "sq" + std::to_string(sqs.size() + 1));
          cap_check(s.morphisms.size(), cap, "arrow category");
        }
      }
  s.alloc_table();
  for (size_t g = 0; g < sqs.size(); ++g)
    for (size_t f = 0; f < sqs.size(); ++f) {
      if (sqs[f].o2 != sqs[g].o1) continue;
      auto it = ix.find(key(c.compose(sqs[g].p, sqs[f].p), c.compose(sqs[g].q, sqs[f].q), sqs[f].o1, sqs[g].o2));
      s.set_composite(static_cast<int>(g), static_cast<int>(f), it == ix.end() ? -1 : it->second);
    }
  ArrowCatResult out;
  out.cat = std::make_shared<FinCategory>(std::move(s));
  for (const auto& sq : sqs) out.square_parts.push_back({sq.p, sq.q});
  return out;
}

CommaResult comma(int base, const FinFunctor& u, int cap) {
  const FinCategory& a = u.source();
  const FinCategory& b = u.target();
  if (base < 0 || base >= b.object_count()) throw Error(ErrKind::UnknownObject, "comma base out of range");
  FinCategory s;
  s.name = b.objects[base] + ">" + (u.name.empty() ? "U" : u.name);
  std::vector<std::pair<int, int>> pairs; // (A, f : base -> U(A)), lexicographic
  for (int A = 0; A < a.object_count(); ++A)
    for (int f = 0; f < b.morphism_count(); ++f)
      if (b.dom(f) == base && b.cod(f) == u.obj_map[A]) pairs.push_back({A, f});
  NamePool obj_names, names;
  for (auto& [A, f] : pairs) s.objects.push_back(obj_names.fresh(a.objects[A] + "_" + b.morphisms[f].name));
  const int n = static_cast<int>(pairs.size());
  s.identity.resize(n);
  struct Cm {
    int uu, o1, o2;
  };
  std::vector<Cm> cms;
  CellIndex ix;
  auto add = [&](int w, int o1, int o2, const std::string& base_name) {
    ix.put(w, o1, o2, n, static_cast<int>(cms.size()));
    cms.push_back({w, o1, o2});
    s.morphisms.push_back({names.fresh(base_name), o1, o2});
  };
  for (int o = 0; o < n; ++o) {
    s.identity[o] = o;
    add(a.identity[pairs[o].first], o, o, "id_" + s.objects[o]);
  }
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int w = 0; w < a.morphism_count(); ++w) {
        if (o1 == o2 && a.is_identity(w)) continue;
        if (a.dom(w) != pairs[o1].first || a.cod(w) != pairs[o2].first) continue;
        if (b.compose(u.mor_map[w], pairs[o1].second) != pairs[o2].second) continue;
        add(w, o1, o2, a.morphisms[w].name);
        cap_check(s.morphisms.size(), cap, "comma category");
      }
  s.alloc_table();
  for (size_t g = 0; g < cms.size(); ++g)
    for (size_t f = 0; f < cms.size(); ++f) {
      if (cms[f].o2 != cms[g].o1) continue;
      s.set_composite(static_cast<int>(g), static_cast<int>(f),
                      ix.get(a.compose(cms[g].uu, cms[f].uu), cms[f].o1, cms[g].o2, n));
    }
  CommaResult out;
  out.cat = std::make_shared<FinCategory>(std::move(s));
  out.obj_pairs = pairs;
  for (const auto& cm : cms) out.mor_us.push_back(cm.uu);
  out.projection.name = "pi_" + b.objects[base];
  out.projection.src = out.cat;
  out.projection.dst = u.src;
  for (const auto& [A, f] : pairs) out.projection.obj_map.push_back(A);
  for (const auto& cm : cms) out.projection.mor_map.push_back(cm.uu);
  return out;
}

} // namespace mcat
