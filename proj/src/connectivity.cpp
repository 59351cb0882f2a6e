#include "multicat/connectivity.hpp"

#include <algorithm>
#include <numeric>

namespace mcat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

} // namespace

ComponentPartition connected_components(const FinCategory& c) {
  const int n = c.object_count();
  UnionFind uf(n);
  for (int m = 0; m < c.morphism_count(); ++m) uf.unite(c.dom(m), c.cod(m));
  ComponentPartition p;
  p.block_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (p.block_of[r] < 0) {
      p.block_of[r] = static_cast<int>(p.blocks.size());
      p.blocks.emplace_back();
      p.representative.push_back(r);
    }
    p.block_of[x] = p.block_of[r];
    p.blocks[p.block_of[x]].push_back(x);
  }
  return p;
}

std::vector<int> initial_objects(const FinCategory& c) {
  std::vector<int> out;
  for (int x = 0; x < c.object_count(); ++x) {
    bool ok = true;
    for (int y = 0; y < c.object_count() && ok; ++y) ok = c.hom_count(x, y) == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> terminal_objects(const FinCategory& c) {
  std::vector<int> out;
  for (int x = 0; x < c.object_count(); ++x) {
    bool ok = true;
    for (int y = 0; y < c.object_count() && ok; ++y) ok = c.hom_count(y, x) == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

namespace {

MultiInitialResult multi_family(const FinCategory& c, bool dual) {
  auto hom1 = [&](int x, int y) { return dual ? c.hom_count(y, x) : c.hom_count(x, y); };
  ComponentPartition p = connected_components(c);
  MultiInitialFamily fam;
  fam.witness.assign(c.object_count(), {-1, -1});
  for (int b = 0; b < p.count(); ++b) {
    int found = -1;
    for (int x : p.blocks[b]) {
      bool ok = true;
      for (int y : p.blocks[b])
        if (hom1(x, y) != 1) {
          ok = false;
          break;
        }
      if (ok) {
        found = x;
        break;
      }
    }
    if (found < 0) {
      MultiInitialResult r;
      r.absent = AbsentComponent{b, p.blocks[b]};
      return r;
    }
    int pos = static_cast<int>(fam.members.size());
    fam.members.push_back(found);
    for (int y : p.blocks[b]) {
      auto arrows = dual ? c.hom(y, found) : c.hom(found, y);
      fam.witness[y] = {pos, arrows.front()};
    }
  }
  MultiInitialResult r;
  r.family = std::move(fam);
  return r;
}

} // namespace

MultiInitialResult multi_initial_family(const FinCategory& c) { return multi_family(c, false); }
MultiInitialResult multi_terminal_family(const FinCategory& c) { return multi_family(c, true); }

bool is_weakly_initial(const FinCategory& c, const std::vector<int>& members) {
  for (int y = 0; y < c.object_count(); ++y) {
    bool hit = false;
    for (int x : members)
      if (c.hom_count(x, y) > 0) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

} // namespace mcat
