#include "multicat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace mcat {

namespace {

// working representation during table search
struct Work {
  int n = 0;                           // objects
  int extra = 0;                       // non-identity morphisms
  std::vector<std::pair<int, int>> dc; // dom/cod per non-identity morphism, non-decreasing
  std::vector<int> table;              // composition on morphism indices, -1 unknown
  int m() const { return n + extra; }
  int dom(int f) const { return f < n ? f : dc[f - n].first; }
  int cod(int f) const { return f < n ? f : dc[f - n].second; }
  int& at(int g, int f) { return table[g * m() + f]; }
  int get(int g, int f) const { return table[g * m() + f]; }
};

// Assigns cell (g,f) := h and closes under the associativity consequences
// x.(g.f) = (x.g).f, deriving forced cells onto the trail; false on clash.
bool assign_propagate(Work& w, int g0, int f0, int h0, std::vector<int>& trail) {
  const int m = w.m();
  auto set_cell = [&](int g, int f, int h) -> int {
    int& cell = w.at(g, f);
    if (cell >= 0) return cell == h ? 0 : -1; // -1 clash, 0 no-op
    if (w.dom(h) != w.dom(f) || w.cod(h) != w.cod(g)) return -1;
    cell = h;
    trail.push_back(g * m + f);
    return 1;
  };
  int first = set_cell(g0, f0, h0);
  if (first < 0) return false;
  size_t head = first > 0 ? trail.size() - 1 : trail.size();
  // worklist over newly assigned cells
  for (; head < trail.size(); ++head) {
    int a = trail[head] / m, b = trail[head] % m;
    int ab = w.get(a, b);
    for (int x = 0; x < m; ++x) {
      // triple (x, a, b): (x.a).b = x.(a.b)
      if (w.dom(x) == w.cod(a)) {
        int xa = w.get(x, a);
        if (xa >= 0) {
          int l = w.get(xa, b), r = w.get(x, ab);
          if (l >= 0 && r >= 0) {
            if (l != r) return false;
          } else if (l >= 0) {
            if (set_cell(x, ab, l) < 0) return false;
          } else if (r >= 0) {
            if (set_cell(xa, b, r) < 0) return false;
          }
        }
      }
      // triple (a, b, x): (a.b).x = a.(b.x)
      if (w.cod(x) == w.dom(b)) {
        int bx = w.get(b, x);
        if (bx >= 0) {
          int l = w.get(ab, x), r = w.get(a, bx);
          if (l >= 0 && r >= 0) {
            if (l != r) return false;
          } else if (l >= 0) {
            if (set_cell(a, bx, l) < 0) return false;
          } else if (r >= 0) {
            if (set_cell(ab, x, r) < 0) return false;
          }
        }
      }
      // the new cell as an inner product on either side:
      // triple (a, b, x) covered; (x, y, z) with x.y = the new cell handled
      // when that cell itself was queued
      // triple where ab appears as left factor of a known cell: (ab, x) known
      if (w.dom(x) == w.cod(b)) {
        // triple (x', a, b) variants are covered by the first rule when x'
        // ranges over all morphisms
      }
    }
  }
  return true;
}

bool assoc_ok_full(const Work& w) {
  const int m = w.m();
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (w.dom(h) != w.cod(g)) continue;
      int hg = w.get(h, g);
      for (int f = 0; f < m; ++f) {
        if (w.dom(g) != w.cod(f)) continue;
        if (w.get(h, w.get(g, f)) != w.get(hg, f)) return false;
      }
    }
  return true;
}

void encode(const Work& w, std::vector<int>& out) {
  out.clear();
  for (const auto& [d, c] : w.dc) {
    out.push_back(d);
    out.push_back(c);
  }
  const int m = w.m();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) out.push_back(w.get(g, f));
}

// true when no relabeling of objects/arrows yields a lexicographically
// smaller encoding
bool canonical(const Work& w) {
  const int n = w.n, extra = w.extra, m = w.m();
  std::vector<int> base_enc;
  encode(w, base_enc);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> arrows(extra);
  std::vector<std::pair<int, int>> rdc(extra);
  std::vector<int> newix(m), oldix(m);
  do {
    for (int i = 0; i < extra; ++i) rdc[i] = {sigma[w.dc[i].first], sigma[w.dc[i].second]};
    std::iota(arrows.begin(), arrows.end(), 0);
    std::sort(arrows.begin(), arrows.end(), [&](int a, int b) { return rdc[a] < rdc[b]; });
    std::vector<std::pair<int, int>> groups;
    int start = 0;
    for (int i = 1; i <= extra; ++i) {
      if (i == extra || rdc[arrows[i]] != rdc[arrows[start]]) {
        groups.push_back({start, i});
        start = i;
      }
    }
    std::vector<int> perm = arrows;
    bool more = true;
    while (more) {
      for (int i = 0; i < n; ++i) newix[i] = sigma[i];
      for (int j = 0; j < extra; ++j) newix[n + perm[j]] = n + j;
      for (int i = 0; i < m; ++i) oldix[newix[i]] = i;
      bool smaller = false, bigger = false;
      size_t pos = 0;
      for (int j = 0; j < extra && !smaller && !bigger; ++j) {
        const auto& p = rdc[perm[j]];
        if (p.first != base_enc[pos] || p.second != base_enc[pos + 1]) {
          long long mine = static_cast<long long>(p.first) * (n + 1) + p.second;
          long long theirs = static_cast<long long>(base_enc[pos]) * (n + 1) + base_enc[pos + 1];
          (mine < theirs ? smaller : bigger) = true;
        }
        pos += 2;
      }
      pos = static_cast<size_t>(extra) * 2;
      if (!smaller && !bigger) {
        for (int g = 0; g < m && !smaller && !bigger; ++g)
          for (int f = 0; f < m; ++f) {
            int val = w.get(oldix[g], oldix[f]);
            int enc = val < 0 ? -1 : newix[val];
            int ref = base_enc[pos + static_cast<size_t>(g) * m + f];
            if (enc != ref) {
              (enc < ref ? smaller : bigger) = true;
              break;
            }
          }
      }
      if (smaller) return false;
      more = false;
      for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        if (std::next_permutation(perm.begin() + it->first, perm.begin() + it->second)) {
          more = true;
          break;
        }
        std::sort(perm.begin() + it->first, perm.begin() + it->second);
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

FinCategory materialize(const Work& w) {
  FinCategory c;
  c.name = "C" + std::to_string(w.n) + "_" + std::to_string(w.extra);
  for (int i = 0; i < w.n; ++i) c.objects.push_back("o" + std::to_string(i));
  c.identity.resize(w.n);
  for (int i = 0; i < w.n; ++i) {
    c.identity[i] = i;
    c.morphisms.push_back({"id_o" + std::to_string(i), i, i});
  }
  for (int j = 0; j < w.extra; ++j)
    c.morphisms.push_back({"m" + std::to_string(j), w.dc[j].first, w.dc[j].second});
  c.alloc_table();
  for (int g = 0; g < w.m(); ++g)
    for (int f = 0; f < w.m(); ++f)
      if (w.dom(g) == w.cod(f)) c.set_composite(g, f, w.get(g, f));
  return c;
}

void search_tables(Work& w, const std::vector<std::pair<int, int>>& cells, size_t k,
                   const std::function<void(const Work&)>& emit) {
  while (k < cells.size() && w.get(cells[k].first, cells[k].second) >= 0) ++k;
  if (k == cells.size()) {
    if (assoc_ok_full(w) && canonical(w)) emit(w);
    return;
  }
  auto [g, f] = cells[k];
  std::vector<int> trail;
  for (int h = 0; h < w.m(); ++h) {
    if (w.dom(h) != w.dom(f) || w.cod(h) != w.cod(g)) continue;
    trail.clear();
    if (assign_propagate(w, g, f, h, trail)) search_tables(w, cells, k + 1, emit);
    for (int cell : trail) w.table[cell] = -1;
  }
}

} // namespace

std::vector<CatPtr> enumerate_categories(int max_obj, int max_mor) {
  std::vector<CatPtr> out;
  if (max_obj >= 0) {
    FinCategory empty;
    empty.name = "C0_0";
    empty.alloc_table();
    out.push_back(std::make_shared<FinCategory>(std::move(empty)));
  }
  for (int n = 1; n <= max_obj; ++n) {
    for (int extra = 0; extra + n <= max_mor; ++extra) {
      std::vector<std::pair<int, int>> sig(extra, {0, 0});
      std::function<void(int)> rec_sig = [&](int i) {
        if (i == extra) {
          Work w;
          w.n = n;
          w.extra = extra;
          w.dc = sig;
          const int m = w.m();
          w.table.assign(static_cast<size_t>(m) * m, -1);
          for (int f = 0; f < m; ++f) {
            w.at(w.cod(f), f) = f;
            w.at(f, w.dom(f)) = f;
          }
          std::vector<std::pair<int, int>> cells;
          for (int g = n; g < m; ++g)
            for (int f = n; f < m; ++f)
              if (w.dom(g) == w.cod(f) && w.get(g, f) < 0) cells.push_back({g, f});
          search_tables(w, cells, 0,
                        [&](const Work& done) { out.push_back(std::make_shared<FinCategory>(materialize(done))); });
          return;
        }
        std::pair<int, int> lo = i == 0 ? std::pair<int, int>{0, 0} : sig[i - 1];
        for (int d = lo.first; d < n; ++d)
          for (int c = (d == lo.first ? lo.second : 0); c < n; ++c) {
            sig[i] = {d, c};
            rec_sig(i + 1);
          }
      };
      rec_sig(0);
    }
  }
  return out;
}

void for_each_functor(const FinCategory& src, const FinCategory& dst,
                      const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  const int ns = src.object_count(), nd = dst.object_count();
  const int ms = src.morphism_count(), md = dst.morphism_count();
  if (ns == 0) {
    std::vector<int> e1, e2;
    fn(e1, e2);
    return;
  }
  if (nd == 0) return;
  std::vector<int> omap(ns, 0), mmap(ms, -1);
  // composition triples checked as soon as their last morphism image is set
  std::vector<std::vector<std::array<int, 3>>> triggers(ms);
  for (int g = 0; g < ms; ++g)
    for (int f = 0; f < ms; ++f) {
      if (!src.composable(g, f)) continue;
      int h = src.compose(g, f);
      triggers[std::max({g, f, h})].push_back({g, f, h});
    }
  std::function<void(int)> rec_mor = [&](int k) {
    if (k == ms) {
      fn(omap, mmap);
      return;
    }
    auto advance = [&]() {
      for (const auto& [g, f, h] : triggers[k])
        if (dst.compose(mmap[g], mmap[f]) != mmap[h]) return;
      rec_mor(k + 1);
    };
    if (src.is_identity(k)) {
      mmap[k] = dst.identity[omap[src.dom(k)]];
      advance();
      mmap[k] = -1;
      return;
    }
    int want_d = omap[src.dom(k)], want_c = omap[src.cod(k)];
    for (int w = 0; w < md; ++w) {
      if (dst.dom(w) != want_d || dst.cod(w) != want_c) continue;
      mmap[k] = w;
      advance();
      mmap[k] = -1;
    }
  };
  std::function<void(int)> rec_obj = [&](int i) {
    if (i == ns) {
      rec_mor(0);
      return;
    }
    for (int x = 0; x < nd; ++x) {
      omap[i] = x;
      rec_obj(i + 1);
    }
  };
  rec_obj(0);
}

long long count_functors(const FinCategory& src, const FinCategory& dst) {
  long long n = 0;
  for_each_functor(src, dst, [&](const std::vector<int>&, const std::vector<int>&) { ++n; });
  return n;
}

} // namespace mcat
