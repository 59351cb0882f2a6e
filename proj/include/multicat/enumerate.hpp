#ifndef MULTICAT_ENUMERATE_HPP
#define MULTICAT_ENUMERATE_HPP

#include <functional>
#include <iosfwd>

#include "multicat/category.hpp"

namespace mcat {

// All categories with at most max_obj objects and max_mor morphisms
// (identities included), one representative per isomorphism class, in a
// deterministic order: object count, then morphism count, then dom/cod
// signature, then composition table, lexicographically.
std::vector<CatPtr> enumerate_categories(int max_obj, int max_mor);

// All functors src -> dst in deterministic order (object images as a base-n
// number, then morphism images lexicographically).
void for_each_functor(const FinCategory& src, const FinCategory& dst,
                      const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn);

long long count_functors(const FinCategory& src, const FinCategory& dst);

} // namespace mcat

#endif
