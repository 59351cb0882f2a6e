#ifndef MULTICAT_TEST_HELPERS_HPP
#define MULTICAT_TEST_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "multicat/category.hpp"
#include "multicat/functor.hpp"

namespace mtest {

using namespace mcat;

inline CatPtr build(const RawCategory& raw) { return std::make_shared<FinCategory>(validate_category(raw)); }

inline CatPtr terminal_cat() { return build({"One", {"star"}, {}, {}}); }

inline CatPtr walking_arrow() { return build({"Two", {"0", "1"}, {{"a01", "0", "1"}}, {}}); }

inline CatPtr chain3() {
  return build({"C3",
                {"0", "1", "2"},
                {{"c01", "0", "1"}, {"c12", "1", "2"}, {"c02", "0", "2"}},
                {{"c12", "c01", "c02"}}});
}

inline CatPtr discrete2() { return build({"D2", {"x", "y"}, {}, {}}); }

inline CatPtr vposet() {
  return build({"V", {"bot", "a", "b"}, {{"f", "bot", "a"}, {"g", "bot", "b"}}, {}});
}

inline CatPtr cospan_cat() { return build({"Cospan", {"a", "b", "c"}, {{"f", "a", "c"}, {"g", "b", "c"}}, {}}); }

inline FinFunctor functor_of(CatPtr src, CatPtr dst, std::vector<std::pair<std::string, std::string>> objs,
                             std::vector<std::pair<std::string, std::string>> mors, const std::string& name = "F") {
  RawFunctor raw;
  raw.name = name;
  raw.obj_entries = std::move(objs);
  raw.mor_entries = std::move(mors);
  return validate_functor(raw, std::move(src), std::move(dst));
}

// D2 = {a, b} as a full subposet of V
inline FinFunctor d2_into_v() {
  CatPtr d2 = build({"D2", {"a", "b"}, {}, {}});
  return functor_of(d2, vposet(), {{"a", "a"}, {"b", "b"}}, {}, "U");
}

inline FinFunctor cospan_to_one() {
  CatPtr c = cospan_cat();
  return functor_of(c, terminal_cat(), {{"a", "star"}, {"b", "star"}, {"c", "star"}},
                    {{"f", "id_star"}, {"g", "id_star"}}, "Bang");
}

} // namespace mtest

#endif
