#include <doctest.h>

#include "helpers.hpp"
#include "multicat/connectivity.hpp"

using namespace mcat;
using namespace mtest;

TEST_CASE("terminal category validates") {
  CatPtr one = terminal_cat();
  CHECK(one->object_count() == 1);
  CHECK(one->morphism_count() == 1);
  CHECK(one->is_identity(0));
}

TEST_CASE("walking arrow validates") {
  CatPtr two = walking_arrow();
  CHECK(two->object_count() == 2);
  CHECK(two->morphism_count() == 3);
}

TEST_CASE("three-chain validates with the expected poset homs") {
  CatPtr c3 = chain3();
  CHECK(c3->object_count() == 3);
  CHECK(c3->morphism_count() == 6);
  // poset: at most one arrow per ordered pair, exactly when <=
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(c3->hom_count(x, y) == (x <= y ? 1 : 0));
  int c01 = c3->morphism_checked("c01");
  int c12 = c3->morphism_checked("c12");
  CHECK(c3->compose(c12, c01) == c3->morphism_checked("c02"));
}

TEST_CASE("validation errors carry the right kinds") {
  SUBCASE("missing composite") {
    RawCategory raw{"Bad", {"0", "1", "2"}, {{"f", "0", "1"}, {"g", "1", "2"}}, {}};
    CHECK_THROWS_WITH_AS(static_cast<void>(validate_category(raw)),
                         doctest::Contains("missing composite"), Error);
    try {
      validate_category(raw);
    } catch (const Error& e) {
      CHECK(e.kind == ErrKind::MissingComposite);
    }
  }
  SUBCASE("dangling reference") {
    RawCategory raw{"Bad", {"0"}, {{"f", "0", "3"}}, {}};
    try {
      validate_category(raw);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind == ErrKind::DanglingRef);
    }
  }
  SUBCASE("associativity violation has a witness triple") {
    // two parallel endomaps with a deliberately non-associative table
    RawCategory raw{"Bad",
                    {"x"},
                    {{"p", "x", "x"}, {"q", "x", "x"}},
                    {{"p", "p", "q"}, {"p", "q", "q"}, {"q", "p", "q"}, {"q", "q", "p"}}};
    try {
      validate_category(raw);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind == ErrKind::LawViolation);
      CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
  }
  SUBCASE("duplicate names") {
    RawCategory raw{"Bad", {"x", "x"}, {}, {}};
    try {
      validate_category(raw);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind == ErrKind::DuplicateName);
    }
  }
}

TEST_CASE("hom sets in declaration order") {
  CatPtr two = walking_arrow();
  auto h = two->hom(0, 1);
  REQUIRE(h.size() == 1);
  CHECK(two->morphisms[h[0]].name == "a01");
  CatPtr c3 = chain3();
  CHECK(c3->hom(0, 2).size() == 1);
  CatPtr d2 = discrete2();
  CHECK(d2->hom(0, 1).empty());
}

TEST_CASE("opposite is an involution with identical tables") {
  CatPtr c3 = chain3();
  FinCategory once = opposite(*c3);
  FinCategory twice = opposite(once);
  CHECK(twice.objects == c3->objects);
  CHECK(twice.table() == c3->table());
  for (int m = 0; m < c3->morphism_count(); ++m) {
    CHECK(twice.dom(m) == c3->dom(m));
    CHECK(twice.cod(m) == c3->cod(m));
  }
  FinCategory one_op = opposite(*terminal_cat());
  CHECK(one_op.morphism_count() == 1);
  FinCategory two_op = opposite(*walking_arrow());
  CHECK(two_op.dom(two_op.find_morphism("a01")) == 1);
}

TEST_CASE("hom cardinalities swap under opposite") {
  CatPtr c3 = chain3();
  FinCategory op = opposite(*c3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(c3->hom_count(x, y) == op.hom_count(y, x));
}

TEST_CASE("slices and coslices") {
  SliceResult s1 = slice(terminal_cat(), 0);
  CHECK(s1.cat->object_count() == 1);
  CHECK(s1.cat->morphism_count() == 1);

  CatPtr c3 = chain3();
  SliceResult s2 = slice(c3, 2);
  CHECK(s2.cat->object_count() == 3); // c02, c12, id_2
  s2.cat->check_laws();
  s2.projection.validate();

  SliceResult s3 = slice(discrete2(), 0);
  CHECK(s3.cat->object_count() == 1);

  SliceResult s4 = coslice(c3, 0);
  CHECK(s4.cat->object_count() == 3);
  s4.cat->check_laws();
  SliceResult s5 = coslice(terminal_cat(), 0);
  CHECK(s5.cat->object_count() == 1);
  SliceResult s6 = coslice(discrete2(), 0);
  CHECK(s6.cat->object_count() == 1);
}

TEST_CASE("arrow categories") {
  ArrowCatResult a1 = arrow_category(terminal_cat());
  CHECK(a1.cat->object_count() == 1);
  ArrowCatResult a2 = arrow_category(walking_arrow());
  CHECK(a2.cat->object_count() == 3);
  a2.cat->check_laws();
  ArrowCatResult a3 = arrow_category(discrete2());
  CHECK(a3.cat->object_count() == 2);
  CHECK(a3.cat->morphism_count() == 2);
}

TEST_CASE("comma categories") {
  CatPtr one = terminal_cat();
  CommaResult c1 = comma(0, identity_functor(one));
  CHECK(c1.cat->object_count() == 1);
  CHECK(c1.cat->morphism_count() == 1);

  FinFunctor u = d2_into_v();
  CommaResult c2 = comma(u.target().object_checked("bot"), u);
  CHECK(c2.cat->object_count() == 2);
  CHECK(c2.cat->morphism_count() == 2); // two isolated identities
  c2.cat->check_laws();
  c2.projection.validate();
  // projection returns the source-object component of each pair
  for (int k = 0; k < c2.cat->object_count(); ++k)
    CHECK(c2.projection.obj_map[k] == c2.obj_pairs[k].first);

  FinFunctor bang = cospan_to_one();
  CommaResult c3r = comma(0, bang);
  CHECK(c3r.cat->object_count() == 3);
  CHECK(c3r.cat->morphism_count() == 5); // the cospan itself
  c3r.cat->check_laws();
}

TEST_CASE("functor validation") {
  CatPtr c3 = chain3();
  FinFunctor idf = identity_functor(c3);
  idf.validate();
  FinFunctor u = d2_into_v();
  u.validate();
  CHECK(u.is_full());
  CHECK(u.is_faithful());

  // arrow sent to an identity while the endpoints stay separated
  CatPtr two = walking_arrow();
  CatPtr d2 = discrete2();
  RawFunctor raw;
  raw.name = "Bad";
  raw.obj_entries = {{"0", "x"}, {"1", "y"}};
  raw.mor_entries = {{"a01", "id_x"}};
  try {
    validate_functor(raw, two, d2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::NotFunctorial);
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(*discrete2()).count() == 2);
  CHECK(connected_components(*cospan_cat()).count() == 1);
  FinFunctor u = d2_into_v();
  CommaResult c = comma(u.target().object_checked("bot"), u);
  CHECK(connected_components(*c.cat).count() == 2);
}

TEST_CASE("initial and terminal objects") {
  CatPtr c3 = chain3();
  CHECK(initial_objects(*c3) == std::vector<int>{0});
  CHECK(terminal_objects(*c3) == std::vector<int>{2});
  CHECK(initial_objects(*cospan_cat()).empty());
  CHECK(initial_objects(*discrete2()).empty());
}

TEST_CASE("multi-initial families") {
  MultiInitialResult d2r = multi_initial_family(*discrete2());
  REQUIRE(d2r.ok());
  CHECK(d2r.family->members == std::vector<int>{0, 1});

  MultiInitialResult cr = multi_initial_family(*cospan_cat());
  CHECK_FALSE(cr.ok());
  CHECK(cr.absent->block == 0);

  MultiInitialResult c3r = multi_initial_family(*chain3());
  REQUIRE(c3r.ok());
  CHECK(c3r.family->members == std::vector<int>{0});

  // a returned family is weakly initial and its witnesses are exclusive
  for (const CatPtr& c : {discrete2(), chain3(), vposet()}) {
    MultiInitialResult r = multi_initial_family(*c);
    REQUIRE(r.ok());
    CHECK(is_weakly_initial(*c, r.family->members));
    for (int y = 0; y < c->object_count(); ++y) {
      auto [pos, arrow] = r.family->witness[y];
      for (size_t i = 0; i < r.family->members.size(); ++i) {
        int expected = (static_cast<int>(i) == pos) ? 1 : 0;
        CHECK(c->hom_count(r.family->members[i], y) == expected);
      }
      CHECK(c->dom(arrow) == r.family->members[pos]);
      CHECK(c->cod(arrow) == y);
    }
  }
}

TEST_CASE("weak initiality") {
  CatPtr c = cospan_cat();
  std::vector<int> all{0, 1, 2};
  CHECK(is_weakly_initial(*c, all));
  CHECK(is_weakly_initial(*c, {0, 1}));
  CHECK_FALSE(is_weakly_initial(*c, {0}));
}

TEST_CASE("components absorb morphism endpoints") {
  for (const CatPtr& c : {chain3(), vposet(), cospan_cat()}) {
    ComponentPartition p = connected_components(*c);
    for (int m = 0; m < c->morphism_count(); ++m) CHECK(p.block_of[c->dom(m)] == p.block_of[c->cod(m)]);
  }
}
