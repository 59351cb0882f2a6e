#include <doctest.h>

#include "helpers.hpp"
#include "multicat/multiadjoint.hpp"
#include "multicat/orthogonality.hpp"

using namespace mcat;
using namespace mtest;

TEST_CASE("local units") {
  FinFunctor u = d2_into_v();
  LocalUnitsResult lu = local_units(u, u.target().object_checked("bot"));
  REQUIRE(lu.ok());
  REQUIRE(lu.record->entries.size() == 2);
  CHECK(u.target().morphisms[lu.record->entries[0].unit_arrow].name == "f");
  CHECK(u.source().objects[lu.record->entries[0].apex] == "a");
  CHECK(u.target().morphisms[lu.record->entries[1].unit_arrow].name == "g");
  CHECK(u.source().objects[lu.record->entries[1].apex] == "b");

  CatPtr c3 = chain3();
  FinFunctor idf = identity_functor(c3);
  LocalUnitsResult lu2 = local_units(idf, 1);
  REQUIRE(lu2.ok());
  REQUIRE(lu2.record->entries.size() == 1);
  CHECK(lu2.record->entries[0].unit_arrow == c3->identity[1]);
  CHECK(lu2.record->entries[0].apex == 1);

  LocalUnitsResult lu3 = local_units(cospan_to_one(), 0);
  CHECK_FALSE(lu3.ok());
  CHECK(lu3.absent.has_value());
}

TEST_CASE("local right adjointness and the multi-adjoint wrapper") {
  CHECK(is_local_right_adjoint(d2_into_v()).value);
  LraResult bad = is_local_right_adjoint(cospan_to_one());
  CHECK_FALSE(bad.value);
  CHECK(bad.failing_base == 0);
  CHECK(is_local_right_adjoint(identity_functor(chain3())).value);
  CHECK(is_local_right_adjoint(identity_functor(vposet())).value);

  MraResult mra = is_right_multi_adjoint(d2_into_v());
  CHECK(mra.value);
  CHECK_FALSE(mra.note.empty());
  CHECK_FALSE(is_right_multi_adjoint(cospan_to_one()).value);
}

TEST_CASE("local left adjoint with triangle identities") {
  FinFunctor u = d2_into_v();
  LocalAdjunction adj = local_left_adjoint(u, u.source().object_checked("a"));
  // target slice V/a has objects f : bot -> a and id_a
  CHECK(adj.target_slice.cat->object_count() == 2);
  CHECK(adj.source_slice.cat->object_count() == 1);
  // L sends both slice objects to the only object of D2/a
  for (int o = 0; o < adj.target_slice.cat->object_count(); ++o) CHECK(adj.left.obj_map[o] == 0);

  CatPtr c3 = chain3();
  FinFunctor idf = identity_functor(c3);
  LocalAdjunction adj2 = local_left_adjoint(idf, 2);
  // the left adjoint of the identity restriction is the identity on the slice
  for (int o = 0; o < adj2.target_slice.cat->object_count(); ++o)
    CHECK(adj2.target_slice.object_mors[o] == adj2.source_slice.object_mors[adj2.left.obj_map[o]]);

  CHECK_THROWS_AS(static_cast<void>(local_left_adjoint(cospan_to_one(), 0)), Error);
}

TEST_CASE("Beck-Chevalley comparisons") {
  CatPtr c3 = chain3();
  FinFunctor idf = identity_functor(c3);
  // u = id, f arbitrary: the comparison is an identity
  BCResult r = beck_chevalley(idf, c3->identity[1], c3->morphism_checked("c01"));
  CHECK(r.is_iso);
  CHECK(c3->is_identity(r.sigma));
  // any u, f through the identity functor
  for (int um = 0; um < c3->morphism_count(); ++um)
    for (int g = 0; g < c3->morphism_count(); ++g) {
      if (c3->cod(g) != c3->dom(um)) continue;
      CHECK(beck_chevalley(idf, um, g).is_iso);
    }
  FinFunctor u = d2_into_v();
  BCResult r2 = beck_chevalley(u, u.source().identity[0], u.target().morphism_checked("f"));
  CHECK(r2.is_iso);
}

TEST_CASE("co-nerve decomposition") {
  FinFunctor u = d2_into_v();
  ConerveReport rep = conerve_decomposition(u, u.target().object_checked("bot"));
  CHECK(rep.ok);
  // at A = a: 1 = |hom(a,a)| + |hom(b,a)| = 1 + 0
  const ConerveLine& line = rep.lines[u.source().object_checked("a")];
  CHECK(line.hom_count == 1);
  CHECK(line.unit_counts == std::vector<int>{1, 0});

  FinFunctor idf = identity_functor(chain3());
  CHECK(conerve_decomposition(idf, 0).ok);

  // an object with an empty comma gives the empty sum
  CatPtr e2 = build({"E2", {"p", "q"}, {}, {}});
  CatPtr w3 = build({"W3", {"p", "q", "r"}, {}, {}});
  FinFunctor incl = functor_of(e2, w3, {{"p", "p"}, {"q", "q"}}, {});
  ConerveReport rep2 = conerve_decomposition(incl, w3->object_checked("r"));
  CHECK(rep2.ok);
  for (const auto& l : rep2.lines) {
    CHECK(l.hom_count == 0);
    CHECK(l.unit_counts.empty());
  }
}

TEST_CASE("wide pullback preservation") {
  CHECK(preserves_wide_pullbacks(identity_functor(chain3())).value);
  CHECK(preserves_wide_pullbacks(identity_functor(vposet())).value);
  CHECK(preserves_wide_pullbacks(d2_into_v()).value);
}

TEST_CASE("lifting problems") {
  CatPtr c3 = chain3();
  int c01 = c3->morphism_checked("c01"), c12 = c3->morphism_checked("c12"), c02 = c3->morphism_checked("c02");
  // l = id: the unique filler is the top arrow
  LiftReport r0 = lift(*c3, c3->identity[0], c12, c01, c02);
  REQUIRE(r0.fillers.size() == 1);
  CHECK(r0.fillers[0] == c01);
  LiftReport r1 = lift(*c3, c01, c12, c01, c12);
  REQUIRE(r1.fillers.size() == 1);
  CHECK(r1.fillers[0] == c3->identity[1]);
  LiftReport r2 = lift(*c3, c02, c12, c01, c3->identity[2]);
  CHECK(r2.fillers.empty());
  CHECK_THROWS_AS(static_cast<void>(lift(*c3, c01, c12, c01, c3->identity[2])), Error);
}

TEST_CASE("orthogonal classes") {
  CatPtr c3 = chain3();
  MorphismClass isos = MorphismClass::of(c3, c3->iso_list());
  MorphismClass all = MorphismClass::of(c3, [&] {
    std::vector<int> v(c3->morphism_count());
    for (int i = 0; i < c3->morphism_count(); ++i) v[i] = i;
    return v;
  }());
  CHECK(right_orthogonal(*c3, isos).members == all.members);
  CHECK(right_orthogonal(*c3, all).members == isos.members);
  MorphismClass l{c3, {c3->morphism_checked("c01")}};
  MorphismClass ro = right_orthogonal(*c3, l);
  CHECK(ro.contains(c3->morphism_checked("c12")));
  CHECK_FALSE(ro.contains(c3->morphism_checked("c01")));

  // triple orthogonal stabilizes on every class of this category
  for (int mask = 0; mask < (1 << 3); ++mask) {
    std::vector<int> ms;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) ms.push_back(3 + i);
    MorphismClass x = MorphismClass::of(c3, ms);
    MorphismClass xr = right_orthogonal(*c3, x);
    MorphismClass lxr = left_orthogonal(*c3, xr);
    MorphismClass rlxr = right_orthogonal(*c3, lxr);
    for (int m : x.members) CHECK(lxr.contains(m) == left_orthogonal(*c3, xr).contains(m));
    CHECK(rlxr.members == xr.members);
  }
}

TEST_CASE("candidates and diagonal universality") {
  CatPtr one = terminal_cat();
  FinFunctor id1 = identity_functor(one);
  CHECK(is_candidate(id1, 0, 0));
  CHECK(is_diagonally_universal(id1, 0));

  FinFunctor u = d2_into_v();
  int f = u.target().morphism_checked("f");
  CHECK(is_candidate(u, f, u.source().object_checked("a")));
  CHECK(is_diagonally_universal(u, f));

  FinFunctor bang = cospan_to_one();
  for (int apex = 0; apex < 3; ++apex) CHECK_FALSE(is_candidate(bang, 0, apex));

  CatPtr c3 = chain3();
  FinFunctor idc3 = identity_functor(c3);
  CHECK_FALSE(is_diagonally_universal(idc3, c3->morphism_checked("c01")));
  CHECK_FALSE(is_candidate(idc3, c3->morphism_checked("c01"), 1));
}

TEST_CASE("stable factorization and the independent decider") {
  FinFunctor u = d2_into_v();
  StableFactorization sf = stable_factorization(u, u.target().morphism_checked("f"), u.source().object_checked("a"));
  CHECK(u.target().morphisms[sf.candidate].name == "f");
  CHECK(u.source().objects[sf.apex] == "a");
  CHECK(u.source().is_identity(sf.right_part));

  CatPtr c3 = chain3();
  FinFunctor idf = identity_functor(c3);
  StableFactorization sf2 = stable_factorization(idf, c3->morphism_checked("c02"), 2);
  CHECK(c3->is_identity(sf2.candidate));
  CHECK(sf2.right_part == c3->morphism_checked("c02"));

  CHECK(is_stable(u).value);
  CHECK(is_stable(idf).value);
  CHECK_FALSE(is_stable(cospan_to_one()).value);
  // the deciders agree on these instances
  for (const FinFunctor& g : {d2_into_v(), cospan_to_one(), identity_functor(chain3())})
    CHECK(is_stable(g).value == is_local_right_adjoint(g).value);
}

TEST_CASE("factorization system validation") {
  CatPtr c3 = chain3();
  std::vector<int> every(c3->morphism_count());
  for (int i = 0; i < c3->morphism_count(); ++i) every[i] = i;
  MorphismClass isos = MorphismClass::of(c3, c3->iso_list());
  MorphismClass all = MorphismClass::of(c3, every);
  CHECK(validate_factorization_system(*c3, isos, all).valid);
  CHECK(validate_factorization_system(*c3, all, isos).valid);

  MorphismClass left = MorphismClass::of(c3, {0, 1, 2, c3->morphism_checked("c01")});
  MorphismClass right = MorphismClass::of(c3, {0, 1, 2, c3->morphism_checked("c12")});
  FsReport rep = validate_factorization_system(*c3, left, right);
  CHECK(rep.valid);

  // dropping the middle factorization breaks existence
  MorphismClass too_small = MorphismClass::of(c3, {0, 1, 2});
  FsReport bad = validate_factorization_system(*c3, too_small, too_small);
  CHECK_FALSE(bad.valid);
}

TEST_CASE("factorizations through classes") {
  CatPtr c3 = chain3();
  MorphismClass left = MorphismClass::of(c3, {0, 1, 2, c3->morphism_checked("c01")});
  MorphismClass right = MorphismClass::of(c3, {0, 1, 2, c3->morphism_checked("c12")});
  auto fs = factor_via_classes(*c3, c3->morphism_checked("c02"), left, right);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].left == c3->morphism_checked("c01"));
  CHECK(fs[0].apex == 1);
  CHECK(fs[0].right == c3->morphism_checked("c12"));

  auto fid = factor_via_classes(*c3, c3->identity[0], MorphismClass::of(c3, c3->iso_list()),
                                MorphismClass::of(c3, {0, 1, 2, 3, 4, 5}));
  bool has_trivial = false;
  for (const auto& f : fid) has_trivial |= c3->is_identity(f.left) && c3->is_identity(f.right);
  CHECK(has_trivial);

  auto fl = factor_via_classes(*c3, c3->morphism_checked("c01"), left, right);
  bool has_left = false;
  for (const auto& f : fl) has_left |= f.left == c3->morphism_checked("c01") && c3->is_identity(f.right);
  CHECK(has_left);
}

TEST_CASE("saturation") {
  CatPtr c3 = chain3();
  SaturationResult empty = saturate(*c3, MorphismClass::of(c3, {}));
  CHECK(empty.closure.members == c3->iso_list());
  SaturationResult s = saturate(*c3, MorphismClass::of(c3, {c3->morphism_checked("c01")}));
  CHECK(s.closure.members == std::vector<int>{0, 1, 2, c3->morphism_checked("c01")});
  SaturationResult s2 = saturate(*c3, s.closure);
  CHECK(s2.closure.members == s.closure.members); // fixpoint
}

TEST_CASE("relative full-faithfulness") {
  CHECK(is_relatively_full_faithful(identity_functor(chain3())).value);
  CHECK(is_relatively_full_faithful(d2_into_v()).value);
  CatPtr two = walking_arrow();
  FinFunctor collapse = functor_of(two, terminal_cat(), {{"0", "star"}, {"1", "star"}}, {{"a01", "id_star"}});
  CHECK_FALSE(is_relatively_full_faithful(collapse).value);
}

TEST_CASE("lifting right-class maps") {
  FinFunctor u = d2_into_v();
  MorphismClass ids{u.dst, {u.target().identity[1], u.target().identity[2]}};
  CHECK(lifts_r_maps(u, ids).value);
  MorphismClass with_f{u.dst, {u.target().morphism_checked("f")}};
  CHECK_FALSE(lifts_r_maps(u, with_f).value);
  FinFunctor idf = identity_functor(chain3());
  MorphismClass all_ids{idf.dst, {0, 1, 2}};
  CHECK(lifts_r_maps(idf, all_ids).value);
}

TEST_CASE("gliding inclusions") {
  CatPtr c3 = chain3();
  MorphismClass left = MorphismClass::of(c3, {0, 1, 2, c3->morphism_checked("c01")});
  MorphismClass right = MorphismClass::of(c3, {0, 1, 2, c3->morphism_checked("c12")});
  GlidingResult g = gliding_inclusion(c3, left, right, {1, 2});
  CHECK(g.subcat->object_count() == 2);
  CHECK(g.subcat->morphism_count() == 3);
  CHECK(is_stable(g.inclusion).value);

  try {
    gliding_inclusion(c3, left, right, {2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::GlidingViolation);
  }

  GlidingResult g2 = gliding_inclusion(c3, left, right, {0, 1, 2});
  CHECK(g2.subcat->object_count() == 3);
}
