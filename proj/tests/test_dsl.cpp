#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "multicat/cli.hpp"
#include "multicat/dsl.hpp"
#include "multicat/report.hpp"

using namespace mcat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool same_tables(const FinCategory& a, const FinCategory& b) {
  if (a.objects != b.objects || a.identity != b.identity) return false;
  if (a.morphisms.size() != b.morphisms.size()) return false;
  for (size_t i = 0; i < a.morphisms.size(); ++i)
    if (a.morphisms[i].name != b.morphisms[i].name || a.morphisms[i].dom != b.morphisms[i].dom ||
        a.morphisms[i].cod != b.morphisms[i].cod)
      return false;
  return a.table() == b.table();
}

} // namespace

TEST_CASE("parsing the basics") {
  Workspace ws = parse_workspace("category One { objects: star }");
  REQUIRE(ws.categories.size() == 1);
  CHECK(ws.categories[0].second->object_count() == 1);
  CHECK(ws.categories[0].second->morphism_count() == 1);
}

TEST_CASE("the V fixture parses to the expected tables") {
  Workspace ws = parse_workspace(slurp("fixtures/v.mcat"));
  CatPtr v = ws.category("V");
  CHECK(v->object_count() == 3);
  CHECK(v->morphism_count() == 5);
  const FinFunctor& u = ws.functor_named("U");
  CHECK(u.source().object_count() == 2);
  CHECK(u.is_full());
}

TEST_CASE("the chain fixture carries classes and a cone class") {
  Workspace ws = parse_workspace(slurp("fixtures/chain3.mcat"));
  CatPtr c3 = ws.category("C3");
  CHECK(c3->morphism_count() == 6);
  CHECK(ws.class_named("L").cls.members.size() == 4);
  CHECK(ws.gamma_named("G").gamma.cones.size() == 1);
  CHECK(ws.functor_named("IdC3").mor_map == identity_functor(c3).mor_map);
}

TEST_CASE("positioned syntax errors") {
  try {
    parse_workspace("category One {\n  objects: star\n  arrows\n}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::SyntaxError);
    CHECK(e.line == 4); // the '}' arrives where ':' was expected
  }
  try {
    parse_workspace("category C { objects: x arrows: f : x -> zz }");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::DanglingRef);
    CHECK(e.line >= 1);
  }
  try {
    parse_workspace("category C { objects: x, x }");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::DuplicateName);
  }
}

TEST_CASE("print and parse round-trip with identical tables") {
  for (const char* path : {"fixtures/v.mcat", "fixtures/chain3.mcat", "fixtures/cospan.mcat"}) {
    Workspace ws = parse_workspace(slurp(path));
    std::string printed = print_workspace(ws);
    Workspace again = parse_workspace(printed);
    REQUIRE(ws.categories.size() == again.categories.size());
    for (size_t i = 0; i < ws.categories.size(); ++i) {
      CHECK(ws.categories[i].first == again.categories[i].first);
      CHECK(same_tables(*ws.categories[i].second, *again.categories[i].second));
    }
    REQUIRE(ws.functors.size() == again.functors.size());
    for (size_t i = 0; i < ws.functors.size(); ++i) {
      CHECK(ws.functors[i].second.obj_map == again.functors[i].second.obj_map);
      CHECK(ws.functors[i].second.mor_map == again.functors[i].second.mor_map);
    }
    for (size_t i = 0; i < ws.classes.size(); ++i)
      CHECK(ws.classes[i].cls.members == again.classes[i].cls.members);
    // normalization is idempotent
    CHECK(print_workspace(again) == printed);
  }
}

TEST_CASE("comments and whitespace are insignificant") {
  Workspace a = parse_workspace("category C { objects: x, y arrows: f : x -> y }");
  Workspace b = parse_workspace("// header\ncategory C {\n  objects:\n    x,\n    y\n  arrows:\n"
                                "    f : x -> y // an arrow\n}\n");
  CHECK(same_tables(*a.categories[0].second, *b.categories[0].second));
}

TEST_CASE("cli exit codes") {
  std::ostringstream out, err;
  CHECK(run_cli({"is-multiadjoint", "-w", "fixtures/v.mcat", "-f", "U"}, out, err) == 0);
  CHECK(run_cli({"multiinit", "-w", "fixtures/cospan.mcat", "-c", "Cospan"}, out, err) == 1);
  CHECK(run_cli({"is-multiadjoint", "-w", "fixtures/cospan.mcat", "-f", "Bang"}, out, err) == 1);
  CHECK(run_cli({"homs", "-w", "fixtures/v.mcat", "-c", "V", "-X", "bot", "-Y", "a"}, out, err) == 0);
  CHECK(run_cli({"homs", "-w", "fixtures/v.mcat", "-c", "V", "-X", "nope", "-Y", "a"}, out, err) == 2);
  CHECK(run_cli({"parse", "-w", "no_such_file.mcat"}, out, err) == 2);
}

TEST_CASE("cli json reports round-trip and keep the field order") {
  std::ostringstream out, err;
  REQUIRE(run_cli({"local-units", "-w", "fixtures/v.mcat", "-f", "U", "-B", "bot", "--json"}, out, err) == 0);
  Json j = Json::parse(out.str());
  auto it = j.begin();
  CHECK(it.key() == "command");
  ++it;
  CHECK(it.key() == "inputs");
  ++it;
  CHECK(it.key() == "verdict");
  ++it;
  CHECK(it.key() == "witnesses");
  ++it;
  CHECK(it.key() == "data");
  ++it;
  CHECK(it.key() == "skipped");
  CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("derived categories through the cli") {
  std::ostringstream out, err;
  REQUIRE(run_cli({"parse", "-w", "fixtures/chain3.mcat", "--derive", "opposite:C3", "--derive", "slice:C3:2",
                   "--derive", "comma:IdC3:0", "--json"},
                  out, err) == 0);
  Json j = Json::parse(out.str());
  REQUIRE(j["data"]["derived"].size() == 3);
  CHECK(j["data"]["derived"][0]["morphisms"] == 6);
  CHECK(j["data"]["derived"][1]["objects"] == 3);
  // the printed workspace with derived categories still parses
  Workspace again = parse_workspace(j["data"]["normalized"].get<std::string>());
  CHECK(again.categories.size() == 4);
}
