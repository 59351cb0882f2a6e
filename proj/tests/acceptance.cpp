// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "multicat/cli.hpp"
#include "multicat/dsl.hpp"
#include "multicat/report.hpp"
#include "multicat/suite.hpp"

using namespace mcat;

namespace {

int failures = 0;

void line(const std::string& ix, bool pass, const std::string& what, const std::string& detail = "") {
  std::cout << "[" << ix << "] " << (pass ? "PASS" : "FAIL") << "  " << what;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(2);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string run_json(const std::vector<std::string>& args, int expect_exit) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (code != expect_exit) return "exit=" + std::to_string(code) + " " + out.str() + err.str();
  std::string s = out.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

bool tables_match(const Workspace& a, const Workspace& b) {
  if (a.categories.size() != b.categories.size()) return false;
  for (size_t i = 0; i < a.categories.size(); ++i) {
    const FinCategory& x = *a.categories[i].second;
    const FinCategory& y = *b.categories[i].second;
    if (a.categories[i].first != b.categories[i].first) return false;
    if (x.objects != y.objects || x.identity != y.identity || x.table() != y.table()) return false;
    if (x.morphisms.size() != y.morphisms.size()) return false;
    for (size_t m = 0; m < x.morphisms.size(); ++m)
      if (x.morphisms[m].name != y.morphisms[m].name || x.morphisms[m].dom != y.morphisms[m].dom ||
          x.morphisms[m].cod != y.morphisms[m].cod)
        return false;
  }
  if (a.functors.size() != b.functors.size()) return false;
  for (size_t i = 0; i < a.functors.size(); ++i)
    if (a.functors[i].second.obj_map != b.functors[i].second.obj_map ||
        a.functors[i].second.mor_map != b.functors[i].second.mor_map)
      return false;
  return true;
}

const char* const kMalformed[] = {
    "category",
    "category {",
    "category C",
    "category C {",
    "category C { objects: x, }",
    "category C { objects: x y }",
    "category C { objects: x arrows: f }",
    "category C { objects: x arrows: f : }",
    "category C { objects: x arrows: f : x }",
    "category C { objects: x arrows: f : x -> }",
    "category C { objects: x arrows: f : x -> y }",
    "category C { objects: x arrows: f : x -> x g }",
    "category C { objects: x arrows: f : x -> x compose: f }",
    "category C { objects: x arrows: f : x -> x compose: f . }",
    "category C { objects: x arrows: f : x -> x compose: f . f }",
    "category C { objects: x arrows: f : x -> x compose: f . f = }",
    "category C { objects: x arrows: f : x -> x compose: f . f = g }",
    "category C { objects: x, x }",
    "category C { objects: x } category C { objects: y }",
    "category C { objects: category }",
    "category C { objects: x arrows: id_x : x -> x }",
    "category C { objects: x arrows: p : x -> x q : x -> x compose: p . p = q p . q = q q . p = q q . q = p }",
    "functor F : A -> B { }",
    "category A { objects: x } functor F : A -> B { }",
    "category A { objects: x } category B { objects: y } functor F : A -> B { }",
    "category A { objects: x } category B { objects: y } functor F : A -> B { obj: x => z }",
    "category A { objects: x } category B { objects: y } functor F : A -> B { obj: x -> y }",
    "category A { objects: x } category B { objects: y } functor F : A => B { obj: x => y }",
    "class K in C { }",
    "category C { objects: x } class K in C { f }",
    "category C { objects: x } class K in C { id_x, }",
    "category C { objects: x } class in C { id_x }",
    "gamma G in C { cone x -> [ ]; }",
    "category C { objects: x } gamma G in C { cone y -> [ ]; }",
    "category C { objects: x } gamma G in C { cone x -> [ f ]; }",
    "category C { objects: x } gamma G in C { cone x -> [ id_x ] }",
    "category C { objects: x } gamma G in C { cone x [ id_x ]; }",
    "category C { objects: x, y arrows: f : x -> y } gamma G in C { cone y -> [ f ]; }",
    "diagram D : S -> C { }",
    "category C { objects: x } diagram D : C -> { }",
    "category C { objects: x } diagram D : -> C { }",
    "category C { objects: x } diagram D : C -> C",
    "category C { objects: x } extra",
    "category C { objects: x } }",
    "category C { objects: x ",
    "cat C { objects: x }",
    "category C { objects: x !! }",
    "category C { objects: x } class K in D { id_x }",
    "category C { objects: x } - category B { objects: y }",
    "category C { objects: x } functor F : C -> C { obj: x => x mor: id_x => nope }",
    "category C { objects: x arrows: f : x -> x, g : x -> x }",
};

} // namespace

int main() {
  // exhaustive small-instance theorem checks at the pinned scale:
  // categories with at most 3 objects and 6 morphisms, family bound 4
  SuiteOptions opt;
  SuiteResult r = run_suite(opt, &std::cerr);

  auto stat = [&](const CriterionStat& s) {
    std::string d = std::to_string(s.checked) + " checked, " + std::to_string(s.violations) + " violations";
    if (!s.witnesses.empty()) d += "; e.g. " + s.witnesses.front();
    return d;
  };
  std::cout << "corpus: " << r.categories << " categories, " << r.functors << " functors, " << r.lra_functors
            << " right multi-adjoints, " << r.seconds << "s\n";
  line("1", r.beck_chevalley.pass() && r.bc_seconds() <= 600.0, "Beck-Chevalley comparisons are isomorphisms",
       stat(r.beck_chevalley) + ", " + std::to_string(static_cast<int>(r.bc_seconds())) + "s of 600s budget");
  line("2", r.stable_agreement.pass(), "stability and multi-adjointness deciders agree", stat(r.stable_agreement));
  line("3", r.pi_adjunction.pass(), "product-completion extension is a right adjoint", stat(r.pi_adjunction));
  line("4", r.mreflect.pass(), "multireflective closure matches direct search", stat(r.mreflect));
  line("5", r.rigidity.pass(), "arrows connecting candidates are isomorphisms", stat(r.rigidity));
  line("6", r.gamma.pass(), "cone-class locality theorem", stat(r.gamma));

  // worked fixture: the V-shaped poset
  {
    const std::string units = run_json({"local-units", "-w", "fixtures/v.mcat", "-f", "U", "-B", "bot", "--json"}, 0);
    const std::string expected_units =
        R"({"command":"local-units","inputs":{"functor":"U","base":"bot"},"verdict":"computed","witnesses":[],)"
        R"("data":{"units":[{"index":0,"unit":"f","apex":"a"},{"index":1,"unit":"g","apex":"b"}],"components":2},"skipped":[]})";
    const std::string pi = run_json({"pi-adjunction", "-w", "fixtures/v.mcat", "-f", "U", "--json"}, 0);
    const std::string expected_pi =
        R"({"command":"pi-adjunction","inputs":{"functor":"U","family_bound":4},"verdict":"yes","witnesses":[],)"
        R"("data":{"L":{"bot":["a","b"],"a":["a"],"b":["b"]},"object_table":[)"
        R"({"base":"bot","object":"a","lhs":1,"rhs":1},{"base":"bot","object":"b","lhs":1,"rhs":1},)"
        R"({"base":"a","object":"a","lhs":1,"rhs":1},{"base":"a","object":"b","lhs":0,"rhs":0},)"
        R"({"base":"b","object":"a","lhs":0,"rhs":0},{"base":"b","object":"b","lhs":1,"rhs":1}],)"
        R"("pairs_checked":3757},"skipped":[]})";
    bool ok = units == expected_units && pi == expected_pi;
    line("7", ok, "V-poset fixture: two units under bot with apexes a,b; transpose hom count 1",
         ok ? "bit-exact" : "mismatch: " + units + " | " + pi);
  }

  // worked fixture: the three-chain factorization system
  {
    const std::string fs =
        run_json({"validate-fs", "-w", "fixtures/chain3.mcat", "-c", "C3", "-l", "L", "-r", "R", "--json"}, 0);
    const std::string expected_fs =
        R"({"command":"validate-fs","inputs":{"category":"C3","left":"L","right":"R"},"verdict":"yes",)"
        R"("witnesses":[],"data":{},"skipped":[]})";
    const std::string lr =
        run_json({"classify-lr", "-w", "fixtures/chain3.mcat", "-c", "C3", "-l", "L", "-r", "R", "--json"}, 0);
    const std::string expected_lr =
        R"({"command":"classify-lr","inputs":{"category":"C3","left":"L","right":"R"},"verdict":"computed",)"
        R"("witnesses":[],"data":{"terminal":"2","l_objects":["2"],"r_objects":["1","2"],"reflections":{)"
        R"("0":{"left":"c01","apex":"1","right":"c12"},"1":{"left":"id_1","apex":"1","right":"c12"},)"
        R"("2":{"left":"id_2","apex":"2","right":"id_2"}}},"skipped":[]})";
    bool ok = fs == expected_fs && lr == expected_lr;
    line("8", ok, "three-chain fixture: system accepted; right objects {1,2}, left {2}, reflection of 0 at 1",
         ok ? "bit-exact" : "mismatch: " + fs + " | " + lr);
  }

  line("9", r.lemmas.pass(), "factorization lemmas over every corpus system",
       stat(r.lemmas) + ", " + std::to_string(r.fs_instances) + " systems");

  // parser round-trips and positioned failures
  {
    bool ok = true;
    std::string detail;
    for (const char* path : {"fixtures/v.mcat", "fixtures/chain3.mcat", "fixtures/cospan.mcat"}) {
      Workspace ws = parse_workspace(slurp(path));
      std::string printed = print_workspace(ws);
      Workspace again = parse_workspace(printed);
      if (!tables_match(ws, again) || print_workspace(again) != printed) {
        ok = false;
        detail = std::string("round-trip drift on ") + path;
      }
    }
    int bad = 0, positioned = 0;
    for (const char* text : kMalformed) {
      ++bad;
      try {
        parse_workspace(text);
        ok = false;
        detail = "malformed input accepted: " + std::string(text);
      } catch (const Error& e) {
        if (e.line >= 1 && e.col >= 1) {
          ++positioned;
        } else {
          ok = false;
          detail = "unpositioned error for: " + std::string(text);
        }
      } catch (...) {
        ok = false;
        detail = "foreign exception for: " + std::string(text);
      }
    }
    if (bad < 50) {
      ok = false;
      detail = "only " + std::to_string(bad) + " malformed inputs";
    }
    line("10", ok, "parser round-trip and positioned errors",
         ok ? std::to_string(bad) + " malformed inputs, all positioned" : detail);
  }

  // supplementary theorem-shaped invariants, all expected clean
  for (const CriterionStat* s :
       {&r.conerve, &r.unit_fact, &r.unit_initial_slice, &r.relff_diag, &r.connected_limits, &r.wide_pullbacks})
    line("+", s->pass(), s->name, stat(*s));

  std::cout << (failures == 0 ? std::string("acceptance: all criteria satisfied\n")
                              : "acceptance: " + std::to_string(failures) + " failing\n");
  return failures == 0 ? 0 : 1;
}
