#include "multicat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "multicat/dsl.hpp"
#include "multicat/enumerate.hpp"
#include "multicat/family.hpp"
#include "multicat/gamma.hpp"
#include "multicat/lr.hpp"
#include "multicat/multiadjoint.hpp"
#include "multicat/multilimits.hpp"
#include "multicat/orthogonality.hpp"
#include "multicat/report.hpp"
#include "multicat/suite.hpp"

namespace mcat {

namespace {

struct Common {
  std::vector<std::string> workspaces;
  bool json = false;
  int cap = kDefaultCap;
  int max_obj = 3;
  int max_mor = 6;
  int family_bound = 4;
  int seed = 0; // reserved; enumeration is deterministic
};

void attach_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-w,--workspace", c.workspaces, "workspace file (.mcat), repeatable");
  cmd->add_flag("--json", c.json, "machine-readable report");
  cmd->add_option("--cap", c.cap, "size guard for constructed categories");
  cmd->add_option("--max-obj", c.max_obj, "corpus bound on objects");
  cmd->add_option("--max-mor", c.max_mor, "corpus bound on morphisms");
  cmd->add_option("--family-bound", c.family_bound, "family size bound for product-completion checks");
  cmd->add_option("--seed", c.seed, "reserved; enumeration is deterministic");
}

Workspace load(const Common& c) {
  Workspace ws;
  for (const auto& path : c.workspaces) {
    std::ifstream in(path);
    if (!in) throw Error(ErrKind::DanglingRef, "cannot open workspace file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    parse_workspace_into(buf.str(), ws);
  }
  return ws;
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Json name_list(const FinCategory& c, const std::vector<int>& ms, bool objects = false) {
  Json arr = Json::array();
  for (int m : ms) arr.push_back(objects ? c.objects[m] : c.morphisms[m].name);
  return arr;
}

MorphismClass class_of(const Workspace& ws, const std::string& name, const CatPtr& cat) {
  const auto& def = ws.class_named(name);
  if (def.cls.cat.get() != cat.get())
    throw Error(ErrKind::AmbientMismatch, "class '" + name + "' lives in a different category");
  return def.cls;
}

int emit(const Report& rep, const Common& c, std::ostream& out) {
  if (c.json)
    out << rep.to_json().dump() << "\n";
  else
    out << rep.human();
  return rep.exit_code();
}

struct DeriveSpec {
  std::vector<std::string> specs;
};

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite multi-adjoint computation engine"};
  app.require_subcommand(1);

  // one Common per subcommand so option pointers stay alive
  std::vector<std::unique_ptr<Common>> commons;
  auto common = [&](CLI::App* cmd) -> Common& {
    commons.push_back(std::make_unique<Common>());
    if (const char* env = std::getenv("MULTICAT_CAP")) commons.back()->cap = std::atoi(env);
    attach_common(cmd, *commons.back());
    return *commons.back();
  };

  struct {
    std::string cat, cat2, functor, diagram, gamma, cls_l, cls_r, cls_lp, mor, mor_u, mor_arrow;
    std::string obj_a, obj_b, obj_x, obj_y;
    std::string weak, square, objects, from, to, product, coconnected, pullback_arrows;
    std::vector<std::string> derive;
    bool terminal = false, strong = false, morphisms = false, wide = false, connected = false;
    bool candidate = false, diag = false, lifts_r = false, cancellation_only = false;
    int probe_bound = 3, arity = 3;
    long long mreflect_sample = 1;
    std::string side = "right";
  } o;

  auto* cmd_parse = app.add_subcommand("parse", "parse, validate and print the workspace");
  Common& c_parse = common(cmd_parse);
  cmd_parse->add_option("--derive", o.derive,
                        "derived category: opposite:C | slice:C:A | coslice:C:A | arrow:C | comma:F:B");

  auto* cmd_homs = app.add_subcommand("homs", "hom-set between two objects");
  Common& c_homs = common(cmd_homs);
  cmd_homs->add_option("-c,--category", o.cat)->required();
  cmd_homs->add_option("-X", o.obj_x)->required();
  cmd_homs->add_option("-Y", o.obj_y)->required();

  auto* cmd_components = app.add_subcommand("components", "connected components");
  Common& c_components = common(cmd_components);
  cmd_components->add_option("-c,--category", o.cat)->required();

  auto* cmd_multiinit = app.add_subcommand("multiinit", "multi-initial family and (weak) initial objects");
  Common& c_multiinit = common(cmd_multiinit);
  cmd_multiinit->add_option("-c,--category", o.cat)->required();
  cmd_multiinit->add_flag("--terminal", o.terminal, "compute the multi-terminal family instead");
  cmd_multiinit->add_option("--weak", o.weak, "comma-separated objects: check weak initiality");

  auto* cmd_ismadj = app.add_subcommand("is-multiadjoint", "decide right multi-adjointness");
  Common& c_ismadj = common(cmd_ismadj);
  cmd_ismadj->add_option("-f,--functor", o.functor)->required();

  auto* cmd_units = app.add_subcommand("local-units", "local units under a base object");
  Common& c_units = common(cmd_units);
  cmd_units->add_option("-f,--functor", o.functor)->required();
  cmd_units->add_option("-B", o.obj_b)->required();

  auto* cmd_ladj = app.add_subcommand("left-adjoint", "local left adjoint at an object, with triangle identities");
  Common& c_ladj = common(cmd_ladj);
  cmd_ladj->add_option("-f,--functor", o.functor)->required();
  cmd_ladj->add_option("-A", o.obj_a)->required();

  auto* cmd_bc = app.add_subcommand("beck-chevalley", "Beck-Chevalley comparison at (u, f)");
  Common& c_bc = common(cmd_bc);
  cmd_bc->add_option("-f,--functor", o.functor)->required();
  cmd_bc->add_option("-u", o.mor_u, "morphism of the source")->required();
  cmd_bc->add_option("--arrow", o.mor_arrow, "morphism of the target with cod = U(dom u)")->required();

  auto* cmd_conerve = app.add_subcommand("conerve", "co-nerve decomposition under a base object");
  Common& c_conerve = common(cmd_conerve);
  cmd_conerve->add_option("-f,--functor", o.functor)->required();
  cmd_conerve->add_option("-B", o.obj_b)->required();

  auto* cmd_sf = app.add_subcommand("stable-factor", "stable factorization / candidate checks");
  Common& c_sf = common(cmd_sf);
  cmd_sf->add_option("-f,--functor", o.functor)->required();
  cmd_sf->add_option("-m", o.mor, "morphism of the target")->required();
  cmd_sf->add_option("-A", o.obj_a, "declared apex in the source")->required();
  cmd_sf->add_flag("--candidate", o.candidate, "only decide the candidate property");
  cmd_sf->add_flag("--diag", o.diag, "only decide diagonal universality");

  auto* cmd_isstable = app.add_subcommand("is-stable", "independent stability decider");
  Common& c_isstable = common(cmd_isstable);
  cmd_isstable->add_option("-f,--functor", o.functor)->required();

  auto* cmd_orth = app.add_subcommand("orthogonal", "orthogonal class or lifting problem");
  Common& c_orth = common(cmd_orth);
  cmd_orth->add_option("-c,--category", o.cat)->required();
  cmd_orth->add_option("-l,--class", o.cls_l, "morphism class");
  cmd_orth->add_option("--side", o.side, "right (default) or left");
  cmd_orth->add_option("--square", o.square, "l,top,r,bottom: enumerate diagonal fillers");

  auto* cmd_vfs = app.add_subcommand("validate-fs", "validate a factorization system");
  Common& c_vfs = common(cmd_vfs);
  cmd_vfs->add_option("-c,--category", o.cat)->required();
  cmd_vfs->add_option("-l", o.cls_l)->required();
  cmd_vfs->add_option("-r", o.cls_r)->required();

  auto* cmd_sat = app.add_subcommand("saturate", "finite saturation closure of a class");
  Common& c_sat = common(cmd_sat);
  cmd_sat->add_option("-c,--category", o.cat)->required();
  cmd_sat->add_option("-l", o.cls_l)->required();

  auto* cmd_factor = app.add_subcommand("factor", "all class factorizations of a morphism");
  Common& c_factor = common(cmd_factor);
  cmd_factor->add_option("-c,--category", o.cat)->required();
  cmd_factor->add_option("-m", o.mor)->required();
  cmd_factor->add_option("-l", o.cls_l)->required();
  cmd_factor->add_option("-r", o.cls_r)->required();

  auto* cmd_relff = app.add_subcommand("relff", "relative full-faithfulness");
  Common& c_relff = common(cmd_relff);
  cmd_relff->add_option("-f,--functor", o.functor)->required();

  auto* cmd_glide = app.add_subcommand("glide", "gliding inclusion / lifting of right-class maps");
  Common& c_glide = common(cmd_glide);
  cmd_glide->add_option("-c,--category", o.cat);
  cmd_glide->add_option("-l", o.cls_l);
  cmd_glide->add_option("-r", o.cls_r);
  cmd_glide->add_option("--objects", o.objects, "comma-separated object set");
  cmd_glide->add_flag("--lifts-r", o.lifts_r, "check that the functor lifts right-class maps");
  cmd_glide->add_option("-f,--functor", o.functor);

  auto* cmd_fam = app.add_subcommand("family-hom", "free product completion: hom sets, products, coconnectedness");
  Common& c_fam = common(cmd_fam);
  cmd_fam->add_option("-c,--category", o.cat)->required();
  cmd_fam->add_option("--from", o.from, "comma-separated family");
  cmd_fam->add_option("--to", o.to, "comma-separated family");
  cmd_fam->add_option("--product", o.product, "semicolon-separated families to multiply");
  cmd_fam->add_option("--coconnected", o.coconnected, "family to probe for coconnectedness");
  cmd_fam->add_option("--probe-bound", o.probe_bound);

  auto* cmd_pi = app.add_subcommand("pi-adjunction", "verify the free product extension adjunction");
  Common& c_pi = common(cmd_pi);
  cmd_pi->add_option("-f,--functor", o.functor)->required();

  auto* cmd_mlim = app.add_subcommand("multilimit", "multilimit of a diagram");
  Common& c_mlim = common(cmd_mlim);
  cmd_mlim->add_option("-d,--diagram", o.diagram)->required();

  auto* cmd_mcolim = app.add_subcommand("multicolimit", "multicolimit of a diagram, with the hom formula");
  Common& c_mcolim = common(cmd_mcolim);
  cmd_mcolim->add_option("-d,--diagram", o.diagram)->required();

  auto* cmd_preserve = app.add_subcommand("preserve", "preservation of multilimits / wide pullbacks");
  Common& c_preserve = common(cmd_preserve);
  cmd_preserve->add_option("-f,--functor", o.functor)->required();
  cmd_preserve->add_option("-d,--diagram", o.diagram);
  cmd_preserve->add_flag("--wide", o.wide, "check wide pullback preservation instead");
  cmd_preserve->add_option("--arity", o.arity, "wide pullback arity cap");

  auto* cmd_mreflect = app.add_subcommand("mreflect", "multireflective closure constructions");
  Common& c_mreflect = common(cmd_mreflect);
  cmd_mreflect->add_option("-f,--functor", o.functor)->required();
  cmd_mreflect->add_option("-d,--diagram", o.diagram)->required();
  cmd_mreflect->add_flag("--connected", o.connected, "create a connected limit through the units");

  auto* cmd_gl = app.add_subcommand("gamma-local", "(strongly) local objects and local morphisms");
  Common& c_gl = common(cmd_gl);
  cmd_gl->add_option("-g,--gamma", o.gamma)->required();
  cmd_gl->add_option("-A", o.obj_a, "single object to test");
  cmd_gl->add_flag("--strong", o.strong);
  cmd_gl->add_flag("--morphisms", o.morphisms, "also list the local morphisms");

  auto* cmd_bg = app.add_subcommand("b-gamma", "the subcategory of local objects and local morphisms");
  Common& c_bg = common(cmd_bg);
  cmd_bg->add_option("-g,--gamma", o.gamma)->required();
  cmd_bg->add_flag("--strong", o.strong);

  auto* cmd_gv = app.add_subcommand("gamma-verify", "verify the locality theorem for a cone class");
  Common& c_gv = common(cmd_gv);
  cmd_gv->add_option("-g,--gamma", o.gamma)->required();
  cmd_gv->add_flag("--strong", o.strong);

  auto* cmd_clr = app.add_subcommand("classify-lr", "left/right objects and reflections");
  Common& c_clr = common(cmd_clr);
  cmd_clr->add_option("-c,--category", o.cat)->required();
  cmd_clr->add_option("-l", o.cls_l)->required();
  cmd_clr->add_option("-r", o.cls_r)->required();

  auto* cmd_reflect = app.add_subcommand("reflect", "universal property of the right reflection");
  Common& c_reflect = common(cmd_reflect);
  cmd_reflect->add_option("-c,--category", o.cat)->required();
  cmd_reflect->add_option("-l", o.cls_l)->required();
  cmd_reflect->add_option("-r", o.cls_r)->required();
  cmd_reflect->add_option("-A", o.obj_a)->required();

  auto* cmd_stalks = app.add_subcommand("stalks", "stalkwise classification over points / pullbacks");
  Common& c_stalks = common(cmd_stalks);
  cmd_stalks->add_option("-c,--category", o.cat)->required();
  cmd_stalks->add_option("-m", o.mor, "the bundle morphism");
  cmd_stalks->add_option("--lprime", o.cls_lp);
  cmd_stalks->add_option("--pullback", o.pullback_arrows, "f,g: compute the pullback of a cospan");

  auto* cmd_forms = app.add_subcommand("forms", "forms of an object");
  Common& c_forms = common(cmd_forms);
  cmd_forms->add_option("-c,--category", o.cat)->required();
  cmd_forms->add_option("--lprime", o.cls_lp)->required();
  cmd_forms->add_option("-r", o.cls_r)->required();
  cmd_forms->add_option("-X", o.obj_x)->required();

  auto* cmd_costable = app.add_subcommand("costable", "co-stable inclusion of forms over a base");
  Common& c_costable = common(cmd_costable);
  cmd_costable->add_option("-c,--category", o.cat)->required();
  cmd_costable->add_option("-l", o.cls_l)->required();
  cmd_costable->add_option("--lprime", o.cls_lp)->required();
  cmd_costable->add_option("-B", o.obj_b);
  cmd_costable->add_flag("--cancellation-only", o.cancellation_only);

  auto* cmd_corpus = app.add_subcommand("corpus", "exhaustive small-instance theorem suite");
  Common& c_corpus = common(cmd_corpus);
  cmd_corpus->add_option("--mreflect-sample", o.mreflect_sample, "run closure checks on every k-th inclusion");

  std::vector<const char*> argv;
  std::string prog = "multicat";
  argv.push_back(prog.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Report rep;
  const Common* cc = nullptr;
  try {
    if (*cmd_parse) {
      cc = &c_parse;
      rep.command = "parse";
      rep.inputs["workspace"] = c_parse.workspaces;
      Workspace ws = load(c_parse);
      Workspace derived_ws = ws;
      Json derived = Json::array();
      for (const auto& spec : o.derive) {
        auto parts = split_list(spec, ':');
        if (parts.empty()) throw Error(ErrKind::SyntaxError, "empty --derive spec");
        CatPtr dc;
        if (parts[0] == "opposite" && parts.size() == 2) {
          dc = std::make_shared<FinCategory>(opposite(*ws.category(parts[1])));
        } else if (parts[0] == "slice" && parts.size() == 3) {
          CatPtr base = ws.category(parts[1]);
          dc = slice(base, base->object_checked(parts[2]), c_parse.cap).cat;
        } else if (parts[0] == "coslice" && parts.size() == 3) {
          CatPtr base = ws.category(parts[1]);
          dc = coslice(base, base->object_checked(parts[2]), c_parse.cap).cat;
        } else if (parts[0] == "arrow" && parts.size() == 2) {
          dc = arrow_category(ws.category(parts[1]), c_parse.cap).cat;
        } else if (parts[0] == "comma" && parts.size() == 3) {
          const FinFunctor& u = ws.functor_named(parts[1]);
          dc = comma(u.target().object_checked(parts[2]), u, c_parse.cap).cat;
        } else {
          throw Error(ErrKind::SyntaxError, "bad --derive spec '" + spec + "'");
        }
        std::string dn = dc->name;
        for (char& ch : dn)
          if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') ch = '_';
        auto copy = std::make_shared<FinCategory>(*dc);
        copy->name = dn;
        derived_ws.categories.emplace_back(dn, copy);
        Json dj;
        dj["name"] = dn;
        dj["objects"] = copy->object_count();
        dj["morphisms"] = copy->morphism_count();
        derived.push_back(dj);
      }
      std::string text = print_workspace(derived_ws);
      rep.verdict = "computed";
      rep.data["categories"] = static_cast<int>(ws.categories.size());
      rep.data["functors"] = static_cast<int>(ws.functors.size());
      rep.data["classes"] = static_cast<int>(ws.classes.size());
      rep.data["gammas"] = static_cast<int>(ws.gammas.size());
      rep.data["diagrams"] = static_cast<int>(ws.diagrams.size());
      rep.data["derived"] = derived;
      rep.data["normalized"] = text;
      if (!c_parse.json) {
        out << text;
        return 0;
      }
      return emit(rep, c_parse, out);
    }

    if (*cmd_homs) {
      cc = &c_homs;
      rep.command = "homs";
      rep.inputs["category"] = o.cat;
      rep.inputs["X"] = o.obj_x;
      rep.inputs["Y"] = o.obj_y;
      Workspace ws = load(c_homs);
      CatPtr c = ws.category(o.cat);
      auto hs = c->hom(c->object_checked(o.obj_x), c->object_checked(o.obj_y));
      rep.verdict = "computed";
      rep.data["morphisms"] = name_list(*c, hs);
      rep.data["count"] = static_cast<int>(hs.size());
      return emit(rep, c_homs, out);
    }

    if (*cmd_components) {
      cc = &c_components;
      rep.command = "components";
      rep.inputs["category"] = o.cat;
      Workspace ws = load(c_components);
      CatPtr c = ws.category(o.cat);
      ComponentPartition p = connected_components(*c);
      rep.verdict = "computed";
      Json blocks = Json::array();
      for (const auto& blk : p.blocks) blocks.push_back(name_list(*c, blk, true));
      rep.data["blocks"] = blocks;
      rep.data["representatives"] = name_list(*c, p.representative, true);
      return emit(rep, c_components, out);
    }

    if (*cmd_multiinit) {
      cc = &c_multiinit;
      rep.command = "multiinit";
      rep.inputs["category"] = o.cat;
      Workspace ws = load(c_multiinit);
      CatPtr c = ws.category(o.cat);
      rep.data["initial_objects"] = name_list(*c, initial_objects(*c), true);
      rep.data["terminal_objects"] = name_list(*c, terminal_objects(*c), true);
      if (!o.weak.empty()) {
        rep.inputs["weak"] = o.weak;
        std::vector<int> s;
        for (const auto& n : split_list(o.weak)) s.push_back(c->object_checked(n));
        bool okw = is_weakly_initial(*c, s);
        rep.verdict = okw ? "yes" : "no";
        return emit(rep, c_multiinit, out);
      }
      rep.inputs["terminal"] = o.terminal;
      MultiInitialResult r = o.terminal ? multi_terminal_family(*c) : multi_initial_family(*c);
      if (r.ok()) {
        rep.verdict = "computed";
        rep.data["members"] = name_list(*c, r.family->members, true);
        Json wit = Json::object();
        for (int x = 0; x < c->object_count(); ++x) {
          Json e;
          e["member"] = c->objects[r.family->members[r.family->witness[x].first]];
          e["arrow"] = c->morphisms[r.family->witness[x].second].name;
          wit[c->objects[x]] = e;
        }
        rep.data["witness"] = wit;
      } else {
        rep.verdict = "no";
        rep.witnesses.push_back(Json{{"component", name_list(*c, r.absent->block_objects, true)}});
      }
      return emit(rep, c_multiinit, out);
    }

    if (*cmd_ismadj) {
      cc = &c_ismadj;
      rep.command = "is-multiadjoint";
      rep.inputs["functor"] = o.functor;
      Workspace ws = load(c_ismadj);
      const FinFunctor& f = ws.functor_named(o.functor);
      MraResult r = is_right_multi_adjoint(f);
      rep.data["note"] = r.note;
      if (r.value) {
        rep.verdict = "yes";
        Json units = Json::object();
        for (int base = 0; base < f.target().object_count(); ++base) {
          LocalUnitsResult lu = local_units(f, base);
          Json arr = Json::array();
          for (const auto& e : lu.record->entries) {
            Json u;
            u["index"] = e.index;
            u["unit"] = f.target().morphisms[e.unit_arrow].name;
            u["apex"] = f.source().objects[e.apex];
            arr.push_back(u);
          }
          units[f.target().objects[base]] = arr;
        }
        rep.data["units"] = units;
      } else {
        rep.verdict = "no";
        Json w;
        w["base"] = f.target().objects[r.lra.failing_base];
        Json comp = Json::array();
        for (int o2 : r.lra.absent->block_objects) {
          const auto& [a, g] = r.lra.failing_comma_objects[o2];
          comp.push_back(f.source().objects[a] + ":" + f.target().morphisms[g].name);
        }
        w["component"] = comp;
        rep.witnesses.push_back(w);
      }
      return emit(rep, c_ismadj, out);
    }

    if (*cmd_units) {
      cc = &c_units;
      rep.command = "local-units";
      rep.inputs["functor"] = o.functor;
      rep.inputs["base"] = o.obj_b;
      Workspace ws = load(c_units);
      const FinFunctor& f = ws.functor_named(o.functor);
      int base = f.target().object_checked(o.obj_b);
      LocalUnitsResult lu = local_units(f, base);
      if (lu.ok()) {
        rep.verdict = "computed";
        Json arr = Json::array();
        for (const auto& e : lu.record->entries) {
          Json u;
          u["index"] = e.index;
          u["unit"] = f.target().morphisms[e.unit_arrow].name;
          u["apex"] = f.source().objects[e.apex];
          arr.push_back(u);
        }
        rep.data["units"] = arr;
        rep.data["components"] = static_cast<int>(lu.record->entries.size());
      } else {
        rep.verdict = "no";
        Json comp = Json::array();
        for (int o2 : lu.absent->block_objects) {
          const auto& [a, g] = lu.comma_objects[o2];
          comp.push_back(f.source().objects[a] + ":" + f.target().morphisms[g].name);
        }
        rep.witnesses.push_back(Json{{"component", comp}});
      }
      return emit(rep, c_units, out);
    }

    if (*cmd_ladj) {
      cc = &c_ladj;
      rep.command = "left-adjoint";
      rep.inputs["functor"] = o.functor;
      rep.inputs["at"] = o.obj_a;
      Workspace ws = load(c_ladj);
      const FinFunctor& f = ws.functor_named(o.functor);
      LocalAdjunction adj = local_left_adjoint(f, f.source().object_checked(o.obj_a));
      rep.verdict = "computed";
      Json tbl = Json::object();
      const FinCategory& sb = *adj.target_slice.cat;
      const FinCategory& sa = *adj.source_slice.cat;
      for (int ob = 0; ob < sb.object_count(); ++ob) {
        Json e;
        e["object"] = sa.objects[adj.left.obj_map[ob]];
        e["unit"] = sb.morphisms[adj.unit_components[ob]].name;
        tbl[sb.objects[ob]] = e;
      }
      rep.data["left_adjoint"] = tbl;
      rep.data["triangle_identities"] = "verified";
      rep.data["source_slice_objects"] = sa.object_count();
      rep.data["target_slice_objects"] = sb.object_count();
      return emit(rep, c_ladj, out);
    }

    if (*cmd_bc) {
      cc = &c_bc;
      rep.command = "beck-chevalley";
      rep.inputs["functor"] = o.functor;
      rep.inputs["u"] = o.mor_u;
      rep.inputs["f"] = o.mor_arrow;
      Workspace ws = load(c_bc);
      const FinFunctor& f = ws.functor_named(o.functor);
      BCResult r = beck_chevalley(f, f.source().morphism_checked(o.mor_u), f.target().morphism_checked(o.mor_arrow));
      rep.verdict = r.is_iso ? "yes" : "no";
      rep.data["sigma"] = f.source().morphisms[r.sigma].name;
      rep.data["apex"] = f.source().objects[r.apex_to];
      if (r.inverse) rep.data["inverse"] = f.source().morphisms[*r.inverse].name;
      return emit(rep, c_bc, out);
    }

    if (*cmd_conerve) {
      cc = &c_conerve;
      rep.command = "conerve";
      rep.inputs["functor"] = o.functor;
      rep.inputs["base"] = o.obj_b;
      Workspace ws = load(c_conerve);
      const FinFunctor& f = ws.functor_named(o.functor);
      ConerveReport r = conerve_decomposition(f, f.target().object_checked(o.obj_b));
      rep.verdict = r.ok ? "yes" : "no";
      Json lines = Json::array();
      for (const auto& line : r.lines) {
        Json e;
        e["object"] = f.source().objects[line.obj];
        e["hom_count"] = line.hom_count;
        e["unit_counts"] = line.unit_counts;
        lines.push_back(e);
      }
      rep.data["lines"] = lines;
      return emit(rep, c_conerve, out);
    }

    if (*cmd_sf) {
      cc = &c_sf;
      rep.command = "stable-factor";
      rep.inputs["functor"] = o.functor;
      rep.inputs["morphism"] = o.mor;
      rep.inputs["apex"] = o.obj_a;
      Workspace ws = load(c_sf);
      const FinFunctor& f = ws.functor_named(o.functor);
      int m = f.target().morphism_checked(o.mor);
      int apex = f.source().object_checked(o.obj_a);
      if (o.candidate) {
        rep.verdict = is_candidate(f, m, apex) ? "yes" : "no";
        return emit(rep, c_sf, out);
      }
      if (o.diag) {
        rep.verdict = is_diagonally_universal(f, m) ? "yes" : "no";
        return emit(rep, c_sf, out);
      }
      StableFactorization r = stable_factorization(f, m, apex);
      rep.verdict = "computed";
      rep.data["candidate"] = f.target().morphisms[r.candidate].name;
      rep.data["apex"] = f.source().objects[r.apex];
      rep.data["right_part"] = f.source().morphisms[r.right_part].name;
      return emit(rep, c_sf, out);
    }

    if (*cmd_isstable) {
      cc = &c_isstable;
      rep.command = "is-stable";
      rep.inputs["functor"] = o.functor;
      Workspace ws = load(c_isstable);
      const FinFunctor& f = ws.functor_named(o.functor);
      StableResult r = is_stable(f);
      rep.verdict = r.value ? "yes" : "no";
      if (!r.value) {
        Json w;
        w["apex"] = f.source().objects[r.failing_obj];
        w["morphism"] = f.target().morphisms[r.failing_mor].name;
        rep.witnesses.push_back(w);
      }
      rep.data["agrees_with_multiadjoint"] = r.value == is_right_multi_adjoint(f).value;
      return emit(rep, c_isstable, out);
    }

    if (*cmd_orth) {
      cc = &c_orth;
      rep.command = "orthogonal";
      rep.inputs["category"] = o.cat;
      Workspace ws = load(c_orth);
      CatPtr c = ws.category(o.cat);
      if (!o.square.empty()) {
        rep.inputs["square"] = o.square;
        auto parts = split_list(o.square);
        if (parts.size() != 4) throw Error(ErrKind::NotASquare, "--square needs l,top,r,bottom");
        LiftReport r = lift(*c, c->morphism_checked(parts[0]), c->morphism_checked(parts[2]),
                            c->morphism_checked(parts[1]), c->morphism_checked(parts[3]));
        rep.verdict = "computed";
        rep.data["fillers"] = name_list(*c, r.fillers);
        return emit(rep, c_orth, out);
      }
      rep.inputs["class"] = o.cls_l;
      rep.inputs["side"] = o.side;
      MorphismClass cls = class_of(ws, o.cls_l, c);
      MorphismClass r = o.side == "left" ? left_orthogonal(*c, cls) : right_orthogonal(*c, cls);
      rep.verdict = "computed";
      rep.data["members"] = name_list(*c, r.members);
      return emit(rep, c_orth, out);
    }

    if (*cmd_vfs) {
      cc = &c_vfs;
      rep.command = "validate-fs";
      rep.inputs["category"] = o.cat;
      rep.inputs["left"] = o.cls_l;
      rep.inputs["right"] = o.cls_r;
      Workspace ws = load(c_vfs);
      CatPtr c = ws.category(o.cat);
      FsReport r = validate_factorization_system(*c, class_of(ws, o.cls_l, c), class_of(ws, o.cls_r, c));
      rep.verdict = r.valid ? "yes" : "no";
      for (const auto& fl : r.failures) rep.witnesses.push_back(Json{{"axiom", fl.axiom}, {"witness", fl.witness}});
      return emit(rep, c_vfs, out);
    }

    if (*cmd_sat) {
      cc = &c_sat;
      rep.command = "saturate";
      rep.inputs["category"] = o.cat;
      rep.inputs["class"] = o.cls_l;
      Workspace ws = load(c_sat);
      CatPtr c = ws.category(o.cat);
      SaturationResult r = saturate(*c, class_of(ws, o.cls_l, c), c_sat.cap);
      rep.verdict = "computed";
      rep.data["members"] = name_list(*c, r.closure.members);
      for (const auto& s : r.skipped)
        rep.skipped.push_back(Json{{"member", c->morphisms[s.member].name}, {"along", c->morphisms[s.along].name}});
      return emit(rep, c_sat, out);
    }

    if (*cmd_factor) {
      cc = &c_factor;
      rep.command = "factor";
      rep.inputs["category"] = o.cat;
      rep.inputs["morphism"] = o.mor;
      Workspace ws = load(c_factor);
      CatPtr c = ws.category(o.cat);
      auto facts = factor_via_classes(*c, c->morphism_checked(o.mor), class_of(ws, o.cls_l, c),
                                      class_of(ws, o.cls_r, c));
      rep.verdict = "computed";
      Json arr = Json::array();
      for (const auto& fc : facts)
        arr.push_back(Json{{"left", c->morphisms[fc.left].name},
                           {"apex", c->objects[fc.apex]},
                           {"right", c->morphisms[fc.right].name}});
      rep.data["factorizations"] = arr;
      return emit(rep, c_factor, out);
    }

    if (*cmd_relff) {
      cc = &c_relff;
      rep.command = "relff";
      rep.inputs["functor"] = o.functor;
      Workspace ws = load(c_relff);
      const FinFunctor& f = ws.functor_named(o.functor);
      RelffResult r = is_relatively_full_faithful(f);
      rep.verdict = r.value ? "yes" : "no";
      if (!r.value)
        rep.witnesses.push_back(Json{{"f", f.target().morphisms[r.witness_f].name},
                                     {"u1", f.source().morphisms[r.witness_u1].name},
                                     {"u2", f.source().morphisms[r.witness_u2].name},
                                     {"preimages", r.preimages}});
      return emit(rep, c_relff, out);
    }

    if (*cmd_glide) {
      cc = &c_glide;
      rep.command = "glide";
      Workspace ws = load(c_glide);
      if (o.lifts_r) {
        rep.inputs["functor"] = o.functor;
        rep.inputs["right"] = o.cls_r;
        const FinFunctor& f = ws.functor_named(o.functor);
        LiftsRResult r = lifts_r_maps(f, class_of(ws, o.cls_r, f.dst));
        rep.verdict = r.value ? "yes" : "no";
        if (!r.value)
          rep.witnesses.push_back(Json{{"object", f.source().objects[r.witness_obj]},
                                       {"morphism", f.target().morphisms[r.witness_mor].name}});
        return emit(rep, c_glide, out);
      }
      rep.inputs["category"] = o.cat;
      rep.inputs["left"] = o.cls_l;
      rep.inputs["right"] = o.cls_r;
      rep.inputs["objects"] = o.objects;
      CatPtr c = ws.category(o.cat);
      std::vector<int> objs;
      for (const auto& n : split_list(o.objects)) objs.push_back(c->object_checked(n));
      GlidingResult r = gliding_inclusion(c, class_of(ws, o.cls_l, c), class_of(ws, o.cls_r, c), objs);
      rep.verdict = "yes";
      rep.data["objects"] = r.subcat->object_count();
      rep.data["morphisms"] = r.subcat->morphism_count();
      rep.data["stable"] = true;
      rep.data["relff"] = true;
      return emit(rep, c_glide, out);
    }

    if (*cmd_fam) {
      cc = &c_fam;
      rep.command = "family-hom";
      rep.inputs["category"] = o.cat;
      Workspace ws = load(c_fam);
      CatPtr c = ws.category(o.cat);
      auto mk_family = [&](const std::string& spec) {
        FinFamily f{c, {}};
        for (const auto& n : split_list(spec)) f.assignment.push_back(c->object_checked(n));
        return f;
      };
      if (!o.product.empty()) {
        rep.inputs["product"] = o.product;
        std::vector<FinFamily> factors;
        for (const auto& part : split_list(o.product, ';')) factors.push_back(mk_family(part));
        FamilyProduct p = family_product(c, factors);
        rep.verdict = "computed";
        rep.data["index_size"] = p.product.size();
        rep.data["assignment"] = name_list(*c, p.product.assignment, true);
        rep.data["offsets"] = p.offsets;
        return emit(rep, c_fam, out);
      }
      if (!o.coconnected.empty()) {
        rep.inputs["family"] = o.coconnected;
        rep.inputs["probe_bound"] = o.probe_bound;
        rep.verdict = is_coconnected(mk_family(o.coconnected), o.probe_bound) ? "yes" : "no";
        return emit(rep, c_fam, out);
      }
      rep.inputs["from"] = o.from;
      rep.inputs["to"] = o.to;
      FinFamily from = mk_family(o.from), to = mk_family(o.to);
      auto homs = family_hom(from, to);
      rep.verdict = "computed";
      rep.data["count"] = static_cast<int>(homs.size());
      Json arr = Json::array();
      for (const auto& h : homs) {
        Json e;
        e["reindex"] = h.reindex;
        e["components"] = name_list(*c, h.components);
        arr.push_back(e);
      }
      rep.data["morphisms"] = arr;
      return emit(rep, c_fam, out);
    }

    if (*cmd_pi) {
      cc = &c_pi;
      rep.command = "pi-adjunction";
      rep.inputs["functor"] = o.functor;
      rep.inputs["family_bound"] = c_pi.family_bound;
      Workspace ws = load(c_pi);
      const FinFunctor& f = ws.functor_named(o.functor);
      PiAdjunctionReport r = verify_pi_adjunction(f, c_pi.family_bound);
      rep.verdict = r.ok ? "yes" : "no";
      if (!r.ok) rep.witnesses.push_back(r.failure);
      Json l = Json::object();
      for (int base = 0; base < f.target().object_count(); ++base) {
        UnitFamily uf = relative_left_adjoint_object(f, base);
        l[f.target().objects[base]] = name_list(f.source(), uf.family.assignment, true);
      }
      rep.data["L"] = l;
      Json tbl = Json::array();
      for (const auto& line : r.object_lines) {
        Json e;
        e["base"] = f.target().objects[line.target_family[0]];
        e["object"] = f.source().objects[line.source_family[0]];
        e["lhs"] = line.lhs;
        e["rhs"] = line.rhs;
        tbl.push_back(e);
      }
      rep.data["object_table"] = tbl;
      rep.data["pairs_checked"] = r.pairs_checked;
      return emit(rep, c_pi, out);
    }

    if (*cmd_mlim || *cmd_mcolim) {
      bool colim = static_cast<bool>(*cmd_mcolim);
      cc = colim ? &c_mcolim : &c_mlim;
      rep.command = colim ? "multicolimit" : "multilimit";
      rep.inputs["diagram"] = o.diagram;
      Workspace ws = load(*cc);
      const auto& dd = ws.diagram_named(o.diagram);
      Diagram d{dd.functor};
      MultiversalFamily fam = colim ? multicolimit(d, cc->cap) : multilimit(d, cc->cap);
      const FinCategory& amb = d.ambient();
      rep.data["cones"] = static_cast<int>(fam.cones.size());
      if (!fam.ok()) {
        rep.verdict = "no";
        Json comp = Json::array();
        for (int ix : fam.absent->block_objects) comp.push_back(amb.objects[fam.cones[ix].apex]);
        rep.witnesses.push_back(Json{{"component_apexes", comp}});
        return emit(rep, *cc, out);
      }
      rep.verdict = "computed";
      Json members = Json::array();
      for (size_t j = 0; j < fam.members.size(); ++j) {
        const ConeRecord& cr = fam.member_cone(static_cast<int>(j));
        Json e;
        e["apex"] = amb.objects[cr.apex];
        e["legs"] = name_list(amb, cr.legs);
        members.push_back(e);
      }
      rep.data["members"] = members;
      if (colim) {
        HomFormulaReport hf = verify_multicolimit_hom_formula(d, fam);
        rep.data["hom_formula_ok"] = hf.ok;
        Json lines = Json::array();
        for (const auto& line : hf.lines)
          lines.push_back(Json{{"object", amb.objects[line.obj]},
                               {"cocones", line.cocone_count},
                               {"member_hom_sum", line.member_hom_sum}});
        rep.data["hom_formula"] = lines;
      }
      return emit(rep, *cc, out);
    }

    if (*cmd_preserve) {
      cc = &c_preserve;
      rep.command = "preserve";
      rep.inputs["functor"] = o.functor;
      Workspace ws = load(c_preserve);
      const FinFunctor& f = ws.functor_named(o.functor);
      if (o.wide) {
        rep.inputs["arity"] = o.arity;
        WidePullbackReport r = preserves_wide_pullbacks(f, o.arity);
        rep.verdict = r.value ? "yes" : "no";
        rep.data["checked"] = r.checked;
        rep.skipped.push_back(Json{{"diagrams_without_limit", r.skipped}});
        if (!r.value) rep.witnesses.push_back(Json{{"arrows", name_list(f.source(), r.witness_arrows)}, {"detail", r.detail}});
        return emit(rep, c_preserve, out);
      }
      rep.inputs["diagram"] = o.diagram;
      const auto& dd = ws.diagram_named(o.diagram);
      PreservationReport r = preserves_multilimits(f, Diagram{dd.functor}, c_preserve.cap);
      if (r.source_absent) throw Error(ErrKind::NoTargetLimit, "the source multilimit is absent");
      rep.verdict = r.preserved ? "yes" : "no";
      rep.data["vacuous"] = r.vacuous;
      rep.data["partition"] = r.partition;
      if (!r.preserved) rep.witnesses.push_back(r.detail);
      return emit(rep, c_preserve, out);
    }

    if (*cmd_mreflect) {
      cc = &c_mreflect;
      rep.command = "mreflect";
      rep.inputs["functor"] = o.functor;
      rep.inputs["diagram"] = o.diagram;
      Workspace ws = load(c_mreflect);
      const FinFunctor& f = ws.functor_named(o.functor);
      const auto& dd = ws.diagram_named(o.diagram);
      Diagram d{dd.functor};
      if (o.connected) {
        ConnectedLimitResult r = connected_limit_via_units(f, d, c_mreflect.cap);
        rep.verdict = "computed";
        rep.data["apex"] = f.source().objects[r.cone.apex];
        rep.data["legs"] = name_list(f.source(), r.cone.legs);
        rep.data["unit"] = f.target().morphisms[r.unit_arrow].name;
        rep.data["unit_inverse"] = f.target().morphisms[r.unit_inverse].name;
        return emit(rep, c_mreflect, out);
      }
      MreflectResult r = multireflective_multicolimit(f, d, c_mreflect.cap);
      rep.verdict = r.matches ? "yes" : "no";
      Json members = Json::array();
      for (const auto& cr : r.family)
        members.push_back(Json{{"apex", f.source().objects[cr.apex]}, {"legs", name_list(f.source(), cr.legs)}});
      rep.data["family"] = members;
      rep.data["direct_members"] = static_cast<int>(r.direct.members.size());
      return emit(rep, c_mreflect, out);
    }

    if (*cmd_gl) {
      cc = &c_gl;
      rep.command = "gamma-local";
      rep.inputs["gamma"] = o.gamma;
      rep.inputs["strong"] = o.strong;
      Workspace ws = load(c_gl);
      const auto& gd = ws.gamma_named(o.gamma);
      const FinCategory& c = *gd.gamma.cat;
      if (!o.obj_a.empty()) {
        rep.inputs["object"] = o.obj_a;
        int obj = c.object_checked(o.obj_a);
        bool loc = o.strong ? is_strongly_gamma_local(c, gd.gamma, obj) : is_gamma_local(c, gd.gamma, obj);
        rep.verdict = loc ? "yes" : "no";
        return emit(rep, c_gl, out);
      }
      rep.verdict = "computed";
      Json locals = Json::array(), strongs = Json::array();
      for (int x = 0; x < c.object_count(); ++x) {
        if (is_gamma_local(c, gd.gamma, x)) locals.push_back(c.objects[x]);
        if (is_strongly_gamma_local(c, gd.gamma, x)) strongs.push_back(c.objects[x]);
      }
      rep.data["local_objects"] = locals;
      rep.data["strongly_local_objects"] = strongs;
      if (o.morphisms) rep.data["local_morphisms"] = name_list(c, gamma_local_morphisms(c, gd.gamma).members);
      return emit(rep, c_gl, out);
    }

    if (*cmd_bg) {
      cc = &c_bg;
      rep.command = "b-gamma";
      rep.inputs["gamma"] = o.gamma;
      rep.inputs["strong"] = o.strong;
      Workspace ws = load(c_bg);
      const auto& gd = ws.gamma_named(o.gamma);
      BGammaResult r = build_b_gamma(gd.gamma.cat, gd.gamma, o.strong);
      rep.verdict = "computed";
      rep.data["objects"] = name_list(*gd.gamma.cat, r.local_objects, true);
      rep.data["morphisms"] = name_list(*gd.gamma.cat, r.local_morphisms);
      return emit(rep, c_bg, out);
    }

    if (*cmd_gv) {
      cc = &c_gv;
      rep.command = "gamma-verify";
      rep.inputs["gamma"] = o.gamma;
      rep.inputs["strong"] = o.strong;
      Workspace ws = load(c_gv);
      const auto& gd = ws.gamma_named(o.gamma);
      GammaTheoremReport r = verify_gamma_theorem(gd.gamma.cat, gd.gamma, o.strong);
      rep.verdict = r.all() ? "yes" : "no";
      rep.data["relff"] = r.relff;
      rep.data["stable"] = r.stable;
      rep.data["multi_adjoint"] = r.multi_adjoint;
      rep.data["gliding"] = r.gliding;
      rep.data["units_in_saturated_class"] = r.units_in_saturation;
      rep.data["note"] = "finite shadow: filtered-colimit content is out of scope at this scale";
      return emit(rep, c_gv, out);
    }

    if (*cmd_clr) {
      cc = &c_clr;
      rep.command = "classify-lr";
      rep.inputs["category"] = o.cat;
      rep.inputs["left"] = o.cls_l;
      rep.inputs["right"] = o.cls_r;
      Workspace ws = load(c_clr);
      CatPtr c = ws.category(o.cat);
      LRClassification r = classify_lr(c, class_of(ws, o.cls_l, c), class_of(ws, o.cls_r, c));
      rep.verdict = "computed";
      rep.data["terminal"] = c->objects[r.terminal];
      rep.data["l_objects"] = name_list(*c, r.l_objects, true);
      rep.data["r_objects"] = name_list(*c, r.r_objects, true);
      Json refl = Json::object();
      for (int x = 0; x < c->object_count(); ++x)
        refl[c->objects[x]] = Json{{"left", c->morphisms[r.reflections[x].left].name},
                                   {"apex", c->objects[r.reflections[x].apex]},
                                   {"right", c->morphisms[r.reflections[x].right].name}};
      rep.data["reflections"] = refl;
      return emit(rep, c_clr, out);
    }

    if (*cmd_reflect) {
      cc = &c_reflect;
      rep.command = "reflect";
      rep.inputs["category"] = o.cat;
      rep.inputs["object"] = o.obj_a;
      Workspace ws = load(c_reflect);
      CatPtr c = ws.category(o.cat);
      ReflectionUniversalReport r = reflection_universal(c, class_of(ws, o.cls_l, c), class_of(ws, o.cls_r, c),
                                                         c->object_checked(o.obj_a));
      rep.verdict = r.ok ? "yes" : "no";
      rep.data["checked"] = r.checked;
      if (!r.ok) rep.witnesses.push_back(r.failure);
      return emit(rep, c_reflect, out);
    }

    if (*cmd_stalks) {
      cc = &c_stalks;
      rep.command = "stalks";
      rep.inputs["category"] = o.cat;
      Workspace ws = load(c_stalks);
      CatPtr c = ws.category(o.cat);
      if (!o.pullback_arrows.empty()) {
        rep.inputs["pullback"] = o.pullback_arrows;
        auto parts = split_list(o.pullback_arrows);
        if (parts.size() != 2) throw Error(ErrKind::NotASquare, "--pullback needs f,g");
        auto pb = pullback(*c, c->morphism_checked(parts[0]), c->morphism_checked(parts[1]));
        if (pb) {
          rep.verdict = "computed";
          rep.data["apex"] = c->objects[pb->apex];
          rep.data["p"] = c->morphisms[pb->p].name;
          rep.data["q"] = c->morphisms[pb->q].name;
        } else {
          rep.verdict = "no";
          rep.witnesses.push_back("no pullback exists");
        }
        return emit(rep, c_stalks, out);
      }
      rep.inputs["morphism"] = o.mor;
      rep.inputs["lprime"] = o.cls_lp;
      StalkReport r = stalkwise_classify(c, c->morphism_checked(o.mor), class_of(ws, o.cls_lp, c));
      rep.verdict = r.stalkwise ? "yes" : "no";
      Json lines = Json::array();
      for (const auto& line : r.lines) {
        Json e;
        e["point"] = c->morphisms[line.point].name;
        e["exists"] = line.exists;
        if (line.exists) {
          e["fiber"] = c->objects[line.fiber_obj];
          e["in_lprime"] = line.in_lprime;
        } else {
          rep.skipped.push_back(Json{{"missing_fiber", c->morphisms[line.point].name}});
        }
        lines.push_back(e);
      }
      rep.data["stalks"] = lines;
      rep.data["partial"] = r.partial;
      return emit(rep, c_stalks, out);
    }

    if (*cmd_forms) {
      cc = &c_forms;
      rep.command = "forms";
      rep.inputs["category"] = o.cat;
      rep.inputs["object"] = o.obj_x;
      Workspace ws = load(c_forms);
      CatPtr c = ws.category(o.cat);
      auto fs = lprime_forms(*c, class_of(ws, o.cls_lp, c), class_of(ws, o.cls_r, c), c->object_checked(o.obj_x));
      rep.verdict = "computed";
      rep.data["forms"] = name_list(*c, fs);
      return emit(rep, c_forms, out);
    }

    if (*cmd_costable) {
      cc = &c_costable;
      rep.command = "costable";
      rep.inputs["category"] = o.cat;
      Workspace ws = load(c_costable);
      CatPtr c = ws.category(o.cat);
      MorphismClass l = class_of(ws, o.cls_l, c);
      MorphismClass lp = class_of(ws, o.cls_lp, c);
      if (o.cancellation_only) {
        CancellationResult r = check_right_l_cancellation(*c, l, lp);
        rep.verdict = r.value ? "yes" : "no";
        if (!r.value)
          rep.witnesses.push_back(Json{{"l", c->morphisms[r.witness_l].name}, {"f", c->morphisms[r.witness_f].name}});
        return emit(rep, c_costable, out);
      }
      rep.inputs["base"] = o.obj_b;
      CostableReport r = costable_inclusion_check(c, l, lp, c->object_checked(o.obj_b));
      rep.verdict = (r.costable && r.relff) ? "yes" : "no";
      rep.data["cancellation"] = r.cancellation;
      rep.data["costable"] = r.costable;
      rep.data["relff"] = r.relff;
      rep.data["forms"] = r.objects;
      return emit(rep, c_costable, out);
    }

    if (*cmd_corpus) {
      cc = &c_corpus;
      rep.command = "corpus";
      SuiteOptions sopt;
      sopt.max_obj = c_corpus.max_obj;
      sopt.max_mor = c_corpus.max_mor;
      sopt.family_bound = c_corpus.family_bound;
      sopt.cap = c_corpus.cap;
      sopt.mreflect_sample = o.mreflect_sample;
      rep.inputs["max_obj"] = sopt.max_obj;
      rep.inputs["max_mor"] = sopt.max_mor;
      rep.inputs["family_bound"] = sopt.family_bound;
      SuiteResult r = run_suite(sopt, c_corpus.json ? nullptr : &err);
      rep.verdict = r.all_pass() ? "yes" : "no";
      rep.data["categories"] = r.categories;
      rep.data["functors"] = r.functors;
      rep.data["multiadjoint_functors"] = r.lra_functors;
      rep.data["full_faithful_inclusions"] = r.full_faithful_rma;
      rep.data["gamma_instances"] = r.gamma_instances;
      rep.data["factorization_systems"] = r.fs_instances;
      rep.data["seconds"] = r.seconds;
      Json checks = Json::array();
      for (const auto* s : r.all()) {
        Json e;
        e["name"] = s->name;
        e["checked"] = s->checked;
        e["violations"] = s->violations;
        if (!s->witnesses.empty()) e["witnesses"] = s->witnesses;
        checks.push_back(e);
        if (!s->pass())
          rep.witnesses.push_back(Json{{"criterion", s->name}, {"violations", s->violations}});
      }
      rep.data["checks"] = checks;
      if (!c_corpus.json) {
        for (const auto* s : r.all())
          out << (s->pass() ? "PASS" : "FAIL") << "  " << s->name << "  (" << s->checked << " checked, "
              << s->violations << " violations)\n";
        out << (r.all_pass() ? "corpus: all checks passed\n" : "corpus: FAILURES\n");
        return r.all_pass() ? 0 : 1;
      }
      return emit(rep, c_corpus, out);
    }
  } catch (const Error& e) {
    rep.verdict = "error";
    Json w;
    w["kind"] = err_kind_name(e.kind);
    w["message"] = e.what();
    if (e.line >= 0) {
      w["line"] = e.line;
      w["col"] = e.col;
    }
    rep.witnesses.push_back(w);
    if (cc && cc->json) {
      out << rep.to_json().dump() << "\n";
    } else {
      err << "error [" << err_kind_name(e.kind) << "] " << e.what();
      if (e.line >= 0) err << " at line " << e.line << ", column " << e.col;
      err << "\n";
    }
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

} // namespace mcat
