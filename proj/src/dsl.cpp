#include "multicat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mcat {

CatPtr Workspace::category(const std::string& name) const {
  for (const auto& [n, c] : categories)
    if (n == name) return c;
  throw Error(ErrKind::DanglingRef, "unknown category '" + name + "'");
}

const FinFunctor& Workspace::functor_named(const std::string& name) const {
  for (const auto& [n, f] : functors)
    if (n == name) return f;
  throw Error(ErrKind::DanglingRef, "unknown functor '" + name + "'");
}

const Workspace::ClassDef& Workspace::class_named(const std::string& name) const {
  for (const auto& c : classes)
    if (c.name == name) return c;
  throw Error(ErrKind::DanglingRef, "unknown class '" + name + "'");
}

const Workspace::GammaDef& Workspace::gamma_named(const std::string& name) const {
  for (const auto& g : gammas)
    if (g.name == name) return g;
  throw Error(ErrKind::DanglingRef, "unknown gamma '" + name + "'");
}

const Workspace::DiagramDef& Workspace::diagram_named(const std::string& name) const {
  for (const auto& d : diagrams)
    if (d.name == name) return d;
  throw Error(ErrKind::DanglingRef, "unknown diagram '" + name + "'");
}

namespace {

enum class Tok {
  Ident,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Colon,
  Comma,
  Semicolon,
  Dot,
  Equals,
  Arrow,    // ->
  FatArrow, // =>
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::Dot: return "'.'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto bump = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    int tl = line, tc = col;
    if (ident_char(c)) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), tl, tc});
      bump(j - i);
      continue;
    }
    auto push1 = [&](Tok t) {
      out.push_back({t, std::string(1, c), tl, tc});
      bump(1);
    };
    switch (c) {
      case '{': push1(Tok::LBrace); break;
      case '}': push1(Tok::RBrace); break;
      case '[': push1(Tok::LBracket); break;
      case ']': push1(Tok::RBracket); break;
      case ':': push1(Tok::Colon); break;
      case ',': push1(Tok::Comma); break;
      case ';': push1(Tok::Semicolon); break;
      case '.': push1(Tok::Dot); break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::FatArrow, "=>", tl, tc});
          bump(2);
        } else {
          push1(Tok::Equals);
        }
        break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", tl, tc});
          bump(2);
        } else {
          throw Error(ErrKind::SyntaxError, "stray '-'", tl, tc);
        }
        break;
      default:
        throw Error(ErrKind::SyntaxError, std::string("unexpected character '") + c + "'", tl, tc);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const char* const kKeywords[] = {"category", "functor", "class", "gamma", "diagram", "objects",
                                 "arrows",   "compose", "obj",   "mor",   "cone",    "in"};

bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords)
    if (s == k) return true;
  return false;
}

class Parser {
public:
  Parser(const std::string& text, Workspace& ws) : toks_(tokenize(text)), ws_(ws) {}

  void run() {
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind != Tok::Ident)
        throw Error(ErrKind::SyntaxError, std::string("expected a block, found ") + tok_name(t.kind), t.line, t.col);
      if (t.text == "category")
        parse_category();
      else if (t.text == "functor")
        parse_functor();
      else if (t.text == "class")
        parse_class();
      else if (t.text == "gamma")
        parse_gamma();
      else if (t.text == "diagram")
        parse_diagram();
      else
        throw Error(ErrKind::SyntaxError, "unknown block '" + t.text + "'", t.line, t.col);
    }
  }

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  Workspace& ws_;

  const Token& peek(int ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  Token expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind)
      throw Error(ErrKind::SyntaxError,
                  std::string("expected ") + tok_name(kind) + ", found " + tok_name(t.kind) +
                      (t.text.empty() ? "" : " '" + t.text + "'"),
                  t.line, t.col);
    return take();
  }
  Token expect_name() {
    Token t = expect(Tok::Ident);
    if (is_keyword(t.text))
      throw Error(ErrKind::SyntaxError, "'" + t.text + "' is a reserved word", t.line, t.col);
    return t;
  }
  bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
  void expect_keyword(const char* kw) {
    const Token& t = peek();
    if (!at_keyword(kw))
      throw Error(ErrKind::SyntaxError,
                  std::string("expected '") + kw + "', found " + tok_name(t.kind) +
                      (t.text.empty() ? "" : " '" + t.text + "'"),
                  t.line, t.col);
    take();
  }

  void check_fresh_top_level(const std::string& name, const Token& at) {
    bool dup = false;
    for (const auto& [n, c] : ws_.categories) dup |= n == name;
    for (const auto& [n, f] : ws_.functors) dup |= n == name;
    for (const auto& c : ws_.classes) dup |= c.name == name;
    for (const auto& g : ws_.gammas) dup |= g.name == name;
    for (const auto& d : ws_.diagrams) dup |= d.name == name;
    if (dup) throw Error(ErrKind::DuplicateName, "redefinition of '" + name + "'", at.line, at.col);
  }

  template <typename Fn>
  auto with_position(const Token& at, Fn&& fn) {
    try {
      return fn();
    } catch (Error& e) {
      if (e.line < 0) throw Error(e.kind, e.what(), at.line, at.col);
      throw;
    }
  }

  void parse_category() {
    take(); // category
    Token name = expect_name();
    check_fresh_top_level(name.text, name);
    expect(Tok::LBrace);
    RawCategory raw;
    raw.name = name.text;
    expect_keyword("objects");
    expect(Tok::Colon);
    if (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
      raw.objects.push_back(expect_name().text);
      while (peek().kind == Tok::Comma) {
        take();
        raw.objects.push_back(expect_name().text);
      }
    }
    if (at_keyword("arrows")) {
      take();
      expect(Tok::Colon);
      while (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
        std::string an = expect_name().text;
        expect(Tok::Colon);
        std::string d = expect_name().text;
        expect(Tok::Arrow);
        std::string c = expect_name().text;
        raw.arrows.push_back({an, d, c});
      }
    }
    if (at_keyword("compose")) {
      take();
      expect(Tok::Colon);
      while (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
        std::string g = expect_name().text;
        expect(Tok::Dot);
        std::string f = expect_name().text;
        expect(Tok::Equals);
        std::string h = expect_name().text;
        raw.composites.push_back({g, f, h});
      }
    }
    expect(Tok::RBrace);
    FinCategory cat = with_position(name, [&] { return validate_category(raw); });
    ws_.categories.emplace_back(name.text, std::make_shared<FinCategory>(std::move(cat)));
  }

  void parse_mapping_body(RawFunctor& raw) {
    expect(Tok::LBrace);
    if (at_keyword("obj")) {
      take();
      expect(Tok::Colon);
      while (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
        std::string from = expect_name().text;
        expect(Tok::FatArrow);
        std::string to = expect_name().text;
        raw.obj_entries.push_back({from, to});
      }
    }
    if (at_keyword("mor")) {
      take();
      expect(Tok::Colon);
      while (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
        std::string from = expect_name().text;
        expect(Tok::FatArrow);
        std::string to = expect_name().text;
        raw.mor_entries.push_back({from, to});
      }
    }
    expect(Tok::RBrace);
  }

  void parse_functor() {
    take(); // functor
    Token name = expect_name();
    check_fresh_top_level(name.text, name);
    expect(Tok::Colon);
    Token src = expect_name();
    expect(Tok::Arrow);
    Token dst = expect_name();
    RawFunctor raw;
    raw.name = name.text;
    raw.src = src.text;
    raw.dst = dst.text;
    parse_mapping_body(raw);
    FinFunctor f =
        with_position(name, [&] { return validate_functor(raw, ws_.category(raw.src), ws_.category(raw.dst)); });
    ws_.functors.emplace_back(name.text, std::move(f));
  }

  void parse_class() {
    take(); // class
    Token name = expect_name();
    check_fresh_top_level(name.text, name);
    expect_keyword("in");
    Token cat_name = expect_name();
    expect(Tok::LBrace);
    std::vector<std::string> members;
    if (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
      members.push_back(expect_name().text);
      while (peek().kind == Tok::Comma) {
        take();
        members.push_back(expect_name().text);
      }
    }
    expect(Tok::RBrace);
    with_position(name, [&] {
      CatPtr cat = ws_.category(cat_name.text);
      std::vector<int> ms;
      for (const auto& m : members) ms.push_back(cat->morphism_checked(m));
      ws_.classes.push_back({name.text, cat_name.text, MorphismClass::of(cat, std::move(ms))});
      return 0;
    });
  }

  void parse_gamma() {
    take(); // gamma
    Token name = expect_name();
    check_fresh_top_level(name.text, name);
    expect_keyword("in");
    Token cat_name = expect_name();
    expect(Tok::LBrace);
    std::vector<std::pair<std::string, std::vector<std::string>>> cones;
    while (at_keyword("cone")) {
      take();
      std::string vertex = expect_name().text;
      expect(Tok::Arrow);
      expect(Tok::LBracket);
      std::vector<std::string> legs;
      if (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
        legs.push_back(expect_name().text);
        while (peek().kind == Tok::Comma) {
          take();
          legs.push_back(expect_name().text);
        }
      }
      expect(Tok::RBracket);
      expect(Tok::Semicolon);
      cones.push_back({vertex, std::move(legs)});
    }
    expect(Tok::RBrace);
    with_position(name, [&] {
      CatPtr cat = ws_.category(cat_name.text);
      std::vector<ConeSpec> specs;
      for (const auto& [v, legs] : cones) {
        ConeSpec s;
        s.vertex = cat->object_checked(v);
        for (const auto& l : legs) s.legs.push_back(cat->morphism_checked(l));
        specs.push_back(std::move(s));
      }
      ws_.gammas.push_back({name.text, cat_name.text, GammaClass::of(cat, std::move(specs))});
      return 0;
    });
  }

  void parse_diagram() {
    take(); // diagram
    Token name = expect_name();
    check_fresh_top_level(name.text, name);
    expect(Tok::Colon);
    Token shape = expect_name();
    expect(Tok::Arrow);
    Token cat = expect_name();
    RawFunctor raw;
    raw.name = name.text;
    raw.src = shape.text;
    raw.dst = cat.text;
    parse_mapping_body(raw);
    FinFunctor f =
        with_position(name, [&] { return validate_functor(raw, ws_.category(raw.src), ws_.category(raw.dst)); });
    ws_.diagrams.push_back({name.text, shape.text, cat.text, std::move(f)});
  }
};

} // namespace

void parse_workspace_into(const std::string& text, Workspace& ws) { Parser(text, ws).run(); }

Workspace parse_workspace(const std::string& text) {
  Workspace ws;
  parse_workspace_into(text, ws);
  return ws;
}

std::string print_workspace(const Workspace& ws) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << "\n";
    first = false;
  };
  for (const auto& [name, cp] : ws.categories) {
    const FinCategory& c = *cp;
    sep();
    out << "category " << name << " {\n  objects:";
    for (int i = 0; i < c.object_count(); ++i) out << (i ? ", " : " ") << c.objects[i];
    out << "\n";
    bool any_arrow = false;
    for (int m = 0; m < c.morphism_count(); ++m)
      if (!c.is_identity(m)) any_arrow = true;
    if (any_arrow) {
      out << "  arrows:\n";
      for (int m = 0; m < c.morphism_count(); ++m)
        if (!c.is_identity(m))
          out << "    " << c.morphisms[m].name << " : " << c.objects[c.dom(m)] << " -> " << c.objects[c.cod(m)]
              << "\n";
      bool any_comp = false;
      for (int g = 0; g < c.morphism_count() && !any_comp; ++g)
        for (int f = 0; f < c.morphism_count() && !any_comp; ++f)
          if (!c.is_identity(g) && !c.is_identity(f) && c.composable(g, f)) any_comp = true;
      if (any_comp) {
        out << "  compose:\n";
        for (int g = 0; g < c.morphism_count(); ++g)
          for (int f = 0; f < c.morphism_count(); ++f) {
            if (c.is_identity(g) || c.is_identity(f) || !c.composable(g, f)) continue;
            out << "    " << c.morphisms[g].name << " . " << c.morphisms[f].name << " = "
                << c.morphisms[c.compose(g, f)].name << "\n";
          }
      }
    }
    out << "}\n";
  }
  auto print_mapping = [&](const FinFunctor& f) {
    const FinCategory& a = f.source();
    const FinCategory& b = f.target();
    out << " {\n";
    if (a.object_count() > 0) {
      out << "  obj:\n";
      for (int x = 0; x < a.object_count(); ++x)
        out << "    " << a.objects[x] << " => " << b.objects[f.obj_map[x]] << "\n";
    }
    bool any = false;
    for (int m = 0; m < a.morphism_count(); ++m)
      if (!a.is_identity(m)) any = true;
    if (any) {
      out << "  mor:\n";
      for (int m = 0; m < a.morphism_count(); ++m)
        if (!a.is_identity(m))
          out << "    " << a.morphisms[m].name << " => " << b.morphisms[f.mor_map[m]].name << "\n";
    }
    out << "}\n";
  };
  for (const auto& [name, f] : ws.functors) {
    sep();
    std::string src_name, dst_name;
    for (const auto& [n, c] : ws.categories) {
      if (c.get() == f.src.get()) src_name = n;
      if (c.get() == f.dst.get()) dst_name = n;
    }
    out << "functor " << name << " : " << src_name << " -> " << dst_name;
    print_mapping(f);
  }
  for (const auto& cd : ws.classes) {
    sep();
    out << "class " << cd.name << " in " << cd.cat << " {";
    const FinCategory& c = *cd.cls.cat;
    for (size_t i = 0; i < cd.cls.members.size(); ++i)
      out << (i ? ", " : " ") << c.morphisms[cd.cls.members[i]].name;
    out << " }\n";
  }
  for (const auto& gd : ws.gammas) {
    sep();
    out << "gamma " << gd.name << " in " << gd.cat << " {\n";
    const FinCategory& c = *gd.gamma.cat;
    for (const auto& cone : gd.gamma.cones) {
      out << "  cone " << c.objects[cone.vertex] << " -> [";
      for (size_t i = 0; i < cone.legs.size(); ++i)
        out << (i ? ", " : " ") << c.morphisms[cone.legs[i]].name;
      out << (cone.legs.empty() ? "];\n" : " ];\n");
    }
    out << "}\n";
  }
  for (const auto& dd : ws.diagrams) {
    sep();
    out << "diagram " << dd.name << " : " << dd.shape << " -> " << dd.cat;
    print_mapping(dd.functor);
  }
  return out.str();
}

} // namespace mcat
