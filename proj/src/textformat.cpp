#include "crossmod/textformat.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace crossmod {

std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Group: return "group";
    case BlockKind::Hom: return "hom";
    case BlockKind::Action: return "action";
    case BlockKind::Presentation: return "presentation";
    case BlockKind::PreCrossed: return "precrossed";
    case BlockKind::XMod: return "xmod";
    case BlockKind::X2Mod: return "x2mod";
    case BlockKind::XMorphism: return "xmorphism";
    case BlockKind::X2Morphism: return "x2morphism";
  }
  return "?";
}

namespace {

constexpr BlockKind kAllKinds[] = {BlockKind::Group,      BlockKind::Hom,   BlockKind::Action,
                                   BlockKind::Presentation, BlockKind::PreCrossed, BlockKind::XMod,
                                   BlockKind::X2Mod,      BlockKind::XMorphism, BlockKind::X2Morphism};

std::optional<BlockKind> kind_from(std::string_view s) {
  for (BlockKind k : kAllKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Int, String, Punct, End };

struct Token {
  Tok type;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  Lexer(std::string_view s, std::string source) : s_(s), source_(std::move(source)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      const int line = line_, col = col_;
      if (i_ >= s_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string t;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) t += get();
        out.push_back({Tok::Ident, t, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string t;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t += get();
        out.push_back({Tok::Int, t, line, col});
      } else if (c == '"') {
        get();
        std::string t;
        for (;;) {
          if (i_ >= s_.size() || s_[i_] == '\n') fail(line, col, "unterminated string");
          char d = get();
          if (d == '"') break;
          if (d == '\\') {
            if (i_ >= s_.size()) fail(line, col, "unterminated string");
            d = get();
            if (d == 'n') d = '\n';
            else if (d != '"' && d != '\\') fail(line_, col_ - 1, "unknown escape");
          }
          t += d;
        }
        out.push_back({Tok::String, t, line, col});
      } else if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
        get();
        get();
        out.push_back({Tok::Punct, "->", line, col});
      } else if (std::string_view("{}[]=,:").find(c) != std::string_view::npos) {
        out.push_back({Tok::Punct, std::string(1, get()), line, col});
      } else {
        fail(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

  [[noreturn]] void fail(int line, int col, const std::string& msg) const {
    throw Error(ErrorKind::ParseError, source_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg,
                {line, col});
  }

 private:
  char get() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip() {
    while (i_ < s_.size()) {
      if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        get();
      } else {
        return;
      }
    }
  }

  std::string_view s_;
  std::string source_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

// ---------------------------------------------------------------- syntax tree

struct Value {
  Tok type = Tok::End;  // Ident, Int, String, or Punct for a list
  std::string text;
  std::vector<Value> items;
  int line = 0, col = 0;
};

struct Field {
  std::string key;
  std::optional<Value> value;
  int line = 0, col = 0;
};

struct Block {
  BlockKind kind;
  std::string name, src, dst;
  std::vector<Field> fields;
  int line = 0, col = 0;
  std::string source;
  std::filesystem::path base_dir;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string source, std::filesystem::path base)
      : t_(std::move(toks)), source_(std::move(source)), base_(std::move(base)) {}

  std::vector<Block> run() {
    std::vector<Block> out;
    while (peek().type != Tok::End) out.push_back(block());
    return out;
  }

 private:
  const Token& peek() const { return t_[i_]; }
  Token next() { return t_[i_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                source_ + ":" + std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg, {t.line, t.col});
  }
  Token expect(Tok type, const std::string& what) {
    if (peek().type != type) fail(peek(), "expected " + what);
    return next();
  }
  void expect_punct(const std::string& p) {
    if (peek().type != Tok::Punct || peek().text != p) fail(peek(), "expected '" + p + "'");
    next();
  }
  bool at_punct(const std::string& p) const { return peek().type == Tok::Punct && peek().text == p; }

  Block block() {
    const Token kw = expect(Tok::Ident, "block kind");
    const auto kind = kind_from(kw.text);
    if (!kind) fail(kw, "unknown block kind '" + kw.text + "'");
    Block b{*kind, expect(Tok::Ident, "name").text, "", "", {}, kw.line, kw.col, source_, base_};
    const bool mapped = *kind == BlockKind::Hom || *kind == BlockKind::Action || *kind == BlockKind::XMorphism ||
                        *kind == BlockKind::X2Morphism;
    if (mapped) {
      expect_punct(":");
      b.src = expect(Tok::Ident, "source name").text;
      if (*kind == BlockKind::Action) {
        const Token on = expect(Tok::Ident, "'on'");
        if (on.text != "on") fail(on, "expected 'on'");
      } else {
        expect_punct("->");
      }
      b.dst = expect(Tok::Ident, "target name").text;
    }
    expect_punct("{");
    while (!at_punct("}")) {
      const Token key = expect(Tok::Ident, "field name or '}'");
      Field f{key.text, std::nullopt, key.line, key.col};
      if (at_punct("=")) {
        next();
        f.value = value();
      }
      for (const auto& g : b.fields)
        if (g.key == f.key) fail(key, "duplicate field '" + f.key + "'");
      b.fields.push_back(std::move(f));
    }
    next();
    return b;
  }

  Value value() {
    const Token& t = peek();
    Value v;
    v.line = t.line;
    v.col = t.col;
    if (t.type == Tok::Ident || t.type == Tok::Int || t.type == Tok::String) {
      v.type = t.type;
      v.text = next().text;
      return v;
    }
    if (!at_punct("[")) fail(t, "expected a value");
    next();
    v.type = Tok::Punct;
    while (!at_punct("]")) {
      v.items.push_back(value());
      if (at_punct(",")) next();
      else if (!at_punct("]")) fail(peek(), "expected ',' or ']'");
    }
    next();
    return v;
  }

  std::vector<Token> t_;
  std::string source_;
  std::filesystem::path base_;
  std::size_t i_ = 0;
};

std::vector<Block> parse_blocks(std::string_view text, const std::string& source, const std::filesystem::path& base) {
  return Parser(Lexer(text, source).run(), source, base).run();
}

// ---------------------------------------------------------------- output helpers

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string int_list(const std::vector<Elem>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

std::string matrix(const std::vector<std::vector<Elem>>& rows) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) out += "    " + int_list(rows[i]) + (i + 1 < rows.size() ? ",\n" : "\n");
  return out + "  ]";
}

std::string string_list(const std::vector<std::string>& v, bool idents) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + (idents ? v[i] : quote(v[i]));
  return out + "]";
}

}  // namespace

// ---------------------------------------------------------------- workspace

BlockKind Workspace::kind(const std::string& name) const {
  const auto it = kinds_.find(name);
  if (it == kinds_.end()) throw Error(ErrorKind::UnresolvedReference, "unknown name '" + name + "'");
  return it->second;
}

std::vector<std::string> Workspace::names() const {
  std::vector<std::string> out;
  for (const auto& [n, k] : kinds_) out.push_back(n);
  return out;
}

namespace {

template <class Map>
const auto& lookup(const Map& m, const std::string& name, std::string_view what) {
  const auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::UnresolvedReference, "no " + std::string(what) + " named '" + name + "'");
  return it->second;
}

bool same_action(const ActionTable& a, const ActionTable& b) {
  return a.actor() == b.actor() && a.space() == b.space() && a.rows() == b.rows();
}
bool same_hom(const GroupHom& a, const GroupHom& b) {
  return a.src() == b.src() && a.dst() == b.dst() && a.map() == b.map();
}
bool same_module(const PreCrossedModule& a, const PreCrossedModule& b) {
  return same_hom(a.boundary(), b.boundary()) && same_action(a.action(), b.action());
}
bool same_x2(const TwoCrossedModule& a, const TwoCrossedModule& b) {
  return same_hom(a.d2(), b.d2()) && same_hom(a.d1(), b.d1()) && same_action(a.act_l(), b.act_l()) &&
         same_action(a.act_m(), b.act_m()) && a.data().lifting == b.data().lifting;
}

}  // namespace

const Group& Workspace::group(const std::string& name) const { return lookup(groups_, name, "group"); }
const GroupHom& Workspace::hom(const std::string& name) const { return lookup(homs_, name, "hom").hom; }
const ActionTable& Workspace::action(const std::string& name) const {
  return lookup(actions_, name, "action").act;
}
const Presentation& Workspace::presentation(const std::string& name) const {
  return lookup(presentations_, name, "presentation");
}
const PreCrossedModule& Workspace::precrossed(const std::string& name) const {
  if (const auto it = xmods_.find(name); it != xmods_.end()) return it->second.module;
  return lookup(precrossed_, name, "precrossed or xmod").module;
}
CrossedModule Workspace::xmod(const std::string& name) const { return CrossedModule::from(precrossed(name)); }
const TwoCrossedModule& Workspace::x2mod(const std::string& name) const {
  return lookup(x2mods_, name, "x2mod").module;
}
const XModMorphism& Workspace::xmorphism(const std::string& name) const {
  return lookup(xmorphisms_, name, "xmorphism").morph;
}
const X2Morphism& Workspace::x2morphism(const std::string& name) const {
  return lookup(x2morphisms_, name, "x2morphism").morph;
}

void Workspace::claim(const std::string& name, BlockKind k) {
  if (!is_ident(name)) throw Error(ErrorKind::ParseError, "'" + name + "' is not a valid name");
  if (!kinds_.emplace(name, k).second) throw Error(ErrorKind::ParseError, "duplicate name '" + name + "'");
}

std::string Workspace::fresh(const std::string& base) const {
  if (!contains(base)) return base;
  for (int i = 2;; ++i)
    if (!contains(base + "_" + std::to_string(i))) return base + "_" + std::to_string(i);
}

std::string Workspace::group_name(const Group& g) const {
  for (const auto& [n, h] : groups_)
    if (h == g) return n;
  return {};
}

std::string Workspace::ensure_group(const Group& g, const std::string& fallback) {
  if (std::string n = group_name(g); !n.empty()) return n;
  const std::string n = fresh(fallback);
  add_group(n, g);
  return n;
}

std::string Workspace::ensure_hom(const GroupHom& h, const std::string& fallback) {
  for (const auto& [n, e] : homs_)
    if (same_hom(e.hom, h)) return n;
  const std::string n = fresh(fallback);
  add_hom(n, h);
  return n;
}

std::string Workspace::ensure_action(const ActionTable& a, const std::string& fallback) {
  for (const auto& [n, e] : actions_)
    if (same_action(e.act, a)) return n;
  const std::string n = fresh(fallback);
  add_action(n, a);
  return n;
}

std::string Workspace::ensure_precrossed(const PreCrossedModule& x, const std::string& fallback) {
  for (const auto* m : {&xmods_, &precrossed_})
    for (const auto& [n, e] : *m)
      if (same_module(e.module, x)) return n;
  const std::string n = fresh(fallback);
  if (is_crossed(x)) add_xmod(n, CrossedModule::from(x));
  else add_precrossed(n, x);
  return n;
}

std::string Workspace::ensure_x2mod(const TwoCrossedModule& x, const std::string& fallback) {
  for (const auto& [n, e] : x2mods_)
    if (same_x2(e.module, x)) return n;
  const std::string n = fresh(fallback);
  add_x2mod(n, x);
  return n;
}

void Workspace::add_group(const std::string& name, const Group& g) {
  claim(name, BlockKind::Group);
  groups_.emplace(name, g);
}

void Workspace::add_hom(const std::string& name, const GroupHom& h) {
  claim(name, BlockKind::Hom);
  HomEntry e{ensure_group(h.src(), name + "_src"), ensure_group(h.dst(), name + "_dst"), h};
  homs_.emplace(name, std::move(e));
}

void Workspace::add_action(const std::string& name, const ActionTable& a) {
  claim(name, BlockKind::Action);
  ActionEntry e{ensure_group(a.actor(), name + "_actor"), ensure_group(a.space(), name + "_space"), a};
  actions_.emplace(name, std::move(e));
}

void Workspace::add_presentation(const std::string& name, const Presentation& p) {
  claim(name, BlockKind::Presentation);
  presentations_.emplace(name, p);
}

Workspace::XModEntry Workspace::make_xmod_entry(const std::string& name, const PreCrossedModule& x) {
  const std::string m = ensure_group(x.M(), name + "_M");
  const std::string p = ensure_group(x.P(), name + "_P");
  return XModEntry{m, p, ensure_action(x.action(), name + "_act"), ensure_hom(x.boundary(), name + "_d"), x};
}

void Workspace::add_precrossed(const std::string& name, const PreCrossedModule& x) {
  claim(name, BlockKind::PreCrossed);
  precrossed_.emplace(name, make_xmod_entry(name, x));
}

void Workspace::add_xmod(const std::string& name, const CrossedModule& x) {
  claim(name, BlockKind::XMod);
  xmods_.emplace(name, make_xmod_entry(name, x));
}

void Workspace::add_x2mod(const std::string& name, const TwoCrossedModule& x) {
  claim(name, BlockKind::X2Mod);
  const std::string l = ensure_group(x.L(), name + "_L");
  const std::string m = ensure_group(x.M(), name + "_M");
  const std::string p = ensure_group(x.P(), name + "_P");
  const std::string d2 = ensure_hom(x.d2(), name + "_d2");
  const std::string d1 = ensure_hom(x.d1(), name + "_d1");
  const std::string al = ensure_action(x.act_l(), name + "_act_l");
  const std::string am = ensure_action(x.act_m(), name + "_act_m");
  x2mods_.emplace(name, X2Entry{l, m, p, d2, d1, al, am, x});
}

void Workspace::add_xmorphism(const std::string& name, const XModMorphism& f) {
  claim(name, BlockKind::XMorphism);
  const std::string s = ensure_precrossed(f.src(), name + "_src");
  const std::string d = ensure_precrossed(f.dst(), name + "_dst");
  const std::string mu = ensure_hom(f.mu(), name + "_mu");
  xmorphisms_.emplace(name, XMorphEntry{s, d, mu, ensure_hom(f.eta(), name + "_eta"), f});
}

void Workspace::add_x2morphism(const std::string& name, const X2Morphism& f) {
  claim(name, BlockKind::X2Morphism);
  const std::string s = ensure_x2mod(f.src(), name + "_src");
  const std::string d = ensure_x2mod(f.dst(), name + "_dst");
  const std::string f2 = ensure_hom(f.f2(), name + "_f2");
  const std::string f1 = ensure_hom(f.f1(), name + "_f1");
  x2morphisms_.emplace(name, X2MorphEntry{s, d, f2, f1, ensure_hom(f.f0(), name + "_f0"), f});
}

std::string Workspace::serialize() const {
  std::ostringstream os;
  bool first = true;
  const auto open = [&](BlockKind k, const std::string& name, const std::string& header = {}) {
    if (!first) os << '\n';
    first = false;
    os << to_string(k) << ' ' << name << header << " {\n";
  };
  for (BlockKind k : kAllKinds)
    for (const auto& [name, kind] : kinds_) {
      if (kind != k) continue;
      switch (k) {
        case BlockKind::Group: {
          const Group& g = groups_.at(name);
          open(k, name);
          os << "  table = " << matrix(g->table()) << '\n';
          if (g->has_labels()) os << "  labels = " << string_list(g->labels(), false) << '\n';
          break;
        }
        case BlockKind::Hom: {
          const auto& e = homs_.at(name);
          open(k, name, ": " + e.src + " -> " + e.dst);
          os << "  map = " << int_list(e.hom.map()) << '\n';
          break;
        }
        case BlockKind::Action: {
          const auto& e = actions_.at(name);
          open(k, name, ": " + e.actor + " on " + e.space);
          os << "  table = " << matrix(e.act.rows()) << '\n';
          break;
        }
        case BlockKind::Presentation: {
          const Presentation& p = presentations_.at(name);
          open(k, name);
          os << "  generators = " << string_list(p.generators, true) << '\n';
          std::vector<std::string> rel;
          for (const Word& w : p.relators) rel.push_back(format_word(p, w));
          os << "  relators = " << string_list(rel, false) << '\n';
          bool legend = false;
          for (const auto& l : p.legend) legend = legend || !l.empty();
          if (legend) os << "  legend = " << string_list(p.legend, false) << '\n';
          break;
        }
        case BlockKind::PreCrossed:
        case BlockKind::XMod: {
          const auto& e = k == BlockKind::XMod ? xmods_.at(name) : precrossed_.at(name);
          open(k, name);
          os << "  m = " << e.m << "\n  p = " << e.p << "\n  act = " << e.act << "\n  d = " << e.d << '\n';
          break;
        }
        case BlockKind::X2Mod: {
          const auto& e = x2mods_.at(name);
          open(k, name);
          os << "  l = " << e.l << "\n  m = " << e.m << "\n  p = " << e.p << "\n  d2 = " << e.d2 << "\n  d1 = " << e.d1
             << "\n  act_l = " << e.act_l << "\n  act_m = " << e.act_m << '\n';
          const int n = e.module.M()->order();
          std::vector<std::vector<Elem>> rows(n);
          for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) rows[a].push_back(e.module.lift(a, b));
          os << "  lifting = " << matrix(rows) << '\n';
          break;
        }
        case BlockKind::XMorphism: {
          const auto& e = xmorphisms_.at(name);
          open(k, name, ": " + e.src + " -> " + e.dst);
          os << "  mu = " << e.mu << "\n  eta = " << e.eta << '\n';
          break;
        }
        case BlockKind::X2Morphism: {
          const auto& e = x2morphisms_.at(name);
          open(k, name, ": " + e.src + " -> " + e.dst);
          os << "  f2 = " << e.f2 << "\n  f1 = " << e.f1 << "\n  f0 = " << e.f0 << '\n';
          break;
        }
      }
      os << "}\n";
    }
  return os.str();
}

// ---------------------------------------------------------------- loading

class Loader {
 public:
  explicit Loader(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

  Workspace run() {
    for (const Block& b : blocks_) {
      if (!is_ident(b.name)) fail(b, "invalid name");
      if (!index_.emplace(b.name, &b).second) fail(b, "duplicate name '" + b.name + "'");
    }
    for (BlockKind k : {BlockKind::Presentation, BlockKind::Group, BlockKind::Hom, BlockKind::Action,
                        BlockKind::PreCrossed, BlockKind::XMod, BlockKind::X2Mod, BlockKind::XMorphism,
                        BlockKind::X2Morphism})
      for (const Block& b : blocks_)
        if (b.kind == k) resolve(b);
    return std::move(ws_);
  }

 private:
  [[noreturn]] static void fail(const Block& b, const std::string& msg, int line = 0, int col = 0) {
    if (!line) {
      line = b.line;
      col = b.col;
    }
    throw Error(ErrorKind::ParseError,
                b.source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg, {line, col});
  }
  [[noreturn]] static void fail(const Block& b, const Value& v, const std::string& msg) { fail(b, msg, v.line, v.col); }

  // Runs a validator and prefixes its error with the block location.
  template <class F>
  static auto located(const Block& b, F&& f) {
    try {
      return f();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      const std::string what = e.what();
      throw Error(e.kind(),
                  b.source + ":" + std::to_string(b.line) + ": " + std::string(to_string(b.kind)) + " " + b.name +
                      ": " + what.substr(what.find(": ") + 2),
                  e.witness());
    }
  }

  static const Field* field(const Block& b, const std::string& key) {
    for (const auto& f : b.fields)
      if (f.key == key) return &f;
    return nullptr;
  }
  static void allow(const Block& b, std::initializer_list<std::string_view> keys) {
    for (const auto& f : b.fields) {
      bool ok = false;
      for (auto k : keys) ok = ok || f.key == k;
      if (!ok) fail(b, "unknown field '" + f.key + "' in " + std::string(to_string(b.kind)), f.line, f.col);
    }
  }
  static const Value& value(const Block& b, const std::string& key) {
    const Field* f = field(b, key);
    if (!f) fail(b, "missing field '" + key + "'");
    if (!f->value) fail(b, "field '" + key + "' needs a value", f->line, f->col);
    return *f->value;
  }
  static bool flag(const Block& b, const std::string& key) {
    const Field* f = field(b, key);
    if (f && f->value) fail(b, "'" + key + "' takes no value", f->line, f->col);
    return f != nullptr;
  }
  static int as_int(const Block& b, const Value& v) {
    if (v.type != Tok::Int) fail(b, v, "expected an integer");
    try {
      return std::stoi(v.text);
    } catch (const std::exception&) {
      fail(b, v, "integer out of range");
    }
  }
  static std::string as_ident(const Block& b, const Value& v) {
    if (v.type != Tok::Ident) fail(b, v, "expected a name");
    return v.text;
  }
  static std::string as_string(const Block& b, const Value& v) {
    if (v.type != Tok::String) fail(b, v, "expected a string");
    return v.text;
  }
  static const std::vector<Value>& as_list(const Block& b, const Value& v) {
    if (v.type != Tok::Punct) fail(b, v, "expected a list");
    return v.items;
  }
  static std::vector<Elem> int_row(const Block& b, const Value& v) {
    std::vector<Elem> out;
    for (const auto& x : as_list(b, v)) out.push_back(as_int(b, x));
    return out;
  }
  static std::vector<std::vector<Elem>> int_matrix(const Block& b, const Value& v) {
    std::vector<std::vector<Elem>> out;
    for (const auto& r : as_list(b, v)) out.push_back(int_row(b, r));
    return out;
  }

  const Block& target(const Block& b, const std::string& name, std::initializer_list<BlockKind> kinds) {
    const auto it = index_.find(name);
    if (it == index_.end())
      throw Error(ErrorKind::UnresolvedReference,
                  b.source + ":" + std::to_string(b.line) + ": " + b.name + " refers to unknown '" + name + "'");
    for (BlockKind k : kinds)
      if (it->second->kind == k) return *it->second;
    throw Error(ErrorKind::UnresolvedReference, b.source + ":" + std::to_string(b.line) + ": " + b.name + ": '" +
                                                    name + "' is a " + std::string(to_string(it->second->kind)));
  }

  Group group_ref(const Block& b, const std::string& name) {
    resolve(target(b, name, {BlockKind::Group}));
    return ws_.group(name);
  }
  GroupHom hom_ref(const Block& b, const std::string& key) {
    const std::string name = as_ident(b, value(b, key));
    target(b, name, {BlockKind::Hom});
    return ws_.hom(name);
  }
  ActionTable action_ref(const Block& b, const std::string& key) {
    const std::string name = as_ident(b, value(b, key));
    target(b, name, {BlockKind::Action});
    return ws_.action(name);
  }

  void require_same(const Block& b, const Group& a, const Group& c, const std::string& what) {
    if (a != c) fail(b, what + " does not match the declared groups");
  }

  void resolve(const Block& b) {
    if (ws_.contains(b.name)) return;
    if (!in_progress_.insert(b.name).second) fail(b, "circular definition of '" + b.name + "'");
    switch (b.kind) {
      case BlockKind::Group: ws_.add_group(b.name, located(b, [&] { return make_group(b); })); break;
      case BlockKind::Presentation: load_presentation(b); break;
      case BlockKind::Hom: load_hom(b); break;
      case BlockKind::Action: load_action(b); break;
      case BlockKind::PreCrossed:
      case BlockKind::XMod: load_xmod(b); break;
      case BlockKind::X2Mod: load_x2mod(b); break;
      case BlockKind::XMorphism: load_xmorphism(b); break;
      case BlockKind::X2Morphism: load_x2morphism(b); break;
    }
  }

  Group make_group(const Block& b) {
    allow(b, {"table", "labels", "cyclic", "dihedral", "symmetric", "klein", "quaternion", "trivial", "product",
              "presentation", "coset_limit"});
    int forms = 0;
    for (const char* k : {"table", "cyclic", "dihedral", "symmetric", "klein", "quaternion", "trivial", "product",
                          "presentation"})
      forms += field(b, k) != nullptr;
    if (forms != 1) fail(b, "a group needs exactly one of table, cyclic, dihedral, symmetric, klein, quaternion, "
                            "trivial, product, presentation");
    if (field(b, "labels") && !field(b, "table")) fail(b, "labels are only allowed with a table");
    if (field(b, "table")) {
      const auto t = int_matrix(b, value(b, "table"));
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[0].size() != t.size() || t[i].size() != t.size() || t[0][i] != static_cast<Elem>(i) ||
            t[i][0] != static_cast<Elem>(i))
          throw Error(ErrorKind::NotAGroup, "table must be square with element 0 as the identity");
      std::vector<std::string> labels;
      if (field(b, "labels"))
        for (const auto& v : as_list(b, value(b, "labels"))) labels.push_back(as_string(b, v));
      return FiniteGroup::from_table(t, labels);
    }
    const auto positive = [&](const char* key) {
      const int n = as_int(b, value(b, key));
      if (n < 1) fail(b, value(b, key), "expected a positive integer");
      return n;
    };
    if (field(b, "cyclic")) return FiniteGroup::cyclic(positive("cyclic"));
    if (field(b, "dihedral")) return FiniteGroup::dihedral(positive("dihedral"));
    if (field(b, "symmetric")) return FiniteGroup::symmetric(positive("symmetric"));
    if (flag(b, "klein")) return FiniteGroup::klein_four();
    if (flag(b, "quaternion")) return FiniteGroup::quaternion();
    if (flag(b, "trivial")) return FiniteGroup::trivial();
    if (field(b, "product")) {
      const auto& parts = as_list(b, value(b, "product"));
      if (parts.size() != 2) fail(b, value(b, "product"), "product takes two groups");
      return FiniteGroup::direct_product(group_ref(b, as_ident(b, parts[0])), group_ref(b, as_ident(b, parts[1])));
    }
    const std::string pname = as_ident(b, value(b, "presentation"));
    resolve(target(b, pname, {BlockKind::Presentation}));
    EnumerationOptions opts;
    if (field(b, "coset_limit")) opts.coset_limit = positive("coset_limit");
    const EnumerationResult r = todd_coxeter(ws_.presentation(pname), opts);
    if (!r.complete()) throw Error(ErrorKind::UndecidedAtLimit, "coset enumeration hit its limit");
    if (!r.group) throw Error(ErrorKind::BoundExceeded, "enumerated group exceeds the exhaustive bound");
    return r.group;
  }

  void load_presentation(const Block& b) {
    allow(b, {"generators", "relators", "legend"});
    Presentation p;
    for (const auto& v : as_list(b, value(b, "generators"))) p.generators.push_back(as_ident(b, v));
    if (field(b, "legend"))
      for (const auto& v : as_list(b, value(b, "legend"))) p.legend.push_back(as_string(b, v));
    if (!p.legend.empty() && p.legend.size() != p.generators.size())
      fail(b, "legend must name every generator");
    if (field(b, "relators"))
      for (const auto& v : as_list(b, value(b, "relators"))) {
        const std::string text = as_string(b, v);
        located(b, [&] {
          p.add_relator(parse_word(p, text));
          return 0;
        });
      }
    ws_.add_presentation(b.name, p);
  }

  void load_hom(const Block& b) {
    allow(b, {"map", "identity", "trivial"});
    const Group src = group_ref(b, b.src), dst = group_ref(b, b.dst);
    const int forms = (field(b, "map") != nullptr) + flag(b, "identity") + flag(b, "trivial");
    if (forms != 1) fail(b, "a hom needs exactly one of map, identity, trivial");
    GroupHom h = located(b, [&] {
      if (flag(b, "trivial")) return GroupHom::trivial(src, dst);
      if (flag(b, "identity")) {
        if (src != dst) throw Error(ErrorKind::NotAHom, "identity needs equal source and target");
        return GroupHom::identity(src);
      }
      return GroupHom::make(src, dst, int_row(b, value(b, "map")));
    });
    ws_.add_hom(b.name, h);
  }

  void load_action(const Block& b) {
    allow(b, {"table", "conjugation", "trivial"});
    const Group actor = group_ref(b, b.src), space = group_ref(b, b.dst);
    const int forms = (field(b, "table") != nullptr) + flag(b, "conjugation") + flag(b, "trivial");
    if (forms != 1) fail(b, "an action needs exactly one of table, conjugation, trivial");
    ActionTable a = located(b, [&] {
      if (flag(b, "trivial")) return ActionTable::trivial(actor, space);
      if (flag(b, "conjugation")) {
        if (actor != space) throw Error(ErrorKind::NotAnAction, "conjugation needs the group to act on itself");
        return ActionTable::conjugation(actor);
      }
      return ActionTable::make(actor, space, int_matrix(b, value(b, "table")));
    });
    ws_.add_action(b.name, a);
  }

  void load_xmod(const Block& b) {
    allow(b, {"m", "p", "act", "d"});
    const Group m = group_ref(b, as_ident(b, value(b, "m")));
    const Group p = group_ref(b, as_ident(b, value(b, "p")));
    const ActionTable act = action_ref(b, "act");
    const GroupHom d = hom_ref(b, "d");
    require_same(b, act.actor(), p, "act");
    require_same(b, act.space(), m, "act");
    require_same(b, d.src(), m, "d");
    require_same(b, d.dst(), p, "d");
    if (b.kind == BlockKind::XMod) ws_.add_xmod(b.name, located(b, [&] { return CrossedModule::make(act, d); }));
    else ws_.add_precrossed(b.name, located(b, [&] { return PreCrossedModule::make(act, d); }));
  }

  void load_x2mod(const Block& b) {
    allow(b, {"l", "m", "p", "d2", "d1", "act_l", "act_m", "lifting", "liftingfile"});
    const Group l = group_ref(b, as_ident(b, value(b, "l")));
    const Group m = group_ref(b, as_ident(b, value(b, "m")));
    const Group p = group_ref(b, as_ident(b, value(b, "p")));
    const GroupHom d2 = hom_ref(b, "d2"), d1 = hom_ref(b, "d1");
    const ActionTable al = action_ref(b, "act_l"), am = action_ref(b, "act_m");
    require_same(b, d2.src(), l, "d2");
    require_same(b, d2.dst(), m, "d2");
    require_same(b, d1.src(), m, "d1");
    require_same(b, d1.dst(), p, "d1");
    require_same(b, al.actor(), p, "act_l");
    require_same(b, al.space(), l, "act_l");
    require_same(b, am.actor(), p, "act_m");
    require_same(b, am.space(), m, "act_m");
    if ((field(b, "lifting") != nullptr) == (field(b, "liftingfile") != nullptr))
      fail(b, "an x2mod needs exactly one of lifting, liftingfile");
    std::vector<Elem> flat;
    if (field(b, "lifting")) {
      for (const auto& row : int_matrix(b, value(b, "lifting"))) {
        if (static_cast<int>(row.size()) != m->order()) fail(b, value(b, "lifting"), "lifting rows must have |M| entries");
        flat.insert(flat.end(), row.begin(), row.end());
      }
    } else {
      const auto path = b.base_dir / as_string(b, value(b, "liftingfile"));
      std::ifstream in(path);
      if (!in) fail(b, value(b, "liftingfile"), "cannot read " + path.string());
      long long x;
      while (in >> x) flat.push_back(static_cast<Elem>(x));
      if (!in.eof()) fail(b, value(b, "liftingfile"), "liftingfile must hold whitespace-separated integers");
    }
    const std::size_t n = static_cast<std::size_t>(m->order());
    if (flat.size() != n * n) fail(b, "lifting must have |M|*|M| entries");
    for (Elem x : flat)
      if (x < 0 || x >= l->order()) fail(b, "lifting value out of range for L");
    ws_.add_x2mod(b.name, located(b, [&] { return TwoCrossedModule::make({d2, d1, al, am, flat}); }));
  }

  void load_xmorphism(const Block& b) {
    allow(b, {"mu", "eta"});
    resolve(target(b, b.src, {BlockKind::XMod, BlockKind::PreCrossed}));
    resolve(target(b, b.dst, {BlockKind::XMod, BlockKind::PreCrossed}));
    const GroupHom mu = hom_ref(b, "mu"), eta = hom_ref(b, "eta");
    const PreCrossedModule& s = ws_.precrossed(b.src);
    const PreCrossedModule& d = ws_.precrossed(b.dst);
    require_same(b, mu.src(), s.M(), "mu");
    require_same(b, mu.dst(), d.M(), "mu");
    require_same(b, eta.src(), s.P(), "eta");
    require_same(b, eta.dst(), d.P(), "eta");
    ws_.add_xmorphism(b.name, located(b, [&] { return XModMorphism::make(mu, eta, s, d); }));
  }

  void load_x2morphism(const Block& b) {
    allow(b, {"f2", "f1", "f0"});
    resolve(target(b, b.src, {BlockKind::X2Mod}));
    resolve(target(b, b.dst, {BlockKind::X2Mod}));
    const GroupHom f2 = hom_ref(b, "f2"), f1 = hom_ref(b, "f1"), f0 = hom_ref(b, "f0");
    const TwoCrossedModule& s = ws_.x2mod(b.src);
    const TwoCrossedModule& d = ws_.x2mod(b.dst);
    require_same(b, f2.src(), s.L(), "f2");
    require_same(b, f2.dst(), d.L(), "f2");
    require_same(b, f1.src(), s.M(), "f1");
    require_same(b, f1.dst(), d.M(), "f1");
    require_same(b, f0.src(), s.P(), "f0");
    require_same(b, f0.dst(), d.P(), "f0");
    ws_.add_x2morphism(b.name, located(b, [&] { return X2Morphism::make(f2, f1, f0, s, d); }));
  }

  std::vector<Block> blocks_;
  std::map<std::string, const Block*> index_;
  std::set<std::string> in_progress_;
  Workspace ws_;
};

Workspace parse_text(std::string_view text, const std::string& source, const std::filesystem::path& base_dir) {
  return Loader(parse_blocks(text, source, base_dir)).run();
}

Workspace parse_files(const std::vector<std::string>& paths) {
  std::vector<Block> all;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, p + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    auto blocks = parse_blocks(ss.str(), p, std::filesystem::path(p).parent_path());
    all.insert(all.end(), std::make_move_iterator(blocks.begin()), std::make_move_iterator(blocks.end()));
  }
  return Loader(std::move(all)).run();
}

}  // namespace crossmod
