#pragma once

// Line-oriented text format for named groups, maps, modules and morphisms.
//
//   # comment
//   group C4 { cyclic = 4 }
//   group C2 { table = [[0,1],[1,0]] labels = ["1","t"] }
//   hom f: C4 -> C2 { map = [0,1,0,1] }
//   action inv: C2 on C4 { table = [[0,1,2,3],[0,3,2,1]] }
//   presentation P { generators = [a,b] relators = ["a^2","b^3","(a b)^2"] }
//   precrossed X { m = C4 p = C2 act = inv d = f }
//   xmod Y { m = C4 p = C4 act = conj d = id4 }
//   x2mod Z { l = L m = C4 p = C2 d2 = g d1 = f act_l = a act_m = inv lifting = [[...]] }
//   xmorphism h: X -> Y { mu = f eta = g }
//   x2morphism F: Z -> Z { f2 = .. f1 = .. f0 = .. }
//
// Serialization always writes explicit tables, one block per object, ordered
// by kind and then by name, so parse(serialize(w)) serializes identically.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "crossmod/presentation.hpp"
#include "crossmod/x2mod.hpp"

namespace crossmod {

enum class BlockKind { Group, Hom, Action, Presentation, PreCrossed, XMod, X2Mod, XMorphism, X2Morphism };

std::string_view to_string(BlockKind k);

class Workspace {
 public:
  bool contains(const std::string& name) const { return kinds_.count(name) != 0; }
  /// Throws UnresolvedReference for unknown names.
  BlockKind kind(const std::string& name) const;
  std::vector<std::string> names() const;
  bool empty() const { return kinds_.empty(); }

  const Group& group(const std::string& name) const;
  const GroupHom& hom(const std::string& name) const;
  const ActionTable& action(const std::string& name) const;
  const Presentation& presentation(const std::string& name) const;
  /// Any precrossed or xmod block.
  const PreCrossedModule& precrossed(const std::string& name) const;
  /// An xmod block, or a precrossed block that happens to satisfy CM2.
  CrossedModule xmod(const std::string& name) const;
  const TwoCrossedModule& x2mod(const std::string& name) const;
  const XModMorphism& xmorphism(const std::string& name) const;
  const X2Morphism& x2morphism(const std::string& name) const;

  // Registration. Component groups, maps and modules that are not yet known
  // (by identity for groups, by value otherwise) are added as <name>_<part>.
  void add_group(const std::string& name, const Group& g);
  void add_hom(const std::string& name, const GroupHom& h);
  void add_action(const std::string& name, const ActionTable& a);
  void add_presentation(const std::string& name, const Presentation& p);
  void add_precrossed(const std::string& name, const PreCrossedModule& x);
  void add_xmod(const std::string& name, const CrossedModule& x);
  void add_x2mod(const std::string& name, const TwoCrossedModule& x);
  void add_xmorphism(const std::string& name, const XModMorphism& f);
  void add_x2morphism(const std::string& name, const X2Morphism& f);

  std::string serialize() const;

 private:
  friend class Loader;

  struct HomEntry {
    std::string src, dst;
    GroupHom hom;
  };
  struct ActionEntry {
    std::string actor, space;
    ActionTable act;
  };
  struct XModEntry {
    std::string m, p, act, d;
    PreCrossedModule module;
  };
  struct X2Entry {
    std::string l, m, p, d2, d1, act_l, act_m;
    TwoCrossedModule module;
  };
  struct XMorphEntry {
    std::string src, dst, mu, eta;
    XModMorphism morph;
  };
  struct X2MorphEntry {
    std::string src, dst, f2, f1, f0;
    X2Morphism morph;
  };

  void claim(const std::string& name, BlockKind k);
  std::string fresh(const std::string& base) const;
  std::string ensure_group(const Group& g, const std::string& fallback);
  std::string ensure_hom(const GroupHom& h, const std::string& fallback);
  std::string ensure_action(const ActionTable& a, const std::string& fallback);
  std::string ensure_precrossed(const PreCrossedModule& x, const std::string& fallback);
  std::string ensure_x2mod(const TwoCrossedModule& x, const std::string& fallback);
  std::string group_name(const Group& g) const;
  XModEntry make_xmod_entry(const std::string& name, const PreCrossedModule& x);

  std::map<std::string, BlockKind> kinds_;
  std::map<std::string, Group> groups_;
  std::map<std::string, HomEntry> homs_;
  std::map<std::string, ActionEntry> actions_;
  std::map<std::string, Presentation> presentations_;
  std::map<std::string, XModEntry> precrossed_;
  std::map<std::string, XModEntry> xmods_;
  std::map<std::string, X2Entry> x2mods_;
  std::map<std::string, XMorphEntry> xmorphisms_;
  std::map<std::string, X2MorphEntry> x2morphisms_;
};

/// Parses one document. `base_dir` resolves liftingfile paths. Errors:
/// ParseError (witness line, column), UnresolvedReference, and the
/// validator's own kind for objects that fail their axioms.
Workspace parse_text(std::string_view text, const std::string& source = "<input>",
                     const std::filesystem::path& base_dir = {});
/// Parses several files into one workspace; names must be unique overall.
Workspace parse_files(const std::vector<std::string>& paths);

}  // namespace crossmod
