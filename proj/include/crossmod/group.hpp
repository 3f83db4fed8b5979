#pragma once

// Finite groups given by multiplication tables, together with the
// homomorphisms, actions and subgroups every other module is built from.
//
// Elements are dense indices 0..order-1 and the identity is always 0.

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossmod/error.hpp"

namespace crossmod {

using Elem = int;

/// Groups above this order are refused by every exhaustive validator.
inline constexpr int kExhaustiveBound = 256;
/// Default source-order bound for homomorphism enumeration.
inline constexpr int kHomSearchBound = 64;

class FiniteGroup;
using Group = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  /// Validates `table` as a group multiplication table. The identity is moved
  /// to index 0 (swapping it with the old element 0) when necessary.
  static Group from_table(const std::vector<std::vector<Elem>>& table,
                          std::vector<std::string> labels = {});

  static Group trivial();
  static Group cyclic(int n);
  /// Dihedral group of order 2n, generated by a rotation r and a reflection s.
  static Group dihedral(int n);
  static Group symmetric(int n);
  static Group klein_four();
  static Group quaternion();
  static Group direct_product(const Group& a, const Group& b);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  int order() const noexcept { return n_; }
  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// p m p^-1
  Elem conj(Elem p, Elem m) const { return mul(mul(p, m), inv(p)); }
  /// [a,b] = a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Elem pow(Elem a, int k) const;
  int element_order(Elem a) const;
  bool is_abelian() const;
  bool is_central(Elem a) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display name; falls back to the index.
  std::string label(Elem a) const;

  std::vector<std::vector<Elem>> table() const;

  /// A generating set of minimum size (exact search for small orders,
  /// greedy otherwise). Computed on first use.
  const std::vector<Elem>& generators() const;

 private:
  FiniteGroup(int n, std::vector<Elem> mul, std::vector<Elem> inv, std::vector<std::string> labels);

  int n_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  mutable std::once_flag gens_once_;
  mutable std::vector<Elem> gens_;
};

class GroupHom;

class Subgroup {
 public:
  static Subgroup generated(const Group& g, std::span<const Elem> gens);
  static Subgroup normal_closure(const Group& g, std::span<const Elem> gens);
  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);
  /// Validates closure of the member set.
  static Subgroup from_mask(const Group& g, std::vector<bool> member);

  const Group& parent() const noexcept { return parent_; }
  bool contains(Elem e) const { return member_[e]; }
  const std::vector<bool>& mask() const noexcept { return member_; }
  int order() const noexcept { return order_; }
  bool is_normal() const noexcept { return normal_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  std::vector<Elem> elements() const;

  /// The subgroup as a group in its own right (elements in parent index
  /// order) with the inclusion into the parent.
  std::pair<Group, GroupHom> as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.member_ == b.member_; }

 private:
  Subgroup(Group parent, std::vector<bool> member);
  Group parent_;
  std::vector<bool> member_;
  int order_ = 0;
  bool normal_ = false;
};

class GroupHom {
 public:
  /// Validates that `map` is a homomorphism src -> dst.
  static GroupHom make(Group src, Group dst, std::vector<Elem> map);
  static GroupHom identity(const Group& g);
  static GroupHom trivial(const Group& src, const Group& dst);

  Elem operator()(Elem x) const { return map_[x]; }
  const Group& src() const noexcept { return src_; }
  const Group& dst() const noexcept { return dst_; }
  const std::vector<Elem>& map() const noexcept { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_trivial() const;
  Subgroup kernel() const;
  Subgroup image() const;

 private:
  GroupHom(Group src, Group dst, std::vector<Elem> map)
      : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {}
  Group src_;
  Group dst_;
  std::vector<Elem> map_;
};

/// outer ∘ inner
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// Left action of `actor` on `space` by automorphisms, stored as a full table.
class ActionTable {
 public:
  static ActionTable make(Group actor, Group space, const std::vector<std::vector<Elem>>& rows);
  static ActionTable conjugation(const Group& g);
  static ActionTable trivial(const Group& actor, const Group& space);

  Elem operator()(Elem p, Elem m) const { return act_[static_cast<std::size_t>(p) * space_->order() + m]; }
  const Group& actor() const noexcept { return actor_; }
  const Group& space() const noexcept { return space_; }
  std::vector<std::vector<Elem>> rows() const;
  bool is_trivial() const;

  /// (p', m) ↦ f(p')·m for f: actor' -> actor.
  ActionTable restrict_along(const GroupHom& f) const;

 private:
  ActionTable(Group actor, Group space, std::vector<Elem> act)
      : actor_(std::move(actor)), space_(std::move(space)), act_(std::move(act)) {}
  Group actor_;
  Group space_;
  std::vector<Elem> act_;
};

inline ActionTable conjugation_action(const Group& g) { return ActionTable::conjugation(g); }

struct Quotient {
  Group group;
  GroupHom projection;
  /// Minimal-index representative of each coset, indexed by quotient element.
  std::vector<Elem> representatives;
};

/// G/N with cosets ordered by their minimal element.
Quotient quotient(const Group& g, const Subgroup& n);

/// One representative per left coset gH, minimal index per coset, ascending.
std::vector<Elem> left_transversal(const Group& g, const Subgroup& h);

struct HomSearchOptions {
  std::size_t max_count = 0;  // 0 = unlimited
  int source_bound = kHomSearchBound;
};

/// Calls `visit` for every homomorphism g -> h in a fixed order; stop early by
/// returning false.
void for_each_hom(const Group& g, const Group& h, const std::function<bool(const GroupHom&)>& visit,
                  int source_bound = kHomSearchBound);

std::vector<GroupHom> enumerate_homs(const Group& g, const Group& h, HomSearchOptions opts = {});

std::optional<GroupHom> find_isomorphism(const Group& g, const Group& h,
                                         const std::function<bool(const GroupHom&)>& accept = {});

/// Subgroup of act.space() generated by { k·m m^-1 : k ∈ K, m ∈ M }.
Subgroup action_commutator_subgroup(const Subgroup& k, const ActionTable& act);

/// Extends generator images to a homomorphism when the assignment is
/// consistent; returns nullopt when it is not (or `gens` does not generate).
std::optional<GroupHom> extend_from_generators(const Group& src, const Group& dst,
                                               std::span<const Elem> gens,
                                               std::span<const Elem> images);

/// Shortest-word representation of each element over `gens`: parent element
/// and the generator position used to reach it (identity has parent -1).
struct SpanningTree {
  std::vector<Elem> parent;
  std::vector<int> via;
  std::vector<Elem> order;  // BFS order, starting with the identity
  bool spans = false;
};
SpanningTree spanning_tree(const Group& g, std::span<const Elem> gens);

struct AutomorphismGroup {
  Group group;
  /// maps[a] is the automorphism table of element a of `group`.
  std::vector<std::vector<Elem>> maps;
  ActionTable action;  // Aut(M) acting on M
};

/// Aut(M) by brute force over bijective endomorphisms; |M| ≤ bound.
AutomorphismGroup automorphism_group(const Group& m, int bound = 24);

}  // namespace crossmod
