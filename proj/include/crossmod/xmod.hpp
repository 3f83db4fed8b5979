#pragma once

// Pre-crossed and crossed modules (M, P, action, ∂) and their morphisms.
// Every constructor validates its axioms exhaustively; there is no unchecked
// path.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crossmod/group.hpp"

namespace crossmod {

class PreCrossedModule {
 public:
  /// Checks CM1: ∂(p·m) = p ∂(m) p^-1. Throws CM1Violation with witness (p, m).
  static PreCrossedModule make(ActionTable act, GroupHom boundary);

  const Group& M() const noexcept { return boundary_.src(); }
  const Group& P() const noexcept { return boundary_.dst(); }
  const ActionTable& action() const noexcept { return act_; }
  const GroupHom& boundary() const noexcept { return boundary_; }
  Elem act(Elem p, Elem m) const { return act_(p, m); }

 protected:
  PreCrossedModule(ActionTable act, GroupHom boundary) : act_(std::move(act)), boundary_(std::move(boundary)) {}

 private:
  ActionTable act_;
  GroupHom boundary_;
};

class CrossedModule : public PreCrossedModule {
 public:
  /// Checks CM1 then CM2: ∂(m)·n = m n m^-1. Throws with the first witness.
  static CrossedModule make(ActionTable act, GroupHom boundary);
  static CrossedModule from(const PreCrossedModule& x);

 private:
  explicit CrossedModule(const PreCrossedModule& x) : PreCrossedModule(x) {}
};

/// All pairs (m, n) with ∂(m)·n != m n m^-1, up to `max` of them (0 = all).
std::vector<std::pair<Elem, Elem>> cm2_failures(const PreCrossedModule& x, std::size_t max = 1);
bool is_crossed(const PreCrossedModule& x);

/// ⟨m, m'⟩ = m m' m^-1 (∂(m)·m'^-1)
Elem peiffer_commutator(const PreCrossedModule& x, Elem m, Elem m2);
/// Subgroup of M generated by all Peiffer commutators (always normal).
Subgroup peiffer_subgroup(const PreCrossedModule& x);

// The four standard families.
CrossedModule normal_inclusion(const Group& p, const Subgroup& n);
CrossedModule automorphism_xmod(const Group& m, int bound = 24);
/// Zero boundary into P, for M abelian with a P-action.
CrossedModule abelian_xmod(const ActionTable& act);
/// ∂ an epimorphism with central kernel; P acts through a section of ∂
/// (minimal-index preimages unless `section` is given).
CrossedModule central_extension_xmod(const GroupHom& boundary, std::span<const Elem> section = {});

class XModMorphism {
 public:
  /// Checks η∂ = ∂'μ (SquareNotCommuting, witness m) and μ(p·m) = η(p)·μ(m)
  /// (NotEquivariant, witness (p, m)).
  static XModMorphism make(GroupHom mu, GroupHom eta, PreCrossedModule src, PreCrossedModule dst);
  static XModMorphism identity(const PreCrossedModule& x);

  const GroupHom& mu() const noexcept { return mu_; }
  const GroupHom& eta() const noexcept { return eta_; }
  const PreCrossedModule& src() const noexcept { return src_; }
  const PreCrossedModule& dst() const noexcept { return dst_; }

 private:
  XModMorphism(GroupHom mu, GroupHom eta, PreCrossedModule src, PreCrossedModule dst)
      : mu_(std::move(mu)), eta_(std::move(eta)), src_(std::move(src)), dst_(std::move(dst)) {}
  GroupHom mu_;
  GroupHom eta_;
  PreCrossedModule src_;
  PreCrossedModule dst_;
};

/// Composite g ∘ f.
XModMorphism compose(const XModMorphism& g, const XModMorphism& f);

/// Isomorphism of crossed modules over the identity on P, when one exists
/// (by homomorphism enumeration).
std::optional<XModMorphism> find_xmod_isomorphism(const PreCrossedModule& a, const PreCrossedModule& b);

}  // namespace crossmod
