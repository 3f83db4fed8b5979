#pragma once

// 2-crossed modules L -> M -> P with an explicit Peiffer lifting table, the
// exhaustive PL1-PL5 validator, and the standard constructions around them.

#include <optional>
#include <string>
#include <vector>

#include "crossmod/xmod.hpp"

namespace crossmod {

/// Raw data of a candidate 2-crossed module. P acts on itself by conjugation;
/// the M-action on L is derived from the lifting.
struct TwoCrossedData {
  GroupHom d2;  // L -> M
  GroupHom d1;  // M -> P
  ActionTable act_l;  // P on L
  ActionTable act_m;  // P on M
  /// {m0, m1} stored at m0 * |M| + m1.
  std::vector<Elem> lifting;

  const Group& L() const noexcept { return d2.src(); }
  const Group& M() const noexcept { return d1.src(); }
  const Group& P() const noexcept { return d1.dst(); }
  Elem lift(Elem m0, Elem m1) const { return lifting[static_cast<std::size_t>(m0) * M()->order() + m1]; }
  /// ᵐl = l {∂₂(l)^-1, m}
  Elem m_act(Elem m, Elem l) const { return L()->mul(l, lift(M()->inv(d2(l)), m)); }
};

enum class X2Axiom { NormalComplex, Equivariance, PL1, PL2, PL4a, PL4b, PL3a, PL3b, PL5 };
std::string to_string(X2Axiom a);
ErrorKind error_kind(X2Axiom a);

struct Violation {
  X2Axiom axiom;
  std::vector<Elem> witness;
  /// For identities valued in L: the two sides that differ (otherwise -1).
  Elem lhs = -1;
  Elem rhs = -1;
  std::string message;
};

struct ScanOptions {
  /// Stop at the first violation (the validator's behaviour).
  bool first_only = true;
  /// Per-axiom cap when collecting everything (0 = unlimited).
  std::size_t per_axiom = 0;
};

/// Checks in the order normal complex, equivariance, PL1, PL2, PL4, PL3, PL5.
std::vector<Violation> scan_axioms(const TwoCrossedData& d, ScanOptions opts = {});

class TwoCrossedModule {
 public:
  /// Throws the first violation as an Error of the matching kind.
  static TwoCrossedModule make(TwoCrossedData d);

  const TwoCrossedData& data() const noexcept { return d_; }
  const Group& L() const noexcept { return d_.L(); }
  const Group& M() const noexcept { return d_.M(); }
  const Group& P() const noexcept { return d_.P(); }
  const GroupHom& d2() const noexcept { return d_.d2; }
  const GroupHom& d1() const noexcept { return d_.d1; }
  const ActionTable& act_l() const noexcept { return d_.act_l; }
  const ActionTable& act_m() const noexcept { return d_.act_m; }
  Elem lift(Elem m0, Elem m1) const { return d_.lift(m0, m1); }
  Elem m_act(Elem m, Elem l) const { return d_.m_act(m, l); }
  bool lifting_trivial() const;

  /// (M, P, ∂₁) as a pre-crossed module.
  PreCrossedModule base() const { return PreCrossedModule::make(d_.act_m, d_.d1); }

 private:
  explicit TwoCrossedModule(TwoCrossedData d) : d_(std::move(d)) {}
  TwoCrossedData d_;
};

/// ᵐl = l {∂₂l^-1, m}
inline Elem induced_m_action(const TwoCrossedModule& x, Elem m, Elem l) { return x.m_act(m, l); }
/// (L, M, ∂₂) with the induced M-action, validated as a crossed module.
CrossedModule top_crossed_module(const TwoCrossedModule& x);

/// ⟨M,M⟩ -> M -> P with lifting given by Peiffer commutators.
TwoCrossedModule from_precrossed_peiffer(const PreCrossedModule& x);
/// 1 -> M -> P with the constant lifting.
TwoCrossedModule from_crossed(const CrossedModule& x);
/// M/Im ∂₂ -> P with the inherited action.
CrossedModule reflect_to_xmod(const TwoCrossedModule& x);

struct Claim {
  bool pass = true;
  std::vector<Elem> witness;
};

struct TrivialLiftingReport {
  Claim peiffer_identity;  // (M, P, ∂₁) satisfies CM2
  Claim l_abelian;
  Claim image_acts_trivially;  // ∂₁(M) acts trivially on L
  bool all_pass() const { return peiffer_identity.pass && l_abelian.pass && image_acts_trivially.pass; }
};

/// Throws LiftingNotTrivial unless the lifting is constant at the identity.
TrivialLiftingReport trivial_lifting_report(const TwoCrossedModule& x);

class X2Morphism {
 public:
  static X2Morphism make(GroupHom f2, GroupHom f1, GroupHom f0, TwoCrossedModule src, TwoCrossedModule dst);
  static X2Morphism identity(const TwoCrossedModule& x);

  const GroupHom& f2() const noexcept { return f2_; }
  const GroupHom& f1() const noexcept { return f1_; }
  const GroupHom& f0() const noexcept { return f0_; }
  const TwoCrossedModule& src() const noexcept { return src_; }
  const TwoCrossedModule& dst() const noexcept { return dst_; }

 private:
  X2Morphism(GroupHom f2, GroupHom f1, GroupHom f0, TwoCrossedModule src, TwoCrossedModule dst)
      : f2_(std::move(f2)), f1_(std::move(f1)), f0_(std::move(f0)), src_(std::move(src)), dst_(std::move(dst)) {}
  GroupHom f2_, f1_, f0_;
  TwoCrossedModule src_, dst_;
};

/// g ∘ f
X2Morphism compose(const X2Morphism& g, const X2Morphism& f);

/// Crossed-module morphism lifted through from_crossed.
X2Morphism from_crossed(const XModMorphism& f);

/// Isomorphism of 2-crossed modules by homomorphism enumeration.
std::optional<X2Morphism> find_x2_isomorphism(const TwoCrossedModule& a, const TwoCrossedModule& b);

}  // namespace crossmod
