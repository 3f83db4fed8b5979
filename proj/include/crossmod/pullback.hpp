#pragma once

// Pullback (co-induced) crossed and 2-crossed modules along a homomorphism
// into the base, with universal-property verifiers.

#include <optional>
#include <utility>
#include <vector>

#include "crossmod/x2mod.hpp"

namespace crossmod {

/// Homomorphism search bound for uniqueness checks.
inline constexpr int kUniquenessBound = 64;

struct PullbackXModResult {
  CrossedModule module;        // φ*(N) over P
  XModMorphism proj_to_N;      // (φ̄, φ)
  GroupHom phi;                // P -> Q
  /// Element i of φ*(N) is the pair legend[i] = (n, p), n-major order.
  std::vector<std::pair<Elem, Elem>> legend;
};

/// φ*(N) = {(n, p) : v(n) = φ(p)} with boundary (n,p) ↦ p and action
/// p'·(n,p) = (φ(p')·n, p'pp'^-1).
PullbackXModResult pullback_xmod(const CrossedModule& nmod, const GroupHom& phi);

struct Factorization {
  GroupHom map;
  /// Second component for 2-dimensional factorizations (top level).
  std::optional<GroupHom> top;
  bool uniqueness_checked = false;
  /// Number of candidate factorizations found by enumeration.
  std::size_t candidates = 0;
};

/// h' : M -> φ*(N), m ↦ (h(m), μ(m)) for a morphism (h, φ) : Mmod -> Nmod.
Factorization pullback_xmod_universal(const CrossedModule& mmod, const XModMorphism& h,
                                      const PullbackXModResult& pb);

struct PullbackX2Result {
  TwoCrossedModule module;  // ∂₂⁻¹(Ker ∂₁) -> φ*(N) -> P
  X2Morphism proj;          // (φ″, φ′, φ)
  GroupHom phi;
  std::vector<std::pair<Elem, Elem>> legend_m;
  /// Element i of the top group is legend_l[i] in H.
  std::vector<Elem> legend_l;
};

/// Lifting {(n,p),(n',p')} = {n,n'}; throws LiftingEscapesKernel if a
/// lifting value leaves ∂₂⁻¹(Ker ∂₁).
PullbackX2Result pullback_x2mod(const TwoCrossedModule& x, const GroupHom& phi);

/// f2* = f2 and f1*(b) = (f1(b), ∂₁'(b)) for a morphism f : src -> X2 over φ.
/// `map` is f1* and `top` is f2*.
Factorization pullback_x2_universal(const TwoCrossedModule& src, const X2Morphism& f, const PullbackX2Result& pb);

}  // namespace crossmod
