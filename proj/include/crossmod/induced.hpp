#pragma once

// Induced crossed modules and induced 2-crossed modules, built either by an
// exact quotient (epimorphism case), by a transversal presentation
// (monomorphism case) or by coset enumeration of the full presentation.
// Push-outs and cokernels of 2-crossed modules reuse the same machinery.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crossmod/presentation.hpp"
#include "crossmod/pullback.hpp"
#include "crossmod/x2mod.hpp"

namespace crossmod {

enum class Strategy { Auto, Epi, Mono, GeneralTC };
enum class Status { Decided, UndecidedAtLimit };

std::string to_string(Strategy s);
std::string to_string(Status s);

inline constexpr std::size_t kRelatorCap = 20000;

struct InducedOptions {
  Strategy strategy = Strategy::Auto;
  int coset_limit = 100000;
  std::size_t relator_cap = kRelatorCap;
  /// Use the alternative second PL3 relator {n0n1,n2} = {n0,n1n2^-1n1}{n0,n1}.
  bool compare_relators = false;
  /// Upper bound on enumerate/repair rounds.
  int max_rounds = 64;
};

/// Bookkeeping shared by both dimensions.
struct EnumerationSummary {
  std::size_t relators = 0;
  int rounds = 0;
  int max_active = 0;
  int total_defined = 0;
  int coset_limit = 0;
};

struct InducedXModResult {
  Status status = Status::UndecidedAtLimit;
  Strategy strategy_used = Strategy::GeneralTC;
  /// The presentation actually enumerated (empty for the quotient path).
  Presentation presentation;
  std::optional<CrossedModule> module;
  /// (φ', φ) : Mmod -> φ*(M)
  std::optional<XModMorphism> canonical;
  EnumerationSummary summary;

  bool decided() const { return status == Status::Decided; }
};

/// Generators (q, m) for q in Q, m in M with the three families of relations
/// fully instantiated.
Presentation induced_xmod_presentation(const CrossedModule& mmod, const GroupHom& phi);
/// Generators t_m for t in a left transversal of φ(P) in Q (φ injective).
Presentation induced_xmod_mono_presentation(const CrossedModule& mmod, const GroupHom& phi);

InducedXModResult induced_xmod(const CrossedModule& mmod, const GroupHom& phi, InducedOptions opts = {});

/// h' : φ*(M) -> N with h'(q·φ'(m)) = q·h(m) for a morphism (h, φ) : Mmod -> Nmod.
Factorization induced_xmod_universal(const InducedXModResult& r, const XModMorphism& h);

struct InducedX2Result {
  Status status = Status::UndecidedAtLimit;
  Strategy strategy_used = Strategy::GeneralTC;
  Presentation presentation;
  std::optional<TwoCrossedModule> module;
  /// (φ″, φ′, φ) from the source 2-crossed module (induced case only).
  std::optional<X2Morphism> canonical;
  /// Push-out only: the two maps into the result, and the orders of the
  /// induced modules B0, B1, B2.
  std::vector<X2Morphism> injections;
  std::vector<int> component_orders;
  EnumerationSummary summary;

  bool decided() const { return status == Status::Decided; }
};

/// Generators (q, l) and (n1, n2) with the relations of the free Q-group,
/// the lifting identification and the PL2, PL3, PL4 relators.
Presentation induced_x2mod_presentation(const XModMorphism& theta, const TwoCrossedModule& x,
                                        bool compare_relators = false);
/// Transversal variant (φ injective): generators t_l and (n1, n2).
Presentation induced_x2mod_mono_presentation(const XModMorphism& theta, const TwoCrossedModule& x,
                                             bool compare_relators = false);

/// θ = (φ', φ) : (M -> P) -> (N -> Q) a morphism of pre-crossed modules whose
/// source is x's base.
InducedX2Result induced_x2mod(const XModMorphism& theta, const TwoCrossedModule& x, InducedOptions opts = {});

/// f* : θ*(L) -> B with f*(q·φ″(l)) = q·f(l) and f*{n1,n2} = {n1,n2}.
/// `map` is f*.
Factorization induced_x2_universal(const InducedX2Result& r, const X2Morphism& f);

/// Push-out of left : X0 -> X1 and right : X0 -> X2.
InducedX2Result pushout_x2(const X2Morphism& left, const X2Morphism& right, InducedOptions opts = {});
/// Push-out with the trivial 2-crossed module as second leg.
InducedX2Result cokernel_x2(const X2Morphism& f, InducedOptions opts = {});

/// The trivial 2-crossed module 1 -> 1 -> 1.
TwoCrossedModule trivial_x2mod();

}  // namespace crossmod
