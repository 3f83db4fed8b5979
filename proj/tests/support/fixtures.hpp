#pragma once

// Shared fixture library and brute-force oracles for the test suites.

#include <optional>
#include <string>
#include <vector>

#include "crossmod/induced.hpp"

namespace fixtures {

using namespace crossmod;

template <class T>
struct Named {
  std::string name;
  T value;
};

/// The four standard families and a few extras, all groups of order <= 16.
std::vector<Named<CrossedModule>> crossed_modules();
/// Pre-crossed modules that fail CM2, starting with (C4 -> C2, inversion).
std::vector<Named<PreCrossedModule>> precrossed_modules();

struct X2Fixture {
  std::string name;
  TwoCrossedModule value;
  /// Lifted from a crossed module (L trivial).
  bool from_crossed = false;
};
/// Peiffer 2-crossed modules of every pre-crossed fixture and the lifts of
/// every crossed fixture.
std::vector<X2Fixture> two_crossed_modules();

/// C4 -> C2 with C2 acting by inversion.
PreCrossedModule c4_inversion();
/// θ = (C4 -> C2, C2 -> 1) out of c4_inversion() into (C2 -> 1).
XModMorphism c4_inversion_theta();

Elem find_element(const Group& g, int order, Elem after = 0);

/// Normal subgroups of g, each normal closure of at most two elements.
std::vector<Subgroup> normal_subgroups(const Group& g);
/// (M -> P) -> (M/[K,M] -> P/K) for a normal K of P, when [K,M] is normal in M.
std::optional<XModMorphism> quotient_theta(const PreCrossedModule& x, const Subgroup& k);

// ---- oracles (independent of the library's search code) ----

/// Number of homomorphisms by testing every map G -> H.
long long brute_hom_count(const Group& g, const Group& h);
/// Order of the subgroup generated by `gens` by repeated multiplication.
int closure_order(const Group& g, const std::vector<Elem>& gens);
/// |M / [K, M]| for K = Ker φ, computed by closure and Lagrange.
int quotient_by_action_commutators(const PreCrossedModule& x, const GroupHom& phi);
/// Pairs (n, p) with v(n) = φ(p), counted directly.
int fiber_pairs(const GroupHom& v, const GroupHom& phi);
/// |L / [K, L]| with K = Ker φ acting on L through P.
int top_quotient_oracle(const TwoCrossedModule& x, const GroupHom& phi);
/// Every relator, read from every coset, returns to that coset.
bool traces_relators(const Presentation& p, const EnumerationResult& r);

}  // namespace fixtures
