#include "fixtures.hpp"

#include <cstdlib>
#include <map>
#include <set>

namespace fixtures {

Elem find_element(const Group& g, int order, Elem after) {
  for (Elem e = after + 1; e < g->order(); ++e)
    if (g->element_order(e) == order) return e;
  throw Error(ErrorKind::Internal, "no element of the requested order");
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::map<std::vector<bool>, Subgroup> seen;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = a; b < g->order(); ++b) {
      const Subgroup s = Subgroup::normal_closure(g, std::vector<Elem>{a, b});
      seen.emplace(s.mask(), s);
    }
  std::vector<Subgroup> out;
  for (auto& [mask, s] : seen) out.push_back(s);
  return out;
}

std::optional<XModMorphism> quotient_theta(const PreCrossedModule& x, const Subgroup& k) {
  const Subgroup km = action_commutator_subgroup(k, x.action());
  if (!km.is_normal()) return std::nullopt;
  const Quotient qm = quotient(x.M(), km), qp = quotient(x.P(), k);
  std::vector<std::vector<Elem>> rows(qp.group->order(), std::vector<Elem>(qm.group->order()));
  for (Elem q = 0; q < qp.group->order(); ++q)
    for (Elem n = 0; n < qm.group->order(); ++n)
      rows[q][n] = qm.projection(x.act(qp.representatives[q], qm.representatives[n]));
  std::vector<Elem> d(qm.group->order());
  for (Elem n = 0; n < qm.group->order(); ++n) d[n] = qp.projection(x.boundary()(qm.representatives[n]));
  const PreCrossedModule target = PreCrossedModule::make(ActionTable::make(qp.group, qm.group, rows),
                                                         GroupHom::make(qm.group, qp.group, d));
  return XModMorphism::make(qm.projection, qp.projection, x, target);
}

namespace {

Subgroup center(const Group& g) {
  std::vector<bool> mask(g->order());
  for (Elem e = 0; e < g->order(); ++e) mask[e] = g->is_central(e);
  return Subgroup::from_mask(g, mask);
}

}  // namespace

std::vector<Named<CrossedModule>> crossed_modules() {
  const Group c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), c4 = FiniteGroup::cyclic(4);
  const Group s3 = FiniteGroup::symmetric(3), d4 = FiniteGroup::dihedral(4), q8 = FiniteGroup::quaternion();
  const Group k4 = FiniteGroup::klein_four(), one = FiniteGroup::trivial();
  std::vector<Named<CrossedModule>> out;

  const Elem r3 = find_element(s3, 3);
  const Elem rot = find_element(d4, 4);
  const Elem i8 = find_element(q8, 4);
  out.push_back({"normal A3 < S3", normal_inclusion(s3, Subgroup::generated(s3, std::vector<Elem>{r3}))});
  out.push_back({"normal Z(D4) < D4", normal_inclusion(d4, center(d4))});
  out.push_back({"normal <i> < Q8", normal_inclusion(q8, Subgroup::generated(q8, std::vector<Elem>{i8}))});
  out.push_back({"normal <r> < D4", normal_inclusion(d4, Subgroup::generated(d4, std::vector<Elem>{rot}))});
  out.push_back({"identity C4", normal_inclusion(c4, Subgroup::whole(c4))});

  out.push_back({"Aut C3", automorphism_xmod(c3)});
  out.push_back({"Aut K4", automorphism_xmod(k4)});
  out.push_back({"Aut S3", automorphism_xmod(s3)});
  out.push_back({"Aut C4", automorphism_xmod(c4)});

  out.push_back({"abelian C2 on C4 by inversion",
                 abelian_xmod(ActionTable::make(c2, c4, {{0, 1, 2, 3}, {0, 3, 2, 1}}))});
  out.push_back({"abelian Aut(K4) on K4", abelian_xmod(automorphism_group(k4).action)});
  out.push_back({"abelian trivial C2 on C3", abelian_xmod(ActionTable::trivial(c2, c3))});
  out.push_back({"C2 -> 1", abelian_xmod(ActionTable::trivial(one, c2))});

  out.push_back({"central C4 -> C2",
                 central_extension_xmod(quotient(c4, Subgroup::generated(c4, std::vector<Elem>{2})).projection)});
  out.push_back({"central Q8 -> K4", central_extension_xmod(quotient(q8, center(q8)).projection)});
  out.push_back({"central D4 -> K4", central_extension_xmod(quotient(d4, center(d4)).projection)});
  return out;
}

PreCrossedModule c4_inversion() {
  static const Group c4 = FiniteGroup::cyclic(4), c2 = FiniteGroup::cyclic(2);
  return PreCrossedModule::make(ActionTable::make(c2, c4, {{0, 1, 2, 3}, {0, 3, 2, 1}}),
                                GroupHom::make(c4, c2, {0, 1, 0, 1}));
}

XModMorphism c4_inversion_theta() {
  const PreCrossedModule x = c4_inversion();
  const Group one = FiniteGroup::trivial();
  const PreCrossedModule y =
      PreCrossedModule::make(ActionTable::trivial(one, x.P()), GroupHom::trivial(x.P(), one));
  return XModMorphism::make(x.boundary(), GroupHom::trivial(x.P(), one), x, y);
}

std::vector<Named<PreCrossedModule>> precrossed_modules() {
  const Group d4 = FiniteGroup::dihedral(4), s3 = FiniteGroup::symmetric(3), c2 = FiniteGroup::cyclic(2);
  const Group k4 = FiniteGroup::klein_four(), one = FiniteGroup::trivial(), q8 = FiniteGroup::quaternion();
  std::vector<Named<PreCrossedModule>> out;
  out.push_back({"C4 -> C2 inversion", c4_inversion()});
  // sign map with trivial action
  std::vector<Elem> sign(s3->order());
  for (Elem e = 0; e < s3->order(); ++e) sign[e] = s3->element_order(e) == 2 ? 1 : 0;
  out.push_back({"S3 -> C2 sign, trivial action",
                 PreCrossedModule::make(ActionTable::trivial(c2, s3), GroupHom::make(s3, c2, sign))});
  // K4 -> C2 killing b, C2 swapping a and b
  out.push_back({"K4 -> C2 swap",
                 PreCrossedModule::make(ActionTable::make(c2, k4, {{0, 1, 2, 3}, {0, 2, 1, 3}}),
                                        GroupHom::make(k4, c2, {0, 1, 1, 0}))});
  out.push_back({"D4 -> 1", PreCrossedModule::make(ActionTable::trivial(one, d4), GroupHom::trivial(d4, one))});
  out.push_back({"D4 -> D4 conjugation, zero boundary",
                 PreCrossedModule::make(ActionTable::conjugation(d4), GroupHom::trivial(d4, d4))});
  out.push_back({"Q8 -> 1", PreCrossedModule::make(ActionTable::trivial(one, q8), GroupHom::trivial(q8, one))});
  return out;
}

std::vector<X2Fixture> two_crossed_modules() {
  std::vector<X2Fixture> out;
  for (auto& p : precrossed_modules()) out.push_back({"Peiffer " + p.name, from_precrossed_peiffer(p.value), false});
  for (auto& c : crossed_modules()) out.push_back({"lift " + c.name, from_crossed(c.value), true});
  return out;
}

long long brute_hom_count(const Group& g, const Group& h) {
  const int n = g->order(), m = h->order();
  std::vector<Elem> map(n, 0);
  long long count = 0;
  for (;;) {
    bool ok = map[0] == 0;
    for (Elem a = 0; ok && a < n; ++a)
      for (Elem b = 0; ok && b < n; ++b) ok = map[g->mul(a, b)] == h->mul(map[a], map[b]);
    count += ok;
    int i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) return count;
  }
}

int closure_order(const Group& g, const std::vector<Elem>& gens) {
  std::set<Elem> s{0};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem x : gens)
        if (s.insert(g->mul(a, x)).second) grew = true;
  }
  return static_cast<int>(s.size());
}

int quotient_by_action_commutators(const PreCrossedModule& x, const GroupHom& phi) {
  const Group& m = x.M();
  std::vector<Elem> gens;
  for (Elem k = 0; k < phi.src()->order(); ++k)
    if (phi(k) == 0)
      for (Elem a = 0; a < m->order(); ++a) gens.push_back(m->mul(x.act(k, a), m->inv(a)));
  return m->order() / closure_order(m, gens);
}

int fiber_pairs(const GroupHom& v, const GroupHom& phi) {
  int count = 0;
  for (Elem n = 0; n < v.src()->order(); ++n)
    for (Elem p = 0; p < phi.src()->order(); ++p) count += v(n) == phi(p);
  return count;
}

int top_quotient_oracle(const TwoCrossedModule& x, const GroupHom& phi) {
  std::vector<Elem> gens;
  for (Elem k = 0; k < x.P()->order(); ++k)
    if (phi(k) == 0)
      for (Elem l = 0; l < x.L()->order(); ++l) gens.push_back(x.L()->mul(x.act_l()(k, l), x.L()->inv(l)));
  return x.L()->order() / closure_order(x.L(), gens);
}

bool traces_relators(const Presentation& p, const EnumerationResult& r) {
  for (int c = 0; c < r.table.num_cosets; ++c)
    for (const Word& w : p.relators) {
      int at = c;
      for (Letter l : w) at = r.table(at, 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0));
      if (at != c) return false;
    }
  return true;
}

}  // namespace fixtures
