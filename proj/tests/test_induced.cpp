#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace crossmod;

namespace {

InducedOptions with(Strategy s) {
  InducedOptions o;
  o.strategy = s;
  return o;
}

// Element-order profile, a cheap isomorphism invariant for large results.
std::vector<int> order_profile(const Group& g) {
  std::vector<int> count(g->order() + 1);
  for (Elem e = 0; e < g->order(); ++e) ++count[g->element_order(e)];
  return count;
}

bool is_identity(const GroupHom& h) {
  for (Elem e = 0; e < h.src()->order(); ++e)
    if (h(e) != e) return false;
  return true;
}

}  // namespace

TEST_CASE("dimension 1: C2 induced along C2 -> 1 has order 2", "[induced]") {
  const Group c2 = FiniteGroup::cyclic(2), one = FiniteGroup::trivial();
  const CrossedModule m = normal_inclusion(c2, Subgroup::whole(c2));
  const GroupHom phi = GroupHom::trivial(c2, one);
  const InducedXModResult epi = induced_xmod(m, phi, with(Strategy::Epi));
  const InducedXModResult tc = induced_xmod(m, phi, with(Strategy::GeneralTC));
  REQUIRE(epi.decided());
  REQUIRE(tc.decided());
  CHECK(epi.module->M()->order() == 2);
  CHECK(tc.module->M()->order() == 2);
  CHECK(find_xmod_isomorphism(*epi.module, *tc.module).has_value());
}

TEST_CASE("dimension 1: quotient path agrees with enumeration on surjections", "[induced][oracle]") {
  int compared = 0;
  for (const auto& [name, m] : fixtures::crossed_modules()) {
    for (const Subgroup& k : fixtures::normal_subgroups(m.P())) {
      const Quotient q = quotient(m.P(), k);
      if (q.group->order() > 8) continue;
      CAPTURE(name, k.order());
      const InducedXModResult epi = induced_xmod(m, q.projection, with(Strategy::Epi));
      const InducedXModResult tc = induced_xmod(m, q.projection, with(Strategy::GeneralTC));
      REQUIRE(epi.decided());
      REQUIRE(tc.decided());
      CHECK(epi.strategy_used == Strategy::Epi);
      CHECK(epi.module->M()->order() == fixtures::quotient_by_action_commutators(m, q.projection));
      CHECK(tc.module->M()->order() == epi.module->M()->order());
      CHECK(is_crossed(*tc.module));
      CHECK(find_xmod_isomorphism(*epi.module, *tc.module).has_value());

      // the factorization of one canonical map through the other is an isomorphism
      const Factorization f = induced_xmod_universal(epi, *tc.canonical);
      CHECK(f.candidates == 1);
      CHECK(find_isomorphism(epi.module->M(), tc.module->M()).has_value());
      std::vector<bool> hit(tc.module->M()->order());
      for (Elem e = 0; e < epi.module->M()->order(); ++e) hit[f.map(e)] = true;
      CHECK(std::count(hit.begin(), hit.end(), true) == tc.module->M()->order());
      ++compared;
    }
  }
  CHECK(compared >= 5);
}

TEST_CASE("dimension 1: inducing along the identity", "[induced]") {
  for (const auto& [name, m] : fixtures::crossed_modules()) {
    CAPTURE(name);
    for (Strategy s : {Strategy::Auto, Strategy::GeneralTC, Strategy::Mono}) {
      const InducedXModResult r = induced_xmod(m, GroupHom::identity(m.P()), with(s));
      REQUIRE(r.decided());
      CHECK(find_xmod_isomorphism(*r.module, m).has_value());
      const Factorization f = induced_xmod_universal(r, *r.canonical);
      CHECK(f.candidates == 1);
      CHECK(is_identity(f.map));
    }
  }
}

TEST_CASE("dimension 1: transversal path agrees with enumeration on injections", "[induced][oracle]") {
  const Group c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4), s3 = FiniteGroup::symmetric(3);
  const Group d4 = FiniteGroup::dihedral(4);
  int compared = 0;
  for (const auto& [name, m] : fixtures::crossed_modules()) {
    if (m.P()->order() > 4) continue;
    for (const Group& q : {c4, s3, d4}) {
      for (const GroupHom& phi : enumerate_homs(m.P(), q)) {
        bool injective = true;
        for (Elem e = 1; e < m.P()->order(); ++e) injective = injective && phi(e) != 0;
        if (!injective) continue;
        CAPTURE(name, q->order(), phi.map());
        const InducedXModResult mono = induced_xmod(m, phi, with(Strategy::Mono));
        const InducedXModResult tc = induced_xmod(m, phi, with(Strategy::GeneralTC));
        REQUIRE(mono.decided());
        REQUIRE(tc.decided());
        CHECK(mono.module->M()->order() == tc.module->M()->order());
        CHECK(order_profile(mono.module->M()) == order_profile(tc.module->M()));
        if (mono.module->M()->order() <= 32) CHECK(find_xmod_isomorphism(*mono.module, *tc.module).has_value());
        ++compared;
        break;  // one embedding per target is enough
      }
    }
  }
  CHECK(compared >= 5);

  const CrossedModule m = normal_inclusion(c2, Subgroup::whole(c2));
  const InducedXModResult r = induced_xmod(m, GroupHom::make(c2, c4, {0, 2}), with(Strategy::Mono));
  REQUIRE(r.decided());
  CHECK(r.module->M()->order() == 4);
}

TEST_CASE("dimension 1: strategy preconditions and limits", "[induced]") {
  const Group c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4), s3 = FiniteGroup::symmetric(3);
  const CrossedModule m = normal_inclusion(c2, Subgroup::whole(c2));
  try {
    induced_xmod(m, GroupHom::make(c2, c4, {0, 2}), with(Strategy::Epi));
    FAIL("epi path accepted an injection that is not onto");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StrategyMismatch);
  }

  const GroupHom into_s3 = GroupHom::make(c2, s3, {0, fixtures::find_element(s3, 2)});
  InducedOptions tight = with(Strategy::GeneralTC);
  tight.coset_limit = 2;
  const InducedXModResult r = induced_xmod(m, into_s3, tight);
  CHECK(r.status == Status::UndecidedAtLimit);
  CHECK_FALSE(r.module.has_value());
  CHECK_FALSE(r.presentation.relators.empty());

  InducedOptions capped = with(Strategy::GeneralTC);
  capped.relator_cap = 5;
  try {
    induced_xmod(m, into_s3, capped);
    FAIL("relator cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelatorCapExceeded);
  }
}

TEST_CASE("dimension 1: presentations are instantiated over all of Q", "[induced]") {
  const Group c2 = FiniteGroup::cyclic(2), s3 = FiniteGroup::symmetric(3);
  const CrossedModule m = normal_inclusion(c2, Subgroup::whole(c2));
  const GroupHom phi = GroupHom::make(c2, s3, {0, fixtures::find_element(s3, 2)});
  const Presentation p = induced_xmod_presentation(m, phi);
  CHECK(p.num_generators() == 6 * 2);
  const Presentation t = induced_xmod_mono_presentation(m, phi);
  CHECK(t.num_generators() == 3 * 2);
  // deterministic construction
  CHECK(induced_xmod_presentation(m, phi).relators == p.relators);
}

TEST_CASE("dimension 2: the Peiffer fixture along C2 -> 1 has top order 2", "[induced]") {
  const TwoCrossedModule x = from_precrossed_peiffer(fixtures::c4_inversion());
  const XModMorphism theta = fixtures::c4_inversion_theta();
  const InducedX2Result epi = induced_x2mod(theta, x, with(Strategy::Epi));
  const InducedX2Result tc = induced_x2mod(theta, x, with(Strategy::GeneralTC));
  REQUIRE(epi.decided());
  REQUIRE(tc.decided());
  CHECK(epi.module->L()->order() == 2);
  CHECK(tc.module->L()->order() == 2);
  CHECK(fixtures::top_quotient_oracle(x, theta.eta()) == 2);
  CHECK(scan_axioms(tc.module->data(), {false, 0}).empty());
  CHECK(find_x2_isomorphism(*epi.module, *tc.module).has_value());
}

TEST_CASE("dimension 2: quotient path agrees with enumeration on surjections", "[induced][oracle]") {
  int compared = 0, nontrivial = 0;
  for (const auto& fx : fixtures::two_crossed_modules()) {
    const TwoCrossedModule& x = fx.value;
    for (const Subgroup& k : fixtures::normal_subgroups(x.P())) {
      if (x.P()->order() / k.order() > 8) continue;
      const auto theta = fixtures::quotient_theta(x.base(), k);
      if (!theta) continue;
      CAPTURE(fx.name, k.order());
      const InducedX2Result tc = induced_x2mod(*theta, x, with(Strategy::GeneralTC));
      REQUIRE(tc.decided());
      CHECK(scan_axioms(tc.module->data(), {false, 0}).empty());
      try {
        const InducedX2Result epi = induced_x2mod(*theta, x, with(Strategy::Epi));
        REQUIRE(epi.decided());
        CHECK(epi.module->L()->order() == fixtures::top_quotient_oracle(x, theta->eta()));
        CHECK(epi.module->L()->order() == tc.module->L()->order());
        CHECK(find_x2_isomorphism(*epi.module, *tc.module).has_value());
        ++compared;
        nontrivial += epi.module->L()->order() > 1;
      } catch (const Error& e) {
        // the quotient lifting need not descend; auto must then fall back
        REQUIRE(e.kind() == ErrorKind::NotWellDefined);
        const InducedX2Result fallback = induced_x2mod(*theta, x, with(Strategy::Auto));
        REQUIRE(fallback.decided());
        CHECK(fallback.strategy_used == Strategy::GeneralTC);
      }
    }
  }
  CHECK(compared >= 3);
  CHECK(nontrivial >= 3);
}

TEST_CASE("dimension 2: a lifting that does not descend to the quotient", "[induced]") {
  // θ kills all of M: {a, a} = a^2 is non-trivial in L but {1, 1} = 1.
  const TwoCrossedModule x = from_precrossed_peiffer(fixtures::c4_inversion());
  const Group one = FiniteGroup::trivial();
  const PreCrossedModule point = PreCrossedModule::make(ActionTable::trivial(one, one), GroupHom::identity(one));
  const XModMorphism theta =
      XModMorphism::make(GroupHom::trivial(x.M(), one), GroupHom::trivial(x.P(), one), x.base(), point);
  try {
    induced_x2mod(theta, x, with(Strategy::Epi));
    FAIL("non-descending lifting accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotWellDefined);
    CHECK_FALSE(e.witness().empty());
  }
  const InducedX2Result r = induced_x2mod(theta, x);
  REQUIRE(r.decided());
  CHECK(r.strategy_used == Strategy::GeneralTC);
  CHECK(scan_axioms(r.module->data(), {false, 0}).empty());
  CHECK(r.module->L()->order() == 1);
}

TEST_CASE("dimension 2: inducing along the identity", "[induced]") {
  for (const auto& fx : fixtures::two_crossed_modules()) {
    CAPTURE(fx.name);
    const InducedX2Result r = induced_x2mod(XModMorphism::identity(fx.value.base()), fx.value);
    REQUIRE(r.decided());
    CHECK(find_x2_isomorphism(*r.module, fx.value).has_value());
  }
}

TEST_CASE("dimension 2: universal factorization on every decided fixture", "[induced][universal]") {
  int checked = 0;
  for (const auto& fx : fixtures::two_crossed_modules()) {
    const TwoCrossedModule& x = fx.value;
    for (const Subgroup& k : fixtures::normal_subgroups(x.P())) {
      const auto theta = fixtures::quotient_theta(x.base(), k);
      if (!theta) continue;
      CAPTURE(fx.name, k.order());
      const InducedX2Result r = induced_x2mod(*theta, x);
      if (!r.decided()) continue;
      const X2Morphism& f = *r.canonical;
      const Factorization u = induced_x2_universal(r, f);
      CHECK(u.uniqueness_checked);
      CHECK(u.candidates == 1);
      CHECK(is_identity(u.map));
      // f* φ″ = f on the nose
      for (Elem l = 0; l < x.L()->order(); ++l) CHECK(u.map(f.f2()(l)) == f.f2()(l));

      const InducedX2Result other = induced_x2mod(*theta, x, with(Strategy::GeneralTC));
      REQUIRE(other.decided());
      const Factorization v = induced_x2_universal(r, *other.canonical);
      CHECK(v.candidates == 1);
      for (Elem l = 0; l < x.L()->order(); ++l) CHECK(v.map(f.f2()(l)) == other.canonical->f2()(l));
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("dimension 2: the alternative relator set still validates", "[induced]") {
  const TwoCrossedModule x = from_precrossed_peiffer(fixtures::c4_inversion());
  InducedOptions o = with(Strategy::GeneralTC);
  o.compare_relators = true;
  const InducedX2Result r = induced_x2mod(fixtures::c4_inversion_theta(), x, o);
  REQUIRE(r.decided());
  CHECK(scan_axioms(r.module->data(), {false, 0}).empty());
  CHECK(r.module->L()->order() <= 2);
}

TEST_CASE("push-outs and cokernels", "[induced][pushout]") {
  const TwoCrossedModule x = from_precrossed_peiffer(fixtures::c4_inversion());
  const X2Morphism id = X2Morphism::identity(x);

  const InducedX2Result span = pushout_x2(id, id);
  REQUIRE(span.decided());
  CHECK(find_x2_isomorphism(*span.module, x).has_value());
  CHECK(span.injections.size() == 2);
  CHECK(span.component_orders.size() == 3);

  const InducedX2Result cok = cokernel_x2(id);
  REQUIRE(cok.decided());
  CHECK(cok.module->L()->order() == 1);
  CHECK(cok.module->M()->order() == 1);
  CHECK(cok.module->P()->order() == 1);

  // second leg trivial equals the cokernel
  const TwoCrossedModule one = trivial_x2mod();
  const X2Morphism to_one = X2Morphism::make(GroupHom::trivial(x.L(), one.L()), GroupHom::trivial(x.M(), one.M()),
                                             GroupHom::trivial(x.P(), one.P()), x, one);
  const InducedX2Result po = pushout_x2(id, to_one);
  REQUIRE(po.decided());
  CHECK(find_x2_isomorphism(*po.module, *cok.module).has_value());

  // both legs out of the trivial module into trivial modules
  const X2Morphism triv = X2Morphism::identity(one);
  const InducedX2Result tt = pushout_x2(triv, triv);
  REQUIRE(tt.decided());
  CHECK(tt.module->M()->order() == 1);

  // the trivial map out of the trivial module has the target as cokernel
  for (const auto& fx : fixtures::two_crossed_modules()) {
    if (fx.value.P()->order() > 8) continue;
    CAPTURE(fx.name);
    const TwoCrossedModule& y = fx.value;
    const X2Morphism from_one = X2Morphism::make(GroupHom::trivial(one.L(), y.L()), GroupHom::trivial(one.M(), y.M()),
                                                 GroupHom::trivial(one.P(), y.P()), one, y);
    const InducedX2Result c = cokernel_x2(from_one);
    REQUIRE(c.decided());
    CHECK(find_x2_isomorphism(*c.module, y).has_value());
  }
}
