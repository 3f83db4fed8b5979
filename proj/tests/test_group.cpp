#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace crossmod;

TEST_CASE("group tables validate and relocate the identity", "[group]") {
  CHECK(FiniteGroup::from_table({{0}})->order() == 1);
  CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}})->order() == 2);
  // identity stored at index 1
  const Group g = FiniteGroup::from_table({{1, 0}, {0, 1}}, {"t", "e"});
  CHECK(g->label(0) == "e");
  CHECK(g->mul(1, 1) == 0);
}

TEST_CASE("a Latin square that is not a group is rejected with a witness", "[group]") {
  // Latin square with identity 0 but non-associative
  const std::vector<std::vector<Elem>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  bool assoc = true;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) assoc = assoc && t[t[a][b]][c] == t[a][t[b][c]];
  REQUIRE_FALSE(assoc);
  try {
    FiniteGroup::from_table(t);
    FAIL("accepted a non-group");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
    REQUIRE(e.witness().size() == 3);
    const auto& w = e.witness();
    CHECK(t[t[w[0]][w[1]]][w[2]] != t[w[0]][t[w[1]][w[2]]]);
  }
}

TEST_CASE("standard groups have the expected orders and shapes", "[group]") {
  CHECK(FiniteGroup::cyclic(7)->order() == 7);
  CHECK(FiniteGroup::dihedral(4)->order() == 8);
  CHECK_FALSE(FiniteGroup::dihedral(4)->is_abelian());
  CHECK(FiniteGroup::symmetric(4)->order() == 24);
  CHECK(FiniteGroup::klein_four()->is_abelian());
  CHECK(FiniteGroup::quaternion()->order() == 8);
  CHECK(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))->order() == 6);
}

TEST_CASE("homomorphisms validate every pair", "[group]") {
  const Group c4 = FiniteGroup::cyclic(4), c2 = FiniteGroup::cyclic(2);
  CHECK_NOTHROW(GroupHom::identity(c4));
  const GroupHom q = GroupHom::make(c4, c2, {0, 1, 0, 1});
  CHECK(q.is_surjective());
  CHECK(q.kernel().order() == 2);
  try {
    GroupHom::make(c4, c4, {1, 0, 2, 3});
    FAIL("accepted a non-hom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAHom);
  }
}

TEST_CASE("actions must be by automorphisms and compose", "[group]") {
  const Group c4 = FiniteGroup::cyclic(4), c2 = FiniteGroup::cyclic(2);
  CHECK_NOTHROW(ActionTable::trivial(c2, c4));
  CHECK_NOTHROW(ActionTable::make(c2, c4, {{0, 1, 2, 3}, {0, 3, 2, 1}}));
  CHECK_THROWS_AS(ActionTable::make(c2, c4, {{0, 1, 2, 3}, {0, 1, 1, 3}}), Error);
  // C4 acting through a generator of order 4 by inversion does not compose
  CHECK_THROWS_AS(ActionTable::make(c4, c4, {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 3, 2, 1}, {0, 3, 2, 1}}), Error);
  const Group s3 = FiniteGroup::symmetric(3);
  const ActionTable conj = ActionTable::conjugation(s3);
  for (Elem p = 0; p < 6; ++p)
    for (Elem m = 0; m < 6; ++m) CHECK(conj(p, m) == s3->mul(s3->mul(p, m), s3->inv(p)));
  CHECK(ActionTable::conjugation(FiniteGroup::cyclic(5)).is_trivial());
}

TEST_CASE("subgroups, closures, quotients and transversals", "[group]") {
  const Group s3 = FiniteGroup::symmetric(3), c4 = FiniteGroup::cyclic(4);
  const Elem t = fixtures::find_element(s3, 2);
  CHECK(Subgroup::generated(s3, std::vector<Elem>{}).order() == 1);
  CHECK(Subgroup::generated(c4, std::vector<Elem>{2}).order() == 2);
  const Subgroup h = Subgroup::generated(s3, std::vector<Elem>{t});
  CHECK(h.order() == 2);
  CHECK_FALSE(h.is_normal());
  CHECK(Subgroup::normal_closure(s3, std::vector<Elem>{t}).order() == 6);
  CHECK_THROWS_AS(quotient(s3, h), Error);
  const Subgroup a3 = Subgroup::generated(s3, std::vector<Elem>{fixtures::find_element(s3, 3)});
  const Quotient q = quotient(s3, a3);
  CHECK(q.group->order() == 2);
  CHECK(q.representatives[0] == 0);
  CHECK(quotient(s3, Subgroup::trivial(s3)).group->order() == 6);
  CHECK(left_transversal(s3, Subgroup::whole(s3)) == std::vector<Elem>{0});
  CHECK(left_transversal(c4, Subgroup::generated(c4, std::vector<Elem>{2})).size() == 2);
  const auto tr = left_transversal(s3, h);
  REQUIRE(tr.size() == 3);
  CHECK(tr[0] == 0);
  // representatives lie in distinct cosets
  for (std::size_t i = 0; i < tr.size(); ++i)
    for (std::size_t j = i + 1; j < tr.size(); ++j) CHECK_FALSE(h.contains(s3->mul(s3->inv(tr[i]), tr[j])));
}

TEST_CASE("hom enumeration agrees with exhaustive map search", "[group][oracle]") {
  const std::vector<Group> gs{FiniteGroup::trivial(),     FiniteGroup::cyclic(2), FiniteGroup::cyclic(4),
                              FiniteGroup::klein_four(), FiniteGroup::symmetric(3), FiniteGroup::cyclic(6)};
  for (const auto& g : gs)
    for (const auto& h : gs) {
      long long space = 1;
      for (int i = 0; i < g->order(); ++i) space *= h->order();
      if (space > 2000000) continue;
      CAPTURE(g->order(), h->order());
      CHECK(static_cast<long long>(enumerate_homs(g, h).size()) == fixtures::brute_hom_count(g, h));
    }
  CHECK(enumerate_homs(FiniteGroup::dihedral(4), FiniteGroup::symmetric(3)).size() == 10);
  CHECK(enumerate_homs(FiniteGroup::trivial(), FiniteGroup::symmetric(3)).size() == 1);
}

TEST_CASE("automorphism groups and isomorphism search", "[group]") {
  CHECK(automorphism_group(FiniteGroup::klein_four()).group->order() == 6);
  CHECK(automorphism_group(FiniteGroup::cyclic(5)).group->order() == 4);
  CHECK(automorphism_group(FiniteGroup::symmetric(3)).group->order() == 6);
  CHECK(automorphism_group(FiniteGroup::quaternion()).group->order() == 24);
  CHECK(find_isomorphism(FiniteGroup::cyclic(6),
                         FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)))
            .has_value());
  CHECK_FALSE(find_isomorphism(FiniteGroup::cyclic(4), FiniteGroup::klein_four()).has_value());
  CHECK_FALSE(find_isomorphism(FiniteGroup::dihedral(4), FiniteGroup::quaternion()).has_value());
}

TEST_CASE("generator extension detects inconsistent assignments", "[group]") {
  const Group c4 = FiniteGroup::cyclic(4), c2 = FiniteGroup::cyclic(2);
  const std::vector<Elem> gens{1};
  CHECK(extend_from_generators(c4, c2, gens, std::vector<Elem>{1}).has_value());
  CHECK_FALSE(extend_from_generators(c2, c4, std::vector<Elem>{1}, std::vector<Elem>{1}).has_value());
}
