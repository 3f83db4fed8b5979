#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace crossmod;

using fixtures::traces_relators;

TEST_CASE("words parse, reduce and print", "[presentation]") {
  const Presentation p = make_presentation({"a", "b"}, {});
  CHECK(parse_word(p, "a b^-1 (a b)^2") == Word{1, -2, 1, 2, 1, 2});
  CHECK(parse_word(p, "1").empty());
  CHECK(free_reduce({1, -1, 2, 2, -2}) == Word{2});
  CHECK(format_word(p, {1, 1, -2}) == "a^2 b^-1");
  CHECK_THROWS_AS(parse_word(p, "c"), Error);
  CHECK(inverse({1, -2}) == Word{2, -1});
}

TEST_CASE("cyclic presentations enumerate to their order", "[presentation]") {
  for (int n = 1; n <= 12; ++n) {
    const Presentation p = make_presentation({"a"}, {"a^" + std::to_string(n)});
    const auto r = todd_coxeter(p);
    REQUIRE(r.complete());
    CHECK(r.order() == n);
    CHECK(traces_relators(p, r));
  }
}

TEST_CASE("standard presentations have the known orders", "[presentation]") {
  const std::vector<std::pair<Presentation, int>> cases{
      {make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^2"}), 6},
      {make_presentation({"a", "b"}, {"a^2", "b^2", "(a b)^2"}), 4},
      {make_presentation({"r", "s"}, {"r^4", "s^2", "(s r)^2"}), 8},
      {make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"}), 60},
      {make_presentation({"i", "j"}, {"i^4", "i^2 j^-2", "j^-1 i j i"}), 8},
  };
  for (const auto& [p, n] : cases) {
    const auto r = todd_coxeter(p);
    REQUIRE(r.complete());
    CHECK(r.order() == n);
    CHECK(traces_relators(p, r));
    REQUIRE(r.group);
    CHECK(r.group->order() == n);
  }
}

TEST_CASE("enumeration is deterministic", "[presentation]") {
  const Presentation p = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
  const auto r1 = todd_coxeter(p), r2 = todd_coxeter(p);
  CHECK(r1.table == r2.table);
  CHECK(r1.generator_images == r2.generator_images);
}

TEST_CASE("the coset limit reports undecided rather than failing", "[presentation]") {
  const Presentation p = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
  const auto r = todd_coxeter(p, {10});
  CHECK_FALSE(r.complete());
  CHECK(r.status == EnumStatus::LimitExceeded);
  CHECK(r.max_active <= 10);
}

TEST_CASE("element words evaluate back to their elements", "[presentation]") {
  const Presentation p = make_presentation({"r", "s"}, {"r^4", "s^2", "(s r)^2"});
  const auto r = todd_coxeter(p);
  const auto words = element_words(r);
  for (Elem e = 0; e < r.order(); ++e) CHECK(word_image(p, r, words[e]) == e);
}

TEST_CASE("free products and quotients", "[presentation]") {
  const Presentation a = make_presentation({"a"}, {"a^2"});
  const Presentation b = make_presentation({"a"}, {"a^3"});
  const Presentation f = free_product(a, b);
  CHECK(f.num_generators() == 2);
  const Presentation q = quotient_by(f, {parse_word(f, "(a a_2)^2")});
  const auto r = todd_coxeter(q);
  REQUIRE(r.complete());
  CHECK(r.order() == 6);
}
