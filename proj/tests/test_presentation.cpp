#include <catch2/catch_amalgamated.hpp>

#include "mfd/catalog.hpp"
#include "mfd/regular_group.hpp"
#include "support.hpp"

using namespace mfd;

TEST_CASE("commutator shorthand expands") {
  auto spec = parse_presentation("gens a,b; rels [a,b], a^3, b^3");
  REQUIRE(spec.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(spec.relators.size() == 3);
  Word ab = {inv_letter(gen_letter(0)), inv_letter(gen_letter(1)), gen_letter(0), gen_letter(1)};
  CHECK(spec.relators[0] == ab);
  CHECK(enumerate_regular(spec).order == 9);
}

TEST_CASE("exponents, parentheses and relations") {
  auto spec = parse_presentation("gens x,y; # comment\n rels x^(-2) = y, (x*y)^2, [x,y,x];");
  CHECK(spec.relators.size() == 3);
  CHECK(spec.format_word(spec.relators[1]) == "x*y*x*y");
  auto again = parse_presentation(spec.to_text());
  CHECK(again.relators == spec.relators);
}

TEST_CASE("syntax errors report offsets") {
  try {
    parse_presentation("gens a; rels a^(");
    FAIL("accepted malformed input");
  } catch (ParseError const& e) {
    CHECK(e.offset() == 13);
  }
  CHECK_THROWS_AS(parse_presentation("gens a; rels b"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a,a; rels a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rels a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a; rels [a]"), ParseError);
}

TEST_CASE("catalog parameter and prime errors") {
  CHECK_THROWS_AS(expand_catalog("phi43_1", 3), CatalogError);
  CHECK_THROWS_AS(expand_catalog("no_such_group", 5), CatalogError);
  CHECK_THROWS_AS(expand_catalog("phi42_3k", 5, {{"k", 5}}), CatalogError);
  CHECK_THROWS_AS(expand_catalog("phi42_3k", 5, {{"k", 0}}), CatalogError);
  CHECK_THROWS_AS(expand_catalog("tower", 5, {{"n", 6}, {"i", 2}}), CatalogError);
  CHECK_THROWS_AS(expand_catalog("xsp_p3_expP", 4), CatalogError);
  CHECK_THROWS_AS(expand_catalog("sd16", 3), CatalogError);
}

TEST_CASE("norm form solutions are the least ones") {
  auto [a, b] = solve_norm_form(5, 1, 1);
  CHECK((a * a - b * b - 1) % 5 == 0);
  for (long x = 1; x <= 5; ++x) {
    for (long y = 1; y <= 5; ++y) {
      if (((x * x - y * y - 1) % 5 + 5) % 5 == 0) {
        CHECK(std::pair(a, b) <= std::pair(x, y));
      }
    }
  }
  CHECK(smallest_nonresidue(5) == 2);
  CHECK(smallest_nonresidue(7) == 3);
}

TEST_CASE("phi4(2111)a presentation shape") {
  auto spec = expand_catalog("phi4_2111a", 5);
  CHECK(spec.generators.size() == 5);
  bool found = false;
  for (auto const& r : spec.relators) found = found || spec.format_word(r) == "a^5*b2^-1";
  CHECK(found);
  CHECK(spec.meta.not_nontrivial_split);
}

TEST_CASE("enumeration orders and determinism") {
  struct Case {
    std::string id;
    int p;
    Params params;
    std::size_t order;
  };
  std::vector<Case> cases = {{"abelian", 3, {{"r1", 1}, {"r2", 2}}, 27},
                             {"sd16", 2, {}, 16},
                             {"phi4_221b", 5, {}, 3125},
                             {"tower", 5, {{"n", 4}, {"i", 3}}, 625},
                             {"phi42_1", 5, {}, 15625}};
  for (auto const& c : cases) {
    auto spec = expand_catalog(c.id, c.p, c.params);
    auto g1 = enumerate_regular(spec);
    CHECK(g1.order == c.order);
    auto g2 = enumerate_regular(spec);
    CHECK(g1.letter_perms == g2.letter_perms);
    CHECK(g1.def_words == g2.def_words);
    for (auto const& r : spec.relators) {
      for (Element x = 0; x < g1.order; ++x) {
        if (g1.apply(x, r) != x) {
          FAIL(c.id << ": relator moves element " << x);
        }
      }
    }
    for (Element x = 0; x < g1.order; ++x) REQUIRE(g1.apply(0, g1.def_words[x]) == x);
  }
}

TEST_CASE("every catalog family enumerates to its stated order") {
  for (auto const& e : catalog()) {
    auto p = default_prime(e.id);
    auto spec = expand_catalog(e.id, p);
    CAPTURE(e.id);
    for (auto const& ev : expected_values(e.id, p)) {
      if (ev.quantity == "order") CHECK(static_cast<long>(enumerate_regular(spec).order) == ev.value.at(0));
    }
  }
}

TEST_CASE("infinite presentation exceeds the budget") {
  auto spec = parse_presentation("gens a,b; rels a^2");
  CHECK_THROWS_AS(enumerate_regular(spec, 5000), BudgetExceeded);
}
