#include <catch2/catch_amalgamated.hpp>

#include "mfd/analysis.hpp"
#include "mfd/permdeg.hpp"
#include "support.hpp"

using namespace mfd;
using namespace mfd::test;

namespace {

// Applies the realized action to every element and checks it is a faithful
// homomorphism of the stated degree.
void check_action(Group const& g, GroupSpec const& spec, std::vector<Subgroup> const& witness,
                  PermAction const& act) {
  std::vector<std::vector<std::uint32_t>> perm(g.order());
  perm[0].resize(act.degree);
  for (std::uint32_t i = 0; i < act.degree; ++i) perm[0][i] = i;
  auto const& words = g.regular().def_words;
  for (Element x = 1; x < g.order(); ++x) {
    auto pt = perm[0];
    for (auto l : words[x]) {
      auto const& img = act.images[letter_gen(l)];
      std::vector<std::uint32_t> next(act.degree);
      if (letter_is_inverse(l)) {
        for (std::uint32_t i = 0; i < act.degree; ++i) next[img[i]] = i;
        for (auto& q : pt) q = next[q];
      } else {
        for (auto& q : pt) q = img[q];
      }
    }
    perm[x] = pt;
    CHECK(pt != perm[0]);
  }
  std::size_t total = 0;
  for (auto const& h : witness) total += g.order() / h.order();
  CHECK(act.degree == total);
  (void)spec;
}

}  // namespace

TEST_CASE("mu agrees with an all-subgroup oracle") {
  for (auto const& n : small_corpus()) {
    auto spec = expand_catalog(n.family, n.p, n.params);
    Group g(enumerate_regular(spec));
    if (g.order() > 729) continue;
    CAPTURE(n.family, n.p);
    std::vector<std::vector<Element>> subs;
    for (auto const& s : all_subgroups(g)) subs.push_back(s.elements);
    auto oracle = bf_mu(g, subs);
    auto mu = solve_mu(g);
    CHECK(mu.complete);
    CHECK(mu.mu_value == oracle);
    // witness cores meet trivially
    std::vector<Element> all(g.order());
    for (Element x = 0; x < g.order(); ++x) all[x] = x;
    for (auto const& h : mu.witness) all = meet(all, bf_core(g, h.elements));
    CHECK(all.size() == 1);
    auto act = realize_permutation(g, mu.witness, &spec);
    CHECK(act.degree == mu.mu_value);
    check_action(g, spec, mu.witness, act);
  }
}

TEST_CASE("thread count does not change the answer") {
  auto g = build({"phi4_221b", 5, {}});
  MuOptions one;
  MuOptions many;
  many.threads = 4;
  auto a = solve_mu(g, one);
  auto b = solve_mu(g, many);
  CHECK(a.mu_value == 150);
  CHECK(a.mu_value == b.mu_value);
  CHECK(a.degrees == b.degrees);
  REQUIRE(a.witness.size() == b.witness.size());
  for (std::size_t i = 0; i < a.witness.size(); ++i) CHECK(a.witness[i] == b.witness[i]);
}

TEST_CASE("paper values at small orders") {
  CHECK(solve_mu(build({"tower", 5, {{"n", 4}, {"i", 2}}})).mu_value == 25);
  CHECK(solve_mu(build({"tower", 5, {{"n", 4}, {"i", 3}}})).mu_value == 125);
  CHECK(solve_mu(build({"xsp_expP2_x_cp2", 3, {}})).mu_value == 18);
  CHECK(solve_mu(build({"abelian", 3, {{"r1", 1}, {"r2", 2}}})).mu_value == 12);
}

TEST_CASE("regular and non-faithful witnesses") {
  auto spec = expand_catalog("xsp_p3_expP", 3);
  Group g(enumerate_regular(spec));
  auto regular = realize_permutation(g, {trivial_subgroup(g)}, &spec);
  CHECK(regular.degree == 27);
  CHECK(regular.orbit_count == 1);
  check_action(g, spec, {trivial_subgroup(g)}, regular);
  CHECK_THROWS_AS(realize_permutation(g, {center(g)}, &spec), NotFaithful);

  // an order-3 subgroup missing the centre gives the transitive action on 9 points
  for (auto const& s : all_subgroups(g)) {
    if (s.order() == 3 && core(g, s).is_trivial()) {
      auto act = realize_permutation(g, {s}, &spec);
      CHECK(act.degree == 9);
      CHECK(act.orbit_count == 1);
      break;
    }
  }
}

TEST_CASE("cycle notation") {
  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({1, 2, 0, 3}) == "(1,2,3)");
  CHECK(cycle_notation({1, 0, 3, 2}) == "(1,2)(3,4)");
}

TEST_CASE("budget exhaustion marks the result incomplete") {
  auto g = build({"phi4_2111a", 5, {}});
  MuOptions o;
  o.node_budget = 2;
  auto mu = solve_mu(g, o);
  CHECK_FALSE(mu.complete);
  CHECK(mu.mu_value >= 50);
  auto act = realize_permutation(g, mu.witness);
  CHECK(act.degree == mu.mu_value);
}

TEST_CASE("c and mu cross-check") {
  auto g = build({"phi4_2111a", 5, {}});
  auto t = character_table(g);
  auto sums = galois_orbits(t);
  auto c = solve_c(g, t, sums);
  auto mu = solve_mu(g);
  auto x = cross_check_c_mu(c.c_value, mu);
  CHECK(x.equal);
  CHECK(x.c == 50);
  CHECK(x.mu == 50);
}

TEST_CASE("non p-groups are rejected") {
  Group s3(enumerate_regular(parse_presentation("gens a,b; rels a^3, b^2, (a*b)^2")));
  CHECK(s3.prime() == 0);
  CHECK_THROWS_AS(solve_mu(s3), std::invalid_argument);
}
