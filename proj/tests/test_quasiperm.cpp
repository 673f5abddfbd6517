#include <catch2/catch_amalgamated.hpp>

#include "mfd/analysis.hpp"
#include "support.hpp"

using namespace mfd;
using namespace mfd::test;

TEST_CASE("Galois orbits of small tables") {
  Group c9(enumerate_regular(parse_presentation("gens a; rels a^9")));
  auto t9 = character_table(c9);
  auto s9 = galois_orbits(t9);
  std::vector<std::size_t> sizes;
  for (auto const& s : s9) sizes.push_back(s.orbit.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 6});
  for (auto const& s : s9) {
    if (s.orbit.size() == 6) {
      CHECK(s.psi_degree == 6);
      auto a = c9.generators()[0];
      CHECK(s.values[t9.classes.class_of[a]] == 0);
    }
    if (s.orbit.size() == 1) {
      for (auto v : s.values) CHECK(v == 1);
    }
  }

  auto h = build({"xsp_p3_expP", 3, {}});
  auto t = character_table(h);
  auto sums = galois_orbits(t);
  std::size_t faithful = 0;
  for (auto const& s : sums) {
    if (s.char_degree != 3) continue;
    ++faithful;
    CHECK(s.orbit.size() == 2);
    CHECK(s.psi_degree == 6);
    CHECK(*std::min_element(s.values.begin(), s.values.end()) == -3);
    CHECK(m_of(s.values) == 3);
  }
  CHECK(faithful == 1);
  CHECK(sums.size() == 6);
}

TEST_CASE("m of class functions") {
  CHECK(m_of({1, 1, 1}) == 0);
  CHECK(m_of({2, -1, -1}) == 1);
  CHECK(m_of({6, -3, 0, 6}) == 3);
}

TEST_CASE("base-p digits") {
  CHECK(base_p_digits(150, 5) == std::vector<int>{0, 1, 1});
  CHECK(base_p_digits(50, 5) == std::vector<int>{0, 2});
  CHECK(base_p_digits(625, 5) == std::vector<int>{0, 0, 0, 1});
  CHECK(base_p_digits(12, 3) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(base_p_digits(7, 5), std::invalid_argument);
  CHECK_THROWS_AS(base_p_digits(0, 5), std::invalid_argument);
}

TEST_CASE("c agrees with brute force over irredundant families") {
  for (auto const& n : small_corpus()) {
    auto g = build(n);
    CAPTURE(n.family, n.p);
    auto t = character_table(g);
    auto sums = galois_orbits(t);
    auto oracle = bf_c(t, sums, g.log_order());
    CSearchOptions fast;
    auto a = solve_c(g, t, sums, fast);
    CSearchOptions ex;
    ex.mode = CMode::GeneralExhaustive;
    auto b = solve_c(g, t, sums, ex);
    CHECK(a.c_value == oracle);
    CHECK(b.c_value == oracle);
    CHECK(is_irredundant_faithful(t, sums, a.witness));
    CHECK(is_irredundant_faithful(t, sums, b.witness));
    CHECK(a.c_value == a.xi_degree + a.m_value);
  }
}

TEST_CASE("semidihedral 16: exhaustive and size-ranged searches agree") {
  auto g = build({"sd16", 2, {}});
  auto t = character_table(g);
  CHECK(t.size() == 7);
  auto sums = galois_orbits(t);
  CSearchOptions ranged;
  ranged.size_range = std::pair(1, 1);
  auto a = solve_c(g, t, sums, ranged);
  CSearchOptions ex;
  ex.mode = CMode::GeneralExhaustive;
  auto b = solve_c(g, t, sums, ex);
  CHECK(a.c_value == b.c_value);
  CHECK(b.c_value == bf_c(t, sums, 4));
  CHECK(b.c_value == 8);
}

TEST_CASE("direct product with a linear witness") {
  auto g = build({"xsp_expP_x_cp", 3, {}});
  auto t = character_table(g);
  auto sums = galois_orbits(t);
  auto s = solve_c(g, t, sums);
  CHECK(s.c_value == 12);
  CHECK(s.contains_linear_witness);
  // no faithful irredundant family without a linear sum reaches 12
  std::vector<GaloisSum> nonlinear;
  for (auto const& x : sums) {
    if (!x.contains_linear) nonlinear.push_back(x);
  }
  auto best = bf_c(t, nonlinear, g.log_order());
  CHECK((best < 0 || best > 12));
}

TEST_CASE("budget exhaustion is reported") {
  auto g = build({"xsp_expP2_x_cp2", 3, {}});
  auto t = character_table(g);
  auto sums = galois_orbits(t);
  CSearchOptions o;
  o.mode = CMode::GeneralExhaustive;
  o.node_budget = 3;
  CHECK_THROWS_AS(solve_c(g, t, sums, o), BudgetExceeded);
}

TEST_CASE("Galois sums are integer valued and constant on rational classes") {
  auto g = build({"phi4_221b", 5, {}});
  auto t = character_table(g);
  auto sums = galois_orbits(t);
  std::size_t total = 0;
  for (auto const& s : sums) total += s.orbit.size();
  CHECK(total == t.size());
  for (auto const& s : sums) {
    for (std::uint32_t l = 0; l < t.classes.count(); ++l) {
      for (std::int64_t k : {2, 3, 4}) CHECK(s.values[t.classes.power_map(l, k)] == s.values[l]);
    }
  }
}
