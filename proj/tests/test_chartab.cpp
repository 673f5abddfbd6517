#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <map>

#include "support.hpp"

using namespace mfd;
using namespace mfd::test;

namespace {

// Both orthogonality relations in floating point.
bool float_orthogonal(CharTable const& t, double tol) {
  auto const& cl = t.classes;
  std::size_t k = cl.count();
  std::vector<std::vector<std::complex<double>>> v(t.size(), std::vector<std::complex<double>>(k));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t l = 0; l < k; ++l) v[i][l] = t.chars[i].values[l].to_complex();
  }
  double n = static_cast<double>(t.group_order);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::complex<double> s = 0;
      for (std::size_t l = 0; l < k; ++l) s += static_cast<double>(cl.sizes[l]) * v[i][l] * std::conj(v[j][l]);
      if (std::abs(s / n - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::complex<double> s = 0;
      for (std::size_t i = 0; i < t.size(); ++i) s += v[i][a] * std::conj(v[i][b]);
      double want = a == b ? n / static_cast<double>(cl.sizes[a]) : 0.0;
      if (std::abs(s - want) > tol * n) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("tables pass the exact and the floating-point checks") {
  for (auto const& n : small_corpus()) {
    auto g = build(n);
    CAPTURE(n.family, n.p);
    auto t = character_table(g);
    CHECK(t.size() == t.classes.count());
    CHECK(check_orthogonality(t));
    CHECK(float_orthogonal(t, 1e-6));
    std::uint64_t sq = 0;
    for (auto const& ch : t.chars) sq += ch.degree * ch.degree;
    CHECK(sq == g.order());
    std::size_t linear = 0;
    for (auto const& ch : t.chars) linear += ch.is_linear();
    CHECK(linear * bf_derived(g).size() == g.order());
    // degrees are values at the identity class
    for (auto const& ch : t.chars) CHECK(ch.values[0].as_integer() == static_cast<std::int64_t>(ch.degree));
  }
}

TEST_CASE("perturbed tables are rejected") {
  auto g = build({"xsp_p3_expP", 3, {}});
  auto t = character_table(g);
  for (std::size_t i : {0u, 5u, 10u}) {
    for (std::size_t l : {0u, 3u}) {
      auto bad = t;
      bad.chars[i].values[l] += int_embed(1, bad.exponent);
      CHECK_FALSE(check_orthogonality(bad));
    }
  }
  Group c3(enumerate_regular(parse_presentation("gens a; rels a^3")));
  CHECK(check_orthogonality(character_table(c3)));
}

TEST_CASE("extraspecial 27 table") {
  auto g = build({"xsp_p3_expP", 3, {}});
  auto t = character_table(g);
  std::map<std::uint64_t, int> mult;
  for (auto const& ch : t.chars) ++mult[ch.degree];
  CHECK(mult == std::map<std::uint64_t, int>{{1, 9}, {3, 2}});
  CHECK(degree_set(t) == std::vector<std::uint64_t>{1, 3});
  CHECK(min_nonlinear_degree(t) == 3);
  CHECK(min_faithful_degree(t) == 3);
  auto d = derived_subgroup(g);
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto k = kernel(g, t, i);
    if (t.chars[i].is_linear()) {
      CHECK(std::includes(k.elements.begin(), k.elements.end(), d.elements.begin(), d.elements.end()));
    } else {
      CHECK(k.is_trivial());
    }
  }
  CHECK(kernel(g, t, 0).order() == g.order());
  // row order: trivial character first
  for (auto const& v : t.chars[0].values) CHECK(v.as_integer() == 1);
}

TEST_CASE("cyclic 9 table") {
  Group c9(enumerate_regular(parse_presentation("gens a; rels a^9")));
  auto t = character_table(c9);
  CHECK(t.size() == 9);
  CHECK(min_faithful_degree(t) == 1);
  CHECK_THROWS_AS(min_nonlinear_degree(t), std::domain_error);
}

TEST_CASE("character values are class functions of element powers") {
  // chi(x^k) for k prime to |G| is a Galois conjugate, so chi(x^-1) = conj(chi(x)).
  auto g = build({"tower", 5, {{"n", 4}, {"i", 3}}});
  auto t = character_table(g);
  auto const& cl = t.classes;
  for (auto const& ch : t.chars) {
    for (std::uint32_t l = 0; l < cl.count(); ++l) {
      auto a = ch.values[l].to_complex();
      auto b = ch.values[cl.inverse_class(l)].to_complex();
      CHECK(std::abs(a - std::conj(b)) < 1e-9);
    }
  }
}

TEST_CASE("order-3125 table is square and exact") {
  auto g = build({"phi4_2111a", 5, {}});
  auto t = character_table(g);
  CHECK(t.size() == conjugacy_classes(g).count());
  CHECK(degree_set(t) == std::vector<std::uint64_t>{1, 5});
}
