#include <catch2/catch_amalgamated.hpp>

#include "mfd/cyclotomic.hpp"

using namespace mfd;

TEST_CASE("reduce kills vanishing sums") {
  CHECK(CycInt::reduce({1, 1, 1}, 3).is_zero());
  CHECK(CycInt::reduce({1, 0, 0, 1, 0, 0, 1, 0, 0}, 9).is_zero());
  auto two = CycInt::reduce({2, 1, 1}, 3);
  CHECK(two.is_integer());
  CHECK(two.as_integer() == 1);
  CHECK(CycInt::reduce({0, 1, 1}, 3).as_integer() == -1);
}

TEST_CASE("integer embedding and arithmetic") {
  CHECK(add(int_embed(2, 9), int_embed(3, 9)) == int_embed(5, 9));
  CHECK(as_integer(int_embed(-3, 9)) == -3);
  for (std::uint64_t e : {2u, 3u, 4u, 8u, 9u, 25u, 27u}) {
    for (std::uint64_t j = 0; j < e; ++j) {
      auto w = CycInt::root_of_unity(j, e);
      CHECK(add(w, negate(w)).is_zero());
    }
  }
  CHECK_THROWS_AS(as_integer(CycInt::root_of_unity(1, 9)), NotRational);
}

TEST_CASE("traces of primitive roots") {
  // sum over the primitive 9th roots is mu(9) = 0; over primitive 5th roots it is -1
  CycInt t9 = int_embed(0, 9);
  for (std::uint64_t j = 1; j < 9; ++j) {
    if (j % 3) t9 += CycInt::root_of_unity(j, 9);
  }
  CHECK(t9.is_zero());
  CycInt t5 = int_embed(0, 5);
  for (std::uint64_t j = 1; j < 5; ++j) t5 += CycInt::root_of_unity(j, 5);
  CHECK(t5.as_integer() == -1);
  CycInt t4 = CycInt::root_of_unity(1, 4) + CycInt::root_of_unity(3, 4);
  CHECK(t4.is_zero());
}

TEST_CASE("canonical form is stable") {
  for (std::uint64_t e : {3u, 8u, 9u, 25u}) {
    for (std::uint64_t j = 0; j < 2 * e; ++j) {
      std::vector<std::int64_t> raw(e + j % 5, 0);
      for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<std::int64_t>((i * 7 + j) % 5) - 2;
      auto x = CycInt::reduce(raw, e);
      CHECK(CycInt::reduce(x.coeffs(), e) == x);
      auto s = x + x;
      CHECK(CycInt::reduce(s.coeffs(), e) == s);
      CHECK((s - x) == x);
      auto z = x.to_complex();
      std::complex<double> direct = 0;
      for (std::size_t i = 0; i < raw.size(); ++i) direct += static_cast<double>(raw[i]) * std::polar(1.0, 2 * M_PI * i / e);
      CHECK(std::abs(z - direct) < 1e-9);
    }
  }
}

TEST_CASE("unit group generators") {
  CHECK(unit_group_generators(2).empty());
  CHECK(unit_group_generators(4) == std::vector<std::uint64_t>{3});
  CHECK(unit_group_generators(16) == std::vector<std::uint64_t>{15, 5});
  CHECK(unit_group_generators(25) == std::vector<std::uint64_t>{2});
  CHECK(totient_prime_power(27) == 18);
  CHECK_THROWS_AS(totient_prime_power(12), std::invalid_argument);
}
