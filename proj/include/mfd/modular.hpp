#ifndef MFD_MODULAR_HPP_
#define MFD_MODULAR_HPP_

#include <cstdint>
#include <random>
#include <vector>

// Arithmetic over F_q for primes q < 2^31, plus the dense linear algebra and
// polynomial routines the character-table code needs.
namespace mfd::modular {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 q) { return a * b % q; }
u64 powmod(u64 a, u64 e, u64 q);
inline u64 invmod(u64 a, u64 q) { return powmod(a, q - 2, q); }
inline u64 submod(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + q - b; }
inline u64 addmod(u64 a, u64 b, u64 q) {
  a += b;
  return a >= q ? a - q : a;
}

bool is_prime(u64 n);
// Smallest prime q > lower with q = 1 (mod e).
u64 prime_congruent_one(u64 e, u64 lower);
// An element of exact multiplicative order e, for e a prime power dividing q-1.
u64 root_of_unity(u64 e, u64 q);

// Row-major dense matrix over F_q.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u64> a;
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  u64& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// A * B over F_q; q must be below 2^28 so 128 products fit an accumulator.
Matrix multiply(Matrix const& x, Matrix const& y, u64 q, unsigned threads = 1);
std::vector<u64> multiply(Matrix const& x, std::vector<u64> const& v, u64 q);
// Solves A c = b for square A; returns false when A is singular.
bool solve(Matrix a, std::vector<u64> b, std::vector<u64>& c, u64 q);

// Polynomials: coefficient vectors, lowest degree first, no trailing zeros.
using Poly = std::vector<u64>;
void trim(Poly& f);
Poly poly_mod(Poly a, Poly const& f, u64 q);
Poly poly_divide(Poly a, Poly const& f, u64 q);  // exact quotient
Poly poly_mulmod(Poly const& a, Poly const& b, Poly const& f, u64 q);
Poly poly_gcd(Poly a, Poly b, u64 q);
// Roots of a polynomial assumed to split into distinct linear factors over
// F_q (odd q). The result is sorted; returns fewer roots when f does not split.
std::vector<u64> distinct_roots(Poly const& f, u64 q, std::mt19937_64& rng);

}  // namespace mfd::modular

#endif  // MFD_MODULAR_HPP_
