#ifndef MFD_CYCLOTOMIC_HPP_
#define MFD_CYCLOTOMIC_HPP_

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfd {

class NotRational : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Element of Z[w_e] for a prime power e = p^b, stored in the power basis
// 1, w, ..., w^(phi(e)-1). Two values are equal iff their coefficient vectors
// are equal.
class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(std::uint64_t conductor);

  // Canonical form of sum raw[j] w^j; raw may have any length (indices are
  // taken mod e).
  static CycInt reduce(std::vector<std::int64_t> const& raw, std::uint64_t conductor);
  static CycInt from_int(std::int64_t n, std::uint64_t conductor);
  static CycInt root_of_unity(std::uint64_t j, std::uint64_t conductor);

  std::uint64_t conductor() const { return e_; }
  std::uint64_t prime() const { return p_; }
  std::vector<std::int64_t> const& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integer() const;
  std::int64_t as_integer() const;
  std::int64_t l1_norm() const;

  CycInt operator+(CycInt const& o) const;
  CycInt operator-(CycInt const& o) const;
  CycInt operator-() const;
  CycInt& operator+=(CycInt const& o);

  friend bool operator==(CycInt const& a, CycInt const& b) {
    return a.e_ == b.e_ && a.c_ == b.c_;
  }
  friend auto operator<=>(CycInt const& a, CycInt const& b) {
    return a.c_ <=> b.c_;
  }

  // Image under w -> zeta in F_q, for a zeta of multiplicative order e.
  std::uint64_t eval_mod(std::uint64_t q, std::uint64_t zeta) const;
  std::complex<double> to_complex() const;
  // Polynomial in `w`, e.g. "-1-w^2" or "3".
  std::string to_string() const;

 private:
  std::uint64_t e_ = 1;
  std::uint64_t p_ = 1;
  std::uint64_t top_ = 1;  // p^(b-1)
  std::vector<std::int64_t> c_;

  void check_same(CycInt const& o) const;
};

CycInt add(CycInt const& x, CycInt const& y);
CycInt negate(CycInt const& x);
CycInt int_embed(std::int64_t n, std::uint64_t conductor);
std::int64_t as_integer(CycInt const& x);

// phi(e) for a prime power e; throws std::invalid_argument otherwise.
std::uint64_t totient_prime_power(std::uint64_t e);

// Generators of the unit group (Z/e)^*: one primitive root for odd p,
// {-1, 5} for p = 2. Empty when the group is trivial.
std::vector<std::uint64_t> unit_group_generators(std::uint64_t e);

}  // namespace mfd

#endif  // MFD_CYCLOTOMIC_HPP_
