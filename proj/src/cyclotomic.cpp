#include "mfd/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mfd/modular.hpp"

namespace mfd {

namespace {

struct PrimePower {
  std::uint64_t p = 1;
  std::uint64_t top = 1;
};

PrimePower split_prime_power(std::uint64_t e) {
  if (e == 0) throw std::invalid_argument("conductor must be positive");
  if (e == 1) return {};
  std::uint64_t p = 2;
  while (e % p != 0) ++p;
  std::uint64_t m = e;
  std::uint64_t top = 1;
  while (m % p == 0) {
    m /= p;
    top *= p;
  }
  if (m != 1) throw std::invalid_argument("conductor " + std::to_string(e) + " is not a prime power");
  return {p, top / p};
}

}  // namespace

std::uint64_t totient_prime_power(std::uint64_t e) {
  auto pp = split_prime_power(e);
  return e == 1 ? 1 : (pp.p - 1) * pp.top;
}

std::vector<std::uint64_t> unit_group_generators(std::uint64_t e) {
  auto pp = split_prime_power(e);
  if (e <= 2) return {};
  if (pp.p == 2) {
    if (e == 4) return {3};
    return {e - 1, 5};
  }
  auto phi = totient_prime_power(e);
  for (std::uint64_t u = 2; u < e; ++u) {
    if (u % pp.p == 0) continue;
    std::uint64_t order = 1;
    for (std::uint64_t x = u; x != 1; x = x * u % e) ++order;
    if (order == phi) return {u};
  }
  throw std::logic_error("no primitive root");
}

CycInt::CycInt(std::uint64_t conductor) : e_(conductor) {
  auto pp = split_prime_power(conductor);
  p_ = pp.p;
  top_ = pp.top;
  c_.assign(totient_prime_power(conductor), 0);
}

CycInt CycInt::reduce(std::vector<std::int64_t> const& raw, std::uint64_t conductor) {
  CycInt x(conductor);
  std::vector<std::int64_t> v(conductor, 0);
  for (std::size_t j = 0; j < raw.size(); ++j) v[j % conductor] += raw[j];
  auto phi = x.c_.size();
  // w^((p-1)p^(b-1) + s) = -sum_{i<p-1} w^(i p^(b-1) + s)
  for (std::size_t j = phi; j < conductor; ++j) {
    auto c = v[j];
    if (c == 0) continue;
    auto s = j - phi;
    for (std::uint64_t i = 0; i + 1 < x.p_; ++i) v[i * x.top_ + s] -= c;
  }
  std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(phi), x.c_.begin());
  return x;
}

CycInt CycInt::from_int(std::int64_t n, std::uint64_t conductor) {
  CycInt x(conductor);
  x.c_[0] = n;
  return x;
}

CycInt CycInt::root_of_unity(std::uint64_t j, std::uint64_t conductor) {
  std::vector<std::int64_t> raw(conductor, 0);
  raw[j % conductor] = 1;
  return reduce(raw, conductor);
}

bool CycInt::is_zero() const {
  for (auto c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

std::int64_t CycInt::as_integer() const {
  if (!is_integer()) throw NotRational("value " + to_string() + " is not a rational integer");
  return c_[0];
}

std::int64_t CycInt::l1_norm() const {
  std::int64_t n = 0;
  for (auto c : c_) n += c < 0 ? -c : c;
  return n;
}

void CycInt::check_same(CycInt const& o) const {
  if (e_ != o.e_) {
    throw std::invalid_argument("conductor mismatch: " + std::to_string(e_) + " vs " +
                                std::to_string(o.e_));
  }
}

CycInt& CycInt::operator+=(CycInt const& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt CycInt::operator+(CycInt const& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycInt CycInt::operator-(CycInt const& o) const { return *this + (-o); }

std::uint64_t CycInt::eval_mod(std::uint64_t q, std::uint64_t zeta) const {
  std::uint64_t acc = 0;
  std::uint64_t z = 1;
  for (auto c : c_) {
    auto cm = static_cast<std::uint64_t>(((c % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
                                         static_cast<std::int64_t>(q));
    acc = (acc + modular::mulmod(cm, z, q)) % q;
    z = modular::mulmod(z, zeta, q);
  }
  return acc;
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double t = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(e_);
    z += static_cast<double>(c_[j]) * std::polar(1.0, t);
  }
  return z;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    auto c = c_[j];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    auto a = c < 0 ? -c : c;
    if (j == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << 'w';
      if (j > 1) os << '^' << j;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

CycInt add(CycInt const& x, CycInt const& y) { return x + y; }
CycInt negate(CycInt const& x) { return -x; }
CycInt int_embed(std::int64_t n, std::uint64_t conductor) { return CycInt::from_int(n, conductor); }
std::int64_t as_integer(CycInt const& x) { return x.as_integer(); }

}  // namespace mfd
