#include "mfd/modular.hpp"

#include <algorithm>
#include <stdexcept>

#include "mfd/parallel.hpp"

namespace mfd::modular {

u64 powmod(u64 a, u64 e, u64 q) {
  u64 r = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 prime_congruent_one(u64 e, u64 lower) {
  u64 q = lower - lower % e + 1;
  if (q <= lower) q += e;
  while (!is_prime(q)) q += e;
  return q;
}

u64 root_of_unity(u64 e, u64 q) {
  if ((q - 1) % e != 0) throw std::invalid_argument("e does not divide q-1");
  if (e == 1) return 1;
  u64 p = 2;
  while (e % p != 0) ++p;
  for (u64 g = 2; g < q; ++g) {
    u64 z = powmod(g, (q - 1) / e, q);
    if (powmod(z, e / p, q) != 1) return z;
  }
  throw std::logic_error("no root of unity found");
}

Matrix multiply(Matrix const& x, Matrix const& y, u64 q, unsigned threads) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(x.rows, y.cols);
  parallel_for(x.rows, threads, [&](std::size_t i) {
    std::vector<u64> acc(y.cols, 0);
    std::size_t pending = 0;
    for (std::size_t t = 0; t < x.cols; ++t) {
      u64 a = x(i, t);
      if (a == 0) continue;
      u64 const* row = &y.a[t * y.cols];
      for (std::size_t j = 0; j < y.cols; ++j) acc[j] += a * row[j];
      if (++pending == 128) {
        for (auto& v : acc) v %= q;
        pending = 0;
      }
    }
    for (std::size_t j = 0; j < y.cols; ++j) out(i, j) = acc[j] % q;
  });
  return out;
}

std::vector<u64> multiply(Matrix const& x, std::vector<u64> const& v, u64 q) {
  std::vector<u64> out(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) {
    u64 acc = 0;
    u64 const* row = &x.a[i * x.cols];
    for (std::size_t j = 0; j < x.cols; ++j) {
      acc += row[j] * v[j];
      if ((j & 127) == 127) acc %= q;
    }
    out[i] = acc % q;
  }
  return out;
}

bool solve(Matrix a, std::vector<u64> b, std::vector<u64>& c, u64 q) {
  auto n = a.rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    u64 inv = invmod(a(col, col), q);
    for (std::size_t j = col; j < n; ++j) a(col, j) = mulmod(a(col, j), inv, q);
    b[col] = mulmod(b[col], inv, q);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      u64 f = a(i, col);
      if (f == 0) continue;
      u64 nf = q - f;
      u64* ri = &a.a[i * n];
      u64 const* rc = &a.a[col * n];
      for (std::size_t j = col; j < n; ++j) ri[j] = (ri[j] + nf * rc[j]) % q;
      b[i] = (b[i] + nf * b[col]) % q;
    }
  }
  c = std::move(b);
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, Poly const& f, u64 q) {
  trim(a);
  auto df = f.size() - 1;
  if (a.size() < f.size()) return a;
  u64 lead_inv = invmod(f.back(), q);
  for (std::size_t i = a.size(); i-- > df;) {
    u64 c = mulmod(a[i], lead_inv, q);
    if (c == 0) continue;
    u64 nc = q - c;
    auto base = i - df;
    for (std::size_t j = 0; j <= df; ++j) a[base + j] = (a[base + j] + nc * f[j]) % q;
  }
  a.resize(df);
  trim(a);
  return a;
}

Poly poly_divide(Poly a, Poly const& f, u64 q) {
  trim(a);
  auto df = f.size() - 1;
  if (a.size() < f.size()) return {};
  Poly quo(a.size() - df, 0);
  u64 lead_inv = invmod(f.back(), q);
  for (std::size_t i = a.size(); i-- > df;) {
    u64 c = mulmod(a[i], lead_inv, q);
    quo[i - df] = c;
    if (c == 0) continue;
    u64 nc = q - c;
    auto base = i - df;
    for (std::size_t j = 0; j <= df; ++j) a[base + j] = (a[base + j] + nc * f[j]) % q;
  }
  trim(quo);
  return quo;
}

Poly poly_mulmod(Poly const& a, Poly const& b, Poly const& f, u64 q) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + ai * b[j]) % q;
  }
  return poly_mod(std::move(prod), f, q);
}

Poly poly_gcd(Poly a, Poly b, u64 q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, q);
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), q);
    for (auto& c : a) c = mulmod(c, inv, q);
  }
  return a;
}

namespace {

Poly poly_powmod(Poly base, u64 e, Poly const& f, u64 q) {
  Poly r{1};
  base = poly_mod(std::move(base), f, q);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, q);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, q);
  }
  return r;
}

void split(Poly const& f, u64 q, std::mt19937_64& rng, std::vector<u64>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(mulmod(q - f[0], invmod(f[1], q), q));
    return;
  }
  for (;;) {
    u64 a = rng() % q;
    Poly h = poly_powmod(Poly{a, 1}, (q - 1) / 2, f, q);
    if (h.empty()) h.push_back(0);
    h[0] = submod(h[0], 1, q);
    trim(h);
    Poly g = poly_gcd(f, h, q);
    if (g.size() > 1 && g.size() < f.size()) {
      split(g, q, rng, out);
      split(poly_divide(f, g, q), q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> distinct_roots(Poly const& f0, u64 q, std::mt19937_64& rng) {
  Poly f = f0;
  trim(f);
  if (f.size() <= 1) return {};
  // Keep only the product of the distinct linear factors: gcd(f, x^q - x).
  Poly h = poly_powmod(Poly{0, 1}, q, f, q);
  if (h.size() < 2) h.resize(2, 0);
  h[1] = submod(h[1], 1, q);
  trim(h);
  Poly g = poly_gcd(f, h, q);
  std::vector<u64> out;
  split(g, q, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mfd::modular
