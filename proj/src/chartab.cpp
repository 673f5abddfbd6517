#include "mfd/chartab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "mfd/modular.hpp"
#include "mfd/parallel.hpp"

namespace mfd {

namespace {

using modular::u64;
using modular::Matrix;
using modular::mulmod;
using modular::invmod;

constexpr u64 kPrimeFloor = u64{1} << 27;

struct ModularRows {
  std::vector<std::vector<u64>> values;  // [chi][class]
  std::vector<u64> degrees;
};

// Eigenvectors of one random combination of class matrices give the central
// characters; degrees and values follow from the norm relation. Returns false
// when the random choices were unlucky.
bool modular_table(Group const& g, Classes const& cl, u64 q, std::mt19937_64& rng,
                   unsigned threads, ModularRows& out) {
  auto k = cl.count();
  auto n = static_cast<u64>(g.order());
  std::vector<u64> r(k);
  for (auto& x : r) x = rng() % q;

  // T(l, m) = sum_j r_j #{x in C_j : x^-1 g_m in C_l}
  Matrix t(k, k);
  parallel_for(k, threads, [&](std::size_t m) {
    std::vector<u64> col(k, 0);
    auto const& word = g.regular().def_words[cl.reps[m]];
    for (Element x = 0; x < n; ++x) {
      auto y = g.regular().apply(g.inv(x), word);
      auto& c = col[cl.class_of[y]];
      c += r[cl.class_of[x]];
      if (c >= q) c -= q;
    }
    for (std::size_t l = 0; l < k; ++l) t(l, m) = col[l];
  });

  Matrix kry(k, k);
  std::vector<u64> v(k);
  for (auto& x : v) x = rng() % q;
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t l = 0; l < k; ++l) kry(l, s) = v[l];
    v = modular::multiply(t, v, q);
  }
  std::vector<u64> c;
  for (auto& x : v) x = (q - x) % q;
  if (!modular::solve(kry, v, c, q)) return false;
  modular::Poly f(c);
  f.push_back(1);
  auto roots = modular::distinct_roots(f, q, rng);
  if (roots.size() != k) return false;

  Matrix coef(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    // f(x) / (x - lambda_i) by synthetic division
    u64 h = 1;
    coef(k - 1, i) = 1;
    for (std::size_t s = k - 1; s > 0; --s) {
      h = (f[s] + mulmod(roots[i], h, q)) % q;
      coef(s - 1, i) = h;
    }
  }
  Matrix w = modular::multiply(kry, coef, q, threads);

  std::vector<u64> inv_size(k);
  for (std::size_t l = 0; l < k; ++l) inv_size[l] = invmod(cl.sizes[l] % q, q);
  std::vector<u64> divisors;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }

  out.values.assign(k, std::vector<u64>(k));
  out.degrees.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    u64 w0 = w(0, i);
    if (w0 == 0) return false;
    u64 norm = invmod(w0, q);
    std::vector<u64> om(k);
    for (std::size_t l = 0; l < k; ++l) om[l] = mulmod(w(l, i), norm, q);
    u64 s = 0;
    for (std::size_t l = 0; l < k; ++l) {
      s = (s + mulmod(mulmod(om[l], om[cl.inverse_class(static_cast<std::uint32_t>(l))], q),
                      inv_size[l], q)) % q;
    }
    if (s == 0) return false;
    u64 d2 = mulmod(n % q, invmod(s, q), q);
    u64 deg = 0;
    for (auto d : divisors) {
      if (d * d % q == d2) deg = d;
    }
    if (deg == 0) return false;
    out.degrees[i] = deg;
    for (std::size_t l = 0; l < k; ++l) {
      out.values[i][l] = mulmod(mulmod(deg, om[l], q), inv_size[l], q);
    }
  }
  return true;
}

// chi(g) = sum_j m_j w^j where m_j is the multiplicity of zeta^j as an
// eigenvalue of g; m_j comes from the values on powers of g.
bool lift(Group const& g, Classes const& cl, u64 q, ModularRows const& rows, unsigned threads,
          std::vector<Character>& chars) {
  auto k = cl.count();
  auto e = cl.exponent;
  u64 zeta = modular::root_of_unity(e, q);
  u64 zinv = invmod(zeta, q);
  std::vector<u64> zpow(e);
  zpow[0] = 1;
  for (std::size_t s = 1; s < e; ++s) zpow[s] = mulmod(zpow[s - 1], zinv, q);

  chars.assign(k, Character{});
  std::vector<char> ok(k, 1);
  parallel_for(k, threads, [&](std::size_t i) {
    auto deg = rows.degrees[i];
    Character& ch = chars[i];
    ch.degree = deg;
    ch.values.reserve(k);
    std::vector<u64> a;
    std::vector<std::int64_t> raw(e);
    for (std::size_t l = 0; l < k; ++l) {
      u64 o = g.element_order(cl.reps[l]);
      u64 step = e / o;
      a.resize(o);
      for (u64 t = 0; t < o; ++t) {
        a[t] = rows.values[i][cl.power_map(static_cast<std::uint32_t>(l), static_cast<std::int64_t>(t))];
      }
      u64 oinv = invmod(o % q, q);
      std::fill(raw.begin(), raw.end(), 0);
      for (u64 j = 0; j < o; ++j) {
        u64 acc = 0;
        u64 idx = 0;
        for (u64 t = 0; t < o; ++t) {
          acc += a[t] * zpow[idx];
          if ((t & 63) == 63) acc %= q;
          idx += step * j;
          if (idx >= e) idx %= e;
        }
        u64 m = mulmod(acc % q, oinv, q);
        if (m > deg) {
          ok[i] = 0;
          return;
        }
        raw[step * j] = static_cast<std::int64_t>(m);
      }
      ch.values.push_back(CycInt::reduce(raw, e));
    }
    auto one = CycInt::from_int(static_cast<std::int64_t>(deg), e);
    for (std::size_t l = 0; l < k; ++l) {
      if (ch.values[l] == one) ch.kernel_classes.push_back(static_cast<std::uint32_t>(l));
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool row_less(Character const& a, Character const& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t l = 0; l < a.values.size(); ++l) {
    auto c = a.values[l] <=> b.values[l];
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

CharTable character_table(Group const& g, ChartabOptions const& opts) {
  return character_table(g, conjugacy_classes(g), opts);
}

CharTable character_table(Group const& g, Classes classes, ChartabOptions const& opts) {
  if (g.order() > opts.max_order) {
    throw BudgetExceeded("group order " + std::to_string(g.order()) +
                         " exceeds the character table budget " + std::to_string(opts.max_order));
  }
  CharTable t;
  t.classes = std::move(classes);
  t.exponent = t.classes.exponent;
  t.group_order = g.order();
  t.prime_modulus = modular::prime_congruent_one(t.exponent, kPrimeFloor);
  for (unsigned attempt = 0; attempt < opts.max_attempts; ++attempt) {
    t.attempts = attempt + 1;
    std::mt19937_64 rng(0x6d66642d63686172ULL + attempt);
    ModularRows rows;
    if (!modular_table(g, t.classes, t.prime_modulus, rng, opts.threads, rows)) continue;
    std::vector<Character> chars;
    if (!lift(g, t.classes, t.prime_modulus, rows, opts.threads, chars)) continue;
    std::sort(chars.begin(), chars.end(), row_less);
    t.chars = std::move(chars);
    if (opts.check && !check_orthogonality(t, opts.threads)) {
      throw TableError("computed character table fails orthogonality");
    }
    return t;
  }
  throw TableError("character table computation failed after " +
                   std::to_string(opts.max_attempts) + " attempts");
}

Subgroup kernel(Group const& g, CharTable const& t, std::size_t chi) {
  std::vector<char> in(t.classes.count(), 0);
  for (auto c : t.chars.at(chi).kernel_classes) in[c] = 1;
  std::vector<Element> gens;
  for (Element x = 0; x < g.order(); ++x) {
    if (in[t.classes.class_of[x]]) gens.push_back(x);
  }
  return subgroup_closure(g, gens);
}

std::vector<std::uint64_t> degree_set(CharTable const& t) {
  std::vector<std::uint64_t> d;
  for (auto const& ch : t.chars) d.push_back(ch.degree);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::uint64_t min_faithful_degree(CharTable const& t) {
  for (auto const& ch : t.chars) {
    if (ch.is_faithful()) return ch.degree;
  }
  throw std::domain_error("group has no faithful irreducible character");
}

std::uint64_t min_nonlinear_degree(CharTable const& t) {
  for (auto const& ch : t.chars) {
    if (!ch.is_linear()) return ch.degree;
  }
  throw std::domain_error("group is abelian");
}

// Each relation is an identity in Z[w_e] whose power-basis coefficients are
// bounded by B. Its image under w -> zeta^u mod q equals the zeta-image of the
// same relation for another pair of rows whenever the row set is closed under
// zeta -> zeta^u; closure plus vanishing at zeta therefore gives vanishing at
// every embedding, i.e. divisibility of all coefficients by q. Enough primes to
// exceed 2B make the identity exact.
bool check_orthogonality(CharTable const& t, unsigned threads) {
  auto k = t.chars.size();
  auto const& cl = t.classes;
  if (k != cl.count()) return false;
  auto n = t.group_order;
  std::uint64_t sum = 0;
  std::int64_t maxnorm = 0;
  for (auto const& ch : t.chars) {
    sum += ch.degree * ch.degree;
    for (auto const& v : ch.values) maxnorm = std::max(maxnorm, v.l1_norm());
  }
  if (sum != n) return false;
  auto m = static_cast<long double>(maxnorm);
  long double bound = 2.0L * static_cast<long double>(n) * m * m + static_cast<long double>(n);
  long double covered = 1.0L;
  auto e = t.exponent;
  // Closure under generators of (Z/e)^* implies closure under all of it.
  auto units = unit_group_generators(e);
  u64 q = kPrimeFloor;
  while (covered <= 2.0L * bound) {
    q = modular::prime_congruent_one(e, q);
    covered *= static_cast<long double>(q);
    u64 zeta = modular::root_of_unity(e, q);

    auto image = [&](u64 z) {
      auto phi = totient_prime_power(e);
      std::vector<u64> zp(phi);
      zp[0] = 1;
      for (std::size_t j = 1; j < phi; ++j) zp[j] = mulmod(zp[j - 1], z, q);
      Matrix x(k, k);
      auto sq = static_cast<std::int64_t>(q);
      parallel_for(k, threads, [&](std::size_t i) {
        for (std::size_t l = 0; l < k; ++l) {
          auto const& c = t.chars[i].values[l].coeffs();
          u64 acc = 0;
          for (std::size_t j = 0; j < phi; ++j) {
            if (c[j] == 0) continue;
            acc = (acc + static_cast<u64>((c[j] % sq + sq) % sq) * zp[j]) % q;
          }
          x(i, l) = acc;
        }
      });
      return x;
    };
    Matrix x = image(zeta);
    std::map<std::vector<u64>, std::size_t> rows;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<u64> row(x.a.begin() + static_cast<std::ptrdiff_t>(i * k),
                           x.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
      if (!rows.emplace(std::move(row), i).second) return false;
    }
    for (auto u : units) {
      Matrix xu = image(modular::powmod(zeta, u, q));
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<u64> row(xu.a.begin() + static_cast<std::ptrdiff_t>(i * k),
                             xu.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
        if (!rows.contains(row)) return false;
      }
    }

    // Rows: sum_C |C| chi(C) psi(C^-1) = |G| delta.
    Matrix y(k, k);
    Matrix xinv(k, k);
    Matrix xt(k, k);
    for (std::size_t l = 0; l < k; ++l) {
      auto li = cl.inverse_class(static_cast<std::uint32_t>(l));
      for (std::size_t i = 0; i < k; ++i) {
        y(l, i) = mulmod(x(i, li), cl.sizes[l] % q, q);
        xinv(i, l) = x(i, li);
        xt(l, i) = x(i, l);
      }
    }
    Matrix p1 = modular::multiply(x, y, q, threads);
    // Columns: sum_chi chi(a) chi(b^-1) = delta |G| / |C_a|.
    Matrix p2 = modular::multiply(xt, xinv, q, threads);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        u64 want1 = i == j ? n % q : 0;
        u64 want2 = i == j ? (n / cl.sizes[i]) % q : 0;
        if (p1(i, j) != want1 || p2(i, j) != want2) return false;
      }
    }
  }
  return true;
}

std::string dump_table(Group const& g, GroupSpec const& spec, CharTable const& t) {
  std::ostringstream os;
  auto const& cl = t.classes;
  os << "classes " << cl.count() << " exponent " << t.exponent << " (w = exp(2 pi i/"
     << t.exponent << "))\n";
  for (std::size_t l = 0; l < cl.count(); ++l) {
    auto rep = cl.reps[l];
    auto const& word = g.regular().def_words[rep];
    os << "C" << l << " size " << cl.sizes[l] << " order " << g.element_order(rep) << " rep "
       << (word.empty() ? std::string("1") : spec.format_word(word)) << "\n";
  }
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    auto const& ch = t.chars[i];
    os << "X" << i << " deg " << ch.degree << ":";
    for (auto const& v : ch.values) os << ' ' << v.to_string();
    os << "\n";
  }
  return os.str();
}

}  // namespace mfd
