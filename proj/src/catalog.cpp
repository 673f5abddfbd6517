#include "mfd/catalog.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace mfd {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long smallest_nonresidue(long p) {
  std::set<long> squares;
  for (long x = 1; x < p; ++x) squares.insert(x * x % p);
  for (long v = 1; v < p; ++v) {
    if (!squares.count(v)) return v;
  }
  throw CatalogError("no quadratic non-residue modulo " + std::to_string(p));
}

namespace {

long mod(long a, long p) { return ((a % p) + p) % p; }

long inverse_mod(long a, long p) {
  a = mod(a, p);
  for (long x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw CatalogError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(p));
}

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::pair<long, long> solve_norm_form(long p, long coeff, long k) {
  for (long a = 1; a <= p; ++a) {
    for (long b = 1; b <= p; ++b) {
      if (mod(a * a - coeff * b * b - k, p) == 0) return {a, b};
    }
  }
  throw CatalogError("a^2 - " + std::to_string(coeff) + " b^2 = " + std::to_string(k) +
                     " has no solution modulo " + std::to_string(p));
}

namespace {

// Collects the written relations of a presentation and, on build(), inserts
// [x,y] = 1 for every generator pair whose commutator was not given.
class PresentationBuilder {
 public:
  explicit PresentationBuilder(std::vector<std::string> gens) : gens_(std::move(gens)) {}

  PresentationBuilder& comm(std::string const& x, std::string const& y, std::string const& rhs) {
    rels_.push_back("[" + x + "," + y + "] = " + rhs);
    given_.insert({std::min(x, y), std::max(x, y)});
    return *this;
  }
  PresentationBuilder& rel(std::string const& r) {
    rels_.push_back(r);
    return *this;
  }
  // For presentations not written in the power-commutator convention.
  PresentationBuilder& explicit_only() {
    implicit_ = false;
    return *this;
  }

  std::string text() const {
    std::ostringstream os;
    os << "gens ";
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
    os << ";\nrels ";
    bool first = true;
    for (auto const& r : rels_) {
      os << (first ? "" : ",\n     ") << r;
      first = false;
    }
    for (std::size_t i = 0; implicit_ && i < gens_.size(); ++i) {
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        auto key = std::make_pair(std::min(gens_[i], gens_[j]), std::max(gens_[i], gens_[j]));
        if (given_.count(key)) continue;
        os << (first ? "" : ",\n     ") << "[" << gens_[i] << "," << gens_[j] << "]";
        first = false;
      }
    }
    os << ";\n";
    return os.str();
  }

  GroupSpec build() const { return parse_presentation(text()); }

 private:
  std::vector<std::string> gens_;
  std::vector<std::string> rels_;
  std::set<std::pair<std::string, std::string>> given_;
  bool implicit_ = true;
};

std::string pw(std::string const& g, long e) { return g + "^" + std::to_string(e); }

std::vector<std::string> numbered(std::string const& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, std::vector<std::string> const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Family {
  CatalogEntry entry;
  std::function<GroupSpec(int, Params const&)> build;
  std::function<std::vector<ExpectedValue>(int, Params const&)> expected;
  // Flags: cyclic center, not a nontrivial abelian x non-abelian product,
  // metabelian.
  std::function<std::array<bool, 3>(int, Params const&)> flags;
};

ExpectedValue ev(std::string q, std::vector<long> v, std::string quote) {
  return {std::move(q), std::move(v), std::move(quote)};
}

constexpr std::array<bool, 3> kCyclicIndecomposable{true, true, true};
constexpr std::array<bool, 3> kNonCyclicIndecomposable{false, true, true};

// ---------------------------------------------------------------------------
// Presentations.

GroupSpec extraspecial_exp_p(int p) {
  return PresentationBuilder({"x", "y", "z"})
      .comm("x", "y", "z")
      .rel(pw("x", p))
      .rel(pw("y", p))
      .rel(pw("z", p))
      .build();
}

// Non-abelian order p^3 with exponent p^2: <x,y | [y,x] = x^p, x^(p^2), y^p>.
GroupSpec extraspecial_exp_p2(int p) {
  return PresentationBuilder({"x", "y"})
      .comm("y", "x", pw("x", p))
      .rel(pw("x", p * p))
      .rel(pw("y", p))
      .build();
}

GroupSpec xsp_exp_p_times_cyclic(int p, long r) {
  return PresentationBuilder({"x", "y", "z", "c"})
      .comm("x", "y", "z")
      .rel(pw("x", p))
      .rel(pw("y", p))
      .rel(pw("z", p))
      .rel(pw("c", ipow(p, r)))
      .build();
}

GroupSpec xsp_exp_p2_times_cyclic(int p, long r) {
  return PresentationBuilder({"x", "y", "c"})
      .comm("y", "x", pw("x", p))
      .rel(pw("x", p * p))
      .rel(pw("y", p))
      .rel(pw("c", ipow(p, r)))
      .build();
}

GroupSpec abelian(int p, std::vector<long> const& exps) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < exps.size(); ++i) names.push_back("c" + std::to_string(i + 1));
  PresentationBuilder b(names);
  for (std::size_t i = 0; i < exps.size(); ++i) b.rel(pw(names[i], ipow(p, exps[i])));
  return b.build();
}

GroupSpec sd16() {
  return PresentationBuilder({"a", "b"})
      .explicit_only()
      .rel("a^8")
      .rel("b^2")
      .rel("b^-1*a*b = a^3")
      .build();
}

// Phi_4 groups of order p^5 on alpha, alpha_1, alpha_2, beta_1, beta_2.
PresentationBuilder phi4_base() {
  PresentationBuilder b({"a", "a1", "a2", "b1", "b2"});
  b.comm("a1", "a", "b1").comm("a2", "a", "b2");
  return b;
}

GroupSpec phi4_221b(int p) {
  return phi4_base()
      .rel(pw("a", p) + " = b2")
      .rel(pw("a2", p) + " = b1")
      .rel(pw("a1", p))
      .rel(pw("b1", p))
      .rel(pw("b2", p))
      .build();
}

GroupSpec phi4_221f0(int p) {
  long nu = smallest_nonresidue(p);
  return phi4_base()
      .rel(pw("a1", p) + " = b2")
      .rel(pw("a2", p) + " = " + pw("b1", nu))
      .rel(pw("a", p))
      .rel(pw("b1", p))
      .rel(pw("b2", p))
      .build();
}

GroupSpec phi4_2111a(int p) {
  return phi4_base()
      .rel(pw("a", p) + " = b2")
      .rel(pw("a1", p))
      .rel(pw("a2", p))
      .rel(pw("b1", p))
      .rel(pw("b2", p))
      .build();
}

GroupSpec phi9(int p) {
  return PresentationBuilder(concat(numbered("a", 1, 5), {"b1", "b2"}))
      .comm("a4", "a5", "a3")
      .comm("a3", "a5", "a2")
      .comm("a2", "a5", "a1")
      .rel("a1 = b1")
      .rel(pw("a4", p) + " = b2")
      .rel(pw("a5", p) + " = b1")
      .rel(pw("a2", p))
      .rel(pw("a3", p))
      .rel(pw("b1", p))
      .rel(pw("b2", p))
      .build();
}

GroupSpec phi10_g1(int p) {
  return PresentationBuilder(concat(numbered("a", 1, 5), {"b1"}))
      .comm("a4", "a5", "a3")
      .comm("a3", "a5", "a2")
      .comm("a2", "a5", "a1")
      .comm("a3", "a4", "a1")
      .rel("a1 = " + pw("b1", p))
      .rel(pw("a2", p))
      .rel(pw("a3", p))
      .rel(pw("a4", p))
      .rel(pw("a5", p))
      .rel(pw("b1", p * p))
      .build();
}

GroupSpec phi10_g2(int p) {
  return PresentationBuilder(concat(numbered("a", 1, 5), {"b1", "b2"}))
      .comm("a4", "a5", "a3")
      .comm("a3", "a5", "a2")
      .comm("a2", "a5", "a1")
      .comm("a3", "a4", "a1")
      .rel("a1 = b1")
      .rel(pw("a5", p) + " = b2")
      .rel(pw("a2", p))
      .rel(pw("a3", p))
      .rel(pw("a4", p))
      .rel(pw("b1", p))
      .rel(pw("b2", p))
      .build();
}

// Phi_12 groups share [a3,a4] = a1, [a5,a6] = a2 and differ in power relations.
PresentationBuilder phi12_base() {
  PresentationBuilder b(numbered("a", 1, 6));
  b.comm("a3", "a4", "a1").comm("a5", "a6", "a2");
  return b;
}

GroupSpec phi12_a3_power(int p, std::string const& target) {
  return phi12_base()
      .rel(pw("a3", p) + " = " + target)
      .rel(pw("a1", p))
      .rel(pw("a2", p))
      .rel(pw("a4", p))
      .rel(pw("a5", p))
      .rel(pw("a6", p))
      .build();
}

GroupSpec phi12_ex_g3(int p) {
  return phi12_base()
      .rel(pw("a4", p) + " = a1*a2")
      .rel(pw("a5", p) + " = a1*a2")
      .rel(pw("a1", p))
      .rel(pw("a2", p))
      .rel(pw("a3", p))
      .rel(pw("a6", p))
      .build();
}

GroupSpec phi17(int p) {
  return PresentationBuilder(numbered("a", 1, 6))
      .comm("a5", "a6", "a3")
      .comm("a4", "a5", "a2")
      .comm("a3", "a6", "a1")
      .rel(pw("a4", p) + " = a1")
      .rel(pw("a5", p) + " = a2")
      .rel(pw("a1", p))
      .rel(pw("a2", p))
      .rel(pw("a3", p))
      .rel(pw("a6", p))
      .build();
}

// Shared commutator structure of the Phi_42 / Phi_43 groups; `c25` is the
// exponent e in [a2,a5] = a1^e.
PresentationBuilder phi4x_base(long c25) {
  PresentationBuilder b(numbered("a", 1, 6));
  b.comm("a5", "a6", "a4")
      .comm("a4", "a6", "a3")
      .comm("a4", "a5", "a2")
      .comm("a3", "a6", "a1")
      .comm("a2", "a5", pw("a1", c25));
  return b;
}

GroupSpec phi4x(int p, long c25, std::string const& a5p, std::string const& a6p) {
  return phi4x_base(c25)
      .rel(pw("a4", p) + " = a1")
      .rel(pw("a5", p) + " = " + a5p)
      .rel(pw("a6", p) + " = " + a6p)
      .rel(pw("a1", p))
      .rel(pw("a2", p))
      .rel(pw("a3", p))
      .build();
}

long require_k(int p, Params const& params) {
  long k = params.at("k");
  if (k < 1 || k > p - 1) {
    throw CatalogError("parameter k = " + std::to_string(k) + " outside 1.." +
                       std::to_string(p - 1));
  }
  return k;
}

GroupSpec tower(int p, long n, long i) {
  if (i == 2) {
    std::vector<std::string> gens{"a"};
    auto rest = numbered("a", 1, static_cast<int>(n - 1));
    gens.insert(gens.end(), rest.begin(), rest.end());
    PresentationBuilder b(gens);
    for (long j = 1; j <= n - 2; ++j) {
      b.comm("a" + std::to_string(j), "a", "a" + std::to_string(j + 1));
    }
    b.rel(pw("a", p));
    for (long j = 1; j <= n - 1; ++j) b.rel(pw("a" + std::to_string(j), p));
    return b.build();
  }
  long top = n - i + 2;
  std::vector<std::string> gens{"a"};
  auto rest = numbered("a", 1, static_cast<int>(top));
  gens.insert(gens.end(), rest.begin(), rest.end());
  PresentationBuilder b(gens);
  b.comm("a1", "a", "a2");
  for (long j = 2; j <= n - i + 1; ++j) {
    b.comm("a" + std::to_string(j), "a", "a" + std::to_string(j + 1));
  }
  b.rel(pw("a1", ipow(p, i - 2)) + " = a" + std::to_string(top));
  b.rel(pw("a", p));
  for (long j = 2; j <= top; ++j) b.rel(pw("a" + std::to_string(j), p));
  return b.build();
}

// ---------------------------------------------------------------------------
// Expected values.

std::vector<long> sorted(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

constexpr char kQuoteClass2[] = "c(G) = |G/Z(G)|^{1/2} |Z(G)|";
constexpr char kQuoteAbelian[] = "c(G)=mu(G)=sum_{i=1}^k p^{r_i}";
constexpr char kQuoteP2[] = "exp(G_i) = p^2 and cd(G_i) = {1,p,p^2}";
constexpr char kQuoteP4[] = "c(G) = p^4";

std::vector<Family> const& families() {
  static std::vector<Family> const fams = [] {
    std::vector<Family> f;
    auto noflags = [](std::array<bool, 3> v) {
      return [v](int, Params const&) { return v; };
    };

    f.push_back({{"abelian", "direct product C_{p^r1} x C_{p^r2} [x C_{p^r3}] (r3 = 0 omits)",
                  "abelian formula", 2, 3, std::nullopt,
                  {{"r1", 1, "first cyclic exponent"},
                   {"r2", 2, "second cyclic exponent"},
                   {"r3", 0, "optional third cyclic exponent"}},
                  "r1 >= 1, r2, r3 >= 0, order <= p^8"},
                 [](int p, Params const& ps) {
                   std::vector<long> e;
                   for (auto k : {"r1", "r2", "r3"}) {
                     if (ps.at(k) > 0) e.push_back(ps.at(k));
                   }
                   return abelian(p, e);
                 },
                 [](int p, Params const& ps) {
                   std::vector<long> inv;
                   long order = 1, sum = 0;
                   for (auto k : {"r1", "r2", "r3"}) {
                     if (ps.at(k) > 0) {
                       inv.push_back(ipow(p, ps.at(k)));
                       order *= ipow(p, ps.at(k));
                       sum += ipow(p, ps.at(k));
                     }
                   }
                   std::vector<ExpectedValue> out{ev("order", {order}, "G = prod C_{p^{r_i}}"),
                                                  ev("Z_invariants", sorted(inv), "G abelian")};
                   if (p >= 3) {
                     out.push_back(ev("c", {sum}, kQuoteAbelian));
                     out.push_back(ev("mu", {sum}, kQuoteAbelian));
                   }
                   return out;
                 },
                 [](int, Params const& ps) {
                   int factors = 0;
                   for (auto k : {"r1", "r2", "r3"}) factors += ps.at(k) > 0;
                   return std::array<bool, 3>{factors == 1, false, true};
                 }});

    f.push_back({{"sd16", "semidihedral group of order 16", "note after the c(G) lemma", 2, 2, 2,
                  {}, "p = 2"},
                 [](int, Params const&) { return sd16(); },
                 [](int, Params const&) {
                   return std::vector<ExpectedValue>{
                       ev("order", {16}, "for example SD_16 of order 16")};
                 },
                 noflags(kCyclicIndecomposable)});

    f.push_back({{"xsp_p3_expP", "extraspecial group of order p^3 and exponent p",
                  "class-2 formula; direct-product remark", 3, 3, std::nullopt, {}, "p >= 3"},
                 [](int p, Params const&) { return extraspecial_exp_p(p); },
                 [](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {P * P * P}, "extraspecial p-group of order p^3"),
                       ev("exp", {P}, "exp(H) = p"),
                       ev("Z_invariants", {P}, "extraspecial"),
                       ev("cd", {1, P}, "extraspecial"),
                       ev("c", {P * P}, kQuoteClass2),
                       ev("mu", {P * P}, "c(G) <= mu(G) with an order p^2 core-free subgroup")};
                 },
                 noflags(kCyclicIndecomposable)});

    f.push_back({{"xsp_p3_expP2", "non-abelian group of order p^3 and exponent p^2",
                  "remark on p^2 | mu(G)", 3, 3, std::nullopt, {}, "p >= 3"},
                 [](int p, Params const&) { return extraspecial_exp_p2(p); },
                 [](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {P * P * P}, "H is a non-abelian p-group of order p^3"),
                       ev("exp", {P * P}, "x^{p^2} = y^p = 1"),
                       ev("Z_invariants", {P}, "class 2 with cyclic center"),
                       ev("c", {P * P}, kQuoteClass2)};
                 },
                 noflags(kCyclicIndecomposable)});

    f.push_back({{"xsp_expP_x_cp", "H x C_p with H extraspecial of order p^3, exponent p",
                  "remark: X_G may be forced to contain linear characters", 3, 3, std::nullopt,
                  {}, "p >= 3"},
                 [](int p, Params const&) { return xsp_exp_p_times_cyclic(p, 1); },
                 [](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {P * P * P * P}, "G = H x K"),
                       ev("Z_invariants", {P, P}, "Z(H) x K"),
                       ev("c", {P * P + P}, "c(G) = p^2+p")};
                 },
                 noflags({false, false, true})});

    f.push_back({{"xsp_expP2_x_cp2", "H x C_{p^2} with H non-abelian of order p^3, exponent p^2",
                  "remark: converse of p^2 | mu(G) fails", 3, 3, std::nullopt, {}, "p >= 3"},
                 [](int p, Params const&) { return xsp_exp_p2_times_cyclic(p, 2); },
                 [](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {P * P * P * P * P}, "G = H x K, K = C_{p^2}"),
                       ev("mu", {2 * P * P}, "mu(G) = mu(H) + mu(K) = 2p^2")};
                 },
                 noflags({false, false, true})});

    auto phi4_expected = [](long c_of_p_coeff3, long c_of_p_coeff2, std::string quote) {
      return [=](int p, Params const&) {
        long P = p;
        return std::vector<ExpectedValue>{
            ev("order", {P * P * P * P * P}, "of order p^5 (p>=5)"),
            ev("exp", {P * P}, "exp(G_i) = p^2"),
            ev("Z_invariants", {P, P}, "Z(G_i) = <beta_1, beta_2>"),
            ev("d_Z", {2}, "d(Z(G_i)) = 2"),
            ev("cd", {1, P}, "cd(G_i) = {1, p}"),
            ev("c", {c_of_p_coeff3 * P * P * P + c_of_p_coeff2 * P * P}, quote)};
      };
    };

    f.push_back({{"phi4_221b", "Phi_4(221)b, order p^5", "metabelian examples (1), G_1", 5, 5,
                  std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi4_221b(p); },
                 phi4_expected(1, 1, "c(G_1) = p^3+p^2"), noflags(kNonCyclicIndecomposable)});
    f.push_back({{"phi4_221f0", "Phi_4(221)f_0, order p^5", "metabelian examples (1), G_2", 5, 5,
                  std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi4_221f0(p); },
                 phi4_expected(2, 0, "c(G_2) = 2p^3"), noflags(kNonCyclicIndecomposable)});
    f.push_back({{"phi4_2111a", "Phi_4(2111)a, order p^5", "metabelian examples (1), G_3", 5, 5,
                  std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi4_2111a(p); },
                 phi4_expected(0, 2, "c(G_3) = 2p^2"), noflags(kNonCyclicIndecomposable)});

    f.push_back({{"phi9", "Phi_9 group of order p^6 with a linear character in X_G",
                  "remark on d(Z(G) cap G') != d(Z(G))", 5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi9(p); },
                 [](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {P * P * P * P * P * P}, "a p-group of order p^6 (p>=5)"),
                       ev("Z_invariants", {P, P}, "Z(G) = <alpha_5^p, alpha_4^p> = C_p x C_p"),
                       ev("derived_invariants", {P, P, P}, "G' = <alpha_5^p, alpha_3, alpha_2> = C_p^3"),
                       ev("cd", {1, P}, "cd(G) = {1, p}"),
                       ev("c", {2 * P * P}, "we get c(G) = 2p^2")};
                 },
                 noflags(kNonCyclicIndecomposable)});

    auto p6 = [](int p) {
      long P = p;
      return P * P * P * P * P * P;
    };

    f.push_back({{"phi10_g1", "Phi_10 witness G_1 (r = b+e)", "digit range witnesses, G_1", 5, 5,
                  std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi10_g1(p); },
                 [p6](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {p6(p)}, "of order p^6"), ev("exp", {P * P}, kQuoteP2),
                       ev("cd", {1, P, P * P}, kQuoteP2),
                       ev("Z_invariants", {P * P}, "Z(G_1) = <beta_1> = C_{p^2}"),
                       ev("c", {P * P * P * P}, "we get c(G_1) = p^4")};
                 },
                 noflags(kCyclicIndecomposable)});
    f.push_back({{"phi10_g2", "Phi_10 witness G_2 (b < r < b+e)", "digit range witnesses, G_2", 5,
                  5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi10_g2(p); },
                 [p6](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {p6(p)}, "of order p^6"), ev("exp", {P * P}, kQuoteP2),
                       ev("cd", {1, P, P * P}, kQuoteP2),
                       ev("Z_invariants", {P, P}, "Z(G_2) = <beta_1, beta_2> = C_p x C_p"),
                       ev("c", {P * P * P + P * P}, "we get c(G_2) = p^3+p^2")};
                 },
                 noflags(kNonCyclicIndecomposable)});
    f.push_back({{"phi12_g3", "Phi_12 witness G_3 (b = r)", "digit range witnesses, G_3", 5, 5,
                  std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi12_a3_power(p, "a1"); },
                 [p6](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {p6(p)}, "of order p^6"), ev("exp", {P * P}, kQuoteP2),
                       ev("cd", {1, P, P * P}, kQuoteP2),
                       ev("Z_invariants", {P, P}, "Z(G_3) = <alpha_1, alpha_2> = C_p x C_p"),
                       ev("c", {2 * P * P}, "we get c(G_3) = 2p^2")};
                 },
                 noflags(kNonCyclicIndecomposable)});

    auto ex2 = [p6](long c3, long c2, std::string quote) {
      return [=](int p, Params const&) {
        long P = p;
        return std::vector<ExpectedValue>{
            ev("order", {p6(p)}, "|G_i| = p^6"), ev("exp", {P * P}, "exp(G_i) = p^2"),
            ev("cd", {1, P, P * P}, "cd(G_i) = {1, p, p^2}"),
            ev("Z_invariants", {P, P}, "Z(G_i) = <alpha_1, alpha_2>"),
            ev("d_Z", {2}, "d(Z(G_i)) = 2"),
            ev("c", {c3 * P * P * P + c2 * P * P}, quote)};
      };
    };
    f.push_back({{"phi12_ex_g1", "Phi_12 metabelian example G_1", "metabelian examples (2), G_1",
                  5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi12_a3_power(p, "a2"); },
                 ex2(1, 1, "c(G_1) = p^3+p^2"), noflags(kNonCyclicIndecomposable)});
    f.push_back({{"phi12_ex_g2", "Phi_12 metabelian example G_2", "metabelian examples (2), G_2",
                  5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi12_a3_power(p, "a1"); },
                 ex2(0, 2, "c(G_2) = 2p^2"), noflags(kNonCyclicIndecomposable)});
    f.push_back({{"phi12_ex_g3", "Phi_12 metabelian example G_3", "metabelian examples (2), G_3",
                  5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi12_ex_g3(p); },
                 ex2(2, 0, "c(G_3) = 2p^3"), noflags(kNonCyclicIndecomposable)});

    f.push_back({{"phi17", "Phi_17 group without an elementary abelian normal subgroup of index p^2",
                  "remark after the metabelian examples", 5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi17(p); },
                 [p6](int p, Params const&) {
                   long P = p;
                   return std::vector<ExpectedValue>{
                       ev("order", {p6(p)}, "a p-group of order p^6"),
                       ev("cd", {1, P, P * P}, "cd(G) = {1, p, p^2}")};
                 },
                 noflags(kNonCyclicIndecomposable)});

    auto phi4x_expected = [p6](int p, Params const&) {
      long P = p;
      return std::vector<ExpectedValue>{
          ev("order", {p6(p)}, "groups of order p^6"),
          ev("cd", {1, P, P * P}, "cd(G) = {1, p, p^2}"),
          ev("Z_invariants", {P}, "Z(G) = <alpha_1> = C_p"),
          ev("derived_invariants", {P, P, P * P}, "G' = <alpha_4, alpha_3, alpha_2> = C_{p^2} x C_p x C_p"),
          ev("c", {P * P * P * P}, kQuoteP4)};
    };

    f.push_back({{"phi42_1", "G_(42,1)", "exp(G') corollary", 5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi4x(p, -1, "a3*a1", "a2*a1^-1"); },
                 phi4x_expected, noflags(kCyclicIndecomposable)});
    f.push_back({{"phi42_2", "G_(42,2)", "exp(G') corollary", 5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) { return phi4x(p, -1, "a3", "a2"); },
                 phi4x_expected, noflags(kCyclicIndecomposable)});
    f.push_back({{"phi42_3k", "G_(42,3k) with a^2 - b^2 = k (mod p)", "exp(G') corollary", 5, 5,
                  std::nullopt, {{"k", 1, "residue k in 1..p-1"}}, "p >= 5, 1 <= k <= p-1"},
                 [](int p, Params const& ps) {
                   long k = require_k(p, ps);
                   auto [a, b] = solve_norm_form(p, 1, k);
                   return phi4x(p, -1, "a3*" + pw("a1", -a - 1), "a2*" + pw("a1", 1 - b));
                 },
                 phi4x_expected, noflags(kCyclicIndecomposable)});
    f.push_back({{"phi43_1", "G_(43,1)", "exp(G') corollary", 5, 5, std::nullopt, {}, "p >= 5"},
                 [](int p, Params const&) {
                   long nu = smallest_nonresidue(p);
                   long nu_inv = inverse_mod(nu, p);
                   return phi4x(p, -nu_inv, "a3*a1^-1", pw("a2", nu) + "*a1");
                 },
                 phi4x_expected, noflags(kCyclicIndecomposable)});
    f.push_back({{"phi43_2k", "G_(43,2k) with a^2 - nu^-1 b^2 = k (mod p)", "exp(G') corollary",
                  5, 5, std::nullopt, {{"k", 1, "residue k in 1..p-1"}},
                  "p >= 5, 1 <= k <= p-1"},
                 [](int p, Params const& ps) {
                   long k = require_k(p, ps);
                   long nu = smallest_nonresidue(p);
                   long nu_inv = inverse_mod(nu, p);
                   auto [a, b] = solve_norm_form(p, nu_inv, k);
                   return phi4x(p, -nu_inv, "a3*" + pw("a1", -a - 1),
                                pw("a2", nu) + "*" + pw("a1", 1 - b));
                 },
                 phi4x_expected, noflags(kCyclicIndecomposable)});

    f.push_back({{"tower", "cyclic-center tower G_i of order p^n with mu(G_i) = p^i",
                  "existence of transitive p-groups of each degree", 3, 5, std::nullopt,
                  {{"n", 4, "log_p of the order, n >= 3"}, {"i", 2, "target log_p mu, 2 <= i <= n-1"}},
                  "p >= max(3, n), 3 <= n, 2 <= i <= n-1"},
                 [](int p, Params const& ps) { return tower(p, ps.at("n"), ps.at("i")); },
                 [](int p, Params const& ps) {
                   long P = p, n = ps.at("n"), i = ps.at("i");
                   long z = i == 2 ? P : ipow(P, i - 2);
                   return std::vector<ExpectedValue>{
                       ev("order", {ipow(P, n)}, "|G_i| = p^n"),
                       ev("cd", {1, P}, "cd(G_i) = {1, p}"),
                       ev("Z_invariants", {z},
                          i == 2 ? "Z(G_2) = <alpha_{n-1}> = C_p" : "Z(G_i) = <alpha_1^p> = C_{p^{i-2}}"),
                       ev("mu", {ipow(P, i)}, "mu(G_i) = p^i"),
                       ev("c", {ipow(P, i)}, "c(G) = mu(G) in {p^2, p^3, ..., p^{n-1}}")};
                 },
                 noflags(kCyclicIndecomposable)});
    return f;
  }();
  return fams;
}

Family const& family(std::string const& id) {
  for (auto const& f : families()) {
    if (f.entry.id == id) return f;
  }
  throw CatalogError("unknown catalog family '" + id + "'");
}

}  // namespace

std::vector<CatalogEntry> const& catalog() {
  static std::vector<CatalogEntry> const entries = [] {
    std::vector<CatalogEntry> out;
    for (auto const& f : families()) out.push_back(f.entry);
    return out;
  }();
  return entries;
}

CatalogEntry const& catalog_entry(std::string const& id) { return family(id).entry; }

int default_prime(std::string const& family_id) { return catalog_entry(family_id).default_p; }

Params resolve_params(CatalogEntry const& entry, int p, Params params) {
  for (auto const& [name, value] : params) {
    bool known = std::any_of(entry.params.begin(), entry.params.end(),
                             [&](ParamSpec const& s) { return s.name == name; });
    if (!known) throw CatalogError("family '" + entry.id + "' has no parameter '" + name + "'");
  }
  for (auto const& s : entry.params) params.emplace(s.name, s.default_value);
  if (!is_prime(p)) throw CatalogError(std::to_string(p) + " is not prime");
  if (entry.fixed_p && p != *entry.fixed_p) {
    throw CatalogError("prime constraint violated: family '" + entry.id + "' requires p = " +
                       std::to_string(*entry.fixed_p));
  }
  if (p < entry.min_p) {
    throw CatalogError("prime constraint violated: family '" + entry.id + "' requires p >= " +
                       std::to_string(entry.min_p));
  }
  if (entry.id == "tower") {
    long n = params.at("n"), i = params.at("i");
    if (n < 3) throw CatalogError("parameter n must be at least 3");
    if (i < 2 || i > n - 1) throw CatalogError("parameter i must lie in 2..n-1");
    if (p < n) {
      throw CatalogError("prime constraint violated: tower family requires p >= n (p = " +
                         std::to_string(p) + ", n = " + std::to_string(n) + ")");
    }
  }
  if (entry.id == "abelian") {
    long total = 0;
    if (params.at("r1") < 1) throw CatalogError("parameter r1 must be at least 1");
    for (auto k : {"r1", "r2", "r3"}) {
      if (params.at(k) < 0) throw CatalogError(std::string("parameter ") + k + " must be >= 0");
      total += params.at(k);
    }
    if (total > 8) throw CatalogError("abelian family limited to order p^8");
  }
  if (params.count("k")) require_k(p, params);
  return params;
}

GroupSpec expand_catalog(std::string const& family_id, int p, Params const& params) {
  auto const& f = family(family_id);
  auto full = resolve_params(f.entry, p, params);
  GroupSpec spec = f.build(p, full);
  spec.meta.family = family_id;
  spec.meta.p = p;
  spec.meta.params = full;
  auto flags = f.flags(p, full);
  spec.meta.cyclic_center_expected = flags[0];
  spec.meta.not_nontrivial_split = flags[1];
  spec.meta.metabelian_expected = flags[2];
  return spec;
}

std::vector<ExpectedValue> expected_values(std::string const& family_id, int p,
                                           Params const& params) {
  auto const& f = family(family_id);
  return f.expected(p, resolve_params(f.entry, p, params));
}

ExpectedValue expected_value(std::string const& family_id, int p, Params const& params,
                             std::string const& quantity) {
  for (auto& e : expected_values(family_id, p, params)) {
    if (e.quantity == quantity) return e;
  }
  throw CatalogError("quantity '" + quantity + "' is not claimed for family '" + family_id + "'");
}

}  // namespace mfd
