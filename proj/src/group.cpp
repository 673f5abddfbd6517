#include "mfd/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace mfd {

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

Subgroup finish(std::vector<Element> elements, std::vector<Element> gens) {
  std::sort(elements.begin(), elements.end());
  Subgroup s;
  s.fingerprint = fingerprint_of(elements);
  s.elements = std::move(elements);
  s.generators = std::move(gens);
  return s;
}

// Incremental closure: keeps a membership mask, the element list and a short
// generating list, and grows by one generator at a time.
class Closure {
 public:
  explicit Closure(Group const& g) : g_(g), mask_(g.order(), 0) {
    mask_[0] = 1;
    elems_.push_back(0);
  }
  Closure(Group const& g, Subgroup const& base) : g_(g), mask_(g.order(), 0) {
    for (auto x : base.elements) mask_[x] = 1;
    elems_ = base.elements;
    gens_ = base.generators;
  }

  bool contains(Element x) const { return mask_[x] != 0; }
  std::size_t size() const { return elems_.size(); }

  bool add(Element s) {
    if (mask_[s]) return false;
    gens_.push_back(s);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (auto h : gens_) {
        auto y = g_.mul(elems_[i], h);
        if (!mask_[y]) {
          mask_[y] = 1;
          elems_.push_back(y);
        }
      }
    }
    return true;
  }

  Subgroup take() { return finish(std::move(elems_), std::move(gens_)); }

 private:
  Group const& g_;
  std::vector<char> mask_;
  std::vector<Element> elems_;
  std::vector<Element> gens_;
};

// Subgroup from a known element set; picks a short generating set greedily in
// increasing element order.
Subgroup from_elements(Group const& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  Closure c(g);
  for (auto x : elements) {
    if (c.size() == elements.size()) break;
    c.add(x);
  }
  Subgroup s = c.take();
  if (s.elements != elements) throw std::logic_error("element set is not a subgroup");
  return s;
}

Subgroup extend(Group const& g, Subgroup const& base, std::vector<Element> const& extra) {
  Closure c(g, base);
  for (auto x : extra) c.add(x);
  return c.take();
}

int log_base(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

std::uint64_t fingerprint_of(std::vector<Element> const& sorted_elements) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ sorted_elements.size();
  for (auto x : sorted_elements) h = mix(h + x + 0x9e3779b97f4a7c15ULL);
  return h;
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

std::uint32_t Classes::power_map(std::uint32_t c, std::int64_t k) const {
  auto e = static_cast<std::int64_t>(exponent);
  auto r = ((k % e) + e) % e;
  return power_map_table[c * exponent + static_cast<std::uint64_t>(r)];
}

Group::Group(RegularGroup regular) : regular_(std::move(regular)) {
  auto n = regular_.order;
  inverse_.resize(n);
  orders_.resize(n);
  for (Element x = 0; x < n; ++x) {
    inverse_[x] = regular_.apply(0, invert(regular_.def_words[x]));
  }
  for (Element x = 0; x < n; ++x) {
    std::uint32_t o = 1;
    for (Element y = x; y != 0; y = mul(y, x)) ++o;
    orders_[x] = x == 0 ? 1 : o;
  }
  for (std::size_t i = 0; i < regular_.num_generators(); ++i) {
    generators_.push_back(regular_.gen_perm(i)[0]);
  }
  for (auto o : orders_) exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(o));
  if (n > 1) {
    std::uint64_t m = n;
    std::uint64_t p = 2;
    while (m % p != 0) ++p;
    while (m % p == 0) {
      m /= p;
      ++log_order_;
    }
    if (m == 1) {
      prime_ = static_cast<int>(p);
    } else {
      log_order_ = 0;
    }
  }
}

Element Group::pow(Element x, long k) const {
  long o = orders_[x];
  long e = ((k % o) + o) % o;
  Element result = 0;
  Element base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Classes conjugacy_classes(Group const& g) {
  Classes cl;
  auto n = g.order();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  cl.class_of.assign(n, kNone);
  std::vector<Element> orbit;
  for (Element x = 0; x < n; ++x) {
    if (cl.class_of[x] != kNone) continue;
    auto id = static_cast<std::uint32_t>(cl.reps.size());
    cl.reps.push_back(x);
    orbit.assign(1, x);
    cl.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto s : g.generators()) {
        auto y = g.conj(orbit[i], s);
        if (cl.class_of[y] == kNone) {
          cl.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    cl.sizes.push_back(orbit.size());
  }
  cl.exponent = g.exponent();
  auto e = cl.exponent;
  cl.power_map_table.resize(cl.reps.size() * e);
  for (std::size_t c = 0; c < cl.reps.size(); ++c) {
    Element y = 0;
    for (std::uint64_t k = 0; k < e; ++k) {
      cl.power_map_table[c * e + k] = cl.class_of[y];
      y = g.mul(y, cl.reps[c]);
    }
  }
  return cl;
}

Subgroup trivial_subgroup(Group const& g) { return Closure(g).take(); }

Subgroup whole_group(Group const& g) { return subgroup_closure(g, g.generators()); }

Subgroup subgroup_closure(Group const& g, std::vector<Element> const& gens) {
  Closure c(g);
  for (auto x : gens) c.add(x);
  return c.take();
}

Subgroup normal_closure(Group const& g, std::vector<Element> const& gens,
                        Subgroup const* within) {
  auto const& conjugators = within ? within->generators : g.generators();
  Closure c(g);
  for (auto x : gens) c.add(x);
  Subgroup k = c.take();
  bool changed = true;
  while (changed) {
    changed = false;
    Closure grow(g, k);
    for (std::size_t i = 0; i < k.generators.size(); ++i) {
      for (auto w : conjugators) {
        if (grow.add(g.conj(k.generators[i], w))) changed = true;
      }
    }
    if (changed) k = grow.take();
  }
  return k;
}

Subgroup centralizer(Group const& g, std::vector<Element> const& s) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : s) {
      if (!g.commute(x, y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return from_elements(g, std::move(out));
}

Subgroup center(Group const& g) { return centralizer(g, g.generators()); }

Subgroup derived_subgroup(Group const& g) {
  std::vector<Element> comms;
  auto const& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.comm(gens[i], gens[j]));
  }
  return normal_closure(g, comms);
}

Subgroup core(Group const& g, Subgroup const& h) {
  std::vector<char> in(g.order(), 0);
  for (auto x : h.elements) in[x] = 1;
  std::vector<Element> cur = h.elements;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto s : g.generators()) {
      std::vector<Element> next;
      next.reserve(cur.size());
      for (auto x : cur) {
        if (in[g.conj(x, s)]) {
          next.push_back(x);
        }
      }
      if (next.size() != cur.size()) {
        changed = true;
        for (auto x : cur) in[x] = 0;
        for (auto x : next) in[x] = 1;
        cur = std::move(next);
      }
    }
  }
  return from_elements(g, std::move(cur));
}

Subgroup intersection(Group const& g, Subgroup const& a, Subgroup const& b) {
  std::vector<Element> out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(out));
  return from_elements(g, std::move(out));
}

Subgroup join(Group const& g, Subgroup const& a, Subgroup const& b) {
  return extend(g, a, b.generators);
}

bool is_normal(Group const& g, Subgroup const& h) {
  for (auto x : h.generators) {
    for (auto s : g.generators()) {
      if (!h.contains(g.conj(x, s))) return false;
    }
  }
  return true;
}

bool is_abelian(Group const& g, Subgroup const& h) {
  auto const& gens = h.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!g.commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

std::uint64_t subgroup_exponent(Group const& g, Subgroup const& h) {
  std::uint64_t e = 1;
  for (auto x : h.elements) e = std::lcm(e, static_cast<std::uint64_t>(g.element_order(x)));
  return e;
}

Subgroup frattini(Group const& g, Subgroup const& h) {
  auto p = g.prime();
  if (p == 0) return trivial_subgroup(g);
  Closure c(g);
  for (auto x : h.elements) c.add(g.pow(x, p));
  auto const& gens = h.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) c.add(g.comm(gens[i], gens[j]));
  }
  Subgroup seed = c.take();
  return normal_closure(g, seed.generators, &h);
}

int frattini_quotient_rank(Group const& g, Subgroup const& h) {
  if (g.prime() == 0) return 0;
  auto phi = frattini(g, h);
  return log_base(h.order() / phi.order(), static_cast<std::uint64_t>(g.prime()));
}

std::vector<Subgroup> maximal_subgroups(Group const& g, Subgroup const& h) {
  auto p = static_cast<std::uint32_t>(g.prime());
  if (p == 0 || h.is_trivial()) return {};
  Subgroup phi = frattini(g, h);
  std::vector<Element> basis;
  {
    Closure c(g, phi);
    for (auto x : h.generators) {
      if (c.add(x)) basis.push_back(x);
    }
  }
  auto d = basis.size();
  std::vector<std::uint32_t> pw(d + 1, 1);
  for (std::size_t i = 1; i <= d; ++i) pw[i] = pw[i - 1] * p;

  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> coord(g.order(), kNone);
  std::vector<Element> bfs{0};
  coord[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    auto x = bfs[i];
    for (std::size_t j = 0; j < d; ++j) {
      auto y = g.mul(x, basis[j]);
      if (coord[y] != kNone) continue;
      auto cx = coord[x];
      auto digit = (cx / pw[j]) % p;
      coord[y] = cx - digit * pw[j] + ((digit + 1) % p) * pw[j];
      bfs.push_back(y);
    }
  }

  std::vector<Subgroup> out;
  std::vector<std::uint32_t> f(d);
  for (std::uint32_t fi = 1; fi < pw[d]; ++fi) {
    std::size_t lead = d;
    for (std::size_t j = 0; j < d; ++j) {
      f[j] = (fi / pw[j]) % p;
      if (f[j] != 0 && lead == d) lead = j;
    }
    if (f[lead] != 1) continue;
    std::vector<Element> elems;
    for (auto x : h.elements) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) s += static_cast<std::uint64_t>(f[j]) * ((coord[x] / pw[j]) % p);
      if (s % p == 0) elems.push_back(x);
    }
    std::vector<Element> gens = phi.generators;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == lead) continue;
      gens.push_back(g.mul(basis[j], g.pow(basis[lead], static_cast<long>((p - f[j]) % p))));
    }
    out.push_back(finish(std::move(elems), std::move(gens)));
  }
  return out;
}

AbelianInvariants abelian_invariants(Group const& g, Subgroup const& a) {
  if (!is_abelian(g, a)) throw NotAbelian("subgroup is not abelian");
  AbelianInvariants inv;
  if (a.is_trivial()) return inv;
  auto p = static_cast<std::uint64_t>(g.prime());
  if (p == 0) throw std::invalid_argument("abelian invariants need a p-group");
  // s[i] = log_p |Omega_i(A)|
  std::vector<int> s{0};
  for (std::uint64_t q = p;; q *= p) {
    std::uint64_t count = 0;
    for (auto x : a.elements) {
      if (q % g.element_order(x) == 0) ++count;
    }
    s.push_back(log_base(count, p));
    if (count == a.order()) break;
  }
  // t[i] = number of cyclic factors of order >= p^i
  std::vector<int> t(s.size() + 1, 0);
  for (std::size_t i = 1; i < s.size(); ++i) t[i] = s[i] - s[i - 1];
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    q *= p;
    for (int k = 0; k < t[i] - t[i + 1]; ++k) inv.factors.push_back(q);
  }
  std::sort(inv.factors.begin(), inv.factors.end());
  return inv;
}

Subgroup omega1(Group const& g, Subgroup const& a) {
  auto p = static_cast<std::uint32_t>(g.prime());
  std::vector<Element> out;
  for (auto x : a.elements) {
    if (p != 0 && p % g.element_order(x) == 0) out.push_back(x);
  }
  return from_elements(g, std::move(out));
}

namespace {

class AbelianNormalDfs {
 public:
  AbelianNormalDfs(Group const& g, bool collect_all, std::size_t budget)
      : g_(g), collect_all_(collect_all), budget_(budget) {}

  AbelianNormalSearch run() {
    Subgroup z = center(g_);
    seen_.insert(z.fingerprint);
    visit(z);
    std::sort(result_.maximum_order.begin(), result_.maximum_order.end(),
              [](Subgroup const& a, Subgroup const& b) { return a.elements < b.elements; });
    return std::move(result_);
  }

 private:
  Group const& g_;
  bool collect_all_;
  std::size_t budget_;
  std::size_t best_order_ = 0;
  std::uint64_t best_exp_ = 0;
  std::unordered_set<std::uint64_t> seen_;
  AbelianNormalSearch result_;

  void record(Subgroup const& a) {
    auto e = subgroup_exponent(g_, a);
    if (a.order() > best_order_) {
      best_order_ = a.order();
      best_exp_ = e;
      result_.maximum_order.assign(1, a);
      return;
    }
    if (a.order() < best_order_) return;
    for (auto const& s : result_.maximum_order) {
      if (s == a) return;
    }
    if (collect_all_) {
      result_.maximum_order.push_back(a);
    } else if (e > best_exp_ ||
               (e == best_exp_ && a.elements < result_.maximum_order.front().elements)) {
      best_exp_ = e;
      result_.maximum_order.assign(1, a);
    }
  }

  void visit(Subgroup const& a) {
    if (++result_.nodes > budget_) {
      result_.complete = false;
      return;
    }
    Subgroup c = centralizer(g_, a.generators);
    // Every abelian subgroup containing A lies in C_G(A), which is normal.
    if (c.order() < best_order_) return;
    if (c.order() == a.order()) {
      record(a);
      return;
    }
    if (is_abelian(g_, c)) {
      record(c);
      return;
    }
    if (c.order() == best_order_) return;
    record(a);
    auto p = g_.prime();
    std::vector<char> done(g_.order(), 0);
    for (auto x : a.elements) done[x] = 1;
    for (auto x : c.elements) {
      if (done[x]) continue;
      if (!a.contains(g_.pow(x, p))) continue;
      bool central = true;
      for (auto s : g_.generators()) {
        if (!a.contains(g_.comm(x, s))) {
          central = false;
          break;
        }
      }
      if (!central) continue;
      Subgroup b = extend(g_, a, {x});
      for (auto y : b.elements) done[y] = 1;
      if (!seen_.insert(b.fingerprint).second) continue;
      visit(b);
      if (!result_.complete) return;
    }
  }
};

}  // namespace

AbelianNormalSearch abelian_normal_search(Group const& g, bool collect_all,
                                          std::size_t node_budget) {
  return AbelianNormalDfs(g, collect_all, node_budget).run();
}

Subgroup max_abelian_normal(Group const& g, std::size_t node_budget) {
  auto r = abelian_normal_search(g, false, node_budget);
  if (!r.complete) throw BudgetExceeded("abelian normal subgroup search exceeded its node budget");
  return r.maximum_order.front();
}

std::vector<Subgroup> all_subgroups(Group const& g) {
  std::vector<Subgroup> subs{trivial_subgroup(g)};
  std::unordered_set<std::uint64_t> seen{subs[0].fingerprint};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::vector<char> done(g.order(), 0);
    for (auto x : subs[i].elements) done[x] = 1;
    for (Element x = 0; x < g.order(); ++x) {
      if (done[x]) continue;
      Subgroup b = extend(g, subs[i], {x});
      for (auto y : b.elements) done[y] = 1;
      if (seen.insert(b.fingerprint).second) subs.push_back(std::move(b));
    }
  }
  std::sort(subs.begin(), subs.end(), [](Subgroup const& a, Subgroup const& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return subs;
}

}  // namespace mfd
