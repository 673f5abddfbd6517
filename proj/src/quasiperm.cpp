#include "mfd/quasiperm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace mfd {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits class_bits(std::vector<std::uint32_t> const& classes, std::size_t k) {
  Bits b((k + 63) / 64, 0);
  for (auto c : classes) b[c / 64] |= std::uint64_t{1} << (c % 64);
  return b;
}

bool only_identity(Bits const& b) {
  if (b[0] != 1) return false;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] != 0) return false;
  }
  return true;
}

Bits meet(Bits const& a, Bits const& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

Bits full_bits(std::size_t k) {
  Bits b((k + 63) / 64, ~std::uint64_t{0});
  if (k % 64 != 0) b.back() = (std::uint64_t{1} << (k % 64)) - 1;
  return b;
}

bool irredundant(std::vector<Bits> const& kernels, std::size_t k) {
  if (kernels.empty()) return false;
  Bits all = full_bits(k);
  for (auto const& b : kernels) all = meet(all, b);
  if (!only_identity(all)) return false;
  for (std::size_t skip = 0; skip < kernels.size(); ++skip) {
    Bits rest = full_bits(k);
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      if (i != skip) rest = meet(rest, kernels[i]);
    }
    if (only_identity(rest)) return false;
  }
  return true;
}

struct Candidate {
  std::int64_t c = 0;
  std::vector<std::int64_t> psi;
  std::vector<std::size_t> chars;
  std::vector<std::size_t> chosen;
  std::int64_t xi = 0;
  std::int64_t m = 0;

  auto key() const { return std::tie(c, psi, chars); }
};

class CSearch {
 public:
  CSearch(CharTable const& t, std::vector<GaloisSum> const& sums, int min_size, int max_size,
          std::int64_t bound_num, std::int64_t bound_den, std::size_t budget)
      : t_(t), sums_(sums), k_(t.classes.count()), min_size_(min_size), max_size_(max_size),
        num_(bound_num), den_(bound_den), budget_(budget), xi_(k_, 0) {
    for (auto const& s : sums) kernels_.push_back(class_bits(s.kernel_classes, k_));
  }

  void run() {
    std::vector<std::size_t> chosen;
    visit(0, full_bits(k_), chosen, 0);
  }

  std::optional<Candidate> const& best() const { return best_; }
  std::size_t nodes() const { return nodes_; }

 private:
  CharTable const& t_;
  std::vector<GaloisSum> const& sums_;
  std::size_t k_;
  int min_size_;
  int max_size_;
  std::int64_t num_;
  std::int64_t den_;
  std::size_t budget_;
  std::vector<Bits> kernels_;
  std::vector<std::int64_t> xi_;
  std::optional<Candidate> best_;
  std::size_t nodes_ = 0;

  bool beaten(std::int64_t xi_degree) const {
    return best_ && xi_degree * num_ > best_->c * den_;
  }

  void visit(std::size_t start, Bits const& inter, std::vector<std::size_t>& chosen,
             std::int64_t xi_degree) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("c(G) search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (only_identity(inter)) {
      if (static_cast<int>(chosen.size()) >= min_size_) consider(chosen, xi_degree);
      return;
    }
    if (static_cast<int>(chosen.size()) >= max_size_) return;
    for (std::size_t j = start; j < sums_.size(); ++j) {
      auto d = xi_degree + sums_[j].psi_degree;
      // sums are sorted by degree, so every later branch is at least as heavy
      if (beaten(d)) break;
      auto next = meet(inter, kernels_[j]);
      if (next == inter) continue;
      chosen.push_back(j);
      for (std::size_t l = 0; l < k_; ++l) xi_[l] += sums_[j].values[l];
      visit(j + 1, next, chosen, d);
      for (std::size_t l = 0; l < k_; ++l) xi_[l] -= sums_[j].values[l];
      chosen.pop_back();
    }
  }

  void consider(std::vector<std::size_t> const& chosen, std::int64_t xi_degree) {
    std::vector<Bits> ks;
    for (auto j : chosen) ks.push_back(kernels_[j]);
    if (!irredundant(ks, k_)) return;
    Candidate cand;
    cand.xi = xi_degree;
    cand.m = m_of(xi_);
    cand.c = cand.xi + cand.m;
    cand.chosen = chosen;
    for (auto j : chosen) {
      cand.psi.push_back(sums_[j].psi_degree);
      cand.chars.push_back(sums_[j].representative());
    }
    std::sort(cand.psi.begin(), cand.psi.end());
    std::sort(cand.chars.begin(), cand.chars.end());
    if (!best_ || cand.key() < best_->key()) best_ = std::move(cand);
  }
};

}  // namespace

std::vector<GaloisSum> galois_orbits(CharTable const& t) {
  auto const& cl = t.classes;
  auto k = cl.count();
  auto e = t.exponent;
  auto phi = totient_prime_power(e);
  auto units = unit_group_generators(e);

  std::map<std::vector<CycInt>, std::size_t> row_of;
  for (std::size_t i = 0; i < t.size(); ++i) row_of.emplace(t.chars[i].values, i);

  std::vector<bool> seen(t.size(), false);
  std::vector<GaloisSum> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit{i};
    seen[i] = true;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      auto const& chi = t.chars[orbit[pos]].values;
      for (auto u : units) {
        std::vector<CycInt> img(k);
        for (std::uint32_t c = 0; c < k; ++c) {
          img[c] = chi[cl.power_map(c, static_cast<std::int64_t>(u))];
        }
        auto it = row_of.find(img);
        if (it == row_of.end()) throw std::logic_error("Galois image is not a row of the table");
        if (!seen[it->second]) {
          seen[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    }
    if (phi % orbit.size() != 0) throw std::logic_error("orbit size does not divide phi(e)");
    std::sort(orbit.begin(), orbit.end());

    GaloisSum s;
    s.orbit = orbit;
    s.char_degree = t.chars[i].degree;
    s.kernel_classes = t.chars[i].kernel_classes;
    s.contains_linear = s.char_degree == 1;
    s.values.resize(k);
    for (std::uint32_t c = 0; c < k; ++c) {
      CycInt acc(e);
      for (auto j : orbit) {
        if (t.chars[j].kernel_classes != s.kernel_classes) {
          throw std::logic_error("Galois conjugates with different kernels");
        }
        acc += t.chars[j].values[c];
      }
      try {
        s.values[c] = acc.as_integer();
      } catch (NotRational const&) {
        throw std::logic_error("Galois sum is not rational at class " + std::to_string(c));
      }
    }
    s.psi_degree = s.values[0];
    if (s.psi_degree != static_cast<std::int64_t>(orbit.size() * s.char_degree)) {
      throw std::logic_error("Galois sum degree mismatch");
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](GaloisSum const& a, GaloisSum const& b) {
    return std::pair(a.psi_degree, a.representative()) < std::pair(b.psi_degree, b.representative());
  });
  return out;
}

std::int64_t m_of(std::vector<std::int64_t> const& xi) {
  std::int64_t lo = 0;
  for (auto v : xi) lo = std::min(lo, v);
  return -lo;
}

CSolution solve_c(Group const& g, CharTable const& t, std::vector<GaloisSum> const& sums,
                  CSearchOptions const& opts) {
  auto p = g.prime();
  int lo = 1;
  int hi = static_cast<int>(sums.size());
  std::int64_t num = 1;
  std::int64_t den = 1;
  if (opts.mode == CMode::PGroupFast) {
    if (p == 0) throw std::invalid_argument("p-group-fast mode needs a nontrivial p-group");
    int d = static_cast<int>(abelian_invariants(g, center(g)).rank());
    if (p == 2) {
      lo = (d + 1) / 2;
      hi = d;
    } else {
      lo = hi = d;
      num = p;
      den = p - 1;
    }
  }
  if (opts.size_range) {
    lo = opts.size_range->first;
    hi = opts.size_range->second;
  }

  CSearch search(t, sums, lo, hi, num, den, opts.node_budget);
  search.run();
  if (!search.best()) throw std::logic_error("no faithful family of Galois sums found");
  auto const& b = *search.best();

  CSolution sol;
  sol.c_value = b.c;
  sol.xi_degree = b.xi;
  sol.m_value = b.m;
  sol.witness = b.chosen;
  sol.nodes = search.nodes();
  sol.mode = opts.mode;
  for (auto j : b.chosen) {
    sol.witness_chars.push_back(sums[j].representative());
    sol.psi_degrees.push_back(sums[j].psi_degree);
    sol.contains_linear_witness = sol.contains_linear_witness || sums[j].contains_linear;
  }
  if (p != 0 && b.c % p == 0) sol.base_p_digits = base_p_digits(b.c, p);
  return sol;
}

bool is_irredundant_faithful(CharTable const& t, std::vector<GaloisSum> const& sums,
                             std::vector<std::size_t> const& chosen) {
  auto k = t.classes.count();
  std::vector<Bits> ks;
  for (auto j : chosen) ks.push_back(class_bits(sums.at(j).kernel_classes, k));
  return irredundant(ks, k);
}

std::vector<int> base_p_digits(std::int64_t c, std::int64_t p) {
  if (c <= 0) throw std::invalid_argument("degree must be positive");
  if (p < 2) throw std::invalid_argument("base must be at least 2");
  if (c % p != 0) throw std::invalid_argument(std::to_string(c) + " has a nonzero units digit base " +
                                              std::to_string(p));
  std::vector<int> digits;
  for (auto r = c / p; r > 0; r /= p) digits.push_back(static_cast<int>(r % p));
  return digits;
}

std::string mode_name(CMode m) {
  return m == CMode::PGroupFast ? "p-group-fast" : "general-exhaustive";
}

}  // namespace mfd
