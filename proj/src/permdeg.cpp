#include "mfd/permdeg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "mfd/parallel.hpp"

namespace mfd {

namespace {

using Bits = std::vector<std::uint64_t>;

// Subsets of the socle V = Omega_1(Z(G)), as bitsets over V's sorted elements.
class Socle {
 public:
  explicit Socle(Group const& g) : v_(omega1(g, center(g))), pos_(g.order(), -1) {
    for (std::size_t i = 0; i < v_.elements.size(); ++i) pos_[v_.elements[i]] = static_cast<int>(i);
    words_ = (v_.elements.size() + 63) / 64;
  }

  Subgroup const& subgroup() const { return v_; }

  Bits trace(Subgroup const& h) const {
    Bits b(words_, 0);
    for (auto x : v_.elements) {
      if (h.contains(x)) set(b, x);
    }
    return b;
  }

  Bits identity_only() const {
    Bits b(words_, 0);
    b[0] = 1;
    return b;
  }

  // Every subgroup of V, as traces.
  std::vector<Bits> subspaces(Group const& g) const {
    std::vector<Subgroup> found{trivial_subgroup(g)};
    std::map<Bits, bool> seen{{trace(found[0]), true}};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto x : v_.elements) {
        if (found[i].contains(x)) continue;
        auto gens = found[i].generators;
        gens.push_back(x);
        auto s = subgroup_closure(g, gens);
        if (seen.emplace(trace(s), true).second) found.push_back(std::move(s));
      }
    }
    std::vector<Bits> out;
    for (auto& [b, _] : seen) out.push_back(b);
    return out;
  }

 private:
  Subgroup v_;
  std::vector<int> pos_;
  std::size_t words_ = 1;

  void set(Bits& b, Element x) const {
    auto i = static_cast<std::size_t>(pos_[x]);
    b[i / 64] |= std::uint64_t{1} << (i % 64);
  }
};

bool proper_subset(Bits const& a, Bits const& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
    if (a[i] != b[i]) strict = true;
  }
  return strict;
}

Bits meet(Bits const& a, Bits const& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

struct Best {
  std::uint64_t index = 0;
  Subgroup h;
  int level = 0;
};

struct Family {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint64_t> fingerprints;
  std::vector<Subgroup const*> members;

  auto key() const { return std::tie(total, degrees, fingerprints); }
};

class Combiner {
 public:
  Combiner(std::vector<std::pair<Bits, Best const*>> entries, Bits start, Bits target, int lo, int hi)
      : entries_(std::move(entries)), start_(std::move(start)), target_(std::move(target)), lo_(lo),
        hi_(hi) {
    std::sort(entries_.begin(), entries_.end(), [](auto const& a, auto const& b) {
      return std::pair(a.second->index, a.second->h.fingerprint) <
             std::pair(b.second->index, b.second->h.fingerprint);
    });
  }

  std::optional<Family> run() {
    std::vector<std::size_t> chosen;
    visit(0, start_, chosen, 0);
    return best_;
  }

 private:
  std::vector<std::pair<Bits, Best const*>> entries_;
  Bits start_;
  Bits target_;
  int lo_;
  int hi_;
  std::optional<Family> best_;

  void visit(std::size_t from, Bits const& inter, std::vector<std::size_t>& chosen, std::uint64_t total) {
    if (inter == target_) {
      if (static_cast<int>(chosen.size()) >= lo_) consider(chosen, total);
      return;
    }
    if (static_cast<int>(chosen.size()) >= hi_) return;
    for (auto j = from; j < entries_.size(); ++j) {
      auto t = total + entries_[j].second->index;
      if (best_ && t > best_->total) break;
      auto next = meet(inter, entries_[j].first);
      if (next == inter) continue;
      chosen.push_back(j);
      visit(j + 1, next, chosen, t);
      chosen.pop_back();
    }
  }

  void consider(std::vector<std::size_t> const& chosen, std::uint64_t total) {
    Family f;
    f.total = total;
    for (auto j : chosen) {
      f.degrees.push_back(entries_[j].second->index);
      f.fingerprints.push_back(entries_[j].second->h.fingerprint);
      f.members.push_back(&entries_[j].second->h);
    }
    if (!best_ || f.key() < best_->key()) best_ = std::move(f);
  }
};

}  // namespace

MuSolution solve_mu(Group const& g, MuOptions const& opts) {
  auto p = static_cast<std::uint64_t>(g.prime());
  if (p == 0) throw std::invalid_argument("permutation degree search needs a nontrivial p-group");
  Socle socle(g);
  int d = static_cast<int>(abelian_invariants(g, socle.subgroup()).rank());
  auto [lo, hi] = opts.size_range.value_or(std::pair(1, d));
  auto all_w = socle.subspaces(g);
  auto zero = socle.identity_only();
  auto full = socle.trace(socle.subgroup());

  std::map<Bits, Best> best;
  auto order = static_cast<std::uint64_t>(g.order());
  best[zero] = Best{order, trivial_subgroup(g), g.log_order()};

  auto combine = [&](int level) {
    std::vector<std::pair<Bits, Best const*>> entries;
    for (auto const& [w, b] : best) {
      if (b.level <= level) entries.emplace_back(w, &b);
    }
    return Combiner(std::move(entries), full, zero, lo, hi).run();
  };

  MuSolution sol;
  sol.socle_rank = d;
  std::vector<Subgroup> frontier{whole_group(g)};
  std::uint64_t index = 1;
  std::uint64_t incumbent = order;
  int level = 0;
  for (; !frontier.empty(); ++level, index *= p) {
    for (auto& h : frontier) {
      auto w = socle.trace(h);
      auto it = best.find(w);
      if (it == best.end() || index < it->second.index ||
          (index == it->second.index && h.elements < it->second.h.elements)) {
        best[w] = Best{index, h, level};
      }
    }
    if (auto f = combine(level)) incumbent = std::min(incumbent, f->total);
    if (index * p >= incumbent) break;

    // A descendant of H is useful only if its trace is a proper subspace of
    // H's trace not yet reached at a smaller index.
    auto resolved = [&](Bits const& w) {
      auto it = best.find(w);
      return it != best.end() && it->second.level <= level;
    };
    std::vector<Subgroup const*> expand;
    for (auto& h : frontier) {
      auto w = socle.trace(h);
      bool useful = false;
      for (auto const& u : all_w) {
        if (proper_subset(u, w) && !resolved(u)) {
          useful = true;
          break;
        }
      }
      if (useful) expand.push_back(&h);
    }
    if (sol.nodes + expand.size() > opts.node_budget) {
      expand.resize(opts.node_budget - sol.nodes);
      sol.complete = false;
    }
    sol.nodes += expand.size();

    std::vector<std::vector<Subgroup>> children(expand.size());
    parallel_for(expand.size(), opts.threads,
                 [&](std::size_t i) { children[i] = maximal_subgroups(g, *expand[i]); });
    std::vector<Subgroup> next;
    std::map<std::uint64_t, std::vector<std::size_t>> by_fp;
    for (auto& list : children) {
      for (auto& k : list) {
        auto& slots = by_fp[k.fingerprint];
        bool dup = false;
        for (auto s : slots) {
          if (next[s].elements == k.elements) {
            dup = true;
            break;
          }
        }
        if (dup) continue;
        slots.push_back(next.size());
        next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
    if (!sol.complete) {
      ++level;
      index *= p;
      for (auto& h : frontier) {
        auto w = socle.trace(h);
        auto it = best.find(w);
        if (it == best.end() || index < it->second.index) best[w] = Best{index, h, level};
      }
      break;
    }
  }
  sol.levels = level;

  auto f = combine(g.log_order());
  if (!f) throw std::logic_error("no core-free family found");
  sol.mu_value = f->total;
  for (auto const* h : f->members) {
    sol.witness.push_back(*h);
    sol.degrees.push_back(order / h->order());
  }
  return sol;
}

PermAction realize_permutation(Group const& g, std::vector<Subgroup> const& witness,
                               GroupSpec const* spec) {
  auto n = g.order();
  PermAction act;
  std::vector<std::vector<std::uint32_t>> coset_of;
  std::vector<std::vector<Element>> reps;
  act.offsets.push_back(0);
  for (auto const& h : witness) {
    std::vector<std::uint32_t> cos(n, UINT32_MAX);
    std::vector<Element> r;
    for (Element x = 0; x < n; ++x) {
      if (cos[x] != UINT32_MAX) continue;
      auto id = static_cast<std::uint32_t>(r.size());
      r.push_back(x);
      for (auto y : h.elements) cos[g.mul(y, x)] = id;
    }
    act.offsets.push_back(act.offsets.back() + r.size());
    coset_of.push_back(std::move(cos));
    reps.push_back(std::move(r));
  }
  act.degree = act.offsets.back();

  auto const& rg = g.regular();
  for (std::size_t s = 0; s < rg.num_generators(); ++s) {
    std::vector<std::uint32_t> img(act.degree);
    auto const& perm = rg.gen_perm(s);
    for (std::size_t b = 0; b < witness.size(); ++b) {
      for (std::size_t i = 0; i < reps[b].size(); ++i) {
        img[act.offsets[b] + i] = static_cast<std::uint32_t>(act.offsets[b] + coset_of[b][perm[reps[b][i]]]);
      }
    }
    act.images.push_back(std::move(img));
  }

  if (spec != nullptr) {
    std::vector<std::vector<std::uint32_t>> inverse(act.images.size(),
                                                    std::vector<std::uint32_t>(act.degree));
    for (std::size_t s = 0; s < act.images.size(); ++s) {
      for (std::uint32_t x = 0; x < act.degree; ++x) inverse[s][act.images[s][x]] = x;
    }
    for (auto const& rel : spec->relators) {
      for (std::uint32_t pt = 0; pt < act.degree; ++pt) {
        auto x = pt;
        for (auto l : rel) {
          auto s = letter_gen(l);
          x = letter_is_inverse(l) ? inverse[s][x] : act.images[s][x];
        }
        if (x != pt) {
          throw std::logic_error("relator " + spec->format_word(rel) + " moves point " +
                                 std::to_string(pt + 1));
        }
      }
    }
  }

  for (Element y = 1; y < n; ++y) {
    bool moves = false;
    for (std::size_t b = 0; b < witness.size() && !moves; ++b) {
      for (auto x : reps[b]) {
        if (coset_of[b][g.mul(x, y)] != coset_of[b][x]) {
          moves = true;
          break;
        }
      }
    }
    if (!moves) throw NotFaithful("element " + std::to_string(y) + " acts trivially");
  }

  std::vector<std::uint32_t> parent(act.degree);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto const& img : act.images) {
    for (std::uint32_t x = 0; x < act.degree; ++x) parent[find(x)] = find(img[x]);
  }
  for (std::uint32_t x = 0; x < act.degree; ++x) act.orbit_count += find(x) == x;
  return act;
}

std::string cycle_notation(std::vector<std::uint32_t> const& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t x = 0; x < perm.size(); ++x) {
    if (seen[x] || perm[x] == x) continue;
    os << '(';
    for (auto y = x; !seen[y]; y = perm[y]) {
      if (y != x) os << ',';
      os << y + 1;
      seen[y] = true;
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

std::string export_witness(Group const& g, GroupSpec const& spec, MuSolution const& mu,
                           PermAction const& action) {
  std::ostringstream os;
  os << "degree " << action.degree << "\n";
  for (std::size_t b = 0; b < mu.witness.size(); ++b) {
    os << "block " << b + 1 << " points " << action.offsets[b] + 1 << ".." << action.offsets[b + 1]
       << " subgroup <";
    auto const& gens = mu.witness[b].generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) os << ", ";
      os << spec.format_word(g.regular().def_words[gens[i]]);
    }
    os << ">\n";
  }
  for (std::size_t s = 0; s < action.images.size(); ++s) {
    os << spec.generators[s] << " -> " << cycle_notation(action.images[s]) << "\n";
  }
  return os.str();
}

CMuCheck cross_check_c_mu(std::int64_t c, MuSolution const& mu) {
  CMuCheck r;
  r.c = c;
  r.mu = mu.mu_value;
  r.mu_complete = mu.complete;
  r.equal = c >= 0 && static_cast<std::uint64_t>(c) == mu.mu_value;
  return r;
}

}  // namespace mfd
