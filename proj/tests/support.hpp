#ifndef MFD_TESTS_SUPPORT_HPP_
#define MFD_TESTS_SUPPORT_HPP_

// Brute-force oracles. They only use multiplication in the group and never
// call the algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mfd/catalog.hpp"
#include "mfd/chartab.hpp"
#include "mfd/group.hpp"
#include "mfd/quasiperm.hpp"

namespace mfd::test {

struct Named {
  std::string family;
  int p;
  Params params;
};

// Every corpus group of order at most 729, plus SD16.
inline std::vector<Named> small_corpus() {
  return {{"abelian", 3, {{"r1", 1}, {"r2", 2}}},
          {"sd16", 2, {}},
          {"xsp_p3_expP", 3, {}},
          {"xsp_p3_expP2", 3, {}},
          {"xsp_expP_x_cp", 3, {}},
          {"xsp_expP2_x_cp2", 3, {}},
          {"xsp_p3_expP", 5, {}},
          {"tower", 5, {{"n", 4}, {"i", 2}}},
          {"tower", 5, {{"n", 4}, {"i", 3}}}};
}

inline Group build(Named const& n) { return Group(enumerate_regular(expand_catalog(n.family, n.p, n.params))); }

inline std::vector<Element> closure(Group const& g, std::vector<Element> gens) {
  std::set<Element> seen = {0};
  std::vector<Element> frontier = {0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (auto x : frontier) {
      for (auto s : gens) {
        auto y = g.mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Element> bf_center(Group const& g) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

inline std::vector<Element> bf_derived(Group const& g) {
  std::set<Element> comms;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      comms.insert(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    }
  }
  return closure(g, {comms.begin(), comms.end()});
}

inline std::size_t bf_class_count(Group const& g) {
  std::vector<bool> seen(g.order());
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++n;
    for (Element y = 0; y < g.order(); ++y) seen[g.mul(g.mul(g.inv(y), x), y)] = true;
  }
  return n;
}

inline std::vector<Element> bf_core(Group const& g, std::vector<Element> const& h) {
  std::vector<Element> out;
  for (auto x : h) {
    bool all = true;
    for (Element y = 0; y < g.order() && all; ++y) {
      all = std::binary_search(h.begin(), h.end(), g.mul(g.mul(y, x), g.inv(y)));
    }
    if (all) out.push_back(x);
  }
  return out;
}

inline std::vector<Element> meet(std::vector<Element> const& a, std::vector<Element> const& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Least total index of a family of subgroups whose cores meet in {1}.
// Families are extended only when the running intersection shrinks, which
// loses nothing: a member that does not shrink it can be dropped.
inline std::uint64_t bf_mu(Group const& g, std::vector<std::vector<Element>> const& subgroups) {
  std::vector<std::pair<std::uint64_t, std::vector<Element>>> cores;
  for (auto const& h : subgroups) {
    auto c = bf_core(g, h);
    std::uint64_t idx = g.order() / h.size();
    auto it = std::find_if(cores.begin(), cores.end(), [&](auto const& e) { return e.second == c; });
    if (it == cores.end()) cores.emplace_back(idx, c);
    else it->first = std::min(it->first, idx);
  }
  std::uint64_t best = g.order();
  std::function<void(std::size_t, std::vector<Element> const&, std::uint64_t)> dfs =
      [&](std::size_t from, std::vector<Element> const& cur, std::uint64_t total) {
        if (cur.size() == 1) {
          best = std::min(best, total);
          return;
        }
        for (std::size_t i = from; i < cores.size(); ++i) {
          if (total + cores[i].first >= best) continue;
          auto next = meet(cur, cores[i].second);
          if (next.size() < cur.size()) dfs(i + 1, next, total + cores[i].first);
        }
      };
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  dfs(0, all, 0);
  return best;
}

// Least xi(1) + m(xi) over irredundant families of Galois sums with trivial
// kernel intersection, read straight from the sums' values.
inline std::int64_t bf_c(CharTable const& t, std::vector<GaloisSum> const& sums, int max_size) {
  std::size_t k = t.classes.count();
  std::vector<std::vector<bool>> ker(sums.size(), std::vector<bool>(k));
  for (std::size_t i = 0; i < sums.size(); ++i) {
    for (std::size_t l = 0; l < k; ++l) ker[i][l] = sums[i].values[l] == sums[i].values[0];
  }
  auto trivial_meet = [&](std::vector<std::size_t> const& fam, std::size_t skip) {
    for (std::size_t l = 1; l < k; ++l) {
      bool in_all = true;
      for (std::size_t j = 0; j < fam.size() && in_all; ++j) {
        if (j != skip) in_all = ker[fam[j]][l];
      }
      if (in_all) return false;
    }
    return true;
  };
  std::int64_t best = -1;
  std::vector<std::size_t> fam;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!fam.empty() && trivial_meet(fam, fam.size())) {
      bool irredundant = true;
      for (std::size_t s = 0; s < fam.size() && irredundant; ++s) irredundant = !trivial_meet(fam, s);
      if (irredundant) {
        std::vector<std::int64_t> xi(k, 0);
        for (auto j : fam) {
          for (std::size_t l = 0; l < k; ++l) xi[l] += sums[j].values[l];
        }
        auto lo = *std::min_element(xi.begin(), xi.end());
        auto c = xi[0] + std::max<std::int64_t>(0, -lo);
        if (best < 0 || c < best) best = c;
      }
      return;
    }
    if (static_cast<int>(fam.size()) == max_size) return;
    for (std::size_t i = from; i < sums.size(); ++i) {
      fam.push_back(i);
      rec(i + 1);
      fam.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace mfd::test

#endif  // MFD_TESTS_SUPPORT_HPP_
