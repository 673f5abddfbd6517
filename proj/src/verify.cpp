#include "mfd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

namespace mfd {

namespace {

template <class T>
std::string show(std::vector<T> const& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << '}';
  return os.str();
}

std::string show_digits(std::vector<int> const& d) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!first) os << " + ";
    os << d[i] << "*p^" << i + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

bool divides(std::uint64_t a, std::uint64_t b) { return a != 0 && b % a == 0; }

struct Recorder {
  std::string group;
  std::vector<CheckResult>& out;

  void result(std::string id, std::string claim, std::string computed, bool ok,
              std::string quote = {}) {
    CheckResult r;
    r.check_id = std::move(id);
    r.group = group;
    r.claimed = std::move(claim);
    r.quote = std::move(quote);
    r.computed = std::move(computed);
    r.status = ok ? Status::Pass : Status::Fail;
    out.push_back(std::move(r));
  }

  void skip(std::string id, std::string claim, std::string reason, std::string quote = {}) {
    CheckResult r;
    r.check_id = std::move(id);
    r.group = group;
    r.claimed = std::move(claim);
    r.quote = std::move(quote);
    r.status = Status::Skipped;
    r.reason = std::move(reason);
    out.push_back(std::move(r));
  }
};

using Hypotheses = std::vector<std::pair<bool, std::string>>;

std::string first_failed(Hypotheses const& hs) {
  for (auto const& [ok, why] : hs) {
    if (!ok) return why;
  }
  return {};
}

std::string missing_stage(Analysis const& a, std::string const& stage) {
  if (!a.budget_note.empty()) return "budget: " + a.budget_note;
  return stage + " not computed";
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIP";
  }
  return "?";
}

std::string CorpusEntry::label() const {
  std::ostringstream os;
  os << family << "(p=" << p;
  for (auto const& [k, v] : params) os << "," << k << "=" << v;
  os << ")";
  return os.str();
}

Suite parse_suite(std::string const& name) {
  if (name == "smoke") return Suite::Smoke;
  if (name == "paper-p5") return Suite::PaperP5;
  if (name == "stretch") return Suite::Stretch;
  throw std::invalid_argument("unknown suite '" + name + "' (smoke, paper-p5, stretch)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Smoke:
      return "smoke";
    case Suite::PaperP5:
      return "paper-p5";
    case Suite::Stretch:
      return "stretch";
  }
  return "?";
}

std::vector<CorpusEntry> corpus(Suite s) {
  std::vector<CorpusEntry> out = {
      {"abelian", 3, {{"r1", 1}, {"r2", 2}, {"r3", 0}}},
      {"sd16", 2, {}},
      {"xsp_p3_expP", 3, {}},
      {"xsp_p3_expP2", 3, {}},
      {"xsp_expP_x_cp", 3, {}},
      {"xsp_expP2_x_cp2", 3, {}},
      {"xsp_p3_expP", 5, {}},
  };
  if (s == Suite::Smoke) return out;
  for (auto id : {"phi4_221b", "phi4_221f0", "phi4_2111a"}) out.push_back({id, 5, {}});
  for (long n : {4, 5}) {
    for (long i = 2; i <= n - 1; ++i) out.push_back({"tower", 5, {{"n", n}, {"i", i}}});
  }
  if (s == Suite::PaperP5) return out;
  for (auto id : {"phi9", "phi10_g1", "phi10_g2", "phi12_g3", "phi12_ex_g1", "phi12_ex_g2",
                  "phi12_ex_g3", "phi17", "phi42_1", "phi42_2", "phi43_1"}) {
    out.push_back({id, 5, {}});
  }
  out.push_back({"phi42_3k", 5, {{"k", 1}}});
  out.push_back({"phi43_2k", 5, {{"k", 1}}});
  return out;
}

AnalysisOptions verify_analysis_options(VerifyOptions const& opts) {
  AnalysisOptions ao;
  ao.enumeration_limit = opts.enumeration_limit;
  ao.mu_node_budget = opts.mu_node_budget;
  ao.compute_mu = true;
  ao.abelian_normal = true;
  ao.exhaustive_check_order = opts.exhaustive_check_order;
  ao.threads = 1;
  return ao;
}

std::vector<CheckResult> value_checks(CorpusEntry const& entry, Analysis const& a) {
  std::vector<CheckResult> out;
  Recorder rec{entry.label(), out};
  for (auto const& ev : expected_values(entry.family, entry.p, entry.params)) {
    auto id = "value:" + ev.quantity;
    auto claim = show(ev.value);
    std::optional<std::vector<long>> got;
    std::string stage = ev.quantity;
    bool partial = false;
    auto const* g = a.group.get();
    if (ev.quantity == "order" && g) {
      got = std::vector<long>{static_cast<long>(g->order())};
    } else if (ev.quantity == "exp" && g) {
      got = std::vector<long>{static_cast<long>(g->exponent())};
    } else if (ev.quantity == "Z_invariants" && g) {
      got = std::vector<long>(a.center_invariants.factors.begin(), a.center_invariants.factors.end());
    } else if (ev.quantity == "d_Z" && g) {
      got = std::vector<long>{a.d_center};
    } else if (ev.quantity == "derived_invariants" && g) {
      if (a.derived_invariants) {
        got = std::vector<long>(a.derived_invariants->factors.begin(), a.derived_invariants->factors.end());
      } else {
        rec.result(id, claim, "G' is not abelian", false, ev.quote);
        continue;
      }
    } else if (ev.quantity == "cd" && a.table) {
      got = std::vector<long>(a.cd.begin(), a.cd.end());
    } else if (ev.quantity == "c" && a.c) {
      got = std::vector<long>{static_cast<long>(a.c->c_value)};
    } else if (ev.quantity == "mu" && a.mu) {
      got = std::vector<long>{static_cast<long>(a.mu->mu_value)};
      partial = !a.mu->complete;
    }
    if (!got) {
      rec.skip(id, claim, missing_stage(a, stage), ev.quote);
      continue;
    }
    bool ok = *got == ev.value;
    if (!ok && partial) {
      rec.skip(id, claim, "search incomplete; best found " + show(*got), ev.quote);
      continue;
    }
    rec.result(id, claim, show(*got), ok, ev.quote);
  }
  return out;
}

std::vector<CheckResult> property_checks(std::string const& label, Analysis const& a) {
  std::vector<CheckResult> out;
  Recorder rec{label, out};
  if (!a.table || !a.c) {
    rec.skip("properties", "all property checks", missing_stage(a, "character table"));
    return out;
  }
  auto const& g = *a.group;
  auto const& t = *a.table;
  auto const& sol = *a.c;
  auto p = static_cast<std::uint64_t>(g.prime());
  bool pg = p != 0;
  bool odd = pg && p % 2 == 1;
  bool nonabelian = !a.abelian;
  auto order = static_cast<std::uint64_t>(g.order());
  auto c = static_cast<std::uint64_t>(sol.c_value);
  auto zc = static_cast<std::uint64_t>(a.center.order());
  bool cyclic_center = a.d_center == 1;
  auto maxcd = a.cd.back();
  auto const& flags = a.spec.meta;

  auto gated = [&](std::string id, std::string claim, Hypotheses const& hs, auto&& body) {
    auto why = first_failed(hs);
    if (!why.empty()) {
      rec.skip(std::move(id), std::move(claim), why);
      return;
    }
    auto [computed, ok] = body();
    rec.result(std::move(id), std::move(claim), computed, ok);
  };
  using Out = std::pair<std::string, bool>;

  // table sanity
  rec.result("table-orthogonality", "both orthogonality relations hold exactly",
             a.orthogonality_ok ? "exact check passed" : "exact check failed", a.orthogonality_ok);
  {
    std::uint64_t sq = 0;
    std::size_t linear = 0;
    for (auto const& ch : t.chars) {
      sq += ch.degree * ch.degree;
      linear += ch.is_linear();
    }
    rec.result("degree-square-sum", "sum of chi(1)^2 = |G| = " + std::to_string(order),
               std::to_string(sq), sq == order);
    auto want = order / a.derived.order();
    rec.result("linear-count", "number of linear characters = |G:G'| = " + std::to_string(want),
               std::to_string(linear), linear == want);
    std::vector<std::uint32_t> meet(t.classes.count());
    std::iota(meet.begin(), meet.end(), 0U);
    for (auto const& ch : t.chars) {
      std::vector<std::uint32_t> next;
      std::set_intersection(meet.begin(), meet.end(), ch.kernel_classes.begin(), ch.kernel_classes.end(),
                            std::back_inserter(next));
      meet = std::move(next);
    }
    rec.result("kernel-meet", "kernels of all irreducibles meet in {1}",
               std::to_string(meet.size()) + " class(es) in the intersection", meet.size() == 1);
  }
  gated("degrees-p-powers", "every character degree is a power of p", {{pg, "not a p-group"}}, [&] {
    bool ok = std::all_of(a.cd.begin(), a.cd.end(), [&](std::uint64_t d) {
      while (d % p == 0) d /= p;
      return d == 1;
    });
    return Out{"cd = " + show(a.cd), ok};
  });
  {
    bool ok = true;
    for (auto const& s : a.sums) {
      for (std::uint32_t cl = 0; cl < t.classes.count() && ok; ++cl) {
        CycInt acc(t.exponent);
        for (auto j : s.orbit) acc += t.chars[j].values[cl];
        ok = acc.is_integer() && acc.as_integer() == s.values[cl];
      }
      ok = ok && s.psi_degree == static_cast<std::int64_t>(s.orbit.size() * s.char_degree);
    }
    rec.result("galois-sums-integral", "every Galois sum is a rational integer on every class",
               std::to_string(a.sums.size()) + " sums re-assembled", ok);
  }
  {
    std::vector<std::int64_t> xi(t.classes.count(), 0);
    std::int64_t deg = 0;
    for (auto j : sol.witness) {
      deg += a.sums[j].psi_degree;
      for (std::size_t l = 0; l < xi.size(); ++l) xi[l] += a.sums[j].values[l];
    }
    bool irr = is_irredundant_faithful(t, a.sums, sol.witness);
    auto m = m_of(xi);
    bool ok = irr && deg == sol.xi_degree && m == sol.m_value && sol.c_value == deg + m;
    std::ostringstream os;
    os << "xi(1) = " << deg << ", m = " << m << ", irredundant = " << (irr ? "yes" : "no");
    rec.result("c-witness", "witness kernels meet trivially and irredundantly; c = xi(1) + m(xi)",
               os.str(), ok);
  }
  if (a.c_exhaustive) {
    rec.result("c-search-agreement", "fast search value equals exhaustive search value",
               std::to_string(sol.c_value) + " vs " + std::to_string(a.c_exhaustive->c_value),
               sol.c_value == a.c_exhaustive->c_value);
  } else {
    rec.skip("c-search-agreement", "fast search value equals exhaustive search value",
             sol.mode == CMode::GeneralExhaustive ? "primary search was already exhaustive"
                                                  : "order above the exhaustive cross-check limit");
  }

  auto const& shape_sol = a.c_exhaustive ? *a.c_exhaustive : sol;
  gated("witness-shape", "m(xi) = xi(1)/(p-1) and |X_G| = d(Z(G))",
        {{odd, "needs odd p"}, {nonabelian, "needs a non-abelian group"}}, [&] {
          std::ostringstream os;
          os << "m = " << shape_sol.m_value << ", xi(1) = " << shape_sol.xi_degree << ", |X_G| = "
             << shape_sol.witness.size() << ", d(Z) = " << a.d_center << " ("
             << mode_name(shape_sol.mode) << ")";
          bool ok = shape_sol.m_value * static_cast<std::int64_t>(p - 1) == shape_sol.xi_degree &&
                    static_cast<int>(shape_sol.witness.size()) == a.d_center;
          return Out{os.str(), ok};
        });
  gated("digit-sum", "base-p digits of c(G) sum to d(Z(G))",
        {{pg, "not a p-group"}, {nonabelian, "needs a non-abelian group"}}, [&] {
          int sum = 0;
          for (auto d : sol.base_p_digits) sum += d;
          return Out{"c = " + show_digits(sol.base_p_digits) + ", digit sum " + std::to_string(sum) +
                         ", d(Z) = " + std::to_string(a.d_center),
                     sum == a.d_center};
        });

  bool mu_done = a.mu && a.mu->complete;
  std::string mu_why = a.mu ? "permutation degree search incomplete" : missing_stage(a, "mu");
  gated("c-equals-mu", "c(G) = mu(G)", {{odd, "needs odd p"}, {mu_done, mu_why}}, [&] {
    return Out{std::to_string(c) + " vs " + std::to_string(a.mu->mu_value), c == a.mu->mu_value};
  });
  gated("mu-action", "mu(G) is realized by a faithful action of that degree",
        {{a.action.has_value(), mu_why}}, [&] {
          return Out{"faithful action on " + std::to_string(a.action->degree) + " points",
                     a.action->degree == a.mu->mu_value};
        });
  gated("orbit-count", "a minimal faithful action has d(Z(G)) orbits",
        {{odd, "needs odd p"}, {a.action.has_value(), mu_why}, {mu_done, mu_why}}, [&] {
          return Out{std::to_string(a.action->orbit_count) + " orbits, d(Z) = " + std::to_string(a.d_center),
                     static_cast<int>(a.action->orbit_count) == a.d_center};
        });

  // statements about p-groups
  if (!pg) return out;
  int n = g.log_order();
  int b = log_p(g.exponent(), p);
  int e = log_p(maxcd, p);
  int r = static_cast<int>(sol.base_p_digits.size());
  auto cd_is = [&](std::vector<std::uint64_t> const& want) { return a.cd == want; };
  auto exp_p = g.exponent() == p;
  bool split_flag = flags.not_nontrivial_split;
  bool an_done = a.abelian_normal && a.abelian_normal->complete;
  std::string an_why = "abelian normal subgroup search incomplete";

  gated("class2-formula", "c(G) = |G/Z(G)|^(1/2) |Z(G)|",
        {{a.class_two, "needs nilpotency class 2"}, {cyclic_center, "needs a cyclic center"}}, [&] {
          auto q = order / zc;
          auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
          auto want = root * root == q ? root * zc : 0;
          return Out{std::to_string(c) + " vs " + std::to_string(want), c == want};
        });
  gated("linear-exclusion", "X_G has no linear character and p^(s+1) divides c(G)",
        {{nonabelian, "needs a non-abelian group"},
         {a.d_center_derived == a.d_center,
          "d(Z cap G') = " + std::to_string(a.d_center_derived) + " differs from d(Z) = " +
              std::to_string(a.d_center)}},
        [&] {
          auto ps = min_nonlinear_degree(t);
          bool ok = !sol.contains_linear_witness && divides(ps * p, c);
          return Out{std::string("linear in witness: ") + (sol.contains_linear_witness ? "yes" : "no") +
                         ", p^(s+1) = " + std::to_string(ps * p) + ", c = " + std::to_string(c),
                     ok};
        });
  gated("digit-range", "b <= r, and r <= b+e when d(Z(G)) < p", {{nonabelian, "needs a non-abelian group"}},
        [&] {
          bool ok = b <= r && (a.d_center >= static_cast<int>(p) || r <= b + e);
          std::ostringstream os;
          os << "b = " << b << ", r = " << r << ", e = " << e << ", d(Z) = " << a.d_center;
          return Out{os.str(), ok};
        });
  gated("exp-p-cd-1p", "c(G) <= d(Z)p^2, with equality for p >= 3 and no abelian direct factor",
        {{nonabelian, "needs a non-abelian group"}, {exp_p, "needs exponent p"}, {cd_is({1, p}), "needs cd = {1, p}"}},
        [&] {
          auto bound = static_cast<std::uint64_t>(a.d_center) * p * p;
          bool eq_applies = p >= 3 && split_flag;
          bool ok = c <= bound && (!eq_applies || c == bound);
          return Out{std::to_string(c) + " vs d(Z)p^2 = " + std::to_string(bound) +
                         (eq_applies ? " (equality expected)" : ""),
                     ok};
        });
  gated("cyclic-center-range", "c(G) = mu(G) in {p^2, ..., p^(n-1)}",
        {{nonabelian, "needs a non-abelian group"}, {p >= 3, "needs p >= 3"}, {cyclic_center, "needs a cyclic center"},
         {mu_done, mu_why}},
        [&] {
          bool in = false;
          for (int i = 2; i <= n - 1; ++i) in = in || c == ipow(p, i);
          return Out{"c = " + std::to_string(c) + ", mu = " + std::to_string(a.mu->mu_value) + ", n = " +
                         std::to_string(n),
                     in && c == a.mu->mu_value};
        });
  gated("cyclic-center-divisibility", "p^alpha |Z(G)| divides c(G), and c(G) divides p^e exp(G)",
        {{nonabelian, "needs a non-abelian group"}, {cyclic_center, "needs a cyclic center"}}, [&] {
          auto pa = min_faithful_degree(t);
          auto lo = pa * zc;
          auto hi = maxcd * g.exponent();
          bool ok = divides(lo, c) && divides(c, hi);
          std::string extra;
          if (e > 1 && exp_p && cd_is({1, p, maxcd})) {
            ok = ok && c == ipow(p, e + 1);
            extra = ", c = p^(e+1) expected";
          }
          return Out{std::to_string(lo) + " | " + std::to_string(c) + " | " + std::to_string(hi) + extra, ok};
        });
  gated("faithful-degree-top", "cd = {1, p, p^a} with a > 1 forces faithful degrees p^a",
        {{nonabelian, "needs a non-abelian group"},
         {a.cd.size() == 3 && a.cd[1] == p && e > 1, "needs cd = {1, p, p^a}, a > 1"}},
        [&] {
          std::size_t faithful = 0;
          bool ok = true;
          for (auto const& ch : t.chars) {
            if (!ch.is_faithful()) continue;
            ++faithful;
            ok = ok && ch.degree == maxcd;
          }
          return Out{std::to_string(faithful) + " faithful, all of degree " + std::to_string(maxcd) + ": " +
                         (ok ? "yes" : "no"),
                     ok};
        });
  gated("normally-monomial-divisibility", "max cd |Z(G)| divides c(G), which divides max cd exp(A)",
        {{nonabelian, "needs a non-abelian group"}, {a.metabelian, "needs G' abelian"},
         {cyclic_center, "needs a cyclic center"}, {an_done, an_why}},
        [&] {
          auto lo = maxcd * zc;
          bool ok = divides(lo, c);
          std::vector<std::uint64_t> exps;
          for (auto const& h : a.abelian_normal->maximum_order) {
            auto ex = subgroup_exponent(g, h);
            exps.push_back(ex);
            ok = ok && divides(c, maxcd * ex);
          }
          std::sort(exps.begin(), exps.end());
          exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
          return Out{std::to_string(lo) + " | " + std::to_string(c) + ", exp(A) over " +
                         std::to_string(a.abelian_normal->maximum_order.size()) + " choices: " + show(exps),
                     ok};
        });
  gated("normally-monomial-exp-p", "c(G) = p^(a+1) where max cd = p^a",
        {{nonabelian, "needs a non-abelian group"}, {a.metabelian, "needs G' abelian"},
         {cyclic_center, "needs a cyclic center"}, {exp_p, "needs exponent p"}},
        [&] { return Out{std::to_string(c) + " vs " + std::to_string(ipow(p, e + 1)), c == ipow(p, e + 1)}; });
  {
    bool has = false;
    if (an_done) {
      for (auto const& h : a.abelian_normal->maximum_order) has = has || subgroup_exponent(g, h) == zc;
    }
    gated("normally-monomial-exp-a", "c(G) = max cd |Z(G)| when some maximum A has exp(A) = |Z(G)|",
          {{nonabelian, "needs a non-abelian group"}, {a.metabelian, "needs G' abelian"},
           {cyclic_center, "needs a cyclic center"}, {an_done, an_why},
           {has, "no abelian normal subgroup of maximum order has exponent |Z(G)|"}},
          [&] { return Out{std::to_string(c) + " vs " + std::to_string(maxcd * zc), c == maxcd * zc}; });
  }
  gated("exp-p-cd-1ps", "c(G) = d(Z(G)) p^(s+1)",
        {{nonabelian, "needs a non-abelian group"}, {exp_p, "needs exponent p"},
         {a.cd.size() == 2 && e > 1, "needs cd = {1, p^s}, s > 1"},
         {a.d_center_derived == a.d_center, "needs d(Z cap G') = d(Z)"}},
        [&] {
          auto want = static_cast<std::uint64_t>(a.d_center) * ipow(p, e + 1);
          return Out{std::to_string(c) + " vs " + std::to_string(want), c == want};
        });
  gated("elementary-index-p", "c(G) = d(Z(G)) p^2",
        {{nonabelian, "needs a non-abelian group"},
         {a.elementary_abelian_maximal, "no elementary abelian subgroup of index p"},
         {!sol.contains_linear_witness, "witness contains a linear character"}},
        [&] {
          auto want = static_cast<std::uint64_t>(a.d_center) * p * p;
          return Out{std::to_string(c) + " vs " + std::to_string(want), c == want};
        });
  gated("class2-abelian-exponent", "some abelian normal subgroup of maximum order has exponent |Z(G)|",
        {{p >= 3, "needs p >= 3"}, {a.class_two, "needs nilpotency class 2"},
         {cyclic_center, "needs a cyclic center"}, {an_done, an_why}},
        [&] {
          std::vector<std::uint64_t> exps;
          for (auto const& h : a.abelian_normal->maximum_order) exps.push_back(subgroup_exponent(g, h));
          bool ok = std::find(exps.begin(), exps.end(), zc) != exps.end();
          std::sort(exps.begin(), exps.end());
          exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
          return Out{"exponents " + show(exps) + ", |Z| = " + std::to_string(zc), ok};
        });
  {
    bool derived_max = an_done && a.metabelian &&
                       a.abelian_normal->maximum_order.front().order() == a.derived.order();
    gated("derived-max-abelian", "G' is the unique maximum abelian normal subgroup; max cd |Z| | c | max cd exp(G')",
          {{nonabelian, "needs a non-abelian group"}, {a.metabelian, "needs G' abelian"},
           {cyclic_center, "needs a cyclic center"}, {an_done, an_why},
           {derived_max, "G' is not of maximum order among abelian normal subgroups"}},
          [&] {
            auto unique = a.abelian_normal->maximum_order.size() == 1;
            auto ed = subgroup_exponent(g, a.derived);
            bool ok = unique && divides(maxcd * zc, c) && divides(c, maxcd * ed);
            return Out{std::to_string(maxcd * zc) + " | " + std::to_string(c) + " | " + std::to_string(maxcd * ed) +
                           ", maximum abelian normal subgroups: " +
                           std::to_string(a.abelian_normal->maximum_order.size()),
                       ok};
          });
  }
  gated("mu-p2-divisible", "p^2 divides mu(G)",
        {{p >= 3, "needs p >= 3"}, {nonabelian, "needs a non-abelian group"},
         {split_flag, "group may have an abelian direct factor"}, {mu_done, mu_why}},
        [&] { return Out{"mu = " + std::to_string(a.mu->mu_value), divides(p * p, a.mu->mu_value)}; });

  auto digit_form = [&]() {
    auto const& d = sol.base_p_digits;
    bool ok = d.size() >= 2 && d.size() <= 3 && d[0] == 0;
    int ab = 0;
    for (std::size_t i = 1; i < d.size(); ++i) ab += d[i];
    ok = ok && ab == a.d_center;
    return Out{"c = " + show_digits(d) + ", d(Z) = " + std::to_string(a.d_center), ok};
  };
  auto exp_le_p2 = g.exponent() == p || g.exponent() == p * p;
  gated("cd-1p-digit-form", "c(G) = a p^2 + b p^3 with a + b = d(Z(G))",
        {{p >= 3, "needs p >= 3"}, {nonabelian, "needs a non-abelian group"}, {cd_is({1, p}), "needs cd = {1, p}"},
         {exp_le_p2, "needs exp(G) in {p, p^2}"}, {a.d_center < static_cast<int>(p), "needs d(Z) < p"},
         {split_flag, "group may have an abelian direct factor"}},
        digit_form);
  {
    bool elem_p2 = false;
    if (an_done) {
      for (auto const& h : a.abelian_normal->maximum_order) {
        elem_p2 = elem_p2 || (h.order() * p * p == order && subgroup_exponent(g, h) == p);
      }
    }
    gated("cd-1pp2-digit-form", "c(G) = a p^2 + b p^3 with a + b = d(Z(G))",
          {{p >= 3, "needs p >= 3"}, {nonabelian, "needs a non-abelian group"},
           {exp_le_p2, "needs exp(G) in {p, p^2}"}, {cd_is({1, p, p * p}), "needs cd = {1, p, p^2}"},
           {a.d_center >= 2, "needs d(Z) >= 2"}, {split_flag, "group may have an abelian direct factor"},
           {an_done, an_why}, {elem_p2, "no elementary abelian normal subgroup of index p^2"}},
          digit_form);
  }
  return out;
}

std::vector<CheckResult> check_group(CorpusEntry const& entry, VerifyOptions const& opts) {
  auto t0 = Clock::now();
  std::vector<CheckResult> out;
  auto label = entry.label();
  try {
    auto spec = expand_catalog(entry.family, entry.p, entry.params);
    auto ao = verify_analysis_options(opts);
    ao.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(opts.timeout_seconds));
    auto a = analyze(spec, ao);
    out = value_checks(entry, a);
    auto props = property_checks(label, a);
    out.insert(out.end(), props.begin(), props.end());
  } catch (std::exception const& e) {
    CheckResult r;
    r.check_id = "pipeline";
    r.group = label;
    r.claimed = "analysis completes";
    r.computed = e.what();
    r.status = Status::Fail;
    out.push_back(std::move(r));
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  for (auto& r : out) r.seconds = secs;
  return out;
}

std::vector<CheckResult> run_corpus(Suite suite, VerifyOptions const& opts) {
  auto entries = corpus(suite);
  std::vector<std::vector<CheckResult>> per(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < entries.size(); i = next++) per[i] = check_group(entries[i], opts);
  };
  auto n = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<CheckResult> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool any_failed(std::vector<CheckResult> const& results) {
  return std::any_of(results.begin(), results.end(),
                     [](CheckResult const& r) { return r.status == Status::Fail; });
}

std::string format_text(std::vector<CheckResult> const& results) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skip = 0;
  std::string group;
  for (auto const& r : results) {
    if (r.group != group) {
      group = r.group;
      os << group << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    }
    os << "  " << status_name(r.status) << "  " << std::left << std::setw(32) << r.check_id;
    if (r.status == Status::Skipped) {
      os << r.reason;
    } else {
      os << r.computed;
      if (r.check_id.rfind("value:", 0) == 0) os << "  (claimed " << r.claimed << ")";
    }
    os << "\n";
    if (r.status == Status::Fail && !r.quote.empty()) os << "        quote: \"" << r.quote << "\"\n";
    pass += r.status == Status::Pass;
    fail += r.status == Status::Fail;
    skip += r.status == Status::Skipped;
  }
  os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return os.str();
}

}  // namespace mfd
