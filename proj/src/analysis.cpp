#include "mfd/analysis.hpp"

namespace mfd {

namespace {

class Stopwatch {
 public:
  Stopwatch(Analysis& a, AnalysisOptions const& opts) : a_(a), opts_(opts) {}

  template <class F>
  void stage(std::string const& name, F&& f) {
    if (opts_.deadline && Clock::now() > *opts_.deadline) {
      throw BudgetExceeded("time budget exhausted before " + name);
    }
    auto t0 = Clock::now();
    f();
    a_.seconds.emplace_back(name, std::chrono::duration<double>(Clock::now() - t0).count());
  }

 private:
  Analysis& a_;
  AnalysisOptions const& opts_;
};

}  // namespace

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int log_p(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) throw std::invalid_argument("not a power of " + std::to_string(p));
  return k;
}

Analysis analyze(GroupSpec const& spec, AnalysisOptions const& opts) {
  Analysis a;
  a.spec = spec;
  Stopwatch sw(a, opts);
  try {
    sw.stage("enumerate", [&] {
      EnumerationStats stats;
      a.group = std::make_unique<Group>(enumerate_regular(spec, opts.enumeration_limit, &stats));
      a.enumeration_live = stats.max_live;
    });
    auto const& g = *a.group;

    sw.stage("structure", [&] {
      a.center = center(g);
      a.derived = derived_subgroup(g);
      a.abelian = a.center.order() == g.order();
      a.center_invariants = abelian_invariants(g, a.center);
      a.d_center = static_cast<int>(a.center_invariants.rank());
      a.metabelian = is_abelian(g, a.derived);
      if (a.metabelian) a.derived_invariants = abelian_invariants(g, a.derived);
      a.class_two = !a.abelian && a.derived.order() == intersection(g, a.derived, a.center).order();
      if (g.prime() != 0) {
        auto zg = intersection(g, a.center, a.derived);
        a.d_center_derived = static_cast<int>(abelian_invariants(g, zg).rank());
        for (auto const& m : maximal_subgroups(g, whole_group(g))) {
          if (is_abelian(g, m) && subgroup_exponent(g, m) == static_cast<std::uint64_t>(g.prime())) {
            a.elementary_abelian_maximal = true;
            break;
          }
        }
      }
    });

    sw.stage("chartab", [&] {
      ChartabOptions co;
      co.max_order = opts.chartab_limit;
      co.threads = opts.threads;
      co.check = false;
      a.table = character_table(g, co);
      a.cd = degree_set(*a.table);
    });

    sw.stage("orthogonality", [&] { a.orthogonality_ok = check_orthogonality(*a.table, opts.threads); });
    if (!a.orthogonality_ok) throw TableError("character table failed the orthogonality check");

    sw.stage("galois", [&] { a.sums = galois_orbits(*a.table); });

    bool fast_ok = g.prime() != 0;
    sw.stage("c", [&] {
      CSearchOptions co;
      co.mode = opts.exhaustive_c || !fast_ok ? CMode::GeneralExhaustive : CMode::PGroupFast;
      co.node_budget = opts.c_node_budget;
      a.c = solve_c(g, *a.table, a.sums, co);
    });

    if (opts.exhaustive_check_order >= g.order() && a.c->mode != CMode::GeneralExhaustive) {
      sw.stage("c-exhaustive", [&] {
        CSearchOptions co;
        co.mode = CMode::GeneralExhaustive;
        co.node_budget = opts.c_node_budget;
        a.c_exhaustive = solve_c(g, *a.table, a.sums, co);
      });
    }

    if (opts.abelian_normal && fast_ok) {
      sw.stage("abelian-normal", [&] {
        a.abelian_normal = abelian_normal_search(g, true, opts.abelian_node_budget);
      });
    }

    if (opts.compute_mu && fast_ok) {
      sw.stage("mu", [&] {
        MuOptions mo;
        mo.node_budget = opts.mu_node_budget;
        mo.threads = opts.threads;
        a.mu = solve_mu(g, mo);
      });
      sw.stage("realize", [&] { a.action = realize_permutation(g, a.mu->witness, &a.spec); });
    }
  } catch (BudgetExceeded const& e) {
    a.budget_note = e.what();
  }
  return a;
}

}  // namespace mfd
