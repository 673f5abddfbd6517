// Acceptance run: one PASS/FAIL line per criterion.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "mfd/verify.hpp"
#include "support.hpp"

using namespace mfd;

namespace {

struct Job {
  CorpusEntry entry;
  Analysis analysis;
  double seconds = 0;
  std::string error;
};

struct Line {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

int failures = 0;

void report(int id, std::string const& title, Line const& l) {
  std::printf("%s %2d %s:%s\n", l.ok ? "PASS" : "FAIL", id, title.c_str(), l.detail.str().c_str());
  failures += !l.ok;
}

std::string key(std::string const& family, Params const& params = {}) {
  std::string k = family;
  for (auto const& [n, v] : params) k += "," + n + "=" + std::to_string(v);
  return k;
}

int exponent_of(std::uint64_t n, std::uint64_t p) { return log_p(n, p); }

}  // namespace

int main() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  VerifyOptions vo;
  auto entries = corpus(Suite::Stretch);
  std::vector<Job> jobs(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < jobs.size(); i = next++) {
      jobs[i].entry = entries[i];
      auto t0 = Clock::now();
      try {
        auto ao = verify_analysis_options(vo);
        ao.deadline = t0 + std::chrono::seconds(static_cast<long>(vo.timeout_seconds));
        jobs[i].analysis = analyze(expand_catalog(entries[i].family, entries[i].p, entries[i].params), ao);
      } catch (std::exception const& e) {
        jobs[i].error = e.what();
      }
      jobs[i].seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, Job const*> by;
  for (auto const& j : jobs) by[key(j.entry.family, j.entry.params) + "@" + std::to_string(j.entry.p)] = &j;
  auto get = [&](std::string const& family, int p, Params params = {}) -> Job const& {
    return *by.at(key(family, params) + "@" + std::to_string(p));
  };
  auto c_of = [](Job const& j) -> long { return j.analysis.c ? static_cast<long>(j.analysis.c->c_value) : -1; };
  auto mu_of = [](Job const& j) -> long {
    auto const& a = j.analysis;
    return a.mu && a.mu->complete && a.action && a.action->degree == a.mu->mu_value ? static_cast<long>(a.mu->mu_value)
                                                                                   : -1;
  };
  auto timed = [](Line& l, Job const& j, double limit) {
    l.detail << " " << j.entry.label() << " " << std::fixed;
    l.detail.precision(2);
    l.detail << j.seconds << "s";
    l.require(j.error.empty(), "error: " + j.error);
    l.require(j.analysis.budget_note.empty(), j.analysis.budget_note);
    l.require(j.seconds <= limit, "over " + std::to_string(static_cast<int>(limit)) + "s");
  };

  {
    Line l;
    for (auto [p, want] : {std::pair(3, 9L), std::pair(5, 25L)}) {
      auto const& j = get("xsp_p3_expP", p);
      timed(l, j, 5);
      l.detail << " c=" << c_of(j);
      l.require(c_of(j) == want, "c != " + std::to_string(want));
    }
    report(1, "class-2 formula", l);
  }
  {
    Line l;
    auto const& j = get("abelian", 3, {{"r1", 1}, {"r2", 2}, {"r3", 0}});
    timed(l, j, 1);
    l.detail << " c=" << c_of(j) << " mu=" << mu_of(j);
    l.require(c_of(j) == 12 && mu_of(j) == 12, "c = mu = 12");
    report(2, "abelian formula", l);
  }
  {
    Line l;
    auto const& a = get("xsp_expP_x_cp", 3);
    auto const& b = get("xsp_expP2_x_cp2", 3);
    timed(l, a, 10);
    timed(l, b, 10);
    l.detail << " c(HxC3)=" << c_of(a) << " mu(HxC9)=" << mu_of(b);
    l.require(c_of(a) == 12, "c(HxC3) = 12");
    l.require(mu_of(b) == 18, "mu(HxC9) = 18");
    report(3, "direct products", l);
  }
  {
    Line l;
    std::vector<std::pair<std::string, long>> want = {{"phi4_221b", 150}, {"phi4_221f0", 250}, {"phi4_2111a", 50}};
    for (auto const& [id, c] : want) {
      auto const& j = get(id, 5);
      timed(l, j, 120);
      l.detail << " c=" << c_of(j);
      l.require(c_of(j) == c, id + " c = " + std::to_string(c));
    }
    report(4, "Phi4 triple at p=5", l);
  }
  {
    Line l;
    struct W {
      std::string id;
      long c;
      char shape;  // '=' r = b+e, '<' b < r < b+e, 'b' b = r
    };
    for (auto const& w : {W{"phi10_g1", 625, '='}, W{"phi10_g2", 150, '<'}, W{"phi12_g3", 50, 'b'}}) {
      auto const& j = get(w.id, 5);
      timed(l, j, 1800);
      if (!j.analysis.c) {
        l.require(false, w.id + " no c");
        continue;
      }
      auto const& a = j.analysis;
      int b = exponent_of(a.group->exponent(), 5);
      int e = exponent_of(a.cd.back(), 5);
      int r = static_cast<int>(a.c->base_p_digits.size());
      l.detail << " c=" << c_of(j) << " b=" << b << " r=" << r << " e=" << e;
      l.require(c_of(j) == w.c, w.id + " c = " + std::to_string(w.c));
      bool shape = w.shape == '=' ? r == b + e : w.shape == '<' ? (b < r && r < b + e) : b == r;
      l.require(shape, w.id + " digit positions");
    }
    report(5, "digit-range witnesses at p=5", l);
  }
  {
    Line l;
    auto const& j = get("phi9", 5);
    timed(l, j, 1800);
    if (j.analysis.c) {
      auto const& a = j.analysis;
      std::size_t linear = 0;
      for (auto w : a.c->witness) linear += a.sums[w].contains_linear;
      l.detail << " c=" << c_of(j) << " linear sums in witness=" << linear;
      l.require(c_of(j) == 50, "c = 50");
      l.require(linear == 1, "one linear member");
    } else {
      l.require(false, "no c");
    }
    report(6, "Phi9 witness with a linear character", l);
  }
  {
    Line l;
    std::vector<std::pair<std::string, Params>> ids = {
        {"phi42_1", {}}, {"phi42_2", {}}, {"phi42_3k", {{"k", 1}}}, {"phi43_1", {}}, {"phi43_2k", {{"k", 1}}}};
    for (auto const& [id, ps] : ids) {
      auto const& j = get(id, 5, ps);
      timed(l, j, 1800);
      l.detail << " c=" << c_of(j);
      l.require(c_of(j) == 625, id + " c = 625");
    }
    report(7, "Phi42/Phi43 at p=5", l);
  }
  {
    Line l;
    for (long n : {4L, 5L}) {
      for (long i = 2; i < n; ++i) {
        auto const& j = get("tower", 5, {{"i", i}, {"n", n}});
        timed(l, j, 600);
        long want = static_cast<long>(ipow(5, static_cast<int>(i)));
        l.detail << " mu=" << mu_of(j);
        l.require(mu_of(j) == want, j.entry.label() + " mu = " + std::to_string(want));
      }
    }
    report(8, "tower permutation degrees", l);
  }
  {
    Line l;
    std::vector<std::pair<std::string, long>> want = {{"phi12_ex_g1", 150}, {"phi12_ex_g2", 50}, {"phi12_ex_g3", 250}};
    for (auto const& [id, c] : want) {
      auto const& j = get(id, 5);
      timed(l, j, 1800);
      l.detail << " c=" << c_of(j);
      l.require(c_of(j) == c, id + " c = " + std::to_string(c));
    }
    report(9, "Phi12 triple at p=5", l);
  }
  {
    Line l;
    std::size_t pass = 0, fail = 0, skip = 0;
    for (auto const& j : jobs) {
      if (!j.error.empty()) {
        ++fail;
        l.require(false, j.entry.label() + ": " + j.error);
        continue;
      }
      for (auto const& r : property_checks(j.entry.label(), j.analysis)) {
        pass += r.status == Status::Pass;
        skip += r.status == Status::Skipped;
        if (r.status == Status::Fail) {
          ++fail;
          l.require(false, r.group + " " + r.check_id + ": " + r.computed);
        }
        if (r.check_id == "properties") l.require(false, r.group + " unchecked: " + r.reason);
      }
    }
    l.detail << " " << jobs.size() << " groups, " << pass << " passed, " << fail << " failed, " << skip
             << " gated";
    report(10, "property suites", l);
  }
  {
    Line l;
    auto t0 = Clock::now();
    for (auto const& n : test::small_corpus()) {
      auto g = test::build(n);
      auto t = character_table(g);
      auto sums = galois_orbits(t);
      CSearchOptions fast;
      if (g.prime() == 2) fast.size_range = std::pair(1, static_cast<int>(abelian_invariants(g, center(g)).rank()));
      CSearchOptions ex;
      ex.mode = CMode::GeneralExhaustive;
      auto a = solve_c(g, t, sums, fast).c_value;
      auto b = solve_c(g, t, sums, ex).c_value;
      std::vector<std::vector<Element>> subs;
      for (auto const& s : all_subgroups(g)) subs.push_back(s.elements);
      auto mu = solve_mu(g);
      auto oracle = test::bf_mu(g, subs);
      l.require(a == b, n.family + " fast != exhaustive");
      l.require(mu.complete && mu.mu_value == oracle, n.family + " mu != oracle");
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    l.detail << " " << test::small_corpus().size() << " groups " << std::fixed;
    l.detail.precision(2);
    l.detail << secs << "s";
    l.require(secs <= 300, "over 300s");
    report(11, "oracle equivalence", l);
  }
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
