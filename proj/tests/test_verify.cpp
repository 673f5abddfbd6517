#include <catch2/catch_amalgamated.hpp>

#include "mfd/verify.hpp"

using namespace mfd;

namespace {

Analysis analyse(std::string const& id, int p, Params params = {}) {
  AnalysisOptions o;
  o.compute_mu = true;
  o.abelian_normal = true;
  o.exhaustive_check_order = 3125;
  return analyze(expand_catalog(id, p, params), o);
}

CheckResult const& find(std::vector<CheckResult> const& rs, std::string const& id) {
  for (auto const& r : rs) {
    if (r.check_id == id) return r;
  }
  FAIL("missing check " << id);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_suite("smoke") == Suite::Smoke);
  CHECK(suite_name(parse_suite("paper-p5")) == "paper-p5");
  CHECK_THROWS_AS(parse_suite("full"), std::invalid_argument);
  CHECK(corpus(Suite::Smoke).size() < corpus(Suite::PaperP5).size());
  CHECK(corpus(Suite::PaperP5).size() < corpus(Suite::Stretch).size());
}

TEST_CASE("hypotheses gate the checks and name the reason") {
  auto a = analyse("xsp_expP_x_cp", 3);
  auto rs = property_checks("h", a);
  auto const& lin = find(rs, "linear-exclusion");
  CHECK(lin.status == Status::Skipped);
  CHECK(lin.reason.find("d(Z cap G')") != std::string::npos);
  CHECK(a.c->contains_linear_witness);
  CHECK(find(rs, "class2-formula").reason == "needs a cyclic center");
  CHECK_FALSE(any_failed(rs));
}

TEST_CASE("tower of exponent p meets the normally monomial formula") {
  auto a = analyse("tower", 5, {{"n", 4}, {"i", 2}});
  auto rs = property_checks("t", a);
  CHECK(find(rs, "normally-monomial-exp-p").status == Status::Pass);
  CHECK(find(rs, "cyclic-center-range").status == Status::Pass);
  CHECK(find(rs, "orbit-count").status == Status::Pass);
  CHECK_FALSE(any_failed(rs));
}

TEST_CASE("tampered results fail") {
  auto a = analyse("xsp_p3_expP", 3);
  REQUIRE_FALSE(any_failed(property_checks("x", a)));

  SECTION("c value") {
    a.c->c_value = 10;
    auto rs = property_checks("x", a);
    CHECK(find(rs, "c-witness").status == Status::Fail);
    CHECK(find(rs, "class2-formula").status == Status::Fail);
    CHECK(find(rs, "c-equals-mu").status == Status::Fail);
  }
  SECTION("digits") {
    a.c->base_p_digits = {1, 1};
    CHECK(find(property_checks("x", a), "digit-sum").status == Status::Fail);
  }
  SECTION("witness") {
    a.c->witness.push_back(0);
    CHECK(find(property_checks("x", a), "c-witness").status == Status::Fail);
  }
  SECTION("action") {
    a.action->orbit_count = 2;
    CHECK(find(property_checks("x", a), "orbit-count").status == Status::Fail);
  }
  SECTION("table") {
    a.table->chars[1].degree = 2;
    CHECK(find(property_checks("x", a), "degree-square-sum").status == Status::Fail);
  }
}

TEST_CASE("property verdicts ignore the catalog label") {
  auto a = analyse("xsp_p3_expP2", 3);
  auto before = property_checks("x", a);
  a.spec.meta.family = "something_else";
  a.spec.meta.params = {{"k", 9}};
  auto after = property_checks("x", a);
  REQUIRE(before.size() == after.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(before[i].status == after[i].status);
    CHECK(before[i].computed == after[i].computed);
  }
}

TEST_CASE("value checks compare against the catalog") {
  CorpusEntry e{"xsp_p3_expP", 3, {}};
  auto a = analyse("xsp_p3_expP", 3);
  auto rs = value_checks(e, a);
  CHECK(find(rs, "value:c").status == Status::Pass);
  a.c->c_value = 12;
  auto bad = value_checks(e, a);
  auto const& r = find(bad, "value:c");
  CHECK(r.status == Status::Fail);
  CHECK(r.claimed == "9");
  CHECK(r.computed == "12");
  CHECK_FALSE(r.quote.empty());
}

TEST_CASE("budget exhaustion skips instead of failing") {
  CorpusEntry e{"phi4_221b", 5, {}};
  VerifyOptions o;
  o.enumeration_limit = 100;
  auto rs = check_group(e, o);
  CHECK_FALSE(any_failed(rs));
  for (auto const& r : rs) CHECK(r.status == Status::Skipped);
}

TEST_CASE("smoke suite passes and is independent of thread count") {
  VerifyOptions one;
  VerifyOptions four;
  four.threads = 4;
  auto a = run_corpus(Suite::Smoke, one);
  auto b = run_corpus(Suite::Smoke, four);
  CHECK_FALSE(any_failed(a));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check_id == b[i].check_id);
    CHECK(a[i].group == b[i].group);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].computed == b[i].computed);
  }
}
