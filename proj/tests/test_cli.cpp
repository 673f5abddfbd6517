#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(std::string const& args) {
  Run r;
  std::string cmd = std::string(MFD_BIN) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("compute reports c and mu") {
  auto r = run("compute --group xsp_p3_expP --p 3 --mu --format json-like-structured");
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["order"] == 27);
  CHECK(j["c"]["value"] == 9);
  CHECK(j["mu"]["value"] == 9);
  CHECK(j["mu"]["complete"] == true);
  CHECK(j["c"]["base_p_digits"] == json::array({0, 1}));
  CHECK(j["center"]["invariants"] == json::array({3}));
  CHECK(j["cd"] == json::array({1, 3}));
}

TEST_CASE("structured output round-trips and is deterministic") {
  std::string args = "compute --group phi4_2111a --p 5 --mu --dump-table --format json-like-structured";
  auto a = run(args + " --threads 1");
  auto b = run(args + " --threads 4");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(json::parse(j.dump(2)) == j);
  CHECK(j.dump(2) + "\n" == a.out);
  CHECK(j["c"]["value"] == 50);
  CHECK(j["mu"]["value"] == 50);
  CHECK(j["mu"]["orbits"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("compute").status == 2);
  CHECK(run("compute --group no_such").status == 2);
  CHECK(run("compute --group phi43_1 --p 3").status == 2);
  CHECK(run("compute --group xsp_p3_expP --format yaml").status == 2);
  CHECK(run("compute --group tower --p 5 --param n").status == 2);
  CHECK(run("verify --suite nightly").status == 2);

  std::string path = "cli_test_infinite.pres";
  std::ofstream(path) << "gens a,b; rels a^2;\n";
  auto inf = run("compute --file " + path + " --enum-limit 2000");
  CHECK(inf.status == 3);
  CHECK(inf.out.find("BUDGET EXCEEDED") != std::string::npos);

  std::ofstream("cli_test_bad.pres") << "gens a; rels a^(";
  CHECK(run("compute --file cli_test_bad.pres").status == 2);

  std::ofstream("cli_test_c3c3.pres") << "gens a,b; rels [a,b], a^3, b^3;\n";
  auto ok = run("compute --file cli_test_c3c3.pres --mu --format json-like-structured");
  REQUIRE(ok.status == 0);
  CHECK(json::parse(ok.out)["c"]["value"] == 6);
}

TEST_CASE("catalog listing") {
  auto r = run("catalog --format json-like-structured");
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  bool found = false;
  for (auto const& e : j) found = found || e["id"] == "phi12_ex_g3";
  CHECK(found);
}

TEST_CASE("verify smoke exits zero with no failures") {
  auto r = run("verify --suite smoke --format json-like-structured");
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"].get<int>() > 0);
}
