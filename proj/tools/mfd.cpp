#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfd/analysis.hpp"
#include "mfd/catalog.hpp"
#include "mfd/verify.hpp"

using json = nlohmann::ordered_json;
using namespace mfd;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::string group;
  int p = 0;
  std::vector<std::string> params;
  std::string file;
  bool mu = false;
  bool exhaustive_c = false;
  bool dump_table = false;
  std::string suite = "smoke";
  double timeout = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "text";
  std::size_t enum_limit = 200'000;
  std::size_t chartab_limit = 20'000;
  std::size_t c_nodes = 50'000'000;
  std::size_t mu_nodes = 1'000'000;
};

Params parse_params(std::vector<std::string> const& raw) {
  Params out;
  for (auto const& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw CatalogError("--param expects name=value, got '" + kv + "'");
    auto name = kv.substr(0, eq);
    auto val = kv.substr(eq + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(val, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used == 0 || used != val.size()) throw CatalogError("--param " + name + ": '" + val + "' is not an integer");
    out[name] = v;
  }
  return out;
}

template <class T>
std::string join(std::vector<T> const& v, char const* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string invariants_text(std::vector<std::uint64_t> const& f) {
  if (f.empty()) return "trivial";
  std::vector<std::string> parts;
  for (auto x : f) parts.push_back("C" + std::to_string(x));
  return join(parts, " x ");
}

json witness_json(Analysis const& a, CSolution const& s) {
  json arr = json::array();
  for (auto j : s.witness) {
    auto const& sum = a.sums[j];
    arr.push_back({{"sum", j},
                   {"character", sum.representative()},
                   {"character_degree", sum.char_degree},
                   {"orbit_size", sum.orbit.size()},
                   {"psi_degree", sum.psi_degree},
                   {"linear", sum.contains_linear}});
  }
  return arr;
}

json c_json(Analysis const& a, CSolution const& s) {
  json j = {{"value", s.c_value},
            {"xi_degree", s.xi_degree},
            {"m", s.m_value},
            {"mode", mode_name(s.mode)},
            {"witness", witness_json(a, s)},
            {"contains_linear", s.contains_linear_witness},
            {"nodes", s.nodes}};
  if (a.p_group()) j["base_p_digits"] = s.base_p_digits;
  return j;
}

json report_json(Analysis const& a, Config const& cfg) {
  json r;
  if (!cfg.file.empty()) {
    r["source"] = {{"file", cfg.file}};
  } else {
    r["source"] = {{"family", a.spec.meta.family}, {"p", a.spec.meta.p}, {"params", a.spec.meta.params}};
  }
  r["presentation"] = a.spec.to_text();
  if (!a.group) {
    r["budget_exceeded"] = a.budget_note;
    return r;
  }
  auto const& g = *a.group;
  r["order"] = g.order();
  r["prime"] = g.prime();
  r["exponent"] = g.exponent();
  r["center"] = {{"order", a.center.order()},
                 {"invariants", a.center_invariants.factors},
                 {"d", a.d_center}};
  json d = {{"order", a.derived.order()}, {"abelian", a.metabelian}};
  if (a.derived_invariants) d["invariants"] = a.derived_invariants->factors;
  r["derived"] = d;
  if (a.table) {
    r["classes"] = a.table->classes.count();
    r["cd"] = a.cd;
    r["galois_sums"] = a.sums.size();
  }
  if (a.c) r["c"] = c_json(a, *a.c);
  if (a.c_exhaustive) r["c_exhaustive"] = c_json(a, *a.c_exhaustive);
  if (a.mu) {
    json m = {{"value", a.mu->mu_value},
              {"complete", a.mu->complete},
              {"degrees", a.mu->degrees},
              {"nodes", a.mu->nodes}};
    if (a.action) {
      m["orbits"] = a.action->orbit_count;
      json gens = json::object();
      for (std::size_t i = 0; i < a.action->images.size(); ++i) {
        gens[a.spec.generators[i]] = cycle_notation(a.action->images[i]);
      }
      m["generators"] = gens;
      json blocks = json::array();
      for (auto const& h : a.mu->witness) {
        std::vector<std::string> words;
        for (auto x : h.generators) {
          auto const& w = g.regular().def_words[x];
          words.push_back(w.empty() ? "1" : a.spec.format_word(w));
        }
        blocks.push_back({{"index", g.order() / h.order()}, {"subgroup_generators", words}});
      }
      m["witness"] = blocks;
    }
    if (a.c) m["equals_c"] = static_cast<std::int64_t>(a.mu->mu_value) == a.c->c_value;
    r["mu"] = m;
  }
  if (cfg.dump_table && a.table) {
    std::vector<std::string> lines;
    std::istringstream is(dump_table(g, a.spec, *a.table));
    for (std::string line; std::getline(is, line);) lines.push_back(line);
    r["table"] = lines;
  }
  if (!a.budget_note.empty()) r["budget_exceeded"] = a.budget_note;
  return r;
}

void print_c_text(std::ostream& os, char const* label, Analysis const& a, CSolution const& s) {
  os << label << s.c_value << "  (xi(1) = " << s.xi_degree << ", m = " << s.m_value << ", "
     << mode_name(s.mode) << ", " << s.nodes << " nodes)\n";
  for (auto j : s.witness) {
    auto const& sum = a.sums[j];
    os << "  Psi[X" << sum.representative() << "]  chi(1) = " << sum.char_degree << ", orbit "
       << sum.orbit.size() << ", Psi(1) = " << sum.psi_degree << (sum.contains_linear ? ", linear" : "") << "\n";
  }
  if (a.p_group() && !s.base_p_digits.empty()) {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < s.base_p_digits.size(); ++i) {
      if (s.base_p_digits[i]) terms.push_back(std::to_string(s.base_p_digits[i]) + "*p^" + std::to_string(i + 1));
    }
    os << "  base-p digits: " << join(s.base_p_digits) << "  (c = " << join(terms, " + ") << ")\n";
  }
}

void print_report_text(std::ostream& os, Analysis const& a, Config const& cfg) {
  if (!cfg.file.empty()) {
    os << "group " << cfg.file << "\n";
  } else {
    os << "group " << a.spec.meta.family << " p=" << a.spec.meta.p;
    for (auto const& [k, v] : a.spec.meta.params) os << " " << k << "=" << v;
    os << "\n";
  }
  auto pres = a.spec.to_text();
  while (!pres.empty() && pres.back() == '\n') pres.pop_back();
  os << "presentation " << pres << "\n";
  if (a.group) {
    auto const& g = *a.group;
    os << "|G| = " << g.order() << "\n";
    os << "exp(G) = " << g.exponent() << "\n";
    os << "Z(G) = " << invariants_text(a.center_invariants.factors) << ", d(Z(G)) = " << a.d_center << "\n";
    os << "G' order " << a.derived.order();
    if (a.derived_invariants) os << " = " << invariants_text(a.derived_invariants->factors);
    else os << " (non-abelian)";
    os << "\n";
  }
  if (a.table) os << "cd(G) = {" << join(a.cd) << "}, " << a.table->classes.count() << " classes\n";
  if (a.c) print_c_text(os, "c(G) = ", a, *a.c);
  if (a.c_exhaustive) print_c_text(os, "c(G) exhaustive = ", a, *a.c_exhaustive);
  if (a.mu) {
    os << "mu(G) = " << a.mu->mu_value << (a.mu->complete ? "" : "  (incomplete: node budget exhausted)")
       << "  (" << a.mu->nodes << " subgroups expanded)\n";
    if (a.action) {
      os << "  realized on " << a.action->degree << " points, " << a.action->orbit_count << " orbit(s)\n";
      std::istringstream is(export_witness(*a.group, a.spec, *a.mu, *a.action));
      for (std::string line; std::getline(is, line);) os << "  " << line << "\n";
    }
    if (a.c) os << "c(G) " << (static_cast<std::int64_t>(a.mu->mu_value) == a.c->c_value ? "=" : "!=") << " mu(G)\n";
  }
  if (cfg.dump_table && a.table) os << dump_table(*a.group, a.spec, *a.table);
  if (!a.budget_note.empty()) os << "BUDGET EXCEEDED: " << a.budget_note << "\n";
}

std::optional<Clock::time_point> deadline_from(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

int cmd_compute(Config const& cfg) {
  GroupSpec spec;
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) {
      std::cerr << "mfd: cannot read " << cfg.file << "\n";
      return kUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    spec = parse_presentation(buf.str());
  } else {
    auto p = cfg.p ? cfg.p : default_prime(cfg.group);
    spec = expand_catalog(cfg.group, p, parse_params(cfg.params));
  }
  AnalysisOptions ao;
  ao.enumeration_limit = cfg.enum_limit;
  ao.chartab_limit = cfg.chartab_limit;
  ao.c_node_budget = cfg.c_nodes;
  ao.mu_node_budget = cfg.mu_nodes;
  ao.threads = cfg.threads;
  ao.compute_mu = cfg.mu;
  ao.exhaustive_c = cfg.exhaustive_c;
  ao.deadline = deadline_from(cfg.timeout);
  auto a = analyze(spec, ao);
  if (cfg.format == "text") {
    print_report_text(std::cout, a, cfg);
  } else {
    std::cout << report_json(a, cfg).dump(2) << "\n";
  }
  return a.budget_note.empty() ? kOk : kBudget;
}

int cmd_verify(Config const& cfg) {
  VerifyOptions vo;
  vo.threads = cfg.threads;
  if (cfg.timeout > 0) vo.timeout_seconds = cfg.timeout;
  vo.enumeration_limit = cfg.enum_limit;
  vo.mu_node_budget = cfg.mu_nodes;
  auto suite = parse_suite(cfg.suite);
  auto results = run_corpus(suite, vo);
  if (cfg.format == "text") {
    std::cout << format_text(results);
  } else {
    json arr = json::array();
    for (auto const& r : results) {
      json j = {{"check", r.check_id}, {"group", r.group}, {"status", status_name(r.status)},
                {"claimed", r.claimed}, {"computed", r.computed}};
      if (!r.quote.empty()) j["quote"] = r.quote;
      if (!r.reason.empty()) j["reason"] = r.reason;
      arr.push_back(j);
    }
    auto count = [&](Status s) {
      return std::count_if(results.begin(), results.end(), [&](CheckResult const& r) { return r.status == s; });
    };
    json out = {{"suite", suite_name(suite)},
                {"results", arr},
                {"passed", count(Status::Pass)},
                {"failed", count(Status::Fail)},
                {"skipped", count(Status::Skipped)}};
    std::cout << out.dump(2) << "\n";
  }
  return any_failed(results) ? kVerifyFail : kOk;
}

int cmd_catalog(Config const& cfg) {
  if (cfg.format == "text") {
    for (auto const& e : catalog()) {
      std::cout << e.id << "  " << e.description << "\n    p: ";
      if (e.fixed_p) std::cout << "fixed " << *e.fixed_p;
      else std::cout << ">= " << e.min_p << " (default " << e.default_p << ")";
      for (auto const& ps : e.params) {
        std::cout << "; " << ps.name << " = " << ps.default_value << " (" << ps.description << ")";
      }
      if (!e.constraint.empty()) std::cout << "; " << e.constraint;
      std::cout << "\n";
    }
    return kOk;
  }
  json arr = json::array();
  for (auto const& e : catalog()) {
    json ps = json::array();
    for (auto const& p : e.params) ps.push_back({{"name", p.name}, {"default", p.default_value}, {"description", p.description}});
    json j = {{"id", e.id}, {"description", e.description}, {"source", e.source}, {"min_p", e.min_p},
              {"default_p", e.default_p}, {"params", ps}, {"constraint", e.constraint}};
    if (e.fixed_p) j["fixed_p"] = *e.fixed_p;
    arr.push_back(j);
  }
  std::cout << arr.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Minimal faithful quasi-permutation and permutation degrees of finite p-groups"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json-like-structured"}));
  };

  auto* compute = app.add_subcommand("compute", "Compute invariants of one group");
  auto* src = compute->add_option_group("source");
  src->add_option("--group", cfg.group, "Catalog id");
  src->add_option("--file", cfg.file, "Presentation file");
  src->require_option(1);
  compute->add_option("--p", cfg.p, "Prime for a catalog family")->check(CLI::PositiveNumber);
  compute->add_option("--param", cfg.params, "Family parameter name=value")->allow_extra_args(false);
  compute->add_flag("--mu", cfg.mu, "Also compute mu(G) and a realizing action");
  compute->add_flag("--exhaustive-c", cfg.exhaustive_c, "Use the general exhaustive c(G) search");
  compute->add_flag("--dump-table", cfg.dump_table, "Print the character table");
  compute->add_option("--timeout", cfg.timeout, "Wall-clock limit in seconds (0 = none)")->check(CLI::NonNegativeNumber);
  compute->add_option("--enum-limit", cfg.enum_limit, "Coset enumeration limit")->check(CLI::PositiveNumber);
  compute->add_option("--chartab-limit", cfg.chartab_limit, "Largest order for the character table")
      ->check(CLI::PositiveNumber);
  compute->add_option("--c-nodes", cfg.c_nodes, "c(G) search node budget")->check(CLI::PositiveNumber);
  compute->add_option("--mu-nodes", cfg.mu_nodes, "mu(G) search node budget")->check(CLI::PositiveNumber);
  add_common(compute);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite, "smoke, paper-p5 or stretch")
      ->check(CLI::IsMember({"smoke", "paper-p5", "stretch"}));
  verify->add_option("--timeout", cfg.timeout, "Per-group wall-clock limit in seconds")->check(CLI::PositiveNumber);
  verify->add_option("--enum-limit", cfg.enum_limit, "Coset enumeration limit")->check(CLI::PositiveNumber);
  verify->add_option("--mu-nodes", cfg.mu_nodes, "mu(G) search node budget")->check(CLI::PositiveNumber);
  add_common(verify);

  auto* cat = app.add_subcommand("catalog", "List the group catalog");
  cat->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json-like-structured"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_catalog(cfg);
  } catch (CatalogError const& e) {
    std::cerr << "mfd: " << e.what() << "\n";
    return kUsage;
  } catch (ParseError const& e) {
    std::cerr << "mfd: " << cfg.file << ": " << e.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "mfd: " << e.what() << "\n";
    return kUsage;
  } catch (BudgetExceeded const& e) {
    std::cerr << "mfd: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (std::exception const& e) {
    std::cerr << "mfd: " << e.what() << "\n";
    return kVerifyFail;
  }
}
