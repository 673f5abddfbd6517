#ifndef MFD_VERIFY_HPP_
#define MFD_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfd/analysis.hpp"
#include "mfd/catalog.hpp"

namespace mfd {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

struct CheckResult {
  std::string check_id;
  std::string group;
  std::string claimed;
  std::string quote;
  std::string computed;
  Status status = Status::Skipped;
  std::string reason;  // failed hypothesis or budget note for skips
  double seconds = 0;
};

struct CorpusEntry {
  std::string family;
  int p = 0;
  Params params;

  std::string label() const;
};

enum class Suite { Smoke, PaperP5, Stretch };

Suite parse_suite(std::string const& name);  // throws std::invalid_argument
std::string suite_name(Suite s);
std::vector<CorpusEntry> corpus(Suite s);

struct VerifyOptions {
  unsigned threads = 1;
  double timeout_seconds = 1800;  // per group
  std::size_t enumeration_limit = 200'000;
  std::size_t mu_node_budget = 1'000'000;
  std::size_t exhaustive_check_order = 3125;
};

AnalysisOptions verify_analysis_options(VerifyOptions const& opts);

// Catalog expectations compared against computed values.
std::vector<CheckResult> value_checks(CorpusEntry const& entry, Analysis const& a);
// Properties evaluated from computed quantities only; hypotheses gate each.
std::vector<CheckResult> property_checks(std::string const& label, Analysis const& a);

std::vector<CheckResult> check_group(CorpusEntry const& entry, VerifyOptions const& opts);
// Groups run as parallel jobs; results come back in corpus order.
std::vector<CheckResult> run_corpus(Suite suite, VerifyOptions const& opts);

bool any_failed(std::vector<CheckResult> const& results);
std::string format_text(std::vector<CheckResult> const& results);

}  // namespace mfd

#endif  // MFD_VERIFY_HPP_
