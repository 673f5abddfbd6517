#ifndef MFD_ANALYSIS_HPP_
#define MFD_ANALYSIS_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfd/chartab.hpp"
#include "mfd/group.hpp"
#include "mfd/permdeg.hpp"
#include "mfd/presentation.hpp"
#include "mfd/quasiperm.hpp"

namespace mfd {

using Clock = std::chrono::steady_clock;

struct AnalysisOptions {
  std::size_t enumeration_limit = 200'000;
  std::size_t chartab_limit = 20'000;
  std::size_t c_node_budget = 50'000'000;
  std::size_t mu_node_budget = 1'000'000;
  std::size_t abelian_node_budget = 200'000;
  unsigned threads = 1;
  bool compute_mu = false;
  bool exhaustive_c = false;  // general-exhaustive as the primary c(G) search
  // Also run general-exhaustive as a cross-check when |G| is at most this.
  std::size_t exhaustive_check_order = 0;
  bool abelian_normal = false;
  std::optional<Clock::time_point> deadline;
};

// Everything the reports and the property checks consume. Later stages are
// empty when an earlier one ran out of budget; `budget_note` says which.
struct Analysis {
  GroupSpec spec;
  std::unique_ptr<Group> group;
  std::size_t enumeration_live = 0;

  // structure
  Subgroup center;
  Subgroup derived;
  AbelianInvariants center_invariants;
  std::optional<AbelianInvariants> derived_invariants;  // when G' is abelian
  int d_center = 0;
  int d_center_derived = 0;  // d(Z(G) cap G')
  bool abelian = false;
  bool class_two = false;  // non-abelian with G' <= Z(G)
  bool metabelian = false;
  bool elementary_abelian_maximal = false;  // some index-p subgroup is elementary abelian

  std::optional<CharTable> table;
  bool orthogonality_ok = false;
  std::vector<GaloisSum> sums;
  std::vector<std::uint64_t> cd;
  std::optional<CSolution> c;
  std::optional<CSolution> c_exhaustive;
  std::optional<MuSolution> mu;
  std::optional<PermAction> action;
  std::optional<AbelianNormalSearch> abelian_normal;

  std::string budget_note;
  std::vector<std::pair<std::string, double>> seconds;  // per stage

  bool p_group() const { return group && group->prime() != 0; }
  int prime() const { return group ? group->prime() : 0; }
};

// Runs the pipeline in order: enumeration, structure, character table,
// Galois sums, c(G), then optional stages. A BudgetExceeded from any stage
// stops the pipeline and is recorded in budget_note; other errors propagate.
Analysis analyze(GroupSpec const& spec, AnalysisOptions const& opts);

std::uint64_t ipow(std::uint64_t base, int e);
// log_p of a power of p; throws std::invalid_argument otherwise.
int log_p(std::uint64_t n, std::uint64_t p);

}  // namespace mfd

#endif  // MFD_ANALYSIS_HPP_
