#ifndef MFD_PERMDEG_HPP_
#define MFD_PERMDEG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfd/group.hpp"
#include "mfd/presentation.hpp"

namespace mfd {

struct MuOptions {
  std::size_t node_budget = 1'000'000;  // subgroups expanded
  // Inclusive bounds on the collection size; default 1..d(Z(G)).
  std::optional<std::pair<int, int>> size_range;
  unsigned threads = 1;
};

struct MuSolution {
  std::uint64_t mu_value = 0;
  std::vector<Subgroup> witness;  // sorted by (index, fingerprint)
  std::vector<std::uint64_t> degrees;
  bool complete = true;  // false when the node budget ran out
  std::size_t nodes = 0;
  int levels = 0;
  int socle_rank = 0;  // d(Z(G))
};

// Minimal total index of a family of subgroups whose cores meet trivially.
// Needs a nontrivial p-group.
MuSolution solve_mu(Group const& g, MuOptions const& opts = {});

class NotFaithful : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PermAction {
  std::size_t degree = 0;
  // images[i][pt] for the i-th presentation generator; points are 0-based,
  // block b occupies [offsets[b], offsets[b+1]).
  std::vector<std::vector<std::uint32_t>> images;
  std::vector<std::size_t> offsets;
  std::size_t orbit_count = 0;
};

// Action on the disjoint union of right coset spaces H_i\G. Throws
// NotFaithful when some non-identity element fixes every point, and
// std::logic_error when a relator of `spec` acts nontrivially.
PermAction realize_permutation(Group const& g, std::vector<Subgroup> const& witness,
                               GroupSpec const* spec = nullptr);

// GAP-style cycles on points 1..n, "()" for the identity.
std::string cycle_notation(std::vector<std::uint32_t> const& perm);

// Per block: the subgroup generators as words, then every generator image.
std::string export_witness(Group const& g, GroupSpec const& spec, MuSolution const& mu,
                           PermAction const& action);

struct CMuCheck {
  std::int64_t c = 0;
  std::uint64_t mu = 0;
  bool mu_complete = true;
  bool equal = false;
};

CMuCheck cross_check_c_mu(std::int64_t c, MuSolution const& mu);

}  // namespace mfd

#endif  // MFD_PERMDEG_HPP_
