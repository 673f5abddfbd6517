#ifndef MFD_QUASIPERM_HPP_
#define MFD_QUASIPERM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfd/chartab.hpp"

namespace mfd {

struct GaloisSum {
  std::vector<std::size_t> orbit;  // character indices, sorted
  std::vector<std::int64_t> values;  // by class id
  std::int64_t psi_degree = 0;
  std::uint64_t char_degree = 0;
  std::vector<std::uint32_t> kernel_classes;
  bool contains_linear = false;

  std::size_t representative() const { return orbit.front(); }
};

// Sorted by psi_degree, then by representative index.
std::vector<GaloisSum> galois_orbits(CharTable const& t);

std::int64_t m_of(std::vector<std::int64_t> const& xi);

enum class CMode { PGroupFast, GeneralExhaustive };

struct CSearchOptions {
  CMode mode = CMode::PGroupFast;
  // Inclusive bounds on the number of Galois sums; defaults depend on the mode.
  std::optional<std::pair<int, int>> size_range;
  std::size_t node_budget = 50'000'000;
};

struct CSolution {
  std::int64_t c_value = 0;
  std::int64_t xi_degree = 0;
  std::int64_t m_value = 0;
  std::vector<std::size_t> witness;        // indices into the galois_orbits list
  std::vector<std::size_t> witness_chars;  // one representative character per sum
  std::vector<std::int64_t> psi_degrees;
  std::vector<int> base_p_digits;  // a_1, a_2, ... (empty for non p-groups)
  bool contains_linear_witness = false;
  std::size_t nodes = 0;
  CMode mode = CMode::PGroupFast;
};

CSolution solve_c(Group const& g, CharTable const& t, std::vector<GaloisSum> const& sums,
                  CSearchOptions const& opts = {});

// True iff the sums' kernels intersect in {1} and no proper subfamily does.
bool is_irredundant_faithful(CharTable const& t, std::vector<GaloisSum> const& sums,
                             std::vector<std::size_t> const& chosen);

// Little-endian digits a_1, a_2, ..., a_r with c = sum a_i p^i.
std::vector<int> base_p_digits(std::int64_t c, std::int64_t p);

std::string mode_name(CMode m);

}  // namespace mfd

#endif  // MFD_QUASIPERM_HPP_
