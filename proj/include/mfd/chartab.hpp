#ifndef MFD_CHARTAB_HPP_
#define MFD_CHARTAB_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mfd/cyclotomic.hpp"
#include "mfd/group.hpp"
#include "mfd/presentation.hpp"

namespace mfd {

struct Character {
  std::vector<CycInt> values;  // indexed by class id
  std::uint64_t degree = 0;
  std::vector<std::uint32_t> kernel_classes;  // sorted; always contains class 0

  bool is_linear() const { return degree == 1; }
  bool is_faithful() const { return kernel_classes.size() == 1; }
};

struct CharTable {
  Classes classes;
  std::vector<Character> chars;
  std::uint64_t exponent = 1;
  std::uint64_t prime_modulus = 0;
  std::uint64_t group_order = 0;
  unsigned attempts = 0;

  std::size_t size() const { return chars.size(); }
};

struct ChartabOptions {
  std::size_t max_order = 20000;
  unsigned threads = 1;
  unsigned max_attempts = 8;
  bool check = true;  // run check_orthogonality before returning
};

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rows are sorted by degree, then by value vectors in decreasing
// lexicographic order (so the trivial character is row 0).
CharTable character_table(Group const& g, ChartabOptions const& opts = {});
CharTable character_table(Group const& g, Classes classes, ChartabOptions const& opts);

Subgroup kernel(Group const& g, CharTable const& t, std::size_t chi);
std::vector<std::uint64_t> degree_set(CharTable const& t);
// Throws std::domain_error when no faithful irreducible exists.
std::uint64_t min_faithful_degree(CharTable const& t);
// Throws std::domain_error for abelian groups.
std::uint64_t min_nonlinear_degree(CharTable const& t);

// Both orthogonality relations, exactly. See chartab.cpp for the argument.
bool check_orthogonality(CharTable const& t, unsigned threads = 1);

// One line per class (id, size, order, representative word) followed by one
// line per character.
std::string dump_table(Group const& g, GroupSpec const& spec, CharTable const& t);

}  // namespace mfd

#endif  // MFD_CHARTAB_HPP_
