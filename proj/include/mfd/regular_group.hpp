#ifndef MFD_REGULAR_GROUP_HPP_
#define MFD_REGULAR_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfd/presentation.hpp"

namespace mfd {

using Element = std::uint32_t;

// The right-regular action of a finite group obtained by enumerating the
// cosets of the trivial subgroup. Element ids are breadth-first definition
// order over the generator columns; the identity is id 0.
struct RegularGroup {
  std::size_t order = 0;
  std::vector<std::string> generator_names;
  // gen_perms[l][x] = x * letter l, for every letter (generators and inverses).
  std::vector<std::vector<Element>> letter_perms;
  // def_words[x] reaches x from the identity.
  std::vector<Word> def_words;

  std::size_t num_generators() const { return generator_names.size(); }
  Element identity() const { return 0; }
  std::vector<Element> const& gen_perm(std::size_t g) const {
    return letter_perms[gen_letter(g)];
  }
  Element apply(Element x, Word const& w) const {
    for (Letter l : w) x = letter_perms[l][x];
    return x;
  }
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationStats {
  std::size_t max_live = 0;
  std::size_t total_defined = 0;
  std::size_t coincidences = 0;
};

// Felsch-style Todd-Coxeter over the trivial subgroup. Throws BudgetExceeded
// when more than `limit` live cosets would be needed.
RegularGroup enumerate_regular(GroupSpec const& spec, std::size_t limit = 200000,
                               EnumerationStats* stats = nullptr);

}  // namespace mfd

#endif  // MFD_REGULAR_GROUP_HPP_
