#ifndef MFD_PRESENTATION_HPP_
#define MFD_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mfd {

// A letter encodes generator g as 2g and its inverse as 2g+1, so the inverse
// of a letter is `l ^ 1` and letters double as coset-table column indices.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

constexpr Letter gen_letter(std::size_t g) { return static_cast<Letter>(2 * g); }
constexpr Letter inv_letter(Letter l) { return l ^ 1U; }
constexpr std::size_t letter_gen(Letter l) { return l >> 1; }
constexpr bool letter_is_inverse(Letter l) { return (l & 1U) != 0; }

Word invert(Word const& w);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word power(Word const& w, long exponent);
// Left-normed commutator [x,y] = x^-1 y^-1 x y.
Word commutator(Word const& x, Word const& y);

// Catalog metadata carried alongside a presentation. The flags record what the
// source statements assert about the group; they are never computed.
struct GroupMeta {
  std::string family;
  int p = 0;
  std::map<std::string, long> params;
  bool cyclic_center_expected = false;
  bool not_nontrivial_split = false;
  bool metabelian_expected = false;
};

struct GroupSpec {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  GroupMeta meta;

  std::string format_word(Word const& w) const;
  // Renders the spec back into the text format accepted by parse_presentation.
  std::string to_text() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Parses `gens a,b,...; rels w1, w2, ...;`. Words accept juxtaposition or `*`,
// integer exponents (`a^3`, `a^-1`, `a^(-2)`), left-normed commutators
// `[x,y,z]`, parentheses, the identity `1`, and relations `u = v` (stored as
// u v^-1). `#` starts a comment running to end of line.
GroupSpec parse_presentation(std::string_view text);

}  // namespace mfd

#endif  // MFD_PRESENTATION_HPP_
