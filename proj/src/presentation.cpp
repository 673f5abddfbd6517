#include "mfd/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfd {

Word invert(Word const& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inv_letter(l);
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inv_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == inv_letter(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo),
              w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word power(Word const& w, long exponent) {
  Word base = exponent < 0 ? invert(w) : w;
  long n = exponent < 0 ? -exponent : exponent;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(std::move(out));
}

Word commutator(Word const& x, Word const& y) {
  Word out = invert(x);
  auto yi = invert(y);
  out.insert(out.end(), yi.begin(), yi.end());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return free_reduce(std::move(out));
}

std::string GroupSpec::format_word(Word const& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!first) os << '*';
    first = false;
    os << generators[letter_gen(w[i])];
    if (letter_is_inverse(w[i])) {
      os << "^-" << run;
    } else if (run > 1) {
      os << '^' << run;
    }
    i = j;
  }
  return os.str();
}

std::string GroupSpec::to_text() const {
  std::ostringstream os;
  os << "gens ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) os << ',';
    os << generators[i];
  }
  os << ";\nrels ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) os << ",\n     ";
    os << format_word(relators[i]);
  }
  os << ";\n";
  return os.str();
}

namespace {

bool ident_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool ident_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || u >= 0x80;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec run() {
    GroupSpec spec;
    expect_keyword("gens");
    parse_generators(spec);
    skip_ws();
    if (peek() == ';') ++pos_;
    skip_ws();
    if (at_end()) return spec;
    expect_keyword("rels");
    gens_ = &spec.generators;
    skip_ws();
    while (!at_end() && peek() != ';') {
      spec.relators.push_back(parse_relation());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        skip_ws();
        continue;
      }
      break;
    }
    skip_ws();
    if (peek() == ';') ++pos_;
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return spec;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> const* gens_ = nullptr;

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw ||
        (pos_ + kw.size() < text_.size() && ident_char(text_[pos_ + kw.size()]))) {
      throw ParseError("expected '" + std::string(kw) + "'", pos_);
    }
    pos_ += kw.size();
  }

  std::string parse_identifier() {
    skip_ws();
    if (!ident_start(peek())) throw ParseError("expected generator name", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_generators(GroupSpec& spec) {
    skip_ws();
    if (peek() == ';') return;
    while (true) {
      std::size_t at = pos_;
      auto name = parse_identifier();
      if (std::find(spec.generators.begin(), spec.generators.end(), name) !=
          spec.generators.end()) {
        throw ParseError("duplicate generator '" + name + "'", at);
      }
      spec.generators.push_back(std::move(name));
      skip_ws();
      if (peek() != ',') break;
      ++pos_;
    }
  }

  Word parse_relation() {
    Word lhs = parse_word();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Word rhs = invert(parse_word());
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    }
    return free_reduce(std::move(lhs));
  }

  bool word_ends(char c) const {
    return c == '\0' || c == ',' || c == ';' || c == ']' || c == ')' || c == '=';
  }

  Word parse_word() {
    Word out;
    skip_ws();
    std::size_t start = pos_;
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (word_ends(c)) break;
      if (c == '*') {
        if (!any) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        skip_ws();
        if (word_ends(peek())) throw ParseError("dangling '*'", pos_);
        continue;
      }
      auto f = parse_factor();
      out.insert(out.end(), f.begin(), f.end());
      any = true;
    }
    if (!any) throw ParseError("empty word", start);
    return free_reduce(std::move(out));
  }

  Word parse_factor() {
    skip_ws();
    std::size_t start = pos_;
    Word atom = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      long e = 0;
      if (!parse_exponent(e)) throw ParseError("malformed exponent", start);
      atom = power(atom, e);
    }
    return atom;
  }

  bool parse_exponent(long& e) {
    skip_ws();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return false;
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) return false;
      ++pos_;
    }
    if (paren) {
      skip_ws();
      if (peek() != ')') return false;
      ++pos_;
    }
    e = neg ? -v : v;
    return true;
  }

  Word parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return w;
    }
    if (c == '[') {
      std::size_t start = pos_;
      ++pos_;
      Word acc = parse_word();
      int parts = 1;
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        Word next = parse_word();
        acc = commutator(acc, next);
        ++parts;
        skip_ws();
      }
      if (peek() != ']') throw ParseError("expected ']'", pos_);
      if (parts < 2) throw ParseError("commutator needs two entries", start);
      ++pos_;
      return acc;
    }
    if (c == '1' && !(pos_ + 1 < text_.size() &&
                      std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {};
    }
    if (ident_start(c)) return parse_generator_run();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  // Consumes one generator name. Names may be written back to back ("ab"), so
  // the longest declared name that prefixes the input wins.
  Word parse_generator_run() {
    std::size_t start = pos_;
    std::size_t best = 0, best_len = 0;
    for (std::size_t g = 0; g < gens_->size(); ++g) {
      auto const& name = (*gens_)[g];
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = g;
        best_len = name.size();
      }
    }
    if (best_len == 0) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      throw ParseError(
          "unknown generator '" + std::string(text_.substr(pos_, end - pos_)) + "'",
          start);
    }
    pos_ += best_len;
    return {gen_letter(best)};
  }
};

}  // namespace

GroupSpec parse_presentation(std::string_view text) { return Parser(text).run(); }

}  // namespace mfd
