#ifndef MFD_GROUP_HPP_
#define MFD_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mfd/regular_group.hpp"

namespace mfd {

// Frozen group: a RegularGroup plus the tables every algorithm needs
// (inverses, element orders, generator elements). Immutable and safe to share
// between threads.
class Group {
 public:
  explicit Group(RegularGroup regular);

  std::size_t order() const { return regular_.order; }
  RegularGroup const& regular() const { return regular_; }
  // Prime p when |G| = p^n (n >= 1); 0 for the trivial group or mixed orders.
  int prime() const { return prime_; }
  int log_order() const { return log_order_; }

  Element identity() const { return 0; }
  Element mul(Element x, Element y) const { return regular_.apply(x, regular_.def_words[y]); }
  Element inv(Element x) const { return inverse_[x]; }
  Element pow(Element x, long k) const;
  std::uint32_t element_order(Element x) const { return orders_[x]; }
  // g^-1 x g
  Element conj(Element x, Element g) const { return mul(mul(inverse_[g], x), g); }
  // x^-1 y^-1 x y
  Element comm(Element x, Element y) const { return mul(inverse_[x], conj(x, y)); }
  bool commute(Element x, Element y) const { return mul(x, y) == mul(y, x); }

  // Elements represented by the presentation generators.
  std::vector<Element> const& generators() const { return generators_; }
  std::uint64_t exponent() const { return exponent_; }

 private:
  RegularGroup regular_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> generators_;
  std::uint64_t exponent_ = 1;
  int prime_ = 0;
  int log_order_ = 0;
};

struct Subgroup {
  std::vector<Element> elements;  // sorted ascending
  std::vector<Element> generators;
  std::uint64_t fingerprint = 0;

  std::size_t order() const { return elements.size(); }
  bool contains(Element x) const;
  bool is_trivial() const { return elements.size() == 1; }
  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.fingerprint == b.fingerprint && a.elements == b.elements;
  }
};

std::uint64_t fingerprint_of(std::vector<Element> const& sorted_elements);

struct Classes {
  std::vector<std::uint32_t> class_of;
  std::vector<Element> reps;
  std::vector<std::size_t> sizes;
  std::uint64_t exponent = 1;
  // power_map_table[c * exponent + k] = class of rep(c)^k for 0 <= k < exponent.
  std::vector<std::uint32_t> power_map_table;

  std::size_t count() const { return reps.size(); }
  std::uint32_t power_map(std::uint32_t c, std::int64_t k) const;
  std::uint32_t inverse_class(std::uint32_t c) const { return power_map(c, -1); }
};

// Primary decomposition {p^r1, ..., p^rk}, sorted ascending.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;
  std::size_t rank() const { return factors.size(); }
  std::uint64_t order() const;
  std::uint64_t exponent() const { return factors.empty() ? 1 : factors.back(); }
};

class NotAbelian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Classes conjugacy_classes(Group const& g);

Subgroup trivial_subgroup(Group const& g);
Subgroup whole_group(Group const& g);
Subgroup subgroup_closure(Group const& g, std::vector<Element> const& gens);
// Normal closure in `within` (defaults to G) of the subgroup generated by gens.
Subgroup normal_closure(Group const& g, std::vector<Element> const& gens,
                        Subgroup const* within = nullptr);
Subgroup centralizer(Group const& g, std::vector<Element> const& s);
Subgroup center(Group const& g);
Subgroup derived_subgroup(Group const& g);
Subgroup core(Group const& g, Subgroup const& h);
Subgroup intersection(Group const& g, Subgroup const& a, Subgroup const& b);
Subgroup join(Group const& g, Subgroup const& a, Subgroup const& b);
bool is_normal(Group const& g, Subgroup const& h);
bool is_abelian(Group const& g, Subgroup const& h);
std::uint64_t subgroup_exponent(Group const& g, Subgroup const& h);

// Frattini subgroup H^p H' of a p-subgroup and the rank d(H) = log_p |H/Phi(H)|.
Subgroup frattini(Group const& g, Subgroup const& h);
int frattini_quotient_rank(Group const& g, Subgroup const& h);

// All index-p subgroups of the p-subgroup H, as preimages of the hyperplanes of
// H/Phi(H), in a fixed order.
std::vector<Subgroup> maximal_subgroups(Group const& g, Subgroup const& h);

AbelianInvariants abelian_invariants(Group const& g, Subgroup const& a);

// Omega_1 of an abelian subgroup: elements of order dividing p.
Subgroup omega1(Group const& g, Subgroup const& a);

struct AbelianNormalSearch {
  std::vector<Subgroup> maximum_order;  // every abelian normal subgroup of maximum order
  std::size_t nodes = 0;
  bool complete = true;
};

// Enumerates abelian normal subgroups upward from Z(G). When `collect_all` is
// false only one witness of maximum order is kept (largest exponent first).
AbelianNormalSearch abelian_normal_search(Group const& g, bool collect_all,
                                          std::size_t node_budget = 200000);
Subgroup max_abelian_normal(Group const& g, std::size_t node_budget = 200000);

// Brute force over all pairs; used as a test oracle on small groups.
std::vector<Subgroup> all_subgroups(Group const& g);

}  // namespace mfd

#endif  // MFD_GROUP_HPP_
