#ifndef MFD_CATALOG_HPP_
#define MFD_CATALOG_HPP_

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfd/presentation.hpp"

namespace mfd {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quantity the literature asserts for a family member, already evaluated at
// the chosen prime. Scalars are stored as one-element vectors; `cd` and the
// invariant lists are sorted ascending.
struct ExpectedValue {
  std::string quantity;
  std::vector<long> value;
  std::string quote;
};

using Params = std::map<std::string, long>;

struct ParamSpec {
  std::string name;
  long default_value;
  std::string description;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string source;
  int min_p = 3;
  int default_p = 3;
  std::optional<int> fixed_p;
  std::vector<ParamSpec> params;
  std::string constraint;
};

std::vector<CatalogEntry> const& catalog();
CatalogEntry const& catalog_entry(std::string const& id);

// Fills defaults for missing parameters and validates the prime and parameter
// ranges. Returns the completed parameter map.
Params resolve_params(CatalogEntry const& entry, int p, Params params);

// Builds the fully expanded presentation (every omitted [x,y] = 1 inserted).
GroupSpec expand_catalog(std::string const& family_id, int p, Params const& params = {});

std::vector<ExpectedValue> expected_values(std::string const& family_id, int p,
                                           Params const& params = {});
ExpectedValue expected_value(std::string const& family_id, int p, Params const& params,
                             std::string const& quantity);

// Smallest positive quadratic non-residue modulo an odd prime p.
long smallest_nonresidue(long p);
// Lexicographically smallest (a, b) with 1 <= a, b <= p and
// a^2 - coeff*b^2 = k (mod p).
std::pair<long, long> solve_norm_form(long p, long coeff, long k);

bool is_prime(long n);
int default_prime(std::string const& family_id);

}  // namespace mfd

#endif  // MFD_CATALOG_HPP_
