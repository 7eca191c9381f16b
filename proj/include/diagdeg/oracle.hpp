// Independent brute-force ground truth on tiny instances: principal and full
// right-congruence lattices, largest contained two-sided congruences, minimal
// congruences, and the minimum right-congruence degree search.
#pragma once

#include <cstdint>
#include <vector>

#include "diagdeg/diagram.hpp"
#include "diagdeg/equiv.hpp"
#include "diagdeg/families.hpp"
#include "json.hpp"

namespace diagdeg {

struct TableMonoid {
  uint32_t size = 0;
  uint32_t identity = 0;
  std::vector<uint32_t> table;  // row-major: table[i * size + j] = i * j

  uint32_t mul(uint32_t i, uint32_t j) const {
    return table[static_cast<size_t>(i) * size + j];
  }

  // Builds the table from a closed set of diagrams; throws when the set is
  // not closed or has no identity.  Associativity is verified.
  static TableMonoid from_elements(const std::vector<Diagram>& elements);
  static TableMonoid from_monoid(const EnumeratedMonoid& m);

  void validate() const;

  nlohmann::json to_json() const;
  static TableMonoid from_json(const nlohmann::json& j);
};

// Smallest right congruence containing (a, b): closure under right
// translation.
EquivRelation principal_right_congruence(const TableMonoid& t, uint32_t a,
                                         uint32_t b);

// Smallest two-sided congruence containing (a, b).
EquivRelation principal_congruence(const TableMonoid& t, uint32_t a, uint32_t b);

// The full lattice of right congruences, via join-closure over the principal
// ones.  Guarded by a cap on the monoid size.
std::vector<EquivRelation> all_right_congruences(const TableMonoid& t,
                                                 uint32_t cap = 20);

// {(a, b) : (xa, xb) in sigma for all x}, the kernel of the quotient action.
EquivRelation largest_congruence_within(const TableMonoid& t,
                                        const EquivRelation& sigma);

// All minimal non-trivial two-sided congruences.
std::vector<EquivRelation> minimal_congruences(const TableMonoid& t);

// Minimum class count over right congruences whose largest contained
// two-sided congruence is trivial.
uint64_t degrc_bruteforce(const TableMonoid& t, uint32_t cap = 20);

}  // namespace diagdeg
