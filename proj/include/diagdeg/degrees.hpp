// Number sequences and the closed-form degree formulae for the diagram monoid
// families, plus the summary table emitters.
#pragma once

#include <optional>
#include <string>

#include "diagdeg/bigint.hpp"
#include "diagdeg/diagram.hpp"
#include "json.hpp"

namespace diagdeg {

enum class Seq { Bell, Involution, Catalan, Motzkin };

// Memoised, safe for concurrent use.
Nat sequence(Seq kind, int n);

// m!! for odd m >= -1, with (-1)!! = 1.
Nat double_factorial_odd(int m);

Nat binomial(int n, int k);

// |Q|, the projection-set size underlying the degree formula.  Defined for
// P, PB, PP, M and TL (for the Brauer monoid the degree is a linear
// combination of projection counts instead; see deg_prime_report).
Nat q_size(Family f, int n);

// |P_r(B_n)| = binom(n, r) (n-r-1)!!, for r = n (mod 2).
Nat brauer_p(int n, int r);

struct DegreeReport {
  Family family;
  int n;
  bool formula_valid;            // inside the stated validity range
  std::optional<Nat> q;          // non-sink state count of the action
  std::optional<Nat> deg_prime;  // minimum partial transformation degree
  std::optional<Nat> deg;        // deg_prime + 1
  std::optional<Nat> degrc;      // unset for even Brauer
};

// Validity ranges: n >= 2 (P, PB, PP, M), n >= 3 (B, TL).
DegreeReport deg_prime_report(Family f, int n);

std::string table2_csv(int max_n);
nlohmann::json table2_json(int max_n);

}  // namespace diagdeg
