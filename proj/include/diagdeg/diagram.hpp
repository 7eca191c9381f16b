// Diagrams: set partitions of {1..n, 1'..n'} with product-graph composition.
// Vertices are encoded as signed integers, positive v for the upper vertex v
// and negative v for the lower vertex |v|'.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diagdeg {

enum class Family { P, PB, B, PP, M, TL, S };

constexpr std::array<Family, 7> all_families
    = {Family::P,  Family::PB, Family::B, Family::PP,
       Family::M,  Family::TL, Family::S};

std::string_view family_code(Family f);
std::optional<Family> family_from_code(std::string_view code);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A set partition of {1..n}, used for kernels and cokernels.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  static SetPartition discrete(int n);

  int size() const {
    return n_;
  }
  const std::vector<std::vector<int>>& blocks() const {
    return blocks_;
  }
  bool same_block(int x, int y) const;
  // True when every block of *this is contained in a block of coarser,
  // i.e. *this <= coarser as relations.
  bool refines(const SetPartition& coarser) const;
  std::string to_string() const;  // (1,4|2,3|5,6)

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;  // sorted blocks, sorted by minimum
  std::vector<int> block_of_;             // index by vertex - 1
};

class Diagram {
 public:
  Diagram() = default;  // the unique element of P_0
  Diagram(int n, std::vector<std::vector<int>> blocks);

  static Diagram identity(int n);
  static Diagram parse(std::string_view text, int n);

  int degree() const {
    return n_;
  }
  const std::vector<std::vector<int>>& blocks() const {
    return blocks_;
  }
  std::string to_string() const;

  Diagram star() const;
  friend Diagram operator*(const Diagram& a, const Diagram& b);

  int rank() const;
  std::vector<int> dom() const;
  std::vector<int> codom() const;
  SetPartition ker() const;
  SetPartition coker() const;
  bool is_planar() const;
  bool in(Family f) const;
  bool is_projection() const;

  size_t hash() const;
  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const Diagram& a, const Diagram& b) {
    return !(a == b);
  }
  // Global ordering: degree, then blocks lexicographically under the vertex
  // order 1 < ... < n < 1' < ... < n'.
  friend bool operator<(const Diagram& a, const Diagram& b);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;

  void canonicalize_and_validate();
};

struct DiagramHash {
  size_t operator()(const Diagram& d) const {
    return d.hash();
  }
};

// Splits every transversal A u B' into an upper block A and a lower block B'.
Diagram hat_flatten(const Diagram& a);

// Brauer diagrams of even rank: replaces the transversals {a_i, b_i'} (with
// a_1 < ... < a_r) by upper blocks {a_1,a_2}, {a_3,a_4}, ... and lower blocks
// {b_1,b_2}, {b_3,b_4}, ...; the result has rank 0.
Diagram hat_pairup(const Diagram& a);

// For f != B: projections only.  Transversal i of the result joins the upper
// singleton {i} to the lower part of transversal i of a; remaining upper
// vertices are singletons (f != B) or consecutively paired (f == B).
Diagram bar(const Diagram& a, Family f);

// Embeds a projection of rank r and degree n as a rank-0 projection of degree
// n + r, attaching n + r - i + 1 to the i-th transversal part.
Diagram plus_embed(const Diagram& e);

// The isomorphism PP_n -> TL_2n: upper vertex i becomes slots 2i-1, 2i and
// lower vertex i' becomes slots (2i)', (2i-1)' along the boundary walk
// 1..n, n'..1'; each block contributes the cycle of edges between the exit
// slot of one member and the entry slot of the next.
Diagram tilde_pp_to_tl(const Diagram& a);
Diagram untilde_tl_to_pp(const Diagram& b);

// TL_n <-> the TL_{n+1} diagrams with {1,1'} as a block (shift by one).
Diagram tl_prepend_strand(const Diagram& a);
Diagram tl_strip_strand(const Diagram& b);

// Membership in the model of TL_{2n-1} inside PP_n: planar with 1 and 1' in
// the same block.
bool in_tl_model(const Diagram& a);

// Named elements: "zeta", "alpha", "beta", "gamma", "delta", "pi" as
// applicable per family (and parity, for the Brauer monoid).
Diagram special(Family f, int n, std::string_view name);
Diagram special_model(int m, std::string_view name);

// Generating pairs of all minimal congruences of the family.
std::vector<std::pair<Diagram, Diagram>> minimal_pairs(Family f, int n);
std::vector<std::pair<Diagram, Diagram>> minimal_pairs_model(int m);

}  // namespace diagdeg
