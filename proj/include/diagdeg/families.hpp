// Enumeration of the diagram monoid families, projection generation, Green's
// relations via the *-criteria, and the Brauer structural data (kappa, the
// Z-blocks, the stabiliser group, and the T/K/I/J classification).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "diagdeg/diagram.hpp"

namespace diagdeg {

uint64_t default_budget();  // DIAGRAMDEG_BUDGET or 5'000'000 elements

class EnumeratedMonoid {
 public:
  EnumeratedMonoid(Family family, int n, std::vector<Diagram> elements);

  Family family() const {
    return family_;
  }
  int degree() const {
    return n_;
  }
  size_t size() const {
    return elements_.size();
  }
  const std::vector<Diagram>& elements() const {
    return elements_;
  }
  const Diagram& at(size_t i) const {
    return elements_[i];
  }
  size_t index_of(const Diagram& d) const;
  size_t identity_index() const {
    return identity_;
  }
  // Index of elements_[i] * elements_[j]; cached, safe for concurrent use.
  size_t product(size_t i, size_t j) const;

 private:
  Family family_;
  int n_;
  std::vector<Diagram> elements_;
  std::unordered_map<Diagram, uint32_t, DiagramHash> index_;
  size_t identity_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<uint64_t, uint32_t> product_cache_;
};

EnumeratedMonoid enumerate(Family f, int n, uint64_t budget = default_budget());

// Whether the family's cardinality at this degree fits the budget.
bool enumeration_feasible(Family f, int n, uint64_t budget = default_budget());

// All elements of the model of TL_{2m-1} inside PP_m (blocks containing both
// 1 and 1').
std::vector<Diagram> enumerate_tl_model(int m, uint64_t budget = default_budget());

// All rank-r projections of the family, by direct generation.
std::vector<Diagram> projections(Family f, int n, int rank);
std::vector<Diagram> model_projections(int m, int rank);

enum class GreenRel { L, R, H, D };

bool green_related(const Diagram& a, const Diagram& b, GreenRel rel);

// Standard generating sets, used for orbit closures and table exports.
std::vector<Diagram> standard_generators(Family f, int n);
std::vector<Diagram> model_generators(int m);

struct BrauerContext {
  int n = 0;
  int k = 0;                                // floor(n/2)
  Diagram zeta;
  SetPartition kappa;                       // ker(zeta) = coker(zeta)
  std::vector<std::array<int, 2>> z_blocks; // Z_1 < ... < Z_k
  std::vector<Diagram> stabilizer;          // U = Gamma_n, |U| = 2^k k!
  std::vector<Diagram> stabilizer_gens;
};

BrauerContext brauer_context(int n);

struct TKIJ {
  bool in_t;
  bool in_k;
  bool in_i;
  bool in_j;
};

TKIJ classify_tkij(const Diagram& a, const BrauerContext& ctx);

}  // namespace diagdeg
