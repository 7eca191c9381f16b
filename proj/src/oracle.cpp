#include "diagdeg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace diagdeg {

TableMonoid TableMonoid::from_elements(const std::vector<Diagram>& elements) {
  std::unordered_map<Diagram, uint32_t, DiagramHash> index;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<uint32_t>(i)).second) {
      throw std::invalid_argument("TableMonoid: duplicate element");
    }
  }
  TableMonoid t;
  t.size = static_cast<uint32_t>(elements.size());
  t.table.resize(static_cast<size_t>(t.size) * t.size);
  for (uint32_t i = 0; i < t.size; ++i) {
    for (uint32_t j = 0; j < t.size; ++j) {
      auto it = index.find(elements[i] * elements[j]);
      if (it == index.end()) {
        throw std::invalid_argument("TableMonoid: set not closed under product");
      }
      t.table[static_cast<size_t>(i) * t.size + j] = it->second;
    }
  }
  bool found_identity = false;
  for (uint32_t e = 0; e < t.size; ++e) {
    bool ok = true;
    for (uint32_t x = 0; x < t.size && ok; ++x) {
      ok = t.mul(e, x) == x && t.mul(x, e) == x;
    }
    if (ok) {
      t.identity     = e;
      found_identity = true;
      break;
    }
  }
  if (!found_identity) {
    throw std::invalid_argument("TableMonoid: no identity element");
  }
  t.validate();
  return t;
}

TableMonoid TableMonoid::from_monoid(const EnumeratedMonoid& m) {
  return from_elements(m.elements());
}

void TableMonoid::validate() const {
  if (table.size() != static_cast<size_t>(size) * size) {
    throw std::invalid_argument("TableMonoid: bad table size");
  }
  for (uint32_t v : table) {
    if (v >= size) {
      throw std::invalid_argument("TableMonoid: entry out of range");
    }
  }
  for (uint32_t x = 0; x < size; ++x) {
    if (mul(identity, x) != x || mul(x, identity) != x) {
      throw std::invalid_argument("TableMonoid: identity laws fail");
    }
  }
  for (uint32_t i = 0; i < size; ++i) {
    for (uint32_t j = 0; j < size; ++j) {
      uint32_t ij = mul(i, j);
      for (uint32_t k = 0; k < size; ++k) {
        if (mul(ij, k) != mul(i, mul(j, k))) {
          throw std::invalid_argument("TableMonoid: not associative");
        }
      }
    }
  }
}

nlohmann::json TableMonoid::to_json() const {
  nlohmann::json j;
  j["size"]     = size;
  j["identity"] = identity;
  nlohmann::json rows = nlohmann::json::array();
  for (uint32_t i = 0; i < size; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (uint32_t k = 0; k < size; ++k) {
      row.push_back(mul(i, k));
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

TableMonoid TableMonoid::from_json(const nlohmann::json& j) {
  TableMonoid t;
  t.size     = j.at("size").get<uint32_t>();
  t.identity = j.at("identity").get<uint32_t>();
  t.table.reserve(static_cast<size_t>(t.size) * t.size);
  for (const auto& row : j.at("table")) {
    for (const auto& v : row) {
      t.table.push_back(v.get<uint32_t>());
    }
  }
  t.validate();
  return t;
}

namespace {

// Pair-propagation closure.  When both_sides is set, left translates are
// propagated as well, giving the two-sided principal congruence.
EquivRelation pair_closure(const TableMonoid& t, uint32_t a, uint32_t b,
                           bool both_sides) {
  EquivRelation rel(t.size);
  std::deque<std::pair<uint32_t, uint32_t>> work;
  if (rel.merge(a, b)) {
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (uint32_t s = 0; s < t.size; ++s) {
      uint32_t xs = t.mul(x, s);
      uint32_t ys = t.mul(y, s);
      if (rel.merge(xs, ys)) {
        work.emplace_back(xs, ys);
      }
      if (both_sides) {
        uint32_t sx = t.mul(s, x);
        uint32_t sy = t.mul(s, y);
        if (rel.merge(sx, sy)) {
          work.emplace_back(sx, sy);
        }
      }
    }
  }
  return rel;
}

struct ClassVectorHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

EquivRelation principal_right_congruence(const TableMonoid& t, uint32_t a,
                                         uint32_t b) {
  if (a >= t.size || b >= t.size) {
    throw std::invalid_argument("principal_right_congruence: index out of range");
  }
  return pair_closure(t, a, b, false);
}

EquivRelation principal_congruence(const TableMonoid& t, uint32_t a, uint32_t b) {
  if (a >= t.size || b >= t.size) {
    throw std::invalid_argument("principal_congruence: index out of range");
  }
  return pair_closure(t, a, b, true);
}

std::vector<EquivRelation> all_right_congruences(const TableMonoid& t,
                                                 uint32_t cap) {
  if (t.size > cap) {
    throw BudgetExceeded("all_right_congruences: monoid size "
                         + std::to_string(t.size) + " exceeds cap "
                         + std::to_string(cap));
  }
  // Every right congruence is a join of principal ones, so the join-closure
  // of the principal right congruences (plus the diagonal) is the lattice.
  std::vector<std::vector<uint32_t>> principals;
  {
    std::unordered_set<std::vector<uint32_t>, ClassVectorHash> seen;
    for (uint32_t a = 0; a < t.size; ++a) {
      for (uint32_t b = a + 1; b < t.size; ++b) {
        auto classes = principal_right_congruence(t, a, b).canonical_classes();
        if (seen.insert(classes).second) {
          principals.push_back(std::move(classes));
        }
      }
    }
  }
  std::unordered_set<std::vector<uint32_t>, ClassVectorHash> lattice;
  std::deque<std::vector<uint32_t>> work;
  auto add = [&](std::vector<uint32_t> classes) {
    if (lattice.insert(classes).second) {
      work.push_back(std::move(classes));
    }
  };
  add(EquivRelation(t.size).canonical_classes());
  for (const auto& p : principals) {
    add(p);
  }
  while (!work.empty()) {
    std::vector<uint32_t> current = std::move(work.front());
    work.pop_front();
    EquivRelation base = EquivRelation::from_classes(current);
    for (const auto& p : principals) {
      EquivRelation joined = EquivRelation::join(
          base, EquivRelation::from_classes(p));
      add(joined.canonical_classes());
    }
  }
  std::vector<std::vector<uint32_t>> sorted(lattice.begin(), lattice.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<EquivRelation> out;
  out.reserve(sorted.size());
  for (const auto& classes : sorted) {
    out.push_back(EquivRelation::from_classes(classes));
  }
  return out;
}

EquivRelation largest_congruence_within(const TableMonoid& t,
                                        const EquivRelation& sigma) {
  if (sigma.size() != t.size) {
    throw std::invalid_argument("largest_congruence_within: size mismatch");
  }
  EquivRelation result(t.size);
  for (uint32_t a = 0; a < t.size; ++a) {
    for (uint32_t b = a + 1; b < t.size; ++b) {
      if (!sigma.same(a, b)) {
        continue;
      }
      bool ok = true;
      for (uint32_t x = 0; x < t.size && ok; ++x) {
        ok = sigma.same(t.mul(x, a), t.mul(x, b));
      }
      if (ok) {
        result.merge(a, b);
      }
    }
  }
  return result;
}

std::vector<EquivRelation> minimal_congruences(const TableMonoid& t) {
  std::vector<std::vector<uint32_t>> principals;
  {
    std::unordered_set<std::vector<uint32_t>, ClassVectorHash> seen;
    for (uint32_t a = 0; a < t.size; ++a) {
      for (uint32_t b = a + 1; b < t.size; ++b) {
        auto classes = principal_congruence(t, a, b).canonical_classes();
        if (seen.insert(classes).second) {
          principals.push_back(std::move(classes));
        }
      }
    }
  }
  std::vector<EquivRelation> relations;
  relations.reserve(principals.size());
  for (const auto& classes : principals) {
    relations.push_back(EquivRelation::from_classes(classes));
  }
  std::vector<EquivRelation> minimal;
  for (size_t i = 0; i < relations.size(); ++i) {
    bool is_minimal = true;
    for (size_t j = 0; j < relations.size() && is_minimal; ++j) {
      if (i != j && relations[j].refines(relations[i])
          && !(relations[j] == relations[i])) {
        is_minimal = false;
      }
    }
    if (is_minimal) {
      minimal.push_back(relations[i]);
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const EquivRelation& a, const EquivRelation& b) {
              return a.canonical_classes() < b.canonical_classes();
            });
  return minimal;
}

uint64_t degrc_bruteforce(const TableMonoid& t, uint32_t cap) {
  uint64_t best = UINT64_MAX;
  for (const EquivRelation& sigma : all_right_congruences(t, cap)) {
    if (largest_congruence_within(t, sigma).is_trivial()) {
      best = std::min<uint64_t>(best, sigma.num_classes());
    }
  }
  return best;
}

}  // namespace diagdeg
