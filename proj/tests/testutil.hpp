// Shared helpers for the test suites: seeded random diagram generators and a
// product-closure helper for generating-set checks.
#pragma once

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "diagdeg/diagram.hpp"

namespace diagdeg::testutil {

// Random set partition of the 2n vertices (Chinese-restaurant style).
inline Diagram random_partition(std::mt19937_64& rng, int n) {
  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < 2 * n; ++p) {
    int v = p < n ? p + 1 : -(p - n + 1);
    std::uniform_int_distribution<size_t> pick(0, blocks.size());
    size_t choice = pick(rng);
    if (choice == blocks.size()) {
      blocks.push_back({v});
    } else {
      blocks[choice].push_back(v);
    }
  }
  return Diagram(n, std::move(blocks));
}

// Random perfect matching of the 2n vertices.
inline Diagram random_matching(std::mt19937_64& rng, int n) {
  std::vector<int> verts;
  for (int v = 1; v <= n; ++v) {
    verts.push_back(v);
    verts.push_back(-v);
  }
  std::shuffle(verts.begin(), verts.end(), rng);
  std::vector<std::vector<int>> blocks;
  for (size_t i = 0; i + 1 < verts.size(); i += 2) {
    blocks.push_back({verts[i], verts[i + 1]});
  }
  return Diagram(n, std::move(blocks));
}

// Random partial matching (blocks of size <= 2).
inline Diagram random_partial_matching(std::mt19937_64& rng, int n) {
  std::vector<int> verts;
  for (int v = 1; v <= n; ++v) {
    verts.push_back(v);
    verts.push_back(-v);
  }
  std::shuffle(verts.begin(), verts.end(), rng);
  std::vector<std::vector<int>> blocks;
  std::bernoulli_distribution singleton(0.4);
  size_t i = 0;
  while (i < verts.size()) {
    if (i + 1 < verts.size() && !singleton(rng)) {
      blocks.push_back({verts[i], verts[i + 1]});
      i += 2;
    } else {
      blocks.push_back({verts[i]});
      i += 1;
    }
  }
  return Diagram(n, std::move(blocks));
}

inline Diagram random_in_family(std::mt19937_64& rng, Family f, int n) {
  for (;;) {
    Diagram d = [&] {
      switch (f) {
        case Family::B:
        case Family::TL: return random_matching(rng, n);
        case Family::PB:
        case Family::M: return random_partial_matching(rng, n);
        default: return random_partition(rng, n);
      }
    }();
    if (d.in(f)) {
      return d;
    }
  }
}

// Product closure of a generating set (Cayley-style breadth-first).
inline std::set<Diagram> closure(const std::vector<Diagram>& gens) {
  std::set<Diagram> elements(gens.begin(), gens.end());
  std::vector<Diagram> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<Diagram> next;
    for (const Diagram& x : frontier) {
      for (const Diagram& g : gens) {
        Diagram y = x * g;
        if (elements.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return elements;
}

}  // namespace diagdeg::testutil
