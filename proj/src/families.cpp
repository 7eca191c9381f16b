#include "diagdeg/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "diagdeg/degrees.hpp"

namespace diagdeg {

uint64_t default_budget() {
  if (const char* env = std::getenv("DIAGRAMDEG_BUDGET")) {
    char* end      = nullptr;
    uint64_t value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return value;
    }
  }
  return 5'000'000;
}

EnumeratedMonoid::EnumeratedMonoid(Family family, int n,
                                   std::vector<Diagram> elements)
    : family_(family), n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], static_cast<uint32_t>(i)).second) {
      throw std::invalid_argument("EnumeratedMonoid: duplicate element");
    }
  }
  auto it = index_.find(Diagram::identity(n));
  if (it == index_.end()) {
    throw std::invalid_argument("EnumeratedMonoid: identity missing");
  }
  identity_ = it->second;
}

size_t EnumeratedMonoid::index_of(const Diagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) {
    throw std::invalid_argument("EnumeratedMonoid: element not in monoid: "
                                + d.to_string());
  }
  return it->second;
}

size_t EnumeratedMonoid::product(size_t i, size_t j) const {
  uint64_t key = (static_cast<uint64_t>(i) << 32) | j;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = product_cache_.find(key);
    if (it != product_cache_.end()) {
      return it->second;
    }
  }
  size_t result = index_of(elements_[i] * elements_[j]);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    product_cache_.emplace(key, static_cast<uint32_t>(result));
  }
  return result;
}

namespace {

// Vertex at position p of the canonical order 1..n, 1'..n'.
int vertex_at(int p, int n) {
  return p < n ? p + 1 : -(p - n + 1);
}

// Vertex at position p of the boundary walk 1..n, n'..1' (planar order).
int planar_vertex_at(int p, int n) {
  return p < n ? p + 1 : -(2 * n - p);
}

using BlockList = std::vector<std::vector<int>>;

// All set partitions of the 2n vertices: each vertex joins an existing block
// or opens a new one.
void gen_set_partitions(int n, const std::function<void(BlockList&)>& emit) {
  const int total = 2 * n;
  BlockList blocks;
  std::function<void(int)> rec = [&](int p) {
    if (p == total) {
      emit(blocks);
      return;
    }
    int v = vertex_at(p, n);
    // Index-based: recursion may reallocate the block vector.
    for (size_t i = 0, count = blocks.size(); i < count; ++i) {
      blocks[i].push_back(v);
      rec(p + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({v});
    rec(p + 1);
    blocks.pop_back();
  };
  rec(0);
}

// All partitions of the 2n vertices into blocks of size <= 2, or perfect
// matchings when singletons are disallowed.
void gen_partial_matchings(int n, bool perfect,
                           const std::function<void(BlockList&)>& emit) {
  const int total = 2 * n;
  std::vector<bool> used(total, false);
  BlockList blocks;
  std::function<void(int)> rec = [&](int p) {
    while (p < total && used[p]) {
      ++p;
    }
    if (p == total) {
      emit(blocks);
      return;
    }
    used[p] = true;
    int v   = vertex_at(p, n);
    if (!perfect) {
      blocks.push_back({v});
      rec(p + 1);
      blocks.pop_back();
    }
    for (int q = p + 1; q < total; ++q) {
      if (used[q]) {
        continue;
      }
      used[q] = true;
      blocks.push_back({v, vertex_at(q, n)});
      rec(p + 1);
      blocks.pop_back();
      used[q] = false;
    }
    used[p] = false;
  };
  rec(0);
}

// Non-crossing partitions of the boundary walk, with a block-size cap
// (0 = no cap) or blocks of size exactly 2 when perfect is set.  The first
// point of a segment starts a block; its chosen co-members split the
// remainder into independent segments.
void gen_noncrossing(int n, int max_block, bool perfect,
                     const std::function<void(BlockList&)>& emit) {
  const int total = 2 * n;
  BlockList blocks;
  using Segments = std::vector<std::pair<int, int>>;
  std::function<void(Segments)> rec = [&](Segments segs) {
    while (!segs.empty() && segs.back().first >= segs.back().second) {
      segs.pop_back();
    }
    if (segs.empty()) {
      emit(blocks);
      return;
    }
    auto [lo, hi] = segs.back();
    segs.pop_back();
    // Members of the block of point lo: lo = b_0 < b_1 < ... < b_k < hi.
    std::vector<int> members = {lo};
    std::function<void(int)> extend = [&](int from) {
      bool may_close = perfect ? members.size() == 2
                               : (max_block == 0
                                  || members.size() <= static_cast<size_t>(max_block));
      if (may_close) {
        std::vector<int> block;
        block.reserve(members.size());
        for (int p : members) {
          block.push_back(planar_vertex_at(p, n));
        }
        blocks.push_back(std::move(block));
        Segments next = segs;
        for (size_t i = 0; i + 1 < members.size(); ++i) {
          next.emplace_back(members[i] + 1, members[i + 1]);
        }
        next.emplace_back(members.back() + 1, hi);
        rec(std::move(next));
        blocks.pop_back();
      }
      bool may_grow = perfect ? members.size() < 2
                              : (max_block == 0
                                 || members.size() < static_cast<size_t>(max_block));
      if (!may_grow) {
        return;
      }
      for (int next_pt = from; next_pt < hi; ++next_pt) {
        members.push_back(next_pt);
        extend(next_pt + 1);
        members.pop_back();
      }
    };
    extend(lo + 1);
  };
  rec({{0, total}});
}

void gen_permutations(int n, const std::function<void(BlockList&)>& emit) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  do {
    BlockList blocks;
    blocks.reserve(n);
    for (int i = 0; i < n; ++i) {
      blocks.push_back({i + 1, -image[i]});
    }
    emit(blocks);
  } while (std::next_permutation(image.begin(), image.end()));
}

Nat enumeration_bound(Family f, int n) {
  switch (f) {
    case Family::P: return sequence(Seq::Bell, 2 * n);
    case Family::PB: return sequence(Seq::Involution, 2 * n);
    case Family::M: return sequence(Seq::Motzkin, 2 * n);
    case Family::B: return double_factorial_odd(2 * n - 1);
    case Family::PP: return sequence(Seq::Catalan, 2 * n);
    case Family::TL: return sequence(Seq::Catalan, n);
    case Family::S: {
      Nat r = 1;
      for (int i = 2; i <= n; ++i) {
        r *= Nat(static_cast<uint64_t>(i));
      }
      return r;
    }
  }
  return Nat(0);
}

void check_budget(const Nat& bound, uint64_t budget) {
  if (Nat(budget) < bound) {
    throw BudgetExceeded("enumeration budget exceeded: bound "
                         + bound.to_string() + " > budget "
                         + std::to_string(budget));
  }
}

}  // namespace

bool enumeration_feasible(Family f, int n, uint64_t budget) {
  if (n < 0) {
    return false;
  }
  return enumeration_bound(f, n) <= Nat(budget);
}

EnumeratedMonoid enumerate(Family f, int n, uint64_t budget) {
  if (n < 0) {
    throw std::invalid_argument("enumerate: negative degree");
  }
  check_budget(enumeration_bound(f, n), budget);
  std::vector<Diagram> elements;
  auto emit = [&](BlockList& blocks) {
    elements.emplace_back(n, blocks);
  };
  switch (f) {
    case Family::P:
      gen_set_partitions(n, emit);
      break;
    case Family::PB:
      gen_partial_matchings(n, false, emit);
      break;
    case Family::B:
      gen_partial_matchings(n, true, emit);
      break;
    case Family::PP:
      gen_noncrossing(n, 0, false, emit);
      break;
    case Family::M:
      gen_noncrossing(n, 2, false, emit);
      break;
    case Family::TL:
      gen_noncrossing(n, 2, true, emit);
      break;
    case Family::S:
      gen_permutations(n, emit);
      break;
  }
  return EnumeratedMonoid(f, n, std::move(elements));
}

std::vector<Diagram> enumerate_tl_model(int m, uint64_t budget) {
  check_budget(sequence(Seq::Catalan, 2 * m), budget);
  std::vector<Diagram> elements;
  gen_noncrossing(m, 0, false, [&](BlockList& blocks) {
    Diagram d(m, blocks);
    if (in_tl_model(d)) {
      elements.push_back(std::move(d));
    }
  });
  std::sort(elements.begin(), elements.end());
  return elements;
}

namespace {

// Projections are determined by a partition of {1..n} together with a set of
// blocks marked as transversal parts.
Diagram projection_from(int n, const BlockList& parts,
                        const std::vector<int>& marked) {
  BlockList blocks;
  std::vector<bool> is_marked(parts.size(), false);
  for (int i : marked) {
    is_marked[i] = true;
  }
  for (size_t b = 0; b < parts.size(); ++b) {
    if (is_marked[b]) {
      std::vector<int> block = parts[b];
      for (int v : parts[b]) {
        block.push_back(-v);
      }
      blocks.push_back(std::move(block));
    } else {
      blocks.push_back(parts[b]);
      std::vector<int> mirror;
      for (int v : parts[b]) {
        mirror.push_back(-v);
      }
      blocks.push_back(std::move(mirror));
    }
  }
  return Diagram(n, std::move(blocks));
}

void gen_upper_partitions(int n, int max_block,
                          const std::function<void(BlockList&)>& emit) {
  BlockList parts;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      emit(parts);
      return;
    }
    for (size_t i = 0, count = parts.size(); i < count; ++i) {
      if (max_block == 0 || parts[i].size() < static_cast<size_t>(max_block)) {
        parts[i].push_back(v);
        rec(v + 1);
        parts[i].pop_back();
      }
    }
    parts.push_back({v});
    rec(v + 1);
    parts.pop_back();
  };
  rec(1);
}

void for_each_mark_choice(size_t nparts, int rank,
                          const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> marked;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(marked.size()) == rank) {
      emit(marked);
      return;
    }
    for (size_t i = from; i < nparts; ++i) {
      marked.push_back(static_cast<int>(i));
      rec(i + 1);
      marked.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Diagram> projections(Family f, int n, int rank) {
  if (rank < 0 || rank > n) {
    throw std::invalid_argument("projections: rank out of range");
  }
  std::vector<Diagram> out;
  switch (f) {
    case Family::P:
    case Family::PP: {
      gen_upper_partitions(n, 0, [&](BlockList& parts) {
        for_each_mark_choice(parts.size(), rank, [&](const std::vector<int>& marked) {
          Diagram d = projection_from(n, parts, marked);
          if (f == Family::P || d.is_planar()) {
            out.push_back(std::move(d));
          }
        });
      });
      break;
    }
    case Family::PB:
    case Family::M: {
      // Transversal parts must be singletons; other parts have size <= 2.
      gen_upper_partitions(n, 2, [&](BlockList& parts) {
        std::vector<size_t> singletons;
        for (size_t i = 0; i < parts.size(); ++i) {
          if (parts[i].size() == 1) {
            singletons.push_back(i);
          }
        }
        for_each_mark_choice(singletons.size(), rank,
                             [&](const std::vector<int>& chosen) {
          std::vector<int> marked;
          for (int c : chosen) {
            marked.push_back(static_cast<int>(singletons[c]));
          }
          Diagram d = projection_from(n, parts, marked);
          if (f == Family::PB || d.is_planar()) {
            out.push_back(std::move(d));
          }
        });
      });
      break;
    }
    case Family::B:
    case Family::TL: {
      if ((n - rank) % 2 != 0) {
        break;  // empty by parity
      }
      gen_upper_partitions(n, 2, [&](BlockList& parts) {
        std::vector<int> marked;
        for (size_t i = 0; i < parts.size(); ++i) {
          if (parts[i].size() == 1) {
            marked.push_back(static_cast<int>(i));
          }
        }
        if (static_cast<int>(marked.size()) != rank) {
          return;
        }
        Diagram d = projection_from(n, parts, marked);
        if (f == Family::B || d.is_planar()) {
          out.push_back(std::move(d));
        }
      });
      break;
    }
    case Family::S: {
      if (rank == n) {
        out.push_back(Diagram::identity(n));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> model_projections(int m, int rank) {
  std::vector<Diagram> out;
  for (Diagram& d : projections(Family::PP, m, rank)) {
    if (in_tl_model(d)) {
      out.push_back(std::move(d));
    }
  }
  return out;
}

bool green_related(const Diagram& a, const Diagram& b, GreenRel rel) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("green_related: degree mismatch");
  }
  switch (rel) {
    case GreenRel::L:
      return a.star() * a == b.star() * b;
    case GreenRel::R:
      return a * a.star() == b * b.star();
    case GreenRel::H:
      return green_related(a, b, GreenRel::L) && green_related(a, b, GreenRel::R);
    case GreenRel::D:
      return a.rank() == b.rank();
  }
  return false;
}

namespace {

Diagram transposition(int n, int i) {
  std::vector<std::vector<int>> blocks = {{i, -(i + 1)}, {i + 1, -i}};
  for (int v = 1; v <= n; ++v) {
    if (v != i && v != i + 1) {
      blocks.push_back({v, -v});
    }
  }
  return Diagram(n, std::move(blocks));
}

Diagram tl_hook(int n, int i) {
  std::vector<std::vector<int>> blocks = {{i, i + 1}, {-i, -(i + 1)}};
  for (int v = 1; v <= n; ++v) {
    if (v != i && v != i + 1) {
      blocks.push_back({v, -v});
    }
  }
  return Diagram(n, std::move(blocks));
}

// Identity with vertex i split into two singletons.
Diagram split_vertex(int n, int i) {
  std::vector<std::vector<int>> blocks = {{i}, {-i}};
  for (int v = 1; v <= n; ++v) {
    if (v != i) {
      blocks.push_back({v, -v});
    }
  }
  return Diagram(n, std::move(blocks));
}

// Identity with vertices i, i+1 joined into one block top and bottom.
Diagram join_vertices(int n, int i) {
  std::vector<std::vector<int>> blocks = {{i, i + 1, -i, -(i + 1)}};
  for (int v = 1; v <= n; ++v) {
    if (v != i && v != i + 1) {
      blocks.push_back({v, -v});
    }
  }
  return Diagram(n, std::move(blocks));
}

// The Motzkin shift: i maps to (i+1)', with i+1 and i' unmatched.
Diagram motzkin_right(int n, int i) {
  std::vector<std::vector<int>> blocks = {{i, -(i + 1)}, {i + 1}, {-i}};
  for (int v = 1; v <= n; ++v) {
    if (v != i && v != i + 1) {
      blocks.push_back({v, -v});
    }
  }
  return Diagram(n, std::move(blocks));
}

}  // namespace

std::vector<Diagram> standard_generators(Family f, int n) {
  std::vector<Diagram> gens;
  switch (f) {
    case Family::S:
      for (int i = 1; i < n; ++i) {
        gens.push_back(transposition(n, i));
      }
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) {
        gens.push_back(transposition(n, i));
      }
      if (n >= 2) {
        gens.push_back(tl_hook(n, 1));
      }
      break;
    case Family::PB:
      for (int i = 1; i < n; ++i) {
        gens.push_back(transposition(n, i));
      }
      if (n >= 2) {
        gens.push_back(tl_hook(n, 1));
      }
      if (n >= 1) {
        gens.push_back(split_vertex(n, 1));
      }
      break;
    case Family::P:
      for (int i = 1; i < n; ++i) {
        gens.push_back(transposition(n, i));
      }
      if (n >= 1) {
        gens.push_back(split_vertex(n, 1));
      }
      if (n >= 2) {
        gens.push_back(join_vertices(n, 1));
      }
      break;
    case Family::PP:
      for (int i = 1; i <= n; ++i) {
        gens.push_back(split_vertex(n, i));
      }
      for (int i = 1; i < n; ++i) {
        gens.push_back(join_vertices(n, i));
      }
      break;
    case Family::M:
      for (int i = 1; i < n; ++i) {
        gens.push_back(tl_hook(n, i));
        gens.push_back(motzkin_right(n, i));
        gens.push_back(motzkin_right(n, i).star());
      }
      if (n == 1) {
        gens.push_back(split_vertex(n, 1));
      }
      break;
    case Family::TL:
      for (int i = 1; i < n; ++i) {
        gens.push_back(tl_hook(n, i));
      }
      break;
  }
  gens.push_back(Diagram::identity(n));
  return gens;
}

std::vector<Diagram> model_generators(int m) {
  std::vector<Diagram> gens;
  for (int i = 1; i < m; ++i) {
    gens.push_back(join_vertices(m, i));
  }
  for (int i = 2; i <= m; ++i) {
    gens.push_back(split_vertex(m, i));
  }
  gens.push_back(Diagram::identity(m));
  return gens;
}

BrauerContext brauer_context(int n) {
  if (n < 3) {
    throw std::invalid_argument("brauer_context: need n >= 3");
  }
  BrauerContext ctx;
  ctx.n    = n;
  ctx.k    = n / 2;
  ctx.zeta = special(Family::B, n, "zeta");
  ctx.kappa = ctx.zeta.ker();
  for (int i = 1; i <= ctx.k; ++i) {
    if (n % 2 != 0) {
      ctx.z_blocks.push_back({2 * i, 2 * i + 1});
    } else {
      ctx.z_blocks.push_back({2 * i - 1, 2 * i});
    }
  }
  // Generators of the stabiliser: swaps inside each Z_i, and swaps of
  // adjacent Z-blocks.
  for (const auto& z : ctx.z_blocks) {
    ctx.stabilizer_gens.push_back(transposition(n, z[0]));
  }
  for (int i = 0; i + 1 < ctx.k; ++i) {
    const auto& z1 = ctx.z_blocks[i];
    const auto& z2 = ctx.z_blocks[i + 1];
    std::vector<std::vector<int>> blocks = {{z1[0], -z2[0]},
                                            {z1[1], -z2[1]},
                                            {z2[0], -z1[0]},
                                            {z2[1], -z1[1]}};
    for (int v = 1; v <= n; ++v) {
      if (v != z1[0] && v != z1[1] && v != z2[0] && v != z2[1]) {
        blocks.push_back({v, -v});
      }
    }
    ctx.stabilizer_gens.emplace_back(n, std::move(blocks));
  }
  // Close into the full group.
  std::set<Diagram> closed(ctx.stabilizer_gens.begin(), ctx.stabilizer_gens.end());
  closed.insert(Diagram::identity(n));
  std::vector<Diagram> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Diagram> next;
    for (const Diagram& u : frontier) {
      for (const Diagram& g : ctx.stabilizer_gens) {
        Diagram prod = g * u;
        if (closed.insert(prod).second) {
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  ctx.stabilizer.assign(closed.begin(), closed.end());
  uint64_t expected = 1;
  for (int i = 1; i <= ctx.k; ++i) {
    expected *= 2 * static_cast<uint64_t>(i);
  }
  if (ctx.stabilizer.size() != expected) {
    throw std::logic_error("brauer_context: stabiliser has wrong order");
  }
  return ctx;
}

TKIJ classify_tkij(const Diagram& a, const BrauerContext& ctx) {
  if (!a.in(Family::B) || a.degree() != ctx.n) {
    throw std::invalid_argument("classify_tkij: not a Brauer diagram of degree n");
  }
  TKIJ out;
  out.in_k = a.ker().refines(ctx.kappa);
  out.in_i = !out.in_k;
  out.in_t = a * ctx.zeta == ctx.zeta;
  out.in_j = out.in_k && a.rank() <= 2;
  return out;
}

}  // namespace diagdeg
