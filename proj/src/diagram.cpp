#include "diagdeg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace diagdeg {

namespace {

// Order 1 < ... < n < 1' < ... < n' as integer keys 1..2n.
int vkey(int v, int n) {
  return v > 0 ? v : n - v;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
};

}  // namespace

std::string_view family_code(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::PB: return "PB";
    case Family::B: return "B";
    case Family::PP: return "PP";
    case Family::M: return "M";
    case Family::TL: return "TL";
    case Family::S: return "S";
  }
  return "?";
}

std::optional<Family> family_from_code(std::string_view code) {
  for (Family f : all_families) {
    if (family_code(f) == code) {
      return f;
    }
  }
  return std::nullopt;
}

////////////////////////////////////////////////////////////////////////
// SetPartition
////////////////////////////////////////////////////////////////////////

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n, -1) {
  for (auto& block : blocks_) {
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (size_t b = 0; b < blocks_.size(); ++b) {
    for (int x : blocks_[b]) {
      if (x < 1 || x > n_ || block_of_[x - 1] != -1) {
        throw std::invalid_argument("SetPartition: not a partition of {1..n}");
      }
      block_of_[x - 1] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n_; ++x) {
    if (block_of_[x] == -1) {
      throw std::invalid_argument("SetPartition: vertex missing");
    }
  }
}

SetPartition SetPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= n; ++i) {
    blocks.push_back({i});
  }
  return SetPartition(n, std::move(blocks));
}

bool SetPartition::same_block(int x, int y) const {
  return block_of_.at(x - 1) == block_of_.at(y - 1);
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n_ != coarser.n_) {
    return false;
  }
  for (const auto& block : blocks_) {
    for (size_t i = 1; i < block.size(); ++i) {
      if (!coarser.same_block(block[0], block[i])) {
        return false;
      }
    }
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string s = "(";
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) {
      s += '|';
    }
    for (size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(blocks_[b][i]);
    }
  }
  s += ')';
  return s;
}

////////////////////////////////////////////////////////////////////////
// Diagram
////////////////////////////////////////////////////////////////////////

Diagram::Diagram(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  canonicalize_and_validate();
}

void Diagram::canonicalize_and_validate() {
  if (n_ < 0) {
    throw std::invalid_argument("Diagram: negative degree");
  }
  std::vector<bool> seen(2 * n_, false);
  size_t count = 0;
  for (auto& block : blocks_) {
    if (block.empty()) {
      throw std::invalid_argument("Diagram: empty block");
    }
    for (int v : block) {
      if (v == 0 || std::abs(v) > n_) {
        throw std::invalid_argument("Diagram: vertex out of range");
      }
      size_t slot = static_cast<size_t>(vkey(v, n_) - 1);
      if (seen[slot]) {
        throw std::invalid_argument("Diagram: duplicated vertex");
      }
      seen[slot] = true;
      ++count;
    }
    std::sort(block.begin(), block.end(), [this](int a, int b) {
      return vkey(a, n_) < vkey(b, n_);
    });
  }
  if (count != static_cast<size_t>(2 * n_)) {
    throw std::invalid_argument("Diagram: vertex missing");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [this](const std::vector<int>& a, const std::vector<int>& b) {
              return vkey(a[0], n_) < vkey(b[0], n_);
            });
}

Diagram Diagram::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= n; ++i) {
    blocks.push_back({i, -i});
  }
  return Diagram(n, std::move(blocks));
}

Diagram Diagram::parse(std::string_view text, int n) {
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("Diagram::parse: expected '" + std::string(1, c)
                                  + "' at position " + std::to_string(pos));
    }
    ++pos;
  };
  auto parse_int = [&]() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') {
      ++pos;
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start || (text[start] == '-' && pos == start + 1)) {
      throw std::invalid_argument("Diagram::parse: expected integer at position "
                                  + std::to_string(start));
    }
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  std::vector<std::vector<int>> blocks;
  expect('[');
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      expect('[');
      std::vector<int> block;
      block.push_back(parse_int());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        block.push_back(parse_int());
        skip_ws();
      }
      expect(']');
      blocks.push_back(std::move(block));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip_ws();
  if (pos != text.size()) {
    throw std::invalid_argument("Diagram::parse: trailing characters");
  }
  return Diagram(n, std::move(blocks));
}

std::string Diagram::to_string() const {
  std::string s = "[";
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) {
      s += ',';
    }
    s += '[';
    for (size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(blocks_[b][i]);
    }
    s += ']';
  }
  s += ']';
  return s;
}

Diagram Diagram::star() const {
  std::vector<std::vector<int>> blocks = blocks_;
  for (auto& block : blocks) {
    for (int& v : block) {
      v = -v;
    }
  }
  return Diagram(n_, std::move(blocks));
}

Diagram operator*(const Diagram& a, const Diagram& b) {
  if (a.n_ != b.n_) {
    throw std::invalid_argument("Diagram product: degree mismatch");
  }
  const int n = a.n_;
  // Rows: upper 0..n-1, middle n..2n-1, lower 2n..3n-1.
  UnionFind uf(3 * static_cast<size_t>(n));
  for (const auto& block : a.blocks_) {
    int first = block[0] > 0 ? block[0] - 1 : n - block[0] - 1;
    for (int v : block) {
      uf.merge(first, v > 0 ? v - 1 : n - v - 1);
    }
  }
  for (const auto& block : b.blocks_) {
    int first = block[0] > 0 ? n + block[0] - 1 : 2 * n - block[0] - 1;
    for (int v : block) {
      uf.merge(first, v > 0 ? n + v - 1 : 2 * n - v - 1);
    }
  }
  std::unordered_map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) {
    groups[uf.find(i)].push_back(i + 1);
  }
  for (int i = 0; i < n; ++i) {
    groups[uf.find(2 * n + i)].push_back(-(i + 1));
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(groups.size());
  for (auto& [root, members] : groups) {
    blocks.push_back(std::move(members));
  }
  return Diagram(n, std::move(blocks));
}

int Diagram::rank() const {
  int r = 0;
  for (const auto& block : blocks_) {
    if (block.front() > 0 && block.back() < 0) {
      ++r;
    }
  }
  return r;
}

std::vector<int> Diagram::dom() const {
  std::vector<int> out;
  for (const auto& block : blocks_) {
    if (block.front() > 0 && block.back() < 0) {
      for (int v : block) {
        if (v > 0) {
          out.push_back(v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Diagram::codom() const {
  std::vector<int> out;
  for (const auto& block : blocks_) {
    if (block.front() > 0 && block.back() < 0) {
      for (int v : block) {
        if (v < 0) {
          out.push_back(-v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition Diagram::ker() const {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : blocks_) {
    std::vector<int> part;
    for (int v : block) {
      if (v > 0) {
        part.push_back(v);
      }
    }
    if (!part.empty()) {
      blocks.push_back(std::move(part));
    }
  }
  return SetPartition(n_, std::move(blocks));
}

SetPartition Diagram::coker() const {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : blocks_) {
    std::vector<int> part;
    for (int v : block) {
      if (v < 0) {
        part.push_back(-v);
      }
    }
    if (!part.empty()) {
      blocks.push_back(std::move(part));
    }
  }
  return SetPartition(n_, std::move(blocks));
}

bool Diagram::is_planar() const {
  // Positions along the boundary walk 1, ..., n, n', ..., 1'.
  auto pos = [this](int v) {
    return v > 0 ? v - 1 : 2 * n_ + v;  // -1 -> 2n-1, -n -> n
  };
  std::vector<std::vector<int>> positioned;
  positioned.reserve(blocks_.size());
  for (const auto& block : blocks_) {
    std::vector<int> p;
    p.reserve(block.size());
    for (int v : block) {
      p.push_back(pos(v));
    }
    std::sort(p.begin(), p.end());
    positioned.push_back(std::move(p));
  }
  // Two blocks cross iff a merged walk alternates between them >= 4 runs.
  for (size_t i = 0; i < positioned.size(); ++i) {
    for (size_t j = i + 1; j < positioned.size(); ++j) {
      const auto& A = positioned[i];
      const auto& B = positioned[j];
      size_t ai = 0, bi = 0;
      int runs = 0, last = -1;
      while (ai < A.size() || bi < B.size()) {
        int which;
        if (bi >= B.size() || (ai < A.size() && A[ai] < B[bi])) {
          which = 0;
          ++ai;
        } else {
          which = 1;
          ++bi;
        }
        if (which != last) {
          ++runs;
          last = which;
        }
      }
      if (runs >= 4) {
        return false;
      }
    }
  }
  return true;
}

bool Diagram::in(Family f) const {
  switch (f) {
    case Family::P:
      return true;
    case Family::PB:
      for (const auto& block : blocks_) {
        if (block.size() > 2) {
          return false;
        }
      }
      return true;
    case Family::B:
      for (const auto& block : blocks_) {
        if (block.size() != 2) {
          return false;
        }
      }
      return true;
    case Family::PP:
      return is_planar();
    case Family::M:
      return in(Family::PB) && is_planar();
    case Family::TL:
      return in(Family::B) && is_planar();
    case Family::S:
      for (const auto& block : blocks_) {
        if (block.size() != 2 || block[0] < 0 || block[1] > 0) {
          return false;
        }
      }
      return true;
  }
  return false;
}

bool Diagram::is_projection() const {
  return star() == *this && (*this) * (*this) == *this;
}

size_t Diagram::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<size_t>(n_));
  for (const auto& block : blocks_) {
    for (int v : block) {
      mix(static_cast<size_t>(vkey(v, n_)));
    }
    mix(0);
  }
  return h;
}

bool operator<(const Diagram& a, const Diagram& b) {
  if (a.n_ != b.n_) {
    return a.n_ < b.n_;
  }
  size_t nblocks = std::min(a.blocks_.size(), b.blocks_.size());
  for (size_t i = 0; i < nblocks; ++i) {
    const auto& ba = a.blocks_[i];
    const auto& bb = b.blocks_[i];
    size_t len = std::min(ba.size(), bb.size());
    for (size_t j = 0; j < len; ++j) {
      int ka = vkey(ba[j], a.n_);
      int kb = vkey(bb[j], a.n_);
      if (ka != kb) {
        return ka < kb;
      }
    }
    if (ba.size() != bb.size()) {
      return ba.size() < bb.size();
    }
  }
  return a.blocks_.size() < b.blocks_.size();
}

////////////////////////////////////////////////////////////////////////
// Auxiliary maps
////////////////////////////////////////////////////////////////////////

Diagram hat_flatten(const Diagram& a) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : a.blocks()) {
    if (block.front() > 0 && block.back() < 0) {
      std::vector<int> up, down;
      for (int v : block) {
        (v > 0 ? up : down).push_back(v);
      }
      blocks.push_back(std::move(up));
      blocks.push_back(std::move(down));
    } else {
      blocks.push_back(block);
    }
  }
  return Diagram(a.degree(), std::move(blocks));
}

Diagram hat_pairup(const Diagram& a) {
  if (!a.in(Family::B)) {
    throw std::invalid_argument("hat_pairup: not a Brauer diagram");
  }
  if (a.rank() % 2 != 0) {
    throw std::invalid_argument("hat_pairup: odd rank");
  }
  std::vector<int> uppers, lowers;
  std::vector<std::vector<int>> blocks;
  for (const auto& block : a.blocks()) {
    if (block.front() > 0 && block.back() < 0) {
      uppers.push_back(block[0]);
      lowers.push_back(-block[1]);
    } else {
      blocks.push_back(block);
    }
  }
  // Canonical block order lists transversals by their upper endpoints a_1 <
  // a_2 < ...; the paired lower endpoints follow that order.
  for (size_t i = 0; i + 1 < uppers.size(); i += 2) {
    blocks.push_back({uppers[i], uppers[i + 1]});
    blocks.push_back({-lowers[i], -lowers[i + 1]});
  }
  return Diagram(a.degree(), std::move(blocks));
}

Diagram bar(const Diagram& a, Family f) {
  const int n = a.degree();
  if (f == Family::B) {
    if (!a.in(Family::B)) {
      throw std::invalid_argument("bar: not a Brauer diagram");
    }
    std::vector<std::vector<int>> blocks;
    int r = 0;
    for (const auto& block : a.blocks()) {
      if (block.front() > 0 && block.back() < 0) {
        ++r;
        blocks.push_back({r, block[1]});
      } else if (block.front() < 0) {
        blocks.push_back(block);
      }
    }
    // Leftover upper vertices r+1..n are paired consecutively.
    for (int v = r + 1; v + 1 <= n; v += 2) {
      blocks.push_back({v, v + 1});
    }
    return Diagram(n, std::move(blocks));
  }
  if (!a.is_projection()) {
    throw std::invalid_argument("bar: not a projection");
  }
  std::vector<std::vector<int>> blocks;
  int r = 0;
  for (const auto& block : a.blocks()) {
    if (block.front() > 0 && block.back() < 0) {
      ++r;
      std::vector<int> nb = {r};
      for (int v : block) {
        if (v < 0) {
          nb.push_back(v);
        }
      }
      blocks.push_back(std::move(nb));
    } else if (block.front() < 0) {
      blocks.push_back(block);
    }
  }
  for (int v = r + 1; v <= n; ++v) {
    blocks.push_back({v});
  }
  return Diagram(n, std::move(blocks));
}

Diagram plus_embed(const Diagram& e) {
  if (!e.is_projection()) {
    throw std::invalid_argument("plus_embed: not a projection");
  }
  const int n = e.degree();
  const int r = e.rank();
  std::vector<std::vector<int>> blocks;
  int i = 0;
  for (const auto& block : e.blocks()) {
    if (block.front() > 0 && block.back() < 0) {
      ++i;
      int extra = n + r - i + 1;
      std::vector<int> up = {extra}, down = {-extra};
      for (int v : block) {
        (v > 0 ? up : down).push_back(v);
      }
      blocks.push_back(std::move(up));
      blocks.push_back(std::move(down));
    } else {
      blocks.push_back(block);
    }
  }
  return Diagram(n + r, std::move(blocks));
}

namespace {

// Position of a vertex along the boundary walk 1..n, n'..1'.
int walk_pos(int v, int n) {
  return v > 0 ? v - 1 : 2 * n + v;
}

// Entry and exit slots of a vertex in the fattened 2n-vertex diagram.
int entry_slot(int v) {
  return v > 0 ? 2 * v - 1 : 2 * v;  // upper i -> 2i-1; lower i' -> (2i)'
}

int exit_slot(int v) {
  return v > 0 ? 2 * v : 2 * v + 1;  // upper i -> 2i; lower i' -> (2i-1)'
}

}  // namespace

Diagram tilde_pp_to_tl(const Diagram& a) {
  if (!a.is_planar()) {
    throw std::invalid_argument("tilde_pp_to_tl: not planar");
  }
  const int n = a.degree();
  std::vector<std::vector<int>> blocks;
  for (const auto& block : a.blocks()) {
    std::vector<int> walk = block;
    std::sort(walk.begin(), walk.end(),
              [n](int x, int y) { return walk_pos(x, n) < walk_pos(y, n); });
    const size_t m = walk.size();
    for (size_t j = 0; j < m; ++j) {
      blocks.push_back({exit_slot(walk[j]), entry_slot(walk[(j + 1) % m])});
    }
  }
  return Diagram(2 * n, std::move(blocks));
}

Diagram untilde_tl_to_pp(const Diagram& b) {
  if (b.degree() % 2 != 0) {
    throw std::invalid_argument("untilde_tl_to_pp: odd degree");
  }
  const int m = b.degree() / 2;
  const int nn = b.degree();
  auto slot_index = [nn](int v) {
    return v > 0 ? v - 1 : nn - v - 1;
  };
  UnionFind uf(4 * static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    uf.merge(slot_index(2 * i - 1), slot_index(2 * i));
    uf.merge(slot_index(-(2 * i - 1)), slot_index(-2 * i));
  }
  for (const auto& block : b.blocks()) {
    for (size_t i = 1; i < block.size(); ++i) {
      uf.merge(slot_index(block[0]), slot_index(block[i]));
    }
  }
  std::unordered_map<int, std::vector<int>> groups;
  for (int i = 1; i <= m; ++i) {
    groups[uf.find(slot_index(2 * i - 1))].push_back(i);
    groups[uf.find(slot_index(-(2 * i - 1)))].push_back(-i);
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(groups.size());
  for (auto& [root, members] : groups) {
    blocks.push_back(std::move(members));
  }
  return Diagram(m, std::move(blocks));
}

Diagram tl_prepend_strand(const Diagram& a) {
  std::vector<std::vector<int>> blocks = {{1, -1}};
  for (const auto& block : a.blocks()) {
    std::vector<int> nb;
    nb.reserve(block.size());
    for (int v : block) {
      nb.push_back(v > 0 ? v + 1 : v - 1);
    }
    blocks.push_back(std::move(nb));
  }
  return Diagram(a.degree() + 1, std::move(blocks));
}

Diagram tl_strip_strand(const Diagram& b) {
  std::vector<std::vector<int>> blocks;
  bool found = false;
  for (const auto& block : b.blocks()) {
    if (block == std::vector<int>{1, -1}) {
      found = true;
      continue;
    }
    std::vector<int> nb;
    nb.reserve(block.size());
    for (int v : block) {
      if (v == 1 || v == -1) {
        throw std::invalid_argument("tl_strip_strand: {1,1'} is not a block");
      }
      nb.push_back(v > 0 ? v - 1 : v + 1);
    }
    blocks.push_back(std::move(nb));
  }
  if (!found) {
    throw std::invalid_argument("tl_strip_strand: {1,1'} is not a block");
  }
  return Diagram(b.degree() - 1, std::move(blocks));
}

bool in_tl_model(const Diagram& a) {
  if (!a.is_planar()) {
    return false;
  }
  for (const auto& block : a.blocks()) {
    if (block[0] == 1) {
      return std::find(block.begin(), block.end(), -1) != block.end();
    }
  }
  return false;
}

////////////////////////////////////////////////////////////////////////
// Special elements and minimal congruence pairs
////////////////////////////////////////////////////////////////////////

namespace {

// Builds a diagram from the given blocks, filling every unused vertex of
// {1..n, 1'..n'} with a singleton.
Diagram with_singletons(int n, std::vector<std::vector<int>> blocks) {
  std::vector<bool> used_up(n + 1, false), used_down(n + 1, false);
  for (const auto& block : blocks) {
    for (int v : block) {
      (v > 0 ? used_up[v] : used_down[-v]) = true;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!used_up[v]) {
      blocks.push_back({v});
    }
    if (!used_down[v]) {
      blocks.push_back({-v});
    }
  }
  return Diagram(n, std::move(blocks));
}

// Builds a Brauer diagram from the given blocks, pairing the unused vertices
// of each row consecutively.
Diagram with_pairs(int n, std::vector<std::vector<int>> blocks) {
  std::vector<bool> used_up(n + 1, false), used_down(n + 1, false);
  for (const auto& block : blocks) {
    for (int v : block) {
      (v > 0 ? used_up[v] : used_down[-v]) = true;
    }
  }
  std::vector<int> up, down;
  for (int v = 1; v <= n; ++v) {
    if (!used_up[v]) {
      up.push_back(v);
    }
    if (!used_down[v]) {
      down.push_back(v);
    }
  }
  for (size_t i = 0; i + 1 < up.size(); i += 2) {
    blocks.push_back({up[i], up[i + 1]});
  }
  for (size_t i = 0; i + 1 < down.size(); i += 2) {
    blocks.push_back({-down[i], -down[i + 1]});
  }
  return Diagram(n, std::move(blocks));
}

Diagram special_brauer(int n, std::string_view name) {
  if (n < 3) {
    throw std::invalid_argument("special: Brauer elements need n >= 3");
  }
  const bool odd = n % 2 != 0;
  if (odd) {
    if (name == "zeta") {
      return with_pairs(n, {{1, -1}});
    }
    if (name == "alpha") {
      return with_pairs(n, {{3, -1}, {1, 2}, {-2, -3}});
    }
    if (name == "beta") {
      return with_pairs(n, {{1, -3}, {2, 3}, {-1, -2}});
    }
    if (name == "pi") {
      return with_pairs(n, {{1, -1}, {2, -2}, {3, -3}});
    }
  } else {
    if (n < 4) {
      throw std::invalid_argument("special: even Brauer elements need n >= 4");
    }
    if (name == "zeta") {
      return with_pairs(n, {});
    }
    if (name == "alpha") {
      return with_pairs(n, {{1, 4}, {2, 3}, {-1, -2}, {-3, -4}});
    }
    if (name == "beta") {
      return with_pairs(n, {{1, 2}, {3, 4}, {-1, -4}, {-2, -3}});
    }
    if (name == "gamma") {
      return with_pairs(n, {{1, -1}, {2, -2}});
    }
    if (name == "delta") {
      return with_pairs(n, {{1, -2}, {2, -1}});
    }
    if (name == "pi") {
      return with_pairs(n, {{1, -1}, {2, -2}, {3, -3}, {4, -4}});
    }
  }
  throw std::invalid_argument("special: unknown Brauer element '"
                              + std::string(name) + "'");
}

}  // namespace

Diagram special_model(int m, std::string_view name) {
  if (m < 2) {
    throw std::invalid_argument("special_model: need m >= 2");
  }
  if (name == "zeta") {
    return with_singletons(m, {{1, -1}});
  }
  if (name == "alpha") {
    return with_singletons(m, {{1, 2, -1}});
  }
  if (name == "beta") {
    return with_singletons(m, {{1, -1, -2}});
  }
  if (name == "pi") {
    return with_singletons(m, {{1, -1}, {2, -2}});
  }
  throw std::invalid_argument("special_model: unknown element '"
                              + std::string(name) + "'");
}

Diagram special(Family f, int n, std::string_view name) {
  switch (f) {
    case Family::P:
    case Family::PB:
    case Family::PP:
    case Family::M: {
      if (n < 2) {
        throw std::invalid_argument("special: need n >= 2");
      }
      if (name == "zeta") {
        return with_singletons(n, {});
      }
      if (name == "alpha") {
        return with_singletons(n, {{1, 2}});
      }
      if (name == "beta") {
        return with_singletons(n, {{-1, -2}});
      }
      if (name == "gamma") {
        return with_singletons(n, {{1, -1}});
      }
      if (name == "pi") {
        return with_singletons(n, {{1, -1}, {2, -2}});
      }
      throw std::invalid_argument("special: unknown element '"
                                  + std::string(name) + "'");
    }
    case Family::B:
      return special_brauer(n, name);
    case Family::TL: {
      if (n < 3) {
        throw std::invalid_argument("special: TL elements need n >= 3");
      }
      if (n % 2 != 0) {
        return tl_strip_strand(tilde_pp_to_tl(special_model((n + 1) / 2, name)));
      }
      return tilde_pp_to_tl(special(Family::PP, n / 2, name));
    }
    case Family::S:
      throw std::invalid_argument("special: no named elements for S_n");
  }
  throw std::invalid_argument("special: unknown family");
}

std::vector<std::pair<Diagram, Diagram>> minimal_pairs_model(int m) {
  return {{special_model(m, "zeta"), special_model(m, "alpha")},
          {special_model(m, "zeta"), special_model(m, "beta")}};
}

std::vector<std::pair<Diagram, Diagram>> minimal_pairs(Family f, int n) {
  switch (f) {
    case Family::P:
    case Family::PB:
    case Family::PP:
    case Family::M:
      return {{special(f, n, "zeta"), special(f, n, "alpha")},
              {special(f, n, "zeta"), special(f, n, "beta")},
              {special(f, n, "zeta"), special(f, n, "gamma")}};
    case Family::B:
      if (n % 2 != 0) {
        return {{special(f, n, "zeta"), special(f, n, "alpha")},
                {special(f, n, "zeta"), special(f, n, "beta")}};
      }
      return {{special(f, n, "zeta"), special(f, n, "alpha")},
              {special(f, n, "zeta"), special(f, n, "beta")},
              {special(f, n, "gamma"), special(f, n, "delta")}};
    case Family::TL: {
      if (n < 3) {
        throw std::invalid_argument("minimal_pairs: TL needs n >= 3");
      }
      std::vector<std::pair<Diagram, Diagram>> out;
      if (n % 2 != 0) {
        for (const auto& [a, b] : minimal_pairs_model((n + 1) / 2)) {
          out.emplace_back(tl_strip_strand(tilde_pp_to_tl(a)),
                           tl_strip_strand(tilde_pp_to_tl(b)));
        }
      } else {
        for (const auto& [a, b] : minimal_pairs(Family::PP, n / 2)) {
          out.emplace_back(tilde_pp_to_tl(a), tilde_pp_to_tl(b));
        }
      }
      return out;
    }
    case Family::S:
      throw std::invalid_argument("minimal_pairs: not available for S_n");
  }
  throw std::invalid_argument("minimal_pairs: unknown family");
}

}  // namespace diagdeg
