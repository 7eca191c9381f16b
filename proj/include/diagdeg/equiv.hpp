// Equivalence relations on {0, ..., size-1} backed by union-find, with a
// canonical class-vector form for hashing and comparison.
#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace diagdeg {

class EquivRelation {
 public:
  EquivRelation() = default;

  // The trivial (diagonal) relation on a set of the given size.
  explicit EquivRelation(size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  static EquivRelation universal(size_t size) {
    EquivRelation r(size);
    for (size_t i = 1; i < size; ++i) {
      r.merge(0, i);
    }
    return r;
  }

  static EquivRelation from_classes(const std::vector<uint32_t>& class_of) {
    EquivRelation r(class_of.size());
    std::vector<size_t> first(class_of.size(), SIZE_MAX);
    for (size_t i = 0; i < class_of.size(); ++i) {
      uint32_t c = class_of[i];
      if (c >= class_of.size()) {
        throw std::invalid_argument("EquivRelation: class id out of range");
      }
      if (first[c] == SIZE_MAX) {
        first[c] = i;
      } else {
        r.merge(first[c], i);
      }
    }
    return r;
  }

  size_t size() const {
    return parent_.size();
  }

  size_t find(size_t x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  // Returns true when the classes of a and b were distinct.
  bool merge(size_t a, size_t b) {
    size_t ra = find(a);
    size_t rb = find(b);
    if (ra == rb) {
      return false;
    }
    if (ra > rb) {
      std::swap(ra, rb);
    }
    parent_[rb] = ra;
    return true;
  }

  bool same(size_t a, size_t b) const {
    return find(a) == find(b);
  }

  // Class ids numbered by first occurrence; equal relations give equal
  // vectors.
  std::vector<uint32_t> canonical_classes() const {
    std::vector<uint32_t> out(parent_.size());
    std::vector<uint32_t> label(parent_.size(), UINT32_MAX);
    uint32_t next = 0;
    for (size_t i = 0; i < parent_.size(); ++i) {
      size_t r = find(i);
      if (label[r] == UINT32_MAX) {
        label[r] = next++;
      }
      out[i] = label[r];
    }
    return out;
  }

  size_t num_classes() const {
    size_t count = 0;
    for (size_t i = 0; i < parent_.size(); ++i) {
      if (find(i) == i) {
        ++count;
      }
    }
    return count;
  }

  bool is_trivial() const {
    return num_classes() == parent_.size();
  }

  // Every class of *this lies inside a class of coarser.
  bool refines(const EquivRelation& other) const {
    if (size() != other.size()) {
      return false;
    }
    for (size_t i = 0; i < size(); ++i) {
      if (!other.same(i, find(i))) {
        return false;
      }
    }
    return true;
  }

  static EquivRelation join(const EquivRelation& a, const EquivRelation& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("EquivRelation::join: size mismatch");
    }
    EquivRelation r = a;
    for (size_t i = 0; i < b.size(); ++i) {
      r.merge(i, b.find(i));
    }
    return r;
  }

  friend bool operator==(const EquivRelation& a, const EquivRelation& b) {
    return a.size() == b.size()
           && a.canonical_classes() == b.canonical_classes();
  }

 private:
  mutable std::vector<size_t> parent_;
};

}  // namespace diagdeg
