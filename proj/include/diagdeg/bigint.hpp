// Small arbitrary-precision unsigned integer, enough for Bell/Catalan-scale
// counting.  Little-endian limbs in base 10^9.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diagdeg {

class Nat {
 public:
  Nat() = default;
  Nat(uint64_t v) {  // NOLINT: implicit conversion intended
    while (v != 0) {
      limbs_.push_back(static_cast<uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  static Nat from_string(std::string_view s) {
    if (s.empty()) {
      throw std::invalid_argument("Nat::from_string: empty string");
    }
    Nat result;
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Nat::from_string: non-digit character");
      }
      result = result * Nat(10) + Nat(static_cast<uint64_t>(c - '0'));
    }
    return result;
  }

  bool is_zero() const {
    return limbs_.empty();
  }

  std::string to_string() const {
    if (limbs_.empty()) {
      return "0";
    }
    std::string s = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  uint64_t to_u64() const {
    uint64_t v   = 0;
    uint64_t pow = 1;
    for (size_t i = 0; i < limbs_.size(); ++i) {
      if (i >= 3) {
        throw std::overflow_error("Nat::to_u64: value exceeds 64 bits");
      }
      uint64_t next = v + limbs_[i] * pow;
      if (i == 2 && (next < v || limbs_[i] > 18)) {
        throw std::overflow_error("Nat::to_u64: value exceeds 64 bits");
      }
      v = next;
      pow *= kBase;
    }
    return v;
  }

  friend bool operator==(const Nat& a, const Nat& b) {
    return a.limbs_ == b.limbs_;
  }

  friend bool operator<(const Nat& a, const Nat& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
      return a.limbs_.size() < b.limbs_.size();
    }
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) {
        return a.limbs_[i] < b.limbs_[i];
      }
    }
    return false;
  }

  friend bool operator!=(const Nat& a, const Nat& b) {
    return !(a == b);
  }
  friend bool operator<=(const Nat& a, const Nat& b) {
    return !(b < a);
  }
  friend bool operator>(const Nat& a, const Nat& b) {
    return b < a;
  }
  friend bool operator>=(const Nat& a, const Nat& b) {
    return !(a < b);
  }

  Nat& operator+=(const Nat& o) {
    if (limbs_.size() < o.limbs_.size()) {
      limbs_.resize(o.limbs_.size(), 0);
    }
    uint32_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint64_t sum = static_cast<uint64_t>(limbs_[i]) + carry
                     + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<uint32_t>(sum % kBase);
      carry     = static_cast<uint32_t>(sum / kBase);
    }
    if (carry != 0) {
      limbs_.push_back(carry);
    }
    return *this;
  }

  // Requires *this >= o.
  Nat& operator-=(const Nat& o) {
    if (*this < o) {
      throw std::underflow_error("Nat::operator-=: negative result");
    }
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
      int64_t diff = static_cast<int64_t>(limbs_[i]) - borrow
                     - (i < o.limbs_.size() ? o.limbs_[i] : 0);
      if (diff < 0) {
        diff += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      limbs_[i] = static_cast<uint32_t>(diff);
    }
    trim();
    return *this;
  }

  friend Nat operator+(Nat a, const Nat& b) {
    return a += b;
  }
  friend Nat operator-(Nat a, const Nat& b) {
    return a -= b;
  }

  friend Nat operator*(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) {
      return Nat();
    }
    Nat result;
    result.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        uint64_t cur = result.limbs_[i + j]
                       + static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j]
                       + carry;
        result.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
        carry                = cur / kBase;
      }
      result.limbs_[i + b.limbs_.size()]
          += static_cast<uint32_t>(carry);
    }
    result.trim();
    return result;
  }

  Nat& operator*=(const Nat& o) {
    *this = *this * o;
    return *this;
  }

  // Exact division by a small divisor; throws if there is a remainder.
  Nat divexact(uint32_t d) const {
    if (d == 0) {
      throw std::invalid_argument("Nat::divexact: division by zero");
    }
    Nat result;
    result.limbs_.assign(limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      uint64_t cur     = rem * kBase + limbs_[i];
      result.limbs_[i] = static_cast<uint32_t>(cur / d);
      rem              = cur % d;
    }
    if (rem != 0) {
      throw std::invalid_argument("Nat::divexact: inexact division");
    }
    result.trim();
    return result;
  }

 private:
  static constexpr uint32_t kBase = 1000000000;
  std::vector<uint32_t> limbs_;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
      limbs_.pop_back();
    }
  }
};

}  // namespace diagdeg
