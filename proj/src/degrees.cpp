#include "diagdeg/degrees.hpp"

#include <mutex>
#include <vector>

namespace diagdeg {

namespace {

std::mutex seq_mutex;

const std::vector<Nat>& bell_upto(int n) {
  static std::vector<Nat> values = {Nat(1)};       // B(0)
  static std::vector<Nat> row    = {Nat(1)};       // last Bell triangle row
  while (static_cast<int>(values.size()) <= n) {
    std::vector<Nat> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const Nat& v : row) {
      next.push_back(next.back() + v);
    }
    row = std::move(next);
    values.push_back(row.front());
  }
  return values;
}

const std::vector<Nat>& involution_upto(int n) {
  static std::vector<Nat> values = {Nat(1), Nat(1)};
  while (static_cast<int>(values.size()) <= n) {
    size_t m = values.size();
    values.push_back(values[m - 1]
                     + Nat(static_cast<uint64_t>(m - 1)) * values[m - 2]);
  }
  return values;
}

const std::vector<Nat>& catalan_upto(int n) {
  static std::vector<Nat> values = {Nat(1)};
  while (static_cast<int>(values.size()) <= n) {
    size_t m = values.size();  // computing C(m) = sum C(i) C(m-1-i)
    Nat sum;
    for (size_t i = 0; i < m; ++i) {
      sum += values[i] * values[m - 1 - i];
    }
    values.push_back(std::move(sum));
  }
  return values;
}

const std::vector<Nat>& motzkin_upto(int n) {
  static std::vector<Nat> values = {Nat(1), Nat(1)};
  while (static_cast<int>(values.size()) <= n) {
    size_t m = values.size();  // M(m) = M(m-1) + sum_{k} M(k) M(m-2-k)
    Nat sum  = values[m - 1];
    for (size_t k = 0; k + 2 <= m; ++k) {
      sum += values[k] * values[m - 2 - k];
    }
    values.push_back(std::move(sum));
  }
  return values;
}

}  // namespace

Nat sequence(Seq kind, int n) {
  if (n < 0) {
    throw std::invalid_argument("sequence: negative index");
  }
  std::lock_guard<std::mutex> lock(seq_mutex);
  switch (kind) {
    case Seq::Bell: return bell_upto(n)[n];
    case Seq::Involution: return involution_upto(n)[n];
    case Seq::Catalan: return catalan_upto(n)[n];
    case Seq::Motzkin: return motzkin_upto(n)[n];
  }
  throw std::invalid_argument("sequence: unknown kind");
}

Nat double_factorial_odd(int m) {
  if (m == -1) {
    return Nat(1);
  }
  if (m < -1 || m % 2 == 0) {
    throw std::invalid_argument("double_factorial_odd: need odd m >= -1");
  }
  Nat result = 1;
  for (int i = m; i >= 1; i -= 2) {
    result *= Nat(static_cast<uint64_t>(i));
  }
  return result;
}

Nat binomial(int n, int k) {
  if (k < 0 || k > n) {
    return Nat(0);
  }
  Nat result = 1;
  for (int i = 0; i < k; ++i) {
    result *= Nat(static_cast<uint64_t>(n - i));
    result = result.divexact(static_cast<uint32_t>(i + 1));
  }
  return result;
}

Nat q_size(Family f, int n) {
  if (n < 0) {
    throw std::invalid_argument("q_size: negative degree");
  }
  auto B = [](int m) { return sequence(Seq::Bell, m); };
  auto I = [](int m) { return sequence(Seq::Involution, m); };
  auto C = [](int m) { return sequence(Seq::Catalan, m); };
  auto M = [](int m) { return sequence(Seq::Motzkin, m); };
  switch (f) {
    case Family::P:
      return (B(n + 2) + B(n) - B(n + 1)).divexact(2);
    case Family::PB:
      return I(n + 2).divexact(2);
    case Family::PP:
      return C(n + 2) + C(n) - C(n + 1) - C(n + 1);
    case Family::M:
      return M(n + 2) - M(n + 1);
    case Family::TL: {
      if (n % 2 != 0) {
        int k = (n + 1) / 2;
        return C(k + 1) - C(k);
      }
      int k = n / 2;
      return C(k + 2) + C(k) - C(k + 1) - C(k + 1);
    }
    case Family::B:
    case Family::S:
      throw std::invalid_argument("q_size: not defined for this family");
  }
  throw std::invalid_argument("q_size: unknown family");
}

Nat brauer_p(int n, int r) {
  if (r < 0 || r > n || (n - r) % 2 != 0) {
    throw std::invalid_argument("brauer_p: need 0 <= r <= n with r = n mod 2");
  }
  return binomial(n, r) * double_factorial_odd(n - r - 1);
}

DegreeReport deg_prime_report(Family f, int n) {
  DegreeReport report;
  report.family        = f;
  report.n             = n;
  report.formula_valid = false;
  switch (f) {
    case Family::P:
    case Family::PB:
    case Family::PP:
    case Family::M:
      report.formula_valid = n >= 2;
      break;
    case Family::B:
    case Family::TL:
      report.formula_valid = n >= 3;
      break;
    case Family::S:
      throw std::invalid_argument("deg_prime_report: no formula for S_n");
  }
  if (!report.formula_valid) {
    return report;
  }
  if (f == Family::B) {
    Nat dp;
    if (n % 2 != 0) {
      dp = Nat(static_cast<uint64_t>((n + 1) / 2)) * double_factorial_odd(n);
    } else {
      dp = Nat(static_cast<uint64_t>((n + 4) * (n + 2) / 8))
           * double_factorial_odd(n - 1);
    }
    report.q         = dp;
    report.deg_prime = dp;
    report.deg       = dp + Nat(1);
    if (n % 2 != 0) {
      report.degrc = report.deg;  // strict inequality holds for even n
    }
  } else {
    Nat q            = q_size(f, n);
    report.q         = q;
    report.deg_prime = q;
    report.deg       = q + Nat(1);
    report.degrc     = report.deg;
  }
  return report;
}

namespace {

constexpr std::array<Family, 6> table_families
    = {Family::P, Family::PB, Family::B, Family::PP, Family::M, Family::TL};

}  // namespace

std::string table2_csv(int max_n) {
  std::string out = "family,n,deg_prime,deg,source\n";
  for (Family f : table_families) {
    for (int n = 0; n <= max_n; ++n) {
      DegreeReport r = deg_prime_report(f, n);
      out += std::string(family_code(f)) + "," + std::to_string(n) + ",";
      if (r.formula_valid) {
        out += r.deg_prime->to_string() + "," + r.deg->to_string() + ",formula\n";
      } else {
        out += ",,outside-validity\n";
      }
    }
  }
  return out;
}

nlohmann::json table2_json(int max_n) {
  nlohmann::json rows = nlohmann::json::array();
  for (Family f : table_families) {
    for (int n = 0; n <= max_n; ++n) {
      DegreeReport r = deg_prime_report(f, n);
      nlohmann::json row;
      row["family"] = std::string(family_code(f));
      row["n"]      = n;
      row["valid"]  = r.formula_valid;
      if (r.formula_valid) {
        row["deg_prime"] = r.deg_prime->to_string();
        row["deg"]       = r.deg->to_string();
        row["source"]    = "formula";
      } else {
        row["source"] = "outside-validity";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace diagdeg
