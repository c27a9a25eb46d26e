#pragma once

// Exact arithmetic in Q/Z, plus the handful of integer helpers the rest of
// the library leans on.

#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace anyonkit {

using i64 = std::int64_t;
using i128 = __int128;

/// Residue of a modulo m in [0, m).
constexpr i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

constexpr i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(mod(static_cast<i64>((static_cast<i128>(a) * b) % m), m));
}

/// Inverse of a modulo m; a must be a unit.
inline i64 modinv(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  require(old_r == 1, ErrorKind::InvalidArgument, "modinv: not a unit");
  return mod(old_s, m);
}

inline i64 checked_lcm(i64 a, i64 b, i64 cap) {
  i128 l = static_cast<i128>(a / std::gcd(a, b)) * b;
  require(l <= cap, ErrorKind::CapExceeded, "denominator exceeds cap " + std::to_string(cap));
  return static_cast<i64>(l);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (p, e) pairs with p ascending.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline i64 ipow(i64 base, int e) {
  i64 r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// An element of Q/Z stored as the reduced fraction num/den with 0 <= num < den.
class QZ {
 public:
  constexpr QZ() = default;

  QZ(i64 num, i64 den) {
    require(den > 0, ErrorKind::InvalidArgument, "QZ: denominator must be positive");
    num = mod(num, den);
    i64 g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  constexpr i64 num() const { return num_; }
  constexpr i64 den() const { return den_; }
  constexpr bool is_zero() const { return num_ == 0; }

  /// Least t >= 1 with t * a = 0. For a reduced fraction this is the denominator.
  constexpr i64 order() const { return den_; }

  QZ operator+(const QZ& o) const {
    i64 l = checked_lcm(den_, o.den_, Config{}.denominator_cap);
    i128 n = static_cast<i128>(num_) * (l / den_) + static_cast<i128>(o.num_) * (l / o.den_);
    return QZ(static_cast<i64>(n % l), l);
  }
  QZ operator-() const { return QZ(-num_, den_); }
  QZ operator-(const QZ& o) const { return *this + (-o); }
  QZ& operator+=(const QZ& o) { return *this = *this + o; }
  QZ& operator-=(const QZ& o) { return *this = *this - o; }

  QZ scaled(i64 m) const {
    return QZ(static_cast<i64>((static_cast<i128>(num_) * mod(m, den_)) % den_), den_);
  }

  friend constexpr bool operator==(const QZ&, const QZ&) = default;

  /// Ordering by the representative in [0, 1).
  friend std::strong_ordering operator<=>(const QZ& a, const QZ& b) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const QZ& q) {
    if (q.num_ == 0) return os << "0";
    return os << q.num_ << "/" << q.den_;
  }

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

inline QZ qz_add(const QZ& a, const QZ& b) { return a + b; }
inline QZ qz_scale(const QZ& a, i64 m) { return a.scaled(m); }
inline i64 qz_order(const QZ& a) { return a.order(); }

/// A dense vector of Q/Z values sharing one denominator: value i is num[i]/den.
/// The denominator is always the least one that represents every entry, so two
/// tables holding the same values compare equal.
class FractionTable {
 public:
  FractionTable() = default;
  explicit FractionTable(std::size_t size) : num_(size, 0) {}

  FractionTable(i64 den, std::vector<i64> nums) : den_(den), num_(std::move(nums)) {
    require(den > 0, ErrorKind::InvalidArgument, "FractionTable: denominator must be positive");
    for (auto& n : num_) n = mod(n, den_);
    minimize();
  }

  static FractionTable from_values(const std::vector<QZ>& values, i64 den_cap = Config{}.denominator_cap) {
    i64 den = 1;
    for (const auto& v : values) den = checked_lcm(den, v.den(), den_cap);
    std::vector<i64> nums(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) nums[i] = values[i].num() * (den / values[i].den());
    return FractionTable(den, std::move(nums));
  }

  std::size_t size() const { return num_.size(); }
  i64 den() const { return den_; }
  i64 raw(std::size_t i) const { return num_[i]; }
  const std::vector<i64>& raw() const { return num_; }
  QZ at(std::size_t i) const { return QZ(num_[i], den_); }

  /// Numerators over `den`, which must be a multiple of den().
  std::vector<i64> numerators_over(i64 den) const {
    require(den % den_ == 0, ErrorKind::Internal, "numerators_over: not a multiple");
    i64 f = den / den_;
    std::vector<i64> out(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out[i] = num_[i] * f;
    return out;
  }

  friend FractionTable combine(const FractionTable& a, i64 ka, const FractionTable& b, i64 kb) {
    require(a.size() == b.size(), ErrorKind::InvalidArgument, "table size mismatch");
    i64 den = checked_lcm(a.den_, b.den_, Config{}.denominator_cap);
    i64 fa = den / a.den_, fb = den / b.den_;
    std::vector<i64> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      i128 v = static_cast<i128>(a.num_[i]) * fa * ka + static_cast<i128>(b.num_[i]) * fb * kb;
      out[i] = static_cast<i64>(v % den);
    }
    return FractionTable(den, std::move(out));
  }

  friend FractionTable operator+(const FractionTable& a, const FractionTable& b) { return combine(a, 1, b, 1); }
  friend FractionTable operator-(const FractionTable& a, const FractionTable& b) { return combine(a, 1, b, -1); }
  FractionTable scaled(i64 m) const {
    std::vector<i64> out(num_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mulmod(num_[i], m, den_);
    return FractionTable(den_, std::move(out));
  }

  friend bool operator==(const FractionTable&, const FractionTable&) = default;

 private:
  void minimize() {
    i64 g = den_;
    for (i64 n : num_) {
      g = std::gcd(g, n);
      if (g == 1) return;
    }
    den_ /= g;
    for (auto& n : num_) n /= g;
  }

  i64 den_ = 1;
  std::vector<i64> num_;
};

}  // namespace anyonkit
