#pragma once

// Quadratic forms q: A -> Q/Z and their polarizations.

#include <anyonkit/cochain.hpp>
#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/qz.hpp>

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace anyonkit {

namespace detail {

inline bool quadratic_identities_hold(const FinAbGroup& g, const FractionTable& t) {
  require(t.size() == g.size(), ErrorKind::InvalidArgument, "form table size differs from |A|");
  const i64 den = t.den();
  const auto& q = t.raw();
  const Elem n = static_cast<Elem>(g.order());
  if (q[0] != 0) return false;
  for (Elem a = 1; a < n; ++a)
    if (q[a] != q[g.neg(a)]) return false;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b) {
      Elem ab = g.add(a, b);
      for (Elem c = 1; c < n; ++c) {
        i64 s = q[g.add(ab, c)] - q[g.add(b, c)] - q[g.add(a, c)] - q[ab] + q[a] + q[b] + q[c];
        if (mod(s, den) != 0) return false;
      }
    }
  return true;
}

}  // namespace detail

/// Symmetric biadditive form A x A -> Q/Z.
class BilinearForm {
 public:
  BilinearForm(FinAbGroup group, FractionTable values) : group_(std::move(group)), values_(std::move(values)) {
    require(values_.size() == group_.size() * group_.size(), ErrorKind::InvalidArgument,
            "bilinear table must have |A|^2 entries");
  }

  const FinAbGroup& group() const { return group_; }
  const FractionTable& values() const { return values_; }
  QZ operator()(Elem a, Elem b) const { return values_.at(static_cast<std::size_t>(a) * group_.size() + b); }
  i64 raw(Elem a, Elem b) const { return values_.raw(static_cast<std::size_t>(a) * group_.size() + b); }
  i64 den() const { return values_.den(); }

  bool is_symmetric_biadditive() const {
    const Elem n = static_cast<Elem>(group_.order());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (raw(a, b) != raw(b, a)) return false;
        for (Elem c = 0; c < n; ++c)
          if (mod(raw(a, group_.add(b, c)) - raw(a, b) - raw(a, c), den()) != 0) return false;
      }
    return true;
  }

  bool is_zero() const { return values_.den() == 1; }

  /// {a : b(a, x) = 0 for all x}, as element indices.
  std::vector<Elem> radical() const {
    std::vector<Elem> out;
    const Elem n = static_cast<Elem>(group_.order());
    for (Elem a = 0; a < n; ++a) {
      bool in = true;
      for (Elem x = 0; x < n && in; ++x) in = raw(a, x) == 0;
      if (in) out.push_back(a);
    }
    return out;
  }

  /// The same form viewed as a (1,1) cochain.
  Cochain as_cochain() const { return Cochain(group_, {1, 1}, values_); }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  FinAbGroup group_;
  FractionTable values_;
};

class QuadraticForm {
 public:
  /// Validates both defining identities; throws NotQuadratic.
  QuadraticForm(FinAbGroup group, FractionTable values) : group_(std::move(group)), values_(std::move(values)) {
    require(detail::quadratic_identities_hold(group_, values_), ErrorKind::NotQuadratic,
            "q(a) = q(-a) or the polarization identity fails");
  }

  static QuadraticForm zero(const FinAbGroup& g) { return QuadraticForm(g, FractionTable(g.size())); }

  /// q(x) = sum_i x_i^2 q(e_i) + sum_{i<j} x_i x_j b(e_i, e_j), with x_i the
  /// least non-negative representatives. `cross[{i,j}]` holds b(e_i,e_j), i<j;
  /// missing pairs are zero.
  static QuadraticForm from_generators(const FinAbGroup& g, const std::vector<QZ>& gen_values,
                                       const std::map<std::pair<std::size_t, std::size_t>, QZ>& cross) {
    const std::size_t k = g.rank();
    require(gen_values.size() == k, ErrorKind::InvalidArgument, "need one generator value per cyclic factor");
    i64 den = 1;
    for (const auto& v : gen_values) den = checked_lcm(den, v.den(), Config{}.denominator_cap);
    std::vector<std::vector<i64>> b(k, std::vector<i64>(k, 0));
    for (const auto& [ij, v] : cross) {
      require(ij.first < ij.second && ij.second < k, ErrorKind::InvalidArgument, "cross term indices must satisfy i < j < rank");
      den = checked_lcm(den, v.den(), Config{}.denominator_cap);
    }
    for (const auto& [ij, v] : cross) b[ij.first][ij.second] = v.num() * (den / v.den());
    std::vector<i64> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = gen_values[i].num() * (den / gen_values[i].den());
    std::vector<i64> nums(g.size());
    for (Elem x = 0; x < g.order(); ++x) {
      auto c = g.coords(x);
      i128 v = 0;
      for (std::size_t i = 0; i < k; ++i) {
        v += static_cast<i128>(c[i]) * c[i] % den * s[i];
        for (std::size_t j = i + 1; j < k; ++j) v += static_cast<i128>(c[i]) * c[j] % den * b[i][j];
        v %= den;
      }
      nums[x] = static_cast<i64>(v);
    }
    QuadraticForm q(g, FractionTable(den, std::move(nums)));
    for (std::size_t i = 0; i < k; ++i)
      require(q(g.generator(i)) == gen_values[i], ErrorKind::NotQuadratic,
              "generator value " + std::to_string(i) + " is not attained by a quadratic form");
    for (const auto& [ij, v] : cross)
      require(q.polar(g.generator(ij.first), g.generator(ij.second)) == v, ErrorKind::NotQuadratic,
              "cross term is not a bicharacter value on these factors");
    return q;
  }

  const FinAbGroup& group() const { return group_; }
  const FractionTable& values() const { return values_; }
  QZ operator()(Elem a) const { return values_.at(a); }
  i64 den() const { return values_.den(); }

  /// b_q(a, b) = q(a+b) - q(a) - q(b).
  QZ polar(Elem a, Elem b) const { return (*this)(group_.add(a, b)) - (*this)(a) - (*this)(b); }

  std::vector<QZ> gen_values() const {
    std::vector<QZ> out;
    for (std::size_t i = 0; i < group_.rank(); ++i) out.push_back((*this)(group_.generator(i)));
    return out;
  }

  std::map<std::pair<std::size_t, std::size_t>, QZ> cross_terms() const {
    std::map<std::pair<std::size_t, std::size_t>, QZ> out;
    for (std::size_t i = 0; i < group_.rank(); ++i)
      for (std::size_t j = i + 1; j < group_.rank(); ++j) {
        QZ v = polar(group_.generator(i), group_.generator(j));
        if (!v.is_zero()) out[{i, j}] = v;
      }
    return out;
  }

  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
    require(a.group_ == b.group_, ErrorKind::InvalidArgument, "form group mismatch");
    return QuadraticForm(a.group_, a.values_ + b.values_);
  }
  friend QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b) {
    require(a.group_ == b.group_, ErrorKind::InvalidArgument, "form group mismatch");
    return QuadraticForm(a.group_, a.values_ - b.values_);
  }

  /// q o h for a homomorphism h into this form's group.
  QuadraticForm pullback(const GroupHom& h) const {
    require(h.codomain() == group_, ErrorKind::InvalidArgument, "pullback: codomain mismatch");
    auto t = h.table();
    std::vector<i64> nums(h.domain().size());
    for (Elem x = 0; x < h.domain().order(); ++x) nums[x] = values_.raw(t[x]);
    return QuadraticForm(h.domain(), FractionTable(values_.den(), std::move(nums)));
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  FinAbGroup group_;
  FractionTable values_;
};

/// Checks both identities on an arbitrary candidate map given in element order.
inline bool is_quadratic(const FinAbGroup& g, const std::vector<QZ>& values) {
  if (values.size() != g.size()) return false;
  return detail::quadratic_identities_hold(g, FractionTable::from_values(values));
}

inline BilinearForm polarize(const QuadraticForm& q) {
  const FinAbGroup& g = q.group();
  const std::size_t n = g.size();
  const auto& v = q.values().raw();
  std::vector<i64> nums(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) nums[a * n + b] = v[g.add(a, b)] - v[a] - v[b];
  return BilinearForm(g, FractionTable(q.den(), std::move(nums)));
}

/// q(a) = c(a, a). Throws NotACocycle unless (omega, c) satisfies pentagon and hexagon.
inline QuadraticForm trace(const AbelianThreeCocycle& t) {
  const FinAbGroup& g = t.group();
  require(pentagon_check(t.omega) && hexagon_check(t.omega, t.c), ErrorKind::NotACocycle,
          "trace needs an abelian 3-cocycle");
  std::vector<i64> nums(g.size());
  for (Elem a = 0; a < g.order(); ++a) nums[a] = t.c.values().raw(static_cast<std::size_t>(a) * g.size() + a);
  return QuadraticForm(g, FractionTable(t.c.den(), std::move(nums)));
}

/// Same as trace but skips re-verifying a cocycle the caller already trusts.
inline QuadraticForm trace_unchecked(const AbelianThreeCocycle& t) {
  const FinAbGroup& g = t.group();
  std::vector<i64> nums(g.size());
  for (Elem a = 0; a < g.order(); ++a) nums[a] = t.c.values().raw(static_cast<std::size_t>(a) * g.size() + a);
  return QuadraticForm(g, FractionTable(t.c.den(), std::move(nums)));
}

/// o(a) q(a) = 0 for every a.
inline bool in_quad_zero(const QuadraticForm& q) {
  const FinAbGroup& g = q.group();
  for (Elem a = 0; a < g.order(); ++a)
    if (!q(a).scaled(g.element_order(a)).is_zero()) return false;
  return true;
}

/// Number of quadratic forms predicted by |A/2A| |S^2(A)|.
inline i64 quadratic_form_count(const FinAbGroup& g) { return two_quotient_order(g) * sym_square_order(g); }

/// All quadratic forms on A. Generator choices q(e_i) = t/n_i (n_i odd) or
/// t/2n_i (n_i even) and cross terms b(e_i,e_j) = s/gcd(n_i,n_j) are run
/// through an odometer over (t_1..t_k, s_12, s_13, ..., s_{k-1,k}) with the
/// last slot fastest.
inline std::vector<QuadraticForm> enumerate_quadratic_forms(const FinAbGroup& g, const Config& cfg = {}) {
  require(g.order() <= cfg.element_cap, ErrorKind::CapExceeded, "|A| exceeds element cap");
  const i64 count = quadratic_form_count(g);
  require(static_cast<i128>(count) * g.order() <= cfg.table_cap, ErrorKind::CapExceeded,
          "form enumeration exceeds table cap");
  const auto& n = g.orders();
  const std::size_t k = g.rank();
  std::vector<i64> radix;
  for (std::size_t i = 0; i < k; ++i) radix.push_back(n[i] % 2 == 0 ? 2 * n[i] : n[i]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      pairs.emplace_back(i, j);
      radix.push_back(std::gcd(n[i], n[j]));
    }
  std::vector<QuadraticForm> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<i64> digit(radix.size(), 0);
  while (true) {
    std::vector<QZ> gens(k);
    for (std::size_t i = 0; i < k; ++i) gens[i] = QZ(digit[i], radix[i]);
    std::map<std::pair<std::size_t, std::size_t>, QZ> cross;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (digit[k + p] != 0) cross[pairs[p]] = QZ(digit[k + p], radix[k + p]);
    out.push_back(QuadraticForm::from_generators(g, gens, cross));
    std::size_t pos = radix.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < radix[pos]) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
    if (radix.empty()) return out;
  }
}

}  // namespace anyonkit
