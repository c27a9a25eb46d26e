#pragma once

// Dense normalized cochains A^{p1}|...|A^{pr} -> Q/Z, the bar coboundary, and
// the pentagon / hexagon verifiers. All identities are checked additively.

#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/qz.hpp>

#include <array>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace anyonkit {

namespace detail {

inline std::size_t checked_table_size(const FinAbGroup& g, int arity, const Config& cfg) {
  i128 n = 1;
  for (int i = 0; i < arity; ++i) {
    n *= g.order();
    require(n <= cfg.table_cap, ErrorKind::CapExceeded,
            "cochain table |A|^" + std::to_string(arity) + " exceeds table cap " + std::to_string(cfg.table_cap));
  }
  return static_cast<std::size_t>(n);
}

/// Advance an odometer over A^k; returns false after the last tuple.
inline bool next_tuple(std::vector<Elem>& t, Elem n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace detail

class Cochain {
 public:
  /// Takes a full table in index order; rejects nonzero values on tuples
  /// containing the identity.
  Cochain(FinAbGroup group, std::vector<int> shape, FractionTable values, const Config& cfg = {})
      : group_(std::move(group)), shape_(std::move(shape)), values_(std::move(values)) {
    for (int p : shape_) require(p >= 0, ErrorKind::InvalidArgument, "negative block size");
    arity_ = std::accumulate(shape_.begin(), shape_.end(), 0);
    std::size_t expected = detail::checked_table_size(group_, arity_, cfg);
    require(values_.size() == expected, ErrorKind::InvalidArgument,
            "cochain table has " + std::to_string(values_.size()) + " entries, expected " + std::to_string(expected));
    check_normalized();
  }

  static Cochain zero(const FinAbGroup& group, std::vector<int> shape, const Config& cfg = {}) {
    int arity = std::accumulate(shape.begin(), shape.end(), 0);
    return Cochain(group, std::move(shape), FractionTable(detail::checked_table_size(group, arity, cfg)), cfg);
  }

  /// Evaluates num(args) / den at every tuple of arguments.
  template <class F>
  static Cochain tabulate(const FinAbGroup& group, std::vector<int> shape, i64 den, F&& num, const Config& cfg = {}) {
    int arity = std::accumulate(shape.begin(), shape.end(), 0);
    std::size_t size = detail::checked_table_size(group, arity, cfg);
    std::vector<i64> nums(size);
    std::vector<Elem> args(arity, 0);
    for (std::size_t i = 0; i < size; ++i) {
      nums[i] = num(std::span<const Elem>(args));
      detail::next_tuple(args, static_cast<Elem>(group.order()));
    }
    return Cochain(group, std::move(shape), FractionTable(den, std::move(nums)), cfg);
  }

  const FinAbGroup& group() const { return group_; }
  const std::vector<int>& shape() const { return shape_; }
  int arity() const { return arity_; }
  const FractionTable& values() const { return values_; }
  i64 den() const { return values_.den(); }

  std::size_t flat_index(std::span<const Elem> args) const {
    std::size_t idx = 0;
    for (Elem a : args) idx = idx * group_.size() + a;
    return idx;
  }

  QZ at(std::span<const Elem> args) const {
    require(static_cast<int>(args.size()) == arity_, ErrorKind::InvalidArgument, "wrong number of arguments");
    return values_.at(flat_index(args));
  }
  QZ operator()(std::initializer_list<Elem> args) const { return at(std::span<const Elem>(args.begin(), args.size())); }

  std::vector<Elem> args_of(std::size_t flat) const {
    std::vector<Elem> args(arity_);
    for (int i = arity_; i-- > 0;) {
      args[i] = static_cast<Elem>(flat % group_.size());
      flat /= group_.size();
    }
    return args;
  }

  bool is_zero() const { return values_.den() == 1; }

  friend Cochain operator+(const Cochain& a, const Cochain& b) { return a.combined(b, 1); }
  friend Cochain operator-(const Cochain& a, const Cochain& b) { return a.combined(b, -1); }
  Cochain operator-() const { return scaled(-1); }
  Cochain scaled(i64 m) const { return Cochain(group_, shape_, values_.scaled(m)); }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.group_ == b.group_ && a.shape_ == b.shape_ && a.values_ == b.values_;
  }

  /// Precompose every argument with h: (h^* f)(x1..xn) = f(h x1, ..., h xn).
  Cochain pullback(const GroupHom& h, const Config& cfg = {}) const {
    require(h.codomain() == group_, ErrorKind::InvalidArgument, "pullback: codomain mismatch");
    auto t = h.table();
    const auto& raw = values_.raw();
    return tabulate(h.domain(), shape_, values_.den(), [&](std::span<const Elem> args) {
      std::size_t idx = 0;
      for (Elem a : args) idx = idx * group_.size() + t[a];
      return raw[idx];
    }, cfg);
  }

 private:
  Cochain combined(const Cochain& b, i64 kb) const {
    require(group_ == b.group_ && shape_ == b.shape_, ErrorKind::InvalidArgument, "cochain shape mismatch");
    return Cochain(group_, shape_, combine(values_, 1, b.values_, kb));
  }

  void check_normalized() const {
    if (is_zero() || arity_ == 0) return;
    const std::size_t n = group_.size();
    for (std::size_t flat = 0; flat < values_.size(); ++flat) {
      if (values_.raw(flat) == 0) continue;
      std::size_t f = flat;
      for (int i = 0; i < arity_; ++i, f /= n)
        require(f % n != 0, ErrorKind::NotNormalized, "nonzero value on a tuple containing the identity");
    }
  }

  FinAbGroup group_;
  std::vector<int> shape_;
  int arity_ = 0;
  FractionTable values_;
};

/// Bar coboundary (trivial action) applied to block `block` of f's shape; the
/// other blocks ride along. With a single block this is delta_n.
inline Cochain delta_block(const Cochain& f, std::size_t block, const Config& cfg = {}) {
  const auto& shape = f.shape();
  require(block < shape.size(), ErrorKind::InvalidArgument, "delta_block: no such block");
  std::vector<int> out_shape = shape;
  out_shape[block] += 1;
  const FinAbGroup& g = f.group();
  const int p = shape[block];
  if (p == 0) return Cochain::zero(g, out_shape, cfg);  // d0 vanishes for trivial action
  int offset = 0;
  for (std::size_t i = 0; i < block; ++i) offset += shape[i];
  const i64 den = f.den();
  const auto& raw = f.values().raw();
  std::vector<Elem> in(f.arity());
  auto value = [&](std::span<const Elem> out, int which) {
    // which = 0: drop first; 1..p: merge positions which-1, which; p+1: drop last.
    int w = 0;
    for (int i = 0; i < static_cast<int>(out.size()); ++i) {
      int local = i - offset;
      if (local < 0 || local > p) {
        in[w++] = out[i];
        continue;
      }
      if (which == 0 && local == 0) continue;
      if (which == p + 1 && local == p) continue;
      if (which >= 1 && which <= p && local == which) {
        in[w - 1] = g.add(in[w - 1], out[i]);
        continue;
      }
      in[w++] = out[i];
    }
    return raw[f.flat_index(in)];
  };
  return Cochain::tabulate(g, out_shape, den, [&](std::span<const Elem> out) {
    i64 s = value(out, 0);
    for (int i = 1; i <= p; ++i) s += (i % 2 ? -1 : 1) * value(out, i);
    s += ((p + 1) % 2 ? -1 : 1) * value(out, p + 1);
    return mod(s, den);
  }, cfg);
}

/// delta_n on a single-block cochain of shape (n).
inline Cochain delta(const Cochain& f, const Config& cfg = {}) {
  require(f.shape().size() == 1, ErrorKind::InvalidArgument, "delta expects shape (n)");
  return delta_block(f, 0, cfg);
}

/// Horizontal differential of the double complex: acts on the first block.
inline Cochain delta_h(const Cochain& f, const Config& cfg = {}) {
  require(f.shape().size() == 2, ErrorKind::InvalidArgument, "delta_h expects a two-block shape");
  return delta_block(f, 0, cfg);
}

/// Vertical differential: acts on the second block.
inline Cochain delta_v(const Cochain& f, const Config& cfg = {}) {
  require(f.shape().size() == 2, ErrorKind::InvalidArgument, "delta_v expects a two-block shape");
  return delta_block(f, 1, cfg);
}

namespace detail {

/// Numerators of several cochains over one common denominator.
struct CommonDen {
  i64 den = 1;
  std::vector<std::vector<i64>> nums;
};

inline CommonDen common_den(std::initializer_list<const Cochain*> cs) {
  CommonDen out;
  for (const Cochain* c : cs) out.den = checked_lcm(out.den, c->den(), Config{}.denominator_cap);
  for (const Cochain* c : cs) out.nums.push_back(c->values().numerators_over(out.den));
  return out;
}

}  // namespace detail

inline void require_shape(const Cochain& f, std::vector<int> shape, const char* what) {
  require(f.shape() == shape, ErrorKind::InvalidArgument, std::string(what) + ": wrong cochain shape");
}

/// True iff delta(omega) = 0, checked tuple by tuple without materializing delta(omega).
inline bool pentagon_check(const Cochain& omega) {
  require_shape(omega, {3}, "pentagon_check");
  const FinAbGroup& g = omega.group();
  const i64 den = omega.den();
  const auto& w = omega.values().raw();
  const std::size_t n = g.size();
  auto at = [&](Elem a, Elem b, Elem c) { return w[(static_cast<std::size_t>(a) * n + b) * n + c]; };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      Elem xy = g.add(x, y);
      for (Elem z = 1; z < n; ++z) {
        Elem yz = g.add(y, z);
        for (Elem t = 1; t < n; ++t) {
          i64 s = at(y, z, t) - at(xy, z, t) + at(x, yz, t) - at(x, y, g.add(z, t)) + at(x, y, z);
          if (mod(s, den) != 0) return false;
        }
      }
    }
  return true;
}

/// Both hexagon identities (abelian coboundary items (ii) and (iii) equal to zero):
///   c(x|z) - c(x|y+z) + c(x|y) + w(x,y,z) - w(y,x,z) + w(y,z,x) = 0
///   c(y|z) - c(x+y|z) + c(x|z) - w(x,y,z) + w(x,z,y) - w(z,x,y) = 0
/// Throws PentagonViolated when omega is not a 3-cocycle.
inline bool hexagon_check(const Cochain& omega, const Cochain& c) {
  require_shape(omega, {3}, "hexagon_check");
  require_shape(c, {1, 1}, "hexagon_check");
  require(omega.group() == c.group(), ErrorKind::InvalidArgument, "hexagon_check: group mismatch");
  require(pentagon_check(omega), ErrorKind::PentagonViolated, "omega is not a 3-cocycle");
  const FinAbGroup& g = omega.group();
  auto cd = detail::common_den({&omega, &c});
  const auto& w = cd.nums[0];
  const auto& cc = cd.nums[1];
  const std::size_t n = g.size();
  auto W = [&](Elem a, Elem b, Elem d) { return w[(static_cast<std::size_t>(a) * n + b) * n + d]; };
  auto C = [&](Elem a, Elem b) { return cc[static_cast<std::size_t>(a) * n + b]; };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      Elem xy = g.add(x, y);
      for (Elem z = 1; z < n; ++z) {
        i64 ii = C(x, z) - C(x, g.add(y, z)) + C(x, y) + W(x, y, z) - W(y, x, z) + W(y, z, x);
        if (mod(ii, cd.den) != 0) return false;
        i64 iii = C(y, z) - C(xy, z) + C(x, z) - W(x, y, z) + W(x, z, y) - W(z, x, y);
        if (mod(iii, cd.den) != 0) return false;
      }
    }
  return true;
}

/// omega' = omega + delta(u).
inline Cochain gauge_transform(const Cochain& omega, const Cochain& u, const Config& cfg = {}) {
  require_shape(omega, {3}, "gauge_transform");
  require_shape(u, {2}, "gauge_transform");
  return omega + delta(u, cfg);
}

/// c(x, y+z) = c(x,y) + c(x,z) and c(x+y, z) = c(x,z) + c(y,z) for all arguments.
inline bool is_biadditive(const Cochain& c) {
  require_shape(c, {1, 1}, "is_biadditive");
  const FinAbGroup& g = c.group();
  const auto& v = c.values().raw();
  const i64 den = c.den();
  const std::size_t n = g.size();
  auto C = [&](Elem a, Elem b) { return v[static_cast<std::size_t>(a) * n + b]; };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y)
      for (Elem z = 1; z < n; ++z) {
        if (mod(C(x, g.add(y, z)) - C(x, y) - C(x, z), den) != 0) return false;
        if (mod(C(g.add(x, y), z) - C(x, z) - C(y, z), den) != 0) return false;
      }
  return true;
}

/// An abelian 3-cocycle (omega, c): omega of shape (3), c of shape (1,1).
struct AbelianThreeCocycle {
  Cochain omega;
  Cochain c;

  /// Validates pentagon and hexagon; throws NotACocycle otherwise.
  static AbelianThreeCocycle make(Cochain omega, Cochain c) {
    require_shape(omega, {3}, "AbelianThreeCocycle");
    require_shape(c, {1, 1}, "AbelianThreeCocycle");
    require(pentagon_check(omega), ErrorKind::NotACocycle, "pentagon identity fails");
    require(hexagon_check(omega, c), ErrorKind::NotACocycle, "hexagon identities fail");
    return AbelianThreeCocycle{std::move(omega), std::move(c)};
  }

  static AbelianThreeCocycle trivial(const FinAbGroup& g, const Config& cfg = {}) {
    return AbelianThreeCocycle{Cochain::zero(g, {3}, cfg), Cochain::zero(g, {1, 1}, cfg)};
  }

  const FinAbGroup& group() const { return omega.group(); }

  bool verify() const { return pentagon_check(omega) && hexagon_check(omega, c); }

  AbelianThreeCocycle pullback(const GroupHom& h, const Config& cfg = {}) const {
    return AbelianThreeCocycle{omega.pullback(h, cfg), c.pullback(h, cfg)};
  }

  friend AbelianThreeCocycle operator+(const AbelianThreeCocycle& a, const AbelianThreeCocycle& b) {
    return AbelianThreeCocycle{a.omega + b.omega, a.c + b.c};
  }
  friend bool operator==(const AbelianThreeCocycle&, const AbelianThreeCocycle&) = default;
};

}  // namespace anyonkit
