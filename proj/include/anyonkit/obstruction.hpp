#pragma once

// The obstruction to braiding an associator. tau3 sends omega to the pair
// (alpha, beta) in the total complex; omega admits a braiding iff that pair is
// a total coboundary, which we decide by solving the hexagon system directly
// (solve_braiding) or in two stages (partial_obstruction_1, then
// second_obstruction).
//
// Sign convention, matching hexagon_check:
//   delta_v(c) = -alpha,   delta_h(c) = beta.
//
// Unknown values are sought in (1/M)Z/Z with M = L |A| (or L exp(A)), L the
// lcm of the denominators of omega. For any ℚ/Z solution c, L c is a
// bicharacter and so exp(A) L c = 0: the lattice always contains every
// solution. The same bound suffices for 2-coboundaries since exp(A) kills
// H^2(A, Q/Z) for abelian A.

#include <anyonkit/cochain.hpp>
#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/linear_mod.hpp>
#include <anyonkit/qz.hpp>

#include <optional>
#include <string>
#include <vector>

namespace anyonkit {

struct TotalThreeCocycle {
  Cochain alpha;  // shape (1,2)
  Cochain beta;   // shape (2,1)

  /// Slice cocycle conditions and delta_h(alpha) = -delta_v(beta).
  bool verify() const {
    auto da = delta_v(alpha);
    auto db = delta_h(beta);
    if (!da.is_zero() || !db.is_zero()) return false;
    return (delta_h(alpha) + delta_v(beta)).is_zero();
  }
};

struct ObstructionReport {
  bool total_vanishes = false;
  bool partial1_vanishes = false;
  std::optional<bool> theta_vanishes;
  std::optional<Cochain> witness_braiding;
  i64 modulus_used = 1;
  /// Denominator of the returned witness; recorded to compare with the bound.
  std::optional<i64> witness_denominator;
};

struct PartialObstruction {
  bool vanishes = false;
  std::optional<Cochain> eta;
};

struct SecondObstruction {
  Cochain theta;
  bool vanishes = false;
  std::optional<Cochain> l;
  std::optional<Cochain> braiding;  // eta - l when vanishes
};

/// alpha(x|y,z) = w(x,y,z) - w(y,x,z) + w(y,z,x)
/// beta(x,y|z)  = w(x,y,z) - w(x,z,y) + w(z,x,y)
inline TotalThreeCocycle tau3(const Cochain& omega, const Config& cfg = {}) {
  require_shape(omega, {3}, "tau3");
  require(pentagon_check(omega), ErrorKind::PentagonViolated, "tau3 needs a 3-cocycle");
  const std::size_t n = omega.group().size();
  const auto& w = omega.values().raw();
  const i64 den = omega.den();
  auto W = [&](Elem a, Elem b, Elem c) { return w[(static_cast<std::size_t>(a) * n + b) * n + c]; };
  auto alpha = Cochain::tabulate(omega.group(), {1, 2}, den, [&](std::span<const Elem> t) {
    return mod(W(t[0], t[1], t[2]) - W(t[1], t[0], t[2]) + W(t[1], t[2], t[0]), den);
  }, cfg);
  auto beta = Cochain::tabulate(omega.group(), {2, 1}, den, [&](std::span<const Elem> t) {
    return mod(W(t[0], t[1], t[2]) - W(t[0], t[2], t[1]) + W(t[2], t[0], t[1]), den);
  }, cfg);
  return TotalThreeCocycle{std::move(alpha), std::move(beta)};
}

/// The associator of an abelian 3-cocycle.
inline Cochain suspension(const AbelianThreeCocycle& t) { return t.omega; }

inline i64 solving_modulus(const FinAbGroup& g, i64 den, const Config& cfg) {
  i64 f = cfg.modulus_policy == ModulusPolicy::order ? g.order() : g.exponent();
  require(static_cast<i128>(den) * f <= cfg.denominator_cap, ErrorKind::CapExceeded, "solving modulus exceeds denominator cap");
  return den * f;
}

namespace detail {

/// A subgroup of (Z/M)^N given by generators of known order, used to pick
/// the lexicographically least point of a coset base + K.
struct KernelBasis {
  std::vector<i64> radix;
  std::vector<std::vector<i64>> gens;
};

/// Least vector of base + K in lexicographic order. Returns base unchanged
/// when |K| * N exceeds the search cap.
inline std::vector<i64> lex_least(std::vector<i64> base, const KernelBasis& k, i64 modulus, const Config& cfg) {
  i128 size = 1;
  for (i64 r : k.radix) {
    size *= r;
    if (size * static_cast<i128>(base.size()) > cfg.witness_search_cap) return base;
  }
  const std::size_t nv = base.size(), ng = k.radix.size();
  std::vector<i64> best = base, cur = base;
  std::vector<i64> digit(ng, 0);
  while (true) {
    std::size_t pos = ng;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < k.radix[pos]) break;
      digit[pos] = 0;
      if (pos == 0) return best;
    }
    if (ng == 0) return best;
    for (std::size_t i = 0; i < nv; ++i) {
      i128 v = base[i];
      for (std::size_t g = 0; g < ng; ++g)
        if (digit[g]) v += static_cast<i128>(digit[g]) * k.gens[g][i];
      cur[i] = static_cast<i64>(v % modulus);
      if (cur[i] != best[i]) {
        if (cur[i] < best[i]) {
          for (std::size_t j = i + 1; j < nv; ++j) {
            i128 w = base[j];
            for (std::size_t g = 0; g < ng; ++g)
              if (digit[g]) w += static_cast<i128>(digit[g]) * k.gens[g][j];
            cur[j] = static_cast<i64>(w % modulus);
          }
          best = cur;
        }
        break;
      }
    }
  }
}

/// Bicharacters as vectors over the unknowns c(a|b), a,b != 0, in flat order.
inline KernelBasis bicharacter_basis(const FinAbGroup& g, i64 modulus) {
  KernelBasis k;
  const Elem n = static_cast<Elem>(g.order());
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) {
      i64 d = std::gcd(g.orders()[i], g.orders()[j]);
      std::vector<i64> v;
      v.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
      for (Elem a = 1; a < n; ++a)
        for (Elem b = 1; b < n; ++b) v.push_back(mulmod(g.coord(a, i) * g.coord(b, j) % d, modulus / d, modulus));
      k.radix.push_back(d);
      k.gens.push_back(std::move(v));
    }
  return k;
}

/// Characters killed by `torsion` (0 means all characters), over unknowns f(b), b != 0.
inline KernelBasis character_basis(const FinAbGroup& g, i64 modulus, i64 torsion) {
  KernelBasis k;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    i64 d = torsion == 0 ? g.orders()[i] : std::gcd(g.orders()[i], torsion);
    if (d == 1) continue;
    std::vector<i64> v;
    for (Elem b = 1; b < g.order(); ++b) v.push_back(mulmod(g.coord(b, i), modulus / d, modulus));
    k.radix.push_back(d);
    k.gens.push_back(std::move(v));
  }
  return k;
}

/// Solve delta(f)(y,z) = f(z) - f(y+z) + f(y) = rhs(y,z) for f: A -> (1/M)Z/Z,
/// optionally with torsion * f = 0; returns the lexicographically least f
/// as numerators over M for b = 1..|A|-1.
template <class Rhs>
std::optional<std::vector<i64>> solve_one_cochain(const FinAbGroup& g, i64 modulus, Rhs&& rhs, i64 torsion,
                                                  const Config& cfg) {
  const Elem n = static_cast<Elem>(g.order());
  ModularSystem sys(n - 1, modulus);
  for (Elem y = 1; y < n; ++y)
    for (Elem z = 1; z < n; ++z) {
      Elem yz = g.add(y, z);
      std::vector<ModularSystem::Term> t{{z - 1, 1}, {y - 1, 1}};
      if (yz != 0) t.push_back({yz - 1, -1});
      sys.add_equation(std::move(t), rhs(y, z));
    }
  if (torsion != 0)
    for (Elem b = 1; b < n; ++b) sys.add_equation({{b - 1, torsion}}, 0);
  auto sol = sys.solve(cfg);
  if (!sol) return std::nullopt;
  return lex_least(std::move(*sol), character_basis(g, modulus, torsion), modulus, cfg);
}

/// Unknown vector over a,b != 0 expanded into a full normalized (1,1) table.
inline Cochain two_arg_table(const FinAbGroup& g, std::vector<int> shape, i64 modulus, const std::vector<i64>& x,
                             const Config& cfg) {
  const std::size_t n = g.size();
  std::vector<i64> nums(n * n, 0);
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) nums[a * n + b] = x[(a - 1) * (n - 1) + (b - 1)];
  return Cochain(g, std::move(shape), FractionTable(modulus, std::move(nums)), cfg);
}

inline bool linear_in_last(const Cochain& f) {
  const FinAbGroup& g = f.group();
  const std::size_t n = g.size();
  const auto& v = f.values().raw();
  const i64 den = f.den();
  const std::size_t rows = f.values().size() / n;
  for (std::size_t r = 0; r < rows; ++r)
    for (Elem z = 1; z < n; ++z)
      for (Elem w = 1; w < n; ++w)
        if (mod(v[r * n + g.add(z, w)] - v[r * n + z] - v[r * n + w], den) != 0) return false;
  return true;
}

}  // namespace detail

/// Each slice alpha(a|-,-) must be a 2-coboundary: finds eta with
/// delta_v(eta) = -alpha, slice by slice, each slice lexicographically least.
inline PartialObstruction partial_obstruction_1(const Cochain& omega, const Config& cfg = {}) {
  auto t = tau3(omega, cfg);
  const FinAbGroup& g = omega.group();
  const i64 M = solving_modulus(g, omega.den(), cfg);
  const Elem n = static_cast<Elem>(g.order());
  auto alpha = t.alpha.values().numerators_over(M);
  std::vector<i64> eta((n - 1) * (n - 1), 0);
  for (Elem a = 1; a < n; ++a) {
    auto f = detail::solve_one_cochain(g, M, [&](Elem y, Elem z) {
      return -alpha[(static_cast<std::size_t>(a) * n + y) * n + z];
    }, 0, cfg);
    if (!f) return PartialObstruction{false, std::nullopt};
    std::copy(f->begin(), f->end(), eta.begin() + static_cast<std::ptrdiff_t>((a - 1) * (n - 1)));
  }
  return PartialObstruction{true, detail::two_arg_table(g, {1, 1}, M, eta, cfg)};
}

/// theta = delta_h(eta) - beta, which is linear in its last argument. It
/// vanishes iff theta = delta_h(l) for some l linear in its second argument;
/// then c = eta - l solves both hexagon equations.
inline SecondObstruction second_obstruction(const Cochain& omega, const Cochain& eta, const Config& cfg = {}) {
  require_shape(eta, {1, 1}, "second_obstruction");
  auto t = tau3(omega, cfg);
  require(delta_v(eta, cfg) == -t.alpha, ErrorKind::EtaMismatch, "eta does not satisfy delta_v(eta) = -alpha");
  const FinAbGroup& g = omega.group();
  Cochain theta = delta_h(eta, cfg) - t.beta;
  require(detail::linear_in_last(theta), ErrorKind::Internal, "theta is not linear in its last argument");

  const std::size_t n = g.size();
  const i64 M = solving_modulus(g, theta.den(), cfg);
  auto th = theta.values().numerators_over(M);
  std::vector<i64> l(n * n, 0);
  for (std::size_t k = 0; k < g.rank(); ++k) {
    const Elem ek = g.generator(k);
    auto f = detail::solve_one_cochain(g, M, [&](Elem x, Elem y) {
      return th[(static_cast<std::size_t>(x) * n + y) * n + ek];
    }, g.orders()[k], cfg);
    if (!f) return SecondObstruction{std::move(theta), false, std::nullopt, std::nullopt};
    for (Elem x = 1; x < n; ++x)
      for (Elem z = 1; z < n; ++z)
        l[x * n + z] = mod(l[x * n + z] + mulmod(g.coord(z, k), (*f)[x - 1], M), M);
  }
  Cochain lc(g, {1, 1}, FractionTable(M, std::move(l)), cfg);
  Cochain c = eta - lc;
  require(hexagon_check(omega, c), ErrorKind::Internal, "staged braiding fails the hexagon check");
  return SecondObstruction{std::move(theta), true, std::move(lc), std::move(c)};
}

/// Runs partial obstruction 1 and, if it vanishes, the second obstruction.
inline ObstructionReport staged_braiding(const Cochain& omega, const Config& cfg = {}) {
  require(pentagon_check(omega), ErrorKind::PentagonViolated, "omega is not a 3-cocycle");
  ObstructionReport r;
  r.modulus_used = solving_modulus(omega.group(), omega.den(), cfg);
  auto p1 = partial_obstruction_1(omega, cfg);
  r.partial1_vanishes = p1.vanishes;
  if (!p1.vanishes) return r;
  auto s = second_obstruction(omega, *p1.eta, cfg);
  r.theta_vanishes = s.vanishes;
  if (s.vanishes) {
    r.total_vanishes = true;
    r.witness_denominator = s.braiding->den();
    r.witness_braiding = std::move(s.braiding);
  }
  return r;
}

/// Solves both hexagon equations for c at once. On success the witness is
/// the lexicographically least solution over the unknowns c(a|b), a,b != 0
/// (or, past the search cap, the solver's canonical one). On failure the
/// staged diagnostics are attached.
inline ObstructionReport solve_braiding(const Cochain& omega, const Config& cfg = {}) {
  auto t = tau3(omega, cfg);
  const FinAbGroup& g = omega.group();
  const Elem n = static_cast<Elem>(g.order());
  const i64 M = solving_modulus(g, omega.den(), cfg);
  ObstructionReport r;
  r.modulus_used = M;
  auto alpha = t.alpha.values().numerators_over(M);
  auto beta = t.beta.values().numerators_over(M);
  auto var = [&](Elem a, Elem b) { return static_cast<std::size_t>(a - 1) * (n - 1) + (b - 1); };
  ModularSystem sys(static_cast<std::size_t>(n - 1) * (n - 1), M);
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      Elem xy = g.add(x, y);
      for (Elem z = 1; z < n; ++z) {
        Elem yz = g.add(y, z);
        const std::size_t at = (static_cast<std::size_t>(x) * n + y) * n + z;
        // c(x|z) - c(x|y+z) + c(x|y) = -alpha(x|y,z)
        std::vector<ModularSystem::Term> ii{{var(x, z), 1}, {var(x, y), 1}};
        if (yz != 0) ii.push_back({var(x, yz), -1});
        sys.add_equation(std::move(ii), -alpha[at]);
        // c(y|z) - c(x+y|z) + c(x|z) = beta(x,y|z)
        std::vector<ModularSystem::Term> iii{{var(y, z), 1}, {var(x, z), 1}};
        if (xy != 0) iii.push_back({var(xy, z), -1});
        sys.add_equation(std::move(iii), beta[at]);
      }
    }
  auto sol = sys.solve(cfg);
  if (!sol) {
    auto staged = staged_braiding(omega, cfg);
    r.partial1_vanishes = staged.partial1_vanishes;
    r.theta_vanishes = staged.theta_vanishes;
    return r;
  }
  auto best = detail::lex_least(std::move(*sol), detail::bicharacter_basis(g, M), M, cfg);
  Cochain c = detail::two_arg_table(g, {1, 1}, M, best, cfg);
  require(hexagon_check(omega, c), ErrorKind::Internal, "solver witness fails the hexagon check");
  r.total_vanishes = true;
  r.partial1_vanishes = true;
  r.theta_vanishes = true;
  r.witness_denominator = c.den();
  r.witness_braiding = std::move(c);
  return r;
}

/// Some u of shape (2) with delta(u) = target, if one exists.
inline std::optional<Cochain> solve_coboundary(const Cochain& target, const Config& cfg = {}) {
  require_shape(target, {3}, "solve_coboundary");
  const FinAbGroup& g = target.group();
  const Elem n = static_cast<Elem>(g.order());
  const i64 M = solving_modulus(g, target.den(), cfg);
  auto w = target.values().numerators_over(M);
  auto var = [&](Elem a, Elem b) { return static_cast<std::size_t>(a - 1) * (n - 1) + (b - 1); };
  ModularSystem sys(static_cast<std::size_t>(n - 1) * (n - 1), M);
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      Elem xy = g.add(x, y);
      for (Elem z = 1; z < n; ++z) {
        Elem yz = g.add(y, z);
        // u(y,z) - u(x+y,z) + u(x,y+z) - u(x,y)
        std::vector<ModularSystem::Term> t{{var(y, z), 1}, {var(x, y), -1}};
        if (xy != 0) t.push_back({var(xy, z), -1});
        if (yz != 0) t.push_back({var(x, yz), 1});
        sys.add_equation(std::move(t), w[(static_cast<std::size_t>(x) * n + y) * n + z]);
      }
    }
  auto sol = sys.solve(cfg);
  if (!sol) return std::nullopt;
  Cochain u = detail::two_arg_table(g, {2}, M, *sol, cfg);
  require(delta(u, cfg) == target, ErrorKind::Internal, "coboundary solution does not reproduce the target");
  return u;
}

inline bool cohomologous(const Cochain& omega1, const Cochain& omega2, const Config& cfg = {}) {
  return solve_coboundary(omega1 - omega2, cfg).has_value();
}

}  // namespace anyonkit
