#pragma once

// Explicit abelian 3-cocycles realizing a prescribed quadratic form, with the
// associator valued in {0, 1/2}.

#include <anyonkit/cochain.hpp>
#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/quadratic.hpp>

#include <string>
#include <vector>

namespace anyonkit {

/// On Z/n, n even, u odd: omega(a,b,c) = a * floor((b+c)/n) / 2 and
/// c(a,b) = u a b / 2n for representatives in [0, n). For n = 2 the
/// associator is the single value omega(1,1,1) = 1/2. The trace is u m^2 / 2n.
inline AbelianThreeCocycle even_cyclic_cocycle(i64 n, i64 u, const Config& cfg = {}) {
  require(n >= 2 && n % 2 == 0, ErrorKind::OddModulus, "even_cyclic_cocycle needs an even modulus, got " + std::to_string(n));
  require(mod(u, 2) == 1, ErrorKind::EvenMultiplier, "even_cyclic_cocycle needs an odd multiplier, got " + std::to_string(u));
  FinAbGroup g({n});
  auto omega = Cochain::tabulate(g, {3}, 2, [&](std::span<const Elem> x) {
    return static_cast<i64>(x[0]) * ((x[1] + x[2]) / n);
  }, cfg);
  const i64 uu = mod(u, 2 * n);
  auto c = Cochain::tabulate(g, {1, 1}, 2 * n, [&](std::span<const Elem> x) {
    return mulmod(uu, static_cast<i64>(x[0]) * x[1], 2 * n);
  }, cfg);
  return AbelianThreeCocycle::make(std::move(omega), std::move(c));
}

/// (0, c) for a biadditive c, symmetric or not.
inline AbelianThreeCocycle bicharacter_cocycle(const Cochain& c, const Config& cfg = {}) {
  require_shape(c, {1, 1}, "bicharacter_cocycle");
  require(is_biadditive(c), ErrorKind::NotBiadditive, "braiding table is not biadditive");
  return AbelianThreeCocycle{Cochain::zero(c.group(), {3}, cfg), c};
}

inline AbelianThreeCocycle bicharacter_cocycle(const BilinearForm& b, const Config& cfg = {}) {
  return bicharacter_cocycle(b.as_cochain(), cfg);
}

namespace detail {

/// Projection of a direct sum onto the summand whose factors start at `offset`.
inline GroupHom summand_projection(const FinAbGroup& sum, const FinAbGroup& part, std::size_t offset) {
  std::vector<Elem> im(sum.rank(), 0);
  for (std::size_t i = 0; i < part.rank(); ++i) im[offset + i] = part.generator(i);
  return GroupHom(sum, part, std::move(im));
}

inline GroupHom summand_inclusion(const FinAbGroup& part, const FinAbGroup& sum, std::size_t offset) {
  std::vector<Elem> im(part.rank());
  for (std::size_t i = 0; i < part.rank(); ++i) im[i] = sum.generator(offset + i);
  return GroupHom(part, sum, std::move(im));
}

/// Odd order: c = ((m+1)/2) b_q with m the exponent, so c(a,a) = (m+1) q(a) = q(a).
inline AbelianThreeCocycle build_odd(const QuadraticForm& q, const Config& cfg) {
  const FinAbGroup& g = q.group();
  const i64 half = (g.exponent() + 1) / 2;
  auto b = polarize(q);
  Cochain c(g, {1, 1}, b.values().scaled(half), cfg);
  return AbelianThreeCocycle{Cochain::zero(g, {3}, cfg), std::move(c)};
}

/// 2-group: q = q0 + j(y) with q0 in Quad0 realized by the triangular
/// c-formula and each j(e_i) by a pulled-back even cyclic cocycle.
inline AbelianThreeCocycle build_two(const QuadraticForm& q, const Config& cfg) {
  const FinAbGroup& g = q.group();
  const std::size_t k = g.rank();
  const auto& n = g.orders();
  std::vector<QZ> q0_gen(k);
  std::vector<bool> y(k);
  for (std::size_t i = 0; i < k; ++i) {
    QZ qi = q(g.generator(i));
    y[i] = !qi.scaled(n[i]).is_zero();
    q0_gen[i] = y[i] ? qi - QZ(1, 2 * n[i]) : qi;
  }
  std::vector<std::vector<QZ>> b(k, std::vector<QZ>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) b[i][j] = q.polar(g.generator(i), g.generator(j));

  i64 den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    den = checked_lcm(den, q0_gen[i].den(), cfg.denominator_cap);
    for (std::size_t j = i + 1; j < k; ++j) den = checked_lcm(den, b[i][j].den(), cfg.denominator_cap);
  }
  auto c0 = Cochain::tabulate(g, {1, 1}, den, [&](std::span<const Elem> xy) {
    auto x = g.coords(xy[0]);
    auto z = g.coords(xy[1]);
    i128 s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      s += static_cast<i128>(x[i] * z[i] % den) * (q0_gen[i].num() * (den / q0_gen[i].den()));
      for (std::size_t j = i + 1; j < k; ++j)
        s += static_cast<i128>(x[i] * z[j] % den) * (b[i][j].num() * (den / b[i][j].den()));
      s %= den;
    }
    return static_cast<i64>(s);
  }, cfg);
  AbelianThreeCocycle out{Cochain::zero(g, {3}, cfg), std::move(c0)};
  for (std::size_t i = 0; i < k; ++i) {
    if (!y[i]) continue;
    FinAbGroup cyc({n[i]});
    std::vector<Elem> im(k, 0);
    im[i] = cyc.generator(0);
    GroupHom pi(g, cyc, std::move(im));
    out = out + even_cyclic_cocycle(n[i], 1, cfg).pullback(pi, cfg);
  }
  return out;
}

}  // namespace detail

/// An abelian 3-cocycle whose trace is exactly q. The group is split by CRT
/// into its 2-part and odd part, each part is built separately, and the sum
/// is pulled back to the user's factors. The result is re-verified.
inline AbelianThreeCocycle build_from_quadratic(const QuadraticForm& q, const Config& cfg = {}) {
  const FinAbGroup& a = q.group();
  TwoOddSplit split = decompose_two_odd(a);
  const FinAbGroup& target = split.to_split.codomain();
  QuadraticForm qt = q.pullback(split.to_split.inverse());

  auto q2 = qt.pullback(detail::summand_inclusion(split.two_part, target, 0));
  auto qo = qt.pullback(detail::summand_inclusion(split.odd_part, target, split.two_part.rank()));
  // Orthogonality of coprime parts means qt is q2 + qo on the nose.
  auto p2 = detail::summand_projection(target, split.two_part, 0);
  auto po = detail::summand_projection(target, split.odd_part, split.two_part.rank());

  AbelianThreeCocycle built = detail::build_two(q2, cfg).pullback(p2, cfg) + detail::build_odd(qo, cfg).pullback(po, cfg);
  AbelianThreeCocycle out = built.pullback(split.to_split, cfg);
  require(out.verify(), ErrorKind::Internal, "builder produced a non-cocycle");
  require(trace_unchecked(out) == q, ErrorKind::Internal, "builder trace differs from the input form");
  return out;
}

}  // namespace anyonkit
