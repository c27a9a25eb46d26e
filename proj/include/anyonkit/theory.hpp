#pragma once

// Abelian anyon theories (A, omega, c): spins, S/T data, modularity,
// direct sums and equivalence.

#include <anyonkit/builder.hpp>
#include <anyonkit/cochain.hpp>
#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/quadratic.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace anyonkit {

class AnyonTheory {
 public:
  /// Verifies pentagon and hexagon (NotACocycle otherwise).
  explicit AnyonTheory(AbelianThreeCocycle cocycle)
      : cocycle_(AbelianThreeCocycle::make(std::move(cocycle.omega), std::move(cocycle.c))),
        q_(trace_unchecked(cocycle_)),
        b_(polarize(q_)) {}

  static AnyonTheory from_quadratic(const QuadraticForm& q, const Config& cfg = {}) {
    return AnyonTheory(build_from_quadratic(q, cfg));
  }

  const FinAbGroup& group() const { return cocycle_.group(); }
  const AbelianThreeCocycle& cocycle() const { return cocycle_; }
  const QuadraticForm& q() const { return q_; }
  const BilinearForm& b() const { return b_; }

  /// Topological spin exponent: theta_a = exp(2 pi i q(a)).
  QZ spin(Elem a) const { return q_(a); }

 private:
  AbelianThreeCocycle cocycle_;
  QuadraticForm q_;
  BilinearForm b_;
};

/// A matrix of phases exp(2 pi i e) stored by exponent. A diagonal matrix
/// stores only its diagonal (off-diagonal entries are 0, not phase 1).
/// `inv_sqrt_order` marks the S normalization |A|^{-1/2}, kept symbolic.
struct PhaseMatrix {
  std::vector<GroupElement> labels;
  std::vector<QZ> exponents;  // row-major n*n, or n when diagonal
  bool diagonal = false;
  bool inv_sqrt_order = false;

  std::size_t dim() const { return labels.size(); }

  QZ exponent(std::size_t r, std::size_t c) const {
    if (diagonal) {
      require(r == c, ErrorKind::InvalidArgument, "off-diagonal entry of a diagonal phase matrix has no exponent");
      return exponents[r];
    }
    return exponents[r * dim() + c];
  }

  /// Complex entries, row-major.
  std::vector<std::complex<double>> render() const {
    const std::size_t n = dim();
    std::vector<std::complex<double>> out(n * n, 0.0);
    const double scale = inv_sqrt_order ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;
    auto phase = [&](const QZ& e) {
      double t = 2.0 * std::numbers::pi * static_cast<double>(e.num()) / static_cast<double>(e.den());
      return scale * std::complex<double>(std::cos(t), std::sin(t));
    };
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (diagonal && r != c) continue;
        out[r * n + c] = phase(exponent(r, c));
      }
    return out;
  }
};

/// S_ab = |A|^{-1/2} exp(2 pi i b_q(a,b)).
inline PhaseMatrix s_matrix(const AnyonTheory& t) {
  PhaseMatrix m;
  m.labels = enumerate_elements(t.group(), Config{.element_cap = std::int64_t{1} << 40});
  m.inv_sqrt_order = true;
  const Elem n = static_cast<Elem>(t.group().order());
  m.exponents.reserve(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) m.exponents.push_back(t.b()(a, b));
  return m;
}

/// T_ab = delta_ab exp(2 pi i q(a)).
inline PhaseMatrix t_matrix(const AnyonTheory& t) {
  PhaseMatrix m;
  m.labels = enumerate_elements(t.group(), Config{.element_cap = std::int64_t{1} << 40});
  m.diagonal = true;
  for (Elem a = 0; a < t.group().order(); ++a) m.exponents.push_back(t.q()(a));
  return m;
}

/// b_q non-degenerate, decided from the radical exactly.
inline bool is_modular(const AnyonTheory& t) { return t.b().radical().size() == 1; }

/// b_q identically zero; equivalently c(a,b) = -c(b,a).
inline bool is_symmetric_theory(const AnyonTheory& t) {
  const bool b_zero = t.b().is_zero();
  const Cochain& c = t.cocycle().c;
  const Elem n = static_cast<Elem>(t.group().order());
  bool antisym = true;
  for (Elem a = 0; a < n && antisym; ++a)
    for (Elem x = 0; x < n && antisym; ++x) antisym = (c({a, x}) + c({x, a})).is_zero();
  require(b_zero == antisym, ErrorKind::Internal, "b_q and the braiding disagree on symmetry");
  return b_zero;
}

/// Theory on A + A' with blockwise-additive omega and c.
inline AnyonTheory direct_sum(const AnyonTheory& t1, const AnyonTheory& t2, const Config& cfg = {}) {
  const FinAbGroup& a = t1.group();
  const FinAbGroup& b = t2.group();
  FinAbGroup s = FinAbGroup::direct_sum(a, b);
  auto p1 = detail::summand_projection(s, a, 0);
  auto p2 = detail::summand_projection(s, b, a.rank());
  return AnyonTheory(t1.cocycle().pullback(p1, cfg) + t2.cocycle().pullback(p2, cfg));
}

/// First isomorphism f (canonical search order) with to(f(x)) = from(x), or none.
inline std::optional<GroupHom> find_isometry(const QuadraticForm& from, const QuadraticForm& to, const Config& cfg = {}) {
  const FinAbGroup& a = from.group();
  const FinAbGroup& b = to.group();
  require(a.order() <= cfg.equivalence_cap, ErrorKind::CapExceeded,
          "|A| = " + std::to_string(a.order()) + " exceeds equivalence cap " + std::to_string(cfg.equivalence_cap));
  if (a.order() != b.order()) return std::nullopt;
  auto gen_q = from.gen_values();
  std::vector<std::vector<QZ>> gen_b(a.rank(), std::vector<QZ>(a.rank()));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < i; ++j) gen_b[i][j] = from.polar(a.generator(i), a.generator(j));
  std::optional<GroupHom> found;
  search_isomorphisms(
      a, b,
      [&](std::size_t i, const std::vector<Elem>& im) {
        if (to(im[i]) != gen_q[i]) return false;
        for (std::size_t j = 0; j < i; ++j)
          if (to.polar(im[i], im[j]) != gen_b[i][j]) return false;
        return true;
      },
      [&](GroupHom h) {
        found = std::move(h);
        return false;
      });
  if (found) require(to.pullback(*found) == from, ErrorKind::Internal, "isometry search returned a non-isometry");
  return found;
}

/// Equivalence is decided on quadratic forms alone.
inline std::optional<GroupHom> are_equivalent(const AnyonTheory& t1, const AnyonTheory& t2, const Config& cfg = {}) {
  return find_isometry(t1.q(), t2.q(), cfg);
}

}  // namespace anyonkit
