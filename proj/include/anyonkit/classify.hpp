#pragma once

// The prime catalog (odd cyclic, 2-cyclic, E_k, F_k) and decomposition of a
// modular theory into catalog factors.

#include <anyonkit/builder.hpp>
#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/quadratic.hpp>
#include <anyonkit/theory.hpp>

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace anyonkit {

/// Euler's criterion.
inline int legendre(i64 a, i64 p) {
  require(p > 2 && is_prime(p), ErrorKind::NotOddPrime, "legendre: " + std::to_string(p) + " is not an odd prime");
  i64 r = 1, base = mod(a, p), e = (p - 1) / 2;
  if (base == 0) return 0;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

enum class PrimeKind { odd_cyclic, two_cyclic, E, F };

constexpr std::string_view to_string(PrimeKind k) {
  switch (k) {
    case PrimeKind::odd_cyclic: return "odd_cyclic";
    case PrimeKind::two_cyclic: return "two_cyclic";
    case PrimeKind::E: return "E";
    case PrimeKind::F: return "F";
  }
  return "?";
}

struct PrimeLabel {
  PrimeKind kind = PrimeKind::odd_cyclic;
  i64 p = 2;
  int k = 1;
  std::optional<i64> epsilon;  // +-1 for odd_cyclic, one of 1,-1,5,-5 for two_cyclic

  static PrimeLabel odd(i64 p, int k, i64 eps) { return {PrimeKind::odd_cyclic, p, k, eps}; }
  static PrimeLabel two(int k, i64 eps) { return {PrimeKind::two_cyclic, 2, k, eps}; }
  static PrimeLabel e(int k) { return {PrimeKind::E, 2, k, std::nullopt}; }
  static PrimeLabel f(int k) { return {PrimeKind::F, 2, k, std::nullopt}; }

  /// Sort key (p, k, kind, epsilon).
  friend auto operator<=>(const PrimeLabel& a, const PrimeLabel& b) {
    return std::tuple(a.p, a.k, static_cast<int>(a.kind), a.epsilon.value_or(0)) <=>
           std::tuple(b.p, b.k, static_cast<int>(b.kind), b.epsilon.value_or(0));
  }
  friend bool operator==(const PrimeLabel&, const PrimeLabel&) = default;

  std::string describe() const {
    switch (kind) {
      case PrimeKind::odd_cyclic:
      case PrimeKind::two_cyclic:
        return "w_{" + std::to_string(p) + "," + std::to_string(k) + "}^" + std::to_string(*epsilon);
      case PrimeKind::E: return "E_" + std::to_string(k);
      case PrimeKind::F: return "F_" + std::to_string(k);
    }
    return "?";
  }
};

namespace detail {

inline void validate_label(const PrimeLabel& l) {
  require(l.k >= 1, ErrorKind::BadEpsilon, "label exponent k must be >= 1");
  switch (l.kind) {
    case PrimeKind::odd_cyclic:
      require(l.p > 2 && is_prime(l.p), ErrorKind::NotOddPrime, "odd cyclic label needs an odd prime");
      require(l.epsilon && (*l.epsilon == 1 || *l.epsilon == -1), ErrorKind::BadEpsilon, "odd cyclic epsilon must be +1 or -1");
      break;
    case PrimeKind::two_cyclic: {
      require(l.p == 2, ErrorKind::BadEpsilon, "2-cyclic label has p = 2");
      require(l.epsilon.has_value(), ErrorKind::BadEpsilon, "2-cyclic label needs epsilon");
      i64 e = *l.epsilon;
      require(e == 1 || e == -1 || e == 5 || e == -5, ErrorKind::BadEpsilon, "2-cyclic epsilon must be one of 1, -1, 5, -5");
      require(l.k >= 2 || (e != 5 && e != -5), ErrorKind::BadEpsilon, "epsilon = +-5 needs k >= 2");
      break;
    }
    case PrimeKind::E:
    case PrimeKind::F:
      require(l.p == 2, ErrorKind::BadEpsilon, "E/F labels have p = 2");
      require(!l.epsilon.has_value(), ErrorKind::BadEpsilon, "E/F labels carry no epsilon");
      break;
  }
}

inline bool multiplier_ok(const PrimeLabel& l, i64 u) {
  if (l.kind == PrimeKind::odd_cyclic) return mod(u, l.p) != 0 && legendre(2 * u, l.p) == *l.epsilon;
  if (l.kind == PrimeKind::two_cyclic) return mod(u, 8) == mod(*l.epsilon, 8);
  return false;
}

inline i64 default_multiplier(const PrimeLabel& l) {
  for (i64 u = 1;; ++u)
    if (multiplier_ok(l, u)) return u;
}

}  // namespace detail

/// The catalog quadratic form for a label:
///   odd_cyclic: Z/p^k, q(x) = u x^2 / p^k with legendre(2u, p) = epsilon
///   two_cyclic: Z/2^k, q(x) = u x^2 / 2^{k+1} with u = epsilon mod 8
///   E_k: (Z/2^k)^2, q(x) = x1 x2 / 2^k
///   F_k: (Z/2^k)^2, q(x) = (x1^2 + x1 x2 + x2^2) / 2^k
inline AnyonTheory catalog_theory(const PrimeLabel& l, std::optional<i64> u = std::nullopt, const Config& cfg = {}) {
  detail::validate_label(l);
  const i64 pk = ipow(l.p, l.k);
  if (l.kind == PrimeKind::odd_cyclic || l.kind == PrimeKind::two_cyclic) {
    if (u) require(detail::multiplier_ok(l, *u), ErrorKind::BadMultiplier, "multiplier violates the label's condition");
    const i64 m = u ? *u : detail::default_multiplier(l);
    if (l.kind == PrimeKind::two_cyclic) return AnyonTheory(even_cyclic_cocycle(pk, m, cfg));
    FinAbGroup g({pk});
    auto c = Cochain::tabulate(g, {1, 1}, pk, [&](std::span<const Elem> x) {
      return mulmod(mod(m, pk), static_cast<i64>(x[0]) * x[1], pk);
    }, cfg);
    return AnyonTheory(bicharacter_cocycle(c, cfg));
  }
  require(!u.has_value(), ErrorKind::BadMultiplier, "E/F labels take no multiplier");
  FinAbGroup g({pk, pk});
  const bool f = l.kind == PrimeKind::F;
  auto c = Cochain::tabulate(g, {1, 1}, pk, [&](std::span<const Elem> xy) {
    i64 x1 = g.coord(xy[0], 0), x2 = g.coord(xy[0], 1), y1 = g.coord(xy[1], 0), y2 = g.coord(xy[1], 1);
    i64 s = x1 * y2 + (f ? x1 * y1 + x2 * y2 : 0);
    return mod(s, pk);
  }, cfg);
  return AnyonTheory(bicharacter_cocycle(c, cfg));
}

/// All catalog labels on groups of order p^k (cyclic) or p^{2k} (E, F).
inline std::vector<PrimeLabel> catalog_labels(i64 p, int k) {
  std::vector<PrimeLabel> out;
  if (p == 2) {
    for (i64 e : {1, -1, 5, -5})
      if (k >= 2 || (e != 5 && e != -5)) out.push_back(PrimeLabel::two(k, e));
    out.push_back(PrimeLabel::e(k));
    out.push_back(PrimeLabel::f(k));
  } else {
    require(p > 2 && is_prime(p), ErrorKind::NotOddPrime, "catalog needs a prime");
    out.push_back(PrimeLabel::odd(p, k, 1));
    out.push_back(PrimeLabel::odd(p, k, -1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Decomposition {
  std::vector<PrimeLabel> factors;       // sorted
  /// Isomorphism from the direct sum of the catalog groups (in factor order)
  /// to the input group, carrying the summed catalog form to the input form.
  GroupHom witness_iso;
};

namespace detail {

/// The subgroup generated by `gens`, as a sorted element list.
inline std::vector<Elem> span_of(const FinAbGroup& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<Elem> list{0};
  in[0] = 1;
  for (Elem x : gens) {
    std::vector<Elem> next;
    for (Elem h : list) {
      Elem m = h;
      do {
        if (!in[m]) {
          in[m] = 1;
          next.push_back(m);
        }
        m = g.add(m, x);
      } while (m != h);
    }
    list.insert(list.end(), next.begin(), next.end());
  }
  std::sort(list.begin(), list.end());
  return list;
}

/// b restricted to `sub` has trivial radical.
inline bool nondegenerate_on(const QuadraticForm& q, const std::vector<Elem>& sub) {
  for (Elem a : sub) {
    if (a == 0) continue;
    bool rad = true;
    for (Elem x : sub)
      if (!q.polar(a, x).is_zero()) {
        rad = false;
        break;
      }
    if (rad) return false;
  }
  return true;
}

/// {x in h : b(a, x) = 0 for every generator a}.
inline std::vector<Elem> orthogonal_in(const QuadraticForm& q, const std::vector<Elem>& h, const std::vector<Elem>& gens) {
  std::vector<Elem> out;
  for (Elem x : h) {
    bool ok = true;
    for (Elem a : gens) ok = ok && q.polar(a, x).is_zero();
    if (ok) out.push_back(x);
  }
  return out;
}

struct Piece {
  std::vector<Elem> gens;  // one (cyclic) or two (rank-2 block) generators in A
  i64 p;
  int k;
};

inline int log_p(i64 v, i64 p) {
  int k = 0;
  while (v > 1) {
    v /= p;
    ++k;
  }
  return k;
}

/// Splits a nondegenerate p-group h (as an element list) into orthogonal
/// cyclic pieces and, for p = 2, rank-2 blocks.
inline std::vector<Piece> split_p_part(const QuadraticForm& q, std::vector<Elem> h, i64 p) {
  const FinAbGroup& g = q.group();
  std::vector<Piece> out;
  while (h.size() > 1) {
    i64 maxo = 1;
    for (Elem x : h) maxo = std::max(maxo, g.element_order(x));
    auto cyclic_candidates = [&](const std::vector<Elem>& s, i64 order) {
      std::vector<Elem> c;
      for (Elem x : s)
        if (g.element_order(x) == order && q.polar(x, x).den() == order) c.push_back(x);
      return c;
    };
    auto cands = cyclic_candidates(h, maxo);
    std::optional<Elem> pick;
    if (!cands.empty()) pick = cands.front();
    // One step of lookahead: prefer a summand whose complement still splits
    // off a cyclic piece, so rank-2 blocks appear only when forced.
    if (p == 2 && cands.size() > 1)
      for (Elem x : cands) {
        auto rest = orthogonal_in(q, h, {x});
        i64 mo = 1;
        for (Elem y : rest) mo = std::max(mo, g.element_order(y));
        if (rest.size() == 1 || !cyclic_candidates(rest, mo).empty()) {
          pick = x;
          break;
        }
      }
    if (pick) {
      out.push_back(Piece{{*pick}, p, log_p(maxo, p)});
      h = orthogonal_in(q, h, {*pick});
      continue;
    }
    require(p == 2, ErrorKind::DecompositionFailed, "odd p-part with no orthogonal cyclic summand");
    std::optional<std::pair<Elem, Elem>> pair;
    for (std::size_t i = 0; i < h.size() && !pair; ++i) {
      Elem a = h[i];
      if (g.element_order(a) != maxo) continue;
      auto ca = span_of(g, {a});
      for (std::size_t j = 0; j < h.size() && !pair; ++j) {
        Elem b = h[j];
        if (b == a || g.element_order(b) != maxo) continue;
        bool meets = false;
        Elem m = b;
        for (i64 t = 1; t < maxo && !meets; ++t, m = g.add(m, b)) meets = std::binary_search(ca.begin(), ca.end(), m);
        if (meets) continue;
        if (nondegenerate_on(q, span_of(g, {a, b}))) pair = {a, b};
      }
    }
    require(pair.has_value(), ErrorKind::DecompositionFailed, "2-part with no orthogonal cyclic or rank-2 summand");
    out.push_back(Piece{{pair->first, pair->second}, 2, log_p(maxo, 2)});
    h = orthogonal_in(q, h, {pair->first, pair->second});
  }
  return out;
}

}  // namespace detail

/// Orthogonal decomposition of a modular theory into catalog factors.
inline Decomposition prime_decompose_form(const QuadraticForm& q, const Config& cfg = {}) {
  const FinAbGroup& g = q.group();
  require(g.order() <= cfg.decompose_cap, ErrorKind::CapExceeded,
          "|A| = " + std::to_string(g.order()) + " exceeds decomposition cap " + std::to_string(cfg.decompose_cap));
  require(detail::nondegenerate_on(q, detail::span_of(g, [&] {
            std::vector<Elem> gens;
            for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
            return gens;
          }())),
          ErrorKind::NotModular, "b_q is degenerate");

  std::vector<detail::Piece> pieces;
  for (auto [p, e] : factorize(g.order())) {
    std::vector<Elem> part;
    for (Elem x = 0; x < g.order(); ++x) {
      i64 o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) part.push_back(x);
    }
    auto ps = detail::split_p_part(q, std::move(part), p);
    pieces.insert(pieces.end(), ps.begin(), ps.end());
  }

  struct Found {
    PrimeLabel label;
    std::vector<Elem> images;  // images in A of the catalog generators
  };
  std::vector<Found> found;
  for (const auto& pc : pieces) {
    const i64 pk = ipow(pc.p, pc.k);
    FinAbGroup local(pc.gens.size() == 1 ? std::vector<i64>{pk} : std::vector<i64>{pk, pk});
    GroupHom embed(local, g, pc.gens);
    QuadraticForm local_q = q.pullback(embed);
    bool ok = false;
    for (const auto& label : catalog_labels(pc.p, pc.k)) {
      const bool cyclic = label.kind == PrimeKind::odd_cyclic || label.kind == PrimeKind::two_cyclic;
      if (cyclic != (pc.gens.size() == 1)) continue;
      auto cat = catalog_theory(label, std::nullopt, cfg);
      auto iso = find_isometry(cat.q(), local_q, cfg);
      if (!iso) continue;
      found.push_back(Found{label, embed.compose(*iso).images()});
      ok = true;
      break;
    }
    require(ok, ErrorKind::DecompositionFailed, "orthogonal summand matches no catalog entry");
  }
  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.label < b.label; });

  Decomposition d{{}, GroupHom::identity(FinAbGroup())};
  std::vector<i64> orders;
  std::vector<Elem> images;
  for (const auto& f : found) {
    d.factors.push_back(f.label);
    const i64 pk = ipow(f.label.p, f.label.k);
    for (Elem im : f.images) {
      orders.push_back(pk);
      images.push_back(im);
    }
  }
  d.witness_iso = GroupHom(FinAbGroup(orders), g, images);
  require(d.witness_iso.is_bijective(), ErrorKind::DecompositionFailed, "reassembly map is not bijective");
  return d;
}

inline Decomposition prime_decompose(const AnyonTheory& t, const Config& cfg = {}) {
  require(is_modular(t), ErrorKind::NotModular, "prime_decompose needs a modular theory");
  return prime_decompose_form(t.q(), cfg);
}

/// Direct sum of catalog theories in the given order.
inline AnyonTheory assemble(const std::vector<PrimeLabel>& labels, const Config& cfg = {}) {
  AnyonTheory out(AbelianThreeCocycle::trivial(FinAbGroup(), cfg));
  for (const auto& l : labels) out = direct_sum(out, catalog_theory(l, std::nullopt, cfg), cfg);
  return out;
}

}  // namespace anyonkit
