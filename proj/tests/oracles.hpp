#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the library's arithmetic or verifiers; groups are plain coordinate
// vectors and values plain fractions, so agreement with the library is a
// genuine cross-check.

#include <anyonkit/anyonkit.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using ll = std::int64_t;

/// A value of Q/Z as n/d with 0 <= n < d, reduced.
struct Frac {
  ll n = 0, d = 1;
  Frac() = default;
  Frac(ll num, ll den) {
    num %= den;
    if (num < 0) num += den;
    ll g = std::gcd(num, den);
    n = num / g;
    d = den / g;
  }
  Frac operator+(const Frac& o) const { return Frac(n * (o.d / std::gcd(d, o.d)) + o.n * (d / std::gcd(d, o.d)), d / std::gcd(d, o.d) * o.d); }
  Frac operator-(const Frac& o) const { return *this + Frac(-o.n, o.d); }
  Frac times(ll m) const { return Frac(n * m, d); }
  bool zero() const { return n == 0; }
  bool operator==(const Frac&) const = default;
  auto operator<=>(const Frac& o) const { return n * o.d <=> o.n * d; }
};

inline Frac from_qz(const anyonkit::QZ& q) { return Frac(q.num(), q.den()); }

using Coords = std::vector<ll>;

/// A = Z/n1 + ... + Z/nk with elements listed lexicographically.
struct Grp {
  std::vector<ll> n;
  std::vector<Coords> elems;

  explicit Grp(std::vector<ll> orders) : n(std::move(orders)) {
    Coords c(n.size(), 0);
    while (true) {
      elems.push_back(c);
      std::size_t i = n.size();
      while (i > 0) {
        --i;
        if (++c[i] < n[i]) goto next;
        c[i] = 0;
      }
      break;
    next:;
    }
  }
  std::size_t size() const { return elems.size(); }
  std::size_t index(const Coords& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n.size(); ++i) idx = idx * n[i] + ((c[i] % n[i]) + n[i]) % n[i];
    return idx;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    Coords c(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) c[i] = (elems[a][i] + elems[b][i]) % n[i];
    return index(c);
  }
  std::size_t neg(std::size_t a) const {
    Coords c(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) c[i] = (n[i] - elems[a][i]) % n[i];
    return index(c);
  }
  ll order_of(std::size_t a) const {
    ll o = 1;
    for (std::size_t i = 0; i < n.size(); ++i) o = std::lcm(o, n[i] / std::gcd(elems[a][i], n[i]));
    return o;
  }
  ll exponent() const {
    ll e = 1;
    for (ll x : n) e = std::lcm(e, x);
    return e;
  }
};

using Fn3 = std::function<Frac(const Coords&, const Coords&, const Coords&)>;
using Fn2 = std::function<Frac(const Coords&, const Coords&)>;

inline bool pentagon(const Grp& g, const std::vector<Frac>& w) {
  const std::size_t N = g.size();
  auto W = [&](std::size_t a, std::size_t b, std::size_t c) { return w[(a * N + b) * N + c]; };
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z)
        for (std::size_t t = 0; t < N; ++t) {
          Frac s = W(y, z, t) - W(g.add(x, y), z, t) + W(x, g.add(y, z), t) - W(x, y, g.add(z, t)) + W(x, y, z);
          if (!s.zero()) return false;
        }
  return true;
}

inline bool hexagon(const Grp& g, const std::vector<Frac>& w, const std::vector<Frac>& c) {
  const std::size_t N = g.size();
  auto W = [&](std::size_t a, std::size_t b, std::size_t d) { return w[(a * N + b) * N + d]; };
  auto C = [&](std::size_t a, std::size_t b) { return c[a * N + b]; };
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        Frac ii = C(x, z) - C(x, g.add(y, z)) + C(x, y) + W(x, y, z) - W(y, x, z) + W(y, z, x);
        Frac iii = C(y, z) - C(g.add(x, y), z) + C(x, z) - W(x, y, z) + W(x, z, y) - W(z, x, y);
        if (!ii.zero() || !iii.zero()) return false;
      }
  return true;
}

inline bool biadditive(const Grp& g, const std::vector<Frac>& c) {
  const std::size_t N = g.size();
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        if (!(c[x * N + g.add(y, z)] - c[x * N + y] - c[x * N + z]).zero()) return false;
        if (!(c[g.add(x, y) * N + z] - c[x * N + z] - c[y * N + z]).zero()) return false;
      }
  return true;
}

inline std::vector<Frac> table3(const Grp& g, const Fn3& f) {
  std::vector<Frac> out;
  for (auto& a : g.elems)
    for (auto& b : g.elems)
      for (auto& c : g.elems) out.push_back(f(a, b, c));
  return out;
}

inline std::vector<Frac> table2(const Grp& g, const Fn2& f) {
  std::vector<Frac> out;
  for (auto& a : g.elems)
    for (auto& b : g.elems) out.push_back(f(a, b));
  return out;
}

inline std::vector<Frac> values_of(const anyonkit::Cochain& f) {
  std::vector<Frac> out;
  for (std::size_t i = 0; i < f.values().size(); ++i) out.push_back(from_qz(f.values().at(i)));
  return out;
}

inline std::vector<Frac> values_of(const anyonkit::QuadraticForm& q) {
  std::vector<Frac> out;
  for (anyonkit::Elem a = 0; a < q.group().order(); ++a) out.push_back(from_qz(q(a)));
  return out;
}

/// Library cochain from an oracle table (both use lexicographic element order).
inline anyonkit::Cochain to_cochain(const anyonkit::FinAbGroup& g, std::vector<int> shape, const std::vector<Frac>& v) {
  std::vector<anyonkit::QZ> q;
  for (auto& f : v) q.emplace_back(f.n, f.d);
  return anyonkit::Cochain(g, std::move(shape), anyonkit::FractionTable::from_values(q));
}

/// Every map A -> (1/2e)Z/Z (e the exponent; all quadratic values lie there)
/// satisfying q(a) = q(-a) and the polarization identity, by backtracking
/// over elements in order with each identity checked as soon as all of its
/// arguments are assigned.
inline std::set<std::vector<Frac>> brute_force_quadratic(const Grp& g) {
  const std::size_t N = g.size();
  const ll D = 2 * g.exponent();
  // triples (a,b,c) grouped by the largest element index they touch
  std::vector<std::vector<std::array<std::size_t, 3>>> by_max(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        std::size_t ab = g.add(a, b), bc = g.add(b, c), ac = g.add(a, c), abc = g.add(ab, c);
        std::size_t m = std::max({a, b, c, ab, bc, ac, abc});
        by_max[m].push_back({a, b, c});
      }
  std::set<std::vector<Frac>> out;
  std::vector<ll> v(N, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == N) {
      std::vector<Frac> f;
      for (ll t : v) f.emplace_back(t, D);
      out.insert(f);
      return;
    }
    for (ll t = 0; t < (x == 0 ? 1 : D); ++t) {
      v[x] = t;
      std::size_t nx = g.neg(x);
      if (nx < x && v[nx] != t) continue;
      bool ok = true;
      for (auto& [a, b, c] : by_max[x]) {
        std::size_t ab = g.add(a, b), bc = g.add(b, c), ac = g.add(a, c), abc = g.add(ab, c);
        ll s = v[abc] - v[bc] - v[ac] - v[ab] + v[a] + v[b] + v[c];
        if (((s % D) + D) % D != 0) {
          ok = false;
          break;
        }
      }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

/// Carry of b + c in Z/n.
inline ll carry(ll b, ll c, ll n) { return (b + c) / n; }

struct H3Rep {
  std::string name;
  Fn3 omega;
};

/// Representatives of every class in H^3(A, Q/Z) for A = (+) Z/n_i:
///   type I   p a_i carry_i(b_i, c_i) / n_i,          p mod n_i
///   type II  p a_i carry_j(b_j, c_j) / n_i,  i < j,  p mod gcd(n_i, n_j)
///   type III p a_i b_j c_k / gcd(n_i, n_j, n_k), i < j < k
/// combined over all coefficient choices.
inline std::vector<H3Rep> h3_representatives(const std::vector<ll>& n) {
  struct Term {
    int type;
    std::size_t i, j, k;
    ll radix;
  };
  std::vector<Term> terms;
  const std::size_t r = n.size();
  for (std::size_t i = 0; i < r; ++i) terms.push_back({1, i, i, i, n[i]});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) terms.push_back({2, i, j, j, std::gcd(n[i], n[j])});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) terms.push_back({3, i, j, k, std::gcd(n[i], std::gcd(n[j], n[k]))});
  std::vector<H3Rep> out;
  std::vector<ll> digit(terms.size(), 0);
  while (true) {
    std::string name;
    for (std::size_t t = 0; t < terms.size(); ++t) name += (t ? "," : "") + std::to_string(digit[t]);
    auto d = digit;
    auto tm = terms;
    auto nn = n;
    out.push_back({"[" + name + "]", [d, tm, nn](const Coords& a, const Coords& b, const Coords& c) {
                     Frac s;
                     for (std::size_t t = 0; t < tm.size(); ++t) {
                       if (d[t] == 0) continue;
                       const auto& T = tm[t];
                       if (T.type == 1) s = s + Frac(d[t] * a[T.i] * carry(b[T.i], c[T.i], nn[T.i]), nn[T.i]);
                       if (T.type == 2) s = s + Frac(d[t] * a[T.i] * carry(b[T.j], c[T.j], nn[T.j]), nn[T.i]);
                       if (T.type == 3) s = s + Frac(d[t] * a[T.i] * b[T.j] * c[T.k], T.radix);
                     }
                     return s;
                   }});
    std::size_t pos = terms.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < terms[pos].radix) {
        done = false;
        break;
      }
      digit[pos] = 0;
    }
    if (done) break;
  }
  return out;
}

/// Every bicharacter c(x,y) = sum_{i,j} s_ij x_i y_j / gcd(n_i, n_j).
inline std::vector<std::vector<Frac>> all_bicharacters(const Grp& g) {
  const std::size_t r = g.n.size();
  std::vector<ll> radix;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) radix.push_back(std::gcd(g.n[i], g.n[j]));
  std::vector<ll> s(radix.size(), 0);
  std::vector<std::vector<Frac>> out;
  while (true) {
    out.push_back(table2(g, [&](const Coords& x, const Coords& y) {
      Frac f;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) f = f + Frac(s[i * r + j] * x[i] * y[j], radix[i * r + j]);
      return f;
    }));
    std::size_t pos = s.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++s[pos] < radix[pos]) {
        done = false;
        break;
      }
      s[pos] = 0;
    }
    if (done) break;
  }
  return out;
}

/// Determinant by LU with partial pivoting.
inline std::complex<double> determinant(std::vector<std::complex<double>> m, std::size_t n) {
  std::complex<double> det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
    if (std::abs(m[piv * n + c]) == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[c * n + k], m[piv * n + k]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      auto f = m[r * n + c] / m[c * n + c];
      for (std::size_t k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
    }
  }
  return det;
}

/// S = |A|^{-1/2} exp(2 pi i b(a,b)) built straight from q values.
inline std::vector<std::complex<double>> s_from_q(const Grp& g, const std::vector<Frac>& q) {
  const std::size_t N = g.size();
  std::vector<std::complex<double>> m(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      Frac e = q[g.add(a, b)] - q[a] - q[b];
      double t = 2 * 3.14159265358979323846 * static_cast<double>(e.n) / static_cast<double>(e.d);
      m[a * N + b] = std::complex<double>(std::cos(t), std::sin(t)) / std::sqrt(static_cast<double>(N));
    }
  return m;
}

/// Radical of b_q computed from q values.
inline std::size_t radical_size(const Grp& g, const std::vector<Frac>& q) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool in = true;
    for (std::size_t x = 0; x < g.size() && in; ++x) in = (q[g.add(a, x)] - q[a] - q[x]).zero();
    count += in;
  }
  return count;
}

/// All subgroups, each as a sorted element list.
inline std::set<std::vector<std::size_t>> subgroups(const Grp& g) {
  std::set<std::vector<std::size_t>> out;
  std::function<void(std::vector<std::size_t>)> grow = [&](std::vector<std::size_t> h) {
    if (!out.insert(h).second) return;
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::set<std::size_t> s(h.begin(), h.end());
      // closure of h + <x>
      bool changed = true;
      s.insert(x);
      while (changed) {
        changed = false;
        std::vector<std::size_t> cur(s.begin(), s.end());
        for (std::size_t a : cur)
          for (std::size_t b : cur) changed |= s.insert(g.add(a, b)).second;
      }
      grow(std::vector<std::size_t>(s.begin(), s.end()));
    }
  };
  grow({0});
  return out;
}

inline int legendre_by_squares(ll a, ll p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (ll x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

/// Random normalized table for shape of total arity `arity`, values in (1/den)Z/Z.
inline std::vector<Frac> random_normalized(const Grp& g, int arity, ll den, std::mt19937_64& rng) {
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) total *= g.size();
  std::vector<Frac> out(total);
  std::uniform_int_distribution<ll> dist(0, den - 1);
  for (std::size_t f = 0; f < total; ++f) {
    std::size_t t = f;
    bool has_zero = false;
    for (int i = 0; i < arity; ++i, t /= g.size()) has_zero |= (t % g.size() == 0);
    if (!has_zero) out[f] = Frac(dist(rng), den);
  }
  return out;
}

/// Every isomorphism class of finite abelian groups of order <= 16, in the
/// given cyclic factorizations; single-factor forms for orders with several
/// primes exercise the CRT path.
inline std::vector<std::vector<ll>> groups_up_to_16() {
  return {{},     {2},       {3},    {4},    {2, 2},    {5},       {6},       {7},
          {8},    {2, 4},    {2, 2, 2},    {9},    {3, 3},    {10},      {11},      {12},
          {2, 6}, {13},      {14},   {15},   {16},      {2, 8},    {4, 4},    {2, 2, 4},
          {2, 2, 2, 2}};
}

}  // namespace oracle
