#include <anyonkit/anyonkit.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace anyonkit;
using oracle::Coords;
using oracle::Frac;

namespace {

Cochain cochain3(const std::vector<i64>& orders, const oracle::Fn3& f) {
  oracle::Grp og(orders);
  return oracle::to_cochain(FinAbGroup(orders), {3}, oracle::table3(og, f));
}

Cochain cochain2(const std::vector<i64>& orders, std::vector<int> shape, const oracle::Fn2& f) {
  oracle::Grp og(orders);
  return oracle::to_cochain(FinAbGroup(orders), std::move(shape), oracle::table2(og, f));
}

Cochain semion_omega() {
  return cochain3({2}, [](const Coords& a, const Coords& b, const Coords& c) {
    return Frac(a[0] && b[0] && c[0] ? 1 : 0, 2);
  });
}

}  // namespace

TEST(Cochain, RejectsUnnormalizedTables) {
  FinAbGroup g({2});
  try {
    Cochain(g, {1}, FractionTable(4, {1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
  EXPECT_NO_THROW(Cochain(g, {1}, FractionTable(4, {0, 1})));
}

TEST(Cochain, TableCap) {
  Config cfg;
  cfg.table_cap = 1000;
  try {
    Cochain::zero(FinAbGroup({16}), {3}, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Delta, OneCochainOnZ2) {
  FinAbGroup g({2});
  Cochain f(g, {1}, FractionTable(4, {0, 1}));
  auto df = delta(f);
  // f(1) - f(0) + f(1) = 1/2
  EXPECT_EQ(df({1, 1}), QZ(1, 2));
  EXPECT_TRUE(delta(Cochain::zero(g, {1})).is_zero());
}

TEST(Delta, MatchesAlternatingSumOracle) {
  std::mt19937_64 rng(7);
  for (auto orders : std::vector<std::vector<i64>>{{4}, {2, 2}, {3}}) {
    FinAbGroup g(orders);
    oracle::Grp og(orders);
    const std::size_t N = og.size();
    auto v = oracle::random_normalized(og, 2, 12, rng);
    auto d = delta(oracle::to_cochain(g, {2}, v));
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = 0; y < N; ++y)
        for (std::size_t z = 0; z < N; ++z) {
          Frac e = v[y * N + z] - v[og.add(x, y) * N + z] + v[x * N + og.add(y, z)] - v[x * N + y];
          EXPECT_EQ(oracle::from_qz(d({static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)})), e);
        }
  }
}

TEST(Delta, SquaresToZero) {
  std::mt19937_64 rng(11);
  for (auto orders : std::vector<std::vector<i64>>{{4}, {2, 2}, {3}, {2}}) {
    FinAbGroup g(orders);
    oracle::Grp og(orders);
    for (int n = 1; n <= 2; ++n)
      for (int rep = 0; rep < 10; ++rep) {
        auto f = oracle::to_cochain(g, {n}, oracle::random_normalized(og, n, 24, rng));
        EXPECT_TRUE(delta(delta(f)).is_zero());
      }
  }
}

TEST(DeltaBlocks, HorizontalAndVertical) {
  std::mt19937_64 rng(3);
  FinAbGroup g({4});
  oracle::Grp og({4});
  const std::size_t N = 4;
  auto v = oracle::random_normalized(og, 2, 8, rng);
  auto f = oracle::to_cochain(g, {1, 1}, v);
  auto dv = delta_v(f);  // (1,2): f(x|z) - f(x|y+z) + f(x|y)
  auto dh = delta_h(f);  // (2,1): f(y|z) - f(x+y|z) + f(x|z)
  EXPECT_EQ(dv.shape(), (std::vector<int>{1, 2}));
  EXPECT_EQ(dh.shape(), (std::vector<int>{2, 1}));
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y)
      for (Elem z = 0; z < N; ++z) {
        EXPECT_EQ(oracle::from_qz(dv({x, y, z})), v[x * N + z] - v[x * N + og.add(y, z)] + v[x * N + y]);
        EXPECT_EQ(oracle::from_qz(dh({x, y, z})), v[y * N + z] - v[og.add(x, y) * N + z] + v[x * N + z]);
      }
  EXPECT_TRUE(delta_h(delta_h(f)).is_zero());
  EXPECT_TRUE(delta_v(delta_v(f)).is_zero());
}

TEST(Pentagon, Examples) {
  EXPECT_TRUE(pentagon_check(Cochain::zero(FinAbGroup({3}), {3})));
  EXPECT_TRUE(pentagon_check(semion_omega()));
  auto w3 = cochain3({3}, [](const Coords& a, const Coords& b, const Coords& c) {
    return Frac(a[0] * ((b[0] + c[0]) / 3), 3);
  });
  EXPECT_TRUE(pentagon_check(w3));
  EXPECT_TRUE(oracle::pentagon(oracle::Grp({3}), oracle::values_of(w3)));
}

TEST(Pentagon, SingleValueAtHalfFailsForZ4) {
  // omega = 1/2 only at (2,2,2) is not a 3-cocycle on Z/4.
  auto w = cochain3({4}, [](const Coords& a, const Coords& b, const Coords& c) {
    return Frac(a[0] == 2 && b[0] == 2 && c[0] == 2 ? 1 : 0, 2);
  });
  EXPECT_FALSE(pentagon_check(w));
  EXPECT_FALSE(oracle::pentagon(oracle::Grp({4}), oracle::values_of(w)));
}

TEST(Pentagon, AgreesWithOracleOnRandomTables) {
  std::mt19937_64 rng(5);
  FinAbGroup g({2, 2});
  oracle::Grp og({2, 2});
  for (int rep = 0; rep < 30; ++rep) {
    auto v = oracle::random_normalized(og, 3, 2, rng);
    EXPECT_EQ(pentagon_check(oracle::to_cochain(g, {3}, v)), oracle::pentagon(og, v));
  }
}

TEST(Hexagon, Examples) {
  auto bich = cochain2({3}, {1, 1}, [](const Coords& x, const Coords& y) { return Frac(x[0] * y[0], 3); });
  EXPECT_TRUE(hexagon_check(Cochain::zero(FinAbGroup({3}), {3}), bich));
  auto c4 = cochain2({2}, {1, 1}, [](const Coords& x, const Coords& y) { return Frac(x[0] * y[0], 4); });
  EXPECT_TRUE(hexagon_check(semion_omega(), c4));
  EXPECT_FALSE(hexagon_check(semion_omega(), Cochain::zero(FinAbGroup({2}), {1, 1})));
}

TEST(Hexagon, ThrowsOnPentagonFailure) {
  auto w = cochain3({4}, [](const Coords& a, const Coords& b, const Coords& c) {
    return Frac(a[0] == 2 && b[0] == 2 && c[0] == 2 ? 1 : 0, 2);
  });
  try {
    hexagon_check(w, Cochain::zero(FinAbGroup({4}), {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PentagonViolated);
  }
}

TEST(Hexagon, AgreesWithOracleAndDifferencesAreBicharacters) {
  // Every braiding of omega = 0 and of the semion associator on Z/2 among
  // denominators 4, compared with the oracle; differences of two solutions
  // must be biadditive.
  FinAbGroup g({2, 2});
  oracle::Grp og({2, 2});
  auto w0 = Cochain::zero(g, {3});
  std::vector<std::vector<Frac>> sols;
  std::vector<oracle::ll> digits(9, 0);
  while (true) {
    std::vector<Frac> c(16);
    for (std::size_t a = 1; a < 4; ++a)
      for (std::size_t b = 1; b < 4; ++b) c[a * 4 + b] = Frac(digits[(a - 1) * 3 + (b - 1)], 4);
    bool lib = hexagon_check(w0, oracle::to_cochain(g, {1, 1}, c));
    EXPECT_EQ(lib, oracle::hexagon(og, oracle::values_of(w0), c));
    if (lib) sols.push_back(c);
    std::size_t pos = 9;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < 4) {
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done) break;
  }
  EXPECT_FALSE(sols.empty());
  for (std::size_t i = 0; i < sols.size(); i += 3) {
    std::vector<Frac> d(16);
    for (std::size_t k = 0; k < 16; ++k) d[k] = sols[i][k] - sols[0][k];
    EXPECT_TRUE(is_biadditive(oracle::to_cochain(g, {1, 1}, d)));
  }
}

TEST(Gauge, Examples) {
  FinAbGroup g({4});
  auto w = even_cyclic_cocycle(4, 1).omega;
  EXPECT_EQ(gauge_transform(w, Cochain::zero(g, {2})), w);
  auto u = cochain2({4}, {2}, [](const Coords& a, const Coords& b) { return Frac(a[0] * b[0], 16); });
  auto w2 = gauge_transform(w, u);
  EXPECT_EQ(w2 - w, delta(u));
  EXPECT_TRUE(pentagon_check(w2));
  EXPECT_TRUE(pentagon_check(gauge_transform(Cochain::zero(g, {3}), u)));
}

TEST(Biadditive, Detects) {
  EXPECT_TRUE(is_biadditive(cochain2({6}, {1, 1}, [](const Coords& x, const Coords& y) { return Frac(x[0] * y[0], 6); })));
  EXPECT_FALSE(is_biadditive(cochain2({4}, {1, 1}, [](const Coords& x, const Coords& y) { return Frac(x[0] * y[0], 8); })));
}

TEST(AbelianCocycle, MakeValidates) {
  FinAbGroup g({2});
  try {
    AbelianThreeCocycle::make(semion_omega(), Cochain::zero(g, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACocycle);
  }
}
