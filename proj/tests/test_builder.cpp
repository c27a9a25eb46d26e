#include <anyonkit/anyonkit.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace anyonkit;
using oracle::Coords;
using oracle::Frac;

TEST(EvenCyclic, Semion) {
  auto t = even_cyclic_cocycle(2, 1);
  EXPECT_EQ(trace(t)(1), QZ(1, 4));
  EXPECT_EQ(t.omega({1, 1, 1}), QZ(1, 2));
  EXPECT_EQ(t.c({1, 1}), QZ(1, 4));
}

TEST(EvenCyclic, MultiplierThree) {
  auto t = even_cyclic_cocycle(2, 3);
  EXPECT_EQ(t.c({1, 1}), QZ(3, 4));
  EXPECT_TRUE(oracle::hexagon(oracle::Grp({2}), oracle::values_of(t.omega), oracle::values_of(t.c)));
}

TEST(EvenCyclic, CarryAssociatorAndOracleChecks) {
  for (i64 n : {2, 4, 6, 8, 16})
    for (i64 u : {1, 3, 5, -1}) {
      auto t = even_cyclic_cocycle(n, u);
      oracle::Grp og({n});
      auto w = oracle::table3(og, [&](const Coords& a, const Coords& b, const Coords& c) {
        return Frac(a[0] * ((b[0] + c[0]) / n), 2);
      });
      EXPECT_EQ(oracle::values_of(t.omega), w);
      EXPECT_TRUE(oracle::pentagon(og, w));
      EXPECT_TRUE(oracle::hexagon(og, w, oracle::values_of(t.c)));
      for (Elem m = 0; m < n; ++m) EXPECT_EQ(trace(t)(m), QZ(u * m * m, 2 * n));
    }
}

TEST(EvenCyclic, SingleHalfValueAssociatorIsNotACocycleOnZ4) {
  // omega = 1/2 only at (2,2,2): the pentagon fails, e.g. at (1,1,2,2).
  oracle::Grp og({4});
  auto w = oracle::table3(og, [](const Coords& a, const Coords& b, const Coords& c) {
    return Frac(a[0] == 2 && b[0] == 2 && c[0] == 2 ? 1 : 0, 2);
  });
  EXPECT_FALSE(oracle::pentagon(og, w));
  EXPECT_FALSE(pentagon_check(oracle::to_cochain(FinAbGroup({4}), {3}, w)));
  auto t = even_cyclic_cocycle(4, 1);
  EXPECT_EQ(t.omega({1, 3, 1}), QZ(1, 2));
  EXPECT_EQ(t.omega({2, 2, 2}), QZ());
}

TEST(EvenCyclic, Errors) {
  try {
    even_cyclic_cocycle(3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddModulus);
  }
  try {
    even_cyclic_cocycle(4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EvenMultiplier);
  }
}

TEST(Bicharacter, Examples) {
  FinAbGroup z3({3});
  auto zero = bicharacter_cocycle(Cochain::zero(z3, {1, 1}));
  EXPECT_EQ(zero, AbelianThreeCocycle::trivial(z3));
  auto c = Cochain::tabulate(z3, {1, 1}, 3, [](std::span<const Elem> x) { return 2 * static_cast<i64>(x[0] * x[1]); });
  auto t = bicharacter_cocycle(c);
  for (Elem m = 0; m < 3; ++m) EXPECT_EQ(trace(t)(m), QZ(2 * m * m, 3));
  FinAbGroup k({2, 2});
  auto tc = Cochain::tabulate(k, {1, 1}, 2, [&](std::span<const Elem> x) { return k.coord(x[0], 0) * k.coord(x[1], 1); });
  auto q = trace(bicharacter_cocycle(tc));
  EXPECT_EQ(q(k.from_coords(std::vector<i64>{1, 0})), QZ());
  EXPECT_EQ(q(k.from_coords(std::vector<i64>{0, 1})), QZ());
  EXPECT_EQ(q(k.from_coords(std::vector<i64>{1, 1})), QZ(1, 2));
}

TEST(Bicharacter, RejectsNonBiadditive) {
  FinAbGroup z4({4});
  auto c = Cochain::tabulate(z4, {1, 1}, 8, [](std::span<const Elem> x) { return static_cast<i64>(x[0] * x[1]); });
  try {
    bicharacter_cocycle(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotBiadditive);
  }
}

TEST(Build, ZeroAndSemion) {
  FinAbGroup z2({2});
  EXPECT_EQ(build_from_quadratic(QuadraticForm::zero(z2)), AbelianThreeCocycle::trivial(z2));
  auto q = QuadraticForm(z2, FractionTable::from_values({QZ(), QZ(1, 4)}));
  EXPECT_EQ(build_from_quadratic(q), even_cyclic_cocycle(2, 1));
}

TEST(Build, OddPartHasTrivialAssociator) {
  for (const auto& q : enumerate_quadratic_forms(FinAbGroup({3, 3}))) EXPECT_TRUE(suspension(build_from_quadratic(q)).is_zero());
}

TEST(Build, RoundTripExhaustive) {
  for (auto orders : std::vector<std::vector<i64>>{{2, 4}, {12}, {2, 6}, {4, 4}, {2, 2, 2}}) {
    FinAbGroup g(orders);
    oracle::Grp og(orders);
    for (const auto& q : enumerate_quadratic_forms(g)) {
      auto t = build_from_quadratic(q);
      auto w = oracle::values_of(t.omega);
      EXPECT_TRUE(oracle::pentagon(og, w));
      EXPECT_TRUE(oracle::hexagon(og, w, oracle::values_of(t.c)));
      for (std::size_t a = 0; a < og.size(); ++a) EXPECT_EQ(oracle::values_of(t.c)[a * og.size() + a], oracle::values_of(q)[a]);
      for (const auto& v : w) EXPECT_TRUE(v.zero() || v == Frac(1, 2));
    }
  }
}

TEST(Build, SumTracesToSumOfForms) {
  FinAbGroup g({2, 4});
  auto forms = enumerate_quadratic_forms(g);
  for (std::size_t i = 0; i < forms.size(); i += 5)
    for (std::size_t j = 0; j < forms.size(); j += 7) {
      auto s = build_from_quadratic(forms[i]) + build_from_quadratic(forms[j]);
      EXPECT_TRUE(s.verify());
      EXPECT_EQ(trace(s), forms[i] + forms[j]);
    }
}

TEST(Build, DoubledAssociatorIsCoboundary) {
  for (auto orders : std::vector<std::vector<i64>>{{2}, {4}, {2, 2}, {6}}) {
    for (const auto& q : enumerate_quadratic_forms(FinAbGroup(orders))) {
      auto w = build_from_quadratic(q).omega;
      EXPECT_TRUE(w.scaled(2).is_zero());
      EXPECT_TRUE(solve_coboundary(w + w).has_value());
    }
  }
}

TEST(Build, BasisChangeGivesGaugeEquivalentOutput) {
  // Building q o f for an automorphism f and pulling back along f^{-1}
  // lands in the same H^3_ab class: same trace and cohomologous associators.
  FinAbGroup g({2, 4});
  auto auts = enumerate_automorphisms(g);
  auto forms = enumerate_quadratic_forms(g);
  for (std::size_t i = 0; i < forms.size(); i += 9)
    for (std::size_t a = 0; a < auts.size(); a += 3) {
      auto moved = build_from_quadratic(forms[i].pullback(auts[a])).pullback(auts[a].inverse());
      EXPECT_EQ(trace(moved), forms[i]);
      EXPECT_TRUE(cohomologous(moved.omega, build_from_quadratic(forms[i]).omega));
    }
}
