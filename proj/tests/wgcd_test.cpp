#include <gtest/gtest.h>

#include <cmath>
#include <iostream>

#include "checks/checks.hpp"
#include "test_support.hpp"
#include "wph/errors.hpp"
#include "wph/wgcd/wgcd.hpp"

namespace wph {
namespace {

WeightedTuple tuple(std::vector<Integer> x, std::vector<std::uint64_t> w) {
  return WeightedTuple(std::move(x), WeightSystem(std::move(w)));
}

Integer pw(long b, unsigned e) { return ipow(Integer(b), e); }

bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Largest d with d^{q_i} | x_i, by scanning every candidate d.
Integer brute_wgcd(const WeightedTuple& x) {
  Integer limit = 0;
  for (const auto& c : x.coords()) {
    if (c != 0 && (limit == 0 || abs(c) < limit)) limit = abs(c);
  }
  Integer best = 1;
  for (Integer d = 2; d <= limit; ++d) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      if (x.coords()[i] == 0) continue;
      ok = divides(ipow(d, x.weights()[i]), x.coords()[i]);
    }
    if (ok) best = d;
  }
  return best;
}

// Largest z with z^{qbar_i} | x_i; awgcd is z^{1/weight_gcd}.
ExactRoot brute_awgcd(const WeightedTuple& x) {
  Integer limit = 0;
  for (const auto& c : x.coords()) {
    if (c != 0 && (limit == 0 || abs(c) < limit)) limit = abs(c);
  }
  Integer best = 1;
  for (Integer z = 2; z <= limit; ++z) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      if (x.coords()[i] == 0) continue;
      ok = divides(ipow(z, x.weights().reduced_weights()[i]), x.coords()[i]);
    }
    if (ok) best = z;
  }
  return ExactRoot(Rational(best), x.weights().weight_gcd());
}

TEST(WeightSystem, DerivedQuantities) {
  WeightSystem w({6, 8});
  EXPECT_EQ(w.weight_gcd(), 2u);
  EXPECT_EQ(w.weight_product(), 48u);
  EXPECT_EQ(w.reduced_weights()[0], 3u);
  EXPECT_EQ(w.reduced_weights()[1], 4u);
  EXPECT_THROW(WeightSystem({}), DomainError);
  EXPECT_THROW(WeightSystem({2, 0}), DomainError);
}

TEST(WeightedTuple, Validation) {
  EXPECT_THROW(tuple({0, 0}, {1, 2}), ZeroTupleError);
  EXPECT_THROW(tuple({1, 2}, {1}), LengthMismatchError);
}

TEST(Wgcd, WorkedExamples) {
  EXPECT_EQ(wgcd(tuple({1440, 700}, {3, 2})), 2);
  auto x68 = tuple({pw(2, 15) * pw(5, 12), pw(2, 26) * pw(5, 13)}, {6, 8});
  EXPECT_EQ(wgcd(x68), 20);
  auto x4 = tuple({3 * pw(5, 2), pw(3, 2) * pw(5, 4), pw(3, 3) * pw(5, 6),
                   pw(3, 5) * pw(5, 10)},
                  {2, 4, 6, 10});
  EXPECT_EQ(wgcd(x4), 5);
  EXPECT_EQ(wgcd(tuple({1, 360}, {2, 3})), 1);
}

TEST(Wgcd, ZeroAndNegativeCoordinates) {
  EXPECT_EQ(wgcd(tuple({0, 32}, {1, 5})), 2);
  EXPECT_EQ(wgcd(tuple({32, 0}, {1, 5})), 32);
  EXPECT_EQ(wgcd(tuple({-1440, 700}, {3, 2})), 2);
}

TEST(WgcdViaGcd, Examples) {
  EXPECT_EQ(wgcd_via_gcd(tuple({1440, 700}, {3, 2})), 2);
  auto x4 = tuple({3 * pw(5, 2), pw(3, 2) * pw(5, 4), pw(3, 3) * pw(5, 6),
                   pw(3, 5) * pw(5, 10)},
                  {2, 4, 6, 10});
  EXPECT_EQ(wgcd_via_gcd(x4), 5);
  EXPECT_EQ(wgcd_via_gcd(tuple({32}, {5})), 2);
  EXPECT_EQ(wgcd_via_gcd(tuple({32, 0}, {1, 5})), 32);
}

TEST(Awgcd, WorkedExamples) {
  auto x68 = tuple({pw(2, 15) * pw(5, 12), pw(2, 26) * pw(5, 13)}, {6, 8});
  EXPECT_EQ(awgcd(x68), ExactRoot(Rational(4000), 2));
  EXPECT_EQ(awgcd_via_gcd(x68), ExactRoot(Rational(4000), 2));
  auto x4 = tuple({3 * pw(5, 2), pw(3, 2) * pw(5, 4), pw(3, 3) * pw(5, 6),
                   pw(3, 5) * pw(5, 10)},
                  {2, 4, 6, 10});
  EXPECT_EQ(awgcd(x4), ExactRoot(Rational(75), 2));
  auto x237 = tuple({pw(2, 3) * pw(3, 2) * pw(7, 3), pw(2, 5) * pw(3, 7) * 7,
                     pw(2, 7) * pw(3, 7) * pw(7, 3),
                     pw(2, 11) * pw(3, 13) * pw(7, 5)},
                    {2, 4, 6, 10});
  EXPECT_EQ(awgcd(x237), ExactRoot(Rational(6)));
  EXPECT_EQ(wgcd(x237), 6);
}

TEST(AwgcdViaGcd, SmallCases) {
  // qbar = (1, 1), so z = gcd = 6 and the value is 6^{1/2}.
  EXPECT_EQ(awgcd_via_gcd(tuple({12, 18}, {2, 2})), ExactRoot(Rational(6), 2));
  EXPECT_EQ(brute_awgcd(tuple({12, 18}, {2, 2})), ExactRoot(Rational(6), 2));
  EXPECT_EQ(awgcd_via_gcd(tuple({6, 4}, {1, 1})), ExactRoot(Rational(2)));
}

TEST(GeneralizedWgcd, Examples) {
  WeightSystem w23({2, 3});
  std::vector<Rational> x{Rational(4, 7), Rational(8, 5)};
  EXPECT_EQ(generalized_wgcd(x, w23), 2);
  std::vector<Rational> ints{Rational(1440), Rational(700)};
  EXPECT_EQ(generalized_wgcd(ints, WeightSystem({3, 2})), 2);
  std::vector<Rational> ninth{Rational(1, 9)};
  EXPECT_EQ(generalized_wgcd(ninth, WeightSystem({2})), 1);
  std::vector<Rational> zeros{Rational(0), Rational(0)};
  EXPECT_THROW(generalized_wgcd(zeros, w23), ZeroTupleError);
}

TEST(GeneralizedAwgcd, Examples) {
  std::vector<Rational> x68{Rational(pw(2, 15) * pw(5, 12)),
                            Rational(pw(2, 26) * pw(5, 13))};
  EXPECT_EQ(generalized_awgcd(x68, WeightSystem({6, 8})),
            ExactRoot(Rational(4000), 2));
  std::vector<Rational> fr{Rational(1, 3), Rational(1, 5)};
  EXPECT_EQ(generalized_awgcd(fr, WeightSystem({2, 2})), ExactRoot());
  // qbar = (1, 2): v_3^+ = (2, 4) gives (3^2)^{1/2} = 3.
  std::vector<Rational> nine{Rational(9, 2), Rational(81, 5)};
  EXPECT_EQ(generalized_awgcd(nine, WeightSystem({2, 4})),
            ExactRoot(Rational(3)));
}

TEST(LogValue, Examples) {
  EXPECT_EQ(log_value(Integer(1)), 0.0);
  EXPECT_NEAR(log_value(ExactRoot(Rational(4000), 2)), 0.5 * std::log(4000.0),
              1e-13);
  EXPECT_NEAR(log_value(Integer(2)), std::log(2.0), 1e-15);
  // ln(1 + 10^-30) needs far more than double precision in the radicand.
  Rational tiny(ipow(Integer(10), 30) + 1, ipow(Integer(10), 30));
  EXPECT_NEAR(log_value(ExactRoot(tiny)) / 1e-30, 1.0, 1e-12);
}

TEST(WgcdProperty, MatchesBruteForceOnSmallTuples) {
  testing::Gen gen(31337);
  for (int iter = 0; iter < 1500; ++iter) {
    std::size_t n = gen.range(1, 3);
    std::vector<Integer> x;
    std::vector<std::uint64_t> w;
    for (std::size_t i = 0; i < n; ++i) {
      Integer c = gen.smooth(7, 6, 3);
      if (c > 5000) c = 5000 - gen.range(0, 100);
      if (gen.range(0, 5) == 0) c = 0;
      x.push_back(gen.coin() ? c : Integer(-c));
      w.push_back(gen.range(1, 4));
    }
    x[0] = x[0] == 0 ? Integer(gen.range(1, 500)) : x[0];
    auto t = tuple(x, w);
    ASSERT_EQ(wgcd(t), brute_wgcd(t));
    ASSERT_EQ(awgcd(t), brute_awgcd(t));
  }
}

TEST(WgcdProperty, RecombiningAgreesAndReportsDescents) {
  testing::Gen gen(8);
  RecombineStats stats;
  for (int iter = 0; iter < 2000; ++iter) {
    std::size_t n = gen.range(1, 5);
    std::vector<Integer> x;
    std::vector<std::uint64_t> w;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(gen.smooth(50, 30, 4));
      w.push_back(gen.range(1, 8));
    }
    auto t = tuple(x, w);
    ASSERT_EQ(wgcd_via_gcd(t, default_factor_config(), &stats), wgcd(t));
    ASSERT_EQ(awgcd_via_gcd(t, default_factor_config(), &stats), awgcd(t));
  }
  EXPECT_GT(stats.primes, 0u);
  EXPECT_GT(stats.descents, 0u);
  std::cout << "recombining: primes=" << stats.primes
            << " descents=" << stats.descents
            << " min_cap_exceeded=" << stats.min_cap_exceeded << '\n';
}

TEST(WgcdViaGcd, MinOverWeightsIsNotACap) {
  // g = 2, min_j floor(1/q_j) = 0, yet 2^1 | 2 and 2^10 | 2^10.
  auto t = tuple({2, pw(2, 10)}, {1, 10});
  RecombineStats stats;
  EXPECT_EQ(wgcd_via_gcd(t, default_factor_config(), &stats), 2);
  EXPECT_EQ(brute_wgcd(t), 2);
  EXPECT_EQ(stats.min_cap_exceeded, 1u);
}

TEST(WgcdProperty, OracleBattery) {
  auto r = checks::wgcd_oracles(77, 1000);
  EXPECT_EQ(r.cases, 1000u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace
}  // namespace wph
