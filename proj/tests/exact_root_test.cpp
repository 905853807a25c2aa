#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "wph/arith/exact_root.hpp"
#include "wph/errors.hpp"

namespace wph {
namespace {

void expect_root(const ExactRoot& r, const Rational& m, std::uint64_t k) {
  EXPECT_EQ(r.radicand(), m);
  EXPECT_EQ(r.index(), k);
}

TEST(ExactRoot, Canonicalizes) {
  expect_root(ExactRoot(Rational(8), 6), Rational(2), 2);
  expect_root(ExactRoot(Rational(4000), 2), Rational(4000), 2);
  expect_root(ExactRoot(Rational(1), 5), Rational(1), 1);
  expect_root(ExactRoot(Rational(64, 729), 6), Rational(2, 3), 1);
  expect_root(ExactRoot(Rational(16), 12), Rational(2), 3);
}

TEST(ExactRoot, RejectsNonPositive) {
  EXPECT_THROW(ExactRoot(Rational(0), 2), DomainError);
  EXPECT_THROW(ExactRoot(Rational(-3), 3), DomainError);
  EXPECT_THROW(ExactRoot(Rational(3), 0), DomainError);
}

TEST(ExactRoot, Compare) {
  EXPECT_LT(ExactRoot(Rational(3), 2), ExactRoot(Rational(2)));
  EXPECT_EQ(ExactRoot(Rational(75), 2), ExactRoot(Rational(75), 2));
  // 15^2 = 225 > 175
  EXPECT_GT(ExactRoot(Rational(15), 2), ExactRoot(Rational(175), 4));
}

TEST(ExactRoot, MulAndPow) {
  ExactRoot s2(Rational(2), 2);
  expect_root(s2 * s2, Rational(2), 1);
  expect_root(ExactRoot(Rational(3), 2).pow(Rational(2)), Rational(3), 1);
  // 4000 = 2^5 5^3 is no perfect power, so index 6 is already minimal.
  expect_root(ExactRoot(Rational(4000), 2).pow(Rational(1, 3)),
              Rational(4000), 6);
  expect_root(s2 / s2, Rational(1), 1);
  EXPECT_THROW(s2.pow(Rational(-1)), DomainError);
}

TEST(ExactRoot, PowerOf) {
  expect_root(ExactRoot::power_of(Rational(5), Rational(-1, 2)),
              Rational(1, 5), 2);
  expect_root(ExactRoot::power_of(Rational(4), Rational(3, 2)), Rational(8), 1);
}

TEST(ExactRoot, RationalPower) {
  ExactRoot d(Rational(4000), 2);
  EXPECT_FALSE(d.rational_power(3));
  EXPECT_EQ(*d.rational_power(6), Rational(Integer(4000) * 4000 * 4000));
}

TEST(ExactRoot, Rendering) {
  EXPECT_EQ(ExactRoot().to_string(), "1");
  EXPECT_EQ(ExactRoot(Rational(3), 2).to_string(), "root(3,2)");
  EXPECT_EQ(ExactRoot(Rational(3, 2), 4).to_string(), "root(3/2,4)");
  EXPECT_EQ(ExactRoot(Rational(6)).to_string(), "root(6,1)");
  EXPECT_EQ(ExactRoot::parse("root(9,4)"), ExactRoot(Rational(3), 2));
  EXPECT_EQ(ExactRoot::parse("2"), ExactRoot(Rational(2)));
  EXPECT_THROW(ExactRoot::parse("root(0,2)"), ParseError);
  EXPECT_THROW(ExactRoot::parse("-1"), ParseError);
}

TEST(ExactRootProperty, CanonicalFormIsUnique) {
  testing::Gen gen(99);
  for (int i = 0; i < 3000; ++i) {
    Rational m(Integer(gen.range(1, 5000)), Integer(gen.range(1, 50)));
    m.canonicalize();
    auto k = static_cast<std::uint64_t>(gen.range(1, 6));
    auto j = static_cast<std::uint64_t>(gen.range(1, 6));
    ExactRoot lhs(rpow(m, static_cast<std::int64_t>(k)), k * j);
    ExactRoot rhs(m, j);
    ASSERT_EQ(lhs, rhs);
    ASSERT_EQ(ExactRoot(lhs.radicand(), lhs.index()), lhs);  // idempotent
  }
}

TEST(ExactRootProperty, CompareAgreesWithFloatingPoint) {
  testing::Gen gen(4242);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational ma(Integer(gen.range(1, 1000000)), Integer(gen.range(1, 1000)));
    Rational mb(Integer(gen.range(1, 1000000)), Integer(gen.range(1, 1000)));
    ma.canonicalize();
    mb.canonicalize();
    auto ka = static_cast<std::uint64_t>(gen.range(1, 8));
    auto kb = static_cast<std::uint64_t>(gen.range(1, 8));
    ExactRoot a(ma, ka);
    ExactRoot b(mb, kb);
    long double la = std::log(static_cast<long double>(ma.get_d())) / ka;
    long double lb = std::log(static_cast<long double>(mb.get_d())) / kb;
    if (std::fabs(la - lb) <= 1e-9L) continue;
    ++checked;
    ASSERT_EQ(a < b, la < lb) << a.to_string() << " vs " << b.to_string();
  }
  EXPECT_GT(checked, 9900);
}

}  // namespace
}  // namespace wph
