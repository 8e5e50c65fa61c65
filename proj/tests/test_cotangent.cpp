#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace landen;

namespace {

Polynomial<Integer> ipoly(std::initializer_list<long> descending) {
  std::vector<Integer> c;
  for (long v : descending) c.emplace_back(v);
  return Polynomial<Integer>(std::move(c));
}

TEST(Cotangent, Examples) {
  auto two = build_cotangent(2);
  EXPECT_EQ(two.P, ipoly({1, 0, -1}));
  EXPECT_EQ(two.Q, ipoly({2, 0}));
  auto three = build_cotangent(3);
  EXPECT_EQ(three.P, ipoly({1, 0, -3, 0}));
  EXPECT_EQ(three.Q, ipoly({3, 0, -1}));
  auto four = build_cotangent(4);
  EXPECT_EQ(four.P, ipoly({1, 0, -6, 0, 1}));
  EXPECT_EQ(four.Q, ipoly({4, 0, -4, 0}));
}

TEST(Cotangent, RejectsSmallOrder) {
  for (int m : {1, 0, -3}) {
    try {
      build_cotangent(m);
      FAIL() << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidOrder);
    }
  }
}

TEST(Cotangent, DegreesAndLeadingCoefficients) {
  for (int m = 2; m <= 12; ++m) {
    auto pair = build_cotangent(m);
    EXPECT_EQ(pair.P.degree(), m);
    EXPECT_EQ(pair.Q.degree(), m - 1);
    EXPECT_EQ(pair.P.leading(), 1);
    EXPECT_EQ(pair.Q.leading(), m);
  }
}

TEST(Binomial, MatchesPascalRowAndVanishesOutOfRange) {
  for (int n = 0; n <= 20; ++n) {
    auto row = binomial_row(n);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), row[k]);
  }
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(-2, 1), 0);
}

// cot(m t) against P(cot t)/Q(cot t) with the trigonometry done in BigFloat.
TEST(Cotangent, MultipleAngleIdentity) {
  PrecisionScope scope(40);
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> angle(0.1, 3.0415926);
  const BigFloat pi_value = pi();
  const BigFloat bound = pow(BigFloat(10), -30);
  for (int m = 2; m <= 8; ++m) {
    auto pair = build_cotangent(m);
    const Polynomial<BigFloat> P = polynomial_cast<BigFloat>(pair.P);
    const Polynomial<BigFloat> Q = polynomial_cast<BigFloat>(pair.Q);
    int checked = 0;
    while (checked < 100) {
      BigFloat t = angle(rng);
      // Stay away from poles of cot(m t).
      BigFloat turns = m * t / pi_value;
      if (abs(turns - round(turns)) < BigFloat(1) / 50) continue;
      BigFloat c = cos(t) / sin(t);
      BigFloat expected = cos(m * t) / sin(m * t);
      BigFloat got = evaluate(P, c) / evaluate(Q, c);
      EXPECT_LT(abs(got - expected), bound) << "m=" << m;
      ++checked;
    }
  }
}

TEST(Cotangent, Composition) {
  PrecisionScope scope(40);
  const BigFloat bound = pow(BigFloat(10), -30);
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}}) {
    auto outer = build_cotangent(a), inner = build_cotangent(b), whole = build_cotangent(a * b);
    for (int i = 1; i <= 40; ++i) {
      BigFloat x = BigFloat(i) / 7 - 3 + BigFloat(1) / 1000;
      BigFloat composed = outer.map(inner.map(x));
      BigFloat direct = whole.map(x);
      EXPECT_LT(abs(composed - direct), bound * (1 + abs(direct))) << a << "," << b << " x=" << x;
    }
  }
}

}  // namespace
