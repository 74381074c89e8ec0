#include "oracle.hpp"

#include <binofib/numbers.hpp>
#include <binofib/sequences.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace binofib;

TEST(ExactRational, NormalizedOnConstruction) {
  const ExactRational a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(a, ExactRational(BigInt(-3), BigInt(2)));

  const ExactRational zero(BigInt(0), BigInt(-7));
  EXPECT_EQ(zero.num(), 0);
  EXPECT_EQ(zero.den(), 1);
  EXPECT_EQ(zero.to_string(), "0");
}

TEST(ExactRational, ParseAndPrint) {
  EXPECT_EQ(ExactRational::parse("-12/8").to_string(), "-3/2");
  EXPECT_EQ(ExactRational::parse("42").to_string(), "42");
  EXPECT_THROW(ExactRational::parse("1/0"), std::domain_error);
  EXPECT_THROW(ExactRational::parse("x"), std::invalid_argument);
}

TEST(ExactRational, PowConventions) {
  EXPECT_EQ(ExactRational(0).pow(0), ExactRational(1));
  EXPECT_EQ(ExactRational(2).pow(-3), ExactRational(BigInt(1), BigInt(8)));
  EXPECT_EQ(pow5(-2) * pow5(2), ExactRational(1));
  EXPECT_THROW(ExactRational(0).pow(-1), std::domain_error);
  EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
}

TEST(Fib, SpotValues) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(1), 1);
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(fib(-7), 13);
  EXPECT_EQ(fib(-8), -21);
  EXPECT_EQ(fib(100), BigInt("354224848179261915075"));
}

TEST(Lucas, SpotValues) {
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(1), 1);
  EXPECT_EQ(lucas(6), 18);
  EXPECT_EQ(lucas(-3), -4);
}

TEST(Fib, MatchesRecurrenceWalk) {
  for (Index n = -300; n <= 300; ++n) {
    ASSERT_EQ(fib(n), oracle::naive_fib(n)) << "n=" << n;
    ASSERT_EQ(lucas(n), oracle::naive_lucas(n)) << "n=" << n;
  }
}

TEST(Fib, CassiniAndLucasLink) {
  for (Index n = -200; n <= 200; ++n) {
    ASSERT_EQ(fib(n + 1) * fib(n - 1) - fib(n) * fib(n), sign_pow(n)) << "n=" << n;
    ASSERT_EQ(lucas(n), fib(n - 1) + fib(n + 1)) << "n=" << n;
  }
}

TEST(Fib, FastDoublingPairIsConsecutive) {
  for (std::uint64_t k : {0ULL, 1ULL, 2ULL, 63ULL, 64ULL, 1000ULL, 4097ULL}) {
    const auto [a, b] = fib_pair(k);
    EXPECT_EQ(a, oracle::naive_fib(static_cast<Index>(k)));
    EXPECT_EQ(b, oracle::naive_fib(static_cast<Index>(k) + 1));
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
}

TEST(Binomial, MatchesPascalAndRowSums) {
  for (Index n = 0; n <= 64; ++n) {
    const auto row = oracle::pascal_row(n);
    BigInt total = 0;
    for (Index k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial(n, k), row[static_cast<std::size_t>(k)]);
      total += binomial(n, k);
    }
    ASSERT_EQ(total, big_pow(BigInt(2), static_cast<std::uint64_t>(n)));
  }
}

TEST(DirectSum, SpotValues) {
  using K = SequenceKind;
  EXPECT_EQ(direct_sum({.n = 3, .x = 1, .z = 1, .j = 1, .r = 1, .s = 0, .m = 1, .kind = K::lucas}), 18);
  EXPECT_EQ(direct_sum({.n = 2, .x = 1, .z = 1, .j = 1, .r = 1, .s = 1, .m = 3, .kind = K::fibonacci}), 11);
  EXPECT_EQ(direct_sum({.n = 2, .x = 1, .z = -1, .j = 1, .r = 2, .s = 0, .m = 2, .kind = K::fibonacci}), 7);
  EXPECT_EQ(direct_sum({.n = 5, .x = 1, .z = 1, .j = 1, .r = 1, .s = 0, .m = 0, .kind = K::fibonacci}), 32);
}

TEST(DirectSum, ZeroPowerConventions) {
  // W = F_0 = 0 with m = 0 contributes 1; z = 0 keeps only k = 0.
  EXPECT_EQ(direct_sum({.n = 0, .x = 1, .z = 1, .j = 1, .r = 1, .s = 0, .m = 0}), 1);
  EXPECT_EQ(direct_sum({.n = 4, .x = 3, .z = 0, .j = 1, .r = 1, .s = 2, .m = 2}), 81);
  EXPECT_EQ(direct_sum({.n = 4, .x = 0, .z = 1, .j = 1, .r = 1, .s = 0, .m = 1}), fib(4));
}

TEST(DirectSum, RejectsNegativeNOrM) {
  EXPECT_THROW(direct_sum({.n = -1}), std::invalid_argument);
  EXPECT_THROW(direct_sum({.n = 1, .m = -1}), std::invalid_argument);
}

TEST(DirectSum, MZeroIsBinomialTheorem) {
  for (const auto kind : {SequenceKind::fibonacci, SequenceKind::lucas}) {
    for (Index n = 0; n <= 10; ++n) {
      for (int x = -3; x <= 3; ++x) {
        for (const auto& z : {ExactRational(-2), ExactRational(BigInt(1), BigInt(3)), ExactRational(5)}) {
          const PowerSum ps{.n = n, .x = x, .z = z, .j = 2, .r = -3, .s = 1, .m = 0, .kind = kind};
          ASSERT_EQ(direct_sum(ps), (ExactRational(x) + z).pow(n));
        }
      }
    }
  }
}

TEST(DirectSum, MatchesNaiveSumOnRationalWeights) {
  const ExactRational half(BigInt(1), BigInt(2));
  const ExactRational third(BigInt(-2), BigInt(3));
  for (const auto kind : {SequenceKind::fibonacci, SequenceKind::lucas}) {
    for (Index n = 0; n <= 6; ++n) {
      for (Index j = -2; j <= 2; ++j) {
        for (Index m = 0; m <= 3; ++m) {
          const PowerSum ps{.n = n, .x = half, .z = third, .j = j, .r = 3, .s = -1, .m = m, .kind = kind};
          ASSERT_EQ(direct_sum(ps), oracle::naive_sum(n, half, third, j, 3, -1, m, kind));
        }
      }
    }
  }
}
