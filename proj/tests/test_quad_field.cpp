#include "oracle.hpp"

#include <binofib/quad_field.hpp>
#include <binofib/sequences.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace binofib;

namespace {

QuadNum Q(long u, long v) { return {ExactRational(u), ExactRational(v)}; }
QuadNum rat(const BigInt& v) { return QuadNum(ExactRational(v)); }

}  // namespace

TEST(QuadNum, RingExamples) {
  EXPECT_EQ(sqrt5() * sqrt5(), Q(5, 0));
  EXPECT_EQ(alpha() * beta(), Q(-1, 0));
  EXPECT_EQ(alpha() + beta(), Q(1, 0));
  EXPECT_EQ(alpha() * alpha(), alpha() + Q(1, 0));
  EXPECT_EQ(-alpha() - beta(), Q(-1, 0));
}

TEST(QuadNum, Conjugation) {
  EXPECT_EQ(conj(alpha()), beta());
  EXPECT_EQ(conj(Q(5, 0)), Q(5, 0));
  EXPECT_EQ(conj(alpha_pow(5)), Q(8, -5));
  EXPECT_EQ(conj(alpha_pow(5)), beta() * beta() * beta() * beta() * beta());
  EXPECT_EQ(conj(sqrt5()), -sqrt5());
  for (long u = -3; u <= 3; ++u) {
    for (long v = -3; v <= 3; ++v) {
      ASSERT_EQ(conj(conj(Q(u, v))), Q(u, v));
      ASSERT_EQ(conj(Q(u, v) * Q(v, 2)), conj(Q(u, v)) * conj(Q(v, 2)));
    }
  }
}

TEST(QuadNum, Inverse) {
  EXPECT_EQ(inv(alpha()), Q(-1, 1));
  EXPECT_EQ(inv(Q(2, 0)), QuadNum(ExactRational(BigInt(1), BigInt(2))));
  EXPECT_THROW(inv(Q(0, 0)), std::domain_error);
  for (long u = -4; u <= 4; ++u) {
    for (long v = -4; v <= 4; ++v) {
      if (u == 0 && v == 0) {
        continue;
      }
      ASSERT_EQ(Q(u, v) * inv(Q(u, v)), Q(1, 0)) << u << "," << v;
    }
  }
}

TEST(QuadNum, AlphaPowers) {
  EXPECT_EQ(alpha_pow(5), Q(3, 5));
  EXPECT_EQ(alpha_pow(0), Q(1, 0));
  EXPECT_EQ(alpha_pow(-1), Q(-1, 1));
  for (Index n = -200; n <= 200; ++n) {
    ASSERT_EQ(alpha_pow(n), QuadNum(ExactRational(oracle::naive_fib(n - 1)), ExactRational(oracle::naive_fib(n))))
        << "n=" << n;
  }
}

TEST(QuadNum, Root5Parts) {
  const ExactRational half(BigInt(1), BigInt(2));
  EXPECT_EQ(root5_parts(alpha()), std::make_pair(half, half));
  EXPECT_EQ(root5_parts(Q(7, 0)), std::make_pair(ExactRational(7), ExactRational(0)));
  EXPECT_EQ(root5_parts(alpha_pow(4) * ExactRational(2)), std::make_pair(ExactRational(7), ExactRational(3)));
  for (Index t = -200; t <= 200; ++t) {
    const auto [p, q] = root5_parts(alpha_pow(t) * ExactRational(2));
    ASSERT_EQ(p, ExactRational(oracle::naive_lucas(t)));
    ASSERT_EQ(q, ExactRational(oracle::naive_fib(t)));
  }
}

TEST(QuadNum, BinetReconstruction) {
  for (Index n = -200; n <= 200; ++n) {
    const QuadNum a = alpha_pow(n);
    const QuadNum b = conj(a);
    const QuadNum f = (a - b) * inv(sqrt5());
    ASSERT_TRUE(f.is_rational());
    ASSERT_EQ(f.u(), ExactRational(fib(n)));
    const QuadNum l = a + b;
    ASSERT_TRUE(l.is_rational());
    ASSERT_EQ(l.u(), ExactRational(lucas(n)));
  }
}

// L_{p+q} - L_p alpha^q = -beta^p F_q sqrt5, and the three companions.
TEST(QuadNum, HoggattIdentities) {
  for (Index p = -20; p <= 20; ++p) {
    for (Index q = -20; q <= 20; ++q) {
      const QuadNum fq_root5 = rat(fib(q)) * sqrt5();
      ASSERT_EQ(rat(lucas(p + q)) - rat(lucas(p)) * alpha_pow(q), -(beta_pow(p) * fq_root5));
      ASSERT_EQ(rat(lucas(p + q)) - rat(lucas(p)) * beta_pow(q), alpha_pow(p) * fq_root5);
      ASSERT_EQ(rat(fib(p + q)) - rat(fib(p)) * alpha_pow(q), beta_pow(p) * rat(fib(q)));
      ASSERT_EQ(rat(fib(p + q)) - rat(fib(p)) * beta_pow(q), alpha_pow(p) * rat(fib(q)));
    }
  }
}

// 1 +- (-1)^p alpha^{2q}, split on whether p and q share parity, plus the
// four p-free corollaries and the beta versions of the intermediate steps.
TEST(QuadNum, ParityFactorizations) {
  for (Index p = -20; p <= 20; ++p) {
    for (Index q = -20; q <= 20; ++q) {
      const QuadNum sp = rat(BigInt(sign_pow(p)));
      const QuadNum a2q = alpha_pow(2 * q);
      const QuadNum aq = alpha_pow(q);
      const QuadNum bq = beta_pow(q);
      const QuadNum Lq = rat(lucas(q));
      const QuadNum Fq_root5 = rat(fib(q)) * sqrt5();
      const bool same = is_even(p - q);

      ASSERT_EQ(QuadNum(1) + sp * a2q, same ? sp * aq * Lq : sp * aq * Fq_root5) << p << "," << q;
      ASSERT_EQ(QuadNum(1) - sp * a2q, same ? -(sp * aq * Fq_root5) : -(sp * aq * Lq)) << p << "," << q;

      const QuadNum spq = rat(BigInt(sign_pow(p + q)));
      ASSERT_EQ(spq + sp * a2q, sp * aq * Lq);
      ASSERT_EQ(spq - sp * a2q, -(sp * aq * Fq_root5));
      ASSERT_EQ(spq + sp * beta_pow(2 * q), sp * bq * Lq);
      ASSERT_EQ(spq - sp * beta_pow(2 * q), sp * bq * Fq_root5);

      const QuadNum sq = rat(BigInt(sign_pow(q)));
      ASSERT_EQ(sq + a2q, aq * Lq);
      ASSERT_EQ(sq - a2q, -(aq * Fq_root5));
      ASSERT_EQ(sq + beta_pow(2 * q), bq * Lq);
      ASSERT_EQ(sq - beta_pow(2 * q), bq * Fq_root5);
    }
  }
}
