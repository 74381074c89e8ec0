/// @file sequences.hpp
/// @brief Fibonacci and Lucas numbers for any integer index, exact binomial
/// coefficients, and the term-by-term weighted power sum used as the oracle
/// for every closed form in the library.
#ifndef BINOFIB_SEQUENCES_HPP
#define BINOFIB_SEQUENCES_HPP

#include <binofib/numbers.hpp>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace binofib {

enum class SequenceKind { fibonacci, lucas };

constexpr std::string_view kind_name(SequenceKind kind) noexcept {
  return kind == SequenceKind::fibonacci ? "F" : "L";
}

namespace detail {

inline std::uint64_t magnitude(Index n) noexcept {
  return n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

}  // namespace detail

/// (F_k, F_{k+1}) by fast doubling over the bits of k, most significant first:
///   F_{2t}   = F_t (2 F_{t+1} - F_t)
///   F_{2t+1} = F_t^2 + F_{t+1}^2
inline std::pair<BigInt, BigInt> fib_pair(std::uint64_t k) {
  BigInt a = 0;  // F_t
  BigInt b = 1;  // F_{t+1}
  BigInt c, d;
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    c = a * (2 * b - a);
    d = a * a + b * b;
    if ((k >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = d;
    }
  }
  return {std::move(a), std::move(b)};
}

/// F_n, with F_{-n} = (-1)^{n-1} F_n.
inline BigInt fib(Index n) {
  auto [f, unused] = fib_pair(detail::magnitude(n));
  (void)unused;
  if (n < 0 && is_even(n)) {
    f = -f;
  }
  return f;
}

/// L_n = 2 F_{n+1} - F_n, with L_{-n} = (-1)^n L_n.
inline BigInt lucas(Index n) {
  auto [f, f1] = fib_pair(detail::magnitude(n));
  BigInt l = 2 * f1 - f;
  if (n < 0 && !is_even(n)) {
    l = -l;
  }
  return l;
}

inline BigInt sequence_value(SequenceKind kind, Index n) {
  return kind == SequenceKind::fibonacci ? fib(n) : lucas(n);
}

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(Index n, Index k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be non-negative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigInt out = 1;
  for (Index i = 1; i <= k; ++i) {
    out *= big_from_index(n - k + i);
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return out;
}

/// Parameters of  sum_{k=0}^{n} C(n,k) x^{n-k} z^k W_{j(rk+s)}^m.
struct PowerSum {
  Index n = 0;
  ExactRational x{1};
  ExactRational z{1};
  Index j = 1;
  Index r = 1;
  Index s = 0;
  Index m = 1;
  SequenceKind kind = SequenceKind::fibonacci;
};

/// Term-by-term evaluation of a PowerSum. 0^0 = 1 for the weights and for
/// W^m. Throws std::invalid_argument for n < 0 or m < 0.
inline ExactRational direct_sum(const PowerSum& p) {
  if (p.n < 0) {
    throw std::invalid_argument("direct_sum: n must be non-negative");
  }
  if (p.m < 0) {
    throw std::invalid_argument("direct_sum: m must be non-negative");
  }
  const auto n = static_cast<std::size_t>(p.n);
  const auto m = static_cast<std::uint64_t>(p.m);

  if (p.x.is_integer() && p.z.is_integer()) {
    const BigInt x = p.x.num();
    const BigInt z = p.z.num();
    std::vector<BigInt> x_pow(n + 1);
    x_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      x_pow[i] = x_pow[i - 1] * x;
    }
    BigInt total = 0;
    BigInt coeff = 1;  // C(n,k) z^k
    for (std::size_t k = 0; k <= n; ++k) {
      if (coeff != 0 && x_pow[n - k] != 0) {
        const Index idx = p.j * (p.r * static_cast<Index>(k) + p.s);
        total += coeff * x_pow[n - k] * big_pow(sequence_value(p.kind, idx), m);
      }
      coeff *= z * static_cast<unsigned long>(n - k);
      mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return ExactRational(total);
  }

  std::vector<ExactRational> x_pow(n + 1);
  x_pow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    x_pow[i] = x_pow[i - 1] * p.x;
  }
  ExactRational total = 0;
  ExactRational z_pow = 1;
  BigInt binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const Index idx = p.j * (p.r * static_cast<Index>(k) + p.s);
    total += ExactRational(binom * big_pow(sequence_value(p.kind, idx), m)) * x_pow[n - k] * z_pow;
    z_pow *= p.z;
    binom *= static_cast<unsigned long>(n - k);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return total;
}

}  // namespace binofib

#endif  // BINOFIB_SEQUENCES_HPP
