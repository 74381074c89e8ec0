// Test-only reference implementations. Nothing here calls into the library's
// fast-doubling, binomial or Q(alpha) code, so results computed with these
// helpers are independent checks.
#ifndef BINOFIB_TESTS_ORACLE_HPP
#define BINOFIB_TESTS_ORACLE_HPP

#include <binofib/numbers.hpp>
#include <binofib/sequences.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using binofib::BigInt;
using binofib::ExactRational;
using binofib::Index;
using binofib::SequenceKind;

/// W_n by walking W_{k+1} = W_k + W_{k-1} up from the seeds, or
/// W_{k-1} = W_{k+1} - W_k down from them. No reflection formula involved.
inline BigInt walk(BigInt w0, BigInt w1, Index n) {
  if (n >= 0) {
    for (Index k = 0; k < n; ++k) {
      BigInt next = w0 + w1;
      w0 = std::move(w1);
      w1 = std::move(next);
    }
    return w0;
  }
  for (Index k = 0; k > n; --k) {
    BigInt prev = w1 - w0;
    w1 = std::move(w0);
    w0 = std::move(prev);
  }
  return w0;
}

inline BigInt naive_fib(Index n) { return walk(0, 1, n); }
inline BigInt naive_lucas(Index n) { return walk(2, 1, n); }

inline BigInt naive_value(SequenceKind kind, Index n) {
  return kind == SequenceKind::fibonacci ? naive_fib(n) : naive_lucas(n);
}

/// Row n of Pascal's triangle by repeated addition.
inline std::vector<BigInt> pascal_row(Index n) {
  std::vector<BigInt> row{1};
  for (Index i = 0; i < n; ++i) {
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k < row.size(); ++k) {
      next[k] = row[k - 1] + row[k];
    }
    row = std::move(next);
  }
  return row;
}

inline ExactRational int_pow(const ExactRational& b, Index e) {
  ExactRational out = 1;
  for (Index i = 0; i < e; ++i) {
    out *= b;
  }
  return out;
}

/// sum_{k=0}^{n} C(n,k) x^{n-k} z^k W_{j(rk+s)}^m, each term built from scratch.
inline ExactRational naive_sum(Index n, const ExactRational& x, const ExactRational& z, Index j, Index r, Index s,
                               Index m, SequenceKind kind) {
  const auto row = pascal_row(n);
  ExactRational total = 0;
  for (Index k = 0; k <= n; ++k) {
    const ExactRational w(naive_value(kind, j * (r * k + s)));
    total += ExactRational(row[static_cast<std::size_t>(k)]) * int_pow(x, n - k) * int_pow(z, k) * int_pow(w, m);
  }
  return total;
}

/// Kernel sum  sum_k g_k z^{f_k} W_{j f_k}^m  term by term.
template <typename Terms>
ExactRational naive_kernel_sum(const Terms& terms, Index j, Index m, const ExactRational& z, SequenceKind kind) {
  ExactRational total = 0;
  for (const auto& t : terms) {
    const ExactRational zf = t.exponent >= 0 ? int_pow(z, t.exponent) : ExactRational(1) / int_pow(z, -t.exponent);
    total += t.coeff * zf * int_pow(ExactRational(naive_value(kind, j * t.exponent)), m);
  }
  return total;
}

}  // namespace oracle

#endif  // BINOFIB_TESTS_ORACLE_HPP
