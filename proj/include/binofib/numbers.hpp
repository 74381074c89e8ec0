/// @file numbers.hpp
/// @brief Arbitrary-precision integers and normalized exact rationals.
///
/// BigInt is GMP's mpz_class. ExactRational wraps mpq_class and keeps it in
/// canonical form at all times (positive denominator, reduced, zero is 0/1),
/// so equality is structural.
#ifndef BINOFIB_NUMBERS_HPP
#define BINOFIB_NUMBERS_HPP

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binofib {

/// Sequence subscripts and identity parameters.
using Index = std::int64_t;

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

inline BigInt big_from_index(Index v) {
  BigInt out;
  if (v >= LONG_MIN && v <= LONG_MAX) {
    out = static_cast<long>(v);
  } else {
    out = std::to_string(v);
  }
  return out;
}

/// (-1)^e for any integer e.
constexpr int sign_pow(Index e) noexcept { return (e % 2 == 0) ? 1 : -1; }

constexpr bool is_even(Index e) noexcept { return e % 2 == 0; }

class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(int v) : q_(v) {}               // NOLINT(google-explicit-constructor)
  ExactRational(long v) : q_(v) {}              // NOLINT(google-explicit-constructor)
  ExactRational(long long v) : q_(big_from_index(v)) {}  // NOLINT
  ExactRational(const BigInt& v) : q_(v) {}     // NOLINT(google-explicit-constructor)

  ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
      throw std::domain_error("ExactRational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "a", "-a" or "a/b" in decimal.
  static ExactRational parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return ExactRational(BigInt(s, 10));
      }
      return ExactRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("not a rational number: '" + s + "'");
    }
  }

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  const mpq_class& raw() const { return q_; }

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.is_zero()) {
      throw std::domain_error("ExactRational: division by zero");
    }
    q_ /= o.q_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const {
    ExactRational out;
    out.q_ = -q_;
    return out;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power with 0^0 = 1; negative exponents invert (zero base throws).
  ExactRational pow(Index e) const {
    if (e < 0) {
      return ExactRational(1) / pow(-e);
    }
    const auto ue = static_cast<std::uint64_t>(e);
    return ExactRational(big_pow(num(), ue), big_pow(den(), ue));
  }

  /// Decimal text; integers carry no denominator.
  std::string to_string() const {
    if (is_integer()) {
      return q_.get_num().get_str(10);
    }
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) {
    return os << v.to_string();
  }

 private:
  mpq_class q_{0};
};

/// 5^e as an exact rational, e of either sign.
inline ExactRational pow5(Index e) { return ExactRational(5).pow(e); }

}  // namespace binofib

#endif  // BINOFIB_NUMBERS_HPP
