/// @file quad_field.hpp
/// @brief Exact arithmetic in Q(alpha), alpha the golden ratio.
///
/// Elements are stored as u + v*alpha with rational u, v. The multiplication
/// law follows from alpha^2 = alpha + 1. beta = 1 - alpha and sqrt5 = 2 alpha - 1
/// are derived constants.
#ifndef BINOFIB_QUAD_FIELD_HPP
#define BINOFIB_QUAD_FIELD_HPP

#include <binofib/numbers.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace binofib {

class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(ExactRational u, ExactRational v) : u_(std::move(u)), v_(std::move(v)) {}
  QuadNum(const ExactRational& u) : u_(u) {}  // NOLINT(google-explicit-constructor)
  QuadNum(int u) : u_(u) {}                   // NOLINT(google-explicit-constructor)

  const ExactRational& u() const { return u_; }
  const ExactRational& v() const { return v_; }

  bool is_rational() const { return v_.is_zero(); }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  QuadNum& operator+=(const QuadNum& o) {
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  QuadNum& operator-=(const QuadNum& o) {
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
  }
  // (u1 + v1 a)(u2 + v2 a) = (u1 u2 + v1 v2) + (u1 v2 + u2 v1 + v1 v2) a
  QuadNum& operator*=(const QuadNum& o) {
    const ExactRational vv = v_ * o.v_;
    ExactRational nu = u_ * o.u_ + vv;
    ExactRational nv = u_ * o.v_ + o.u_ * v_ + vv;
    u_ = std::move(nu);
    v_ = std::move(nv);
    return *this;
  }
  QuadNum& operator*=(const ExactRational& c) {
    u_ *= c;
    v_ *= c;
    return *this;
  }
  QuadNum& operator/=(const ExactRational& c) {
    u_ /= c;
    v_ /= c;
    return *this;
  }

  friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
  friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
  friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
  friend QuadNum operator*(QuadNum a, const ExactRational& c) { return a *= c; }
  friend QuadNum operator*(const ExactRational& c, QuadNum a) { return a *= c; }
  friend QuadNum operator/(QuadNum a, const ExactRational& c) { return a /= c; }
  QuadNum operator-() const { return {-u_, -v_}; }

  friend bool operator==(const QuadNum& a, const QuadNum& b) = default;

  std::string to_string() const { return "(" + u_.to_string() + ", " + v_.to_string() + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.to_string(); }

 private:
  ExactRational u_{0};
  ExactRational v_{0};
};

inline QuadNum alpha() { return {0, 1}; }
inline QuadNum beta() { return {1, -1}; }
inline QuadNum sqrt5() { return {-1, 2}; }

/// Field automorphism alpha <-> beta: u + v alpha  ->  (u + v) - v alpha.
inline QuadNum conj(const QuadNum& a) { return {a.u() + a.v(), -a.v()}; }

/// a * conj(a) = u^2 + uv - v^2, always rational.
inline ExactRational norm(const QuadNum& a) { return a.u() * a.u() + a.u() * a.v() - a.v() * a.v(); }

inline QuadNum inv(const QuadNum& a) {
  const ExactRational nrm = norm(a);
  if (nrm.is_zero()) {
    throw std::domain_error("QuadNum: element is not invertible");
  }
  return conj(a) / nrm;
}

/// a^e by binary exponentiation; negative e goes through inv. a^0 = 1.
inline QuadNum pow(const QuadNum& a, Index e) {
  QuadNum base = e < 0 ? inv(a) : a;
  auto k = e < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  QuadNum out{1};
  while (k != 0) {
    if (k & 1U) {
      out *= base;
    }
    k >>= 1U;
    if (k != 0) {
      base *= base;
    }
  }
  return out;
}

inline QuadNum alpha_pow(Index n) { return pow(alpha(), n); }
inline QuadNum beta_pow(Index n) { return pow(beta(), n); }

/// (p, q) with a = p + q sqrt5.
inline std::pair<ExactRational, ExactRational> root5_parts(const QuadNum& a) {
  const ExactRational half_v = a.v() / ExactRational(2);
  return {a.u() + half_v, half_v};
}

}  // namespace binofib

#endif  // BINOFIB_QUAD_FIELD_HPP
