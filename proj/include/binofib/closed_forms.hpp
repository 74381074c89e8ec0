/// @file closed_forms.hpp
/// @brief Catalog of binomial Fibonacci/Lucas power-sum identities.
///
/// Every catalog entry pairs a closed-form right-hand side with the weighted
/// power sum it evaluates (its left-hand side, expressed as a PowerSum that
/// direct_sum can evaluate term by term). eval_pair() computes both.
#ifndef BINOFIB_CLOSED_FORMS_HPP
#define BINOFIB_CLOSED_FORMS_HPP

#include <binofib/numbers.hpp>
#include <binofib/quad_field.hpp>
#include <binofib/sequences.hpp>
#include <binofib/transform.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace binofib {

enum class IdentityId : std::uint8_t {
  F1, L1,
  E5, E6, E7, E8, E9, E10, E11, E12,
  T1_F2RHS, T1_L2RHS,
  Q13, Q14, Q15, Q16,
  C18, C19, C20, C21, C22, C23,
  EVEN_F, EVEN_L, ALT_EVEN_F, ALT_EVEN_L,
  ODD_F, ODD_L, ALT_ODD_F, ALT_ODD_L,
};

inline constexpr std::size_t kIdentityCount = 30;

/// Parameter slots an identity actually reads.
enum Slot : unsigned {
  kSlotN = 1U << 0U,
  kSlotJ = 1U << 1U,
  kSlotR = 1U << 2U,
  kSlotS = 1U << 3U,
  kSlotP = 1U << 4U,
  kSlotM = 1U << 5U,
  kSlotX = 1U << 6U,
  kSlotZ = 1U << 7U,
};

struct IdentityParams {
  Index n = 0;
  Index j = 1;
  Index r = 1;
  Index s = 0;
  Index p = 1;
  Index m = 1;
  ExactRational x{1};
  ExactRational z{1};

  friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};

/// Thrown by evaluators when params fall outside an identity's domain.
class InapplicableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Applicability {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

struct IdentityDescriptor {
  IdentityId id;
  std::string_view name;
  unsigned slots;
  /// Display form of the identity; stable, part of the public naming.
  std::string_view anchor;
  /// Left-hand side as a direct_sum call.
  PowerSum (*lhs)(const IdentityParams&);
  /// Closed-form right-hand side.
  ExactRational (*rhs)(const IdentityParams&);
};

// ---------------------------------------------------------------------------
// Shorthand used by the closed forms below.
namespace detail {

inline BigInt F(Index n) { return fib(n); }
inline BigInt L(Index n) { return lucas(n); }

inline BigInt ipow(const BigInt& b, Index e) { return big_pow(b, static_cast<std::uint64_t>(e)); }

inline ExactRational signed_value(Index sign_exponent, ExactRational v) {
  return is_even(sign_exponent) ? v : -v;
}

inline void require_n(Index n) {
  if (n < 0) {
    throw InapplicableError("n must be non-negative");
  }
}

inline void require_m(Index m) {
  if (m < 0) {
    throw InapplicableError("m must be non-negative");
  }
}

inline bool is_alternating(IdentityId id) {
  return id == IdentityId::ALT_EVEN_F || id == IdentityId::ALT_EVEN_L || id == IdentityId::ALT_ODD_F ||
         id == IdentityId::ALT_ODD_L;
}

inline SequenceKind kind_of(IdentityId id) {
  switch (id) {
    case IdentityId::F1: case IdentityId::E5: case IdentityId::E7: case IdentityId::E9:
    case IdentityId::E11: case IdentityId::T1_F2RHS: case IdentityId::Q13: case IdentityId::Q15:
    case IdentityId::C18: case IdentityId::C20: case IdentityId::C22: case IdentityId::EVEN_F:
    case IdentityId::ALT_EVEN_F: case IdentityId::ODD_F: case IdentityId::ALT_ODD_F:
      return SequenceKind::fibonacci;
    default:
      return SequenceKind::lucas;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Weighted linear identities, evaluated in Q(alpha):
//   F: (alpha^{js} (x + alpha^{jr} z)^n - beta^{js} (x + beta^{jr} z)^n) / sqrt5
//   L:  alpha^{js} (x + alpha^{jr} z)^n + beta^{js} (x + beta^{jr} z)^n
inline ExactRational linear_rhs(IdentityId id, Index n, const ExactRational& x, const ExactRational& z, Index j,
                                Index r, Index s) {
  if (id != IdentityId::F1 && id != IdentityId::L1) {
    throw std::invalid_argument("linear_rhs: id must be F1 or L1");
  }
  detail::require_n(n);
  const QuadNum a = alpha_pow(j * s) * pow(QuadNum(x) + alpha_pow(j * r) * z, n);
  const QuadNum b = beta_pow(j * s) * pow(QuadNum(x) + beta_pow(j * r) * z, n);
  if (id == IdentityId::F1) {
    return rationalize(a - b, 1);
  }
  return rationalize(a + b, 0);
}

/// Base quadratic forms, all three terms in Q(alpha):
///   5 * sum C(n,k) x^{n-k} z^k F_{j(rk+s)}^2
///     = alpha^{2js}(x + alpha^{2jr} z)^n + beta^{2js}(x + beta^{2jr} z)^n - 2(-1)^{js}(x + (-1)^{jr} z)^n
/// and the Lucas analogue with +2(-1)^{js} and no factor 5.
inline ExactRational base_quadratic_rhs(IdentityId id, Index n, const ExactRational& x, const ExactRational& z,
                                        Index j, Index r, Index s) {
  if (id != IdentityId::T1_F2RHS && id != IdentityId::T1_L2RHS) {
    throw std::invalid_argument("base_quadratic_rhs: id must be T1_F2RHS or T1_L2RHS");
  }
  detail::require_n(n);
  const QuadNum a = alpha_pow(2 * j * s) * pow(QuadNum(x) + alpha_pow(2 * j * r) * z, n);
  const QuadNum b = beta_pow(2 * j * s) * pow(QuadNum(x) + beta_pow(2 * j * r) * z, n);
  const ExactRational middle =
      ExactRational(2 * sign_pow(j * s)) * (x + z * ExactRational(sign_pow(j * r))).pow(n);
  if (id == IdentityId::T1_F2RHS) {
    return rationalize(a + b - QuadNum(middle), 2);
  }
  return rationalize(a + b + QuadNum(middle), 0);
}

// ---------------------------------------------------------------------------
// Linear special cases E5..E12.
inline ExactRational special_linear_rhs(IdentityId id, const IdentityParams& prm) {
  using detail::F;
  using detail::L;
  using detail::ipow;
  using detail::signed_value;
  const Index n = prm.n;
  const Index j = prm.j;
  const Index r = prm.r;
  const Index s = prm.s;
  const Index p = prm.p;
  const Index jr = j * r;
  const Index js = j * s;
  detail::require_n(n);
  const bool n_even = is_even(n);

  switch (id) {
    // sum (-1)^{jrk} C(n,k) W_{j(2rk+s)} = (-1)^{jrn} L_{jr}^n W_{j(rn+s)}
    case IdentityId::E5:
      return signed_value(jr * n, ExactRational(ipow(L(jr), n) * F(j * (r * n + s))));
    case IdentityId::E6:
      return signed_value(jr * n, ExactRational(ipow(L(jr), n) * L(j * (r * n + s))));

    // sum (-1)^{(jr+1)k} C(n,k) W_{j(2rk+s)}, split on the parity of n
    case IdentityId::E7:
      if (n_even) {
        return pow5(n / 2) * ExactRational(ipow(F(jr), n) * F(j * (r * n + s)));
      }
      return signed_value(jr + 1, pow5((n - 1) / 2) * ExactRational(ipow(F(jr), n) * L(j * (r * n + s))));
    case IdentityId::E8:
      if (n_even) {
        return pow5(n / 2) * ExactRational(ipow(F(jr), n) * L(j * (r * n + s)));
      }
      return signed_value(jr + 1, pow5((n + 1) / 2) * ExactRational(ipow(F(jr), n) * F(j * (r * n + s))));

    // weights F_{p+jr}^{n-k} (-F_p)^k
    case IdentityId::E9:
      return signed_value(js + 1, ExactRational(ipow(F(jr), n) * F(p * n - js)));
    case IdentityId::E10:
      // Sign is (-1)^{js}: at n = 0 the sum is L_{js} = (-1)^{js} L_{-js}.
      return signed_value(js, ExactRational(ipow(F(jr), n) * L(p * n - js)));

    // weights L_{p+jr}^{n-k} (-L_p)^k
    case IdentityId::E11:
      if (n_even) {
        return signed_value(js + 1, pow5(n / 2) * ExactRational(ipow(F(jr), n) * F(p * n - js)));
      }
      return signed_value(js + 1, pow5((n - 1) / 2) * ExactRational(ipow(F(jr), n) * L(p * n - js)));
    case IdentityId::E12:
      if (n_even) {
        return signed_value(js, pow5(n / 2) * ExactRational(ipow(F(jr), n) * L(p * n - js)));
      }
      return signed_value(js, pow5((n + 1) / 2) * ExactRational(ipow(F(jr), n) * F(p * n - js)));

    default:
      throw std::invalid_argument("special_linear_rhs: id must be one of E5..E12");
  }
}

// ---------------------------------------------------------------------------
// Quadratic identities with weights F_{2jr+p}^{n-k} (-F_p)^k (Q13, Q14) or
// L_{2jr+p}^{n-k} (-L_p)^k (Q15, Q16).
namespace detail {

// Also defined at p = 0, where Q13/Q14 sit outside their stated domain.
inline ExactRational quadratic_formula(IdentityId id, Index n, Index j, Index r, Index s, Index p) {
  require_n(n);
  const Index jr = j * r;
  const Index js = j * s;
  const int sgn_js = sign_pow(js);
  const BigInt f2jr_n = ipow(F(2 * jr), n);

  switch (id) {
    case IdentityId::Q13:
    case IdentityId::Q14: {
      const BigInt first = f2jr_n * L(p * n - 2 * js);
      const BigInt second = 2 * sgn_js * ipow(F(jr), n) * ipow(L(jr + p), n);
      if (id == IdentityId::Q13) {
        return ExactRational(first - second, 5);
      }
      return ExactRational(first + second);
    }
    case IdentityId::Q15:
    case IdentityId::Q16: {
      const ExactRational second(2 * sgn_js * ipow(F(jr), n) * ipow(F(jr + p), n));
      if (id == IdentityId::Q15) {
        const ExactRational first = is_even(n) ? pow5(n / 2 - 1) * ExactRational(f2jr_n * L(p * n - 2 * js))
                                               : pow5((n - 1) / 2) * ExactRational(f2jr_n * F(p * n - 2 * js));
        return first - pow5(n - 1) * second;
      }
      const ExactRational first = is_even(n) ? pow5(n / 2) * ExactRational(f2jr_n * L(p * n - 2 * js))
                                             : pow5((n + 1) / 2) * ExactRational(f2jr_n * F(p * n - 2 * js));
      return first + pow5(n) * second;
    }
    default:
      throw std::invalid_argument("quadratic_rhs: id must be one of Q13..Q16");
  }
}

}  // namespace detail

inline ExactRational quadratic_rhs(IdentityId id, Index n, Index j, Index r, Index s, Index p) {
  if ((id == IdentityId::Q13 || id == IdentityId::Q14) && p == 0) {
    throw InapplicableError("p must be nonzero");
  }
  return detail::quadratic_formula(id, n, j, r, s, p);
}

// ---------------------------------------------------------------------------
// Cubic identities in n and s (j = r = 1).
inline ExactRational cubic_rhs(IdentityId id, Index n, Index s) {
  using detail::F;
  using detail::L;
  detail::require_n(n);
  const BigInt two_n = big_pow(BigInt(2), static_cast<std::uint64_t>(n));
  const int sgn_n = sign_pow(n);
  const int sgn_s = sign_pow(s);

  switch (id) {
    case IdentityId::C18:  // sum C(n,k) F_{k+s}^3
      return ExactRational(two_n * F(2 * n + 3 * s) + 3 * F(n - s), 5);
    case IdentityId::C19:  // sum C(n,k) L_{k+s}^3
      return ExactRational(two_n * L(2 * n + 3 * s) + 3 * L(n - s));
    case IdentityId::C20:  // sum (-1)^k C(n,k) F_{k+s}^3
      return ExactRational(sgn_n * two_n * F(n + 3 * s) - sgn_s * 3 * F(2 * n + s), 5);
    case IdentityId::C21:  // sum (-1)^k C(n,k) L_{k+s}^3
      return ExactRational(sgn_n * two_n * L(n + 3 * s) + sgn_s * 3 * L(2 * n + s));
    case IdentityId::C22:  // sum 2^k C(n,k) F_{k+s}^3
      if (is_even(n)) {
        return pow5(n / 2 - 1) * ExactRational(F(3 * n + 3 * s) - sgn_s * 3 * F(s));
      }
      return pow5((n - 3) / 2) * ExactRational(L(3 * n + 3 * s) + sgn_s * 3 * L(s));
    case IdentityId::C23:  // sum 2^k C(n,k) L_{k+s}^3
      if (is_even(n)) {
        return pow5(n / 2) * ExactRational(L(3 * n + 3 * s) + sgn_s * 3 * L(s));
      }
      return pow5((n + 1) / 2) * ExactRational(F(3 * n + 3 * s) - sgn_s * 3 * F(s));
    default:
      throw std::invalid_argument("cubic_rhs: id must be one of C18..C23");
  }
}

// ---------------------------------------------------------------------------
// Even powers: sum (+-1)^k C(n,k) W_{j(rk+s)}^{2m}.

enum class EvenPowerBranch {
  lucas_products,  ///< L^n L terms plus the central binomial constant
  fib_n_even,      ///< 5^{n/2} scaling, F^n L terms
  fib_n_odd,       ///< 5^{(n+1)/2} scaling, F^n F terms
};

/// Non-alternating sums take the Lucas-product branch when jmr is even,
/// alternating sums when jmr is odd.
constexpr EvenPowerBranch even_power_branch(Index j, Index m, Index r, Index n, bool alternating) noexcept {
  const bool jmr_even = is_even(j) || is_even(m) || is_even(r);
  if (jmr_even != alternating) {
    return EvenPowerBranch::lucas_products;
  }
  return is_even(n) ? EvenPowerBranch::fib_n_even : EvenPowerBranch::fib_n_odd;
}

inline ExactRational even_power_rhs(Index n, Index j, Index r, Index s, Index m, bool alternating,
                                    SequenceKind kind) {
  using detail::F;
  using detail::L;
  using detail::ipow;
  detail::require_n(n);
  detail::require_m(m);
  const Index jr = j * r;
  const Index js = j * s;
  const Index big_t = jr * n + 2 * js;  // jrn + 2js
  const bool fibonacci = kind == SequenceKind::fibonacci;
  const EvenPowerBranch branch = even_power_branch(j, m, r, n, alternating);

  // sum_{i=0}^{m-1} (-1)^{i * sign_step} C(2m,i) A_{(m-i)jr}^n B_{(m-i)(jrn+2js)}
  auto partial = [&](Index sign_step, bool a_is_lucas, bool b_is_lucas) {
    BigInt total = 0;
    for (Index i = 0; i < m; ++i) {
      const Index q = m - i;
      BigInt term = binomial(2 * m, i) * ipow(a_is_lucas ? L(q * jr) : F(q * jr), n) *
                    (b_is_lucas ? L(q * big_t) : F(q * big_t));
      if (!is_even(i * sign_step)) {
        term = -term;
      }
      total += term;
    }
    return ExactRational(total);
  };
  const ExactRational central(binomial(2 * m, m) * big_pow(BigInt(2), static_cast<std::uint64_t>(n)));

  ExactRational out;
  if (!alternating) {
    switch (branch) {
      case EvenPowerBranch::lucas_products:
        out = fibonacci ? pow5(-m) * (partial(js + jr * n + 1, true, true) +
                                      detail::signed_value(m * (js + 1), central))
                        : partial(js + jr * n, true, true) + detail::signed_value(m * js, central);
        break;
      case EvenPowerBranch::fib_n_even:
        out = fibonacci ? pow5(n / 2 - m) * partial(s + 1, false, true) : pow5(n / 2) * partial(s, false, true);
        break;
      case EvenPowerBranch::fib_n_odd:
        out = fibonacci ? pow5((n + 1) / 2 - m) * partial(s, false, false)
                        : pow5((n + 1) / 2) * partial(s + 1, false, false);
        break;
    }
  } else {
    switch (branch) {
      case EvenPowerBranch::lucas_products:
        out = fibonacci ? pow5(-m) * (detail::signed_value(n, partial(s + n + 1, true, true)) +
                                      detail::signed_value(s + 1, central))
                        : detail::signed_value(n, partial(s + n, true, true)) + detail::signed_value(s, central);
        break;
      case EvenPowerBranch::fib_n_even:
        out = fibonacci ? pow5(n / 2 - m) * partial(js + 1, false, true)
                        : pow5(n / 2) * partial(js, false, true);
        break;
      case EvenPowerBranch::fib_n_odd:
        out = fibonacci ? -(pow5((n + 1) / 2 - m) * partial(js + jr + 1, false, false))
                        : -(pow5((n + 1) / 2) * partial(js + jr, false, false));
        break;
    }
  }

  // The fib_n_even branches drop the i = m term because its factor is 0^n.
  // At n = 0 that factor is 1 and the central term comes back.
  if (n == 0 && branch == EvenPowerBranch::fib_n_even) {
    const ExactRational c(binomial(2 * m, m));
    out += fibonacci ? detail::signed_value(m * (js + 1), c) * pow5(-m) : detail::signed_value(m * js, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Odd powers with index step 2r: sum (+-1)^k C(n,k) W_{j(2rk+s)}^{2m+1}.

enum class OddPowerBranch {
  lucas_products,  ///< L^n terms, no 5^{n/2} scaling
  fib_n_even,
  fib_n_odd,
};

constexpr OddPowerBranch odd_power_branch(Index j, Index r, Index n, bool alternating) noexcept {
  const bool jr_even = is_even(j) || is_even(r);
  if (jr_even != alternating) {
    return OddPowerBranch::lucas_products;
  }
  return is_even(n) ? OddPowerBranch::fib_n_even : OddPowerBranch::fib_n_odd;
}

inline ExactRational odd_power_rhs(Index n, Index j, Index r, Index s, Index m, bool alternating,
                                   SequenceKind kind) {
  using detail::F;
  using detail::L;
  using detail::ipow;
  detail::require_n(n);
  detail::require_m(m);
  const Index jr = j * r;
  const Index js = j * s;
  const Index big_u = jr * n + js;  // jrn + js
  const bool fibonacci = kind == SequenceKind::fibonacci;
  const Index sign_step = fibonacci ? js + 1 : js;

  // sum_{i=0}^{m} (-1)^{i * sign_step} C(2m+1,i) A_{q jr}^n B_{q(jrn+js)},  q = 2m+1-2i
  auto partial = [&](bool a_is_lucas, bool b_is_lucas) {
    BigInt total = 0;
    for (Index i = 0; i <= m; ++i) {
      const Index q = 2 * m + 1 - 2 * i;
      BigInt term = binomial(2 * m + 1, i) * ipow(a_is_lucas ? L(q * jr) : F(q * jr), n) *
                    (b_is_lucas ? L(q * big_u) : F(q * big_u));
      if (!is_even(i * sign_step)) {
        term = -term;
      }
      total += term;
    }
    return ExactRational(total);
  };

  const int outer = alternating ? -1 : 1;
  switch (odd_power_branch(j, r, n, alternating)) {
    case OddPowerBranch::lucas_products: {
      const ExactRational v = fibonacci ? pow5(-m) * partial(true, false) : partial(true, true);
      return alternating ? detail::signed_value(n, v) : v;
    }
    case OddPowerBranch::fib_n_even:
      return fibonacci ? pow5(n / 2 - m) * partial(false, false) : pow5(n / 2) * partial(false, true);
    case OddPowerBranch::fib_n_odd:
      return ExactRational(outer) * (fibonacci ? pow5((n - 1) / 2 - m) * partial(false, true)
                                               : pow5((n + 1) / 2) * partial(false, false));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Catalog.

namespace detail {

inline PowerSum weighted_lhs(const IdentityParams& q, Index m) {
  return {.n = q.n, .x = q.x, .z = q.z, .j = q.j, .r = q.r, .s = q.s, .m = m, .kind = SequenceKind::fibonacci};
}

template <IdentityId Id>
PowerSum lhs_of(const IdentityParams& q) {
  const SequenceKind kind = kind_of(Id);
  const Index jr = q.j * q.r;
  PowerSum ps{.n = q.n, .x = 1, .z = 1, .j = q.j, .r = q.r, .s = q.s, .m = 1, .kind = kind};
  if constexpr (Id == IdentityId::F1 || Id == IdentityId::L1) {
    ps = weighted_lhs(q, 1);
  } else if constexpr (Id == IdentityId::T1_F2RHS || Id == IdentityId::T1_L2RHS) {
    ps = weighted_lhs(q, 2);
  } else if constexpr (Id == IdentityId::E5 || Id == IdentityId::E6) {
    ps.r = 2 * q.r;
    ps.z = sign_pow(jr);
  } else if constexpr (Id == IdentityId::E7 || Id == IdentityId::E8) {
    ps.r = 2 * q.r;
    ps.z = sign_pow(jr + 1);
  } else if constexpr (Id == IdentityId::E9 || Id == IdentityId::E10) {
    ps.x = F(q.p + jr);
    ps.z = -ExactRational(F(q.p));
  } else if constexpr (Id == IdentityId::E11 || Id == IdentityId::E12) {
    ps.x = L(q.p + jr);
    ps.z = -ExactRational(L(q.p));
  } else if constexpr (Id == IdentityId::Q13 || Id == IdentityId::Q14) {
    ps.m = 2;
    ps.x = F(2 * jr + q.p);
    ps.z = -ExactRational(F(q.p));
  } else if constexpr (Id == IdentityId::Q15 || Id == IdentityId::Q16) {
    ps.m = 2;
    ps.x = L(2 * jr + q.p);
    ps.z = -ExactRational(L(q.p));
  } else if constexpr (Id == IdentityId::C18 || Id == IdentityId::C19 || Id == IdentityId::C20 ||
                       Id == IdentityId::C21 || Id == IdentityId::C22 || Id == IdentityId::C23) {
    ps.j = 1;
    ps.r = 1;
    ps.m = 3;
    ps.z = (Id == IdentityId::C20 || Id == IdentityId::C21) ? -1 : (Id == IdentityId::C22 || Id == IdentityId::C23) ? 2 : 1;
  } else if constexpr (Id == IdentityId::EVEN_F || Id == IdentityId::EVEN_L || Id == IdentityId::ALT_EVEN_F ||
                       Id == IdentityId::ALT_EVEN_L) {
    ps.m = 2 * q.m;
    ps.z = is_alternating(Id) ? -1 : 1;
  } else {
    ps.r = 2 * q.r;
    ps.m = 2 * q.m + 1;
    ps.z = is_alternating(Id) ? -1 : 1;
  }
  ps.kind = kind;
  return ps;
}

template <IdentityId Id>
ExactRational rhs_of(const IdentityParams& q) {
  if constexpr (Id == IdentityId::F1 || Id == IdentityId::L1) {
    return linear_rhs(Id, q.n, q.x, q.z, q.j, q.r, q.s);
  } else if constexpr (Id == IdentityId::T1_F2RHS || Id == IdentityId::T1_L2RHS) {
    return base_quadratic_rhs(Id, q.n, q.x, q.z, q.j, q.r, q.s);
  } else if constexpr (Id >= IdentityId::E5 && Id <= IdentityId::E12) {
    return special_linear_rhs(Id, q);
  } else if constexpr (Id >= IdentityId::Q13 && Id <= IdentityId::Q16) {
    return quadratic_formula(Id, q.n, q.j, q.r, q.s, q.p);
  } else if constexpr (Id >= IdentityId::C18 && Id <= IdentityId::C23) {
    return cubic_rhs(Id, q.n, q.s);
  } else if constexpr (Id >= IdentityId::EVEN_F && Id <= IdentityId::ALT_EVEN_L) {
    return even_power_rhs(q.n, q.j, q.r, q.s, q.m, is_alternating(Id), kind_of(Id));
  } else {
    return odd_power_rhs(q.n, q.j, q.r, q.s, q.m, is_alternating(Id), kind_of(Id));
  }
}

inline constexpr unsigned kLinearSlots = kSlotN | kSlotJ | kSlotR | kSlotS | kSlotX | kSlotZ;
inline constexpr unsigned kStepSlots = kSlotN | kSlotJ | kSlotR | kSlotS;
inline constexpr unsigned kWeightedSlots = kSlotN | kSlotJ | kSlotR | kSlotS | kSlotP;
inline constexpr unsigned kCubicSlots = kSlotN | kSlotS;
inline constexpr unsigned kPowerSlots = kSlotN | kSlotJ | kSlotR | kSlotS | kSlotM;

template <IdentityId Id>
constexpr IdentityDescriptor entry(std::string_view name, unsigned slots, std::string_view anchor) {
  return {Id, name, slots, anchor, &lhs_of<Id>, &rhs_of<Id>};
}

// clang-format off
inline constexpr std::array<IdentityDescriptor, kIdentityCount> kCatalog{{
  entry<IdentityId::F1>("F1", kLinearSlots,
      "sum C(n,k) x^(n-k) z^k F_{j(rk+s)} = (alpha^{js}(x+alpha^{jr}z)^n - beta^{js}(x+beta^{jr}z)^n)/sqrt5"),
  entry<IdentityId::L1>("L1", kLinearSlots,
      "sum C(n,k) x^(n-k) z^k L_{j(rk+s)} = alpha^{js}(x+alpha^{jr}z)^n + beta^{js}(x+beta^{jr}z)^n"),
  entry<IdentityId::E5>("E5", kStepSlots,
      "sum (-1)^{jrk} C(n,k) F_{j(2rk+s)} = (-1)^{jrn} L_{jr}^n F_{j(rn+s)}"),
  entry<IdentityId::E6>("E6", kStepSlots,
      "sum (-1)^{jrk} C(n,k) L_{j(2rk+s)} = (-1)^{jrn} L_{jr}^n L_{j(rn+s)}"),
  entry<IdentityId::E7>("E7", kStepSlots,
      "sum (-1)^{(jr+1)k} C(n,k) F_{j(2rk+s)} = 5^{n/2} F_{jr}^n F_{j(rn+s)} [n even]; "
      "(-1)^{jr+1} 5^{(n-1)/2} F_{jr}^n L_{j(rn+s)} [n odd]"),
  entry<IdentityId::E8>("E8", kStepSlots,
      "sum (-1)^{(jr+1)k} C(n,k) L_{j(2rk+s)} = 5^{n/2} F_{jr}^n L_{j(rn+s)} [n even]; "
      "(-1)^{jr+1} 5^{(n+1)/2} F_{jr}^n F_{j(rn+s)} [n odd]"),
  entry<IdentityId::E9>("E9", kWeightedSlots,
      "sum (-1)^k C(n,k) F_{p+jr}^{n-k} F_p^k F_{j(rk+s)} = (-1)^{js+1} F_{jr}^n F_{pn-js}"),
  entry<IdentityId::E10>("E10", kWeightedSlots,
      "sum (-1)^k C(n,k) F_{p+jr}^{n-k} F_p^k L_{j(rk+s)} = (-1)^{js} F_{jr}^n L_{pn-js}"),
  entry<IdentityId::E11>("E11", kWeightedSlots,
      "sum (-1)^k C(n,k) L_{p+jr}^{n-k} L_p^k F_{j(rk+s)} = (-1)^{js+1} 5^{n/2} F_{jr}^n F_{pn-js} [n even]; "
      "(-1)^{js+1} 5^{(n-1)/2} F_{jr}^n L_{pn-js} [n odd]"),
  entry<IdentityId::E12>("E12", kWeightedSlots,
      "sum (-1)^k C(n,k) L_{p+jr}^{n-k} L_p^k L_{j(rk+s)} = (-1)^{js} 5^{n/2} F_{jr}^n L_{pn-js} [n even]; "
      "(-1)^{js} 5^{(n+1)/2} F_{jr}^n F_{pn-js} [n odd]"),
  entry<IdentityId::T1_F2RHS>("T1_F2RHS", kLinearSlots,
      "5 sum C(n,k) x^(n-k) z^k F_{j(rk+s)}^2 = alpha^{2js}(x+alpha^{2jr}z)^n + beta^{2js}(x+beta^{2jr}z)^n "
      "- 2(-1)^{js}(x+(-1)^{jr}z)^n"),
  entry<IdentityId::T1_L2RHS>("T1_L2RHS", kLinearSlots,
      "sum C(n,k) x^(n-k) z^k L_{j(rk+s)}^2 = alpha^{2js}(x+alpha^{2jr}z)^n + beta^{2js}(x+beta^{2jr}z)^n "
      "+ 2(-1)^{js}(x+(-1)^{jr}z)^n"),
  entry<IdentityId::Q13>("Q13", kWeightedSlots,
      "sum (-1)^k C(n,k) F_{2jr+p}^{n-k} F_p^k F_{j(rk+s)}^2 = (F_{2jr}^n L_{pn-2js} - (-1)^{js} 2 F_{jr}^n L_{jr+p}^n)/5, p != 0"),
  entry<IdentityId::Q14>("Q14", kWeightedSlots,
      "sum (-1)^k C(n,k) F_{2jr+p}^{n-k} F_p^k L_{j(rk+s)}^2 = F_{2jr}^n L_{pn-2js} + (-1)^{js} 2 F_{jr}^n L_{jr+p}^n, p != 0"),
  entry<IdentityId::Q15>("Q15", kWeightedSlots,
      "sum (-1)^k C(n,k) L_{2jr+p}^{n-k} L_p^k F_{j(rk+s)}^2 = 5^{n/2-1} F_{2jr}^n L_{pn-2js} [n even] | "
      "5^{(n-1)/2} F_{2jr}^n F_{pn-2js} [n odd]  - (-1)^{js} 5^{n-1} 2 F_{jr}^n F_{jr+p}^n"),
  entry<IdentityId::Q16>("Q16", kWeightedSlots,
      "sum (-1)^k C(n,k) L_{2jr+p}^{n-k} L_p^k L_{j(rk+s)}^2 = 5^{n/2} F_{2jr}^n L_{pn-2js} [n even] | "
      "5^{(n+1)/2} F_{2jr}^n F_{pn-2js} [n odd]  + (-1)^{js} 5^n 2 F_{jr}^n F_{jr+p}^n"),
  entry<IdentityId::C18>("C18", kCubicSlots,
      "sum C(n,k) F_{k+s}^3 = (2^n F_{2n+3s} + 3F_{n-s})/5"),
  entry<IdentityId::C19>("C19", kCubicSlots,
      "sum C(n,k) L_{k+s}^3 = 2^n L_{2n+3s} + 3L_{n-s}"),
  entry<IdentityId::C20>("C20", kCubicSlots,
      "sum (-1)^k C(n,k) F_{k+s}^3 = ((-1)^n 2^n F_{n+3s} - (-1)^s 3F_{2n+s})/5"),
  entry<IdentityId::C21>("C21", kCubicSlots,
      "sum (-1)^k C(n,k) L_{k+s}^3 = (-1)^n 2^n L_{n+3s} + (-1)^s 3L_{2n+s}"),
  entry<IdentityId::C22>("C22", kCubicSlots,
      "sum 2^k C(n,k) F_{k+s}^3 = 5^{n/2-1}(F_{3n+3s} - (-1)^s 3F_s) [n even]; 5^{(n-3)/2}(L_{3n+3s} + (-1)^s 3L_s) [n odd]"),
  entry<IdentityId::C23>("C23", kCubicSlots,
      "sum 2^k C(n,k) L_{k+s}^3 = 5^{n/2}(L_{3n+3s} + (-1)^s 3L_s) [n even]; 5^{(n+1)/2}(F_{3n+3s} - (-1)^s 3F_s) [n odd]"),
  entry<IdentityId::EVEN_F>("EVEN_F", kPowerSlots,
      "sum C(n,k) F_{j(rk+s)}^{2m}, branches on jmr and n parity"),
  entry<IdentityId::EVEN_L>("EVEN_L", kPowerSlots,
      "sum C(n,k) L_{j(rk+s)}^{2m}, branches on jmr and n parity"),
  entry<IdentityId::ALT_EVEN_F>("ALT_EVEN_F", kPowerSlots,
      "sum (-1)^k C(n,k) F_{j(rk+s)}^{2m}, branches on jmr and n parity"),
  entry<IdentityId::ALT_EVEN_L>("ALT_EVEN_L", kPowerSlots,
      "sum (-1)^k C(n,k) L_{j(rk+s)}^{2m}, branches on jmr and n parity"),
  entry<IdentityId::ODD_F>("ODD_F", kPowerSlots,
      "sum C(n,k) F_{j(2rk+s)}^{2m+1}, branches on jr and n parity"),
  entry<IdentityId::ODD_L>("ODD_L", kPowerSlots,
      "sum C(n,k) L_{j(2rk+s)}^{2m+1}, branches on jr and n parity"),
  entry<IdentityId::ALT_ODD_F>("ALT_ODD_F", kPowerSlots,
      "sum (-1)^k C(n,k) F_{j(2rk+s)}^{2m+1}, branches on jr and n parity"),
  entry<IdentityId::ALT_ODD_L>("ALT_ODD_L", kPowerSlots,
      "sum (-1)^k C(n,k) L_{j(2rk+s)}^{2m+1}, branches on jr and n parity"),
}};
// clang-format on

}  // namespace detail

/// All identities, in IdentityId order.
inline const std::array<IdentityDescriptor, kIdentityCount>& catalog() { return detail::kCatalog; }

inline const IdentityDescriptor& descriptor(IdentityId id) { return detail::kCatalog[static_cast<std::size_t>(id)]; }

inline std::string_view identity_name(IdentityId id) { return descriptor(id).name; }

inline std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& d : detail::kCatalog) {
    if (d.name == name) {
      return d.id;
    }
  }
  return std::nullopt;
}

inline Applicability applicable(IdentityId id, const IdentityParams& params) {
  const unsigned slots = descriptor(id).slots;
  if (params.n < 0) {
    return {false, "n must be non-negative"};
  }
  if ((slots & kSlotM) != 0U && params.m < 0) {
    return {false, "m must be non-negative"};
  }
  if ((id == IdentityId::Q13 || id == IdentityId::Q14) && params.p == 0) {
    return {false, "p must be nonzero"};
  }
  return {};
}

struct PairResult {
  ExactRational lhs;
  ExactRational rhs;
  bool match = false;
};

/// Both sides of an identity without the domain check; used to probe
/// boundary points such as p = 0 for Q13/Q14.
inline PairResult eval_pair_unchecked(IdentityId id, const IdentityParams& params) {
  const IdentityDescriptor& d = descriptor(id);
  PairResult out;
  out.lhs = direct_sum(d.lhs(params));
  out.rhs = d.rhs(params);
  out.match = out.lhs == out.rhs;
  return out;
}

/// lhs via direct summation, rhs via the closed form. Throws
/// InapplicableError when params are outside the identity's domain.
inline PairResult eval_pair(IdentityId id, const IdentityParams& params) {
  if (auto ok = applicable(id, params); !ok) {
    throw InapplicableError(ok.reason);
  }
  return eval_pair_unchecked(id, params);
}

}  // namespace binofib

#endif  // BINOFIB_CLOSED_FORMS_HPP
