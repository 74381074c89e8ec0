/// @file transform.hpp
/// @brief Power reduction of Fibonacci/Lucas weighted sums.
///
/// For a finite kernel h(z) = sum_k g_k z^{f_k}:
///
///   sum_k g_k z^{f_k} F_{j f_k}^m = 5^{-m/2} sum_{i=0}^{m} (-1)^i C(m,i) h(beta^{ij} alpha^{(m-i)j} z)
///   sum_k g_k z^{f_k} L_{j f_k}^m =          sum_{i=0}^{m}        C(m,i) h(beta^{ij} alpha^{(m-i)j} z)
///
/// and, for the binomial kernel z^s (x + z^r)^n, the closed sums in the
/// alpha-power form
///
///   sum_k C(n,k) x^{n-k} z^k F_{j(rk+s)}^m
///     = 5^{-m/2} sum_i (-1)^{i(js+1)} C(m,i) alpha^{(m-2i)js} (x + (-1)^{ijr} alpha^{(m-2i)jr} z)^n
///
/// (Lucas: sign (-1)^{ijs} and no 5^{-m/2}). Every result is rationalized
/// and checked to land in Q; a non-rational result is an internal error.
#ifndef BINOFIB_TRANSFORM_HPP
#define BINOFIB_TRANSFORM_HPP

#include <binofib/numbers.hpp>
#include <binofib/quad_field.hpp>
#include <binofib/sequences.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace binofib {

/// Raised when an expression that must be rational is not. Signals a bug,
/// never bad input.
class RationalityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct KernelTerm {
  ExactRational coeff;
  Index exponent = 0;
};

/// h(z) = sum of coeff * z^exponent over the terms.
using Kernel = std::vector<KernelTerm>;

/// h(z) = z^s (x + z^r)^n, i.e. g_k = C(n,k) x^{n-k}, f_k = rk + s.
/// z is the point the reduction is evaluated at.
struct BinomialKernel {
  Index n = 0;
  ExactRational x{1};
  ExactRational z{1};
  Index r = 1;
  Index s = 0;
};

inline Kernel to_kernel(const BinomialKernel& bk) {
  if (bk.n < 0) {
    throw std::invalid_argument("binomial kernel: n must be non-negative");
  }
  Kernel h;
  h.reserve(static_cast<std::size_t>(bk.n) + 1);
  for (Index k = 0; k <= bk.n; ++k) {
    h.push_back({ExactRational(binomial(bk.n, k)) * bk.x.pow(bk.n - k), bk.r * k + bk.s});
  }
  return h;
}

inline QuadNum kernel_eval(const Kernel& h, const QuadNum& point) {
  QuadNum total;
  for (const auto& term : h) {
    if (term.coeff.is_zero()) {
      continue;
    }
    if (term.exponent < 0 && norm(point).is_zero()) {
      throw std::domain_error("kernel_eval: negative exponent at a non-invertible point");
    }
    total += pow(point, term.exponent) * term.coeff;
  }
  return total;
}

/// Which way the Binet factors are written inside h(.).
enum class ReductionForm {
  alpha_beta,    ///< beta^{ij} alpha^{(m-i)j} z
  signed_alpha,  ///< (-1)^{ij} alpha^{(m-2i)j} z
};

/// The un-normalized reduction sum: sum_i w_i C(m,i) h(point_i), with
/// w_i = (-1)^i for Fibonacci and 1 for Lucas. Divide by sqrt5^m (Fibonacci
/// only) to obtain the weighted power sum.
inline QuadNum reduction_sum(const Kernel& h, Index j, Index m, const ExactRational& z, SequenceKind kind,
                             ReductionForm form = ReductionForm::alpha_beta) {
  if (m < 0) {
    throw std::invalid_argument("reduction: m must be non-negative");
  }
  QuadNum total;
  for (Index i = 0; i <= m; ++i) {
    QuadNum point = form == ReductionForm::alpha_beta
                        ? beta_pow(i * j) * alpha_pow((m - i) * j)
                        : alpha_pow((m - 2 * i) * j) * ExactRational(sign_pow(i * j));
    point *= z;
    ExactRational weight(binomial(m, i));
    if (kind == SequenceKind::fibonacci && !is_even(i)) {
      weight = -weight;
    }
    total += kernel_eval(h, point) * weight;
  }
  return total;
}

/// value / sqrt5^power, which must be rational.
/// Odd powers: multiply by sqrt5 first, then divide by 5^{(power+1)/2}.
inline ExactRational rationalize(QuadNum value, Index power) {
  if (power < 0) {
    throw std::invalid_argument("rationalize: power must be non-negative");
  }
  if (!is_even(power)) {
    value *= sqrt5();
  }
  if (!value.is_rational()) {
    throw RationalityError("result has a nonzero sqrt5 component: " + value.to_string());
  }
  return value.u() / pow5((power + 1) / 2);
}

inline ExactRational reduce(const Kernel& h, Index j, Index m, const ExactRational& z, SequenceKind kind) {
  const QuadNum acc = reduction_sum(h, j, m, z, kind);
  return rationalize(acc, kind == SequenceKind::fibonacci ? m : 0);
}

/// sum_k g_k z^{f_k} F_{j f_k}^m
inline ExactRational reduce_F(const Kernel& h, Index j, Index m, const ExactRational& z) {
  return reduce(h, j, m, z, SequenceKind::fibonacci);
}

/// sum_k g_k z^{f_k} L_{j f_k}^m
inline ExactRational reduce_L(const Kernel& h, Index j, Index m, const ExactRational& z) {
  return reduce(h, j, m, z, SequenceKind::lucas);
}

/// Closed binomial power sum: equals direct_sum({n, x, z, j, r, s, m, kind}).
inline ExactRational binomial_rhs(const BinomialKernel& bk, Index j, Index m, SequenceKind kind) {
  if (bk.n < 0) {
    throw std::invalid_argument("binomial_rhs: n must be non-negative");
  }
  if (m < 0) {
    throw std::invalid_argument("binomial_rhs: m must be non-negative");
  }
  const Index js = j * bk.s;
  const Index jr = j * bk.r;
  QuadNum total;
  for (Index i = 0; i <= m; ++i) {
    const Index sign_exp = kind == SequenceKind::fibonacci ? i * (js + 1) : i * js;
    ExactRational weight(binomial(m, i));
    if (!is_even(sign_exp)) {
      weight = -weight;
    }
    const QuadNum inner = QuadNum(bk.x) + alpha_pow((m - 2 * i) * jr) * (bk.z * ExactRational(sign_pow(i * jr)));
    total += alpha_pow((m - 2 * i) * js) * pow(inner, bk.n) * weight;
  }
  return rationalize(std::move(total), kind == SequenceKind::fibonacci ? m : 0);
}

}  // namespace binofib

#endif  // BINOFIB_TRANSFORM_HPP
