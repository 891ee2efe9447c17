#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primroot/arith.hpp"
#include "primroot/artin.hpp"
#include "primroot/factorize.hpp"
#include "primroot/primroot.hpp"
#include "primroot/special_primes.hpp"

namespace primroot {

enum class PsiMethod { divisor_dependent, divisor_free };

inline const char* to_string(PsiMethod m) {
  return m == PsiMethod::divisor_dependent ? "divisor" : "free";
}

/// Value of the primitive-root indicator under one representation. `raw` is
/// the complex accumulator before rounding.
struct PsiEvaluation {
  Natural p = 0;
  Natural u = 0;
  Natural tau = 0;
  PsiMethod method = PsiMethod::divisor_dependent;
  int value = 0;
  std::complex<double> raw;
  double residual = 0.0;
};

inline constexpr double kPsiTolerance = 1e-6;
inline constexpr Natural kLiteralPrimeCap = 5000;

/// Everything the character sums need for one prime: the base primitive root
/// tau, the factorization of p - 1 and the discrete-log table base tau.
class CharacterContext {
 public:
  explicit CharacterContext(Natural p, std::optional<Natural> tau = {})
      : p_(p) {
    require(is_prime(p), "psi: p must be prime, got " + std::to_string(p));
    require(p <= (Natural{1} << 32), "psi: p is above the table-based range");
    if (tau) {
      require(*tau % p != 0 && is_primitive_root_prime(*tau, p),
              "psi: supplied tau is not a primitive root mod p");
      tau_ = *tau % p;
    } else {
      tau_ = least_primitive_root(p);
    }
    order_factors_ = factor(p - 1);
    log_.assign(p, 0);
    Natural power = 1;
    for (Natural m = 0; m + 1 < p; ++m) {
      log_[power] = m;
      power = mul_mod(power, tau_, p);
    }
  }

  Natural prime() const { return p_; }
  Natural tau() const { return tau_; }
  const Factorization& order_factors() const { return order_factors_; }
  /// m in [0, p-2] with tau^m = u mod p.
  Natural discrete_log(Natural u) const { return log_[u % p_]; }

 private:
  Natural p_;
  Natural tau_ = 0;
  Factorization order_factors_;
  std::vector<Natural> log_;
};

namespace detail {

inline std::complex<double> unit_root(Natural numerator, Natural denominator) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator) /
                       static_cast<double>(denominator);
  return {std::cos(angle), std::sin(angle)};
}

inline std::vector<Natural> divisors(const Factorization& f) {
  std::vector<Natural> out{1};
  for (const auto& [prime, exponent] : f.factors) {
    const std::size_t base = out.size();
    Natural power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// mask[n] = 1 iff gcd(n, modulus) = 1, for n in [0, modulus].
inline std::vector<std::uint8_t> coprime_mask(const Factorization& modulus) {
  std::vector<std::uint8_t> mask(modulus.n + 1, 1);
  mask[0] = modulus.n == 1 ? 1 : 0;
  for (const auto& pe : modulus.factors) {
    for (Natural m = pe.prime; m <= modulus.n; m += pe.prime) mask[m] = 0;
  }
  return mask;
}

inline PsiEvaluation finish(PsiEvaluation e) {
  const double rounded = std::round(e.raw.real());
  e.value = static_cast<int>(rounded);
  e.residual = std::abs(e.raw - std::complex<double>(rounded, 0.0));
  if ((e.value != 0 && e.value != 1) || e.residual > kPsiTolerance) {
    throw std::runtime_error(
        "psi: accumulator " + std::to_string(e.raw.real()) + "+" +
        std::to_string(e.raw.imag()) + "i is not within tolerance of {0,1} (p=" +
        std::to_string(e.p) + ", u=" + std::to_string(e.u) + ")");
  }
  return e;
}

inline Natural require_nonzero_residue(Natural u, Natural p) {
  require(u % p != 0, "psi: u must be nonzero mod p");
  return u % p;
}

}  // namespace detail

/// Indicator via multiplicative characters grouped by order d | p - 1, with
/// chi_j(tau^m) = exp(2 pi i j m / (p-1)).
inline PsiEvaluation psi_divisor_dependent(Natural u, const CharacterContext& ctx) {
  const Natural p = ctx.prime();
  u = detail::require_nonzero_residue(u, p);
  const Natural group_order = p - 1;
  const Natural m = ctx.discrete_log(u);

  std::complex<double> outer = 0.0;
  for (Natural d : detail::divisors(ctx.order_factors())) {
    const Factorization fd = factor(d);
    const int mu = mobius(fd);
    if (mu == 0) continue;
    // characters of exact order d are chi_j with j = (group_order/d) * k,
    // gcd(k, d) = 1, so chi_j(u) = exp(2 pi i k m / d)
    std::complex<double> inner = 0.0;
    for (Natural k = 0; k < d; ++k) {
      if (gcd(k, d) != 1) continue;
      inner += detail::unit_root(mul_mod(k, m, d), d);
    }
    outer += static_cast<double>(mu) / static_cast<double>(euler_phi(fd)) * inner;
  }
  PsiEvaluation e;
  e.p = p;
  e.u = u;
  e.tau = ctx.tau();
  e.method = PsiMethod::divisor_dependent;
  e.raw = static_cast<double>(euler_phi(ctx.order_factors())) /
          static_cast<double>(group_order) * outer;
  return detail::finish(e);
}

/// Indicator via additive characters: sum over n coprime to p - 1 of
/// (1/p) sum_k exp(2 pi i (tau^n - u) k / p). The inner sum is p when
/// tau^n = u and 0 otherwise; `literal` evaluates every exponential instead.
inline PsiEvaluation psi_divisor_free(Natural u, const CharacterContext& ctx,
                                      bool literal = false) {
  const Natural p = ctx.prime();
  u = detail::require_nonzero_residue(u, p);
  require(!literal || p <= kLiteralPrimeCap,
          "psi: literal evaluation is limited to p <= " +
              std::to_string(kLiteralPrimeCap));
  const Natural group_order = p - 1;

  std::vector<std::complex<double>> roots;
  if (literal) {
    roots.reserve(p);
    for (Natural r = 0; r < p; ++r) roots.push_back(detail::unit_root(r, p));
  }

  const auto coprime = detail::coprime_mask(ctx.order_factors());
  std::complex<double> total = 0.0;
  Natural power = 1;  // tau^n
  for (Natural n = 1; n <= group_order; ++n) {
    power = mul_mod(power, ctx.tau(), p);
    if (!coprime[n]) continue;
    const Natural shift = (power + p - u) % p;
    std::complex<double> inner = 0.0;
    if (literal) {
      for (Natural k = 0; k < p; ++k) inner += roots[mul_mod(shift, k, p)];
    } else {
      inner = shift == 0 ? static_cast<double>(p) : 0.0;
    }
    total += inner / static_cast<double>(p);
  }
  PsiEvaluation e;
  e.p = p;
  e.u = u;
  e.tau = ctx.tau();
  e.method = PsiMethod::divisor_free;
  e.raw = total;
  return detail::finish(e);
}

inline PsiEvaluation psi_divisor_dependent(Natural u, Natural p,
                                           std::optional<Natural> tau = {}) {
  return psi_divisor_dependent(u, CharacterContext(p, tau));
}

inline PsiEvaluation psi_divisor_free(Natural u, Natural p, bool literal = false,
                                      std::optional<Natural> tau = {}) {
  return psi_divisor_free(u, CharacterContext(p, tau), literal);
}

/// Sum of the indicator of q over the primes in [z, 2z], split into the
/// trivial additive character (k = 0) and the nontrivial ones (k != 0).
struct IntervalDecomposition {
  Natural z = 0;
  Natural q = 0;
  /// Primes in [z, 2z] coprime to q.
  Natural prime_count = 0;
  /// Of those, the ones with q a primitive root (order oracle).
  Natural psi_sum = 0;
  /// sum of phi(p-1)/p.
  double trivial_term = 0.0;
  /// sum over p of (1/p) sum_{gcd(n,p-1)=1} sum_{0<k<p} exp(2 pi i (tau^n-q) k/p).
  double error_term = 0.0;
  /// a1 * (li(2z) - li(z)).
  double li_prediction = 0.0;

  /// |error_term| / z^(15/16).
  double normalized_error() const {
    return std::abs(error_term) /
           std::pow(static_cast<double>(z), 1.0 - 1.0 / 16.0);
  }
  /// psi_sum - trivial_term - error_term; zero up to rounding.
  double identity_defect() const {
    return static_cast<double>(psi_sum) - trivial_term - error_term;
  }
};

/// psi_sum is counted with the multiplicative-order oracle; error_term is
/// accumulated independently from the geometric sums over k != 0, which equal
/// p - 1 when tau^n = q and -1 otherwise.
inline IntervalDecomposition decompose_interval(Natural z, Natural q) {
  require(z >= 3, "decompose_interval: z must be >= 3");
  detail::require_admissible_base(q, "decompose_interval");
  IntervalDecomposition out;
  out.z = z;
  out.q = q;
  const Natural upper = checked_mul(2, z);
  for (Natural p : sieve_primes(upper)) {
    if (p < z || q % p == 0) continue;
    ++out.prime_count;
    if (multiplicative_order(q, p).order == p - 1) ++out.psi_sum;

    const Natural group_order = p - 1;
    const Factorization order_factors = factor(group_order);
    const auto mask = detail::coprime_mask(order_factors);
    const Natural tau = least_primitive_root(p);
    const Natural target = q % p;
    Natural hits = 0;
    Natural coprime = 0;
    Natural power = 1;
    for (Natural n = 1; n <= group_order; ++n) {
      power = mul_mod(power, tau, p);
      if (!mask[n]) continue;
      ++coprime;
      if (power == target) ++hits;
    }
    const auto pd = static_cast<double>(p);
    out.trivial_term +=
        static_cast<double>(euler_phi(order_factors)) / pd;
    const double nontrivial =
        static_cast<double>(hits) * (pd - 1.0) - static_cast<double>(coprime - hits);
    out.error_term += nontrivial / pd;
  }
  out.li_prediction = artin_constant_value() *
                      (log_integral(static_cast<double>(upper)) -
                       log_integral(static_cast<double>(z)));
  return out;
}

}  // namespace primroot
