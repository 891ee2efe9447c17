#pragma once

#include <string>
#include <vector>

#include "primroot/arith.hpp"
#include "primroot/factorize.hpp"

namespace primroot {

/// Multiplicative order of u modulo n, together with the group exponent
/// lambda(n) it was derived from.
struct OrderResult {
  Natural n = 0;
  Natural u = 0;
  Natural order = 0;
  Natural group_exponent = 0;
  bool is_lambda_primitive = false;
};

namespace detail {

inline void require_unit(Natural u, Natural n, const char* op) {
  require(n >= 2, std::string(op) + ": modulus must be >= 2");
  require(u % n != 0 && gcd(u % n, n) == 1,
          std::string(op) + ": u must be coprime to the modulus");
}

// True iff u^(exponent/l) != 1 mod n for every prime l dividing exponent.
inline bool passes_order_test(Natural u, Natural n, Natural exponent,
                              const Factorization& exponent_factors) {
  for (const auto& pe : exponent_factors.factors) {
    if (mod_pow(u, exponent / pe.prime, n) == 1) return false;
  }
  return true;
}

}  // namespace detail

/// Order of u mod n. Starts from lambda(n) and strips prime factors while the
/// power stays 1, so no divisor enumeration happens.
inline OrderResult multiplicative_order(Natural u, Natural n) {
  detail::require_unit(u, n, "multiplicative_order");
  const Natural reduced = u % n;
  const Natural lambda = carmichael_lambda(factor(n));
  Natural order = lambda;
  for (const auto& [prime, exponent] : factor(lambda).factors) {
    for (unsigned i = 0; i < exponent; ++i) {
      if (mod_pow(reduced, order / prime, n) != 1) break;
      order /= prime;
    }
  }
  return {n, reduced, order, lambda, order == lambda};
}

/// Primitive-root test modulo a fixed prime p, with p - 1 factored once.
class PrimeRootTester {
 public:
  explicit PrimeRootTester(Natural p) : p_(p) {
    require(is_prime(p), "is_primitive_root_prime: p must be prime, got " +
                             std::to_string(p));
    totient_factors_ = factor(p - 1);
  }

  bool operator()(Natural u) const {
    require(u % p_ != 0, "is_primitive_root_prime: u must be coprime to p");
    return detail::passes_order_test(u % p_, p_, p_ - 1, totient_factors_);
  }

  Natural prime() const { return p_; }
  const Factorization& totient_factors() const { return totient_factors_; }
  /// Modular exponentiations performed per test.
  Natural exponentiations() const { return omega(totient_factors_); }

 private:
  Natural p_;
  Factorization totient_factors_;
};

inline bool is_primitive_root_prime(Natural u, Natural p) {
  return PrimeRootTester(p)(u);
}

inline bool is_lambda_primitive_root(Natural u, Natural n) {
  detail::require_unit(u, n, "is_lambda_primitive_root");
  const Natural lambda = carmichael_lambda(factor(n));
  return detail::passes_order_test(u % n, n, lambda, factor(lambda));
}

/// Decides whether u is a lambda-primitive root mod n from its behaviour
/// modulo each prime-power divisor of n. A positive answer is re-verified
/// directly modulo n.
inline bool lift_primitive_root(Natural u, const Factorization& f) {
  const Natural n = f.n;
  detail::require_unit(u, n, "lift_primitive_root");
  require(u % n != 1 && u % n != n - 1,
          "lift_primitive_root: u must not be congruent to +1 or -1 mod n");
  require(!is_perfect_square(u),
          "lift_primitive_root: u must not be a perfect square");
  for (const auto& [prime, exponent] : f.factors) {
    Natural prime_power = 1;
    for (unsigned i = 0; i < exponent; ++i) {
      prime_power = checked_mul(prime_power, prime);
    }
    if (!is_lambda_primitive_root(u, prime_power)) return false;
  }
  if (!is_lambda_primitive_root(u, n)) {
    throw std::logic_error("lift_primitive_root: local primitive roots of " +
                           std::to_string(n) + " did not lift for u = " +
                           std::to_string(u));
  }
  return true;
}

/// Smallest primitive root of p. Returns 1 for p = 2, whose only unit is 1.
inline Natural least_primitive_root(Natural p) {
  const PrimeRootTester test(p);
  if (p == 2) return 1;
  for (Natural tau = 2; tau < p; ++tau) {
    if (test(tau)) return tau;
  }
  throw std::logic_error("least_primitive_root: no primitive root found");
}

inline Natural count_primitive_roots(Natural p) {
  const PrimeRootTester test(p);
  Natural count = 0;
  for (Natural u = 1; u < p; ++u) {
    if (test(u)) ++count;
  }
  return count;
}

}  // namespace primroot
