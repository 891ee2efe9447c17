#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace primroot {

/// Nonnegative integers handled by the library. Values above kNaturalCeiling
/// are rejected rather than wrapped.
using Natural = std::uint64_t;

inline constexpr Natural kNaturalCeiling = (Natural{1} << 63) - 1;

/// Thrown when an input violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an intermediate result would exceed kNaturalCeiling.
class CeilingError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

inline Natural checked_mul(Natural a, Natural b) {
  if (a != 0 && b > kNaturalCeiling / a) {
    throw CeilingError("product " + std::to_string(a) + " * " +
                       std::to_string(b) + " exceeds the 2^63-1 ceiling");
  }
  return a * b;
}

inline Natural checked_add(Natural a, Natural b) {
  if (b > kNaturalCeiling - a) {
    throw CeilingError("sum " + std::to_string(a) + " + " + std::to_string(b) +
                       " exceeds the 2^63-1 ceiling");
  }
  return a + b;
}

inline Natural mul_mod(Natural a, Natural b, Natural m) {
  if (m <= std::numeric_limits<std::uint32_t>::max()) {
    return (a % m) * (b % m) % m;
  }
  return static_cast<Natural>(static_cast<unsigned __int128>(a) * b % m);
}

inline Natural mod_pow(Natural base, Natural exponent, Natural modulus) {
  require(modulus >= 1, "mod_pow: modulus must be >= 1");
  if (modulus == 1) return 0;
  Natural result = 1;
  base %= modulus;
  if (modulus <= std::numeric_limits<std::uint32_t>::max()) {
    // operands stay reduced, so 64-bit products cannot overflow
    while (exponent != 0) {
      if (exponent & 1) result = result * base % modulus;
      base = base * base % modulus;
      exponent >>= 1;
    }
    return result;
  }
  while (exponent != 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

inline Natural gcd(Natural a, Natural b) { return std::gcd(a, b); }

inline Natural lcm(Natural a, Natural b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

/// Value of a Legendre/Jacobi symbol.
enum class Kronecker : int { negative = -1, zero = 0, positive = 1 };

inline int to_int(Kronecker k) { return static_cast<int>(k); }

inline Kronecker jacobi(std::int64_t a, Natural n) {
  require(n >= 1 && (n & 1) == 1, "jacobi: modulus must be odd and >= 1");
  // reduce a into [0, n)
  Natural r = a >= 0 ? static_cast<Natural>(a) % n
                     : (n - static_cast<Natural>(-(a + 1)) % n - 1) % n;
  Natural m = n;
  int sign = 1;
  while (r != 0) {
    const int twos = std::countr_zero(r);
    r >>= twos;
    if ((twos & 1) && (m % 8 == 3 || m % 8 == 5)) sign = -sign;
    if (r % 4 == 3 && m % 4 == 3) sign = -sign;
    const Natural t = m % r;
    m = r;
    r = t;
  }
  if (m != 1) return Kronecker::zero;
  return sign > 0 ? Kronecker::positive : Kronecker::negative;
}

inline Natural isqrt(Natural n) {
  auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > n / r)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

inline bool is_perfect_square(Natural n) {
  const Natural r = isqrt(n);
  return r * r == n;
}

namespace detail {

inline double simpson_step(const std::function<double(double)>& f, double a,
                           double b, double fa, double fm, double fb,
                           double whole, double tolerance, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tolerance) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tolerance, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tolerance, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tolerance, int max_depth = 48) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tolerance, max_depth);
}

/// Offset logarithmic integral: integral of dt/ln t over [2, x].
inline double log_integral(double x) {
  require(x >= 2.0, "log_integral: x must be >= 2");
  const auto integrand = [](double t) { return 1.0 / std::log(t); };
  // Split at powers of two so each panel is well conditioned.
  double total = 0.0;
  double lo = 2.0;
  while (lo < x) {
    const double hi = std::min(2.0 * lo, x);
    total += adaptive_simpson(integrand, lo, hi, 1e-11);
    lo = hi;
  }
  return total;
}

}  // namespace primroot
