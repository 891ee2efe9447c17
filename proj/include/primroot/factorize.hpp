#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "primroot/arith.hpp"

namespace primroot {

struct PrimePower {
  Natural prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer n together with its prime-power decomposition, primes ascending.
struct Factorization {
  Natural n = 1;
  std::vector<PrimePower> factors;

  /// Multiplies the factors back together.
  Natural reassemble() const {
    Natural value = 1;
    for (const auto& [prime, exponent] : factors) {
      for (unsigned i = 0; i < exponent; ++i) value = checked_mul(value, prime);
    }
    return value;
  }

  std::vector<Natural> primes() const {
    std::vector<Natural> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }
};

namespace detail {

inline bool miller_rabin_round(Natural n, Natural d, int s, Natural witness) {
  Natural a = witness % n;
  if (a == 0) return true;
  Natural x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

/// Odd primes below 2^20, built once on first use.
inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = [] {
    constexpr std::uint32_t kLimit = 1u << 20;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 3; i <= kLimit; i += 2) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kLimit; j += 2 * i) {
        composite[j] = true;
      }
    }
    return primes;
  }();
  return table;
}

}  // namespace detail

/// Deterministic for every 64-bit input.
inline bool is_prime(Natural n) {
  if (n < 2) return false;
  static constexpr std::array<Natural, 12> kSmall = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};
  for (Natural p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  Natural d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Jaeschke: {2,3,5,7} suffices below 3,215,031,751.
  if (n < 3'215'031'751ULL) {
    for (Natural w : {2, 3, 5, 7}) {
      if (!detail::miller_rabin_round(n, d, s, w)) return false;
    }
    return true;
  }
  // Jim Sinclair's 7-witness set, valid for all n < 2^64.
  for (Natural w : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                    1795265022ULL}) {
    if (!detail::miller_rabin_round(n, d, s, w)) return false;
  }
  return true;
}

namespace detail {

// Returns a nontrivial divisor of the odd composite n.
inline Natural pollard_brent(Natural n) {
  for (Natural c = 1;; ++c) {
    auto step = [&](Natural v) {
      return static_cast<Natural>(
          (static_cast<unsigned __int128>(v) * v + c) % n);
    };
    Natural y = 2, x = 2, ys = 2, q = 1, g = 1;
    constexpr Natural kBatch = 128;
    for (Natural r = 1; g == 1; r <<= 1) {
      x = y;
      for (Natural i = 0; i < r; ++i) y = step(y);
      for (Natural k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const Natural count = std::min(kBatch, r - k);
        for (Natural i = 0; i < count; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_composite(Natural n, std::vector<Natural>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const Natural r = isqrt(n);
  if (r * r == n) {
    split_composite(r, out);
    split_composite(r, out);
    return;
  }
  const Natural d = pollard_brent(n);
  split_composite(d, out);
  split_composite(n / d, out);
}

}  // namespace detail

inline Factorization factor(Natural n) {
  require(n >= 1, "factor: n must be >= 1");
  Factorization result{n, {}};
  Natural rest = n;
  if ((rest & 1) == 0) {
    const auto twos = static_cast<unsigned>(std::countr_zero(rest));
    result.factors.push_back({2, twos});
    rest >>= twos;
  }
  constexpr std::uint32_t kTrialLimit = 1'000'000;
  constexpr std::uint32_t kPrimalityCheckAfter = 1'000;
  bool checked = false;
  for (std::uint32_t p : detail::small_primes()) {
    if (p > kTrialLimit || Natural{p} * p > rest) break;
    if (!checked && p > kPrimalityCheckAfter) {
      checked = true;
      if (is_prime(rest)) break;
    }
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (rest > 1) {
    std::vector<Natural> large;
    detail::split_composite(rest, large);
    std::sort(large.begin(), large.end());
    for (Natural p : large) {
      if (!result.factors.empty() && result.factors.back().prime == p) {
        ++result.factors.back().exponent;
      } else {
        result.factors.push_back({p, 1});
      }
    }
  }
  return result;
}

inline Natural euler_phi(const Factorization& f) {
  Natural phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi = checked_mul(phi, p - 1);
    for (unsigned i = 1; i < e; ++i) phi = checked_mul(phi, p);
  }
  return phi;
}

/// Exponent of the unit group mod n. lambda(1) = lambda(2) = 1.
inline Natural carmichael_lambda(const Factorization& f) {
  Natural lambda = 1;
  for (const auto& [p, e] : f.factors) {
    Natural local = 0;
    if (p == 2 && e >= 3) {
      local = Natural{1} << (e - 2);
    } else {
      local = p - 1;
      for (unsigned i = 1; i < e; ++i) local = checked_mul(local, p);
    }
    lambda = lcm(lambda, local);
  }
  return lambda;
}

inline Natural omega(const Factorization& f) { return f.factors.size(); }

/// Moebius function; zero unless n is squarefree.
inline int mobius(const Factorization& f) {
  for (const auto& pe : f.factors) {
    if (pe.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

}  // namespace primroot
