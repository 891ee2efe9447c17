#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "primroot/arith.hpp"
#include "primroot/factorize.hpp"
#include "primroot/primroot.hpp"

namespace primroot {

/// All primes <= limit, ascending. Segmented sieve of Eratosthenes over odd
/// numbers; memory is O(sqrt(limit) + segment).
inline std::vector<Natural> sieve_primes(Natural limit) {
  std::vector<Natural> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  if (limit < 3) return primes;

  const Natural root = isqrt(limit);
  std::vector<Natural> base;
  {
    std::vector<bool> composite(root + 1, false);
    for (Natural i = 3; i <= root; i += 2) {
      if (composite[i]) continue;
      base.push_back(i);
      for (Natural j = i * i; j <= root; j += 2 * i) composite[j] = true;
    }
  }

  constexpr Natural kSegment = Natural{1} << 18;  // odd numbers per segment
  std::vector<std::uint8_t> mark(kSegment);
  // segment covers odd numbers low, low+2, ..., low + 2*(kSegment-1)
  for (Natural low = 3; low <= limit; low += 2 * kSegment) {
    const Natural high = std::min(limit, low + 2 * (kSegment - 1));
    const Natural count = (high - low) / 2 + 1;
    std::fill(mark.begin(), mark.begin() + static_cast<std::ptrdiff_t>(count), 0);
    for (Natural p : base) {
      if (p * p > high) break;
      Natural start = std::max(p * p, (low + p - 1) / p * p);
      if ((start & 1) == 0) start += p;
      for (Natural j = (start - low) / 2; j < count; j += p) mark[j] = 1;
    }
    for (Natural j = 0; j < count; ++j) {
      if (!mark[j]) primes.push_back(low + 2 * j);
    }
  }
  return primes;
}

/// A prime p = 2^s * r + 1 with r an odd prime.
struct GermainForm {
  Natural p = 0;
  unsigned s = 0;
  Natural r = 0;

  friend bool operator==(const GermainForm&, const GermainForm&) = default;
};

inline std::optional<GermainForm> germain_decompose(Natural p) {
  require(p >= 3 && is_prime(p),
          "germain_decompose: p must be a prime >= 3, got " + std::to_string(p));
  const Natural m = p - 1;
  const auto s = static_cast<unsigned>(std::countr_zero(m));
  const Natural r = m >> s;
  if (r < 3 || !is_prime(r)) return std::nullopt;
  return GermainForm{p, s, r};
}

/// Generalized Germain primes <= limit, ascending; restricted to one s when
/// given.
inline std::vector<GermainForm> germain_primes(Natural limit,
                                               std::optional<unsigned> s = {}) {
  std::vector<GermainForm> out;
  for (Natural p : sieve_primes(limit)) {
    if (p < 3) continue;
    if (auto g = germain_decompose(p); g && (!s || g->s == *s)) out.push_back(*g);
  }
  return out;
}

namespace detail {

inline void require_test_base(Natural q, Natural p, const char* op) {
  require(q % p != 0, std::string(op) + ": q must be coprime to p");
  require(q % p != 1 && q % p != p - 1,
          std::string(op) + ": q must not be congruent to +1 or -1 mod p");
  require(!is_perfect_square(q),
          std::string(op) + ": q must not be a perfect square");
}

}  // namespace detail

/// Two-exponentiation primitive-root test for p = 2^s * r + 1. Only the
/// shape of `g` is checked here; primality of p and r is established by
/// germain_decompose.
inline bool germain_primitive_root_test(Natural q, const GermainForm& g) {
  require(g.r >= 3 && (g.r & 1) == 1 && g.s >= 1 && g.s < 63 &&
              checked_add(checked_mul(Natural{1} << g.s, g.r), 1) == g.p,
          "germain_primitive_root_test: malformed Germain form");
  detail::require_test_base(q, g.p, "germain_primitive_root_test");
  const Natural half = (Natural{1} << (g.s - 1)) * g.r;  // (p-1)/2
  const Natural two_part = Natural{1} << g.s;            // (p-1)/r
  return mod_pow(q, half, g.p) != 1 && mod_pow(q, two_part, g.p) != 1;
}

inline constexpr std::array<Natural, 5> kFermatPrimes = {3, 5, 17, 257, 65537};

inline bool is_fermat_prime(Natural f) {
  return std::find(kFermatPrimes.begin(), kFermatPrimes.end(), f) !=
         kFermatPrimes.end();
}

/// Modulo a Fermat prime, q is a primitive root iff it is a quadratic
/// nonresidue. No exponentiation needed.
inline bool fermat_primitive_root_test(Natural q, Natural fermat_prime) {
  require(is_fermat_prime(fermat_prime),
          "fermat_primitive_root_test: modulus must be one of 3, 5, 17, 257, "
          "65537, got " + std::to_string(fermat_prime));
  require(q % fermat_prime != 0,
          "fermat_primitive_root_test: q must be coprime to the modulus");
  return jacobi(static_cast<std::int64_t>(q % fermat_prime), fermat_prime) ==
         Kronecker::negative;
}

struct KPow2Prime {
  unsigned n = 0;
  Natural p = 0;

  friend bool operator==(const KPow2Prime&, const KPow2Prime&) = default;
};

struct KPow2Enumeration {
  std::vector<KPow2Prime> primes;
  /// Set when k * 2^n + 1 would exceed the ceiling; enumeration stopped
  /// before this n.
  std::optional<unsigned> cutoff;
};

/// Primes of the form k * 2^n + 1 for 0 <= n <= n_max.
inline KPow2Enumeration enumerate_k_pow2_primes(Natural k, unsigned n_max) {
  require(k >= 3 && (k & 1) == 1 && is_prime(k),
          "enumerate_k_pow2_primes: k must be an odd prime");
  KPow2Enumeration out;
  Natural value = k;  // k * 2^n
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) {
      if (value > (kNaturalCeiling - 1) / 2) {
        out.cutoff = n;
        break;
      }
      value *= 2;
    }
    if (is_prime(value + 1)) out.primes.push_back({n, value + 1});
  }
  return out;
}

/// Special-family membership of a prime. A prime can carry several tags.
struct PrimeClass {
  bool fermat = false;
  std::optional<unsigned> germain_s;
  /// Odd-prime k with p = k * 2^n + 1, n >= 0.
  std::optional<Natural> k_times_pow2;

  bool ordinary() const { return !fermat && !germain_s && !k_times_pow2; }
};

inline PrimeClass classify_prime(Natural p) {
  require(is_prime(p), "classify_prime: p must be prime");
  PrimeClass c;
  c.fermat = is_fermat_prime(p);
  if (p >= 3) {
    if (auto g = germain_decompose(p)) {
      c.germain_s = g->s;
      c.k_times_pow2 = g->r;
    }
  }
  return c;
}

}  // namespace primroot
