#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "primroot/arith.hpp"
#include "primroot/factorize.hpp"
#include "primroot/primroot.hpp"
#include "primroot/special_primes.hpp"

namespace primroot {

/// Published value of Artin's constant, for reference comparisons only.
inline constexpr double kArtinReference = 0.37395581361920228805;

struct ArtinConstant {
  Natural truncation = 0;
  double value = 0.0;
  /// Envelope on the neglected tail of the log-product: 1 / truncation.
  double tail_bound = 0.0;
};

/// Euler product over primes <= prime_cutoff of 1 - 1/(p(p-1)).
inline ArtinConstant artin_constant(Natural prime_cutoff) {
  require(prime_cutoff >= 2, "artin_constant: prime_cutoff must be >= 2");
  // Summing logs keeps the rounding error far below the 1e-6 target.
  double log_product = 0.0;
  for (Natural p : sieve_primes(prime_cutoff)) {
    const auto pd = static_cast<double>(p);
    log_product += std::log1p(-1.0 / (pd * (pd - 1.0)));
  }
  return {prime_cutoff, std::exp(log_product),
          1.0 / static_cast<double>(prime_cutoff)};
}

/// Euler product truncated at 10^6, computed once.
inline double artin_constant_value() {
  static const double value = artin_constant(1'000'000).value;
  return value;
}

namespace detail {

inline void require_admissible_base(Natural q, const char* op) {
  require(q >= 2, std::string(op) + ": q must not be 0 or 1");
  require(!is_perfect_square(q),
          std::string(op) + ": q = " + std::to_string(q) +
              " is a perfect square, excluded (q must not be of the form v^2)");
}

/// Runs body(i) for i in [0, count) over `threads` workers with static
/// contiguous partitioning.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace detail

struct DensityReport {
  Natural q = 0;
  Natural x = 0;
  Natural pi_x = 0;
  /// Odd primes p <= x, coprime to q, with q a primitive root mod p.
  Natural pi_q_x = 0;
  double density = 0.0;
  double artin_reference = 0.0;
  /// density / a1, an empirical estimate of the correction factor c(q).
  double correction_estimate = 0.0;
};

inline DensityReport prime_counts(Natural q, Natural x, unsigned threads = 1) {
  detail::require_admissible_base(q, "prime_counts");
  require(x >= 3, "prime_counts: x must be >= 3");
  const auto primes = sieve_primes(x);
  std::vector<std::uint8_t> hit(primes.size(), 0);
  detail::parallel_for(primes.size(), threads, [&](std::size_t i) {
    const Natural p = primes[i];
    if (p >= 3 && q % p != 0) hit[i] = is_primitive_root_prime(q, p) ? 1 : 0;
  });
  DensityReport r;
  r.q = q;
  r.x = x;
  r.pi_x = primes.size();
  for (auto h : hit) r.pi_q_x += h;
  r.density = static_cast<double>(r.pi_q_x) / static_cast<double>(r.pi_x);
  r.artin_reference = artin_constant_value();
  r.correction_estimate = r.density / r.artin_reference;
  return r;
}

struct LeastPrimeResult {
  Natural q = 0;
  Natural cap = 0;
  /// Empty when no prime <= cap qualifies.
  std::optional<Natural> prime;

  bool exhausted() const { return !prime.has_value(); }
};

/// Smallest prime p >= 3, coprime to q, modulo which q is a primitive root.
inline LeastPrimeResult least_prime_with_primitive_root(Natural q,
                                                        Natural cap = 100'000) {
  detail::require_admissible_base(q, "least_prime_with_primitive_root");
  require(cap >= 3, "least_prime_with_primitive_root: cap must be >= 3");
  for (Natural p = 3; p <= cap; p += 2) {
    if (!is_prime(p) || q % p == 0) continue;
    if (is_primitive_root_prime(q, p)) return {q, cap, p};
  }
  return {q, cap, std::nullopt};
}

/// (ln q)(ln ln q)^3, defined for q >= 16.
inline std::optional<double> conjecture_bound(Natural q) {
  if (q < 16) return std::nullopt;
  const double lq = std::log(static_cast<double>(q));
  const double llq = std::log(lq);
  return lq * llq * llq * llq;
}

struct ScanRecord {
  Natural q = 0;
  std::optional<Natural> least_p;  // empty on exhaustion
  std::optional<double> bound_value;
  std::optional<double> ratio;
  bool germain_hit = false;
  /// least_p / (ln q)^c when an exponent c was supplied.
  std::optional<double> log_power_ratio;
};

struct ScanSummary {
  Natural records = 0;
  Natural exhausted = 0;
  std::optional<double> max_ratio;
  std::optional<Natural> max_ratio_q;
  Natural max_least_p = 0;
  double germain_fraction = 0.0;
  std::optional<double> max_log_power_ratio;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

inline ScanRecord scan_one(Natural q, Natural cap,
                           std::optional<double> log_power) {
  ScanRecord rec;
  rec.q = q;
  rec.least_p = least_prime_with_primitive_root(q, cap).prime;
  rec.bound_value = conjecture_bound(q);
  if (rec.least_p) {
    const auto lp = static_cast<double>(*rec.least_p);
    if (rec.bound_value) rec.ratio = lp / *rec.bound_value;
    rec.germain_hit = germain_decompose(*rec.least_p).has_value();
    if (log_power) {
      rec.log_power_ratio =
          lp / std::pow(std::log(static_cast<double>(q)), *log_power);
    }
  }
  return rec;
}

/// Least-prime scan over admissible q in [q_min, q_max]; perfect squares are
/// skipped. Records come back in ascending q for any thread count.
inline ScanResult conjecture_scan(Natural q_min, Natural q_max,
                                  Natural cap = 100'000, unsigned threads = 1,
                                  std::optional<double> log_power = {}) {
  require(q_min >= 2 && q_min <= q_max,
          "conjecture_scan: need 2 <= q_min <= q_max");
  std::vector<Natural> bases;
  for (Natural q = q_min; q <= q_max; ++q) {
    if (!is_perfect_square(q)) bases.push_back(q);
  }
  ScanResult out;
  out.records.resize(bases.size());
  detail::parallel_for(bases.size(), threads, [&](std::size_t i) {
    out.records[i] = scan_one(bases[i], cap, log_power);
  });

  auto& s = out.summary;
  s.records = out.records.size();
  Natural germain = 0;
  for (const auto& r : out.records) {
    if (!r.least_p) {
      ++s.exhausted;
      continue;
    }
    s.max_least_p = std::max(s.max_least_p, *r.least_p);
    if (r.germain_hit) ++germain;
    if (r.ratio && (!s.max_ratio || *r.ratio > *s.max_ratio)) {
      s.max_ratio = r.ratio;
      s.max_ratio_q = r.q;
    }
    if (r.log_power_ratio &&
        (!s.max_log_power_ratio || *r.log_power_ratio > *s.max_log_power_ratio)) {
      s.max_log_power_ratio = r.log_power_ratio;
    }
  }
  if (s.records > 0) {
    s.germain_fraction =
        static_cast<double>(germain) / static_cast<double>(s.records);
  }
  return out;
}

}  // namespace primroot
