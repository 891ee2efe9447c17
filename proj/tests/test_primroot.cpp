#include <gtest/gtest.h>

#include "oracles.hpp"
#include "primroot/primroot.hpp"

using namespace primroot;

TEST(MultiplicativeOrder, Examples) {
  auto r = multiplicative_order(2, 5);
  EXPECT_EQ(r.order, 4u);
  EXPECT_EQ(r.group_exponent, 4u);
  EXPECT_TRUE(r.is_lambda_primitive);

  r = multiplicative_order(4, 5);
  EXPECT_EQ(r.order, 2u);
  EXPECT_FALSE(r.is_lambda_primitive);

  for (Natural n : {2u, 3u, 8u, 15u, 1001u}) {
    EXPECT_EQ(multiplicative_order(1, n).order, 1u);
  }
  // u is reduced before the computation
  EXPECT_EQ(multiplicative_order(12, 5).u, 2u);
  EXPECT_EQ(multiplicative_order(12, 5).order, 4u);
}

TEST(MultiplicativeOrder, Errors) {
  EXPECT_THROW(multiplicative_order(3, 6), DomainError);
  EXPECT_THROW(multiplicative_order(0, 7), DomainError);
  EXPECT_THROW(multiplicative_order(1, 1), DomainError);
  EXPECT_THROW(multiplicative_order(1, 0), DomainError);
}

TEST(MultiplicativeOrder, MatchesEnumerationAndInvariants) {
  for (Natural n = 2; n <= 400; ++n) {
    const Natural lambda = carmichael_lambda(factor(n));
    for (Natural u = 1; u < n; ++u) {
      if (gcd(u, n) != 1) continue;
      const auto r = multiplicative_order(u, n);
      ASSERT_EQ(r.order, oracle::order(u, n)) << u << " mod " << n;
      EXPECT_EQ(r.group_exponent, lambda);
      EXPECT_EQ(lambda % r.order, 0u);
      EXPECT_EQ(mod_pow(u, r.order, n), 1u);
      for (const auto& pe : factor(r.order).factors) {
        EXPECT_NE(mod_pow(u, r.order / pe.prime, n), 1u);
      }
      EXPECT_EQ(r.is_lambda_primitive, r.order == lambda);
    }
  }
}

TEST(MultiplicativeOrder, LargeModulus) {
  const Natural p = (Natural{1} << 61) - 1;
  // 2 has order 61 modulo the Mersenne prime 2^61 - 1
  EXPECT_EQ(multiplicative_order(2, p).order, 61u);
  const auto r = multiplicative_order(37, p);
  EXPECT_EQ(r.group_exponent, p - 1);
  EXPECT_EQ(mod_pow(37, r.order, p), 1u);
  for (const auto& pe : factor(r.order).factors) {
    EXPECT_NE(mod_pow(37, r.order / pe.prime, p), 1u);
  }
}

TEST(IsPrimitiveRootPrime, Examples) {
  EXPECT_TRUE(is_primitive_root_prime(2, 5));
  EXPECT_TRUE(is_primitive_root_prime(3, 5));
  EXPECT_FALSE(is_primitive_root_prime(4, 5));
  EXPECT_TRUE(is_primitive_root_prime(7, 5));  // 7 = 5 + 2
  EXPECT_TRUE(is_primitive_root_prime(1, 2));
}

TEST(IsPrimitiveRootPrime, Errors) {
  EXPECT_THROW(is_primitive_root_prime(2, 9), DomainError);
  EXPECT_THROW(is_primitive_root_prime(10, 5), DomainError);
}

TEST(IsPrimitiveRootPrime, EquivalentToFullOrder) {
  for (Natural p : oracle::primes_upto(2000)) {
    const PrimeRootTester test(p);
    for (Natural u = 1; u < p; ++u) {
      ASSERT_EQ(test(u), oracle::order(u, p) == p - 1) << u << " mod " << p;
    }
  }
}

TEST(IsPrimitiveRootPrime, PrimitiveRootsAreNonresidues) {
  for (Natural p : oracle::primes_upto(3000)) {
    if (p == 2) continue;
    const PrimeRootTester test(p);
    for (Natural u = 1; u < p; ++u) {
      if (test(u)) {
        ASSERT_EQ(jacobi(static_cast<std::int64_t>(u), p), Kronecker::negative);
      }
    }
  }
}

TEST(IsLambdaPrimitiveRoot, Examples) {
  EXPECT_TRUE(is_lambda_primitive_root(2, 15));
  EXPECT_TRUE(is_lambda_primitive_root(2, 9));
  for (Natural n : {5u, 8u, 9u, 15u, 77u}) EXPECT_FALSE(is_lambda_primitive_root(1, n));
  EXPECT_THROW(is_lambda_primitive_root(3, 15), DomainError);
}

TEST(IsLambdaPrimitiveRoot, MatchesMaximalOrder) {
  for (Natural n = 2; n <= 300; ++n) {
    const Natural best = oracle::max_order(n);
    for (Natural u = 1; u < n; ++u) {
      if (oracle::gcd(u, n) != 1) continue;
      ASSERT_EQ(is_lambda_primitive_root(u, n), oracle::order(u, n) == best)
          << u << " mod " << n;
    }
  }
}

TEST(LiftPrimitiveRoot, Examples) {
  EXPECT_TRUE(lift_primitive_root(2, factor(15)));
  EXPECT_TRUE(is_lambda_primitive_root(2, 15));
  EXPECT_TRUE(lift_primitive_root(2, factor(9)));
  EXPECT_THROW(lift_primitive_root(4, factor(15)), DomainError);   // square
  EXPECT_THROW(lift_primitive_root(14, factor(15)), DomainError);  // -1
  EXPECT_THROW(lift_primitive_root(16, factor(15)), DomainError);  // +1 and square
  EXPECT_THROW(lift_primitive_root(3, factor(15)), DomainError);   // shared factor
}

TEST(LiftPrimitiveRoot, SoundOnOddSquarefreeSemiprimes) {
  const auto primes = oracle::primes_upto(1500);
  int lifted = 0;
  for (std::size_t i = 1; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const Natural n = primes[i] * primes[j];
      if (n > 3000) break;
      const auto f = factor(n);
      const Natural lambda = carmichael_lambda(f);
      for (Natural u = 2; u < n - 1; ++u) {
        if (gcd(u, n) != 1 || is_perfect_square(u)) continue;
        const bool local = oracle::order(u, primes[i]) == primes[i] - 1 &&
                           oracle::order(u, primes[j]) == primes[j] - 1;
        const bool result = lift_primitive_root(u, f);
        ASSERT_EQ(result, local) << u << " mod " << n;
        if (result) {
          ++lifted;
          ASSERT_EQ(oracle::order(u, n), lambda);
        }
      }
    }
  }
  EXPECT_GT(lifted, 0);
}

TEST(LeastPrimitiveRoot, Examples) {
  EXPECT_EQ(least_primitive_root(5), 2u);
  EXPECT_EQ(least_primitive_root(7), 3u);
  EXPECT_EQ(least_primitive_root(3), 2u);
  EXPECT_EQ(least_primitive_root(2), 1u);
  EXPECT_EQ(least_primitive_root(191), 19u);
  EXPECT_THROW(least_primitive_root(9), DomainError);
}

TEST(LeastPrimitiveRoot, IsMinimal) {
  for (Natural p : oracle::primes_upto(3000)) {
    if (p == 2) continue;
    const Natural tau = least_primitive_root(p);
    EXPECT_EQ(oracle::order(tau, p), p - 1);
    for (Natural v = 2; v < tau; ++v) EXPECT_NE(oracle::order(v, p), p - 1);
  }
}

TEST(CountPrimitiveRoots, Examples) {
  EXPECT_EQ(count_primitive_roots(5), 2u);
  EXPECT_EQ(count_primitive_roots(7), 2u);
  EXPECT_EQ(count_primitive_roots(3), 1u);
  EXPECT_THROW(count_primitive_roots(21), DomainError);
}

TEST(CountPrimitiveRoots, EqualsTotientOfPMinusOne) {
  for (Natural p : oracle::primes_upto(3000)) {
    EXPECT_EQ(count_primitive_roots(p), oracle::totient(p - 1)) << p;
  }
}
