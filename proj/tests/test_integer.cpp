#include <monoquad/integer.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>

using namespace monoquad;

namespace {

Integer big(const char* s) { return Integer(s); }

Integer power(long b, unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), e);
  return out;
}

}  // namespace

TEST(ModPow, Examples) {
  EXPECT_EQ(mod_pow(33, 4, 2), 1);
  EXPECT_EQ(mod_pow(5, 3, 7), 6);
  EXPECT_EQ(mod_pow(0, 0, 7), 1);
  EXPECT_EQ(mod_pow(12345, 0, 2), 1);
  EXPECT_EQ(mod_pow(-3, 3, 5), 3);  // -27 = 3 mod 5
}

TEST(ModPow, RejectsBadArguments) {
  EXPECT_THROW(mod_pow(3, 2, 1), DomainError);
  EXPECT_THROW(mod_pow(3, 2, 0), DomainError);
  EXPECT_THROW(mod_pow(3, -1, 7), DomainError);
}

TEST(ModPow, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const Integer base = Integer(static_cast<long>(rng() % 2'000'001)) - 1'000'000;
    const Integer m = Integer(static_cast<long>(rng() % 1'000'000'000)) + 2;
    const unsigned e = static_cast<unsigned>(rng() % 13);
    ASSERT_EQ(mod_pow(base, e, m), oracle::naive_mod_pow(base, e, m)) << base << "^" << e << " mod " << m;
  }
}

TEST(WordArithmetic, MulModNearTop) {
  const std::uint64_t m = (std::uint64_t{1} << 62) - 57;
  for (std::uint64_t a : {m - 1, m - 2, std::uint64_t{123456789}}) {
    const Integer want = (from_u64(a) * from_u64(m - 1)) % from_u64(m);
    EXPECT_EQ(from_u64(mul_mod(a, m - 1, m)), want);
  }
  EXPECT_EQ(mul_mod(inv_mod(7, 101), 7, 101), 1u);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(p_adic_valuation(12, 2).v, 2u);
  EXPECT_EQ(p_adic_valuation(12, 2).cofactor, 3);
  EXPECT_EQ(p_adic_valuation(9, 2).v, 0u);
  EXPECT_EQ(p_adic_valuation(9, 2).cofactor, 9);
  EXPECT_EQ(p_adic_valuation(9, 3).v, 2u);
  EXPECT_EQ(p_adic_valuation(9, 3).cofactor, 1);
  EXPECT_EQ(p_adic_valuation(-24, 2).cofactor, -3);
  EXPECT_THROW(p_adic_valuation(0, 3), DomainError);
}

TEST(Valuation, RecoversConstructedPowers) {
  std::mt19937_64 rng(2);
  const auto primes = primes_up_to(1000);
  for (int t = 0; t < 1000; ++t) {
    const std::uint64_t p = primes[rng() % primes.size()];
    const unsigned k = static_cast<unsigned>(rng() % 51);
    long m = 1 + static_cast<long>(rng() % 999'999);
    while (m % static_cast<long>(p) == 0) ++m;
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    const auto [v, cof] = p_adic_valuation(pk * m, from_u64(p));
    ASSERT_EQ(v, k);
    ASSERT_EQ(cof, m);
  }
}

TEST(Primality, Examples) {
  EXPECT_TRUE(is_prime(Integer(11)));
  EXPECT_FALSE(is_prime(Integer(1185921)));
  EXPECT_TRUE(is_prime(Integer(37)));
  EXPECT_FALSE(is_prime(Integer(0)));
  EXPECT_FALSE(is_prime(Integer(1)));
  EXPECT_TRUE(is_prime(Integer(2)));
}

TEST(Primality, AgreesWithSieve) {
  // sieve of Eratosthenes written out here, independent of primes_up_to
  const std::size_t n = 200'000;
  std::vector<bool> composite(n + 1, false);
  for (std::size_t i = 2; i * i <= n; ++i)
    if (!composite[i])
      for (std::size_t j = i * i; j <= n; j += i) composite[j] = true;
  for (std::size_t i = 0; i <= n; ++i) ASSERT_EQ(is_prime(std::uint64_t{i}), i >= 2 && !composite[i]) << i;
}

TEST(Primality, StrongPseudoprimesAndLargePrimes) {
  // strong pseudoprimes to several small bases
  for (const char* s : {"3215031751", "2152302898747", "3474749660383", "341550071728321", "3825123056546413051",
                        "318665857834031151167461", "3317044064679887385961981"})
    EXPECT_FALSE(is_prime(big(s))) << s;
  EXPECT_FALSE(is_prime(Integer(561)));
  EXPECT_TRUE(is_prime(power(2, 61) - 1));
  EXPECT_TRUE(is_prime(power(2, 89) - 1));
  EXPECT_TRUE(is_prime(power(2, 127) - 1));
  EXPECT_FALSE(is_prime((power(2, 61) - 1) * (power(2, 89) - 1)));
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557u}));  // largest prime below 2^64
}

TEST(Factor, Examples) {
  const FactoredInteger f = factor(360);
  EXPECT_EQ(f.sign, 1);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0], (PrimePower{2, 3}));
  EXPECT_EQ(f.factors[1], (PrimePower{3, 2}));
  EXPECT_EQ(f.factors[2], (PrimePower{5, 1}));
  EXPECT_TRUE(f.complete());
  EXPECT_THROW(factor(0), DomainError);
  EXPECT_EQ(factor(-1).sign, -1);
  EXPECT_TRUE(factor(-1).factors.empty());
}

TEST(Factor, ExampleDiscriminants) {
  const Integer d1 = -power(2, 24) * power(3, 24) * power(11, 11) * 29 * 37;
  const FactoredInteger f1 = factor(d1);
  EXPECT_EQ(f1.sign, -1);
  EXPECT_EQ(f1.factors, (std::vector<PrimePower>{{2, 24}, {3, 24}, {11, 11}, {29, 1}, {37, 1}}));
  EXPECT_TRUE(f1.complete());

  const Integer d2 = power(2, 24) * power(3, 19) * 47;
  const FactoredInteger f2 = factor(d2);
  EXPECT_EQ(f2.sign, 1);
  EXPECT_EQ(f2.factors, (std::vector<PrimePower>{{2, 24}, {3, 19}, {47, 1}}));
  EXPECT_TRUE(f2.complete());
}

TEST(Factor, RhoFindsMediumFactors) {
  const Integer p = big("1000000007"), q = big("998244353"), r = big("4294967311");
  const FactoredInteger f = factor(p * q * q * r);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{q, 2}, {p, 1}, {r, 1}}));
  EXPECT_TRUE(f.complete());
}

TEST(Factor, PerfectPowersOfLargePrimes) {
  const Integer p = big("1000000000039");
  const FactoredInteger f = factor(p * p * p * 8);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{2, 3}, {p, 3}}));
}

TEST(Factor, BudgetExhaustionLeavesCofactor) {
  // two 30-digit primes: out of reach of a tiny rho budget
  const Integer p = big("100000000000000000000000000319"), q = big("100000000000000000000000000379");
  FactorBudget budget;
  budget.rho_cap = 100;
  const FactoredInteger f = factor(Integer(12) * p * q, budget);
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(f.cofactor, p * q);
  EXPECT_EQ(f.value(), Integer(12) * p * q);
  EXPECT_EQ(f.exponent_of(2), 2u);
}

TEST(Factor, ReassemblyOfRandomIntegers) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10'000; ++t) {
    const auto mag = static_cast<long long>(rng() % 1'000'000'000'000'000'000ULL);
    Integer x(static_cast<long>(mag));
    if (x == 0) x = 1;
    if (rng() & 1) x = -x;
    const FactoredInteger f = factor(x);
    ASSERT_TRUE(f.complete()) << x;
    ASSERT_EQ(f.value(), x);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      ASSERT_TRUE(is_prime(f.factors[i].prime)) << f.factors[i].prime;
      if (i) {
        ASSERT_LT(f.factors[i - 1].prime, f.factors[i].prime);
      }
    }
  }
}

TEST(Factor, SeedDoesNotChangeResult) {
  const Integer n = big("1000000007") * big("1000000009") * big("998244353");
  FactorBudget a, b;
  b.seed = 77;
  EXPECT_EQ(factor(n, a), factor(n, b));
}
