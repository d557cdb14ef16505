#include <gtest/gtest.h>

#include <map>
#include <random>

#include "sylow/numtheory.hpp"

using namespace sylow;

namespace {

// Naive oracles, deliberately independent of the library code paths.

std::vector<Integer> trial_primes(Integer n) {
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool naive_prime(Integer n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer naive_order(Integer q, Integer p) {
  Integer x = ((q % p) + p) % p;
  Integer k = 1;
  while (x != 1) {
    x = x * (((q % p) + p) % p) % p;
    ++k;
  }
  return k;
}

// Phi_n(q) by dividing q^n - 1 by Phi_d(q) for proper divisors d.
BigInt recursive_cyclotomic(Integer n, Integer q, std::map<Integer, BigInt>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  BigInt value = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n)) - 1;
  for (Integer d = 1; d < n; ++d) {
    if (n % d == 0) value /= recursive_cyclotomic(d, q, memo);
  }
  memo[n] = value;
  return value;
}

}  // namespace

TEST(Checked, OverflowThrows) {
  EXPECT_EQ(checked::pow(2, 62), Integer{1} << 62);
  EXPECT_THROW(checked::pow(2, 63), DomainError);
  EXPECT_THROW(checked::mul(Integer{1} << 40, Integer{1} << 30), DomainError);
  EXPECT_THROW(checked::add(INT64_MAX, 1), DomainError);
  EXPECT_EQ(to_integer(BigInt(123456789)), 123456789);
  EXPECT_THROW(to_integer(BigInt(1) << 70), DomainError);
}

TEST(IsPrime, MatchesTrialDivisionBelow20000) {
  for (Integer n = -3; n < 20000; ++n) ASSERT_EQ(is_prime(n), naive_prime(n)) << n;
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(is_prime(2305843009213693951));  // 2^61 - 1
  EXPECT_FALSE(is_prime(3215031751));          // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(Integer{1000000007} * 998244353));
}

TEST(Factorize, ReconstructsAndMatchesTrialDivision) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Integer n = static_cast<Integer>(rng() % 100'000'000) + 2;
    const Factorization f = factorize(n);
    ASSERT_EQ(f.value(), n);
    ASSERT_EQ(f.primes(), trial_primes(n)) << n;
  }
}

TEST(Factorize, SemiprimeBeyondTrialRange) {
  const Integer a = 1000003;
  const Integer b = 1000033;
  const Factorization f = factorize(a * b);
  ASSERT_EQ(f.entries().size(), 2u);
  EXPECT_EQ(f.entries()[0].prime, a);
  EXPECT_EQ(f.entries()[1].prime, b);
  EXPECT_THROW(factorize(1), DomainError);
}

TEST(PrimePower, Recognition) {
  EXPECT_EQ(as_prime_power(144), std::nullopt);
  EXPECT_EQ(as_prime_power(1), std::nullopt);
  const auto pp = as_prime_power(243);
  ASSERT_TRUE(pp.has_value());
  EXPECT_EQ(pp->base, 3);
  EXPECT_EQ(pp->exponent, 5);
  EXPECT_EQ(as_prime_power(7)->exponent, 1);
}

TEST(Arithmetic, TotientMoebiusDivisors) {
  EXPECT_EQ(euler_totient(1), 1);
  EXPECT_EQ(euler_totient(36), 12);
  EXPECT_EQ(euler_totient(97), 96);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(moebius(12), 0);
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(divisors(144).size(), 15u);
  EXPECT_EQ(divisors(12), (std::vector<Integer>{1, 2, 3, 4, 6, 12}));
  for (Integer n = 1; n < 300; ++n) {
    Integer count = 0;
    for (Integer k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    ASSERT_EQ(euler_totient(n), count) << n;
  }
}

TEST(MultiplicativeOrder, MatchesNaiveIteration) {
  for (Integer p : primes_up_to(200)) {
    for (Integer q = 1; q < 40; ++q) {
      if (q % p == 0) {
        EXPECT_THROW(multiplicative_order(q, p), DomainError);
        continue;
      }
      ASSERT_EQ(multiplicative_order(q, p), naive_order(q, p)) << q << " mod " << p;
    }
  }
  EXPECT_THROW(multiplicative_order(2, 9), DomainError);
}

TEST(ClassifyPrimitive, Examples) {
  // 13 | 3^3 - 1: primitive for q^e - 1 with e = 3.
  EXPECT_EQ(classify_primitive(3, 13), (PrimitiveClass{PrimitiveClass::Kind::OfE, 3}));
  // 5 | 2^2 + 1: primitive for 2^4 - 1.
  const PrimitiveClass c = classify_primitive(2, 5);
  EXPECT_EQ(c.kind, PrimitiveClass::Kind::OfTwoE);
  EXPECT_EQ(c.e, 2);
  EXPECT_EQ(c.exponent(), 4);
  EXPECT_THROW(classify_primitive(3, 2), DomainError);
}

TEST(ClassifyPrimitive, ExponentIsMultiplicativeOrder) {
  for (Integer p : primes_up_to(300)) {
    if (p == 2) continue;
    for (Integer q = 2; q < 30; ++q) {
      if (q % p == 0) continue;
      const PrimitiveClass c = classify_primitive(q, p);
      ASSERT_EQ(c.exponent(), naive_order(q, p));
      if (c.kind == PrimitiveClass::Kind::OfE) ASSERT_EQ(c.e % 2, 1);
    }
  }
}

TEST(Cyclotomic, MoebiusProductMatchesRecursiveDivision) {
  for (Integer q = 2; q <= 12; ++q) {
    std::map<Integer, BigInt> memo;
    for (Integer n = 1; n <= 36; ++n) {
      ASSERT_EQ(cyclotomic_value_big(n, q), recursive_cyclotomic(n, q, memo)) << "n=" << n << " q=" << q;
    }
  }
  EXPECT_EQ(cyclotomic_value(3, 3), 13);
  EXPECT_EQ(cyclotomic_value(6, 3), 7);
  EXPECT_EQ(cyclotomic_value(4, 2), 5);
  EXPECT_THROW(cyclotomic_value(60, 1000), DomainError);
}

TEST(Cyclotomic, GlasbyBoundBelowFourQPhi) {
  for (Integer q = 2; q <= 32; ++q) {
    for (Integer e = 1; e <= 36; ++e) {
      const BigInt bound = 4 * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(euler_totient(e)));
      ASSERT_LT(cyclotomic_value_big(e, q), bound) << "e=" << e << " q=" << q;
    }
  }
}

TEST(Zsigmondy, ExceptionsAndExamples) {
  EXPECT_EQ(zsigmondy(2, 6).kind, ZsigmondyResult::Kind::ExceptionTwoSix);
  EXPECT_EQ(zsigmondy(3, 2).kind, ZsigmondyResult::Kind::ExceptionMersenneLike);
  EXPECT_EQ(zsigmondy(7, 2).kind, ZsigmondyResult::Kind::ExceptionMersenneLike);
  EXPECT_EQ(zsigmondy(3, 3).primes, std::vector<Integer>{13});
  EXPECT_EQ(zsigmondy(2, 12).primes, std::vector<Integer>{13});
  EXPECT_THROW(zsigmondy(1, 3), DomainError);
}

TEST(SpecialPrimes, FermatAndMersenne) {
  std::vector<Integer> fermat;
  std::vector<Integer> mersenne;
  for (Integer p = 2; p < 70000; ++p) {
    if (is_fermat_prime(p)) fermat.push_back(p);
    if (is_mersenne_prime(p)) mersenne.push_back(p);
  }
  EXPECT_EQ(fermat, (std::vector<Integer>{3, 5, 17, 257, 65537}));
  EXPECT_EQ(mersenne, (std::vector<Integer>{3, 7, 31, 127, 8191}));
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(12));
}

TEST(LemmaNumber, OnlyTheDegenerateSolution) {
  const auto solutions = lemma_number_solutions(1'000'000);
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(solutions[0], (LemmaNumberSolution{1, 3, 1, 1}));
}

TEST(LemmaNumber, AgreesWithDirectScan) {
  // Every prime p <= 10^5, not just Fermat candidates: (p-1)(p-2)/2 = q^a
  // with p - 1 a power of two.
  std::vector<Integer> hits;
  for (Integer p : primes_up_to(100000)) {
    if (p < 3 || !is_power_of_two(p - 1)) continue;
    const Integer half = (p - 1) * (p - 2) / 2;
    if (half == 1 || as_prime_power(half)) hits.push_back(p);
  }
  EXPECT_EQ(hits, std::vector<Integer>{3});
}

TEST(Misc, PrimesAndSqrt) {
  EXPECT_EQ(primes_up_to(20), (std::vector<Integer>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_EQ(primes_up_to(1).size(), 0u);
  EXPECT_EQ(exact_sqrt(16), 4);
  EXPECT_EQ(exact_sqrt(15), std::nullopt);
  EXPECT_EQ(exact_sqrt(Integer{3037000499} * 3037000499), 3037000499);
  EXPECT_EQ(pow_mod(3, 200, 13), 9);
  EXPECT_EQ(gcd(12, 18), 6);
}
