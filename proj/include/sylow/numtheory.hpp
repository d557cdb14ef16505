#pragma once

// Exact integer number theory: factorization, orders, cyclotomic values,
// primitive prime divisors.
//
// All public integers are signed 64-bit. Arithmetic that would leave the
// 63-bit range throws DomainError instead of wrapping.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylow/errors.hpp"

namespace sylow {

using Integer = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace checked {

Integer add(Integer a, Integer b);
Integer sub(Integer a, Integer b);
Integer mul(Integer a, Integer b);
Integer pow(Integer base, Integer exponent);

}  // namespace checked

/// Converts an exact big integer back to 63 bits or throws DomainError.
Integer to_integer(const BigInt& value);

struct PrimeFactor {
  Integer prime;
  int exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization with strictly increasing primes.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimeFactor> entries);

  const std::vector<PrimeFactor>& entries() const { return entries_; }
  std::vector<Integer> primes() const;
  /// Product of prime^exponent.
  Integer value() const;
  /// Exponent of `prime`, zero if absent.
  int exponent_of(Integer prime) const;
  bool is_prime_power() const { return entries_.size() == 1; }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimeFactor> entries_;
};

struct PrimePower {
  Integer base;
  int exponent;
  Integer value;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(Integer n);

/// Trial division to 10^6, then Pollard rho (Brent) with deterministic
/// Miller-Rabin.
Factorization factorize(Integer n);

/// Returns base^exponent when n > 1 is a prime power.
std::optional<PrimePower> as_prime_power(Integer n);

Integer euler_totient(Integer n);
Integer gcd(Integer a, Integer b);
Integer pow_mod(Integer base, Integer exponent, Integer modulus);
std::vector<Integer> divisors(Integer n);
/// Moebius function.
int moebius(Integer n);

/// Least k >= 1 with q^k = 1 (mod p). Requires p prime, p not dividing q.
Integer multiplicative_order(Integer q, Integer p);

/// Least k >= 1 with q^(2k) = 1 (mod p).
Integer half_order_parameter(Integer q, Integer p);

/// Which of q^e - 1 or q^(2e) - 1 (e = half_order_parameter) has p as a
/// primitive prime divisor.
struct PrimitiveClass {
  enum class Kind { OfE, OfTwoE };
  Kind kind;
  Integer e;

  /// The exponent k for which p is a primitive prime divisor of q^k - 1.
  Integer exponent() const { return kind == Kind::OfE ? e : 2 * e; }

  friend bool operator==(const PrimitiveClass&, const PrimitiveClass&) = default;
};

PrimitiveClass classify_primitive(Integer q, Integer p);

struct ZsigmondyResult {
  enum class Kind { Primes, ExceptionMersenneLike, ExceptionTwoSix };
  Kind kind;
  Integer a;
  Integer n;
  std::vector<Integer> primes;
};

/// Primitive prime divisors of a^n - 1, or the exception case.
ZsigmondyResult zsigmondy(Integer a, Integer n);

/// Phi_n(q) as a Moebius product over divisors of n. Throws DomainError if
/// the value leaves 63 bits.
Integer cyclotomic_value(Integer n, Integer q);

/// Same product without the range restriction.
BigInt cyclotomic_value_big(Integer n, Integer q);

bool is_power_of_two(Integer n);
bool is_fermat_prime(Integer p);
bool is_mersenne_prime(Integer p);

/// (n, p, q, a) with p = 2^n + 1 prime and p^2 - 3p + 2 = 2 q^a.
/// The degenerate solution at p = 3 has q = 1, a = 1 (q^a = 1).
struct LemmaNumberSolution {
  Integer n;
  Integer p;
  Integer q;
  Integer a;

  friend bool operator==(const LemmaNumberSolution&, const LemmaNumberSolution&) = default;
};

std::vector<LemmaNumberSolution> lemma_number_solutions(Integer p_max);

std::vector<Integer> primes_up_to(Integer limit);

/// Integer square root when n is a perfect square.
std::optional<Integer> exact_sqrt(Integer n);

}  // namespace sylow
