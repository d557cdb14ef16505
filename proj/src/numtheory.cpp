#include "sylow/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace sylow {

namespace checked {

Integer add(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("integer overflow in addition");
  }
  return out;
}

Integer sub(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw DomainError("integer overflow in subtraction");
  }
  return out;
}

Integer mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("integer overflow in multiplication");
  }
  return out;
}

Integer pow(Integer base, Integer exponent) {
  if (exponent < 0) {
    throw DomainError("negative exponent");
  }
  Integer result = 1;
  for (Integer i = 0; i < exponent; ++i) {
    result = mul(result, base);
  }
  return result;
}

}  // namespace checked

Integer to_integer(const BigInt& value) {
  if (value > std::numeric_limits<Integer>::max() || value < std::numeric_limits<Integer>::min()) {
    throw DomainError("value " + value.str() + " exceeds 63 bits");
  }
  return static_cast<Integer>(value);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod_u(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// First twelve primes are a deterministic witness set below 3.3e24.
bool miller_rabin(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 w : kWitnesses) {
    u64 x = pow_mod_u(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant; n odd composite with no factor below 10^6.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2;
    u64 x = 2;
    u64 g = 1;
    u64 q = 1;
    u64 ys = 2;
    constexpr u64 kBlock = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBlock, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBlock;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimeFactor> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!is_prime(entries_[i].prime) || entries_[i].exponent < 1) {
      throw DomainError("factorization entry is not a prime with positive exponent");
    }
    if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
      throw DomainError("factorization primes must be strictly increasing");
    }
  }
}

std::vector<Integer> Factorization::primes() const {
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.prime);
  return out;
}

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& e : entries_) v = checked::mul(v, checked::pow(e.prime, e.exponent));
  return v;
}

int Factorization::exponent_of(Integer prime) const {
  for (const auto& e : entries_) {
    if (e.prime == prime) return e.exponent;
  }
  return 0;
}

bool is_prime(Integer n) { return n >= 2 && miller_rabin(static_cast<u64>(n)); }

Factorization factorize(Integer n) {
  if (n < 2) {
    throw DomainError("factorize requires n >= 2, got " + std::to_string(n));
  }
  std::vector<PrimeFactor> entries;
  auto m = static_cast<u64>(n);
  constexpr u64 kTrialLimit = 1'000'000;
  for (u64 d = 2; d <= kTrialLimit && d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d != 0) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    entries.push_back({static_cast<Integer>(d), e});
  }
  if (m > 1) {
    std::vector<u64> rest;
    split(m, rest);
    std::sort(rest.begin(), rest.end());
    for (u64 p : rest) {
      if (!entries.empty() && entries.back().prime == static_cast<Integer>(p)) {
        ++entries.back().exponent;
      } else {
        entries.push_back({static_cast<Integer>(p), 1});
      }
    }
  }
  return Factorization(std::move(entries));
}

std::optional<PrimePower> as_prime_power(Integer n) {
  if (n < 2) return std::nullopt;
  Factorization f = factorize(n);
  if (!f.is_prime_power()) return std::nullopt;
  return PrimePower{f.entries()[0].prime, f.entries()[0].exponent, n};
}

Integer euler_totient(Integer n) {
  if (n < 1) throw DomainError("euler_totient requires n >= 1");
  if (n == 1) return 1;
  Integer result = n;
  const Factorization f = factorize(n);
  for (const auto& e : f.entries()) result = result / e.prime * (e.prime - 1);
  return result;
}

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

Integer pow_mod(Integer base, Integer exponent, Integer modulus) {
  if (modulus < 1 || exponent < 0) throw DomainError("pow_mod requires modulus >= 1 and exponent >= 0");
  Integer b = base % modulus;
  if (b < 0) b += modulus;
  return static_cast<Integer>(
      pow_mod_u(static_cast<u64>(b), static_cast<u64>(exponent), static_cast<u64>(modulus)));
}

std::vector<Integer> divisors(Integer n) {
  if (n < 1) throw DomainError("divisors requires n >= 1");
  std::vector<Integer> out{1};
  if (n == 1) return out;
  const Factorization f = factorize(n);
  for (const auto& e : f.entries()) {
    const std::size_t size = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e.exponent; ++k) {
      pk *= e.prime;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(Integer n) {
  if (n < 1) throw DomainError("moebius requires n >= 1");
  if (n == 1) return 1;
  const Factorization f = factorize(n);
  for (const auto& e : f.entries()) {
    if (e.exponent > 1) return 0;
  }
  return f.entries().size() % 2 == 0 ? 1 : -1;
}

Integer multiplicative_order(Integer q, Integer p) {
  if (!is_prime(p)) throw DomainError("multiplicative_order requires a prime modulus, got " + std::to_string(p));
  if (q % p == 0) {
    throw DomainError("multiplicative_order: " + std::to_string(p) + " divides " + std::to_string(q));
  }
  if (p == 2) return 1;
  Integer order = p - 1;
  const Factorization f = factorize(p - 1);
  for (const auto& e : f.entries()) {
    for (int i = 0; i < e.exponent; ++i) {
      if (pow_mod(q, order / e.prime, p) == 1) {
        order /= e.prime;
      } else {
        break;
      }
    }
  }
  return order;
}

Integer half_order_parameter(Integer q, Integer p) {
  const Integer order = multiplicative_order(q, p);
  return order % 2 == 0 ? order / 2 : order;
}

PrimitiveClass classify_primitive(Integer q, Integer p) {
  if (p == 2) throw DomainError("classify_primitive requires an odd prime");
  const Integer order = multiplicative_order(q, p);
  const Integer e = half_order_parameter(q, p);
  // p | q^e - 1 forces e odd; otherwise p | q^e + 1.
  if (order == e) return {PrimitiveClass::Kind::OfE, e};
  return {PrimitiveClass::Kind::OfTwoE, e};
}

ZsigmondyResult zsigmondy(Integer a, Integer n) {
  if (a < 2 || n < 2) throw DomainError("zsigmondy requires a >= 2 and n >= 2");
  if (a == 2 && n == 6) return {ZsigmondyResult::Kind::ExceptionTwoSix, a, n, {}};
  if (n == 2 && is_power_of_two(a + 1)) return {ZsigmondyResult::Kind::ExceptionMersenneLike, a, n, {}};
  const Integer value = checked::sub(checked::pow(a, n), 1);
  ZsigmondyResult result{ZsigmondyResult::Kind::Primes, a, n, {}};
  for (Integer prime : factorize(value).primes()) {
    if (multiplicative_order(a, prime) == n) result.primes.push_back(prime);
  }
  if (result.primes.empty()) {
    throw std::logic_error("zsigmondy: no primitive divisor outside the exception list");
  }
  return result;
}

BigInt cyclotomic_value_big(Integer n, Integer q) {
  if (n < 1 || q < 2) throw DomainError("cyclotomic_value requires n >= 1 and q >= 2");
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (Integer d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d)) - 1;
    (mu > 0 ? numerator : denominator) *= term;
  }
  if (numerator % denominator != 0) {
    throw std::logic_error("cyclotomic_value: Moebius product is not integral");
  }
  return numerator / denominator;
}

Integer cyclotomic_value(Integer n, Integer q) { return to_integer(cyclotomic_value_big(n, q)); }

bool is_power_of_two(Integer n) { return n > 0 && (n & (n - 1)) == 0; }

bool is_fermat_prime(Integer p) {
  if (p < 3 || !is_prime(p)) return false;
  const Integer m = p - 1;
  if (!is_power_of_two(m)) return false;
  // p = 2^m' + 1 with m' itself a power of two.
  Integer exponent = 0;
  for (Integer v = m; v > 1; v >>= 1) ++exponent;
  return is_power_of_two(exponent);
}

bool is_mersenne_prime(Integer p) { return is_prime(p) && is_power_of_two(p + 1); }

std::vector<LemmaNumberSolution> lemma_number_solutions(Integer p_max) {
  std::vector<LemmaNumberSolution> out;
  for (Integer n = 1; n < 62; ++n) {
    const Integer p = (Integer{1} << n) + 1;
    if (p > p_max) break;
    if (!is_fermat_prime(p)) continue;
    // p^2 - 3p + 2 = (p - 1)(p - 2) is even.
    const Integer half = checked::mul(p - 1, p - 2) / 2;
    if (half == 1) {
      out.push_back({n, p, 1, 1});
    } else if (auto pp = as_prime_power(half)) {
      out.push_back({n, p, pp->base, pp->exponent});
    }
  }
  return out;
}

std::vector<Integer> primes_up_to(Integer limit) {
  std::vector<Integer> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (Integer i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (Integer j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::optional<Integer> exact_sqrt(Integer n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<Integer>(boost::multiprecision::sqrt(BigInt(n)));
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace sylow
