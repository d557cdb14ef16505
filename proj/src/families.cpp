#include "sylow/families.hpp"

#include <algorithm>
#include <sstream>

namespace sylow {

namespace {

BigInt bpow(Integer base, Integer exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator, const std::string& what) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw std::logic_error(what + ": numerator is not divisible by the denominator");
  }
  return numerator / denominator;
}

Integer small_gcd(Integer a, const BigInt& b) {
  const BigInt r = b % a;
  return gcd(a, r.convert_to<Integer>());
}

PrimePower require_prime_power(Integer q) {
  auto pp = as_prime_power(q);
  if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
  return *pp;
}

void require_odd_prime(Integer p) {
  if (p < 3 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
}

bool is_odd_power_of(Integer q, Integer base, int min_exponent) {
  auto pp = as_prime_power(q);
  return pp && pp->base == base && pp->exponent % 2 == 1 && pp->exponent >= min_exponent;
}

Integer exact_root(Integer n) {
  auto r = exact_sqrt(n);
  if (!r) throw std::logic_error(std::to_string(n) + " is not a perfect square");
  return *r;
}

// Literal numerators of the displayed formulas, before the final division.

BigInt gl_numerator(Integer e, Integer q) {
  BigInt v = bpow(q, e * (e - 1) / 2);
  for (Integer i = 1; i <= e - 1; ++i) v *= bpow(q, i) - 1;
  return v;
}

BigInt gu_numerator(Integer e, Integer q) {
  BigInt v = bpow(q, e * (e - 1) / 2);
  for (Integer i = 1; i <= e - 1; ++i) v *= (i % 2 == 0) ? bpow(q, i) - 1 : bpow(q, i) + 1;
  return v;
}

BigInt sp_numerator(Integer e, Integer q, SymplecticCase which) {
  BigInt v = bpow(q, e * e);
  for (Integer i = 1; i <= e - 1; ++i) v *= bpow(q, 2 * i) - 1;
  v *= which == SymplecticCase::Primitive2e ? bpow(q, e) - 1 : bpow(q, e) + 1;
  return v;
}

BigInt omega_subgroup_numerator(Integer e, Integer q) {
  BigInt v = bpow(q, (e + 1) * e) * (bpow(q, e + 1) - 1) * (q - 1);
  for (Integer i = 2; i <= e - 1; ++i) v *= bpow(q, 2 * i) - 1;
  return v * (bpow(q, e) - 1);
}

BigInt omega_full_numerator(Integer n, Integer q) {
  BigInt v = bpow(q, n * (n - 1)) * (bpow(q, n) - 1) * (q - 1);
  for (Integer i = 2; i <= n - 2; ++i) v *= bpow(q, 2 * i) - 1;
  return v * (bpow(q, n - 1) - 1);
}

Rational gl_value(Integer e, Integer q) { return Rational(gl_numerator(e, q), BigInt(e)); }
Rational gu_value(Integer e, Integer q) { return Rational(gu_numerator(e, q), BigInt(e)); }
Rational sp_value(Integer e, Integer q, SymplecticCase which) {
  return Rational(sp_numerator(e, q, which), BigInt(2 * e));
}
Rational omega_subgroup_value(Integer e, Integer q) {
  return Rational(omega_subgroup_numerator(e, q), BigInt(2 * e));
}
Rational omega_full_value(Integer n, Integer q) {
  return Rational(omega_full_numerator(n, q), BigInt(2 * (n - 1)));
}

}  // namespace

// ---------------------------------------------------------------------------
// FamilyId

FamilyId FamilyId::alt(Integer n) {
  if (n < 5) throw DomainError("A_n requires n >= 5");
  return FamilyId(FamilyTag::Alt, n, 0);
}

FamilyId FamilyId::psl(Integer n, Integer q) {
  require_prime_power(q);
  if (n < 2) throw DomainError("PSL_n requires n >= 2");
  if (n == 2 && q < 4) throw DomainError("PSL_2(q) requires q >= 4");
  return FamilyId(FamilyTag::PSL, n, q);
}

FamilyId FamilyId::psu(Integer n, Integer q) {
  require_prime_power(q);
  if (n < 3) throw DomainError("PSU_n requires n >= 3");
  if (n == 3 && q == 2) throw DomainError("PSU_3(2) is solvable");
  return FamilyId(FamilyTag::PSU, n, q);
}

// PSp_4(2) is accepted: the order formula still gives |Sp_4(2)| = 720.
FamilyId FamilyId::psp(Integer dimension, Integer q) {
  require_prime_power(q);
  if (dimension < 4 || dimension % 2 != 0) throw DomainError("PSp_2n requires an even dimension >= 4");
  return FamilyId(FamilyTag::PSp, dimension, q);
}

FamilyId FamilyId::omega_odd(Integer dimension, Integer q) {
  require_prime_power(q);
  if (dimension < 5 || dimension % 2 != 1) throw DomainError("Omega_2n+1 requires an odd dimension >= 5");
  if (q % 2 == 0) throw DomainError("Omega_2n+1(q) requires q odd");
  return FamilyId(FamilyTag::OmegaOdd, dimension, q);
}

FamilyId FamilyId::omega_plus(Integer dimension, Integer q) {
  require_prime_power(q);
  if (dimension < 6 || dimension % 2 != 0) throw DomainError("Omega+_2n requires an even dimension >= 6");
  return FamilyId(FamilyTag::OmegaPlus, dimension, q);
}

FamilyId FamilyId::omega_minus(Integer dimension, Integer q) {
  require_prime_power(q);
  if (dimension < 4 || dimension % 2 != 0) throw DomainError("Omega-_2n requires an even dimension >= 4");
  return FamilyId(FamilyTag::OmegaMinus, dimension, q);
}

FamilyId FamilyId::exceptional(FamilyTag tag, Integer q) {
  require_prime_power(q);
  switch (tag) {
    case FamilyTag::Sz:
    case FamilyTag::TwoF4:
      if (!is_odd_power_of(q, 2, 3)) throw DomainError(to_string(tag) + " requires q = 2^(2m+1) >= 8");
      break;
    case FamilyTag::Ree2G2:
      if (!is_odd_power_of(q, 3, 3)) throw DomainError("2G2 requires q = 3^(2m+1) >= 27");
      break;
    case FamilyTag::G2:
      if (q < 3) throw DomainError("G2(q) requires q >= 3");
      break;
    case FamilyTag::TriD4:
    case FamilyTag::F4:
    case FamilyTag::E6:
    case FamilyTag::TwoE6:
    case FamilyTag::E7:
    case FamilyTag::E8:
      break;
    default:
      throw DomainError(to_string(tag) + " is not an exceptional type");
  }
  return FamilyId(tag, 0, q);
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Alt: return "A";
    case FamilyTag::PSL: return "PSL";
    case FamilyTag::PSU: return "PSU";
    case FamilyTag::PSp: return "PSp";
    case FamilyTag::OmegaOdd: return "Omega";
    case FamilyTag::OmegaPlus: return "Omega+";
    case FamilyTag::OmegaMinus: return "Omega-";
    case FamilyTag::Sz: return "Sz";
    case FamilyTag::G2: return "G2";
    case FamilyTag::Ree2G2: return "2G2";
    case FamilyTag::TriD4: return "3D4";
    case FamilyTag::F4: return "F4";
    case FamilyTag::TwoF4: return "2F4";
    case FamilyTag::E6: return "E6";
    case FamilyTag::TwoE6: return "2E6";
    case FamilyTag::E7: return "E7";
    case FamilyTag::E8: return "E8";
  }
  return "?";
}

std::string FamilyId::name() const {
  std::ostringstream out;
  out << to_string(tag_);
  if (dimension_ > 0) out << dimension_;
  if (q_ > 0) out << '(' << q_ << ')';
  return out.str();
}

BigInt group_order(const FamilyId& f) {
  const Integer q = f.q();
  const Integer d = f.dimension();
  switch (f.tag()) {
    case FamilyTag::Alt: {
      BigInt v = 1;
      for (Integer i = 3; i <= d; ++i) v *= i;
      return v;
    }
    case FamilyTag::PSL: {
      BigInt v = bpow(q, d * (d - 1) / 2);
      for (Integer i = 2; i <= d; ++i) v *= bpow(q, i) - 1;
      return exact_div(v, gcd(d, q - 1), f.name());
    }
    case FamilyTag::PSU: {
      BigInt v = bpow(q, d * (d - 1) / 2);
      for (Integer i = 2; i <= d; ++i) v *= (i % 2 == 0) ? bpow(q, i) - 1 : bpow(q, i) + 1;
      return exact_div(v, gcd(d, q + 1), f.name());
    }
    case FamilyTag::PSp:
    case FamilyTag::OmegaOdd: {
      const Integer n = d / 2;
      BigInt v = bpow(q, n * n);
      for (Integer i = 1; i <= n; ++i) v *= bpow(q, 2 * i) - 1;
      return exact_div(v, gcd(2, q - 1), f.name());
    }
    case FamilyTag::OmegaPlus:
    case FamilyTag::OmegaMinus: {
      const Integer n = d / 2;
      const BigInt middle = f.tag() == FamilyTag::OmegaPlus ? bpow(q, n) - 1 : bpow(q, n) + 1;
      BigInt v = bpow(q, n * (n - 1)) * middle;
      for (Integer i = 1; i <= n - 1; ++i) v *= bpow(q, 2 * i) - 1;
      return exact_div(v, small_gcd(4, middle), f.name());
    }
    case FamilyTag::Sz: {
      const BigInt s = exact_root(2 * q);
      return bpow(q, 2) * (q - 1) * (q - s + 1) * (q + s + 1);
    }
    case FamilyTag::G2:
      return bpow(q, 6) * bpow(q - 1, 2) * bpow(q + 1, 2) * (q * q + q + 1) * (q * q - q + 1);
    case FamilyTag::Ree2G2: {
      const BigInt t = exact_root(3 * q);
      return bpow(q, 3) * (q + 1) * (q - 1) * (q - t + 1) * (q + t + 1);
    }
    case FamilyTag::TriD4:
      return bpow(q, 12) * bpow(q * q + q + 1, 2) * bpow(q * q - q + 1, 2) * (bpow(q, 4) - q * q + 1) *
             bpow(q + 1, 2) * bpow(q - 1, 2);
    case FamilyTag::F4:
      return bpow(q, 24) * boost::multiprecision::pow(bpow(q, 6) - 1, 2) * bpow(q * q - 1, 2) *
             bpow(q * q + 1, 2) * (bpow(q, 4) + 1) * (bpow(q, 4) - q * q + 1);
    case FamilyTag::TwoF4: {
      const BigInt s = exact_root(2 * q);
      const BigInt base = BigInt(q) * q + q + 1;
      return bpow(q, 12) * boost::multiprecision::pow(bpow(q, 4) - 1, 2) * (q * q - q + 1) *
             (base + s * (q + 1)) * (base - s * (q + 1));
    }
    case FamilyTag::E6:
    case FamilyTag::TwoE6: {
      const bool twisted = f.tag() == FamilyTag::TwoE6;
      const BigInt v = bpow(q, 36) * (bpow(q, 12) - 1) * (twisted ? bpow(q, 9) + 1 : bpow(q, 9) - 1) *
                       (bpow(q, 8) - 1) * (bpow(q, 6) - 1) * (twisted ? bpow(q, 5) + 1 : bpow(q, 5) - 1) *
                       (bpow(q, 2) - 1);
      return exact_div(v, gcd(3, twisted ? q + 1 : q - 1), f.name());
    }
    case FamilyTag::E7: {
      // The simple group is the quotient by a centre of order (2, q - 1).
      const BigInt v = bpow(q, 63) * (bpow(q, 18) - 1) * (bpow(q, 14) - 1) * (bpow(q, 12) - 1) *
                       (bpow(q, 10) - 1) * (bpow(q, 8) - 1) * (bpow(q, 6) - 1) * (bpow(q, 2) - 1);
      return exact_div(v, gcd(2, q - 1), f.name());
    }
    case FamilyTag::E8:
      return bpow(q, 120) * (bpow(q, 30) - 1) * (bpow(q, 24) - 1) * (bpow(q, 20) - 1) * (bpow(q, 18) - 1) *
             (bpow(q, 14) - 1) * (bpow(q, 12) - 1) * (bpow(q, 8) - 1) * (bpow(q, 2) - 1);
  }
  throw std::logic_error("unknown family");
}

// ---------------------------------------------------------------------------
// Sylow number formulas

FormulaResult gl_np(Integer e, Integer q, Integer p) {
  if (e < 2) throw DomainError("gl_np requires e >= 2");
  require_prime_power(q);
  require_odd_prime(p);
  if (q % p == 0) throw PreconditionError("p divides q");
  const PrimitiveClass c = classify_primitive(q, p);
  if (c.exponent() != e) {
    throw PreconditionError(std::to_string(p) + " is not a primitive prime divisor of " + std::to_string(q) + "^" +
                            std::to_string(e) + " - 1");
  }
  return {exact_div(gl_numerator(e, q), e, "gl_np"), "GL_e(q) normalizer index"};
}

FormulaResult gu_np(Integer e, Integer q, Integer p) {
  if (e < 3) throw DomainError("gu_np requires e >= 3");
  require_prime_power(q);
  require_odd_prime(p);
  if (q % p == 0) throw PreconditionError("p divides q");
  const Integer minus_q = (p - q % p) % p;
  const Integer order = multiplicative_order(minus_q, p);
  const bool zsigmondy_gap = q == 2 && e == 3 && (bpow(q, e) + 1) % p == 0;
  if (order != e && !zsigmondy_gap) {
    throw PreconditionError("the order of -" + std::to_string(q) + " modulo " + std::to_string(p) + " is " +
                            std::to_string(order) + ", not " + std::to_string(e));
  }
  return {exact_div(gu_numerator(e, q), e, "gu_np"), "GU_e(q) normalizer index"};
}

FormulaResult sp_np(Integer e, Integer q, Integer p, SymplecticCase which) {
  if (e < 1) throw DomainError("sp_np requires e >= 1");
  require_prime_power(q);
  require_odd_prime(p);
  if (q % p == 0) throw PreconditionError("p divides q");
  const PrimitiveClass c = classify_primitive(q, p);
  const PrimitiveClass expected{
      which == SymplecticCase::Primitive2e ? PrimitiveClass::Kind::OfTwoE : PrimitiveClass::Kind::OfE, e};
  if (c != expected) {
    throw PreconditionError(std::to_string(p) + " is primitive for " + std::to_string(q) + "^" +
                            std::to_string(c.exponent()) + " - 1, which does not match the requested case");
  }
  const char* id = which == SymplecticCase::Primitive2e ? "Sp_2e(q), p | q^e + 1" : "Sp_2e(q), p | q^e - 1";
  return {exact_div(sp_numerator(e, q, which), 2 * e, "sp_np"), id};
}

FormulaResult omega_plus_np(OmegaPlusVariant variant, Integer e_or_n, Integer q, Integer p) {
  require_prime_power(q);
  require_odd_prime(p);
  if (q % p == 0) throw PreconditionError("p divides q");
  const PrimitiveClass c = classify_primitive(q, p);
  if (variant == OmegaPlusVariant::SubgroupE) {
    const Integer e = e_or_n;
    if (e < 2) throw DomainError("omega_plus_np requires e >= 2");
    if (c != PrimitiveClass{PrimitiveClass::Kind::OfTwoE, e}) {
      throw PreconditionError(std::to_string(p) + " is not a primitive prime divisor of " + std::to_string(q) + "^" +
                              std::to_string(2 * e) + " - 1");
    }
    return {exact_div(omega_subgroup_numerator(e, q), 2 * e, "omega_plus_np"), "Omega+_2(e+1)(q) normalizer index"};
  }
  const Integer n = e_or_n;
  if (n < 3) throw DomainError("omega_plus_np requires n >= 3");
  if (c != PrimitiveClass{PrimitiveClass::Kind::OfTwoE, n - 1}) {
    throw PreconditionError(std::to_string(p) + " is not a primitive prime divisor of " + std::to_string(q) + "^" +
                            std::to_string(2 * (n - 1)) + " - 1");
  }
  return {exact_div(omega_full_numerator(n, q), 2 * (n - 1), "omega_plus_np"), "Omega+_2n(q) normalizer index"};
}

FormulaResult psl2_np(Integer q, Integer p) {
  require_prime_power(q);
  if (q < 4) throw DomainError("psl2_np requires q >= 4");
  require_odd_prime(p);
  if (p == q) return {BigInt(1 + p), "PSL_2(p): 1 + p"};
  if (p == q + 1) return {BigInt(q) * (q - 1) / 2, "PSL_2(q), p = q + 1: q(q-1)/2"};
  if (p == q - 1) return {BigInt(q) * (q + 1) / 2, "PSL_2(q), p = q - 1: q(q+1)/2"};
  throw PreconditionError("psl2_np supports p in {q, q + 1, q - 1} only");
}

FormulaResult alternating_np(Integer n, Integer p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n < 5) throw PreconditionError("alternating_np requires n >= 5");
  if (p > n || n >= 2 * p) throw PreconditionError("alternating_np requires p <= n < 2p");
  BigInt falling = 1;  // n! / (n - p)!
  for (Integer i = n - p + 1; i <= n; ++i) falling *= i;
  return {exact_div(falling, BigInt(p) * (p - 1), "alternating_np"), "A_n: n!/((n-p)! p (p-1))"};
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::PSL2P: return "PSL2(p)";
    case TheoremCase::PSL3_3: return "PSL3(3)";
    case TheoremCase::PSL2PMinus1: return "PSL2(p-1)";
    case TheoremCase::PSL2PPlus1: return "PSL2(p+1)";
  }
  return "?";
}

FormulaResult theorem_family_np(TheoremCase c, Integer p) {
  switch (c) {
    case TheoremCase::PSL2P:
      if (p < 5 || !is_prime(p)) throw PreconditionError("PSL2(p) case requires a prime p >= 5");
      return {BigInt(1 + p), "r = 1"};
    case TheoremCase::PSL3_3:
      if (p != 13) throw PreconditionError("PSL3(3) case requires p = 13");
      return {BigInt(144), "r = 11"};
    case TheoremCase::PSL2PMinus1:
      if (p <= 3 || !is_fermat_prime(p)) throw PreconditionError("PSL2(p-1) case requires a Fermat prime p > 3");
      return {BigInt(1 + (p - 3) * p / 2), "r = (p-3)/2"};
    case TheoremCase::PSL2PPlus1:
      if (p <= 3 || !is_mersenne_prime(p)) throw PreconditionError("PSL2(p+1) case requires a Mersenne prime p > 3");
      return {BigInt(1 + (p + 3) * p / 2), "r = (p+3)/2"};
  }
  throw std::logic_error("unknown theorem case");
}

FamilyId theorem_family(TheoremCase c, Integer p) {
  theorem_family_np(c, p);  // validates p
  switch (c) {
    case TheoremCase::PSL2P: return FamilyId::psl(2, p);
    case TheoremCase::PSL3_3: return FamilyId::psl(3, 3);
    case TheoremCase::PSL2PMinus1: return FamilyId::psl(2, p - 1);
    case TheoremCase::PSL2PPlus1: return FamilyId::psl(2, p + 1);
  }
  throw std::logic_error("unknown theorem case");
}

BigInt minimal_degree_bound(const FamilyId& f) {
  const Integer q = f.q();
  switch (f.tag()) {
    case FamilyTag::F4:
      return exact_div((bpow(q, 12) - 1) * (bpow(q, 4) + 1), q - 1, "F4 degree");
    case FamilyTag::TwoF4:
      return (bpow(q, 6) + 1) * (bpow(q, 3) + 1) * (q + 1);
    case FamilyTag::E6:
      return exact_div((bpow(q, 9) - 1) * (bpow(q, 8) + bpow(q, 4) + 1), q - 1, "E6 degree");
    case FamilyTag::TwoE6:
      return exact_div((bpow(q, 12) - 1) * (bpow(q, 6) - bpow(q, 3) + 1) * (bpow(q, 4) + 1), q - 1, "2E6 degree");
    case FamilyTag::E7:
      return exact_div((bpow(q, 14) - 1) * (bpow(q, 9) + 1) * (bpow(q, 5) + 1), q - 1, "E7 degree");
    case FamilyTag::E8:
      return exact_div((bpow(q, 20) - 1) * (bpow(q, 12) + 1) * (bpow(q, 10) + 1) * (bpow(q, 6) + 1), q - 1,
                       "E8 degree");
    default:
      throw DomainError("no minimal degree bound registered for " + f.name());
  }
}

// ---------------------------------------------------------------------------
// Inequality audit

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

namespace {

bool holds(const Rational& a, Relation r, const Rational& b) {
  switch (r) {
    case Relation::Less: return a < b;
    case Relation::LessEq: return a <= b;
    case Relation::Greater: return a > b;
    case Relation::GreaterEq: return a >= b;
    case Relation::Equal: return a == b;
  }
  return false;
}

using Eval = std::function<Rational(const AuditPoint&)>;

Rational qp(Integer q, Integer k) { return Rational(bpow(q, k)); }
Rational cyc(Integer n, Integer q) { return Rational(cyclotomic_value_big(n, q)); }
Rational sq(const Rational& x) { return x * x; }
Rational R(Integer x) { return Rational(x); }
Integer phi(Integer n) { return euler_totient(n); }

constexpr Relation GE = Relation::GreaterEq;
constexpr Relation GT = Relation::Greater;

enum class Domain { Q, E, QE, Once };

struct Spec {
  std::string family;
  std::string label;
  std::vector<ChainTerm> terms;
  std::vector<Relation> relations;
  Domain domain;
  std::function<bool(const AuditPoint&)> applies;
};

bool any(const AuditPoint&) { return true; }

// Squared largest primitive prime divisor of q^k - 1.
Rational ppd_squared(Integer q, Integer k) {
  const auto z = zsigmondy(q, k);
  if (z.primes.empty()) throw std::logic_error("no primitive prime divisor");
  return sq(R(*std::max_element(z.primes.begin(), z.primes.end())));
}

std::vector<Spec> build_specs() {
  std::vector<Spec> s;
  auto in = [](Integer lo, Integer hi) { return [lo, hi](const AuditPoint& a) { return a.e >= lo && a.e <= hi; }; };
  auto q_at_least = [](Integer lo) { return [lo](const AuditPoint& a) { return a.q >= lo; }; };
  auto q_is = [](Integer v) { return [v](const AuditPoint& a) { return a.q == v; }; };

  // Cyclotomic bound used by every classical chain.
  s.push_back({"cyclotomic", "Phi_e(q) < 4 q^phi(e)",
               {{"Phi_e(q)", [](const AuditPoint& a) { return cyc(a.e, a.q); }},
                {"4 q^phi(e)", [](const AuditPoint& a) { return 4 * qp(a.q, phi(a.e)); }}},
               {Relation::Less}, Domain::QE, any});

  // Linear groups, via n_p(GL_e(q)).
  s.push_back({"linear", "e >= 6",
               {{"n_p(GL_e(q))", [](const AuditPoint& a) { return gl_value(a.e, a.q); }},
                {"q^(e(e-1)/2)", [](const AuditPoint& a) { return qp(a.q, a.e * (a.e - 1) / 2); }},
                {"16 q^(2(e-1))", [](const AuditPoint& a) { return 16 * qp(a.q, 2 * (a.e - 1)); }},
                {"(4 q^phi(e))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(a.e))); }},
                {"Phi_e(q)^2", [](const AuditPoint& a) { return sq(cyc(a.e, a.q)); }}},
               {GE, GT, GE, GT}, Domain::QE, in(6, 1 << 20)});
  s.push_back({"linear", "e = 5",
               {{"n_p(GL_5(q))", [](const AuditPoint& a) { return gl_value(5, a.q); }},
                {"q^10 (q-1)^4 (q+1)^2 (q^2+1)",
                 [](const AuditPoint& a) {
                   return qp(a.q, 10) * qp(a.q - 1, 4) * qp(a.q + 1, 2) * R(a.q * a.q + 1);
                 }},
                {"q^14", [](const AuditPoint& a) { return qp(a.q, 14); }},
                {"16 q^8", [](const AuditPoint& a) { return 16 * qp(a.q, 8); }},
                {"Phi_5(q)^2", [](const AuditPoint& a) { return sq(cyc(5, a.q)); }}},
               {GE, GE, GT, GT}, Domain::Q, any});
  s.push_back({"linear", "e = 4, q >= 3",
               {{"n_p(GL_4(q))", [](const AuditPoint& a) { return gl_value(4, a.q); }},
                {"q^8", [](const AuditPoint& a) { return qp(a.q, 8); }},
                {"16 q^4", [](const AuditPoint& a) { return 16 * qp(a.q, 4); }},
                {"Phi_4(q)^2", [](const AuditPoint& a) { return sq(cyc(4, a.q)); }}},
               {GE, GE, GT}, Domain::Q, q_at_least(3)});
  s.push_back({"linear", "e = 4, q = 2, p = 5",
               {{"n_p(GL_4(2))", [](const AuditPoint&) { return gl_value(4, 2); }},
                {"5^2", [](const AuditPoint&) { return R(25); }}},
               {GT}, Domain::Q, q_is(2)});
  s.push_back({"linear", "e = 3, q >= 7",
               {{"n_p(GL_3(q))", [](const AuditPoint& a) { return gl_value(3, a.q); }},
                {"q^4 (q-1)^2 / 3", [](const AuditPoint& a) { return qp(a.q, 4) * qp(a.q - 1, 2) / 3; }},
                {"9 q^4", [](const AuditPoint& a) { return 9 * qp(a.q, 4); }},
                {"Phi_3(q)^2", [](const AuditPoint& a) { return sq(cyc(3, a.q)); }}},
               {GE, GE, GE}, Domain::Q, q_at_least(7)});
  s.push_back({"linear", "e = 3, q in {4, 5}",
               {{"n_p(GL_3(q))", [](const AuditPoint& a) { return gl_value(3, a.q); }},
                {"p^2", [](const AuditPoint& a) { return ppd_squared(a.q, 3); }}},
               {GT}, Domain::Q, [](const AuditPoint& a) { return a.q == 4 || a.q == 5; }});
  s.push_back({"linear", "e = 2, q >= 5, p <= (q+1)/2",
               {{"q(q-1)/2", [](const AuditPoint& a) { return R(a.q) * (a.q - 1) / 2; }},
                {"(q+1)^2 / 4", [](const AuditPoint& a) { return qp(a.q + 1, 2) / 4; }}},
               {GE}, Domain::Q, q_at_least(5)});
  s.push_back({"linear", "PSL_3(2^f), p = q + 1",
               {{"q^3 (q^3-1) / 2", [](const AuditPoint& a) { return qp(a.q, 3) * (qp(a.q, 3) - 1) / 2; }},
                {"(q+1)^2", [](const AuditPoint& a) { return qp(a.q + 1, 2); }}},
               {GT}, Domain::Q, [](const AuditPoint& a) { return is_power_of_two(a.q); }});
  s.push_back({"linear", "e = 1, p <= (q-1)/2",
               {{"q(q+1)/2", [](const AuditPoint& a) { return R(a.q) * (a.q + 1) / 2; }},
                {"(q-1)^2 / 4", [](const AuditPoint& a) { return qp(a.q - 1, 2) / 4; }}},
               {GE}, Domain::Q, any});

  // Unitary groups, via n_p(GU_e(q)).
  s.push_back({"unitary", "e >= 9",
               {{"n_p(GU_e(q))", [](const AuditPoint& a) { return gu_value(a.e, a.q); }},
                {"q^(e(e-1)/2)", [](const AuditPoint& a) { return qp(a.q, a.e * (a.e - 1) / 2); }},
                {"16 q^(4(e-1))", [](const AuditPoint& a) { return 16 * qp(a.q, 4 * (a.e - 1)); }},
                {"(4 q^phi(2e))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(2 * a.e))); }},
                {"Phi_2e(q)^2", [](const AuditPoint& a) { return sq(cyc(2 * a.e, a.q)); }}},
               {GE, GE, GE, GT}, Domain::QE, in(9, 1 << 20)});
  s.push_back({"unitary", "e in {7, 8}",
               {{"n_p(GU_e(q))", [](const AuditPoint& a) { return gu_value(a.e, a.q); }},
                {"q^(e(e-1)/2) (q+1)(q^2-1)...(q^(e-2)-(-1)^(e-2))",
                 [](const AuditPoint& a) { return Rational(gu_numerator(a.e - 1, a.q) * bpow(a.q, a.e - 1)); }},
                {"16 q^(4e-2)", [](const AuditPoint& a) { return 16 * qp(a.q, 4 * a.e - 2); }},
                {"(4 q^phi(2e))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(2 * a.e))); }},
                {"Phi_2e(q)^2", [](const AuditPoint& a) { return sq(cyc(2 * a.e, a.q)); }}},
               {GE, GE, GE, GT}, Domain::QE, in(7, 8)});
  s.push_back({"unitary", "e = 6",
               {{"n_p(GU_6(q))", [](const AuditPoint& a) { return gu_value(6, a.q); }},
                {"q^15 (q+1)(q^2-1)(q^3+1)(q^4-1)",
                 [](const AuditPoint& a) {
                   return qp(a.q, 15) * R(a.q + 1) * (qp(a.q, 2) - 1) * (qp(a.q, 3) + 1) * (qp(a.q, 4) - 1);
                 }},
                {"q^15", [](const AuditPoint& a) { return qp(a.q, 15); }},
                {"16 q^4", [](const AuditPoint& a) { return 16 * qp(a.q, 4); }},
                {"max(Phi_3(q), Phi_6(q))^2",
                 [](const AuditPoint& a) { return sq(std::max(cyc(3, a.q), cyc(6, a.q))); }}},
               {GE, GT, GT, GT}, Domain::Q, any});
  // The intermediate bound q^16 (q-1)^2 (q^2-q+1) fails for q >= 3; the
  // direct comparison with 16 q^8 is what the argument needs.
  s.push_back({"unitary", "e = 5",
               {{"n_p(GU_5(q))", [](const AuditPoint& a) { return gu_value(5, a.q); }},
                {"16 q^8", [](const AuditPoint& a) { return 16 * qp(a.q, 8); }},
                {"Phi_10(q)^2", [](const AuditPoint& a) { return sq(cyc(10, a.q)); }}},
               {GT, GT}, Domain::Q, any});
  s.push_back({"unitary", "e = 4",
               {{"n_p(GU_4(q))", [](const AuditPoint& a) { return gu_value(4, a.q); }},
                {"q^6 (q^3+1)(q-1)", [](const AuditPoint& a) { return qp(a.q, 6) * (qp(a.q, 3) + 1) * R(a.q - 1); }},
                {"16 q^4", [](const AuditPoint& a) { return 16 * qp(a.q, 4); }},
                {"max(Phi_2(q), Phi_4(q))^2",
                 [](const AuditPoint& a) { return sq(std::max(cyc(2, a.q), cyc(4, a.q))); }}},
               {GE, GT, GT}, Domain::Q, any});
  s.push_back({"unitary", "e = 3, q >= 4",
               {{"n_p(GU_3(q))", [](const AuditPoint& a) { return gu_value(3, a.q); }},
                {"3 q^4", [](const AuditPoint& a) { return 3 * qp(a.q, 4); }},
                {"Phi_6(q)^2", [](const AuditPoint& a) { return sq(cyc(6, a.q)); }}},
               {GE, GE}, Domain::Q, q_at_least(4)});
  s.push_back({"unitary", "e = 3, q in {2, 3}",
               {{"n_p(GU_3(q))", [](const AuditPoint& a) { return gu_value(3, a.q); }},
                {"p^2 (p = 3 at q = 2, p = 7 at q = 3)",
                 [](const AuditPoint& a) { return a.q == 2 ? R(9) : R(49); }}},
               {GT}, Domain::Q, [](const AuditPoint& a) { return a.q == 2 || a.q == 3; }});
  s.push_back({"unitary", "PSU_3(q), p | q^2-q+1, q >= 4",
               {{"q^3 (q-1)(q+1)^2 / 3", [](const AuditPoint& a) { return qp(a.q, 3) * R(a.q - 1) * qp(a.q + 1, 2) / 3; }},
                {"q^4 (q-1)", [](const AuditPoint& a) { return qp(a.q, 4) * R(a.q - 1); }},
                {"3 q^4", [](const AuditPoint& a) { return 3 * qp(a.q, 4); }},
                {"(q^2+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 2) + 1); }},
                {"Phi_6(q)^2", [](const AuditPoint& a) { return sq(cyc(6, a.q)); }}},
               {GE, GE, GE, GE}, Domain::Q, q_at_least(4)});
  s.push_back({"unitary", "PSU_3(3), p = 7",
               {{"q^3 (q-1)(q+1)^2 / 3", [](const AuditPoint& a) { return qp(a.q, 3) * R(a.q - 1) * qp(a.q + 1, 2) / 3; }},
                {"7^2", [](const AuditPoint&) { return R(49); }}},
               {GT}, Domain::Q, q_is(3)});
  s.push_back({"unitary", "PSU_3(q), p | q - 1",
               {{"q^3", [](const AuditPoint& a) { return qp(a.q, 3); }},
                {"2 q^2", [](const AuditPoint& a) { return 2 * qp(a.q, 2); }},
                {"(q-1)^2", [](const AuditPoint& a) { return qp(a.q - 1, 2); }}},
               {GE, GE}, Domain::Q, q_at_least(3)});

  // Symplectic groups, via n_p(Sp_2e(q)).
  const auto sp2e = SymplecticCase::Primitive2e;
  const auto spe = SymplecticCase::PrimitiveE;
  s.push_back({"symplectic", "e >= 4, p | q^e + 1",
               {{"n_p(Sp_2e(q))", [sp2e](const AuditPoint& a) { return sp_value(a.e, a.q, sp2e); }},
                {"q^(e^2) (q^2-1)(q^4-1)(q^6-1)",
                 [](const AuditPoint& a) {
                   return qp(a.q, a.e * a.e) * (qp(a.q, 2) - 1) * (qp(a.q, 4) - 1) * (qp(a.q, 6) - 1);
                 }},
                {"q^(e^2+3) (q^6-1)", [](const AuditPoint& a) { return qp(a.q, a.e * a.e + 3) * (qp(a.q, 6) - 1); }},
                {"16 q^(4e-2)", [](const AuditPoint& a) { return 16 * qp(a.q, 4 * a.e - 2); }},
                {"(4 q^phi(2e))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(2 * a.e))); }},
                {"Phi_2e(q)^2", [](const AuditPoint& a) { return sq(cyc(2 * a.e, a.q)); }}},
               {GE, GE, GE, GE, GT}, Domain::QE, in(4, 1 << 20)});
  s.push_back({"symplectic", "e = 3, p | q^3 + 1",
               {{"n_p(Sp_6(q))", [sp2e](const AuditPoint& a) { return sp_value(3, a.q, sp2e); }},
                {"q^12", [](const AuditPoint& a) { return qp(a.q, 12); }},
                {"16 q^4", [](const AuditPoint& a) { return 16 * qp(a.q, 4); }},
                {"Phi_6(q)^2", [](const AuditPoint& a) { return sq(cyc(6, a.q)); }}},
               {GE, GE, GT}, Domain::Q, any});
  s.push_back({"symplectic", "e = 2, q >= 3",
               {{"n_p(Sp_4(q))", [sp2e](const AuditPoint& a) { return sp_value(2, a.q, sp2e); }},
                {"16 q^4", [](const AuditPoint& a) { return 16 * qp(a.q, 4); }},
                {"Phi_4(q)^2", [](const AuditPoint& a) { return sq(cyc(4, a.q)); }}},
               {GE, GT}, Domain::Q, q_at_least(3)});
  s.push_back({"symplectic", "e = 2, q = 2, p = 5",
               {{"n_p(Sp_4(2))", [sp2e](const AuditPoint&) { return sp_value(2, 2, sp2e); }},
                {"5^2", [](const AuditPoint&) { return R(25); }}},
               {GT}, Domain::Q, q_is(2)});
  s.push_back({"symplectic", "e >= 3 odd, p | q^e - 1",
               {{"n_p(Sp_2e(q))", [spe](const AuditPoint& a) { return sp_value(a.e, a.q, spe); }},
                {"q^(e^2) (q^2-1)(q^4-1)",
                 [](const AuditPoint& a) { return qp(a.q, a.e * a.e) * (qp(a.q, 2) - 1) * (qp(a.q, 4) - 1); }},
                {"(q^2+1)(q+1)^2 q^(e^2)",
                 [](const AuditPoint& a) { return (qp(a.q, 2) + 1) * qp(a.q + 1, 2) * qp(a.q, a.e * a.e); }},
                {"16 q^(2e-2)", [](const AuditPoint& a) { return 16 * qp(a.q, 2 * a.e - 2); }},
                {"(4 q^phi(e))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(a.e))); }},
                {"Phi_e(q)^2", [](const AuditPoint& a) { return sq(cyc(a.e, a.q)); }}},
               {GE, GE, GE, GE, GT}, Domain::QE, [](const AuditPoint& a) { return a.e >= 3 && a.e % 2 == 1; }});

  // Orthogonal groups of plus type.
  s.push_back({"orthogonal+", "subgroup, e >= 4",
               {{"n_p(Omega+_2(e+1)(q))", [](const AuditPoint& a) { return omega_subgroup_value(a.e, a.q); }},
                {"q^((e+1)e) (q^(e+1)-1)(q^4-1)",
                 [](const AuditPoint& a) {
                   return qp(a.q, (a.e + 1) * a.e) * (qp(a.q, a.e + 1) - 1) * (qp(a.q, 4) - 1);
                 }},
                {"(q^(e+1)-1) q^(e^2+e+3)",
                 [](const AuditPoint& a) { return (qp(a.q, a.e + 1) - 1) * qp(a.q, a.e * a.e + a.e + 3); }},
                {"16 q^(4e-2)", [](const AuditPoint& a) { return 16 * qp(a.q, 4 * a.e - 2); }},
                {"(4 q^phi(2e))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(2 * a.e))); }},
                {"Phi_2e(q)^2", [](const AuditPoint& a) { return sq(cyc(2 * a.e, a.q)); }}},
               {GE, GE, GE, GE, GT}, Domain::QE, in(4, 1 << 20)});
  s.push_back({"orthogonal+", "subgroup, e in {2, 3}, (e, q) != (2, 2)",
               {{"n_p(Omega+_2(e+1)(q))", [](const AuditPoint& a) { return omega_subgroup_value(a.e, a.q); }},
                {"(4 q^phi(2e))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(2 * a.e))); }},
                {"Phi_2e(q)^2", [](const AuditPoint& a) { return sq(cyc(2 * a.e, a.q)); }}},
               {GE, GT}, Domain::QE,
               [](const AuditPoint& a) { return (a.e == 2 || a.e == 3) && !(a.e == 2 && a.q == 2); }});
  s.push_back({"orthogonal+", "subgroup, e = 2, q = 2, p = 5",
               {{"n_p(Omega+_6(2))", [](const AuditPoint&) { return omega_subgroup_value(2, 2); }},
                {"5^2", [](const AuditPoint&) { return R(25); }}},
               {GT}, Domain::Q, q_is(2)});
  s.push_back({"orthogonal+", "full, n >= 5",
               {{"n_p(Omega+_2n(q))", [](const AuditPoint& a) { return omega_full_value(a.e, a.q); }},
                {"q^(n(n-1)) (q^n-1)", [](const AuditPoint& a) { return qp(a.q, a.e * (a.e - 1)) * (qp(a.q, a.e) - 1); }},
                {"16 q^(4n-4)", [](const AuditPoint& a) { return 16 * qp(a.q, 4 * a.e - 4); }},
                {"(4 q^phi(2n-2))^2", [](const AuditPoint& a) { return sq(4 * qp(a.q, phi(2 * a.e - 2))); }},
                {"Phi_(2n-2)(q)^2", [](const AuditPoint& a) { return sq(cyc(2 * a.e - 2, a.q)); }}},
               {GE, GE, GE, GT}, Domain::QE, in(5, 1 << 20)});
  s.push_back({"orthogonal+", "full, n in {3, 4}, (n, q) != (3, 2)",
               {{"n_p(Omega+_2n(q))", [](const AuditPoint& a) { return omega_full_value(a.e, a.q); }},
                {"16 q^4", [](const AuditPoint& a) { return 16 * qp(a.q, 4); }},
                {"Phi_(2n-2)(q)^2", [](const AuditPoint& a) { return sq(cyc(2 * a.e - 2, a.q)); }}},
               {GE, GT}, Domain::QE,
               [](const AuditPoint& a) { return (a.e == 3 || a.e == 4) && !(a.e == 3 && a.q == 2); }});
  s.push_back({"orthogonal+", "full, n = 3, q = 2, p = 5",
               {{"n_p(Omega+_6(2))", [](const AuditPoint&) { return omega_full_value(3, 2); }},
                {"5^2", [](const AuditPoint&) { return R(25); }}},
               {GT}, Domain::Q, q_is(2)});

  // Orthogonal groups of minus type.
  s.push_back({"orthogonal-", "q odd, p | q^m + 1 with m = n - 1, k >= 2",
               {{"q^(2m)", [](const AuditPoint& a) { return qp(a.q, 2 * a.e); }},
                {"3 q^(2m) / 4", [](const AuditPoint& a) { return 3 * qp(a.q, 2 * a.e) / 4; }},
                {"(q^m+1)^2 / 4", [](const AuditPoint& a) { return sq(qp(a.q, a.e) + 1) / 4; }}},
               {GE, GE}, Domain::QE, [](const AuditPoint& a) { return a.q % 2 == 1; }});
  s.push_back({"orthogonal-", "Omega-_8(u), p = u^4 + 1",
               {{"u^8 (u^2-1)(u^4-1)(u^6-1)",
                 [](const AuditPoint& a) {
                   return qp(a.q, 8) * (qp(a.q, 2) - 1) * (qp(a.q, 4) - 1) * (qp(a.q, 6) - 1);
                 }},
                {"u^17", [](const AuditPoint& a) { return qp(a.q, 17); }},
                {"3 u^8", [](const AuditPoint& a) { return 3 * qp(a.q, 8); }},
                {"(u^4+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 4) + 1); }}},
               {GT, GT, GE}, Domain::Q, [](const AuditPoint& a) { return a.q % 2 == 0; }});

  // Suzuki groups, s = sqrt(2q).
  auto suzuki = [](const AuditPoint& a) { return is_odd_power_of(a.q, 2, 3); };
  auto s2 = [](Integer q) { return R(exact_root(2 * q)); };
  s.push_back({"suzuki", "p | q - 1",
               {{"q^2 (q^2+1) / 2", [](const AuditPoint& a) { return qp(a.q, 2) * (qp(a.q, 2) + 1) / 2; }},
                {"(q-1)^2", [](const AuditPoint& a) { return qp(a.q - 1, 2); }}},
               {GE}, Domain::Q, suzuki});
  s.push_back({"suzuki", "p | q - s + 1",
               {{"q^2 (q-1)(q+s+1) / 4",
                 [s2](const AuditPoint& a) { return qp(a.q, 2) * R(a.q - 1) * (R(a.q) + s2(a.q) + 1) / 4; }},
                {"q^2 (q+s+1)", [s2](const AuditPoint& a) { return qp(a.q, 2) * (R(a.q) + s2(a.q) + 1); }},
                {"4 q^2", [](const AuditPoint& a) { return 4 * qp(a.q, 2); }},
                {"(q+1)^2", [](const AuditPoint& a) { return qp(a.q + 1, 2); }},
                {"(q-s+1)^2", [s2](const AuditPoint& a) { return sq(R(a.q) - s2(a.q) + 1); }}},
               {GE, GE, GE, GE}, Domain::Q, suzuki});
  s.push_back({"suzuki", "p | q + s + 1",
               {{"q^2 (q-1)(q-s+1) / 4",
                 [s2](const AuditPoint& a) { return qp(a.q, 2) * R(a.q - 1) * (R(a.q) - s2(a.q) + 1) / 4; }},
                {"q^3", [](const AuditPoint& a) { return qp(a.q, 3); }},
                {"5 q^2", [](const AuditPoint& a) { return 5 * qp(a.q, 2); }},
                {"(q+s+1)^2", [s2](const AuditPoint& a) { return sq(R(a.q) + s2(a.q) + 1); }}},
               {GE, GE, GE}, Domain::Q, suzuki});

  // Small Ree groups, t = sqrt(3q).
  auto ree = [](const AuditPoint& a) { return is_odd_power_of(a.q, 3, 3); };
  auto t3 = [](Integer q) { return R(exact_root(3 * q)); };
  s.push_back({"ree", "p | q + 1",
               {{"q^3 (q^2-q+1)(q-1) / 6",
                 [](const AuditPoint& a) { return qp(a.q, 3) * R(a.q * a.q - a.q + 1) * R(a.q - 1) / 6; }},
                {"q^3", [](const AuditPoint& a) { return qp(a.q, 3); }},
                {"3 q^2", [](const AuditPoint& a) { return 3 * qp(a.q, 2); }},
                {"(q+1)^2", [](const AuditPoint& a) { return qp(a.q + 1, 2); }}},
               {GT, GE, GE}, Domain::Q, ree});
  s.push_back({"ree", "p | q - 1",
               {{"q^3", [](const AuditPoint& a) { return qp(a.q, 3); }},
                {"(q-1)^2", [](const AuditPoint& a) { return qp(a.q - 1, 2); }}},
               {GT}, Domain::Q, ree});
  s.push_back({"ree", "p | q - t + 1",
               {{"q^3 (q^2-1)(q+t+1) / 6",
                 [t3](const AuditPoint& a) { return qp(a.q, 3) * (qp(a.q, 2) - 1) * (R(a.q) + t3(a.q) + 1) / 6; }},
                {"q^4", [](const AuditPoint& a) { return qp(a.q, 4); }},
                {"4 q^2", [](const AuditPoint& a) { return 4 * qp(a.q, 2); }},
                {"(q-t+1)^2", [t3](const AuditPoint& a) { return sq(R(a.q) - t3(a.q) + 1); }}},
               {GE, GT, GE}, Domain::Q, ree});
  s.push_back({"ree", "p | q + t + 1",
               {{"q^3 (q^2-1)(q-t+1) / 6",
                 [t3](const AuditPoint& a) { return qp(a.q, 3) * (qp(a.q, 2) - 1) * (R(a.q) - t3(a.q) + 1) / 6; }},
                {"q^4", [](const AuditPoint& a) { return qp(a.q, 4); }},
                {"9 q^2", [](const AuditPoint& a) { return 9 * qp(a.q, 2); }},
                {"(q+t+1)^2", [t3](const AuditPoint& a) { return sq(R(a.q) + t3(a.q) + 1); }}},
               {GE, GE, GE}, Domain::Q, ree});

  s.push_back({"3D4", "p | q^4 - q^2 + 1",
               {{"q^12 Phi_3(q)^2 Phi_6(q)^2 (q+1)^2 (q-1)^2 / 4",
                 [](const AuditPoint& a) {
                   return qp(a.q, 12) * sq(cyc(3, a.q)) * sq(cyc(6, a.q)) * qp(a.q + 1, 2) * qp(a.q - 1, 2) / 4;
                 }},
                {"8 q^8", [](const AuditPoint& a) { return 8 * qp(a.q, 8); }},
                {"(q^4-q^2+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 4) - qp(a.q, 2) + 1); }}},
               {GE, GE}, Domain::Q, any});

  auto degree = [](FamilyTag tag) {
    return [tag](const AuditPoint& a) { return Rational(minimal_degree_bound(FamilyId::exceptional(tag, a.q))); };
  };
  s.push_back({"F4", "minimal degree",
               {{"(q^12-1)(q^4+1)/(q-1)", degree(FamilyTag::F4)},
                {"q^15", [](const AuditPoint& a) { return qp(a.q, 15); }},
                {"3 q^8", [](const AuditPoint& a) { return 3 * qp(a.q, 8); }},
                {"(q^4+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 4) + 1); }}},
               {GE, GT, GE}, Domain::Q, any});
  s.push_back({"2F4", "minimal degree",
               {{"(q^6+1)(q^3+1)(q+1)", degree(FamilyTag::TwoF4)},
                {"q^10", [](const AuditPoint& a) { return qp(a.q, 10); }},
                {"25 q^4", [](const AuditPoint& a) { return 25 * qp(a.q, 4); }},
                {"(q^2+q+1+s(q+1))^2",
                 [s2](const AuditPoint& a) { return sq(R(a.q * a.q + a.q + 1) + s2(a.q) * R(a.q + 1)); }}},
               {GT, GT, GE}, Domain::Q, suzuki});
  s.push_back({"E6", "minimal degree",
               {{"(q^9-1)(q^8+q^4+1)/(q-1)", degree(FamilyTag::E6)},
                {"q^16", [](const AuditPoint& a) { return qp(a.q, 16); }},
                {"3 q^12", [](const AuditPoint& a) { return 3 * qp(a.q, 12); }},
                {"(q^6+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 6) + 1); }}},
               {GT, GT, GT}, Domain::Q, any});
  s.push_back({"2E6", "minimal degree",
               {{"(q^12-1)(q^6-q^3+1)(q^4+1)/(q-1)", degree(FamilyTag::TwoE6)},
                {"q^15", [](const AuditPoint& a) { return qp(a.q, 15); }},
                {"3 q^12", [](const AuditPoint& a) { return 3 * qp(a.q, 12); }},
                {"(q^6+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 6) + 1); }}},
               {GT, GT, GE}, Domain::Q, any});
  s.push_back({"E7", "minimal degree",
               {{"(q^14-1)(q^9+1)(q^5+1)/(q-1)", degree(FamilyTag::E7)},
                {"q^27", [](const AuditPoint& a) { return qp(a.q, 27); }},
                {"3 q^18", [](const AuditPoint& a) { return 3 * qp(a.q, 18); }},
                {"(q^9+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 9) + 1); }}},
               {GE, GT, GT}, Domain::Q, any});
  s.push_back({"E8", "minimal degree",
               {{"(q^20-1)(q^12+1)(q^10+1)(q^6+1)/(q-1)", degree(FamilyTag::E8)},
                {"q^47", [](const AuditPoint& a) { return qp(a.q, 47); }},
                {"3 q^30", [](const AuditPoint& a) { return 3 * qp(a.q, 30); }},
                {"(q^15+1)^2", [](const AuditPoint& a) { return sq(qp(a.q, 15) + 1); }}},
               {GT, GT, GT}, Domain::Q, any});

  // Alternating groups; here e plays the role of p.
  s.push_back({"alternating", "p >= 7 prime",
               {{"(p-2)!",
                 [](const AuditPoint& a) {
                   BigInt f = 1;
                   for (Integer i = 2; i <= a.e - 2; ++i) f *= i;
                   return Rational(f);
                 }},
                {"p^2", [](const AuditPoint& a) { return sq(R(a.e)); }}},
               {GT}, Domain::E, [](const AuditPoint& a) { return a.e >= 7 && is_prime(a.e); }});
  s.push_back({"alternating", "p = 5, n >= 6",
               {{"6!/20", [](const AuditPoint&) { return R(36); }}, {"5^2", [](const AuditPoint&) { return R(25); }}},
               {GT}, Domain::Once, any});
  return s;
}

struct Registry {
  std::vector<InequalityChain> chains;
  std::vector<Domain> domains;
};

const Registry& registry() {
  static const Registry r = [] {
    Registry out;
    for (auto& spec : build_specs()) {
      out.domains.push_back(spec.domain);
      out.chains.push_back(InequalityChain{std::move(spec.family), std::move(spec.label), std::move(spec.terms),
                                           std::move(spec.relations),
                                           spec.domain == Domain::E || spec.domain == Domain::QE,
                                           std::move(spec.applies)});
    }
    return out;
  }();
  return r;
}

std::string show(const Rational& r) {
  std::ostringstream out;
  out << r;
  std::string s = out.str();
  if (s.size() > 60) s = s.substr(0, 28) + "..." + s.substr(s.size() - 28) + " (" + std::to_string(s.size()) + " chars)";
  return s;
}

}  // namespace

const std::vector<InequalityChain>& registered_chains() { return registry().chains; }

std::string statement(const InequalityChain& chain) {
  std::string out = chain.terms.front().text;
  for (std::size_t i = 0; i < chain.relations.size(); ++i) {
    out += " " + to_string(chain.relations[i]) + " " + chain.terms[i + 1].text;
  }
  return out;
}

int check_chain(const InequalityChain& chain, const AuditPoint& point) {
  Rational previous = chain.terms.front().eval(point);
  for (std::size_t i = 0; i < chain.relations.size(); ++i) {
    Rational next = chain.terms[i + 1].eval(point);
    if (!holds(previous, chain.relations[i], next)) return static_cast<int>(i);
    previous = std::move(next);
  }
  return -1;
}

AuditReport proof_inequality_audit(Integer q_max, Integer e_max) {
  if (q_max < 2 || e_max < 2) throw DomainError("audit requires q_max >= 2 and e_max >= 2");
  std::vector<Integer> qs;
  for (Integer q = 2; q <= q_max; ++q) {
    if (as_prime_power(q)) qs.push_back(q);
  }
  AuditReport report;
  report.q_max = q_max;
  report.e_max = e_max;
  const Registry& reg = registry();
  for (std::size_t c = 0; c < reg.chains.size(); ++c) {
    const InequalityChain& chain = reg.chains[c];
    std::vector<AuditPoint> points;
    switch (reg.domains[c]) {
      case Domain::Q:
        for (Integer q : qs) points.push_back({q, 0});
        break;
      case Domain::E:
        for (Integer e = 1; e <= e_max; ++e) points.push_back({0, e});
        break;
      case Domain::QE:
        for (Integer q : qs) {
          for (Integer e = 1; e <= e_max; ++e) points.push_back({q, e});
        }
        break;
      case Domain::Once:
        points.push_back({0, 0});
        break;
    }
    ChainSummary summary{chain.family, chain.label, statement(chain), 0, 0, 0};
    for (const AuditPoint& point : points) {
      if (!chain.applies(point)) continue;
      ++summary.points;
      std::vector<Rational> values;
      values.reserve(chain.terms.size());
      for (const auto& term : chain.terms) values.push_back(term.eval(point));
      for (std::size_t i = 0; i < chain.relations.size(); ++i) {
        ++summary.checks;
        if (!holds(values[i], chain.relations[i], values[i + 1])) {
          ++summary.violations;
          report.violations.push_back({chain.family, chain.label, point, i, show(values[i]),
                                       to_string(chain.relations[i]), show(values[i + 1])});
        }
      }
    }
    report.total_checks += summary.checks;
    report.chains.push_back(std::move(summary));
  }
  return report;
}

}  // namespace sylow
