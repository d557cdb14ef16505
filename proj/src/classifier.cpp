#include "sylow/classifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sylow {

namespace {

void require_prime(Integer p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

constexpr TheoremCase kCases[] = {TheoremCase::PSL3_3, TheoremCase::PSL2P, TheoremCase::PSL2PMinus1,
                                  TheoremCase::PSL2PPlus1};

// Cases whose hypotheses hold at p, with their values.
std::vector<std::pair<Integer, SimpleWitness>> exceptional_values(Integer p) {
  std::vector<std::pair<Integer, SimpleWitness>> out;
  for (TheoremCase c : kCases) {
    try {
      const FormulaResult r = theorem_family_np(c, p);
      out.emplace_back(to_integer(r.value), SimpleWitness{c, theorem_family(c, p)});
    } catch (const PreconditionError&) {
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return static_cast<int>(a.second.theorem_case) < static_cast<int>(b.second.theorem_case);
  });
  return out;
}

}  // namespace

std::string witness_kind(const Witness& w) {
  if (std::holds_alternative<TrivialWitness>(w)) return "trivial";
  if (std::holds_alternative<PrimePowerWitness>(w)) return "prime_power";
  return "simple";
}

std::string witness_params(const Witness& w) {
  std::ostringstream out;
  if (const auto* pp = std::get_if<PrimePowerWitness>(&w)) {
    out << pp->power.base << '^' << pp->power.exponent << " frobenius(" << pp->recipe.p << ',' << pp->recipe.r << ','
        << pp->recipe.t << ')';
  } else if (const auto* s = std::get_if<SimpleWitness>(&w)) {
    out << s->family.name();
  }
  return out.str();
}

std::vector<AdmissibleValue> admissible_sylow_numbers(Integer p) {
  require_prime(p);
  const Integer bound = checked::mul(p, p);
  std::map<Integer, AdmissibleValue> values;
  auto slot = [&](Integer n) -> AdmissibleValue& {
    auto it = values.find(n);
    if (it == values.end()) it = values.emplace(n, AdmissibleValue{n, p, (n - 1) / p, {}}).first;
    return it->second;
  };
  slot(1).witnesses.push_back(TrivialWitness{});
  for (Integer n = 1 + p; n < bound; n += p) {
    if (auto pp = as_prime_power(n)) {
      slot(n).witnesses.push_back(PrimePowerWitness{*pp, FrobeniusRecipe{p, pp->base, pp->exponent}});
    }
  }
  for (const auto& [n, witness] : exceptional_values(p)) {
    if (n >= bound || n % p != 1) throw std::logic_error("exceptional value outside the admissible range");
    slot(n).witnesses.push_back(witness);
  }
  std::vector<AdmissibleValue> out;
  out.reserve(values.size());
  for (auto& [n, v] : values) out.push_back(std::move(v));
  return out;
}

std::string to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::Trivial: return "Trivial";
    case DecompositionKind::PrimePowerFactor: return "PrimePowerFactor";
    case DecompositionKind::SimpleFactor: return "SimpleFactor";
    case DecompositionKind::NotASylowNumber: return "NotASylowNumber";
  }
  return "?";
}

bool lemma_equ_holds(Integer n, Integer p) {
  for (Integer a : divisors(n)) {
    if (a % p == 1 % p && a != 1 && a != n) return false;
  }
  return true;
}

Decomposition decompose(Integer n, Integer p) {
  require_prime(p);
  if (n < 1) throw DomainError("n must be positive");
  if (n % p != 1 % p) throw DomainError(std::to_string(n) + " is not congruent to 1 modulo " + std::to_string(p));
  if (n >= checked::mul(p, p)) throw DomainError(std::to_string(n) + " is not below p^2");
  // A product of Sylow numbers of the chief factors collapses to one factor.
  if (!lemma_equ_holds(n, p)) throw std::logic_error("divisor congruent to 1 found below p^2");

  Decomposition d{DecompositionKind::NotASylowNumber, n, p, std::nullopt, std::nullopt, {}};
  if (n == 1) {
    d.kind = DecompositionKind::Trivial;
    return d;
  }
  for (const auto& [value, witness] : exceptional_values(p)) {
    if (value == n) d.simple.push_back(witness);
  }
  if (auto pp = as_prime_power(n)) {
    d.kind = DecompositionKind::PrimePowerFactor;
    d.prime_power = *pp;
    d.recipe = FrobeniusRecipe{p, pp->base, pp->exponent};
  } else if (!d.simple.empty()) {
    d.kind = DecompositionKind::SimpleFactor;
  }
  return d;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PSolvableForced: return "PSolvableForced";
    case Verdict::NonPSolvableForced: return "NonPSolvableForced";
    case Verdict::OutsideHypothesis: return "OutsideHypothesis";
  }
  return "?";
}

SolvabilityVerdict p_solvability_verdict(Integer n, Integer p) {
  const Decomposition d = decompose(n, p);
  if (p > 3 && is_mersenne_prime(p)) {
    return {Verdict::OutsideHypothesis,
            std::to_string(p) + " is a Mersenne prime greater than 3, where 1 + p is a prime power realized by PSL2(p)"};
  }
  switch (d.kind) {
    case DecompositionKind::Trivial:
      return {Verdict::PSolvableForced, "n = 1: the Sylow subgroup is normal"};
    case DecompositionKind::PrimePowerFactor:
      if (!d.simple.empty()) throw std::logic_error("prime-power exceptional value outside the Mersenne case");
      return {Verdict::PSolvableForced, std::to_string(n) + " is a prime power"};
    case DecompositionKind::SimpleFactor:
      return {Verdict::NonPSolvableForced, std::to_string(n) + " is not a prime power; realized by " +
                                               witness_params(Witness{d.simple.front()})};
    case DecompositionKind::NotASylowNumber:
      break;
  }
  throw DomainError(std::to_string(n) + " is not a Sylow " + std::to_string(p) + "-number of any finite group");
}

std::vector<CensusRow> census(Integer p_max) {
  if (p_max < 2) throw DomainError("census requires p_max >= 2");
  std::vector<CensusRow> rows;
  for (Integer p : primes_up_to(p_max)) rows.push_back({p, admissible_sylow_numbers(p)});
  return rows;
}

}  // namespace sylow
