#pragma once

// Which integers below p^2 occur as Sylow p-numbers, how an admissible value
// splits, and what it forces about p-solvability.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sylow/families.hpp"
#include "sylow/numtheory.hpp"

namespace sylow {

/// Parameters for frobenius_affine(p, r, t), whose n_p is r^t.
struct FrobeniusRecipe {
  Integer p;
  Integer r;
  Integer t;

  friend bool operator==(const FrobeniusRecipe&, const FrobeniusRecipe&) = default;
};

/// n = 1: the Sylow subgroup is normal.
struct TrivialWitness {
  friend bool operator==(const TrivialWitness&, const TrivialWitness&) = default;
};

struct PrimePowerWitness {
  PrimePower power;
  FrobeniusRecipe recipe;

  friend bool operator==(const PrimePowerWitness&, const PrimePowerWitness&) = default;
};

struct SimpleWitness {
  TheoremCase theorem_case;
  FamilyId family;

  friend bool operator==(const SimpleWitness&, const SimpleWitness&) = default;
};

using Witness = std::variant<TrivialWitness, PrimePowerWitness, SimpleWitness>;

/// "trivial", "prime_power" or "simple".
std::string witness_kind(const Witness& w);
/// Compact parameter text, e.g. "2^4 frobenius(5,2,4)" or "PSL3(3)".
std::string witness_params(const Witness& w);

struct AdmissibleValue {
  Integer value;
  Integer p;
  Integer r;  // (value - 1) / p
  /// Prime-power witness first, then simple witnesses in theorem order.
  std::vector<Witness> witnesses;
};

/// Every n < p^2 that is n_p(G) for some finite group G, sorted by value.
std::vector<AdmissibleValue> admissible_sylow_numbers(Integer p);

enum class DecompositionKind { Trivial, PrimePowerFactor, SimpleFactor, NotASylowNumber };

std::string to_string(DecompositionKind kind);

struct Decomposition {
  DecompositionKind kind;
  Integer n;
  Integer p;
  std::optional<PrimePower> prime_power;  // PrimePowerFactor
  std::optional<FrobeniusRecipe> recipe;  // PrimePowerFactor
  /// Exceptional values matched by n; nonempty for SimpleFactor, and
  /// possibly for PrimePowerFactor (1 + p with p Mersenne).
  std::vector<SimpleWitness> simple;
};

/// Requires p prime, 1 <= n < p^2 and n = 1 (mod p); DomainError otherwise.
Decomposition decompose(Integer n, Integer p);

/// True when every divisor a of n with a = 1 (mod p) is 1 or n. Holds for
/// all n = 1 (mod p) below p^2.
bool lemma_equ_holds(Integer n, Integer p);

enum class Verdict { PSolvableForced, NonPSolvableForced, OutsideHypothesis };

std::string to_string(Verdict v);

struct SolvabilityVerdict {
  Verdict verdict;
  std::string reason;
};

/// What n_p(G) = n forces. OutsideHypothesis exactly when p is a Mersenne
/// prime > 3. Throws DomainError under the decompose preconditions, and when
/// n is not a Sylow number at all.
SolvabilityVerdict p_solvability_verdict(Integer n, Integer p);

struct CensusRow {
  Integer p;
  std::vector<AdmissibleValue> values;
};

/// One row per prime p <= p_max, increasing. Requires p_max >= 2.
std::vector<CensusRow> census(Integer p_max);

}  // namespace sylow
