#pragma once

// Concrete groups with expected orders and Sylow numbers, and the runner
// that rebuilds each group and checks every expectation against the
// brute-force oracles and the closed-form formulas.

#include <optional>
#include <string>
#include <vector>

#include "sylow/families.hpp"
#include "sylow/groupengine.hpp"

namespace sylow {

/// Malformed catalog text.
class CatalogFormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct ExpectedSylow {
  Integer p;
  Integer n_p;
  std::string provenance;  // "quoted" or "computed"
};

struct CatalogEntry {
  std::string name;
  /// One of "alternating" [n], "psl" [n, q], "sp4_2" [], "frobenius_affine" [p, r, t].
  std::string constructor;
  std::vector<Integer> parameters;
  Integer expected_order = 0;
  std::vector<ExpectedSylow> expected_sylow;
  /// Only built when deep verification is requested.
  bool deep = false;
};

const std::string& default_catalog_json();

std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
std::vector<CatalogEntry> default_catalog();

FiniteGroup build_group(const CatalogEntry& entry, std::size_t cap = kDefaultClosureCap);

/// The closed-form family of the entry's group, when it has one.
std::optional<FamilyId> matching_family(const CatalogEntry& entry);

/// The formula operation that applies to (entry, p), if its hypotheses hold.
std::optional<FormulaResult> matching_formula(const CatalogEntry& entry, Integer p);

struct PrimeCheck {
  Integer p = 0;
  bool cyclic = false;  // p || |G|
  std::optional<Integer> by_elements;
  std::optional<Integer> by_conjugacy;
  Integer by_normalizer = 0;  // |G| / |N_G(P)|
  Integer normalizer_order = 0;
  std::optional<Integer> expected;
  std::optional<FormulaResult> formula;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

enum class EntryStatus { Passed, Failed, Skipped };

std::string to_string(EntryStatus status);

struct EntryResult {
  std::string name;
  EntryStatus status = EntryStatus::Passed;
  Integer order = 0;
  std::vector<PrimeCheck> primes;
  std::vector<std::string> messages;
};

struct VerifyReport {
  std::vector<EntryResult> entries;

  bool all_passed() const;
  int count(EntryStatus status) const;
};

/// Checks one entry over every prime dividing |G|. A closure that exceeds
/// `cap` gives Skipped, or Failed when `deep` is set.
EntryResult verify_entry(const CatalogEntry& entry, bool deep, std::size_t cap);

/// Entries in catalog order. Deep entries are Skipped unless `deep`.
VerifyReport verify_catalog(const std::vector<CatalogEntry>& catalog, bool deep, std::size_t cap);

}  // namespace sylow
