#include "sylow/catalog.hpp"

#include <sstream>

#include "json.hpp"

namespace sylow {

namespace {

const char* const kDefaultCatalog = R"json([
  {"name": "A5", "constructor": "alternating", "parameters": [5], "expected_order": 60,
   "expected_sylow": [{"p": 5, "n_p": 6, "provenance": "quoted"},
                      {"p": 3, "n_p": 10, "provenance": "quoted"},
                      {"p": 2, "n_p": 5, "provenance": "computed"}]},
  {"name": "A6", "constructor": "alternating", "parameters": [6], "expected_order": 360,
   "expected_sylow": [{"p": 5, "n_p": 36, "provenance": "quoted"}]},
  {"name": "A7", "constructor": "alternating", "parameters": [7], "expected_order": 2520,
   "expected_sylow": [{"p": 5, "n_p": 126, "provenance": "computed"},
                      {"p": 7, "n_p": 120, "provenance": "computed"}]},
  {"name": "PSL2(4)", "constructor": "psl", "parameters": [2, 4], "expected_order": 60,
   "expected_sylow": [{"p": 5, "n_p": 6, "provenance": "quoted"}]},
  {"name": "PSL2(5)", "constructor": "psl", "parameters": [2, 5], "expected_order": 60,
   "expected_sylow": [{"p": 5, "n_p": 6, "provenance": "quoted"}]},
  {"name": "PSL2(7)", "constructor": "psl", "parameters": [2, 7], "expected_order": 168,
   "expected_sylow": [{"p": 7, "n_p": 8, "provenance": "quoted"},
                      {"p": 3, "n_p": 28, "provenance": "quoted"},
                      {"p": 2, "n_p": 21, "provenance": "computed"}]},
  {"name": "PSL3(2)", "constructor": "psl", "parameters": [3, 2], "expected_order": 168,
   "expected_sylow": [{"p": 7, "n_p": 8, "provenance": "quoted"},
                      {"p": 3, "n_p": 28, "provenance": "quoted"}]},
  {"name": "PSL2(8)", "constructor": "psl", "parameters": [2, 8], "expected_order": 504,
   "expected_sylow": [{"p": 7, "n_p": 36, "provenance": "quoted"},
                      {"p": 3, "n_p": 28, "provenance": "computed"}]},
  {"name": "PSL2(11)", "constructor": "psl", "parameters": [2, 11], "expected_order": 660,
   "expected_sylow": [{"p": 11, "n_p": 12, "provenance": "computed"},
                      {"p": 5, "n_p": 66, "provenance": "computed"},
                      {"p": 3, "n_p": 55, "provenance": "computed"}]},
  {"name": "PSL3(3)", "constructor": "psl", "parameters": [3, 3], "expected_order": 5616,
   "expected_sylow": [{"p": 13, "n_p": 144, "provenance": "quoted"}]},
  {"name": "Sp4(2)", "constructor": "sp4_2", "parameters": [], "expected_order": 720,
   "expected_sylow": [{"p": 5, "n_p": 36, "provenance": "quoted"},
                      {"p": 3, "n_p": 10, "provenance": "computed"}]},
  {"name": "Frobenius(5,2,4)", "constructor": "frobenius_affine", "parameters": [5, 2, 4], "expected_order": 80,
   "expected_sylow": [{"p": 5, "n_p": 16, "provenance": "computed"}]},
  {"name": "Frobenius(3,2,2)", "constructor": "frobenius_affine", "parameters": [3, 2, 2], "expected_order": 12,
   "expected_sylow": [{"p": 3, "n_p": 4, "provenance": "computed"}]},
  {"name": "Frobenius(2,3,1)", "constructor": "frobenius_affine", "parameters": [2, 3, 1], "expected_order": 6,
   "expected_sylow": [{"p": 2, "n_p": 3, "provenance": "computed"}]},
  {"name": "Frobenius(7,2,3)", "constructor": "frobenius_affine", "parameters": [7, 2, 3], "expected_order": 56,
   "expected_sylow": [{"p": 7, "n_p": 8, "provenance": "computed"}]},
  {"name": "Frobenius(13,3,3)", "constructor": "frobenius_affine", "parameters": [13, 3, 3], "expected_order": 351,
   "expected_sylow": [{"p": 13, "n_p": 27, "provenance": "computed"}]},
  {"name": "PSL2(16)", "constructor": "psl", "parameters": [2, 16], "expected_order": 4080, "deep": true,
   "expected_sylow": [{"p": 17, "n_p": 120, "provenance": "quoted"}]},
  {"name": "PSL3(4)", "constructor": "psl", "parameters": [3, 4], "expected_order": 20160, "deep": true,
   "expected_sylow": [{"p": 5, "n_p": 2016, "provenance": "quoted"},
                      {"p": 3, "n_p": 280, "provenance": "quoted"},
                      {"p": 7, "n_p": 960, "provenance": "quoted"}]},
  {"name": "PSL3(5)", "constructor": "psl", "parameters": [3, 5], "expected_order": 372000, "deep": true,
   "expected_sylow": [{"p": 31, "n_p": 4000, "provenance": "quoted"}]}
]
)json";

Integer param(const CatalogEntry& e, std::size_t i) { return e.parameters.at(i); }

void require_arity(const CatalogEntry& e, std::size_t n) {
  if (e.parameters.size() != n) {
    throw CatalogFormatError(e.name + ": constructor " + e.constructor + " takes " + std::to_string(n) +
                             " parameters");
  }
}

template <class F>
std::optional<FormulaResult> attempt(F&& f) {
  try {
    return f();
  } catch (const PreconditionError&) {
    return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

const std::string& default_catalog_json() {
  static const std::string text = kDefaultCatalog;
  return text;
}

std::vector<CatalogEntry> parse_catalog(const std::string& json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw CatalogFormatError(std::string("catalog is not valid JSON: ") + ex.what());
  }
  if (!doc.is_array()) throw CatalogFormatError("catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const json& item : doc) {
    try {
      CatalogEntry e;
      e.name = item.at("name").get<std::string>();
      e.constructor = item.at("constructor").get<std::string>();
      e.parameters = item.at("parameters").get<std::vector<Integer>>();
      e.expected_order = item.at("expected_order").get<Integer>();
      e.deep = item.value("deep", false);
      for (const json& s : item.at("expected_sylow")) {
        e.expected_sylow.push_back(
            {s.at("p").get<Integer>(), s.at("n_p").get<Integer>(), s.value("provenance", std::string("computed"))});
      }
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw CatalogFormatError(std::string("malformed catalog entry: ") + ex.what());
    }
  }
  return out;
}

std::vector<CatalogEntry> default_catalog() { return parse_catalog(default_catalog_json()); }

FiniteGroup build_group(const CatalogEntry& e, std::size_t cap) {
  if (e.constructor == "alternating") {
    require_arity(e, 1);
    return alternating_group(static_cast<int>(param(e, 0)), cap);
  }
  if (e.constructor == "psl") {
    require_arity(e, 2);
    return psl(static_cast<int>(param(e, 0)), param(e, 1), cap);
  }
  if (e.constructor == "sp4_2") {
    require_arity(e, 0);
    return sp4_2(cap);
  }
  if (e.constructor == "frobenius_affine") {
    require_arity(e, 3);
    return frobenius_affine(param(e, 0), param(e, 1), param(e, 2), cap);
  }
  throw CatalogFormatError(e.name + ": unknown constructor '" + e.constructor + "'");
}

std::optional<FamilyId> matching_family(const CatalogEntry& e) {
  if (e.constructor == "alternating") return FamilyId::alt(param(e, 0));
  if (e.constructor == "psl") return FamilyId::psl(param(e, 0), param(e, 1));
  if (e.constructor == "sp4_2") return FamilyId::psp(4, 2);
  return std::nullopt;
}

std::optional<FormulaResult> matching_formula(const CatalogEntry& e, Integer p) {
  if (e.constructor == "alternating") {
    return attempt([&] { return alternating_np(param(e, 0), p); });
  }
  if (e.constructor == "psl") {
    const Integer n = param(e, 0);
    const Integer q = param(e, 1);
    // n_p of GL_n(q) and of PSL_n(q) coincide: the centre has order prime to p.
    if (n == 2) return attempt([&] { return psl2_np(q, p); });
    return attempt([&] { return gl_np(n, q, p); });
  }
  if (e.constructor == "sp4_2") {
    return attempt([&] { return sp_np(2, 2, p, SymplecticCase::Primitive2e); });
  }
  if (e.constructor == "frobenius_affine") {
    if (p != param(e, 0)) return std::nullopt;
    const Integer kernel = checked::pow(param(e, 1), param(e, 2));
    return FormulaResult{BigInt(kernel), "Frobenius kernel order r^t"};
  }
  return std::nullopt;
}

std::string to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::Passed: return "PASSED";
    case EntryStatus::Failed: return "FAILED";
    case EntryStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool VerifyReport::all_passed() const { return count(EntryStatus::Failed) == 0; }

int VerifyReport::count(EntryStatus status) const {
  int n = 0;
  for (const auto& e : entries) n += e.status == status ? 1 : 0;
  return n;
}

EntryResult verify_entry(const CatalogEntry& entry, bool deep, std::size_t cap) {
  EntryResult result;
  result.name = entry.name;
  if (entry.deep && !deep) {
    result.status = EntryStatus::Skipped;
    result.messages.push_back("deep entry; rerun with --deep");
    return result;
  }
  std::optional<FiniteGroup> group;
  try {
    group.emplace(build_group(entry, cap));
  } catch (const ResourceError& ex) {
    result.status = deep ? EntryStatus::Failed : EntryStatus::Skipped;
    result.messages.push_back(ex.what());
    return result;
  }
  const FiniteGroup& g = *group;
  result.order = g.order();
  auto fail = [&](std::string message) {
    result.status = EntryStatus::Failed;
    result.messages.push_back(std::move(message));
  };
  if (g.order() != entry.expected_order) {
    fail("order: expected " + std::to_string(entry.expected_order) + ", got " + std::to_string(g.order()));
  }
  if (auto family = matching_family(entry)) {
    const BigInt formula_order = group_order(*family);
    if (formula_order != g.order()) {
      std::ostringstream out;
      out << "order: " << family->name() << " formula gives " << formula_order << ", closure gives " << g.order();
      fail(out.str());
    }
  }
  for (const ExpectedSylow& s : entry.expected_sylow) {
    if (!is_prime(s.p) || g.order() % s.p != 0) {
      fail("expected_sylow lists p=" + std::to_string(s.p) + ", which is not a prime divisor of |G|");
    }
  }

  const Factorization order_factors = factorize(g.order());
  for (const PrimeFactor& f : order_factors.entries()) {
    PrimeCheck check;
    check.p = f.prime;
    check.cyclic = f.exponent == 1;
    const SylowReport tower = count_sylow_by_tower(g, f.prime);
    check.normalizer_order = normalizer_order(g, sylow_subgroup(g, f.prime));
    check.by_normalizer = g.order() / check.normalizer_order;
    if (check.by_normalizer * check.normalizer_order != g.order()) {
      check.failures.push_back("|N_G(P)| = " + std::to_string(check.normalizer_order) + " does not divide |G|");
    }
    if (tower.n_p != check.by_normalizer) {
      check.failures.push_back("tower gives " + std::to_string(tower.n_p) + ", normalizer index gives " +
                               std::to_string(check.by_normalizer));
    }
    if (check.cyclic) {
      check.by_elements = count_sylow_by_elements(g, f.prime).n_p;
      check.by_conjugacy = count_sylow_by_conjugacy(g, f.prime).n_p;
      if (*check.by_elements != *check.by_conjugacy || *check.by_elements != check.by_normalizer) {
        check.failures.push_back("oracles disagree: elements " + std::to_string(*check.by_elements) +
                                 ", conjugacy " + std::to_string(*check.by_conjugacy) + ", normalizer index " +
                                 std::to_string(check.by_normalizer));
      }
    }
    for (const ExpectedSylow& s : entry.expected_sylow) {
      if (s.p != f.prime) continue;
      check.expected = s.n_p;
      if (s.n_p != check.by_normalizer) {
        check.failures.push_back("n_" + std::to_string(s.p) + ": expected " + std::to_string(s.n_p) + ", got " +
                                 std::to_string(check.by_normalizer));
      }
    }
    check.formula = matching_formula(entry, f.prime);
    if (check.formula && check.formula->value != check.by_normalizer) {
      std::ostringstream out;
      out << "n_" << f.prime << ": formula (" << check.formula->formula_id << ") gives " << check.formula->value
          << ", brute force gives " << check.by_normalizer;
      check.failures.push_back(out.str());
    }
    if (!check.ok()) result.status = EntryStatus::Failed;
    result.primes.push_back(std::move(check));
  }
  return result;
}

VerifyReport verify_catalog(const std::vector<CatalogEntry>& catalog, bool deep, std::size_t cap) {
  VerifyReport report;
  for (const CatalogEntry& entry : catalog) report.entries.push_back(verify_entry(entry, deep, cap));
  return report;
}

}  // namespace sylow
