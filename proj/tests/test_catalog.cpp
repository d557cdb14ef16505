#include <gtest/gtest.h>

#include "sylow/catalog.hpp"

using namespace sylow;

namespace {

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no catalog entry " + name);
}

}  // namespace

TEST(Catalog, DefaultParses) {
  const auto catalog = default_catalog();
  EXPECT_GE(catalog.size(), 19u);
  const CatalogEntry& l33 = find_entry(catalog, "PSL3(3)");
  EXPECT_EQ(l33.constructor, "psl");
  EXPECT_EQ(l33.parameters, (std::vector<Integer>{3, 3}));
  EXPECT_EQ(l33.expected_order, 5616);
  EXPECT_FALSE(l33.deep);
  EXPECT_TRUE(find_entry(catalog, "PSL3(4)").deep);
  for (const auto& e : catalog) {
    for (const auto& s : e.expected_sylow) EXPECT_TRUE(s.provenance == "quoted" || s.provenance == "computed");
  }
}

TEST(Catalog, DefaultVerifiesWithoutDeep) {
  const VerifyReport report = verify_catalog(default_catalog(), false, kDefaultClosureCap);
  for (const auto& e : report.entries) {
    EXPECT_NE(e.status, EntryStatus::Failed) << e.name << ": " << (e.messages.empty() ? "" : e.messages[0]);
    for (const auto& c : e.primes) EXPECT_TRUE(c.ok()) << e.name << " p=" << c.p << ": " << c.failures.at(0);
  }
  EXPECT_EQ(report.count(EntryStatus::Skipped), 3);
  EXPECT_TRUE(report.all_passed());
}

TEST(Catalog, CyclicPrimesUseAllThreeOracles) {
  const EntryResult r = verify_entry(find_entry(default_catalog(), "PSL3(3)"), false, kDefaultClosureCap);
  ASSERT_EQ(r.status, EntryStatus::Passed);
  bool saw13 = false;
  for (const auto& c : r.primes) {
    if (c.p == 13) {
      saw13 = true;
      EXPECT_TRUE(c.cyclic);
      EXPECT_EQ(c.by_elements, 144);
      EXPECT_EQ(c.by_conjugacy, 144);
      EXPECT_EQ(c.by_normalizer, 144);
      ASSERT_TRUE(c.formula.has_value());
      EXPECT_EQ(c.formula->value, 144);
    }
    if (c.p == 3) {
      EXPECT_FALSE(c.cyclic);
      EXPECT_FALSE(c.by_elements.has_value());
    }
  }
  EXPECT_TRUE(saw13);
}

TEST(Catalog, TamperedExpectationFails) {
  auto catalog = default_catalog();
  CatalogEntry a5 = find_entry(catalog, "A5");
  a5.expected_sylow[0].n_p = 11;
  const EntryResult r = verify_entry(a5, false, kDefaultClosureCap);
  EXPECT_EQ(r.status, EntryStatus::Failed);
  bool found = false;
  for (const auto& c : r.primes) {
    for (const auto& f : c.failures) found = found || f.find("expected 11, got 6") != std::string::npos;
  }
  EXPECT_TRUE(found);

  CatalogEntry order = find_entry(catalog, "A6");
  order.expected_order = 720;
  EXPECT_EQ(verify_entry(order, false, kDefaultClosureCap).status, EntryStatus::Failed);

  CatalogEntry wrong_prime = find_entry(catalog, "A6");
  wrong_prime.expected_sylow.push_back({7, 8, "computed"});
  EXPECT_EQ(verify_entry(wrong_prime, false, kDefaultClosureCap).status, EntryStatus::Failed);
}

TEST(Catalog, MalformedInput) {
  EXPECT_THROW(parse_catalog("{not json"), CatalogFormatError);
  EXPECT_THROW(parse_catalog("{}"), CatalogFormatError);
  EXPECT_THROW(parse_catalog(R"([{"name": "x"}])"), CatalogFormatError);
  const auto bad_ctor = parse_catalog(
      R"([{"name": "x", "constructor": "mathieu", "parameters": [11], "expected_order": 7920, "expected_sylow": []}])");
  EXPECT_THROW(build_group(bad_ctor.at(0)), CatalogFormatError);
  const auto bad_arity = parse_catalog(
      R"([{"name": "x", "constructor": "psl", "parameters": [2], "expected_order": 60, "expected_sylow": []}])");
  EXPECT_THROW(build_group(bad_arity.at(0)), CatalogFormatError);
  EXPECT_TRUE(parse_catalog("[]").empty());
}

TEST(Catalog, SmallCapSkipsOrFails) {
  const auto catalog = default_catalog();
  const CatalogEntry& l33 = find_entry(catalog, "PSL3(3)");
  EXPECT_EQ(verify_entry(l33, false, 100).status, EntryStatus::Skipped);
  EXPECT_EQ(verify_entry(l33, true, 100).status, EntryStatus::Failed);
  const CatalogEntry& deep = find_entry(catalog, "PSL3(4)");
  EXPECT_EQ(verify_entry(deep, false, kDefaultClosureCap).status, EntryStatus::Skipped);
}

TEST(Catalog, MatchingFormulas) {
  const auto catalog = default_catalog();
  EXPECT_EQ(matching_formula(find_entry(catalog, "A6"), 5)->value, 36);
  EXPECT_FALSE(matching_formula(find_entry(catalog, "A6"), 3).has_value());
  EXPECT_EQ(matching_formula(find_entry(catalog, "PSL2(8)"), 7)->value, 36);
  EXPECT_EQ(matching_formula(find_entry(catalog, "PSL3(3)"), 13)->value, 144);
  EXPECT_EQ(matching_formula(find_entry(catalog, "Sp4(2)"), 5)->value, 36);
  EXPECT_EQ(matching_formula(find_entry(catalog, "Frobenius(5,2,4)"), 5)->value, 16);
  EXPECT_EQ(matching_formula(find_entry(catalog, "PSL3(4)"), 7)->value, 960);
  EXPECT_EQ(matching_family(find_entry(catalog, "Sp4(2)")), FamilyId::psp(4, 2));
  EXPECT_FALSE(matching_family(find_entry(catalog, "Frobenius(5,2,4)")).has_value());
  EXPECT_EQ(to_string(EntryStatus::Skipped), "SKIPPED");
}
