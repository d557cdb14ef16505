#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sylow/cli.hpp"

using namespace sylow;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyThirteen) {
  const CliRun r = run({"classify", "13"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("144  r=11  simple: PSL3(3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("14  r=1  simple: PSL2(13)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("27  r=2  prime_power: 3^3 frobenius(13,3,3)"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyRejectsNonPrime) {
  const CliRun r = run({"classify", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Decompose) {
  const CliRun six = run({"decompose", "6", "5"});
  EXPECT_EQ(six.code, 0);
  EXPECT_NE(six.out.find("SimpleFactor"), std::string::npos) << six.out;
  EXPECT_NE(six.out.find("NonPSolvableForced"), std::string::npos) << six.out;
  const CliRun bad = run({"decompose", "21", "5"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("NotASylowNumber"), std::string::npos) << bad.out;
  EXPECT_EQ(run({"decompose", "22", "3"}).code, 2);
  EXPECT_EQ(run({"decompose", "x", "3"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"census"}).code, 2);
  EXPECT_EQ(run({"census", "--max", "13", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"audit", "--qmax", "1"}).code, 2);
}

TEST(Cli, CensusJsonSchemaAndDeterminism) {
  const CliRun a = run({"census", "--max", "13"});
  const CliRun b = run({"census", "--max", "13", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  ASSERT_TRUE(doc.at("primes").is_array());
  ASSERT_EQ(doc["primes"].size(), 6u);
  const auto& last = doc["primes"][5];
  EXPECT_EQ(last.at("p"), 13);
  ASSERT_EQ(last.at("values").size(), 8u);
  for (const auto& v : last["values"]) {
    EXPECT_EQ((v.at("n").get<Integer>() - 1) % 13, 0);
    EXPECT_EQ(v.at("r").get<Integer>(), (v["n"].get<Integer>() - 1) / 13);
    for (const auto& w : v.at("witnesses")) {
      const auto kind = w.at("kind").get<std::string>();
      EXPECT_TRUE(kind == "trivial" || kind == "prime_power" || kind == "simple") << kind;
    }
  }
}

TEST(Cli, CensusCsvAndMarkdown) {
  const CliRun csv = run({"census", "--max", "7", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("p,n,r,witness_kind,witness_params\n", 0), 0u) << csv.out;
  EXPECT_NE(csv.out.find("7,8,1,prime_power;simple,"), std::string::npos) << csv.out;
  const CliRun md = run({"census", "--max", "7", "--format", "markdown"});
  ASSERT_EQ(md.code, 0);
  EXPECT_EQ(md.out.rfind("|", 0), 0u) << md.out;
  EXPECT_NE(md.out.find("PSL2(7)"), std::string::npos);
}

TEST(Cli, CensusOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "sylow_cli_census_test.json";
  const CliRun r = run({"census", "--max", "5", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), run({"census", "--max", "5"}).out);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"census", "--max", "5", "--out", "/nonexistent-dir/x/census.json"}).code, 3);
}

TEST(Cli, VerifyDefaultAndErrors) {
  const CliRun r = run({"verify"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("summary: 16 passed, 0 failed, 3 skipped"), std::string::npos) << r.out;
  EXPECT_EQ(run({"verify", "--catalog", "/nonexistent/catalog.json"}).code, 3);

  const auto path = std::filesystem::temp_directory_path() / "sylow_cli_bad_catalog.json";
  {
    std::ofstream out(path);
    out << "{broken";
  }
  EXPECT_EQ(run({"verify", "--catalog", path.string()}).code, 2);
  {
    std::ofstream out(path);
    out << R"([{"name": "A5", "constructor": "alternating", "parameters": [5], "expected_order": 60,
               "expected_sylow": [{"p": 5, "n_p": 11}]}])";
  }
  const CliRun tampered = run({"verify", "--catalog", path.string()});
  EXPECT_EQ(tampered.code, 1);
  EXPECT_NE(tampered.out.find("FAILED"), std::string::npos) << tampered.out;
  EXPECT_NE(tampered.out.find("diff:"), std::string::npos) << tampered.out;
  std::filesystem::remove(path);
}

TEST(Cli, AuditSmallRange) {
  const CliRun r = run({"audit", "--qmax", "4", "--emax", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" 0 violations"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("VIOLATION"), std::string::npos);
}

TEST(Cli, CensusCapEnvironment) {
  ::setenv("SYLOW_CENSUS_CAP", "not-a-number", 1);
  const CliRun r = run({"verify"});
  ::unsetenv("SYLOW_CENSUS_CAP");
  EXPECT_EQ(r.code, 2);
}
