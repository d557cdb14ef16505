#include "sylow/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylow/catalog.hpp"

namespace sylow {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string describe(const Witness& w) {
  const std::string params = witness_params(w);
  return params.empty() ? witness_kind(w) : witness_kind(w) + ": " + params;
}

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["kind"] = witness_kind(w);
  if (const auto* pp = std::get_if<PrimePowerWitness>(&w)) {
    j["base"] = pp->power.base;
    j["exponent"] = pp->power.exponent;
    j["frobenius"] = {{"p", pp->recipe.p}, {"r", pp->recipe.r}, {"t", pp->recipe.t}};
  } else if (const auto* s = std::get_if<SimpleWitness>(&w)) {
    j["case"] = to_string(s->theorem_case);
    j["family"] = s->family.name();
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::size_t closure_cap() {
  const char* raw = std::getenv("SYLOW_CENSUS_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultClosureCap;
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != std::string(raw).size() || value == 0) {
    throw DomainError(std::string("SYLOW_CENSUS_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

int cmd_classify(Integer p, std::ostream& out) {
  const auto values = admissible_sylow_numbers(p);
  out << "admissible Sylow " << p << "-numbers below " << p * p << ":\n";
  for (const auto& v : values) {
    std::vector<std::string> witnesses;
    for (const auto& w : v.witnesses) witnesses.push_back(describe(w));
    out << v.value << "  r=" << v.r << "  " << join(witnesses, "; ") << '\n';
  }
  return kOk;
}

int cmd_decompose(Integer n, Integer p, std::ostream& out) {
  const Decomposition d = decompose(n, p);
  out << "n=" << n << " p=" << p << " r=" << (n - 1) / p << ": " << to_string(d.kind) << '\n';
  if (d.prime_power) {
    out << "  prime power " << d.prime_power->base << '^' << d.prime_power->exponent << ", realized by frobenius("
        << d.recipe->p << ',' << d.recipe->r << ',' << d.recipe->t << ")\n";
  }
  for (const auto& s : d.simple) {
    out << "  simple: " << s.family.name() << " (case " << to_string(s.theorem_case) << ")\n";
  }
  if (d.kind == DecompositionKind::NotASylowNumber) {
    out << "  " << n << " is neither a prime power nor an exceptional value for p=" << p << '\n';
    return kNegative;
  }
  const SolvabilityVerdict v = p_solvability_verdict(n, p);
  out << "verdict: " << to_string(v.verdict) << " (" << v.reason << ")\n";
  return kOk;
}

int cmd_census(Integer p_max, const std::string& format, const std::string& path, std::ostream& out,
               std::ostream& err) {
  const std::string text = render_census(census(p_max), parse_report_format(format));
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kIo;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return kIo;
  }
  return kOk;
}

void print_prime(const PrimeCheck& c, std::ostream& out) {
  out << "  p=" << c.p << " n_p=" << c.by_normalizer << " |N|=" << c.normalizer_order;
  if (c.cyclic) {
    out << " elements=" << *c.by_elements << " conjugacy=" << *c.by_conjugacy;
  } else {
    out << " (non-cyclic Sylow, tower)";
  }
  if (c.expected) out << " expected=" << *c.expected;
  if (c.formula) out << " formula=" << c.formula->value;
  out << (c.ok() ? "" : " MISMATCH") << '\n';
  for (const auto& f : c.failures) out << "    diff: " << f << '\n';
}

int cmd_verify(const std::string& path, bool deep, std::ostream& out, std::ostream& err) {
  std::vector<CatalogEntry> catalog;
  if (path.empty()) {
    catalog = default_catalog();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot read catalog '" << path << "'\n";
      return kIo;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) {
      err << "error: cannot read catalog '" << path << "'\n";
      return kIo;
    }
    catalog = parse_catalog(buffer.str());
  }
  const VerifyReport report = verify_catalog(catalog, deep, closure_cap());
  for (const auto& e : report.entries) {
    out << to_string(e.status) << ' ' << e.name;
    if (e.order > 0) out << " |G|=" << e.order;
    out << '\n';
    for (const auto& m : e.messages) out << "  " << (e.status == EntryStatus::Failed ? "diff: " : "note: ") << m << '\n';
    for (const auto& c : e.primes) print_prime(c, out);
  }
  out << "summary: " << report.count(EntryStatus::Passed) << " passed, " << report.count(EntryStatus::Failed)
      << " failed, " << report.count(EntryStatus::Skipped) << " skipped\n";
  return report.all_passed() ? kOk : kNegative;
}

int cmd_audit(Integer q_max, Integer e_max, std::ostream& out) {
  const AuditReport report = proof_inequality_audit(q_max, e_max);
  out << "inequality audit: q prime power in [2, " << q_max << "], e in [1, " << e_max << "]\n";
  for (const auto& c : report.chains) {
    out << '[' << c.family << "] " << c.label << ": " << c.statement << "  points=" << c.points
        << " checks=" << c.checks << " violations=" << c.violations << '\n';
  }
  for (const auto& v : report.violations) {
    out << "VIOLATION [" << v.family << "] " << v.label << " at q=" << v.point.q << " e=" << v.point.e << ", link "
        << v.link << ": " << v.lhs << ' ' << v.relation << ' ' << v.rhs << " fails\n";
  }
  out << "total: " << report.chains.size() << " chains, " << report.total_checks << " checks, "
      << report.violations.size() << " violations\n";
  return report.violations.empty() ? kOk : kNegative;
}

}  // namespace

ReportFormat parse_report_format(const std::string& text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "markdown") return ReportFormat::Markdown;
  throw DomainError("unknown report format '" + text + "'");
}

std::string render_census(const std::vector<CensusRow>& rows, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      nlohmann::ordered_json primes = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (const auto& v : row.values) {
          nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
          for (const auto& w : v.witnesses) witnesses.push_back(witness_json(w));
          values.push_back({{"n", v.value}, {"r", v.r}, {"witnesses", witnesses}});
        }
        primes.push_back({{"p", row.p}, {"values", values}});
      }
      nlohmann::ordered_json doc;
      doc["primes"] = primes;
      out << doc.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      out << "p,n,r,witness_kind,witness_params\n";
      for (const auto& row : rows) {
        for (const auto& v : row.values) {
          std::vector<std::string> kinds;
          std::vector<std::string> params;
          for (const auto& w : v.witnesses) {
            kinds.push_back(witness_kind(w));
            params.push_back(witness_params(w));
          }
          out << row.p << ',' << v.value << ',' << v.r << ',' << csv_field(join(kinds, ";")) << ','
              << csv_field(join(params, ";")) << '\n';
        }
      }
      break;
    case ReportFormat::Markdown:
      out << "| p | n | r | witnesses |\n|---|---|---|---|\n";
      for (const auto& row : rows) {
        for (const auto& v : row.values) {
          std::vector<std::string> witnesses;
          for (const auto& w : v.witnesses) witnesses.push_back(describe(w));
          out << "| " << row.p << " | " << v.value << " | " << v.r << " | " << join(witnesses, "; ") << " |\n";
        }
      }
      break;
  }
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sylow numbers below p^2: classification, brute-force verification and bound audits", "sylow"};
  app.require_subcommand(1);

  Integer classify_p = 0;
  auto* classify = app.add_subcommand("classify", "List every admissible Sylow p-number below p^2");
  classify->add_option("p", classify_p, "prime")->required();

  Integer decompose_n = 0;
  Integer decompose_p = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split n into its prime-power or simple-group factor");
  decompose_cmd->add_option("n", decompose_n, "candidate Sylow number")->required();
  decompose_cmd->add_option("p", decompose_p, "prime")->required();

  Integer census_max = 0;
  std::string census_format = "json";
  std::string census_out;
  auto* census_cmd = app.add_subcommand("census", "Admissible values for every prime up to --max");
  census_cmd->add_option("--max", census_max, "largest prime")->required();
  census_cmd->add_option("--format", census_format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  census_cmd->add_option("--out", census_out, "output file (default stdout)");

  std::string catalog_path;
  bool deep = false;
  auto* verify = app.add_subcommand("verify", "Rebuild catalog groups and check every Sylow number");
  verify->add_option("--catalog", catalog_path, "catalog JSON (default: built-in)");
  verify->add_flag("--deep", deep, "include the large groups");

  Integer q_max = 32;
  Integer e_max = 36;
  auto* audit = app.add_subcommand("audit", "Evaluate every registered inequality chain exactly");
  audit->add_option("--qmax", q_max, "largest q")->capture_default_str();
  audit->add_option("--emax", e_max, "largest e")->capture_default_str();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("sylow");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(classify_p, out);
    if (*decompose_cmd) return cmd_decompose(decompose_n, decompose_p, out);
    if (*census_cmd) return cmd_census(census_max, census_format, census_out, out, err);
    if (*verify) return cmd_verify(catalog_path, deep, out, err);
    if (*audit) return cmd_audit(q_max, e_max, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sylow
