#pragma once

// Command-line front end. `run_cli` is the whole program minus process
// plumbing, so tests can drive it with string streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "sylow/classifier.hpp"

namespace sylow {

enum class ReportFormat { Json, Csv, Markdown };

ReportFormat parse_report_format(const std::string& text);

std::string render_census(const std::vector<CensusRow>& rows, ReportFormat format);

/// Exit codes: 0 success, 1 semantic negative, 2 usage or domain error,
/// 3 I/O error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylow
