#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twistor/rational.hpp"

namespace twistor {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, imposed_by_citation };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::fail;
  std::string expected;
  std::string computed;
  std::string paper_anchor;
  std::optional<std::string> note;
};

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int imposed = 0;
};

struct Report {
  std::vector<CheckResult> results;  // sorted by id
  std::string tool_version{kToolVersion};

  ReportSummary summary() const;
  bool ok() const { return summary().fail == 0; }
};

/// all, prop-1.1, prop-1.2, prop-2.1, prop-2.2, thm-2.3, thm-3.1, prop-3.2,
/// serre, table, verlinde-cross.
const std::vector<std::string>& suite_selectors();

/// Runs the checks behind `selector`. Errors raised while computing are
/// recorded as failing checks. Throws InvalidArgument for an unknown selector.
Report run_suite(std::string_view selector);

nlohmann::ordered_json to_json(const Report& r);
std::string render_text(const Report& r);

struct TableRow {
  long k;
  Rational a, b, d;
};

/// a_k, b_k, d_k for k = 0..kmax from the index polynomials.
std::vector<TableRow> index_table(int kmax);
nlohmann::ordered_json to_json(const std::vector<TableRow>& rows);
std::string render_text(const std::vector<TableRow>& rows);

}  // namespace twistor
