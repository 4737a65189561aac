#pragma once

#include <optional>
#include <string>
#include <vector>

namespace krall {

/// One verified identity.  paper_ref is the equation tag of the identity.
struct CheckResult {
  std::string check;
  std::string paper_ref;
  std::string b;
  std::optional<int> n;
  bool pass = false;
  std::optional<double> residual;
  std::string detail;  // diagnostic only, not serialized
};

/// text is one line per check: "<ref>: <status>  <check> ..."
enum class Format { text, json, csv, latex };

Format parse_format(const std::string& name);
std::string render(const std::vector<CheckResult>& rows, Format format);
bool all_pass(const std::vector<CheckResult>& rows);

}  // namespace krall
