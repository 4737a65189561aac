#include "krall/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace krall {

namespace {

std::string residual_text(const std::optional<double>& r) {
  if (!r) return "";
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << *r;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '&': case '%': case '#': case '$': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + name + "'");
}

bool all_pass(const std::vector<CheckResult>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckResult& r) { return r.pass; });
}

std::string render(const std::vector<CheckResult>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::text: {
      std::size_t passed = 0;
      for (const auto& r : rows) {
        passed += r.pass;
        os << r.paper_ref << ": " << (r.pass ? "pass" : "FAIL") << "  " << r.check;
        if (!r.b.empty()) os << "  b=" << r.b;
        if (r.n) os << " n=" << *r.n;
        if (r.residual) os << "  residual=" << residual_text(r.residual);
        if (!r.pass && !r.detail.empty()) os << "  [" << r.detail << "]";
        os << '\n';
      }
      os << passed << '/' << rows.size() << " checks passed\n";
      break;
    }
    case Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["paper_ref"] = r.paper_ref;
        j["b"] = r.b;
        j["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
        j["status"] = r.pass ? "pass" : "fail";
        j["residual"] = r.residual ? nlohmann::ordered_json(*r.residual) : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "check,paper_ref,b,n,status,residual\n";
      for (const auto& r : rows)
        os << csv_field(r.check) << ',' << csv_field(r.paper_ref) << ',' << csv_field(r.b) << ','
           << (r.n ? std::to_string(*r.n) : "") << ',' << (r.pass ? "pass" : "fail") << ','
           << residual_text(r.residual) << '\n';
      break;
    case Format::latex:
      os << "\\begin{tabular}{lllrll}\n\\hline\ncheck & ref & $b$ & $n$ & status & residual \\\\\n\\hline\n";
      for (const auto& r : rows)
        os << latex_escape(r.check) << " & " << latex_escape(r.paper_ref) << " & \\texttt{"
           << latex_escape(r.b) << "} & " << (r.n ? std::to_string(*r.n) : "") << " & "
           << (r.pass ? "pass" : "fail") << " & " << residual_text(r.residual) << " \\\\\n";
      os << "\\hline\n\\end{tabular}\n";
      break;
  }
  return os.str();
}

}  // namespace krall
