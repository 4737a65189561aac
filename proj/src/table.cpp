#include "krall/table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "krall/hermite.hpp"

namespace krall {

std::vector<TableRow> gen_table(const KrallContext& ctx, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<TableRow> rows;
  for (int n = 0; n <= n_max; ++n) rows.push_back({n, ctx.th(n + 1), ctx.lambda(n), ctx.lambda(n) * nu(n)});
  return rows;
}

namespace {

std::string coeff_list(const Poly& p, const char* sep) {
  std::string s;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k) s += sep;
    s += p.coeff(k).str();
  }
  return s;
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, const Scalar& b, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["b"] = b.str();
        j["poly"] = r.th.str();
        auto cs = nlohmann::ordered_json::array();
        for (int k = 0; k <= r.th.degree(); ++k) cs.push_back(r.th.coeff(k).str());
        j["coeffs"] = std::move(cs);
        j["degree"] = r.th.degree();
        j["lambda"] = r.lambda.str();
        j["norm"] = r.norm.str();
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "n,b,degree,coeffs,lambda,norm\n";
      for (const auto& r : rows)
        os << r.n << ',' << b.str() << ',' << r.th.degree() << ",\"" << coeff_list(r.th, ";") << "\","
           << r.lambda.str() << ',' << r.norm.str() << '\n';
      break;
    case Format::latex:
      os << "\\begin{tabular}{rlll}\n\\hline\n$n$ & $\\tilde h_{n+1}$ & $\\lambda_b(n)$ & $\\lambda_b(n)\\nu_n$ \\\\\n\\hline\n";
      for (const auto& r : rows)
        os << r.n << " & \\texttt{" << r.th.str() << "} & \\texttt{" << r.lambda.str() << "} & \\texttt{"
           << r.norm.str() << "} \\\\\n";
      os << "\\hline\n\\end{tabular}\n";
      break;
    case Format::text:
      for (const auto& r : rows)
        os << "n=" << r.n << "  th=" << r.th.str() << "  lambda=" << r.lambda.str() << "  norm=" << r.norm.str()
           << '\n';
      break;
  }
  return os.str();
}

}  // namespace krall
