#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krall/charvals.hpp"
#include "krall/errors.hpp"
#include "krall/suites.hpp"
#include "krall/table.hpp"

using namespace krall;

namespace {

struct RunConfig {
  std::string b;
  std::optional<int> char_j;
  int n_max = 12;
  std::string suite = "all";
  std::vector<std::string> b_samples;
  std::string format = "text";
  std::string out;
  double tol = 1e-8;
  bool numeric = false;
  bool serial = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scalar resolve_b(const RunConfig& c) {
  if (c.char_j) return char_b(*c.char_j);
  if (c.b.empty()) throw UsageError("one of --b or --char-j is required");
  return Scalar::parse(c.b);
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + c.out + "' for writing");
  f << text;
}

int cmd_gen(const RunConfig& c) {
  const Scalar b = resolve_b(c);
  const KrallContext ctx(b);
  emit(c, render_table(gen_table(ctx, c.n_max), b, parse_format(c.format)));
  return 0;
}

int cmd_verify(const RunConfig& c) {
  SuiteConfig sc;
  sc.n_max = c.n_max;
  sc.numeric = c.numeric;
  sc.tol = c.tol;
  if (c.char_j) sc.char_js = {*c.char_j};
  if (!c.b.empty()) {
    sc.b_samples = {Scalar::parse(c.b)};
  } else if (c.char_j) {
    sc.b_samples = {char_b(*c.char_j)};
  } else if (!c.b_samples.empty() && !(c.b_samples.size() == 1 && c.b_samples[0] == "default")) {
    sc.b_samples.clear();
    for (const auto& s : c.b_samples) sc.b_samples.push_back(Scalar::parse(s));
  }
  const Format fmt = parse_format(c.format);
  const Suite suite = parse_suite(c.suite);
  const auto rows = run_suite(suite, sc, c.serial ? Runner::serial : Runner::parallel);
  emit(c, render(rows, fmt));
  return all_pass(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"krall: tables and exact identity checks for b-deformed Hermite quasi-polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  const auto fmt_check = CLI::IsMember({"text", "json", "csv", "latex"});

  auto common = [&](CLI::App* sub) {
    auto* b = sub->add_option("--b", cfg.b, "parameter b: rational p/q or r+s*sqrt(d)");
    auto* j = sub->add_option("--char-j", cfg.char_j, "use b = sqrt(2j)")->check(CLI::PositiveNumber);
    b->excludes(j);
    sub->add_option("--n-max", cfg.n_max, "largest index n")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "text|json|csv|latex")->check(fmt_check);
    sub->add_option("--out", cfg.out, "write the report to a file");
  };

  CLI::App* gen = app.add_subcommand("gen", "tabulate th_{n+1}, lambda_b(n) and norms");
  common(gen);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", cfg.suite, "suite name")
      ->check(CLI::IsMember({"all", "factor", "eigen", "orthog", "adjoint", "rr", "genfunc", "charvals",
                             "bispectral", "numeric", "identities"}));
  verify->add_option("--b-samples", cfg.b_samples, "'default' or a list of b values")->delimiter(',');
  verify->add_option("--tol", cfg.tol, "relative tolerance of quadrature checks")->check(CLI::PositiveNumber);
  verify->add_flag("--numeric", cfg.numeric, "cross-check orthogonality by quadrature");
  verify->add_flag("--serial", cfg.serial, "run checks on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {  // includes UnsupportedParameter (b = 0)
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ArithmeticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
