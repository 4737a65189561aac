#include <doctest.h>

#include "krall/errors.hpp"
#include "krall/suites.hpp"

using namespace krall;

TEST_CASE("default samples") {
  const auto b = default_b_samples();
  CHECK(b.size() == 16);
  for (const auto& s : b) CHECK(!s.is_zero());
}

TEST_CASE("parallel and serial runners agree row for row") {
  SuiteConfig c;
  c.b_samples = {Scalar(3, 2), Scalar(-7, 3), Scalar(2)};
  c.n_max = 6;
  c.numeric = true;
  const auto p = run_suite(Suite::all, c, Runner::parallel);
  const auto s = run_suite(Suite::all, c, Runner::serial);
  CHECK(render(p, Format::json) == render(s, Format::json));
  CHECK(render(p, Format::json) == render(run_suite(Suite::all, c), Format::json));
  CHECK(all_pass(p));
}

TEST_CASE("suite selection") {
  SuiteConfig c;
  c.b_samples = {Scalar(1, 2)};
  c.n_max = 3;
  for (const auto& r : run_suite(Suite::factor, c)) CHECK(r.paper_ref == "pT02");
  CHECK(parse_suite("rr") == Suite::rr);
  CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
  c.n_max = -1;
  CHECK_THROWS(run_suite(Suite::eigen, c));
}

TEST_CASE("characteristic b in the rr suite uses the expanded forms where the five-diagonal one has a pole") {
  SuiteConfig c;
  c.b_samples = {Scalar(2), Scalar::sqrt_of(2)};
  c.n_max = 8;
  const auto rows = run_suite(Suite::rr, c);
  CHECK(all_pass(rows));
}

TEST_CASE("b = 0 is rejected") {
  SuiteConfig c;
  c.b_samples = {Scalar(0)};
  CHECK_THROWS_AS(run_suite(Suite::factor, c), UnsupportedParameter);
}

TEST_CASE("charvals suite reports the Jordan relation") {
  SuiteConfig c;
  c.b_samples = {};
  c.char_js = {2};
  c.n_max = 4;
  const auto rows = run_suite(Suite::charvals, c);
  bool seen = false;
  for (const auto& r : rows) seen |= r.paper_ref == "T4genevec" && r.pass;
  CHECK(seen);
  CHECK(all_pass(rows));
}
