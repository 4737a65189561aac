#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(KRALL_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("gen") {
  const Run r = cli("gen --b 3/2 --n-max 4 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 5);
  CHECK(j[0]["poly"] == "9/4*x + 15/8");
  CHECK(j[0]["norm"] == "9/16");

  const Run t = cli("gen --char-j 2 --n-max 3 --format latex");
  CHECK(t.code == 0);
  CHECK(t.out.find("\\begin{tabular}") != std::string::npos);
  const auto c = nlohmann::json::parse(cli("gen --char-j 2 --n-max 3 --format json").out);
  CHECK(c[2]["degree"].get<int>() <= 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli("gen --b 0").code == 2);
  CHECK(cli("gen --b 1/0").code == 2);
  CHECK(cli("gen --b abc").code == 2);
  CHECK(cli("gen").code == 2);
  CHECK(cli("gen --b 1 --char-j 1").code == 2);
  CHECK(cli("gen --b 1 --format xml").code == 2);
  CHECK(cli("verify --suite nope").code == 2);
  CHECK(cli("verify --b 0 --suite factor").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("verify") {
  const Run a = cli("verify --suite charvals --char-j 2");
  CHECK(a.code == 0);
  CHECK(a.out.find("T4genevec: pass") != std::string::npos);

  const Run o = cli("verify --suite orthog --b 3/2 --numeric --n-max 6 --format json");
  CHECK(o.code == 0);
  bool numeric_row = false;
  for (const auto& row : nlohmann::json::parse(o.out))
    if (!row["residual"].is_null()) {
      numeric_row = true;
      CHECK(row["residual"].get<double>() < 1e-8);
    }
  CHECK(numeric_row);

  // an unattainable tolerance makes the quadrature rows fail
  CHECK(cli("verify --suite orthog --b 3/2 --numeric --n-max 6 --tol 1e-30").code == 1);
}

TEST_CASE("output is deterministic") {
  const std::string args = "verify --suite all --b-samples 3/2,-7/3 --n-max 5 --numeric --format csv";
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == cli(args + " --serial").out);
}
