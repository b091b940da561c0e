#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "rrh/precision/error.hpp"

using rrh::Precision;
using rrh::cli::parse_number;
using rrh::cli::run_cli;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

double as_double(const json& s) { return std::stod(s.get<std::string>()); }

}  // namespace

TEST_CASE("number literals") {
  const Precision p(128);
  auto half = parse_number("-1/2", p);
  REQUIRE(half.exact);
  CHECK(*half.exact == mpq_class(-1, 2));
  CHECK(half.value.re().to_double() == -0.5);

  auto dec = parse_number("0.25", p);
  CHECK_FALSE(dec.exact);
  CHECK(dec.value.re().to_double() == 0.25);
  CHECK(parse_number("1e-3", p).value.re().to_double() == doctest::Approx(1e-3));

  auto z = parse_number("-1/2+3/4i", p);
  CHECK_FALSE(z.exact);
  CHECK(z.value.re().to_double() == -0.5);
  CHECK(z.value.im().to_double() == 0.75);

  CHECK(parse_number("2i", p).value.im().to_double() == 2.0);
  CHECK(parse_number("-i", p).value.im().to_double() == -1.0);
  CHECK(parse_number("1.5e-2-2.5e+1i", p).value.im().to_double() == -25.0);
  CHECK(parse_number("3+0i", p).exact);

  CHECK_THROWS_AS(parse_number("abc", p), rrh::DomainError);
  CHECK_THROWS_AS(parse_number("1/0", p), rrh::DomainError);
  CHECK_THROWS_AS(parse_number("", p), rrh::DomainError);
}

TEST_CASE("chi subcommand") {
  CHECK(run({"chi", "--k", "1", "--N", "-1/2", "--n", "2"}).out == "3/8\n");
  CHECK(run({"chi", "--k", "2", "--N", "3", "--n", "0"}).out == "1\n");
  CHECK(run({"chi", "--k", "2", "--N", "-1/2", "--series", "4"}).out == "[1, 3/8, 15/64, 175/1024, 2205/16384]\n");

  const json j = run_json({"chi", "--k", "2", "--N", "-1/2", "--series", "4"});
  CHECK(j["op"] == "chi");
  CHECK(j["result"]["coefficients"][4]["exact"] == "2205/16384");
  CHECK(as_double(j["result"]["coefficients"][1]["value"]["re"]) == 0.375);

  // decimal input takes the floating path: (N+1)(N+2)/2 at N = 0.5+i
  const json d = run_json({"chi", "--N", "0.5+1i", "--n", "2"});
  CHECK_FALSE(d["result"].contains("exact"));
  CHECK(as_double(d["result"]["value"]["re"]) == doctest::Approx(1.375));
  CHECK(as_double(d["result"]["value"]["im"]) == doctest::Approx(2.0));
}

TEST_CASE("json output is deterministic and well formed") {
  const std::vector<std::string> args{"--format", "json", "verify", "prop2", "--k", "2", "--N", "-1/3", "--n", "2"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  for (const char* key : {"op", "params", "result", "report", "precision_bits"}) CHECK(j.contains(key));
  CHECK(j["precision_bits"] == 128);
  for (const auto& row : j["report"]) {
    CHECK(row["passed"] == true);
    CHECK(row["lhs"].contains("re"));
    CHECK(row["lhs"].contains("im"));
  }
}

TEST_CASE("verify subcommands") {
  const json p1 = run_json({"verify", "prop1", "--N", "-1/2", "--n", "2"});
  REQUIRE(p1["report"].size() == 1);
  CHECK(p1["report"][0]["rel_err"].get<double>() < 1e-25);

  const json sel = run_json({"verify", "selberg", "--alpha", "1", "--beta", "1", "--gamma", "1", "--k", "2"});
  CHECK(as_double(sel["result"]["closed_form"]["re"]) == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(as_double(sel["result"]["quadrature"]["re"]) == doctest::Approx(1.0 / 6).epsilon(1e-15));

  CHECK(run({"verify", "prop2", "--k", "2", "--N", "-1/2", "--n", "1"}).code == 0);
  CHECK(run({"verify", "beta", "--alpha", "-1/2", "--beta", "3/2"}).code == 0);
  CHECK(run({"verify", "poincare", "--N", "7/3"}).code == 0);
  CHECK(run({"verify", "ode", "--N", "2", "--z", "-3"}).code == 0);
}

TEST_CASE("deligne subcommands") {
  CHECK(run({"deligne", "dim", "--word", "••", "--idempotent", "sym"}).out == "t(t+1)/2\n");
  CHECK(run({"deligne", "dim", "--word", "•"}).out == "t\n");
  CHECK(run({"deligne", "dim", "--word", "oo", "--idempotent", "alt", "--t", "5"}).out == "t(t-1)/2\nat t=5: 10\n");
  CHECK(run({"deligne", "vogel", "--alpha", "-2", "--beta", "4", "--gamma", "3"}).out == "21\n");

  const Run laws = run({"deligne", "check-laws", "--max-word-len", "3"});
  CHECK(laws.code == 0);
  CHECK(laws.out.rfind("PASS", 0) == 0);

  const json c = run_json({"deligne", "compose", "--source", "∘•", "--middle", "•∘•∘", "--target", "••∘∘", "--g",
                           "2-1,5-0,3-4", "--f", "4-6,5-0,7-3,1-2"});
  REQUIRE(c["result"]["terms"].size() == 1);
  CHECK(c["result"]["terms"][0]["coefficient"]["factored"] == "t");
  CHECK(c["result"]["terms"][0]["edges"] == json::parse("[[0,5],[1,3],[2,4]]"));
}

TEST_CASE("gamma-claim subcommand") {
  const json j = run_json({"gamma-claim", "--N", "5", "--z-list", "-10,-20,-40", "--box", "3x3"});
  const auto& rows = j["result"]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["i"] == 1);
  CHECK(rows[0]["j"] == 0);
  for (const auto& e : rows[0]["entries"]) CHECK(e["discrepancy"].get<double>() == 0.0);
  CHECK(j["result"]["warnings"].empty());

  const json e = run_json({"gamma-claim", "--N", "-1", "--z-list", "-5"});
  CHECK(e["result"]["psi"][0]["psi0_rel_err"].get<double>() < 1e-30);
  CHECK_FALSE(e["result"]["warnings"].empty());

  const Run csv = run({"--format", "csv", "gamma-claim", "--N", "5", "--z-list", "-10", "--box", "2x2"});
  CHECK(csv.out.rfind("i,j,z,ratio_re,ratio_im,gamma_rhs_re,gamma_rhs_im,discrepancy,step_ok\n", 0) == 0);
}

TEST_CASE("exit codes and diagnostics") {
  // usage
  CHECK(run({}).code == 2);
  CHECK(run({"chi", "--N", "1", "--n", "1", "--tol", "0"}).code == 2);
  CHECK(run({"--prec", "32", "chi", "--N", "1", "--n", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  // domain: structured message on stderr, nothing on stdout
  const Run bad = run({"--format", "json", "chi", "--N", "abc", "--n", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(json::parse(bad.err)["error"]["type"] == "DomainError");
  CHECK(run({"chi", "--k", "2", "--N", "-1", "--n", "1"}).code == 2);

  // per-row domain error
  const Run pole = run({"--format", "json", "verify", "beta", "--alpha", "-1", "--beta", "2"});
  CHECK(pole.code == 2);
  CHECK(json::parse(pole.out)["report"][0].contains("error"));

  // a tolerance far below what 64 bits can deliver fails the row
  const Run tight = run({"--prec", "64", "--tol", "1e-40", "verify", "prop1", "--N", "-1/3+1/5i", "--n", "5"});
  CHECK(tight.code == 1);
  CHECK(tight.out.rfind("FAIL", 0) == 0);
}

TEST_CASE("precision from the environment") {
  ::setenv("RRH_PRECISION_BITS", "200", 1);
  CHECK(run_json({"chi", "--N", "1/3", "--n", "1"})["precision_bits"] == 200);
  CHECK(run_json({"--prec", "96", "chi", "--N", "1/3", "--n", "1"})["precision_bits"] == 96);
  ::setenv("RRH_PRECISION_BITS", "32", 1);
  CHECK(run({"chi", "--N", "1/3", "--n", "1"}).code == 2);
  ::unsetenv("RRH_PRECISION_BITS");
  CHECK(run_json({"chi", "--N", "1/3", "--n", "1"})["precision_bits"] == 128);
}
