#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "quadnorm/cli.hpp"

using namespace quadnorm;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli_main(args, out, err);
  return {status, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("argument parsing") {
  const RunConfig a = parse_args({"--d", "-14", "--sigma", "minimal"});
  CHECK(a.d_values == std::vector<long>{-14});
  CHECK(a.sigma_policy == SigmaPolicy::minimal);
  CHECK(a.output_format == OutputFormat::json);

  const RunConfig b = parse_args({"--d-range", "-6..6", "--sigma", "minimal_plus", "3,2", "--format", "csv", "--jobs", "3"});
  CHECK(b.d_values == std::vector<long>{-6, -5, -3, -2, -1, 2, 3, 5, 6});
  CHECK(b.sigma_policy == SigmaPolicy::minimal_plus);
  CHECK(b.sigma_primes == std::vector<long>{2, 3});
  CHECK(b.jobs == 3);
  CHECK(sigma_for(b, -5).to_string() == "{inf,2,3,5}");

  const RunConfig c = parse_args({"--d", "-5,2", "--sigma", "explicit", "2,5", "--fail-fast", "--explain"});
  CHECK(c.d_values == std::vector<long>{-5, 2});
  CHECK(c.fail_fast);
  CHECK(c.explain);
  CHECK(sigma_for(c, 2).to_string() == "{inf,2,5}");

  CHECK_THROWS_AS(parse_args({"--d", "-5", "--sigma", "weird"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--d", "x"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--d", "-5", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--d", "-5", "--sigma", "explicit"}), UsageError);
  CHECK_THROWS_AS(parse_d_range("5..1"), UsageError);
  CHECK_THROWS_AS(parse_prime_list("2,4"), UsageError);
}

TEST_CASE("exit codes") {
  const Outcome ok = invoke({"--d", "-14", "--sigma", "minimal"});
  CHECK(ok.status == kExitPass);
  CHECK(count_lines(ok.out) == 1);
  CHECK(ok.out.find("\"d\":-14") != std::string::npos);

  CHECK(invoke({"--d", "4"}).status == kExitUsage);
  CHECK(invoke({"--d", "0"}).status == kExitUsage);
  CHECK(invoke({"--d", "501"}).status == kExitUsage);
  CHECK(invoke({"--d", "-5", "--sigma", "explicit", "2"}).status == kExitUsage);
  CHECK(invoke({"--d", "-5", "--sigma", "explicit", "2,5,101"}).status == kExitUsage);
  CHECK(invoke({"--bogus"}).status == kExitUsage);
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"--help"}).status == kExitPass);
}

TEST_CASE("csv output is independent of the worker count") {
  const std::vector<std::string> base{"--d-range", "-40..40", "--sigma", "minimal_plus", "2,3", "--format", "csv", "--no-timing"};
  std::vector<std::string> one = base, four = base;
  one.insert(one.end(), {"--jobs", "1"});
  four.insert(four.end(), {"--jobs", "4"});
  const Outcome a = invoke(one), b = invoke(four);
  CHECK(a.status == kExitPass);
  CHECK(b.status == kExitPass);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind(VerificationReport::csv_header() + "\n", 0) == 0);
}

TEST_CASE("table output") {
  const Outcome t = invoke({"--d", "-5,-14", "--format", "table"});
  CHECK(t.status == kExitPass);
  CHECK(count_lines(t.out) >= 3);
}

TEST_CASE("explain") {
  const std::string a = explain(-5, SigmaSet({2, 5}));
  CHECK(a.find("(1,0,5)") != std::string::npos);
  CHECK(a.find("(2,2,3)") != std::string::npos);
  CHECK(a.find("  -1  norm 1") != std::string::npos);
  CHECK(a.find("  2  norm 4") != std::string::npos);
  CHECK(a.find("  sqrt(-5)  norm 5") != std::string::npos);
  CHECK(explain(-23, SigmaSet({23})).find("class group: Z/3") != std::string::npos);
  const std::string c = explain(2, SigmaSet({2}));
  CHECK(c.find("fundamental unit: 1+sqrt(2), norm -1") != std::string::npos);
  CHECK(invoke({"--d", "-23", "--explain"}).out.find("class group: Z/3") != std::string::npos);
}
