#pragma once
// Batch driver over (d, Sigma) pairs.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadnorm/localsym.hpp"
#include "quadnorm/norm1kit.hpp"

namespace quadnorm {

enum class SigmaPolicy { minimal, minimal_plus, explicit_set };
enum class OutputFormat { json, csv, table };

/// Bad flags or inputs; maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::vector<long> d_values;  // sorted, unique
  SigmaPolicy sigma_policy = SigmaPolicy::minimal;
  std::vector<long> sigma_primes;
  OutputFormat output_format = OutputFormat::json;
  bool fail_fast = false;
  unsigned jobs = 1;
  bool explain = false;
  bool timing = true;
  bool show_help = false;
};

/// Squarefree d in [lo, hi] other than 0 and 1, from "LO..HI".
std::vector<long> parse_d_range(const std::string& text);
/// "5,2,3" -> {2, 3, 5}, sorted and without repeats
std::vector<long> parse_prime_list(const std::string& text);

/// The Sigma a policy assigns to d.
SigmaSet sigma_for(const RunConfig& config, long d);

/// Checks every d and every derived Sigma; throws UsageError or EnvelopeError.
void validate(const RunConfig& config);

struct RunResult {
  std::vector<VerificationReport> reports;  // sorted by (d, sigma)
  std::vector<std::string> errors;          // internal errors, one per failed pair
  std::size_t passed = 0;
  std::size_t failed = 0;
  int exit_code() const { return failed == 0 && errors.empty() ? kExitPass : kExitFailure; }
};

/// Runs verify_field on every pair of a validated config.
RunResult run(const RunConfig& config);

void write_reports(const RunConfig& config, const RunResult& result, std::ostream& out);

/// Derivation dump: forms, class groups, S-units, symbols and both sides of each identity.
std::string explain(long d, const SigmaSet& sigma);

/// Parses the arguments after the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);
std::string usage();

/// The whole command: parse, validate, run, print. Returns the exit status.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadnorm
