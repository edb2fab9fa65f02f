#include "quadnorm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <optional>
#include <thread>
#include <tuple>

#include "CLI11.hpp"
#include "quadnorm/class_group.hpp"
#include "quadnorm/units.hpp"

namespace quadnorm {

namespace {

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("cannot parse " + what + " '" + s + "'");
  return v;
}

struct RawArgs {
  std::vector<std::string> d;
  std::string d_range;
  std::vector<std::string> sigma{"minimal"};
  std::string format = "json";
  bool fail_fast = false;
  unsigned jobs = 1;
  bool explain = false;
  bool no_timing = false;
};

void build_app(CLI::App& app, RawArgs& raw) {
  app.description("Check the norm-residue and class-group identities for quadratic fields Q(sqrt d).");
  app.add_option("--d", raw.d, "Squarefree d (repeatable, or comma separated)")->delimiter(',')->allow_extra_args(false);
  app.add_option("--d-range", raw.d_range, "Every squarefree d in LO..HI");
  app.add_option("--sigma", raw.sigma, "minimal | minimal_plus P1,P2,... | explicit P1,P2,...")->expected(1, 2);
  app.add_option("--format", raw.format, "json | csv | table");
  app.add_flag("--fail-fast", raw.fail_fast, "Stop after the first failing pair");
  app.add_option("--jobs", raw.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--explain", raw.explain, "Print the full derivation for each pair");
  app.add_flag("--no-timing", raw.no_timing, "Write ms_elapsed = 0 so that output is byte-identical across runs");
}

std::string table_header() {
  std::ostringstream os;
  os << std::setw(6) << "d" << "  " << std::left << std::setw(22) << "sigma" << std::right << std::setw(4) << "rho"
     << std::setw(3) << "e" << std::setw(7) << "|C_S|" << std::setw(7) << "|C^D|" << std::setw(7) << "|H-1|"
     << std::setw(7) << "|W/N|" << std::setw(7) << "cok" << std::setw(7) << "2^rho" << "  N1 N2 N3 N4 N5 N6";
  return os.str();
}

std::string table_row(const VerificationReport& r) {
  std::ostringstream os;
  os << std::setw(6) << r.d << "  " << std::left << std::setw(22) << r.sigma.to_string() << std::right << std::setw(4)
     << r.rho << std::setw(3) << r.e << std::setw(7) << r.order_c_sigma.get_str() << std::setw(7)
     << r.order_c_fixed.get_str() << std::setw(7) << r.order_h_minus1.get_str() << std::setw(7)
     << r.order_w_over_n.get_str() << std::setw(7) << r.coker_lambda.get_str() << std::setw(7)
     << r.brauer_order.get_str() << " ";
  for (bool ok : {r.pass_n1, r.pass_n2, r.pass_n3, r.pass_n4, r.pass_n5, r.pass_n6}) os << (ok ? " ok" : " NO");
  return os.str();
}

std::string bits(const BitVec& v) {
  std::string s;
  for (auto b : v) s += b ? '1' : '0';
  return s;
}

}  // namespace

std::vector<long> parse_d_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--d-range expects LO..HI, got '" + text + "'");
  const long lo = parse_long(text.substr(0, dots), "range bound");
  const long hi = parse_long(text.substr(dots + 2), "range bound");
  if (lo > hi) throw UsageError("--d-range: empty range " + text);
  if (std::max(std::labs(lo), std::labs(hi)) > kMaxAbsD)
    throw EnvelopeError("--d-range " + text + " leaves the supported bound |d| <= " + std::to_string(kMaxAbsD));
  std::vector<long> out;
  for (long d = lo; d <= hi; ++d)
    if (d != 0 && d != 1 && is_squarefree(d)) out.push_back(d);
  return out;
}

std::vector<long> parse_prime_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const long p = parse_long(item, "prime");
    if (!is_prime(p)) throw UsageError(item + " is not prime");
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SigmaSet sigma_for(const RunConfig& config, long d) {
  switch (config.sigma_policy) {
    case SigmaPolicy::minimal:
      return minimal_sigma(d);
    case SigmaPolicy::minimal_plus:
      return minimal_sigma(d).with(config.sigma_primes);
    case SigmaPolicy::explicit_set:
      return SigmaSet(config.sigma_primes);
  }
  throw std::logic_error("sigma_for: unknown policy");
}

void validate(const RunConfig& config) {
  if (config.d_values.empty()) throw UsageError("no values of d given (use --d or --d-range)");
  if (config.jobs == 0) throw UsageError("--jobs must be positive");
  for (long d : config.d_values) {
    if (d == 0 || d == 1 || !is_squarefree(d))
      throw UsageError("d = " + std::to_string(d) + " must be squarefree and not 0 or 1");
    if (std::labs(d) > kMaxAbsD)
      throw EnvelopeError("|d| = " + std::to_string(std::labs(d)) + " exceeds the supported bound " + std::to_string(kMaxAbsD));
    const SigmaSet sigma = sigma_for(config, d);
    try {
      validate_sigma(d, sigma);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
    check_envelope(d, sigma);
  }
}

RunResult run(const RunConfig& config) {
  validate(config);
  const std::size_t n = config.d_values.size();
  std::vector<std::optional<VerificationReport>> slots(n);
  std::vector<std::string> errors(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&]() {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      const long d = config.d_values[i];
      try {
        VerificationReport r = verify_field(d, sigma_for(config, d));
        if (!config.timing) r.ms_elapsed = 0;
        if (!r.passed() && config.fail_fast) stop = true;
        slots[i] = std::move(r);
      } catch (const std::exception& ex) {
        errors[i] = "d = " + std::to_string(d) + ": " + ex.what();
        if (config.fail_fast) stop = true;
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(n)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  RunResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (slots[i]) {
      (slots[i]->passed() ? result.passed : result.failed) += 1;
      result.reports.push_back(std::move(*slots[i]));
    }
    if (!errors[i].empty()) result.errors.push_back(errors[i]);
  }
  std::sort(result.reports.begin(), result.reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.d, a.sigma) < std::tie(b.d, b.sigma);
  });
  // With --fail-fast, drop whatever finished after the first failure in (d, sigma) order.
  if (config.fail_fast) {
    auto bad = std::find_if(result.reports.begin(), result.reports.end(), [](const VerificationReport& r) { return !r.passed(); });
    if (bad != result.reports.end()) {
      result.reports.erase(bad + 1, result.reports.end());
      result.passed = static_cast<std::size_t>(bad - result.reports.begin());
      result.failed = 1;
    }
  }
  return result;
}

void write_reports(const RunConfig& config, const RunResult& result, std::ostream& out) {
  switch (config.output_format) {
    case OutputFormat::json:
      for (const VerificationReport& r : result.reports) out << r.to_json() << "\n";
      break;
    case OutputFormat::csv:
      out << VerificationReport::csv_header() << "\n";
      for (const VerificationReport& r : result.reports) out << r.to_csv() << "\n";
      break;
    case OutputFormat::table:
      out << table_header() << "\n";
      for (const VerificationReport& r : result.reports) out << table_row(r) << "\n";
      break;
  }
}

std::string explain(long d, const SigmaSet& sigma) {
  std::ostringstream os;
  const QuadField k(d);
  validate_sigma(d, sigma);
  check_envelope(d, sigma);
  const ClassGroup cl(k);
  os << k.to_string() << ", D = " << k.discriminant() << ", sigma = " << sigma.to_string() << "\n";
  os << "reduced forms:";
  for (const QuadForm& f : cl.reduced()) os << " " << f.to_string();
  os << "\nclass group: " << cl.group().to_string() << " (order " << cl.group().order() << ")";
  if (k.is_real()) os << ", narrow " << cl.narrow_group().to_string();
  os << "\n";
  if (k.is_real()) {
    const QuadElement eps = fundamental_unit(k);
    os << "fundamental unit: " << eps.to_string() << ", norm " << to_string(eps.norm()) << "\n";
  }
  const SClassGroup sc = s_class_group(cl, sigma);
  os << "primes above sigma:\n";
  for (std::size_t i = 0; i < sc.primes.size(); ++i) {
    os << "  " << sc.primes[i].p << " " << to_string(sc.primes[i].type) << " " << sc.primes[i].ideal.to_string() << " class (";
    for (std::size_t j = 0; j < sc.prime_classes[i].size(); ++j) os << (j ? "," : "") << sc.prime_classes[i][j];
    os << ")\n";
  }
  os << "C_{K,sigma}: " << sc.group.to_string() << " (order " << sc.group.order() << ")\n";
  const SUnitGroup units = s_unit_group(cl, sigma);
  os << "S-unit generators (torsion of order " << units.torsion_order << " first):\n";
  for (const QuadElement& g : units.generators()) {
    os << "  " << g.to_string() << "  norm " << to_string(g.norm()) << "  valuations";
    for (long v : units.valuations(g)) os << " " << v;
    os << "\n";
  }
  SigmaProfile profile = w_subgroup(d, sigma);
  os << "sigma':";
  for (const Place& v : profile.sigma_prime) os << " " << v.to_string();
  os << "  rho = " << profile.rho << "\n";
  os << "Hilbert matrix (rows sigma', columns";
  for (const std::string& l : profile.classes.basis_labels()) os << " " << l;
  os << "; 1 = not a local norm):\n";
  for (std::size_t r = 0; r < profile.hilbert.rows(); ++r) os << "  " << profile.sigma_prime[r].to_string() << ": " << bits(profile.hilbert.row(r)) << "\n";
  os << "W basis:";
  for (const BitVec& w : profile.w_basis) os << " " << profile.classes.representative(w);
  os << "  e = " << profile.e << "\n";
  profile.norm_image_basis = norm_image(units, profile.classes);
  os << "norm image basis:";
  for (const BitVec& v : profile.norm_image_basis) os << " " << profile.classes.representative(v);
  os << "\n";
  const VerificationReport r = verify_field(d, sigma);
  auto line = [&](const char* name, const std::string& lhs, const std::string& rhs, bool ok) {
    os << name << ": " << lhs << " vs " << rhs << "  " << (ok ? "ok" : "FAIL") << "\n";
  };
  line("N1 |W/N| = 2^(rho-e)", r.order_w_over_n.get_str(), r.coker_lambda.get_str(), r.pass_n1);
  line("N2 |C^Delta| = |W/N|", r.order_c_fixed.get_str(), r.order_w_over_n.get_str(), r.pass_n2);
  line("N3 |H^-1| = 2^(rho-e)", r.order_h_minus1.get_str(), r.coker_lambda.get_str(), r.pass_n3);
  line("N4 2^(rho-e) divides |C_{K,sigma}|", r.coker_lambda.get_str(), r.order_c_sigma.get_str(), r.pass_n4);
  line("N5 relative Brauer order = 2^rho", r.brauer_order.get_str(), "2^" + std::to_string(r.rho), r.pass_n5);
  const AlphaBetaCheck ab = alpha_beta_r0_check(units);
  line("N6 beta0 alpha0 = 2, alpha0 beta0 = 2", "N1 = " + ab.norm_one.to_string(), "Q = " + ab.quotient.to_string(), r.pass_n6);
  return os.str();
}

std::string usage() {
  CLI::App app{"quadnorm", "quadnorm"};
  RawArgs raw;
  build_app(app, raw);
  return app.help();
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"quadnorm", "quadnorm"};
  RawArgs raw;
  build_app(app, raw);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  RunConfig config;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    config.show_help = true;
    return config;
  } catch (const CLI::ParseError& ex) {
    throw UsageError(ex.what());
  }
  for (const std::string& s : raw.d) config.d_values.push_back(parse_long(s, "d"));
  if (!raw.d_range.empty()) {
    const std::vector<long> range = parse_d_range(raw.d_range);
    config.d_values.insert(config.d_values.end(), range.begin(), range.end());
  }
  std::sort(config.d_values.begin(), config.d_values.end());
  config.d_values.erase(std::unique(config.d_values.begin(), config.d_values.end()), config.d_values.end());

  const std::string& policy = raw.sigma.at(0);
  if (policy == "minimal") {
    if (raw.sigma.size() != 1) throw UsageError("--sigma minimal takes no prime list");
    config.sigma_policy = SigmaPolicy::minimal;
  } else if (policy == "minimal_plus" || policy == "explicit") {
    if (raw.sigma.size() != 2) throw UsageError("--sigma " + policy + " needs a prime list such as 2,3,5");
    config.sigma_policy = policy == "explicit" ? SigmaPolicy::explicit_set : SigmaPolicy::minimal_plus;
    config.sigma_primes = parse_prime_list(raw.sigma[1]);
  } else {
    throw UsageError("unknown sigma policy '" + policy + "'");
  }

  if (raw.format == "json") config.output_format = OutputFormat::json;
  else if (raw.format == "csv") config.output_format = OutputFormat::csv;
  else if (raw.format == "table") config.output_format = OutputFormat::table;
  else throw UsageError("unknown format '" + raw.format + "'");

  config.fail_fast = raw.fail_fast;
  config.jobs = raw.jobs;
  config.explain = raw.explain;
  config.timing = !raw.no_timing;
  return config;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
    if (config.show_help) {
      out << usage();
      return kExitPass;
    }
    validate(config);
  } catch (const std::invalid_argument& ex) {
    err << "quadnorm: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& ex) {
    err << "quadnorm: " << ex.what() << "\n";
    return kExitUsage;
  }

  if (config.explain) {
    int status = kExitPass;
    for (long d : config.d_values) {
      const SigmaSet sigma = sigma_for(config, d);
      try {
        out << explain(d, sigma) << "\n";
        if (!verify_field(d, sigma).passed()) status = kExitFailure;
      } catch (const std::exception& ex) {
        err << "quadnorm: d = " << d << ": " << ex.what() << "\n";
        status = kExitFailure;
      }
      if (status != kExitPass && config.fail_fast) break;
    }
    return status;
  }

  const RunResult result = run(config);
  write_reports(config, result, out);
  for (const std::string& e : result.errors) err << "quadnorm: " << e << "\n";
  err << "checked " << (result.passed + result.failed + result.errors.size()) << " pairs: " << result.passed << " passed, "
      << result.failed + result.errors.size() << " failed\n";
  return result.exit_code();
}

}  // namespace quadnorm
