#include "quadnorm/norm1kit.hpp"

#include <chrono>
#include <cstdio>
#include "json.hpp"
#include <stdexcept>

namespace quadnorm {

namespace {

Int power_of_two(long k) {
  if (k < 0) throw std::logic_error("negative power of two");
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return out;
}

}  // namespace

UnitSquareClasses::UnitSquareClasses(const SigmaSet& sigma) : primes_(sigma.finite_primes()) {}

std::vector<std::string> UnitSquareClasses::basis_labels() const {
  std::vector<std::string> out{"-1"};
  for (long p : primes_) out.push_back(std::to_string(p));
  return out;
}

std::vector<Rational> UnitSquareClasses::generators() const {
  std::vector<Rational> out{Rational(-1)};
  for (long p : primes_) out.emplace_back(p);
  return out;
}

BitVec UnitSquareClasses::vector_of(const Rational& x) const {
  if (x == 0) throw std::invalid_argument("vector_of: zero");
  BitVec v(dimension(), 0);
  v[0] = x < 0 ? 1 : 0;
  Int num = abs(x.get_num());
  Int den = x.get_den();
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const Int p = primes_[i];
    const auto a = mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    const auto b = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    v[i + 1] = static_cast<std::uint8_t>((a + b) % 2);
  }
  if (num != 1 || den != 1) throw std::invalid_argument("vector_of: " + to_string(x) + " is not a Sigma-unit");
  return v;
}

Int UnitSquareClasses::representative(const BitVec& v) const {
  Int out = v.at(0) ? -1 : 1;
  for (std::size_t i = 0; i < primes_.size(); ++i)
    if (v.at(i + 1)) out *= primes_[i];
  return out;
}

SigmaProfile w_subgroup(long d, const SigmaSet& sigma) {
  const SigmaPrime sp = sigma_prime_set(d, sigma);
  SigmaProfile out;
  out.d = d;
  out.sigma = sigma;
  out.sigma_prime = sp.places;
  out.rho = sp.rho;
  out.classes = UnitSquareClasses(sigma);
  out.hilbert = hilbert_matrix(out.classes.generators(), d, sp.places);
  out.w_basis = f2_kernel(out.hilbert);
  out.e = static_cast<int>(out.classes.dimension() - out.w_basis.size());
  if (out.e > out.rho)
    throw std::logic_error("w_subgroup: rank of the local norm map exceeds rho for d = " + std::to_string(d));
  out.coker_lambda_order = power_of_two(out.rho - out.e);
  return out;
}

std::vector<BitVec> norm_image(const SUnitGroup& units, const UnitSquareClasses& classes) {
  std::vector<BitVec> vs;
  for (const QuadElement& g : units.generators()) {
    try {
      vs.push_back(classes.vector_of(g.norm()));
    } catch (const std::invalid_argument&) {
      throw std::logic_error("norm_image: norm of " + g.to_string() + " is not a Sigma-unit");
    }
  }
  return f2_basis(vs);
}

Int w_over_n_order(const SigmaProfile& profile) {
  for (const BitVec& v : profile.norm_image_basis)
    if (!f2_in_span(profile.w_basis, v))
      throw std::logic_error("w_over_n_order: norm class " + profile.classes.representative(v).get_str() +
                             " is not a local norm everywhere");
  return power_of_two(static_cast<long>(profile.w_basis.size()) - static_cast<long>(profile.norm_image_basis.size()));
}

Int relative_brauer_order(const SigmaProfile& profile) {
  BitMatrix sum(1, profile.sigma_prime.size());
  for (std::size_t c = 0; c < sum.cols(); ++c) sum.set(0, c, true);
  return power_of_two(static_cast<long>(f2_kernel(sum).size()));
}

bool lambda_in_sum_kernel(const SigmaProfile& profile) {
  for (std::size_t c = 0; c < profile.hilbert.cols(); ++c) {
    int parity = 0;
    for (std::size_t r = 0; r < profile.hilbert.rows(); ++r) parity ^= profile.hilbert(r, c);
    if (parity) return false;
  }
  return true;
}

Int ambiguous_class_order(const SClassGroup& c) {
  const AbHom one_minus_tau = AbHom::identity(c.group) - c.tau;
  return hom_decompose(one_minus_tau).kernel.group().order();
}

Int ambiguous_class_order(const QuadField& k, const SigmaSet& sigma) {
  return ambiguous_class_order(s_class_group(ClassGroup(k), sigma));
}

Int h_minus_one_order(const SClassGroup& c) { return tate_h(InvolutionModule(c.group, c.tau), -1).order(); }

Int h_minus_one_order(const QuadField& k, const SigmaSet& sigma) {
  return h_minus_one_order(s_class_group(ClassGroup(k), sigma));
}

AlphaBetaCheck alpha_beta_r0_check(const SUnitGroup& units) {
  AlphaBetaCheck out;
  const FinAbGroup G = units.abstract_group();
  const std::vector<QuadElement> gens = units.generators();
  const std::vector<long>& primes = units.sigma.finite_primes();
  const Int& D = units.field.discriminant();

  // Norm to O*_{Q,Sigma} = {+-1} x Z^primes.
  std::vector<Int> target_factors{2};
  target_factors.resize(1 + primes.size(), 0);
  const FinAbGroup rational_units(target_factors);
  std::vector<Element> norm_cols;
  for (const QuadElement& g : gens) {
    const Rational n = g.norm();
    Element col{Int(n < 0 ? 1 : 0)};
    for (long p : primes) {
      const Int P = p;
      Int num = abs(n.get_num()), den = n.get_den();
      const long a = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t()));
      const long b = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()));
      col.push_back(a - b);
    }
    norm_cols.push_back(col);
  }
  const AbHom norm(G, rational_units, IntMatrix::from_columns(rational_units.ngens(), norm_cols));
  const Subgroup n1 = hom_decompose(norm).kernel;
  out.norm_one = n1.group();

  std::vector<Element> rational_classes{units.dlog(QuadElement(D, -1))};
  for (long p : primes) rational_classes.push_back(units.dlog(QuadElement(D, p)));
  const Quotient q(G, rational_classes);
  out.quotient = q.group();

  // x -> x / tau(x) on G.
  std::vector<Element> beta_cols;
  for (const QuadElement& g : gens) beta_cols.push_back(units.dlog(g / g.conj()));
  const AbHom beta_g(G, G, IntMatrix::from_columns(G.ngens(), beta_cols));

  // alpha: N1 -> Q, inclusion followed by projection.
  std::vector<Element> alpha_cols;
  for (std::size_t j = 0; j < n1.group().ngens(); ++j) alpha_cols.push_back(q.project(n1.embedding().column(j)));
  const AbHom alpha(n1.group(), q.group(), IntMatrix::from_columns(q.group().ngens(), alpha_cols));

  // beta: Q -> N1 through lifts; well defined because rationals are tau-fixed.
  std::vector<Element> beta_q_cols;
  for (std::size_t j = 0; j < q.group().ngens(); ++j) {
    const auto c = n1.coordinates(beta_g(q.lift(q.group().basis_vector(j))));
    if (!c) {
      out.failure = "x / tau(x) is not of norm one";
      return out;
    }
    beta_q_cols.push_back(*c);
  }
  std::optional<AbHom> beta;
  try {
    beta.emplace(q.group(), n1.group(), IntMatrix::from_columns(n1.group().ngens(), beta_q_cols));
  } catch (const std::invalid_argument& ex) {
    out.failure = std::string("beta is not well defined on Q: ") + ex.what();
    return out;
  }

  out.beta_alpha_hom = compose(*beta, alpha) == AbHom::multiplication(n1.group(), 2);
  out.alpha_beta_hom = compose(alpha, *beta) == AbHom::multiplication(q.group(), 2);

  out.beta_alpha_elements = true;
  for (std::size_t j = 0; j < n1.group().ngens(); ++j) {
    const QuadElement u = units.element(n1.embedding().column(j));
    if (u.norm() != 1 || u / u.conj() != u * u) {
      out.beta_alpha_elements = false;
      out.failure = "beta(alpha(u)) != u^2 for u = " + u.to_string();
    }
  }
  out.alpha_beta_elements = true;
  for (std::size_t j = 0; j < q.group().ngens(); ++j) {
    const Element e = q.group().basis_vector(j);
    const QuadElement x = units.element(q.lift(e));
    if (q.project(units.dlog(x / x.conj())) != q.group().scale(e, 2)) {
      out.alpha_beta_elements = false;
      out.failure = "alpha(beta(q)) != q^2 for the class of " + x.to_string();
    }
  }
  return out;
}

std::string VerificationReport::sigma_string() const {
  std::string out = "inf";
  for (long p : sigma.finite_primes()) out += ";" + std::to_string(p);
  return out;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["sigma"] = sigma_string();
  j["rho"] = rho;
  j["e"] = e;
  j["order_c_sigma"] = to_ll(order_c_sigma);
  j["order_c_fixed"] = to_ll(order_c_fixed);
  j["order_h_minus1"] = to_ll(order_h_minus1);
  j["order_w_over_n"] = to_ll(order_w_over_n);
  j["coker_lambda"] = to_ll(coker_lambda);
  j["brauer_order"] = to_ll(brauer_order);
  j["pass_n1"] = pass_n1;
  j["pass_n2"] = pass_n2;
  j["pass_n3"] = pass_n3;
  j["pass_n4"] = pass_n4;
  j["pass_n5"] = pass_n5;
  j["pass_n6"] = pass_n6;
  j["ms_elapsed"] = ms_elapsed;
  return j.dump();
}

std::string VerificationReport::csv_header() {
  return "d,sigma,rho,e,order_c_sigma,order_c_fixed,order_h_minus1,order_w_over_n,coker_lambda,brauer_order,"
         "pass_n1,pass_n2,pass_n3,pass_n4,pass_n5,pass_n6,ms_elapsed";
}

std::string VerificationReport::to_csv() const {
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", ms_elapsed);
  return std::to_string(d) + "," + sigma_string() + "," + std::to_string(rho) + "," + std::to_string(e) + "," +
         order_c_sigma.get_str() + "," + order_c_fixed.get_str() + "," + order_h_minus1.get_str() + "," +
         order_w_over_n.get_str() + "," + coker_lambda.get_str() + "," + brauer_order.get_str() + "," + b(pass_n1) +
         "," + b(pass_n2) + "," + b(pass_n3) + "," + b(pass_n4) + "," + b(pass_n5) + "," + b(pass_n6) + "," + ms;
}

SigmaSet minimal_sigma(long d) {
  std::vector<long> ramified;
  for (long long p : prime_divisors(to_ll(fundamental_discriminant(d)))) ramified.push_back(static_cast<long>(p));
  return SigmaSet(ramified);
}

VerificationReport verify_field(long d, const SigmaSet& sigma) {
  const auto start = std::chrono::steady_clock::now();
  const QuadField k(d);
  validate_sigma(d, sigma);
  check_envelope(d, sigma);

  VerificationReport r;
  r.d = d;
  r.sigma = sigma;
  SigmaProfile profile = w_subgroup(d, sigma);
  r.rho = profile.rho;
  r.e = profile.e;
  r.coker_lambda = profile.coker_lambda_order;

  const ClassGroup cl(k);
  const SClassGroup sc = s_class_group(cl, sigma);
  const SUnitGroup units = s_unit_group(cl, sigma);
  profile.norm_image_basis = norm_image(units, profile.classes);

  r.order_c_sigma = sc.group.order();
  r.order_c_fixed = ambiguous_class_order(sc);
  r.order_h_minus1 = h_minus_one_order(sc);
  r.brauer_order = relative_brauer_order(profile);
  bool contained = true;
  try {
    r.order_w_over_n = w_over_n_order(profile);
  } catch (const std::logic_error&) {
    contained = false;
  }

  r.pass_n1 = contained && r.order_w_over_n == r.coker_lambda;
  r.pass_n2 = contained && r.order_c_fixed == r.order_w_over_n;
  r.pass_n3 = r.order_h_minus1 == r.coker_lambda;
  r.pass_n4 = mpz_divisible_p(r.order_c_sigma.get_mpz_t(), r.coker_lambda.get_mpz_t()) != 0;
  r.pass_n5 = r.brauer_order == power_of_two(r.rho) && lambda_in_sum_kernel(profile);
  r.pass_n6 = alpha_beta_r0_check(units).passed();
  r.ms_elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace quadnorm
