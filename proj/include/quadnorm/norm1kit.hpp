#pragma once
// Norm residues of Sigma-units of Q against class groups of Q(sqrt d).

#include <string>
#include <vector>

#include "quadnorm/abgroup.hpp"
#include "quadnorm/class_group.hpp"
#include "quadnorm/f2.hpp"
#include "quadnorm/localsym.hpp"
#include "quadnorm/units.hpp"

namespace quadnorm {

/// O*_{Q,Sigma} / squares with basis -1, p_1, ..., p_n.
class UnitSquareClasses {
 public:
  explicit UnitSquareClasses(const SigmaSet& sigma);

  std::size_t dimension() const { return 1 + primes_.size(); }
  std::vector<std::string> basis_labels() const;
  /// -1, then the primes, as rationals.
  std::vector<Rational> generators() const;
  /// Throws std::invalid_argument when x is not a Sigma-unit.
  BitVec vector_of(const Rational& x) const;
  /// The squarefree representative of a class, e.g. 6 or -5.
  Int representative(const BitVec& v) const;

 private:
  std::vector<long> primes_;
};

struct SigmaProfile {
  long d = 0;
  SigmaSet sigma;
  std::vector<Place> sigma_prime;
  int rho = 0;
  UnitSquareClasses classes{SigmaSet()};
  BitMatrix hilbert;  // rows: sigma_prime; columns: classes.generators()
  std::vector<BitVec> w_basis;
  int e = 0;
  Int coker_lambda_order = 1;
  std::vector<BitVec> norm_image_basis;
};

/// Fills sigma_prime, rho, hilbert, w_basis, e and coker_lambda_order.
SigmaProfile w_subgroup(long d, const SigmaSet& sigma);

/// Basis of the span of the norm classes of all generators (torsion included).
std::vector<BitVec> norm_image(const SUnitGroup& units, const UnitSquareClasses& classes);

/// 2^(dim W - dim N). Throws std::logic_error if N is not inside W.
Int w_over_n_order(const SigmaProfile& profile);

/// Order of the kernel of the summation map F_2^{sigma'} -> F_2.
Int relative_brauer_order(const SigmaProfile& profile);

/// Every column of the Hilbert matrix sums to zero (product formula over sigma').
bool lambda_in_sum_kernel(const SigmaProfile& profile);

/// |ker(1 - tau)| on C_{K,Sigma}.
Int ambiguous_class_order(const SClassGroup& c);
Int ambiguous_class_order(const QuadField& k, const SigmaSet& sigma);
/// |ker(1 + tau) / im(1 - tau)| on C_{K,Sigma}.
Int h_minus_one_order(const SClassGroup& c);
Int h_minus_one_order(const QuadField& k, const SigmaSet& sigma);

/// The r = 0 composition law between the norm-one units N1 and the unit
/// quotient Q = O*_{K,Sigma} / O*_{Q,Sigma}.
struct AlphaBetaCheck {
  FinAbGroup quotient;
  FinAbGroup norm_one;
  bool beta_alpha_elements = false;  // beta(alpha(u)) == u^2 on generators of N1, as field elements
  bool alpha_beta_elements = false;  // alpha(beta(q)) == 2 q on generators of Q
  bool beta_alpha_hom = false;       // beta o alpha == 2 as homomorphisms
  bool alpha_beta_hom = false;
  std::string failure;
  bool passed() const { return beta_alpha_elements && alpha_beta_elements && beta_alpha_hom && alpha_beta_hom; }
};
AlphaBetaCheck alpha_beta_r0_check(const SUnitGroup& units);

struct VerificationReport {
  long d = 0;
  SigmaSet sigma;
  int rho = 0;
  int e = 0;
  Int order_c_sigma = 0;
  Int order_c_fixed = 0;
  Int order_h_minus1 = 0;
  Int order_w_over_n = 0;
  Int coker_lambda = 0;
  Int brauer_order = 0;
  bool pass_n1 = false;
  bool pass_n2 = false;
  bool pass_n3 = false;
  bool pass_n4 = false;
  bool pass_n5 = false;
  bool pass_n6 = false;
  double ms_elapsed = 0;

  bool passed() const { return pass_n1 && pass_n2 && pass_n3 && pass_n4 && pass_n5 && pass_n6; }
  /// "inf;2;7"
  std::string sigma_string() const;
  /// One flat JSON object, no trailing newline.
  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv() const;
};

/// Throws std::invalid_argument for a bad d or sigma, EnvelopeError outside
/// the supported envelope.
VerificationReport verify_field(long d, const SigmaSet& sigma);

/// sigma = {inf} together with the primes ramified in Q(sqrt d).
SigmaSet minimal_sigma(long d);

}  // namespace quadnorm
