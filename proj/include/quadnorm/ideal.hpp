#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadnorm/field.hpp"
#include "quadnorm/forms.hpp"
#include "quadnorm/localsym.hpp"

namespace quadnorm {

/// scale * (a Z + ((b + sqrt D)/2) Z), a > 0, b^2 = D mod 4a, b kept in (-a, a].
class QuadIdeal {
 public:
  QuadIdeal(Int D, Int a, Int b, Rational scale = 1);
  static QuadIdeal unit(const Int& D);
  /// The fractional ideal x O_K.
  static QuadIdeal principal(const QuadElement& x);
  /// The O_K-ideal generated by a nonempty list of nonzero elements.
  static QuadIdeal generated_by(const Int& D, const std::vector<QuadElement>& gens);

  const Int& discriminant() const { return D_; }
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Rational& scale() const { return scale_; }

  Rational norm() const;
  bool is_integral() const;
  /// The form (a, b, c) attached to the primitive part.
  QuadForm form() const;
  QuadIdeal conj() const;
  QuadIdeal inverse() const;
  bool contains(const QuadElement& x) const;

  QuadIdeal operator*(const QuadIdeal& rhs) const;
  QuadIdeal pow(unsigned k) const;
  bool operator==(const QuadIdeal&) const = default;
  std::string to_string() const;

 private:
  Int D_, a_, b_;
  Rational scale_;
};

/// input == gamma * ideal with ideal primitive, integral and reduced.
struct ReducedIdeal {
  QuadIdeal ideal;
  QuadElement gamma;
};
ReducedIdeal reduce_ideal(const QuadIdeal& I);

/// Fundamental unit of a real field by the continued fraction of (b0 + sqrt D)/2.
QuadElement fundamental_unit(const QuadField& k);

/// A generator of I when I is principal.
std::optional<QuadElement> principal_generator(const QuadField& k, const QuadIdeal& I);

struct PrimeIdeal {
  QuadIdeal ideal;
  long p;
  SplittingType type;
  /// Ramification index of P over p.
  int e() const { return type == SplittingType::ramified ? 2 : 1; }
};

/// Split: P = (p, (b + sqrt D)/2) with least b >= 0, then its conjugate.
std::vector<PrimeIdeal> primes_above(const QuadField& k, long p);

/// Exponent of P in the factorization of x O_K (x != 0).
long valuation(const QuadElement& x, const PrimeIdeal& P);

}  // namespace quadnorm
