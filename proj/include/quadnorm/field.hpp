#pragma once

#include <stdexcept>
#include <string>

#include "quadnorm/integer.hpp"

namespace quadnorm {

/// Supported envelope: |d| <= kMaxAbsD, and every prime of a sigma set that is
/// not ramified in K is <= kMaxSigmaPrime.
inline constexpr long kMaxAbsD = 500;
inline constexpr long kMaxSigmaPrime = 100;

/// Raised for inputs outside the supported envelope.
class EnvelopeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class QuadElement;
class SigmaSet;

/// K = Q(sqrt d) for squarefree d, with fundamental discriminant D.
class QuadField {
 public:
  /// Throws std::invalid_argument for d not squarefree or d in {0, 1};
  /// EnvelopeError for |d| > kMaxAbsD.
  explicit QuadField(long d);

  long d() const { return d_; }
  const Int& discriminant() const { return D_; }
  bool is_real() const { return d_ > 0; }
  bool is_imaginary() const { return d_ < 0; }
  /// Number of roots of unity: 4 for d = -1, 6 for d = -3, else 2.
  int torsion_order() const;
  /// Generator of the roots of unity (-1, i, or (1 + sqrt -3)/2).
  QuadElement torsion_generator() const;
  /// floor(sqrt |D|)
  const Int& sqrt_floor() const { return s_; }
  /// D mod 2: the b-coefficient of the principal form.
  Int principal_b() const { return D_ % 2 == 0 ? Int(0) : Int(1); }

  bool operator==(const QuadField& rhs) const { return d_ == rhs.d_; }
  std::string to_string() const;

 private:
  long d_;
  Int D_;
  Int s_;
};

QuadField field(long d);

/// Throws EnvelopeError when (d, sigma) leaves the supported envelope.
void check_envelope(long d, const SigmaSet& sigma);

/// (x + y sqrt D) / den in lowest terms with den > 0.
class QuadElement {
 public:
  QuadElement(Int D, Int x, Int y = 0, Int den = 1);
  static QuadElement rational(const Int& D, const Rational& q);
  /// sqrt d itself.
  static QuadElement sqrt_d(const QuadField& k);

  const Int& discriminant() const { return D_; }
  const Int& x() const { return x_; }
  const Int& y() const { return y_; }
  const Int& den() const { return den_; }

  QuadElement conj() const;
  Rational norm() const;
  Rational trace() const;
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }
  /// Algebraic integer: trace and norm are integers.
  bool is_integral() const;
  bool is_unit() const;

  QuadElement operator*(const QuadElement& rhs) const;
  QuadElement operator+(const QuadElement& rhs) const;
  QuadElement operator-(const QuadElement& rhs) const;
  QuadElement operator-() const;
  /// Throws std::domain_error on division by zero.
  QuadElement inverse() const;
  QuadElement operator/(const QuadElement& rhs) const { return *this * rhs.inverse(); }
  QuadElement pow(long long k) const;
  bool operator==(const QuadElement& rhs) const;

  /// Sign at the real embedding with sqrt D > 0 (real fields only).
  int sign() const;
  /// |x| > 1 at the real embedding (real fields only).
  bool exceeds_one_in_absolute_value() const;

  /// Human-readable in terms of sqrt d, e.g. "(1+sqrt(5))/2" or "1+sqrt(-5)".
  std::string to_string() const;

 private:
  void normalize();
  Int D_, x_, y_, den_;
};

/// Sign of x + y sqrt D for D > 0 not a square.
int sign_of(const Int& x, const Int& y, const Int& D);

}  // namespace quadnorm
