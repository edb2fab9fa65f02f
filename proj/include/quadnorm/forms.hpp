#pragma once

#include <string>
#include <vector>

#include "quadnorm/abgroup.hpp"
#include "quadnorm/integer.hpp"

namespace quadnorm {

/// a x^2 + b x y + c y^2
struct QuadForm {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  /// (a, -b, c): the Galois conjugate class, which is also the inverse class.
  QuadForm conj() const { return QuadForm{a, -b, c}; }
  /// The form f(M (x, y)) for a 2x2 integer matrix M.
  QuadForm transform(const IntMatrix& m) const;

  bool operator==(const QuadForm&) const = default;
  std::string to_string() const;
};

/// (1, D mod 2, (D mod 2 - D)/4)
QuadForm principal_form(const Int& D);
/// The form with leading coefficient a and middle coefficient b for discriminant D.
QuadForm form_from(const Int& D, const Int& a, const Int& b);

/// Definite: |b| <= a <= c with b >= 0 when |b| = a or a = c.
/// Indefinite: 0 < b < sqrt D and sqrt D - b < 2|a| < sqrt D + b.
bool is_reduced(const QuadForm& f);

struct ReducedForm {
  QuadForm form;
  IntMatrix transform;  // SL2(Z) matrix with form == input.transform(transform)
};

/// Gauss reduction for D < 0; rho iteration until reduced for D > 0.
ReducedForm reduce_form(const QuadForm& f);

/// One reduction operator step on an indefinite form (c, b', .) with
/// b' = -b mod 2c normalized.
ReducedForm rho(const QuadForm& f);

/// Dirichlet composition, unreduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// Every primitive reduced form of discriminant D (a > 0 only when D < 0).
std::vector<QuadForm> reduced_forms(const Int& D);

}  // namespace quadnorm
