#pragma once

#include <map>
#include <utility>
#include <vector>

#include "quadnorm/abgroup.hpp"
#include "quadnorm/field.hpp"
#include "quadnorm/forms.hpp"
#include "quadnorm/ideal.hpp"
#include "quadnorm/localsym.hpp"

namespace quadnorm {

/// The (wide) ideal class group of K with the Galois action.
class ClassGroup {
 public:
  explicit ClassGroup(const QuadField& k);

  const QuadField& field() const { return field_; }
  const FinAbGroup& group() const { return group_; }
  const AbHom& tau() const { return tau_; }
  /// The form classes before dividing out the narrow/wide difference.
  const FinAbGroup& narrow_group() const { return narrow_group_; }
  /// Reduced forms, one per narrow class (least (a, b) on each cycle for D > 0).
  const std::vector<QuadForm>& narrow_representatives() const { return reps_; }
  /// All reduced forms of discriminant D.
  const std::vector<QuadForm>& reduced() const { return reduced_; }

  Element narrow_class_of(const QuadForm& f) const;
  Element class_of(const QuadForm& f) const;
  Element class_of(const QuadIdeal& I) const;

 private:
  std::size_t index_of(const QuadForm& f) const;
  std::size_t multiply(std::size_t i, std::size_t j) const;

  QuadField field_;
  std::vector<QuadForm> reduced_;
  std::vector<QuadForm> reps_;
  std::map<std::pair<Int, Int>, std::size_t> index_;  // reduced form (a, b) -> narrow class
  std::vector<Element> coords_;                       // narrow class -> enumeration coordinates
  Presentation narrow_;
  FinAbGroup narrow_group_;
  Element negative_class_;  // narrow class of (-1, b0, c0); zero for D < 0
  IntMatrix to_wide_;        // narrow coordinates -> wide coordinates
  FinAbGroup group_;
  AbHom tau_;
};

ClassGroup class_group(const QuadField& k);

/// C_{K,Sigma}: the class group modulo the classes of primes above Sigma.
struct SClassGroup {
  FinAbGroup group;
  AbHom tau;
  AbHom projection;  // from ClassGroup::group()
  std::vector<PrimeIdeal> primes;
  std::vector<Element> prime_classes;  // in ClassGroup::group() coordinates
};

SClassGroup s_class_group(const ClassGroup& cl, const SigmaSet& sigma);

/// The prime ideals above the finite primes of sigma, in increasing p.
std::vector<PrimeIdeal> sigma_primes(const QuadField& k, const SigmaSet& sigma);

}  // namespace quadnorm
