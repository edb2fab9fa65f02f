#pragma once

#include <vector>

#include "quadnorm/abgroup.hpp"
#include "quadnorm/class_group.hpp"
#include "quadnorm/field.hpp"
#include "quadnorm/ideal.hpp"
#include "quadnorm/localsym.hpp"

namespace quadnorm {

/// O*_{K,Sigma} = <torsion_gen> x Z^free_gens.size().
///
/// Coordinates of an S-unit are (torsion exponent, free exponents...), in
/// the order of abstract_group().
struct SUnitGroup {
  QuadField field;
  SigmaSet sigma;
  std::vector<PrimeIdeal> places;  // finite places above sigma
  QuadElement torsion_gen;
  int torsion_order;
  /// Fundamental unit first for real fields, then one generator per lattice basis vector.
  std::vector<QuadElement> free_gens;
  /// Rows: places; columns: free generators.
  IntMatrix valuation_matrix;
  /// Rows of a lower-triangular basis of the kernel of Z^places -> C_K.
  IntMatrix lattice_basis;

  FinAbGroup abstract_group() const;
  std::size_t rank() const { return free_gens.size(); }
  std::vector<long> valuations(const QuadElement& x) const;
  /// Throws std::invalid_argument when x is not a Sigma-unit.
  Element dlog(const QuadElement& x) const;
  QuadElement element(const Element& coords) const;
  /// Every generator as an element: torsion first.
  std::vector<QuadElement> generators() const;
};

SUnitGroup s_unit_group(const QuadField& k, const SigmaSet& sigma);
SUnitGroup s_unit_group(const ClassGroup& cl, const SigmaSet& sigma);

/// The associate of a nonzero x (modulo roots of unity, or sign for real fields)
/// that the generator lists use.
QuadElement normalize_associate(const QuadField& k, const QuadElement& x);

}  // namespace quadnorm
