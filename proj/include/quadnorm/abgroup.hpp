#pragma once

// Integer-matrix linear algebra and finitely generated abelian groups.
//
// Every FinAbGroup lives in invariant-factor coordinates: an element is a
// vector x with x_i taken modulo d_i (d_i == 0 means a free Z coordinate).
// Homomorphisms are integer matrices acting on those coordinate vectors.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "quadnorm/integer.hpp"

namespace quadnorm {

using Element = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Int>& diag);
  /// Columns given as vectors of equal length `rows`.
  static IntMatrix from_columns(std::size_t rows, const std::vector<Element>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Int>& entries() const { return data_; }

  Element row(std::size_t r) const;
  Element column(std::size_t c) const;
  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
  IntMatrix vstack(const IntMatrix& below) const;
  IntMatrix hstack(const IntMatrix& right) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  Element operator*(const Element& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;
  bool is_diagonal() const;
  /// Bareiss fraction-free elimination; square matrices only.
  Int determinant() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// U * M * V == S with U, V unimodular and S diagonal with d_1 | d_2 | ...,
/// nonzero diagonal entries positive and leading. v_inverse == V^{-1}.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix v_inverse;

  std::size_t rank() const;
  Int diagonal(std::size_t i) const;
};

SmithForm snf(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// upper triangular, positive pivots, entries above each pivot in [0, pivot).
/// Zero rows are dropped.
IntMatrix hnf(const IntMatrix& m);

/// Basis (as columns) of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some x in Z^cols with m x == b, or nullopt.
std::optional<Element> solve_integer(const IntMatrix& m, const Element& b);
std::optional<Element> solve_integer(const SmithForm& f, const Element& b);

class FinAbGroup {
 public:
  /// The trivial group.
  FinAbGroup() = default;
  /// `factors` must already be an invariant-factor chain (each >= 2 or 0, zeros last).
  explicit FinAbGroup(std::vector<Int> factors, std::vector<std::string> witnesses = {});

  static FinAbGroup cyclic(const Int& n);
  static FinAbGroup free(std::size_t rank);
  /// Direct sum of cyclic groups of the given orders, normalized through SNF.
  static FinAbGroup from_orders(const std::vector<Int>& orders);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }
  FinAbGroup with_witnesses(std::vector<std::string> labels) const;

  std::size_t ngens() const { return factors_.size(); }
  bool is_finite() const;
  bool is_trivial() const { return factors_.empty(); }
  std::size_t free_rank() const;
  /// Throws std::domain_error for infinite groups.
  Int order() const;
  Int exponent() const;

  Element zero() const { return Element(factors_.size(), 0); }
  Element reduce(Element x) const;
  bool is_zero(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, const Int& k) const;
  Element basis_vector(std::size_t i) const;

  /// Order-insensitive isomorphism test: invariant factors only.
  bool operator==(const FinAbGroup& rhs) const { return factors_ == rhs.factors_; }

  std::string to_string() const;

 private:
  std::vector<Int> factors_;
  std::vector<std::string> witnesses_;
};

/// Z^n modulo the row span of a relation matrix, with coordinate changes.
struct Presentation {
  FinAbGroup group;
  IntMatrix to_group;    // group.ngens() x n
  IntMatrix from_group;  // n x group.ngens()
};

Presentation present(const IntMatrix& relations, std::size_t ngens);
FinAbGroup group_from_presentation(const IntMatrix& relations);

class AbHom {
 public:
  /// Throws std::invalid_argument if the matrix does not respect the relations.
  AbHom(FinAbGroup domain, FinAbGroup codomain, IntMatrix matrix);

  static AbHom identity(const FinAbGroup& g);
  static AbHom zero(const FinAbGroup& domain, const FinAbGroup& codomain);
  static AbHom multiplication(const FinAbGroup& g, const Int& k);

  const FinAbGroup& domain() const { return domain_; }
  const FinAbGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  Element operator()(const Element& x) const;
  AbHom operator+(const AbHom& rhs) const;
  AbHom operator-(const AbHom& rhs) const;
  bool operator==(const AbHom& rhs) const;

 private:
  FinAbGroup domain_;
  FinAbGroup codomain_;
  IntMatrix matrix_;
};

/// g after f. Throws std::invalid_argument when codomain(f) != domain(g).
AbHom compose(const AbHom& g, const AbHom& f);

/// The subgroup of `ambient` generated by a list of elements.
class Subgroup {
 public:
  Subgroup(FinAbGroup ambient, const std::vector<Element>& generators);

  const FinAbGroup& group() const { return pres_.group; }
  const FinAbGroup& ambient() const { return ambient_; }
  /// ambient.ngens() x group.ngens(); column i is the i-th invariant generator.
  const IntMatrix& embedding() const { return embedding_; }
  AbHom inclusion() const;
  std::vector<Element> generators() const;

  /// Invariant coordinates of x, or nullopt when x is not in the subgroup.
  std::optional<Element> coordinates(const Element& x) const;
  bool contains(const Element& x) const { return coordinates(x).has_value(); }
  bool is_subset_of(const Subgroup& other) const;
  bool same_as(const Subgroup& other) const;

 private:
  FinAbGroup ambient_;
  Presentation pres_;
  IntMatrix embedding_;
  SmithForm membership_;
};

/// ambient / <killed>.
class Quotient {
 public:
  Quotient(FinAbGroup ambient, const std::vector<Element>& killed);

  const FinAbGroup& group() const { return pres_.group; }
  const FinAbGroup& ambient() const { return ambient_; }
  AbHom projection() const;
  Element project(const Element& x) const;
  /// A preimage in the ambient group of a quotient element.
  Element lift(const Element& q) const;

 private:
  FinAbGroup ambient_;
  Presentation pres_;
};

/// outer / inner for subgroups of a common ambient group with inner <= outer.
Quotient subquotient(const Subgroup& outer, const Subgroup& inner);

struct HomDecomposition {
  Subgroup kernel;  // generators expressed in domain coordinates
  Subgroup image;
  Quotient cokernel;
};

HomDecomposition hom_decompose(const AbHom& f);

/// terms[0] -> terms[1] -> ... with maps[i] : terms[i] -> terms[i+1].
struct ExactSequence {
  std::vector<FinAbGroup> terms;
  std::vector<AbHom> maps;
};

/// 0 -> Ker f -> Ker gf -> Ker g -> Coker f -> Coker gf -> Coker g -> 0
ExactSequence kercok_sequence(const AbHom& f, const AbHom& g);

/// Image equals kernel at every interior term. Throws on non-composable maps.
bool verify_exact(const ExactSequence& seq);

/// For a finite sequence bounded by zeros: alternating product of orders is 1.
bool satisfies_cardinality_law(const ExactSequence& seq);

struct InvolutionModule {
  FinAbGroup group;
  AbHom tau;

  /// Throws std::invalid_argument unless tau is an endomorphism with tau^2 = 1.
  InvolutionModule(FinAbGroup g, AbHom t);
};

/// degree 0: ker(1 - tau) / im(1 + tau); degree -1: ker(1 + tau) / im(1 - tau).
/// For degree -1 a restriction R with im(1 - tau) <= R <= ker(1 + tau) replaces
/// the numerator.
FinAbGroup tate_h(const InvolutionModule& m, int degree,
                  const std::optional<Subgroup>& norm_kernel_restriction = std::nullopt);

/// Number of even invariant factors (finite groups only).
std::size_t two_rank(const FinAbGroup& g);

}  // namespace quadnorm
