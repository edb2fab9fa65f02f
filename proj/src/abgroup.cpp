#include "quadnorm/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace quadnorm {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<Element>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix::from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Element IntMatrix::row(std::size_t r) const {
  return Element(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Element IntMatrix::column(std::size_t c) const {
  Element out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (rows_ > 0 && below.rows_ > 0 && cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
  const std::size_t cols = rows_ > 0 ? cols_ : below.cols_;
  IntMatrix m(rows_ + below.rows_, cols);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < below.rows_; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(rows_ + r, c) = below(r, c);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hstack: row mismatch");
  IntMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += a * rhs(k, j);
    }
  return m;
}

Element IntMatrix::operator*(const Element& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMatrix * vector: shape mismatch");
  Element out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// --------------------------------------------------------------------- SNF

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t lim = std::min(s.rows(), s.cols());
  while (r < lim && s(r, r) != 0) ++r;
  return r;
}

Int SmithForm::diagonal(std::size_t i) const {
  return i < std::min(s.rows(), s.cols()) ? s(i, i) : Int(0);
}

namespace {

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct SnfWork {
  SmithForm f;

  void row_add(std::size_t dst, std::size_t src, const Int& k) {
    f.s.add_row_multiple(dst, src, k);
    f.u.add_row_multiple(dst, src, k);
  }
  void col_add(std::size_t dst, std::size_t src, const Int& k) {
    f.s.add_col_multiple(dst, src, k);
    f.v.add_col_multiple(dst, src, k);
    f.v_inverse.add_row_multiple(src, dst, -k);
  }
  void row_swap(std::size_t i, std::size_t j) {
    f.s.swap_rows(i, j);
    f.u.swap_rows(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    f.s.swap_cols(i, j);
    f.v.swap_cols(i, j);
    f.v_inverse.swap_rows(i, j);
  }
};

}  // namespace

SmithForm snf(const IntMatrix& m) {
  SnfWork w{SmithForm{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols())}};
  IntMatrix& s = w.f.s;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t lim = std::min(rows, cols);

  for (std::size_t t = 0; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s(i, j) == 0) continue;
        if (!found || abs(s(i, j)) < best) {
          best = abs(s(i, j));
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        w.row_add(i, t, -tdiv(s(i, t), s(t, t)));
        if (s(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        w.col_add(j, t, -tdiv(s(t, j), s(t, t)));
        if (s(t, j) != 0) residue = true;
      }
      if (residue) {
        std::size_t bi = t, bj = t;
        Int b = abs(s(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s(i, t) != 0 && abs(s(i, t)) < b) {
            b = abs(s(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(t, j) != 0 && abs(s(t, j)) < b) {
            b = abs(s(t, j));
            bi = t;
            bj = j;
          }
        w.row_swap(t, bi);
        w.col_swap(t, bj);
        continue;
      }
      // Enforce the divisibility chain before moving on.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            w.row_add(t, i, 1);
            divides_all = false;
            break;
          }
        }
      if (divides_all) break;
    }
    if (s(t, t) < 0) {
      w.f.s.negate_row(t);
      w.f.u.negate_row(t);
    }
  }
  return std::move(w.f);
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    bool pivot = false;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == rows) break;
      pivot = true;
      a.swap_rows(r, best);
      bool again = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        a.add_row_multiple(i, r, -tdiv(a(i, c), a(r, c)));
        if (a(i, c) != 0) again = true;
      }
      if (!again) break;
    }
    if (!pivot) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  IntMatrix out = a.select_rows(keep);
  if (r == 0) out = IntMatrix(0, cols);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm f = snf(m);
  const std::size_t r = f.rank();
  std::vector<std::size_t> idx;
  for (std::size_t j = r; j < m.cols(); ++j) idx.push_back(j);
  IntMatrix k = f.v.select_cols(idx);
  if (idx.empty()) k = IntMatrix(m.cols(), 0);
  return k;
}

std::optional<Element> solve_integer(const SmithForm& f, const Element& b) {
  if (b.size() != f.s.rows()) throw std::invalid_argument("solve_integer: right-hand side length mismatch");
  const Element ub = f.u * b;
  const std::size_t r = f.rank();
  Element y(f.s.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), f.s(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), f.s(i, i).get_mpz_t());
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return f.v * y;
}

std::optional<Element> solve_integer(const IntMatrix& m, const Element& b) { return solve_integer(snf(m), b); }

// -------------------------------------------------------------- FinAbGroup

FinAbGroup::FinAbGroup(std::vector<Int> factors, std::vector<std::string> witnesses)
    : factors_(std::move(factors)), witnesses_(std::move(witnesses)) {
  bool seen_zero = false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Int& d = factors_[i];
    if (d == 0) {
      seen_zero = true;
      continue;
    }
    if (d < 2) throw std::invalid_argument("FinAbGroup: invariant factors must be >= 2 or 0");
    if (seen_zero) throw std::invalid_argument("FinAbGroup: free factors must trail torsion factors");
    if (i + 1 < factors_.size() && factors_[i + 1] != 0 &&
        !mpz_divisible_p(factors_[i + 1].get_mpz_t(), d.get_mpz_t()))
      throw std::invalid_argument("FinAbGroup: invariant factors must form a divisibility chain");
  }
  if (!witnesses_.empty() && witnesses_.size() != factors_.size())
    throw std::invalid_argument("FinAbGroup: one witness label per generator");
}

FinAbGroup FinAbGroup::cyclic(const Int& n) {
  if (n == 1) return FinAbGroup();
  return FinAbGroup({abs(n)});
}

FinAbGroup FinAbGroup::free(std::size_t rank) { return FinAbGroup(std::vector<Int>(rank, 0)); }

FinAbGroup FinAbGroup::from_orders(const std::vector<Int>& orders) {
  return present(IntMatrix::diagonal(orders), orders.size()).group;
}

FinAbGroup FinAbGroup::with_witnesses(std::vector<std::string> labels) const {
  return FinAbGroup(factors_, std::move(labels));
}

bool FinAbGroup::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const Int& d) { return d == 0; });
}

std::size_t FinAbGroup::free_rank() const {
  return static_cast<std::size_t>(std::count_if(factors_.begin(), factors_.end(), [](const Int& d) { return d == 0; }));
}

Int FinAbGroup::order() const {
  if (!is_finite()) throw std::domain_error("order of an infinite group");
  Int n = 1;
  for (const Int& d : factors_) n *= d;
  return n;
}

Int FinAbGroup::exponent() const {
  if (!is_finite()) throw std::domain_error("exponent of an infinite group");
  return factors_.empty() ? Int(1) : factors_.back();
}

Element FinAbGroup::reduce(Element x) const {
  if (x.size() != factors_.size()) throw std::invalid_argument("element has wrong number of coordinates");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (factors_[i] != 0) x[i] = mod_floor(x[i], factors_[i]);
  return x;
}

bool FinAbGroup::is_zero(const Element& x) const {
  const Element r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

Element FinAbGroup::add(const Element& x, const Element& y) const {
  Element s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return reduce(std::move(s));
}

Element FinAbGroup::scale(const Element& x, const Int& k) const {
  Element s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] * k;
  return reduce(std::move(s));
}

Element FinAbGroup::basis_vector(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

std::string FinAbGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " + ";
    out += factors_[i] == 0 ? std::string("Z") : "Z/" + factors_[i].get_str();
  }
  return out;
}

// ------------------------------------------------------------ Presentation

Presentation present(const IntMatrix& relations, std::size_t ngens) {
  if (relations.rows() > 0 && relations.cols() != ngens)
    throw std::invalid_argument("present: relation width differs from generator count");
  if (relations.rows() == 0)
    return Presentation{FinAbGroup::free(ngens), IntMatrix::identity(ngens), IntMatrix::identity(ngens)};

  // U R V = S: the coordinate change y = V^T x diagonalizes the relation lattice.
  const SmithForm f = snf(relations);
  std::vector<Int> factors;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ngens; ++i) {
    const Int d = f.diagonal(i);
    if (d == 1) continue;
    factors.push_back(d);
    keep.push_back(i);
  }
  IntMatrix to = f.v.transpose().select_rows(keep);
  IntMatrix from = f.v_inverse.transpose().select_cols(keep);
  if (keep.empty()) {
    to = IntMatrix(0, ngens);
    from = IntMatrix(ngens, 0);
  }
  return Presentation{FinAbGroup(std::move(factors)), std::move(to), std::move(from)};
}

FinAbGroup group_from_presentation(const IntMatrix& relations) { return present(relations, relations.cols()).group; }

// ------------------------------------------------------------------- AbHom

namespace {

IntMatrix reduce_rows(IntMatrix m, const FinAbGroup& codomain) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Int& c = codomain.invariant_factors()[r];
    if (c == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = mod_floor(m(r, j), c);
  }
  return m;
}

}  // namespace

AbHom::AbHom(FinAbGroup domain, FinAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.ngens() || matrix_.cols() != domain_.ngens()) {
    if (matrix_.rows() * matrix_.cols() == 0 && codomain_.ngens() * domain_.ngens() == 0)
      matrix_ = IntMatrix(codomain_.ngens(), domain_.ngens());
    else
      throw std::invalid_argument("AbHom: matrix shape " + std::to_string(matrix_.rows()) + "x" +
                                  std::to_string(matrix_.cols()) + " does not match groups");
  }
  matrix_ = reduce_rows(std::move(matrix_), codomain_);
  for (std::size_t i = 0; i < domain_.ngens(); ++i) {
    const Int& a = domain_.invariant_factors()[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < codomain_.ngens(); ++j) {
      const Int& c = codomain_.invariant_factors()[j];
      const Int image = a * matrix_(j, i);
      const bool ok = c == 0 ? image == 0 : mpz_divisible_p(image.get_mpz_t(), c.get_mpz_t()) != 0;
      if (!ok) throw std::invalid_argument("AbHom: matrix does not respect the domain relations");
    }
  }
}

AbHom AbHom::identity(const FinAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.ngens())); }

AbHom AbHom::zero(const FinAbGroup& domain, const FinAbGroup& codomain) {
  return AbHom(domain, codomain, IntMatrix(codomain.ngens(), domain.ngens()));
}

AbHom AbHom::multiplication(const FinAbGroup& g, const Int& k) {
  return AbHom(g, g, IntMatrix::diagonal(std::vector<Int>(g.ngens(), k)));
}

Element AbHom::operator()(const Element& x) const { return codomain_.reduce(matrix_ * domain_.reduce(x)); }

AbHom AbHom::operator+(const AbHom& rhs) const {
  if (!(domain_ == rhs.domain_) || !(codomain_ == rhs.codomain_))
    throw std::invalid_argument("AbHom sum: mismatched groups");
  IntMatrix m = matrix_;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += rhs.matrix_(r, c);
  return AbHom(domain_, codomain_, std::move(m));
}

AbHom AbHom::operator-(const AbHom& rhs) const {
  if (!(domain_ == rhs.domain_) || !(codomain_ == rhs.codomain_))
    throw std::invalid_argument("AbHom difference: mismatched groups");
  IntMatrix m = matrix_;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= rhs.matrix_(r, c);
  return AbHom(domain_, codomain_, std::move(m));
}

bool AbHom::operator==(const AbHom& rhs) const {
  return domain_ == rhs.domain_ && codomain_ == rhs.codomain_ && matrix_ == rhs.matrix_;
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.codomain() == g.domain())) throw std::invalid_argument("compose: codomain of f is not the domain of g");
  return AbHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(FinAbGroup ambient, const std::vector<Element>& generators) : ambient_(std::move(ambient)) {
  const std::size_t n = ambient_.ngens();
  const std::size_t t = generators.size();
  std::vector<Element> gens;
  gens.reserve(t);
  for (const Element& g : generators) gens.push_back(ambient_.reduce(g));
  const IntMatrix gm = IntMatrix::from_columns(n, gens);
  const IntMatrix diag = IntMatrix::diagonal(ambient_.invariant_factors());

  if (t == 0) {
    pres_ = Presentation{FinAbGroup(), IntMatrix(0, 0), IntMatrix(0, 0)};
    embedding_ = IntMatrix(n, 0);
  } else {
    // Relations among the generators: c with G c in the ambient relation lattice.
    const IntMatrix k = integer_kernel(gm.hstack(diag));
    IntMatrix rel(k.cols(), t);
    for (std::size_t j = 0; j < k.cols(); ++j)
      for (std::size_t i = 0; i < t; ++i) rel(j, i) = k(i, j);
    pres_ = present(rel, t);
    embedding_ = gm * pres_.from_group;
    for (std::size_t r = 0; r < n; ++r) {
      const Int& a = ambient_.invariant_factors()[r];
      if (a == 0) continue;
      for (std::size_t c = 0; c < embedding_.cols(); ++c) embedding_(r, c) = mod_floor(embedding_(r, c), a);
    }
  }
  membership_ = snf(embedding_.hstack(diag));
}

AbHom Subgroup::inclusion() const { return AbHom(group(), ambient_, embedding_); }

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  for (std::size_t c = 0; c < embedding_.cols(); ++c) out.push_back(embedding_.column(c));
  return out;
}

std::optional<Element> Subgroup::coordinates(const Element& x) const {
  const auto sol = solve_integer(membership_, ambient_.reduce(x));
  if (!sol) return std::nullopt;
  Element c(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(group().ngens()));
  return group().reduce(std::move(c));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (!(ambient_ == other.ambient_)) throw std::invalid_argument("subgroups of different ambient groups");
  for (std::size_t c = 0; c < embedding_.cols(); ++c)
    if (!other.contains(embedding_.column(c))) return false;
  return true;
}

bool Subgroup::same_as(const Subgroup& other) const { return is_subset_of(other) && other.is_subset_of(*this); }

// ---------------------------------------------------------------- Quotient

Quotient::Quotient(FinAbGroup ambient, const std::vector<Element>& killed) : ambient_(std::move(ambient)) {
  const std::size_t n = ambient_.ngens();
  std::vector<Element> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& a = ambient_.invariant_factors()[i];
    if (a != 0) {
      Element r(n, 0);
      r[i] = a;
      rows.push_back(std::move(r));
    }
  }
  for (const Element& k : killed) rows.push_back(ambient_.reduce(k));
  IntMatrix rel = IntMatrix::from_columns(n, rows).transpose();
  if (rows.empty()) rel = IntMatrix(0, n);
  pres_ = present(rel, n);
}

AbHom Quotient::projection() const { return AbHom(ambient_, group(), pres_.to_group); }

Element Quotient::project(const Element& x) const { return group().reduce(pres_.to_group * ambient_.reduce(x)); }

Element Quotient::lift(const Element& q) const { return ambient_.reduce(pres_.from_group * group().reduce(q)); }

Quotient subquotient(const Subgroup& outer, const Subgroup& inner) {
  std::vector<Element> killed;
  for (const Element& g : inner.generators()) {
    auto c = outer.coordinates(g);
    if (!c) throw std::invalid_argument("subquotient: inner subgroup is not contained in the outer one");
    killed.push_back(std::move(*c));
  }
  return Quotient(outer.group(), killed);
}

// ----------------------------------------------------------- decomposition

HomDecomposition hom_decompose(const AbHom& f) {
  const FinAbGroup& a = f.domain();
  const FinAbGroup& b = f.codomain();
  const std::size_t ka = a.ngens();
  const std::size_t kb = b.ngens();

  std::vector<Element> kernel_gens;
  if (kb == 0) {
    for (std::size_t i = 0; i < ka; ++i) kernel_gens.push_back(a.basis_vector(i));
  } else {
    const IntMatrix lattice = integer_kernel(f.matrix().hstack(IntMatrix::diagonal(b.invariant_factors())));
    for (std::size_t j = 0; j < lattice.cols(); ++j) {
      Element x(ka);
      for (std::size_t i = 0; i < ka; ++i) x[i] = lattice(i, j);
      kernel_gens.push_back(std::move(x));
    }
  }
  std::vector<Element> cols;
  for (std::size_t j = 0; j < ka; ++j) cols.push_back(f.matrix().column(j));
  return HomDecomposition{Subgroup(a, kernel_gens), Subgroup(b, cols), Quotient(b, cols)};
}

ExactSequence kercok_sequence(const AbHom& f, const AbHom& g) {
  if (!(f.codomain() == g.domain())) throw std::invalid_argument("kercok_sequence: g is not composable with f");
  const AbHom gf = compose(g, f);
  const HomDecomposition df = hom_decompose(f);
  const HomDecomposition dgf = hom_decompose(gf);
  const HomDecomposition dg = hom_decompose(g);

  const Subgroup& ker_f = df.kernel;
  const Subgroup& ker_gf = dgf.kernel;
  const Subgroup& ker_g = dg.kernel;
  const Quotient& cok_f = df.cokernel;
  const Quotient& cok_gf = dgf.cokernel;
  const Quotient& cok_g = dg.cokernel;

  auto build = [](const FinAbGroup& from, const FinAbGroup& to, std::size_t n, auto&& image_of) {
    std::vector<Element> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(image_of(from.basis_vector(i)));
    IntMatrix m = IntMatrix::from_columns(to.ngens(), cols);
    if (cols.empty()) m = IntMatrix(to.ngens(), 0);
    return AbHom(from, to, std::move(m));
  };
  auto must = [](std::optional<Element> e, const char* what) {
    if (!e) throw std::logic_error(std::string("kercok_sequence: ") + what);
    return std::move(*e);
  };

  const AbHom m1 = build(ker_f.group(), ker_gf.group(), ker_f.group().ngens(), [&](const Element& e) {
    return must(ker_gf.coordinates(ker_f.inclusion()(e)), "Ker f not inside Ker gf");
  });
  const AbHom m2 = build(ker_gf.group(), ker_g.group(), ker_gf.group().ngens(), [&](const Element& e) {
    return must(ker_g.coordinates(f(ker_gf.inclusion()(e))), "f(Ker gf) not inside Ker g");
  });
  // Connecting map: Ker g -> B -> Coker f.
  const AbHom m3 = build(ker_g.group(), cok_f.group(), ker_g.group().ngens(),
                         [&](const Element& e) { return cok_f.project(ker_g.inclusion()(e)); });
  const AbHom m4 = build(cok_f.group(), cok_gf.group(), cok_f.group().ngens(),
                         [&](const Element& e) { return cok_gf.project(g(cok_f.lift(e))); });
  const AbHom m5 = build(cok_gf.group(), cok_g.group(), cok_gf.group().ngens(),
                         [&](const Element& e) { return cok_g.project(cok_gf.lift(e)); });

  const FinAbGroup zero;
  ExactSequence seq;
  seq.terms = {zero, ker_f.group(), ker_gf.group(), ker_g.group(), cok_f.group(), cok_gf.group(), cok_g.group(), zero};
  seq.maps = {AbHom::zero(zero, ker_f.group()), m1, m2, m3, m4, m5, AbHom::zero(cok_g.group(), zero)};
  return seq;
}

bool verify_exact(const ExactSequence& seq) {
  if (seq.maps.size() + 1 != seq.terms.size()) throw std::invalid_argument("verify_exact: need one map between consecutive terms");
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    if (!(seq.maps[i].domain() == seq.terms[i]) || !(seq.maps[i].codomain() == seq.terms[i + 1]))
      throw std::invalid_argument("verify_exact: map " + std::to_string(i) + " is not between consecutive terms");
  }
  for (std::size_t k = 1; k + 1 < seq.terms.size(); ++k) {
    const AbHom& in = seq.maps[k - 1];
    std::vector<Element> cols;
    for (std::size_t j = 0; j < in.domain().ngens(); ++j) cols.push_back(in.matrix().column(j));
    const Subgroup image(seq.terms[k], cols);
    const Subgroup kernel = hom_decompose(seq.maps[k]).kernel;
    if (!image.same_as(kernel)) return false;
  }
  return true;
}

bool satisfies_cardinality_law(const ExactSequence& seq) {
  Int even = 1, odd = 1;
  for (std::size_t i = 0; i < seq.terms.size(); ++i) (i % 2 == 0 ? even : odd) *= seq.terms[i].order();
  return even == odd;
}

// ------------------------------------------------------------------- Tate

InvolutionModule::InvolutionModule(FinAbGroup g, AbHom t) : group(std::move(g)), tau(std::move(t)) {
  if (!(tau.domain() == group) || !(tau.codomain() == group))
    throw std::invalid_argument("InvolutionModule: tau must be an endomorphism of the group");
  if (!(compose(tau, tau) == AbHom::identity(group)))
    throw std::invalid_argument("InvolutionModule: tau is not an involution");
}

FinAbGroup tate_h(const InvolutionModule& m, int degree, const std::optional<Subgroup>& norm_kernel_restriction) {
  const AbHom id = AbHom::identity(m.group);
  const AbHom norm = id + m.tau;
  const AbHom aug = id - m.tau;
  if (degree == 0) {
    if (norm_kernel_restriction) throw std::invalid_argument("tate_h: a restriction applies to degree -1 only");
    const HomDecomposition fixed = hom_decompose(aug);
    const HomDecomposition norms = hom_decompose(norm);
    return subquotient(fixed.kernel, norms.image).group();
  }
  if (degree != -1) throw std::invalid_argument("tate_h: only degrees 0 and -1 are supported");
  const HomDecomposition dn = hom_decompose(norm);
  const Subgroup denominator = hom_decompose(aug).image;
  if (!norm_kernel_restriction) return subquotient(dn.kernel, denominator).group();

  const Subgroup& r = *norm_kernel_restriction;
  if (!(r.ambient() == m.group)) throw std::invalid_argument("tate_h: restriction lives in a different group");
  if (!r.is_subset_of(dn.kernel)) throw std::invalid_argument("tate_h: restriction is not inside ker(1 + tau)");
  if (!denominator.is_subset_of(r)) throw std::invalid_argument("tate_h: restriction does not contain im(1 - tau)");
  return subquotient(r, denominator).group();
}

std::size_t two_rank(const FinAbGroup& g) {
  if (!g.is_finite()) throw std::domain_error("two_rank of an infinite group");
  return static_cast<std::size_t>(std::count_if(g.invariant_factors().begin(), g.invariant_factors().end(),
                                                [](const Int& d) { return mpz_even_p(d.get_mpz_t()) != 0; }));
}

}  // namespace quadnorm
