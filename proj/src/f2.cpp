#include "quadnorm/f2.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadnorm {

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

BitVec BitMatrix::row(std::size_t r) const {
  return BitVec(bits_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out += (*this)(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

bool is_zero(const BitVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

BitVec add(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("F2 add: length mismatch");
  BitVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
  return s;
}

std::vector<BitVec> f2_basis(const std::vector<BitVec>& vectors) {
  std::vector<BitVec> rows = vectors;
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c]) rows[i] = add(rows[i], rows[r]);
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t f2_rank(const std::vector<BitVec>& vectors) { return f2_basis(vectors).size(); }

bool f2_in_span(const std::vector<BitVec>& vectors, const BitVec& v) {
  std::vector<BitVec> with = vectors;
  with.push_back(v);
  return f2_rank(with) == f2_rank(vectors);
}

std::vector<BitVec> f2_kernel(const BitMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<BitVec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const std::vector<BitVec> ech = f2_basis(rows);

  std::vector<std::size_t> pivots;
  for (const BitVec& row : ech) pivots.push_back(static_cast<std::size_t>(std::find(row.begin(), row.end(), 1) - row.begin()));

  std::vector<BitVec> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    BitVec x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < ech.size(); ++i)
      if (ech[i][free]) x[pivots[i]] = 1;
    kernel.push_back(std::move(x));
  }
  return kernel;
}

BitVec apply(const BitMatrix& m, const BitVec& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("F2 apply: length mismatch");
  BitVec y(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint8_t acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc ^= static_cast<std::uint8_t>(m(r, c) & x[c]);
    y[r] = acc;
  }
  return y;
}

}  // namespace quadnorm
