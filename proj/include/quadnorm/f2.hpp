#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace quadnorm {

/// A vector over F_2, one byte per coordinate (0 or 1).
using BitVec = std::vector<std::uint8_t>;

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  BitVec column(std::size_t c) const;
  BitVec row(std::size_t r) const;
  bool operator==(const BitMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

bool is_zero(const BitVec& v);
BitVec add(const BitVec& a, const BitVec& b);

/// Reduced row-echelon basis of the span of `vectors` (zero vectors dropped).
std::vector<BitVec> f2_basis(const std::vector<BitVec>& vectors);
std::size_t f2_rank(const std::vector<BitVec>& vectors);
bool f2_in_span(const std::vector<BitVec>& vectors, const BitVec& v);
/// Basis of {x : m x = 0}.
std::vector<BitVec> f2_kernel(const BitMatrix& m);
BitVec apply(const BitMatrix& m, const BitVec& x);

}  // namespace quadnorm
