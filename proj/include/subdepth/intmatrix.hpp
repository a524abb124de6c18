#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace subdepth {

/// Positions of zero entries of a matrix, row-major.
struct ZeroPattern {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> zero;

  std::size_t count() const;
  /// Every zero of *this is also a zero of `other` (same shape).
  bool subset_of(const ZeroPattern& other) const;
  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  /// Uses the parallel kernel.
  IntMatrix operator*(const IntMatrix& rhs) const;

  ZeroPattern zero_pattern() const;
  std::size_t zero_count() const;
  bool is_positive() const;
  bool is_nonnegative() const;
  bool has_zero_row() const;
  bool has_zero_column() const;

  std::vector<std::vector<mpz_class>> to_rows() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

}  // namespace subdepth
