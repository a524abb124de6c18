#include "subdepth/intmatrix.hpp"

#include <algorithm>

#include "subdepth/error.hpp"
#include "subdepth/kernels.hpp"

namespace subdepth {

std::size_t ZeroPattern::count() const { return static_cast<std::size_t>(std::count(zero.begin(), zero.end(), 1)); }

bool ZeroPattern::subset_of(const ZeroPattern& other) const {
  if (rows != other.rows || cols != other.cols) {
    throw Error(ErrorCode::DimensionMismatch, "zero patterns of different shapes");
  }
  for (std::size_t i = 0; i < zero.size(); ++i) {
    if (zero[i] && !other.zero[i]) return false;
  }
  return true;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const { return kernels::multiply_parallel(*this, rhs); }

ZeroPattern IntMatrix::zero_pattern() const {
  ZeroPattern p{rows_, cols_, std::vector<std::uint8_t>(data_.size())};
  for (std::size_t i = 0; i < data_.size(); ++i) p.zero[i] = data_[i] == 0 ? 1 : 0;
  return p;
}

std::size_t IntMatrix::zero_count() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; }));
}

bool IntMatrix::is_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x > 0; });
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x >= 0; });
}

bool IntMatrix::has_zero_row() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < cols_ && all_zero; ++j) all_zero = (*this)(i, j) == 0;
    if (all_zero) return true;
  }
  return false;
}

bool IntMatrix::has_zero_column() const {
  for (std::size_t j = 0; j < cols_; ++j) {
    bool all_zero = true;
    for (std::size_t i = 0; i < rows_ && all_zero; ++i) all_zero = (*this)(i, j) == 0;
    if (all_zero) return true;
  }
  return false;
}

std::vector<std::vector<mpz_class>> IntMatrix::to_rows() const {
  std::vector<std::vector<mpz_class>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  return out;
}

std::string IntMatrix::to_string() const {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& x : data_) {
    cells.push_back(x.get_str());
    width = std::max(width, cells.back().size());
  }
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& c = cells[i * cols_ + j];
      out += std::string(width - c.size() + (j ? 1 : 0), ' ') + c;
    }
    out += "]\n";
  }
  return out;
}

}  // namespace subdepth
