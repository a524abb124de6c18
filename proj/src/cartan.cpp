#include "subdepth/cartan.hpp"

#include "subdepth/error.hpp"

namespace subdepth {

namespace {

void check_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, const char* name,
                 std::vector<std::string>& problems) {
  if (m.rows() != rows || m.cols() != cols) {
    problems.push_back(std::string(name) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  } else if (!m.is_nonnegative()) {
    problems.push_back(std::string(name) + " has a negative entry");
  }
}

IntMatrix power(const IntMatrix& x, int n) {
  IntMatrix out = IntMatrix::identity(x.rows());
  for (int i = 0; i < n; ++i) out = x * out;
  return out;
}

}  // namespace

ValidationReport validate(const AlgebraMatrixData& data) {
  ValidationReport report;
  if (data.r == 0 || data.s == 0) report.problems.push_back("r and s must be positive");
  check_shape(data.M, data.r, data.s, "M", report.problems);
  check_shape(data.N, data.r, data.s, "N", report.problems);
  check_shape(data.C, data.s, data.s, "C", report.problems);
  check_shape(data.D, data.r, data.r, "D", report.problems);
  if (!report.problems.empty() || !data.algebraically_closed) return report;

  report.relation_checked = true;
  const IntMatrix dm = data.D * data.M;
  const IntMatrix nc = data.N * data.C;
  for (std::size_t i = 0; i < data.r; ++i) {
    for (std::size_t j = 0; j < data.s; ++j) {
      if (dm(i, j) != nc(i, j)) report.violations.push_back({i, j, dm(i, j), nc(i, j)});
    }
  }
  return report;
}

NecessaryConditionResult necessary_condition(const AlgebraMatrixData& data, int n, Parity parity) {
  if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "n must be at least 1");
  const auto check = validate(data);
  if (!check.problems.empty()) throw Error(ErrorCode::DimensionMismatch, check.problems.front());

  const IntMatrix x = data.M * data.N.transpose();
  NecessaryConditionResult result;
  result.n = n;
  result.parity = parity;
  const std::string xs = "(MN^T)^";
  if (parity == Parity::Even) {
    IntMatrix lower = power(x, n - 1) * data.M;
    IntMatrix higher = x * lower;
    result.certificate = {xs + std::to_string(n - 1) + " M", xs + std::to_string(n) + " M", std::move(lower),
                          std::move(higher)};
  } else {
    IntMatrix lower = power(x, n);
    IntMatrix higher = x * lower;
    result.certificate = {xs + std::to_string(n), xs + std::to_string(n + 1), std::move(lower), std::move(higher)};
  }
  result.holds = result.certificate.verify();
  return result;
}

AlgebraMatrixData triangular_example(int n) {
  if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "n must be at least 1");
  const auto size = static_cast<std::size_t>(n);
  AlgebraMatrixData data;
  data.label = "T(" + std::to_string(n) + ") over its diagonal";
  data.r = data.s = size;
  data.M = IntMatrix(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) data.M(i, j) = 1;
  }
  data.C = data.M;
  data.N = IntMatrix::identity(size);
  data.D = IntMatrix::identity(size);
  data.algebraically_closed = true;
  data.note = "satisfies the depth-2 inequality M^2 <= nM, yet the true depth is 3";
  return data;
}

AlgebraMatrixData from_semisimple_pair(const IntMatrix& m, std::string label) {
  if (m.rows() == 0 || m.cols() == 0 || m.has_zero_row() || m.has_zero_column() || !m.is_nonnegative()) {
    throw Error(ErrorCode::DegenerateMatrix, "matrix must be nonnegative without zero rows or columns");
  }
  AlgebraMatrixData data;
  data.label = std::move(label);
  data.r = m.rows();
  data.s = m.cols();
  data.M = m;
  data.N = m;
  data.C = IntMatrix::identity(m.cols());
  data.D = IntMatrix::identity(m.rows());
  data.algebraically_closed = true;
  return data;
}

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw Error(ErrorCode::InvalidInput, "parity must be 'even' or 'odd', got '" + text + "'");
}

}  // namespace subdepth
