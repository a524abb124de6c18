#include "subdepth/kernels.hpp"

#include <atomic>

#include <omp.h>

#include "subdepth/error.hpp"

namespace subdepth::kernels {

namespace {

std::atomic<int> thread_setting{0};

int active_threads() {
  int t = thread_setting.load();
  return t > 0 ? t : omp_get_max_threads();
}

void check_product_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
  }
}

void multiply_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& c, std::size_t i) {
  mpz_class term;
  for (std::size_t l = 0; l < a.cols(); ++l) {
    const mpz_class& x = a(i, l);
    if (x == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(l, j).get_mpz_t());
    }
  }
}

void class_matrix_column(const PermutationGroup& g, const ConjugacyClassData& cls, std::size_t j, std::size_t k,
                         std::vector<std::uint32_t>& out) {
  const std::size_t r = cls.size();
  const Permutation& z = cls.representatives[k];
  const auto& elements = g.elements();
  for (auto x : cls.members[j]) {
    auto y = *g.index_of(elements[x].inverse() * z);
    ++out[cls.class_of[y] * r + k];
  }
}

}  // namespace

void set_threads(int threads) { thread_setting.store(threads < 0 ? 0 : threads); }
int threads() { return active_threads(); }

IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b) {
  check_product_shape(a, b);
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

IntMatrix multiply_parallel(const IntMatrix& a, const IntMatrix& b) {
  check_product_shape(a, b);
  IntMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) num_threads(active_threads())
  for (long i = 0; i < rows; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

std::vector<std::uint32_t> class_matrix_serial(const PermutationGroup& g, std::size_t j) {
  const auto& cls = g.classes();
  const std::size_t r = cls.size();
  std::vector<std::uint32_t> out(r * r, 0);
  for (std::size_t k = 0; k < r; ++k) class_matrix_column(g, cls, j, k, out);
  return out;
}

std::vector<std::uint32_t> class_matrix_parallel(const PermutationGroup& g, std::size_t j) {
  const auto& cls = g.classes();
  const std::size_t r = cls.size();
  std::vector<std::uint32_t> out(r * r, 0);
  const auto columns = static_cast<long>(r);
  // column k is written only by iteration k
#pragma omp parallel for schedule(dynamic) num_threads(active_threads())
  for (long k = 0; k < columns; ++k) class_matrix_column(g, cls, j, static_cast<std::size_t>(k), out);
  return out;
}

}  // namespace subdepth::kernels
