#pragma once

// Data-parallel kernels. Each has a serial reference kept for testing and
// benchmarking; the parallel versions produce identical results for any
// thread count.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subdepth/intmatrix.hpp"
#include "subdepth/permgroup.hpp"

namespace subdepth::kernels {

/// Thread count used by the parallel kernels (0 = OpenMP default).
void set_threads(int threads);
int threads();

IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b);
IntMatrix multiply_parallel(const IntMatrix& a, const IntMatrix& b);

/// Class matrix for class j, row-major r x r: entry (i, k) is the number of
/// x in C_j with x^-1 z_k in C_i, z_k the representative of class k.
std::vector<std::uint32_t> class_matrix_serial(const PermutationGroup& g, std::size_t j);
std::vector<std::uint32_t> class_matrix_parallel(const PermutationGroup& g, std::size_t j);

}  // namespace subdepth::kernels
