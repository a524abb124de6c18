#include "subdepth/builtin.hpp"

#include <array>
#include <string>

#include "subdepth/error.hpp"

namespace subdepth::builtin {

namespace {

std::string named(const char* name, std::size_t n) { return std::string(name) + "(" + std::to_string(n) + ")"; }

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, message);
}

// n! > cap, without overflow
bool factorial_exceeds(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > cap / k) return true;
    f *= k;
  }
  return f > cap;
}

Permutation cycle_1_to(std::size_t n, std::size_t degree) {
  std::vector<std::size_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = i + 1;
  return Permutation::from_cycles(degree, {cycle});
}

}  // namespace

PermutationGroup symmetric(std::size_t n, std::size_t order_cap) {
  require(n >= 1, "S(n) needs n >= 1");
  require(!factorial_exceeds(n, order_cap), named("S", n) + " exceeds the order cap");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
    if (n >= 3) gens.push_back(cycle_1_to(n, n));
  }
  return PermutationGroup::generate(n, std::move(gens), named("S", n), order_cap);
}

PermutationGroup alternating(std::size_t n, std::size_t order_cap) {
  require(n >= 1, "A(n) needs n >= 1");
  require(n < 3 || !factorial_exceeds(n, 2 * order_cap), named("A", n) + " exceeds the order cap");
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
  return PermutationGroup::generate(n, std::move(gens), named("A", n), order_cap);
}

PermutationGroup cyclic(std::size_t n, std::size_t order_cap) {
  require(n >= 1, "C(n) needs n >= 1");
  require(n <= order_cap, named("C", n) + " exceeds the order cap");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_1_to(n, n));
  return PermutationGroup::generate(n, std::move(gens), named("C", n), order_cap);
}

PermutationGroup dihedral(std::size_t n, std::size_t order_cap) {
  require(n >= 2 && n % 2 == 0, "D(n) needs an even order n >= 2");
  require(n <= order_cap, named("D", n) + " exceeds the order cap");
  if (n == 2) return cyclic(2, order_cap).with_label(named("D", n));
  if (n == 4) return klein().with_label(named("D", n));
  const std::size_t m = n / 2;
  std::vector<std::vector<std::size_t>> reflection;
  for (std::size_t i = 1; i <= m / 2; ++i) reflection.push_back({i, m + 1 - i});
  std::vector<Permutation> gens{cycle_1_to(m, m), Permutation::from_cycles(m, reflection)};
  return PermutationGroup::generate(m, std::move(gens), named("D", n), order_cap);
}

PermutationGroup klein() {
  std::vector<Permutation> gens{Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                Permutation::from_cycles(4, {{1, 3}, {2, 4}})};
  return PermutationGroup::generate(4, std::move(gens), "Klein");
}

PermutationGroup g108() {
  using Vec = std::array<int, 3>;
  auto point = [](const Vec& v) { return static_cast<Point>(v[0] + 3 * v[1] + 9 * v[2]); };
  // x -> diag(signs) x + shift over F_3
  auto affine = [&](const Vec& signs, const Vec& shift) {
    std::vector<Point> images(27);
    for (int p = 0; p < 27; ++p) {
      Vec x{p % 3, (p / 3) % 3, p / 9};
      Vec y;
      for (int i = 0; i < 3; ++i) y[i] = ((signs[i] * x[i] + shift[i]) % 3 + 3) % 3;
      images[p] = point(y);
    }
    return Permutation::from_images(std::move(images));
  };
  std::vector<Permutation> gens{
      affine({1, 1, 1}, {1, 0, 0}),   affine({1, 1, 1}, {0, 1, 0}), affine({1, 1, 1}, {0, 0, 1}),
      affine({-1, -1, 1}, {0, 0, 0}), affine({-1, 1, -1}, {0, 0, 0}),
  };
  return PermutationGroup::generate(27, std::move(gens), "G108");
}

}  // namespace subdepth::builtin
