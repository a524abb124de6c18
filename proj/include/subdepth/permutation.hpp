#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subdepth {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}. Printed and parsed 1-based in cycle notation.
///
/// Products act on the right: (a * b) applies a first, then b, so that
/// x^(a*b) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Throws InvalidPermutation unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Cycles use 1-based points. Throws DegreeViolation for points outside
  /// 1..degree and InvalidPermutation for repeated points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t point) const noexcept { return images_[point]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  /// g^-1 * this * g
  Permutation conjugated_by(const Permutation& g) const;

  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Same permutation on a larger point set; extra points are fixed.
  Permutation extended(std::size_t degree) const;
  /// Shift every point by `offset` inside a set of size `degree`.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  /// Disjoint cycle notation, 1-based; identity prints as "()".
  std::string to_cycle_string() const;

  std::vector<std::vector<std::size_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace subdepth
