#include "subdepth/permutation.hpp"

#include <numeric>
#include <limits>

#include "subdepth/error.hpp"

namespace subdepth {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > std::numeric_limits<Point>::max()) {
    throw Error(ErrorCode::ParameterOutOfRange, "degree " + std::to_string(degree) + " too large");
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point image : images) {
    if (image >= images.size() || seen[image]) {
      throw Error(ErrorCode::InvalidPermutation, "image array is not a bijection");
    }
    seen[image] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t point : cycle) {
      if (point < 1 || point > degree) {
        throw Error(ErrorCode::DegreeViolation,
                    "point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      }
      if (used[point - 1]) {
        throw Error(ErrorCode::InvalidPermutation,
                    "point " + std::to_string(point) + " repeated in cycle notation");
      }
      used[point - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.images_[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[i] = rhs.images_[images_[i]];
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i]] = static_cast<Point>(i);
  }
  return result;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  // x^(g^-1 p g): the image of g(x) under the conjugate is g(p(x)).
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[g.images_[i]] = g.images_[images_[i]];
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& cycle : cycles()) {
    result = std::lcm(result, cycle.size());
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  Permutation result(degree);
  for (std::size_t i = 0; i < images_.size(); ++i) result.images_[i] = images_[i];
  return result;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  Permutation result(degree);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[i + offset] = static_cast<Point>(images_[i] + offset);
  }
  return result;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
    if (cycle.size() > 1) result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace subdepth
