#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "subdepth/cyclotomic.hpp"
#include "subdepth/permgroup.hpp"

namespace subdepth {

/// A function on the conjugacy classes of a group, in the group's canonical
/// class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(PermutationGroup group, std::vector<Cyclotomic> values);

  const PermutationGroup& group() const noexcept { return group_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Cyclotomic& operator[](std::size_t k) const { return values_[k]; }
  const Cyclotomic& degree() const { return values_.front(); }

  ClassFunction conj() const;
  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator*=(const ClassFunction& rhs);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_.same_as(b.group_) && a.values_ == b.values_;
  }

 private:
  PermutationGroup group_;
  std::vector<Cyclotomic> values_;
};

/// Ordinary character table. Rows are the irreducible characters (row 0
/// trivial, the rest sorted by degree then by values), columns follow the
/// canonical class order. Every entry is written in Q(zeta_e), e the exponent.
struct CharacterTable {
  PermutationGroup group;
  unsigned conductor = 1;
  std::vector<std::vector<Cyclotomic>> irreducibles;
  std::vector<std::size_t> degrees;
  /// Prime used for eigenspace splitting (0 when the table was loaded).
  std::uint64_t prime = 0;

  std::size_t size() const noexcept { return irreducibles.size(); }
  ClassFunction character(std::size_t i) const;
  /// <chi, chi_i> for every irreducible, exactly.
  std::vector<Cyclotomic> inner_products(const ClassFunction& chi) const;
  /// Constituent multiplicities; throws NotACharacter unless all are
  /// nonnegative integers.
  std::vector<mpz_class> multiplicities(const ClassFunction& chi) const;
};

struct DixonOptions {
  /// Use the smallest admissible prime at least this large.
  std::uint64_t min_prime = 0;
  /// PrimeSearchFailed beyond this.
  std::uint64_t prime_bound = std::uint64_t{1} << 31;
  /// Re-check row orthogonality exactly before returning.
  bool verify = true;
};

/// a(i, j, k) = #{(x, y) in C_i x C_j : xy = z_k}.
struct ClassCoefficients {
  std::size_t classes = 0;
  std::vector<std::uint32_t> data;
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data[(i * classes + j) * classes + k];
  }
};

ClassCoefficients class_mult_coefficients(const PermutationGroup& g);

/// Smallest prime p = 1 (mod exponent) with p^2 > 4|G| and p >= min_prime.
std::uint64_t dixon_prime(std::size_t group_order, std::size_t exponent, std::uint64_t min_prime = 0,
                          std::uint64_t bound = std::uint64_t{1} << 31);

/// Exact table by splitting common eigenspaces of the class matrices over
/// F_p, then lifting the values through the power maps.
CharacterTable character_table(const PermutationGroup& g, const DixonOptions& options = {});

struct OrthogonalityCheck {
  bool rows = false;
  bool columns = false;
  bool degrees = false;  // sum of squares is |G|
  bool ok() const { return rows && columns && degrees; }
};
OrthogonalityCheck check_orthogonality(const CharacterTable& table);

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

ClassFunction trivial_character(const PermutationGroup& g);
ClassFunction regular_character(const PermutationGroup& g);

/// H-class index -> G-class index.
std::vector<std::size_t> class_fusion(const SubgroupEmbedding& emb);
ClassFunction restrict_character(const ClassFunction& chi, const SubgroupEmbedding& emb);
ClassFunction induce_character(const ClassFunction& chi, const SubgroupEmbedding& emb);
/// Number of cosets Hx fixed by right multiplication, per class of G.
ClassFunction permutation_character(const SubgroupEmbedding& emb);

}  // namespace subdepth
