#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subdepth/permutation.hpp"

namespace subdepth {

inline constexpr std::size_t kDefaultOrderCap = 200000;

/// Conjugacy classes in canonical order: sorted by (element order, class
/// size, lexicographically least element). Class 0 is always the identity.
struct ConjugacyClassData {
  std::vector<Permutation> representatives;  // lexicographically least element of each class
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> element_orders;
  std::vector<std::uint32_t> class_of;  // element index -> class index
  std::vector<std::vector<std::uint32_t>> members;  // class index -> element indices
  std::vector<std::size_t> inverse_class;
  std::vector<std::vector<std::size_t>> power_classes;  // [k][t] = class of rep_k^t, t < element_orders[k]
  std::size_t exponent = 1;
  std::size_t group_order = 1;

  std::size_t size() const noexcept { return representatives.size(); }
  /// Class of g^t for g in class k, any t >= 0.
  std::size_t power_map(std::size_t t, std::size_t k) const {
    return power_classes[k][t % element_orders[k]];
  }
  std::size_t centralizer_order(std::size_t k) const { return group_order / class_sizes[k]; }
};

/// A finite permutation group with its full element list. Cheap to copy;
/// all copies share one immutable state.
class PermutationGroup {
 public:
  PermutationGroup();

  /// Closure of `generators`; throws OrderCapExceeded once the closure
  /// exceeds `order_cap` elements.
  static PermutationGroup generate(std::size_t degree, std::vector<Permutation> generators,
                                   std::string label = {}, std::size_t order_cap = kDefaultOrderCap);

  /// Wraps a set already known to be closed under products. A small
  /// generating set is chosen from it.
  static PermutationGroup from_closed_set(std::size_t degree, std::vector<Permutation> elements,
                                          std::string label = {});

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::string& label() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  /// Sorted lexicographically by image array; element 0 is the identity.
  const std::vector<Permutation>& elements() const noexcept;

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// Computed on first use.
  const ConjugacyClassData& classes() const;

  bool is_abelian() const;
  bool is_trivial() const noexcept { return order() == 1; }

  PermutationGroup with_label(std::string label) const;
  /// Same group acting on {1..degree} with the extra points fixed.
  PermutationGroup extended_to_degree(std::size_t degree) const;

  /// True if both handles share state.
  bool same_as(const PermutationGroup& other) const noexcept { return impl_ == other.impl_; }
  /// Equal degree and equal element sets.
  bool operator==(const PermutationGroup& other) const;

 private:
  struct Impl;
  explicit PermutationGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct SubgroupEmbedding {
  PermutationGroup supergroup;
  PermutationGroup subgroup;
  std::size_t index = 1;

  /// Validates equal degree and membership of every subgroup element.
  static SubgroupEmbedding make(PermutationGroup supergroup, PermutationGroup subgroup);
};

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b,
                                std::size_t order_cap = kDefaultOrderCap);

/// {(g, g)} inside G x G.
SubgroupEmbedding diagonal_subgroup(const PermutationGroup& g, std::size_t order_cap = kDefaultOrderCap);

PermutationGroup center(const PermutationGroup& g);

/// Largest normal subgroup of G inside H: the kernel of G acting on the cosets of H.
PermutationGroup core(const SubgroupEmbedding& emb);

bool is_normal(const SubgroupEmbedding& emb);

/// G acting by right multiplication on the right cosets Hx.
struct CosetAction {
  PermutationGroup source;
  PermutationGroup image;
  std::vector<Permutation> coset_representatives;
  std::vector<std::uint32_t> coset_of;  // element index of source -> coset

  Permutation map(const Permutation& g) const;
  /// Image of a subgroup of `source`.
  PermutationGroup map_subgroup(const PermutationGroup& h) const;
};

CosetAction coset_action(const SubgroupEmbedding& emb);

/// G/N as the permutation group on the cosets of N. Throws NotNormal.
CosetAction quotient(const PermutationGroup& g, const PermutationGroup& n);

/// Subgroup of `g` formed by the listed elements (must be closed).
PermutationGroup subgroup_from_indices(const PermutationGroup& g, const std::vector<std::uint32_t>& indices,
                                       std::string label = {});

}  // namespace subdepth
