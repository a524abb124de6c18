#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subdepth/chartab.hpp"
#include "subdepth/intmatrix.hpp"
#include "subdepth/permgroup.hpp"

namespace subdepth {

/// Supplies character tables; lets callers plug in a cache.
using TableSource = std::function<CharacterTable(const PermutationGroup&)>;
TableSource direct_tables();

/// M[i][j] = <chi_i^H, chi_j^G restricted to H>; rows Irr(H), columns Irr(G).
struct InductionRestrictionMatrix {
  IntMatrix entries;
  std::string supergroup_label;
  std::string subgroup_label;

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }
};

/// Computed by restriction and cross-checked entrywise against induction.
InductionRestrictionMatrix induction_restriction_matrix(const SubgroupEmbedding& emb, const CharacterTable& g_table,
                                                        const CharacterTable& h_table);

/// The same matrix computed through induced characters only.
IntMatrix induction_restriction_matrix_by_induction(const SubgroupEmbedding& emb, const CharacterTable& g_table,
                                                    const CharacterTable& h_table);

/// Witness for "higher <= q * lower for some q": every zero of `lower` is a
/// zero of `higher`.
struct Certificate {
  std::string lower_label;
  std::string higher_label;
  IntMatrix lower;
  IntMatrix higher;

  bool verify() const { return lower.zero_pattern().subset_of(higher.zero_pattern()); }
};

struct DepthReport {
  int d = 0;
  int d_odd = 0;
  std::optional<int> d_even;
  int d_h = 0;
  int search_cap = 0;
  Certificate depth_certificate;
  Certificate odd_certificate;
  std::optional<Certificate> even_certificate;
  Certificate h_certificate;

  /// d <= d_odd <= d+1, d <= d_even <= d+1 and d_h - 2 <= d <= d_h + 1.
  bool ladder_holds() const;
};

/// Minimum depth, odd/even depth and h-depth from zero patterns of powers of
/// M, S = M M^T and T = M^T M. Throws DegenerateMatrix if M has a zero row or
/// column and CapExceeded if nothing stabilizes below the cap.
DepthReport min_depth(const IntMatrix& m);

/// Sorted index sets.
using IndexSet = std::vector<std::size_t>;

struct ModuleDepthReport {
  ClassFunction character;
  std::vector<mpz_class> multiplicities;
  /// supp(chi^n) for n = 1, 2, ... up to the first repeated set.
  std::vector<IndexSet> support_chain;
  /// U_n = union of supp(chi^m), m = 0..n, with chi^0 trivial; entry n is U_n.
  std::vector<IndexSet> cumulative_chain;
  int depth = 0;
  /// Least n >= 1 with U_n equal to the union over all powers.
  int ell = 1;
  /// Least n with supp(chi^n) = Irr(G).
  std::optional<int> faithful_at;
  PermutationGroup kernel_subgroup;
};

/// Depth of a character in the representation ring: the least n with
/// supp(chi^(n+1)) inside U_n (depth 0 iff chi is a multiple of the trivial
/// character). Throws NotACharacter.
ModuleDepthReport module_depth(const ClassFunction& chi, const CharacterTable& table);

/// Character of the coset module k[H\G], restricted to H.
ClassFunction quotient_module_character(const SubgroupEmbedding& emb);

struct IntervalCheck {
  int module_depth = 0;
  int depth = 0;
  int lower = 0;
  int upper = 0;
  bool holds = false;
};

/// 2 dq + 1 <= d <= 2 dq + 2 with dq the module depth of the quotient module over H.
IntervalCheck subgroup_depth_interval_check(const SubgroupEmbedding& emb, const CharacterTable& g_table,
                                            const CharacterTable& h_table);

/// Values |C_G(g_k)|.
ClassFunction adjoint_character(const CharacterTable& table);

struct DoubleDepthReport {
  ClassFunction chi_ad;
  /// S[i][j] = <chi_i, chi_ad chi_j>
  IntMatrix s;
  bool centerless = false;
  std::size_t center_order = 1;
  std::optional<int> ell_q;
  int adjoint_module_depth = 0;
  int d_odd_double = 0;
  Certificate odd_certificate;
  std::optional<int> d_double;
  int lower = 0;
  int upper = 0;
  std::size_t components = 0;
  bool s_has_zero = false;
  bool s_squared_positive = false;
  /// d_odd_double = 2 * adjoint_module_depth + 1, components = |Z(G)|, and
  /// d_odd_double = 2 ell_q + 1 when centerless.
  bool consistent = false;
};

/// Depth of kG in its Drinfeld double, from the character table alone.
DoubleDepthReport double_depth(const CharacterTable& table);

struct DiagonalDepthReport {
  std::size_t group_order = 0;
  InductionRestrictionMatrix matrix;
  DepthReport depth;
  bool centerless = false;
  std::optional<int> predicted;  // 2 ell_q + 1 when centerless
  bool consistent = false;
};

/// Depth of g -> (g, g) in G x G through the full group/table/matrix pipeline.
DiagonalDepthReport diagonal_depth(const PermutationGroup& g, const TableSource& tables,
                                   std::size_t order_cap = kDefaultOrderCap);

struct CorefreeReport {
  std::size_t core_order = 1;
  PermutationGroup core;
  bool corefree = false;
  std::size_t quotient_order = 1;
  std::size_t quotient_subgroup_order = 1;
  DepthReport original;
  DepthReport quotient;
  int module_depth = 0;           // of the quotient module over H
  int quotient_module_depth = 0;  // of the quotient module over H/N
  bool inequality_holds = false;  // d(H/N,G/N) <= d(H,G) <= d(H/N,G/N) + 1
  bool intervals_hold = false;    // both depths in [2d+1, 2d+2]
  bool holds() const { return inequality_holds && intervals_hold && module_depth == quotient_module_depth; }
};

CorefreeReport corefree_compare(const SubgroupEmbedding& emb, const TableSource& tables);

struct SupportChainReport {
  std::vector<IndexSet> supports;
  std::vector<IndexSet> cumulative;
  /// K_n = {g : chi^n(g) = chi^n(1)} as class index sets and orders.
  std::vector<IndexSet> kernel_classes;
  std::vector<std::size_t> kernel_orders;
  int ell = 1;
  IndexSet stable_support;
  /// Common kernel of the irreducibles in the stable support.
  PermutationGroup stable_kernel;
  bool kernel_matches = false;  // stable_kernel == ker chi
  bool bound_holds = false;     // 1 <= ell <= number of irreducibles
};

SupportChainReport support_chain(const ClassFunction& chi, const CharacterTable& table);

struct BurnsideBrauerReport {
  std::size_t distinct_values = 0;
  int ell = 0;
  bool holds = false;
};

/// Number of distinct values of a faithful character bounds its
/// stabilization index. Throws NotFaithful.
BurnsideBrauerReport burnside_brauer_bound(const ClassFunction& chi, const CharacterTable& table);

/// Connected components of the graph on indices with i ~ j iff S[i][j] > 0.
std::size_t support_components(const IntMatrix& s);

}  // namespace subdepth
