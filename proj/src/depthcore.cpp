#include "subdepth/depthcore.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "subdepth/error.hpp"

namespace subdepth {

namespace {

std::string power_label(const std::string& base, int n) { return base + "^" + std::to_string(n); }

void require_table_for(const CharacterTable& table, const PermutationGroup& g, const char* which) {
  if (!(table.group.same_as(g) || table.group == g)) {
    throw Error(ErrorCode::TableMismatch, std::string("character table does not belong to the ") + which);
  }
}


/// Least m >= first with zeros(P_m) contained in zeros(P_{m+1}), where
/// P_{m+1} = step(P_m). Returns m and the certifying pair.
struct Stabilization {
  int m = 0;
  IntMatrix lower;
  IntMatrix higher;
};

template <class Step>
Stabilization stabilize(IntMatrix start, int first, int cap, Step step, const char* what) {
  IntMatrix current = std::move(start);
  for (int m = first; m <= cap; ++m) {
    IntMatrix next = step(current);
    if (current.zero_pattern().subset_of(next.zero_pattern())) return {m, std::move(current), std::move(next)};
    current = std::move(next);
  }
  throw Error(ErrorCode::CapExceeded, std::string(what) + " did not stabilize below the cap " + std::to_string(cap));
}

IndexSet support_of(const std::vector<mpz_class>& multiplicities) {
  IndexSet out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] > 0) out.push_back(i);
  }
  return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const IndexSet& big, const IndexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

PermutationGroup kernel_of_classes(const PermutationGroup& g, const IndexSet& classes, std::string label) {
  const auto& cls = g.classes();
  std::vector<std::uint32_t> indices;
  for (auto k : classes) indices.insert(indices.end(), cls.members[k].begin(), cls.members[k].end());
  return subgroup_from_indices(g, indices, std::move(label));
}

IndexSet kernel_classes(const ClassFunction& chi) {
  IndexSet out;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    if (chi[k] == chi.degree()) out.push_back(k);
  }
  return out;
}

// Support propagation: supp(chi * chi_i) for each irreducible i.
std::vector<IndexSet> tensor_supports(const ClassFunction& chi, const CharacterTable& table) {
  std::vector<IndexSet> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    out.push_back(support_of(table.multiplicities(chi * table.character(i))));
  }
  return out;
}

IndexSet next_support(const IndexSet& current, const std::vector<IndexSet>& tensor) {
  IndexSet out;
  for (auto i : current) out = set_union(out, tensor[i]);
  return out;
}

struct Chains {
  std::vector<IndexSet> supports;    // n = 1..
  std::vector<IndexSet> cumulative;  // n = 0..
  IndexSet stable;
  int ell = 1;
};

// supp(chi^n) is a function of supp(chi^(n-1)), so the sequence is eventually
// periodic; iterate to the first repeated set.
Chains compute_chains(const IndexSet& first, const std::vector<IndexSet>& tensor, int min_length) {
  Chains c;
  c.cumulative.push_back(IndexSet{0});
  std::set<IndexSet> seen;
  IndexSet current = first;
  while (true) {
    bool repeated = !seen.insert(current).second;
    if (repeated && static_cast<int>(c.supports.size()) >= min_length) break;
    c.supports.push_back(current);
    c.cumulative.push_back(set_union(c.cumulative.back(), current));
    current = next_support(current, tensor);
  }
  c.stable = c.cumulative.back();
  c.ell = 1;
  while (c.cumulative[static_cast<std::size_t>(c.ell)] != c.stable) ++c.ell;
  return c;
}

}  // namespace

TableSource direct_tables() {
  return [](const PermutationGroup& g) { return character_table(g); };
}

// --- induction-restriction matrix --------------------------------------------

InductionRestrictionMatrix induction_restriction_matrix(const SubgroupEmbedding& emb, const CharacterTable& g_table,
                                                        const CharacterTable& h_table) {
  require_table_for(g_table, emb.supergroup, "supergroup");
  require_table_for(h_table, emb.subgroup, "subgroup");
  const std::size_t r = h_table.size();
  const std::size_t s = g_table.size();
  IntMatrix m(r, s);
  for (std::size_t j = 0; j < s; ++j) {
    auto restricted = restrict_character(g_table.character(j), emb);
    restricted = ClassFunction(h_table.group, restricted.values());
    auto mult = h_table.multiplicities(restricted);
    for (std::size_t i = 0; i < r; ++i) m(i, j) = mult[i];
  }
  if (m != induction_restriction_matrix_by_induction(emb, g_table, h_table)) {
    throw Error(ErrorCode::TheoremViolation, "restriction and induction disagree (Frobenius reciprocity)");
  }
  return InductionRestrictionMatrix{std::move(m), emb.supergroup.label(), emb.subgroup.label()};
}

IntMatrix induction_restriction_matrix_by_induction(const SubgroupEmbedding& emb, const CharacterTable& g_table,
                                                    const CharacterTable& h_table) {
  const std::size_t r = h_table.size();
  const std::size_t s = g_table.size();
  const SubgroupEmbedding table_emb{g_table.group, h_table.group, emb.index};
  IntMatrix m(r, s);
  for (std::size_t i = 0; i < r; ++i) {
    auto mult = g_table.multiplicities(induce_character(h_table.character(i), table_emb));
    for (std::size_t j = 0; j < s; ++j) m(i, j) = mult[j];
  }
  return m;
}

// --- minimum depth -----------------------------------------------------------

bool DepthReport::ladder_holds() const {
  bool ok = d <= d_odd && d_odd <= d + 1;
  if (d_even) ok = ok && d <= *d_even && *d_even <= d + 1;
  return ok && d_h - 2 <= d && d <= d_h + 1;
}

DepthReport min_depth(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.has_zero_row() || m.has_zero_column() || !m.is_nonnegative()) {
    throw Error(ErrorCode::DegenerateMatrix, "induction-restriction matrix must be nonnegative without zero rows or columns");
  }
  const IntMatrix mt = m.transpose();
  const IntMatrix s = m * mt;
  const IntMatrix t = mt * m;
  const int r = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());

  DepthReport report;
  report.search_cap = 2 * std::max(r, cols) + 2;

  // M^0 = I, M^1 = M, M^(n+2) = S M^n
  std::vector<IntMatrix> powers{IntMatrix::identity(m.rows()), m};
  auto power = [&](int n) -> const IntMatrix& {
    while (static_cast<int>(powers.size()) <= n) powers.push_back(s * powers[powers.size() - 2]);
    return powers[static_cast<std::size_t>(n)];
  };
  report.d = 0;
  for (int n = 1; n <= report.search_cap; ++n) {
    if (power(n - 1).zero_pattern().subset_of(power(n + 1).zero_pattern())) {
      report.d = n;
      report.depth_certificate = {power_label("M", n - 1), power_label("M", n + 1), power(n - 1), power(n + 1)};
      break;
    }
  }
  if (report.d == 0) throw Error(ErrorCode::CapExceeded, "no depth found below cap " + std::to_string(report.search_cap));

  const int half_cap = report.search_cap / 2;
  auto odd = stabilize(IntMatrix::identity(m.rows()), 0, half_cap, [&](const IntMatrix& x) { return s * x; }, "S powers");
  report.d_odd = 2 * odd.m + 1;
  report.odd_certificate = {power_label("S", odd.m), power_label("S", odd.m + 1), std::move(odd.lower), std::move(odd.higher)};
  if (report.odd_certificate.lower.zero_count() != report.odd_certificate.higher.zero_count()) {
    throw Error(ErrorCode::TheoremViolation, "S power zero pattern is not monotone");
  }

  try {
    auto even = stabilize(m, 1, half_cap, [&](const IntMatrix& x) { return s * x; }, "S^m M powers");
    report.d_even = 2 * even.m;
    report.even_certificate = Certificate{power_label("S", even.m - 1) + " M", power_label("S", even.m) + " M",
                                          std::move(even.lower), std::move(even.higher)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }

  auto h = stabilize(IntMatrix::identity(m.cols()), 0, report.search_cap, [&](const IntMatrix& x) { return t * x; },
                     "T powers");
  report.d_h = 2 * h.m + 1;
  report.h_certificate = {power_label("T", h.m), power_label("T", h.m + 1), std::move(h.lower), std::move(h.higher)};

  const int via_parity = report.d_even ? std::min(report.d_odd, *report.d_even) : report.d_odd;
  if (via_parity != report.d) {
    throw Error(ErrorCode::TheoremViolation, "odd/even depth search disagrees with the direct depth search");
  }
  return report;
}

// --- module depth ------------------------------------------------------------

ModuleDepthReport module_depth(const ClassFunction& chi, const CharacterTable& table) {
  require_table_for(table, chi.group(), "character's group");
  ModuleDepthReport report;
  report.character = chi;
  report.multiplicities = table.multiplicities(chi);
  const std::size_t r = table.size();

  const auto tensor = tensor_supports(chi, table);
  const IndexSet first = support_of(report.multiplicities);
  // depth needs U_n and supp(chi^(n+1)); it is found within r steps
  Chains chains = compute_chains(first, tensor, 1);
  report.depth = -1;
  for (std::size_t n = 0; report.depth < 0; ++n) {
    while (chains.supports.size() <= n) {
      chains = compute_chains(first, tensor, static_cast<int>(chains.supports.size()) + 1);
    }
    if (includes(chains.cumulative[n], chains.supports[n])) report.depth = static_cast<int>(n);
    if (n > r + 1) throw Error(ErrorCode::CapExceeded, "module depth search exceeded the number of irreducibles");
  }
  report.support_chain = chains.supports;
  report.cumulative_chain = chains.cumulative;
  report.ell = chains.ell;
  for (std::size_t n = 0; n < chains.supports.size(); ++n) {
    if (chains.supports[n].size() == r) {
      report.faithful_at = static_cast<int>(n + 1);
      break;
    }
  }
  report.kernel_subgroup = kernel_of_classes(chi.group(), kernel_classes(chi), "ker");
  return report;
}

ClassFunction quotient_module_character(const SubgroupEmbedding& emb) {
  return restrict_character(permutation_character(emb), emb);
}

IntervalCheck subgroup_depth_interval_check(const SubgroupEmbedding& emb, const CharacterTable& g_table,
                                            const CharacterTable& h_table) {
  IntervalCheck check;
  auto chi_q = ClassFunction(h_table.group, quotient_module_character(emb).values());
  check.module_depth = module_depth(chi_q, h_table).depth;
  check.depth = min_depth(induction_restriction_matrix(emb, g_table, h_table).entries).d;
  check.lower = 2 * check.module_depth + 1;
  check.upper = 2 * check.module_depth + 2;
  check.holds = check.lower <= check.depth && check.depth <= check.upper;
  return check;
}

// --- Drinfeld double ---------------------------------------------------------

ClassFunction adjoint_character(const CharacterTable& table) {
  const auto& cls = table.group.classes();
  std::vector<Cyclotomic> v;
  for (std::size_t k = 0; k < cls.size(); ++k) v.emplace_back(static_cast<long>(cls.centralizer_order(k)));
  return ClassFunction(table.group, std::move(v));
}

std::size_t support_components(const IntMatrix& s) {
  std::vector<std::size_t> parent(s.rows());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (s(i, j) != 0) parent[find(i)] = find(j);
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.rows(); ++i) count += find(i) == i ? 1 : 0;
  return count;
}

DoubleDepthReport double_depth(const CharacterTable& table) {
  const std::size_t r = table.size();
  DoubleDepthReport report;
  report.chi_ad = adjoint_character(table);
  report.s = IntMatrix(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    auto mult = table.multiplicities(report.chi_ad * table.character(j));
    for (std::size_t i = 0; i < r; ++i) report.s(i, j) = mult[i];
  }
  report.center_order = center(table.group).order();
  report.centerless = report.center_order == 1;

  const auto adjoint = module_depth(report.chi_ad, table);
  report.adjoint_module_depth = adjoint.depth;
  report.ell_q = adjoint.faithful_at;

  const int cap = static_cast<int>(r) + 1;
  auto odd = stabilize(IntMatrix::identity(r), 0, cap, [&](const IntMatrix& x) { return report.s * x; }, "S powers");
  report.d_odd_double = 2 * odd.m + 1;
  report.odd_certificate = {power_label("S", odd.m), power_label("S", odd.m + 1), std::move(odd.lower), std::move(odd.higher)};

  if (report.centerless && report.ell_q) {
    report.d_double = 2 * *report.ell_q + 1;
    report.lower = report.upper = *report.d_double;
  } else {
    report.lower = 2 * report.adjoint_module_depth + 1;
    report.upper = 2 * report.adjoint_module_depth + 2;
  }
  report.components = support_components(report.s);
  report.s_has_zero = report.s.zero_count() > 0;
  report.s_squared_positive = (report.s * report.s).is_positive();

  bool consistent = report.d_odd_double == 2 * report.adjoint_module_depth + 1;
  consistent = consistent && report.components == report.center_order;
  consistent = consistent && report.ell_q.has_value() == report.centerless;
  if (report.centerless) consistent = consistent && report.d_double && report.d_odd_double == *report.d_double;
  report.consistent = consistent;
  return report;
}

DiagonalDepthReport diagonal_depth(const PermutationGroup& g, const TableSource& tables, std::size_t order_cap) {
  auto emb = diagonal_subgroup(g, order_cap);
  DiagonalDepthReport report;
  report.group_order = g.order();
  const auto product_table = tables(emb.supergroup);
  const auto diagonal_table = tables(emb.subgroup);
  report.matrix = induction_restriction_matrix(emb, product_table, diagonal_table);
  report.depth = min_depth(report.matrix.entries);
  const auto g_table = tables(g);
  const auto dd = double_depth(g_table);
  report.centerless = dd.centerless;
  if (dd.centerless && dd.ell_q) {
    report.predicted = 2 * *dd.ell_q + 1;
    report.consistent = report.depth.d == *report.predicted;
  } else {
    report.consistent = true;
  }
  return report;
}

// --- corefree comparison -----------------------------------------------------

CorefreeReport corefree_compare(const SubgroupEmbedding& emb, const TableSource& tables) {
  CorefreeReport report;
  report.core = core(emb);
  report.core_order = report.core.order();
  report.corefree = report.core_order == 1;

  const auto g_table = tables(emb.supergroup);
  const auto h_table = tables(emb.subgroup);
  report.original = min_depth(induction_restriction_matrix(emb, g_table, h_table).entries);
  auto chi_q = ClassFunction(h_table.group, quotient_module_character(emb).values());
  report.module_depth = module_depth(chi_q, h_table).depth;

  if (report.corefree) {
    report.quotient = report.original;
    report.quotient_module_depth = report.module_depth;
    report.quotient_order = emb.supergroup.order();
    report.quotient_subgroup_order = emb.subgroup.order();
  } else {
    // G acts on the cosets of H with kernel N = core, so its image is G/N
    auto action = coset_action(emb);
    auto qemb = SubgroupEmbedding::make(action.image, action.map_subgroup(emb.subgroup));
    report.quotient_order = qemb.supergroup.order();
    report.quotient_subgroup_order = qemb.subgroup.order();
    const auto qg_table = tables(qemb.supergroup);
    const auto qh_table = tables(qemb.subgroup);
    report.quotient = min_depth(induction_restriction_matrix(qemb, qg_table, qh_table).entries);
    auto qchi = ClassFunction(qh_table.group, quotient_module_character(qemb).values());
    report.quotient_module_depth = module_depth(qchi, qh_table).depth;
  }
  const int dq = report.quotient.d;
  const int d = report.original.d;
  report.inequality_holds = dq <= d && d <= dq + 1;
  auto in_interval = [&](int x) { return 2 * report.module_depth + 1 <= x && x <= 2 * report.module_depth + 2; };
  report.intervals_hold = in_interval(d) && in_interval(dq);
  return report;
}

// --- support chains ----------------------------------------------------------

SupportChainReport support_chain(const ClassFunction& chi, const CharacterTable& table) {
  auto md = module_depth(chi, table);
  SupportChainReport report;
  report.supports = md.support_chain;
  report.cumulative = md.cumulative_chain;
  report.ell = md.ell;
  report.stable_support = md.cumulative_chain.back();

  ClassFunction power = chi;
  for (std::size_t n = 1; n <= report.supports.size(); ++n) {
    auto classes = kernel_classes(power);
    std::size_t order = 0;
    for (auto k : classes) order += chi.group().classes().class_sizes[k];
    report.kernel_classes.push_back(std::move(classes));
    report.kernel_orders.push_back(order);
    power = power * chi;
  }

  IndexSet common;
  for (std::size_t k = 0; k < chi.size(); ++k) common.push_back(k);
  for (auto i : report.stable_support) {
    IndexSet ker = kernel_classes(table.character(i));
    IndexSet next;
    std::set_intersection(common.begin(), common.end(), ker.begin(), ker.end(), std::back_inserter(next));
    common = std::move(next);
  }
  report.stable_kernel = kernel_of_classes(chi.group(), common, "N");
  report.kernel_matches = report.stable_kernel == md.kernel_subgroup;
  report.bound_holds = 1 <= report.ell && report.ell <= static_cast<int>(table.size());
  return report;
}

BurnsideBrauerReport burnside_brauer_bound(const ClassFunction& chi, const CharacterTable& table) {
  if (kernel_classes(chi) != IndexSet{0} || chi.group().classes().class_sizes[0] != 1) {
    throw Error(ErrorCode::NotFaithful, "character has a nontrivial kernel");
  }
  std::vector<Cyclotomic> values = chi.values();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  BurnsideBrauerReport report;
  report.distinct_values = values.size();
  report.ell = support_chain(chi, table).ell;
  report.holds = report.ell <= static_cast<int>(report.distinct_values);
  return report;
}

}  // namespace subdepth
