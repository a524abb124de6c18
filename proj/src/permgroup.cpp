#include "subdepth/permgroup.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "subdepth/error.hpp"

namespace subdepth {

struct PermutationGroup::Impl {
  std::size_t degree = 1;
  std::string label;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;

  mutable std::once_flag classes_once;
  mutable std::unique_ptr<ConjugacyClassData> classes;
};

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& generators,
                                 std::size_t order_cap) {
  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elements[i] * g;
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > order_cap) {
          throw Error(ErrorCode::OrderCapExceeded,
                      "group order exceeds cap " + std::to_string(order_cap));
        }
      }
    }
  }
  return elements;
}


ConjugacyClassData compute_classes(const PermutationGroup& group) {
  const auto& elements = group.elements();
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> raw_class(n, kUnassigned);
  std::vector<std::vector<std::uint32_t>> raw_members;

  for (std::size_t start = 0; start < n; ++start) {
    if (raw_class[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(raw_members.size());
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(start)};
    raw_class[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : group.generators()) {
        auto j = *group.index_of(elements[orbit[i]].conjugated_by(g));
        if (raw_class[j] == kUnassigned) {
          raw_class[j] = id;
          orbit.push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw_members.push_back(std::move(orbit));
  }

  const std::size_t r = raw_members.size();
  std::vector<std::size_t> orders(r);
  for (std::size_t c = 0; c < r; ++c) orders[c] = elements[raw_members[c].front()].order();

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  // members are sorted and elements are sorted, so front() is the least element
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    if (raw_members[a].size() != raw_members[b].size()) return raw_members[a].size() < raw_members[b].size();
    return elements[raw_members[a].front()] < elements[raw_members[b].front()];
  });
  std::vector<std::uint32_t> rank(r);
  for (std::size_t k = 0; k < r; ++k) rank[perm[k]] = static_cast<std::uint32_t>(k);

  ConjugacyClassData data;
  data.group_order = n;
  data.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) data.class_of[i] = rank[raw_class[i]];
  for (std::size_t k = 0; k < r; ++k) {
    auto& members = raw_members[perm[k]];
    data.representatives.push_back(elements[members.front()]);
    data.class_sizes.push_back(members.size());
    data.element_orders.push_back(orders[perm[k]]);
    data.members.push_back(std::move(members));
  }

  data.exponent = 1;
  for (auto o : data.element_orders) data.exponent = std::lcm(data.exponent, o);

  data.inverse_class.resize(r);
  data.power_classes.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto& rep = data.representatives[k];
    data.inverse_class[k] = data.class_of[*group.index_of(rep.inverse())];
    Permutation power(rep.degree());
    for (std::size_t t = 0; t < data.element_orders[k]; ++t) {
      data.power_classes[k].push_back(data.class_of[*group.index_of(power)]);
      power = power * rep;
    }
  }
  return data;
}

std::vector<Permutation> generating_subset(std::size_t degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> generators;
  std::unordered_set<Permutation, PermutationHash> current{Permutation(degree)};
  for (const auto& x : elements) {
    if (current.contains(x)) continue;
    generators.push_back(x);
    auto closed = closure(degree, generators, std::numeric_limits<std::size_t>::max());
    current = std::unordered_set<Permutation, PermutationHash>(closed.begin(), closed.end());
    if (current.size() == elements.size()) break;
  }
  return generators;
}

}  // namespace

PermutationGroup::PermutationGroup() : PermutationGroup(generate(1, {})) {}

PermutationGroup PermutationGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                                            std::string label, std::size_t order_cap) {
  if (degree == 0) throw Error(ErrorCode::ParameterOutOfRange, "degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator " + g.to_cycle_string() + " has degree " +
                                                 std::to_string(g.degree()) + ", expected " +
                                                 std::to_string(degree));
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->label = std::move(label);
  impl->elements = closure(degree, generators, order_cap);
  impl->generators = std::move(generators);
  std::sort(impl->elements.begin(), impl->elements.end());
  impl->index.reserve(impl->elements.size());
  for (std::size_t i = 0; i < impl->elements.size(); ++i) {
    impl->index.emplace(impl->elements[i], static_cast<std::uint32_t>(i));
  }
  return PermutationGroup(std::move(impl));
}

PermutationGroup PermutationGroup::from_closed_set(std::size_t degree, std::vector<Permutation> elements,
                                                   std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->label = std::move(label);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) {
    throw Error(ErrorCode::InvalidInput, "element set does not contain the identity");
  }
  impl->generators = generating_subset(degree, elements);
  impl->elements = std::move(elements);
  impl->index.reserve(impl->elements.size());
  for (std::size_t i = 0; i < impl->elements.size(); ++i) {
    impl->index.emplace(impl->elements[i], static_cast<std::uint32_t>(i));
  }
  return PermutationGroup(std::move(impl));
}

std::size_t PermutationGroup::degree() const noexcept { return impl_->degree; }
std::size_t PermutationGroup::order() const noexcept { return impl_->elements.size(); }
const std::string& PermutationGroup::label() const noexcept { return impl_->label; }
const std::vector<Permutation>& PermutationGroup::generators() const noexcept { return impl_->generators; }
const std::vector<Permutation>& PermutationGroup::elements() const noexcept { return impl_->elements; }

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

const ConjugacyClassData& PermutationGroup::classes() const {
  std::call_once(impl_->classes_once, [this] {
    impl_->classes = std::make_unique<ConjugacyClassData>(compute_classes(*this));
  });
  return *impl_->classes;
}

bool PermutationGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

PermutationGroup PermutationGroup::with_label(std::string label) const {
  return generate(degree(), generators(), std::move(label), std::numeric_limits<std::size_t>::max());
}

PermutationGroup PermutationGroup::extended_to_degree(std::size_t new_degree) const {
  if (new_degree < degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot shrink degree " + std::to_string(degree()) + " to " +
                                               std::to_string(new_degree));
  }
  if (new_degree == degree()) return *this;
  std::vector<Permutation> gens;
  for (const auto& g : generators()) gens.push_back(g.extended(new_degree));
  return generate(new_degree, std::move(gens), label(), std::numeric_limits<std::size_t>::max());
}

bool PermutationGroup::operator==(const PermutationGroup& other) const {
  if (same_as(other)) return true;
  if (degree() != other.degree() || order() != other.order()) return false;
  return std::all_of(elements().begin(), elements().end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

SubgroupEmbedding SubgroupEmbedding::make(PermutationGroup supergroup, PermutationGroup subgroup) {
  if (supergroup.degree() != subgroup.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "subgroup degree " + std::to_string(subgroup.degree()) +
                                               " differs from group degree " +
                                               std::to_string(supergroup.degree()));
  }
  std::string offending;
  for (const auto& g : subgroup.generators()) {
    if (!supergroup.contains(g)) offending += " " + g.to_cycle_string();
  }
  if (!offending.empty()) {
    throw Error(ErrorCode::NotASubgroup, "generators not in the group:" + offending);
  }
  for (const auto& h : subgroup.elements()) {
    if (!supergroup.contains(h)) {
      throw Error(ErrorCode::NotASubgroup, "element " + h.to_cycle_string() + " not in the group");
    }
  }
  std::size_t index = supergroup.order() / subgroup.order();
  return SubgroupEmbedding{std::move(supergroup), std::move(subgroup), index};
}

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b, std::size_t order_cap) {
  if (a.order() > order_cap / b.order() || a.order() * b.order() > order_cap) {
    throw Error(ErrorCode::OrderCapExceeded, "product order " + std::to_string(a.order()) + " x " +
                                                 std::to_string(b.order()) + " exceeds cap " +
                                                 std::to_string(order_cap));
  }
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(g.extended(degree));
  for (const auto& g : b.generators()) gens.push_back(g.shifted(a.degree(), degree));
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + " x " + b.label();
  return PermutationGroup::generate(degree, std::move(gens), std::move(label), order_cap);
}

SubgroupEmbedding diagonal_subgroup(const PermutationGroup& g, std::size_t order_cap) {
  auto product = direct_product(g, g, order_cap);
  const std::size_t degree = product.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.extended(degree) * x.shifted(g.degree(), degree));
  std::string label = g.label().empty() ? std::string{} : "diag(" + g.label() + ")";
  auto diagonal = PermutationGroup::generate(degree, std::move(gens), std::move(label), order_cap);
  return SubgroupEmbedding{product, diagonal, g.order()};
}

PermutationGroup center(const PermutationGroup& g) {
  std::vector<Permutation> central;
  for (const auto& x : g.elements()) {
    bool commutes = std::all_of(g.generators().begin(), g.generators().end(),
                                [&](const Permutation& y) { return x * y == y * x; });
    if (commutes) central.push_back(x);
  }
  return PermutationGroup::from_closed_set(g.degree(), std::move(central),
                                           g.label().empty() ? "" : "Z(" + g.label() + ")");
}

PermutationGroup core(const SubgroupEmbedding& emb) {
  const auto& h = emb.subgroup;
  auto action = coset_action(emb);
  std::vector<Permutation> kernel = h.elements();
  for (const auto& x : action.coset_representatives) {
    const Permutation x_inv = x.inverse();
    std::erase_if(kernel, [&](const Permutation& k) { return !h.contains(k.conjugated_by(x_inv)); });
  }
  return PermutationGroup::from_closed_set(h.degree(), std::move(kernel), "core");
}

bool is_normal(const SubgroupEmbedding& emb) {
  for (const auto& g : emb.supergroup.generators()) {
    for (const auto& h : emb.subgroup.generators()) {
      if (!emb.subgroup.contains(h.conjugated_by(g))) return false;
    }
  }
  return true;
}

Permutation CosetAction::map(const Permutation& g) const {
  auto gi = source.index_of(g);
  if (!gi) throw Error(ErrorCode::NotASubgroup, g.to_cycle_string() + " is not in the acting group");
  std::vector<Point> images(coset_representatives.size());
  for (std::size_t c = 0; c < coset_representatives.size(); ++c) {
    images[c] = static_cast<Point>(coset_of[*source.index_of(coset_representatives[c] * g)]);
  }
  return Permutation::from_images(std::move(images));
}

PermutationGroup CosetAction::map_subgroup(const PermutationGroup& h) const {
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(map(x));
  std::string label = h.label().empty() ? std::string{} : h.label() + "'";
  return PermutationGroup::generate(image.degree(), std::move(gens), std::move(label),
                                    std::numeric_limits<std::size_t>::max());
}

CosetAction coset_action(const SubgroupEmbedding& emb) {
  const auto& g = emb.supergroup;
  const auto& h = emb.subgroup;
  if (emb.index > std::numeric_limits<Point>::max()) {
    throw Error(ErrorCode::ParameterOutOfRange, "coset action of degree " + std::to_string(emb.index) +
                                                    " is too large");
  }
  CosetAction action;
  action.source = g;
  action.coset_of.assign(g.order(), kUnassigned);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (action.coset_of[i] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(action.coset_representatives.size());
    const auto& x = g.elements()[i];
    action.coset_representatives.push_back(x);
    for (const auto& y : h.elements()) action.coset_of[*g.index_of(y * x)] = c;
  }
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(action.map(x));
  std::string label = g.label().empty() ? std::string{} : g.label() + "'";
  action.image = PermutationGroup::generate(action.coset_representatives.size(), std::move(gens),
                                            std::move(label), std::numeric_limits<std::size_t>::max());
  return action;
}

CosetAction quotient(const PermutationGroup& g, const PermutationGroup& n) {
  auto emb = SubgroupEmbedding::make(g, n);
  if (!is_normal(emb)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  return coset_action(emb);
}

PermutationGroup subgroup_from_indices(const PermutationGroup& g, const std::vector<std::uint32_t>& indices,
                                       std::string label) {
  std::vector<Permutation> elements;
  elements.reserve(indices.size());
  for (auto i : indices) elements.push_back(g.elements()[i]);
  return PermutationGroup::from_closed_set(g.degree(), std::move(elements), std::move(label));
}

}  // namespace subdepth
