#include <algorithm>
#include <map>
#include <set>

#include "catalog.hpp"
#include "doctest.h"
#include "subdepth/builtin.hpp"
#include "subdepth/error.hpp"
#include "subdepth/groupspec.hpp"
#include "subdepth/permgroup.hpp"

using namespace subdepth;

namespace {

// Closure by repeated right multiplication with generators.
std::set<Permutation> closure_oracle(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        auto y = x * s;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("permutation arithmetic follows the right action") {
  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  // 1 -> 2 under a, then 2 -> 3 under b
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_cycle_string() == "(1 3 2)");
  CHECK((a * b).order() == 3);
  CHECK((a * a).is_identity());
  CHECK(Permutation(4).to_cycle_string() == "()");
  const auto c = Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK(c.order() == 6);
  CHECK(c.pow(6).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  const auto a5 = a.extended(5);
  CHECK(c.conjugated_by(a5) == a5.inverse() * c * a5);
  CHECK(Permutation::from_cycles(5, c.cycles()) == c);
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}), Error);
  try {
    Permutation::from_cycles(3, {{1, 2, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPermutation);
  }
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), Error);
}

TEST_CASE("orders match closure oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = builtin::symmetric(n);
    CHECK(g.order() == factorial(n));
    if (n >= 2) CHECK(builtin::alternating(n).order() == factorial(n) / 2);
  }
  for (const auto& g : testcat::groups()) {
    const auto oracle = closure_oracle(g.generators(), g.degree());
    REQUIRE(oracle.size() == g.order());
    CHECK(std::equal(oracle.begin(), oracle.end(), g.elements().begin()));
    CHECK(g.elements().front().is_identity());
  }
  CHECK(builtin::dihedral(8).order() == 8);
  CHECK(builtin::dihedral(10).order() == 10);
  CHECK(builtin::g108().order() == 108);
}

TEST_CASE("order cap is enforced") {
  CHECK_THROWS_AS(builtin::symmetric(6, 100), Error);
  CHECK_THROWS_AS(PermutationGroup::generate(6, {Permutation::from_cycles(6, {{1, 2}}),
                                                 Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})},
                                             "", 700),
                  Error);
}

TEST_CASE("conjugacy classes match brute-force conjugation") {
  for (const auto& g : testcat::groups()) {
    const auto& cls = g.classes();
    const auto& el = g.elements();
    std::size_t total = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      std::set<Permutation> orbit;
      for (const auto& x : el) orbit.insert(cls.representatives[k].conjugated_by(x));
      CHECK(orbit.size() == cls.class_sizes[k]);
      CHECK(*orbit.begin() == cls.representatives[k]);
      for (const auto& y : orbit) CHECK(cls.class_of[*g.index_of(y)] == k);
      CHECK(cls.representatives[k].order() == cls.element_orders[k]);
      CHECK(cls.class_of[*g.index_of(cls.representatives[k].inverse())] == cls.inverse_class[k]);
      for (std::size_t t = 0; t < 2 * cls.element_orders[k]; ++t) {
        CHECK(cls.class_of[*g.index_of(cls.representatives[k].pow(static_cast<long long>(t)))] == cls.power_map(t, k));
      }
      total += cls.class_sizes[k];
    }
    CHECK(total == g.order());
    CHECK(cls.class_sizes[0] == 1);
    // canonical order: (element order, class size, representative)
    for (std::size_t k = 1; k < cls.size(); ++k) {
      const auto a = std::tuple(cls.element_orders[k - 1], cls.class_sizes[k - 1], cls.representatives[k - 1]);
      const auto b = std::tuple(cls.element_orders[k], cls.class_sizes[k], cls.representatives[k]);
      CHECK(a < b);
    }
  }
  CHECK(builtin::symmetric(4).classes().size() == 5);
  CHECK(builtin::symmetric(5).classes().size() == 7);
  CHECK(builtin::g108().classes().size() == 15);
}

TEST_CASE("center by brute force") {
  for (const auto& g : testcat::groups()) {
    std::size_t count = 0;
    for (const auto& z : g.elements()) {
      count += std::all_of(g.elements().begin(), g.elements().end(), [&](const Permutation& x) { return z * x == x * z; });
    }
    CHECK(center(g).order() == count);
  }
  CHECK(center(builtin::g108()).order() == 1);
  CHECK(center(builtin::dihedral(8)).order() == 2);
}

TEST_CASE("subgroup validation lists offending generators") {
  const auto g = builtin::symmetric(3);
  const auto h = testcat::perm("perm(3; (1 2 3))");
  CHECK_NOTHROW(SubgroupEmbedding::make(g, h));
  const auto a4 = builtin::alternating(4);
  const auto bad = testcat::perm("perm(4; (1 2))");
  try {
    SubgroupEmbedding::make(a4, bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubgroup);
    CHECK(std::string(e.what()).find("(1 2)") != std::string::npos);
  }
  CHECK_THROWS_AS(SubgroupEmbedding::make(builtin::symmetric(4), builtin::symmetric(5)), Error);
}

TEST_CASE("core and normality against brute force") {
  for (const auto& pair : testcat::embeddings()) {
    const auto& g = pair.emb.supergroup;
    const auto& h = pair.emb.subgroup;
    // core: elements of H whose every conjugate lies in H
    std::size_t core_count = 0;
    for (const auto& y : h.elements()) {
      core_count += std::all_of(g.elements().begin(), g.elements().end(),
                                [&](const Permutation& x) { return h.contains(y.conjugated_by(x)); });
    }
    CAPTURE(pair.name);
    CHECK(core(pair.emb).order() == core_count);
    CHECK(is_normal(pair.emb) == (core_count == h.order()));
    CHECK(pair.emb.index * h.order() == g.order());
  }
  const auto d8 = SubgroupEmbedding::make(builtin::symmetric(4), builtin::dihedral(8));
  CHECK(core(d8) == builtin::klein());
}

TEST_CASE("coset action and quotient") {
  const auto emb = SubgroupEmbedding::make(builtin::symmetric(4), builtin::dihedral(8));
  const auto action = coset_action(emb);
  CHECK(action.image.degree() == 3);
  CHECK(action.image.order() == 6);
  // homomorphism property
  for (const auto& a : emb.supergroup.generators()) {
    for (const auto& b : emb.supergroup.elements()) CHECK(action.map(a * b) == action.map(a) * action.map(b));
  }
  CHECK(action.map_subgroup(emb.subgroup).order() == 2);

  const auto q = quotient(builtin::symmetric(4), builtin::klein());
  CHECK(q.image.order() == 6);
  CHECK_THROWS_AS(quotient(builtin::symmetric(4), testcat::perm("perm(4; (1 2))")), Error);
}

TEST_CASE("direct product and diagonal") {
  const auto s3 = builtin::symmetric(3);
  const auto p = direct_product(s3, s3);
  CHECK(p.order() == 36);
  CHECK(p.degree() == 6);
  CHECK(p.classes().size() == 9);
  const auto diag = diagonal_subgroup(s3);
  CHECK(diag.subgroup.order() == 6);
  CHECK(diag.index == 6);
  CHECK_THROWS_AS(direct_product(builtin::symmetric(5), builtin::symmetric(5), 1000), Error);
}

TEST_CASE("group spec grammar") {
  CHECK(build_group(parse_group_spec("S(4)")).order() == 24);
  CHECK(build_group(parse_group_spec("perm(4; (1 2 3 4), (1 2))")).order() == 24);
  CHECK(build_group(parse_group_spec("D(8)")).order() == 8);
  CHECK(build_group(parse_group_spec("S(3) x C(2)")).order() == 12);
  CHECK(build_group(parse_group_spec("diag(S(3))")).order() == 6);
  CHECK(build_group(parse_group_spec("Klein")).order() == 4);
  try {
    parse_group_spec("perm(3; (1 2 3 4))");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeViolation);
  }
  try {
    parse_group_spec("S(4");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group_spec("Q(8)"), Error);
  CHECK_THROWS_AS(parse_group_spec("S(3) x"), Error);
  CHECK_THROWS_AS(parse_group_spec(""), Error);
  for (const char* text : {"S(4)", "A(5) x C(3)", "diag(S(3) x Klein)", "perm(5; (1 2)(3 4 5), ())",
                           "S(2) x (C(2) x C(3))", "G108", "D(10)"}) {
    const auto spec = parse_group_spec(text);
    CHECK(print_group_spec(spec) == text);
    CHECK(parse_group_spec(print_group_spec(spec)) == spec);
  }
  CHECK(parse_group_spec("perm(3;(1,2),(1 2 3))") == parse_group_spec("perm(3; (1 2), (1 2 3))"));
}

TEST_CASE("edge cases and structural invariants") {
  const auto trivial = PermutationGroup::generate(4, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.classes().size() == 1);
  CHECK(builtin::cyclic(1).order() == 1);
  const auto klein = testcat::perm("perm(4; (1 2)(3 4), (1 3)(2 4))");
  CHECK(klein.order() == 4);
  CHECK(klein.is_abelian());
  CHECK(klein == builtin::klein());

  const auto c2 = builtin::cyclic(2);
  const auto c2c2 = direct_product(c2, c2);
  CHECK(c2c2.order() == 4);
  CHECK(c2c2.is_abelian());
  CHECK(direct_product(builtin::symmetric(3), builtin::cyclic(1)).order() == 6);
  CHECK(diagonal_subgroup(c2).index == 2);
  CHECK(diagonal_subgroup(builtin::cyclic(1)).index == 1);

  for (const auto& g : testcat::groups()) {
    // closure idempotence
    const auto again = PermutationGroup::from_closed_set(g.degree(), g.elements());
    CHECK(again == g);
    CHECK(PermutationGroup::generate(g.degree(), again.generators()) == g);
    const auto& cls = g.classes();
    for (std::size_t k = 0; k < cls.size(); ++k) {
      CHECK(cls.inverse_class[cls.inverse_class[k]] == k);
      CHECK(cls.power_map(1, k) == k);
      CHECK(g.order() % cls.class_sizes[k] == 0);
    }
    if (g.is_abelian()) CHECK(center(g) == g);
  }
  for (const auto& pair : testcat::embeddings()) {
    const auto n = core(pair.emb);
    const auto n_in_g = SubgroupEmbedding::make(pair.emb.supergroup, n);
    CHECK(is_normal(n_in_g));
    CHECK(core(n_in_g) == n);
    CHECK(is_normal(pair.emb) == (n == pair.emb.subgroup));
  }
}

TEST_CASE("quotient examples") {
  const auto s4 = builtin::symmetric(4);
  const auto q = quotient(s4, builtin::klein());
  CHECK(q.image.order() * 4 == s4.order());
  CHECK(q.map_subgroup(builtin::dihedral(8)).order() == 2);
  std::size_t kernel = 0;
  for (const auto& g : s4.elements()) kernel += q.map(g).is_identity();
  CHECK(kernel == 4);
  CHECK(quotient(s4, s4).image.order() == 1);
}
