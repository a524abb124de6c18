#include <random>

#include "catalog.hpp"
#include "doctest.h"
#include "subdepth/chartab.hpp"
#include "subdepth/error.hpp"

using namespace subdepth;

namespace {

std::vector<std::vector<Cyclotomic>> ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// Random nonnegative integer combination of irreducibles.
ClassFunction random_character(const CharacterTable& t, std::mt19937& rng) {
  std::vector<Cyclotomic> v(t.size(), Cyclotomic());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long c = std::uniform_int_distribution<long>(0, 2)(rng);
    for (std::size_t k = 0; k < t.size(); ++k) v[k] += Cyclotomic(c) * t.irreducibles[i][k];
  }
  return ClassFunction(t.group, std::move(v));
}

}  // namespace

TEST_CASE("class multiplication coefficients match pair counting") {
  for (const auto& g : {builtin::symmetric(4), builtin::dihedral(8), builtin::alternating(4)}) {
    const auto a = class_mult_coefficients(g);
    const auto& cls = g.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = 0; j < cls.size(); ++j) {
        for (std::size_t k = 0; k < cls.size(); ++k) {
          std::uint32_t count = 0;
          for (auto x : cls.members[i]) {
            for (auto y : cls.members[j]) count += g.elements()[x] * g.elements()[y] == cls.representatives[k];
          }
          CHECK(a(i, j, k) == count);
        }
      }
    }
  }
}

TEST_CASE("known small tables") {
  const auto s3 = character_table(builtin::symmetric(3));
  CHECK(s3.irreducibles == ints({{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}));
  const auto s4 = character_table(builtin::symmetric(4));
  CHECK(s4.irreducibles ==
        ints({{1, 1, 1, 1, 1}, {1, 1, -1, 1, -1}, {2, 2, 0, -1, 0}, {3, -1, -1, 0, 1}, {3, -1, 1, 0, -1}}));
  CHECK(s4.degrees == std::vector<std::size_t>{1, 1, 2, 3, 3});

  // C(3): every row is k -> zeta^(jk) for the class of the k-th power of the generator
  const auto c3 = character_table(builtin::cyclic(3));
  CHECK(c3.size() == 3);
  CHECK(c3.conductor == 3);
  for (const auto& row : c3.irreducibles) {
    for (const auto& v : row) {
      CHECK(v * v * v == Cyclotomic(1L));
    }
  }
  const auto a5 = character_table(builtin::alternating(5));
  CHECK(a5.degrees == std::vector<std::size_t>{1, 3, 3, 4, 5});
  // golden-ratio values: (1 + sqrt 5) / 2 satisfies x^2 = x + 1
  bool found = false;
  for (const auto& row : a5.irreducibles) {
    for (const auto& v : row) found = found || (!v.is_rational() && v * v == v + Cyclotomic(1L));
  }
  CHECK(found);
}

TEST_CASE("orthogonality relations hold exactly") {
  for (const auto& g : testcat::groups()) {
    const auto t = character_table(g);
    CHECK(check_orthogonality(t).ok());
    const auto& cls = g.classes();
    // independent column check
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (std::size_t l = 0; l < cls.size(); ++l) {
        Cyclotomic s;
        for (std::size_t i = 0; i < t.size(); ++i) s += t.irreducibles[i][k] * t.irreducibles[i][l].conj();
        CHECK(s == Cyclotomic(k == l ? static_cast<long>(cls.centralizer_order(k)) : 0L));
      }
    }
    std::size_t sum = 0;
    for (auto d : t.degrees) {
      CHECK(g.order() % d == 0);
      sum += d * d;
    }
    CHECK(sum == g.order());
    CHECK(t.size() == cls.size());
    CHECK(t.irreducibles[0] == std::vector<Cyclotomic>(cls.size(), Cyclotomic(1L)));
  }
}

TEST_CASE("table does not depend on the splitting prime") {
  for (const auto& g : {builtin::symmetric(5), builtin::dihedral(10), builtin::g108()}) {
    const auto base = character_table(g);
    DixonOptions opt;
    opt.min_prime = base.prime + 1;
    const auto other = character_table(g, opt);
    CHECK(other.prime > base.prime);
    CHECK(other.irreducibles == base.irreducibles);
  }
  CHECK(dixon_prime(24, 12) % 12 == 1);
  CHECK(dixon_prime(24, 12) * dixon_prime(24, 12) > 4 * 24);
  CHECK_THROWS_AS(dixon_prime(1000000, 12, 0, 50), Error);
}

TEST_CASE("permutation character counts fixed cosets") {
  for (const auto& pair : testcat::embeddings()) {
    const auto& g = pair.emb.supergroup;
    const auto& h = pair.emb.subgroup;
    const auto pi = permutation_character(pair.emb);
    const auto action = coset_action(pair.emb);
    const auto& cls = g.classes();
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const auto image = action.map(cls.representatives[k]);
      long fixed = 0;
      for (std::size_t p = 0; p < image.degree(); ++p) fixed += image[p] == p;
      CHECK(pi[k] == Cyclotomic(fixed));
    }
    CHECK(pi == induce_character(trivial_character(h), pair.emb));
  }
}

TEST_CASE("Frobenius reciprocity on random characters") {
  std::mt19937 rng(3);
  for (const auto& pair : testcat::embeddings()) {
    const auto gt = character_table(pair.emb.supergroup);
    const auto ht = character_table(pair.emb.subgroup);
    for (int trial = 0; trial < 10; ++trial) {
      const auto alpha = random_character(ht, rng);
      const auto beta = random_character(gt, rng);
      CHECK(inner_product(induce_character(alpha, pair.emb), beta) ==
            inner_product(alpha, restrict_character(beta, pair.emb)));
    }
  }
}

TEST_CASE("multiplicities and character calculus") {
  const auto t = character_table(builtin::symmetric(4));
  const auto reg = regular_character(t.group);
  const auto m = t.multiplicities(reg);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(m[i] == t.degrees[i]);
  // tensor squares decompose into nonnegative integers
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto sq = tensor(t.character(i), t.character(i));
    CHECK(sq == t.character(i) * t.character(i));
    for (const auto& c : t.multiplicities(sq)) CHECK(c >= 0);
  }
  // half the trivial character is a class function, not a character
  std::vector<Cyclotomic> half(t.size(), Cyclotomic(mpq_class(1, 2)));
  const ClassFunction f(t.group, half);
  CHECK(inner_product(f, trivial_character(t.group)) == Cyclotomic(mpq_class(1, 2)));
  try {
    t.multiplicities(f);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACharacter);
  }
  const auto fusion = class_fusion(SubgroupEmbedding::make(t.group, builtin::klein()));
  CHECK(fusion == std::vector<std::size_t>{0, 1, 1, 1});
}
