#include "subdepth/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subdepth/error.hpp"
#include "subdepth/kernels.hpp"

namespace subdepth {

namespace {

using u64 = std::uint64_t;

void require_same_group(const PermutationGroup& a, const PermutationGroup& b) {
  if (!a.same_as(b) && !(a == b)) throw Error(ErrorCode::GroupMismatch, "class functions on different groups");
}

// --- arithmetic in F_p, p < 2^32 ------------------------------------------

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 of(long long x) const {
    long long m = x % static_cast<long long>(p);
    return static_cast<u64>(m < 0 ? m + static_cast<long long>(p) : m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(const Field& f) {
  auto factors = prime_factors(f.p - 1);
  for (u64 g = 2; g < f.p; ++g) {
    bool generator = std::all_of(factors.begin(), factors.end(),
                                 [&](u64 q) { return f.pow(g, (f.p - 1) / q) != 1; });
    if (generator) return g;
  }
  return 1;  // p = 2
}

using Row = std::vector<u64>;

/// Row-reduce in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(const Field& f, std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    u64 inv = f.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      u64 factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[rank][j]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

/// Basis of {y : y^T A = lambda y^T}, A square.
std::vector<Row> left_eigenspace(const Field& f, const std::vector<Row>& a, u64 lambda) {
  const std::size_t n = a.size();
  // rows of (A - lambda I)^T
  std::vector<Row> m(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[j][i] = i == j ? f.sub(a[i][j], lambda) : a[i][j];
  }
  auto pivots = rref(f, m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row y(n, 0);
    y[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = f.sub(0, m[r][free]);
    basis.push_back(std::move(y));
  }
  return basis;
}

/// Characteristic polynomial via reduction to Hessenberg form; constant term first.
std::vector<u64> characteristic_polynomial(const Field& f, std::vector<Row> h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 inv = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      u64 u = f.mul(h[i][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    auto& next = p[m + 1];
    next.assign(m + 2, 0);
    for (std::size_t d = 0; d <= m; ++d) {
      next[d + 1] = f.add(next[d + 1], p[m][d]);
      next[d] = f.sub(next[d], f.mul(h[m][m], p[m][d]));
    }
    u64 t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t = f.mul(t, h[i + 1][i]);
      u64 c = f.mul(t, h[i][m]);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = f.sub(next[d], f.mul(c, p[i][d]));
    }
  }
  return p[n];
}

std::vector<u64> roots(const Field& f, const std::vector<u64>& poly) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t d = poly.size(); d-- > 0;) v = f.add(f.mul(v, x), poly[d]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

struct Space {
  std::vector<Row> basis;  // reduced row echelon form
  std::vector<std::size_t> pivots;
};

/// Splits `space` into eigenspaces of the class matrix (row-major r x r).
std::vector<Space> split(const Field& f, const Space& space, const std::vector<std::uint32_t>& matrix, std::size_t r) {
  const std::size_t d = space.basis.size();
  // restricted operator: M b_l = sum_m a[l][m] b_m, read off at the pivots
  std::vector<Row> a(d, Row(d));
  for (std::size_t l = 0; l < d; ++l) {
    const Row& b = space.basis[l];
    for (std::size_t m = 0; m < d; ++m) {
      const std::size_t i = space.pivots[m];
      u64 s = 0;
      for (std::size_t k = 0; k < r; ++k) {
        if (matrix[i * r + k] != 0 && b[k] != 0) s = f.add(s, f.mul(matrix[i * r + k] % f.p, b[k]));
      }
      a[l][m] = s;
    }
  }
  std::vector<Space> parts;
  std::size_t total = 0;
  for (u64 lambda : roots(f, characteristic_polynomial(f, a))) {
    auto ys = left_eigenspace(f, a, lambda);
    Space part;
    for (const auto& y : ys) {
      Row v(r, 0);
      for (std::size_t l = 0; l < d; ++l) {
        if (y[l] == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(y[l], space.basis[l][k]));
      }
      part.basis.push_back(std::move(v));
    }
    part.pivots = rref(f, part.basis, r);
    total += part.basis.size();
    parts.push_back(std::move(part));
  }
  if (total != d) {
    throw Error(ErrorCode::LiftInconsistent, "class matrix is not diagonalizable over F_" + std::to_string(f.p));
  }
  return parts;
}

}  // namespace

// --- class functions -------------------------------------------------------

ClassFunction::ClassFunction(PermutationGroup group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.classes().size()) {
    throw Error(ErrorCode::DimensionMismatch, "class function has " + std::to_string(values_.size()) +
                                                  " values for " + std::to_string(group_.classes().size()) +
                                                  " classes");
  }
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  require_same_group(group_, rhs.group_);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += rhs.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& rhs) {
  require_same_group(group_, rhs.group_);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] *= rhs.values_[k];
  return *this;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group(), b.group());
  const auto& cls = a.group().classes();
  Cyclotomic sum;
  for (std::size_t k = 0; k < cls.size(); ++k) {
    sum += Cyclotomic(static_cast<long>(cls.class_sizes[k])) * a[k] * b[k].conj();
  }
  return sum / mpq_class(static_cast<unsigned long>(cls.group_order));
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) { return a * b; }

ClassFunction trivial_character(const PermutationGroup& g) {
  return ClassFunction(g, std::vector<Cyclotomic>(g.classes().size(), Cyclotomic(1)));
}

ClassFunction regular_character(const PermutationGroup& g) {
  std::vector<Cyclotomic> v(g.classes().size(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<long>(g.order()));
  return ClassFunction(g, std::move(v));
}

ClassFunction CharacterTable::character(std::size_t i) const { return ClassFunction(group, irreducibles.at(i)); }

std::vector<Cyclotomic> CharacterTable::inner_products(const ClassFunction& chi) const {
  require_same_group(group, chi.group());
  std::vector<Cyclotomic> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(inner_product(chi, character(i)));
  return out;
}

std::vector<mpz_class> CharacterTable::multiplicities(const ClassFunction& chi) const {
  std::vector<mpz_class> out;
  for (const auto& m : inner_products(chi)) {
    if (!m.is_integer() || m.numerators()[0] < 0) {
      throw Error(ErrorCode::NotACharacter, "inner product " + m.to_string() + " is not a nonnegative integer");
    }
    out.push_back(m.numerators()[0]);
  }
  return out;
}

// --- Dixon-Schneider ---------------------------------------------------------

ClassCoefficients class_mult_coefficients(const PermutationGroup& g) {
  const std::size_t r = g.classes().size();
  ClassCoefficients out{r, std::vector<std::uint32_t>(r * r * r, 0)};
  for (std::size_t j = 0; j < r; ++j) {
    // class_matrix(j)(i, k) counts (x, y) in C_j x C_i with xy = z_k
    auto m = kernels::class_matrix_parallel(g, j);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) out.data[(j * r + i) * r + k] = m[i * r + k];
    }
  }
  return out;
}

std::uint64_t dixon_prime(std::size_t group_order, std::size_t exponent, std::uint64_t min_prime,
                          std::uint64_t bound) {
  const u64 four_n = 4 * static_cast<u64>(group_order);
  for (u64 p = exponent + 1; p <= bound; p += exponent) {
    if (p * p <= four_n || p < min_prime) continue;
    if (is_prime(p)) return p;
  }
  throw Error(ErrorCode::PrimeSearchFailed, "no prime = 1 mod " + std::to_string(exponent) + " below " +
                                                std::to_string(bound));
}

CharacterTable character_table(const PermutationGroup& g, const DixonOptions& options) {
  const auto& cls = g.classes();
  const std::size_t r = cls.size();
  const std::size_t order = g.order();
  const std::size_t e = cls.exponent;
  const Field f{dixon_prime(order, e, options.min_prime, options.prime_bound)};

  std::vector<Space> spaces(1);
  spaces[0].basis.assign(r, Row(r, 0));
  for (std::size_t i = 0; i < r; ++i) spaces[0].basis[i][i] = 1;
  spaces[0].pivots.resize(r);
  std::iota(spaces[0].pivots.begin(), spaces[0].pivots.end(), 0);

  auto all_lines = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; });
  };
  for (std::size_t j = 1; j < r && !all_lines(); ++j) {
    auto matrix = kernels::class_matrix_parallel(g, j);
    std::vector<Space> next;
    for (const auto& space : spaces) {
      if (space.basis.size() == 1) {
        next.push_back(space);
        continue;
      }
      for (auto& part : split(f, space, matrix, r)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r || !all_lines()) {
    throw Error(ErrorCode::LiftInconsistent, "class matrices did not split into " + std::to_string(r) + " lines");
  }

  // central characters -> character values mod p
  const u64 root = f.pow(primitive_root(f), (f.p - 1) / e);
  const auto max_degree = static_cast<u64>(std::sqrt(static_cast<double>(order)) + 1);
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::size_t> degrees;
  for (const auto& space : spaces) {
    Row w = space.basis[0];
    const u64 scale = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, scale);
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = f.add(s, f.mul(f.mul(w[k], w[cls.inverse_class[k]]), f.inv(cls.class_sizes[k] % f.p)));
    }
    const u64 square = f.mul(order % f.p, f.inv(s));
    u64 degree = 0;
    for (u64 d = 1; d <= max_degree; ++d) {
      if (d * d % f.p == square) {
        degree = d;
        break;
      }
    }
    if (degree == 0 || order % degree != 0) {
      throw Error(ErrorCode::LiftInconsistent, "no admissible degree for a central character");
    }
    Row values(r);
    for (std::size_t k = 0; k < r; ++k) {
      values[k] = f.mul(f.mul(w[k], degree % f.p), f.inv(cls.class_sizes[k] % f.p));
    }
    // eigenvalue multiplicities of g_k, then chi(g_k) = sum_u m_u zeta_o^u
    std::vector<Cyclotomic> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t o = cls.element_orders[k];
      const u64 z = f.pow(root, e / o);
      const u64 inv_o = f.inv(o % f.p);
      std::vector<mpz_class> dense(e, 0);
      for (std::size_t u = 0; u < o; ++u) {
        u64 m = 0;
        for (std::size_t t = 0; t < o; ++t) {
          u64 twiddle = f.pow(z, (o - (t * u) % o) % o);
          m = f.add(m, f.mul(values[cls.power_map(t, k)], twiddle));
        }
        m = f.mul(m, inv_o);
        if (m > degree) {
          throw Error(ErrorCode::LiftInconsistent, "eigenvalue multiplicity " + std::to_string(m) +
                                                       " exceeds degree " + std::to_string(degree));
        }
        dense[u * (e / o)] = static_cast<unsigned long>(m);
      }
      row[k] = Cyclotomic::from_exponents(static_cast<unsigned>(e), dense);
    }
    rows.push_back(std::move(row));
    degrees.push_back(degree);
  }

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(rows[i].begin(), rows[i].end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); });
  };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    bool ta = is_trivial(a);
    bool tb = is_trivial(b);
    if (ta != tb) return ta;
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return std::lexicographical_compare(rows[a].begin(), rows[a].end(), rows[b].begin(), rows[b].end());
  });

  CharacterTable table;
  table.group = g;
  table.conductor = static_cast<unsigned>(e);
  table.prime = f.p;
  for (auto i : perm) {
    table.irreducibles.push_back(std::move(rows[i]));
    table.degrees.push_back(degrees[i]);
  }
  if (options.verify) {
    std::size_t sum = 0;
    for (auto d : table.degrees) sum += d * d;
    if (sum != order) throw Error(ErrorCode::LiftInconsistent, "degrees do not square-sum to the group order");
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i; j < r; ++j) {
        Cyclotomic ip = inner_product(table.character(i), table.character(j));
        if (ip != Cyclotomic(i == j ? 1 : 0)) {
          throw Error(ErrorCode::LiftInconsistent, "lifted characters are not orthonormal");
        }
      }
    }
  }
  return table;
}

OrthogonalityCheck check_orthogonality(const CharacterTable& table) {
  OrthogonalityCheck check;
  const auto& cls = table.group.classes();
  const std::size_t r = table.size();
  std::size_t sum = 0;
  for (auto d : table.degrees) sum += d * d;
  check.degrees = sum == table.group.order() && r == cls.size();
  if (r != cls.size()) return check;
  check.rows = true;
  for (std::size_t i = 0; i < r && check.rows; ++i) {
    for (std::size_t j = 0; j < r && check.rows; ++j) {
      check.rows = inner_product(table.character(i), table.character(j)) == Cyclotomic(i == j ? 1 : 0);
    }
  }
  check.columns = true;
  for (std::size_t k = 0; k < r && check.columns; ++k) {
    for (std::size_t l = 0; l < r && check.columns; ++l) {
      Cyclotomic s;
      for (std::size_t i = 0; i < r; ++i) s += table.irreducibles[i][k] * table.irreducibles[i][l].conj();
      long expected = k == l ? static_cast<long>(cls.centralizer_order(k)) : 0;
      check.columns = s == Cyclotomic(expected);
    }
  }
  return check;
}

// --- restriction and induction ---------------------------------------------

std::vector<std::size_t> class_fusion(const SubgroupEmbedding& emb) {
  const auto& hcls = emb.subgroup.classes();
  const auto& gcls = emb.supergroup.classes();
  std::vector<std::size_t> fusion;
  fusion.reserve(hcls.size());
  for (const auto& rep : hcls.representatives) {
    auto idx = emb.supergroup.index_of(rep);
    if (!idx) throw Error(ErrorCode::NotASubgroup, rep.to_cycle_string() + " is not in the supergroup");
    fusion.push_back(gcls.class_of[*idx]);
  }
  return fusion;
}

ClassFunction restrict_character(const ClassFunction& chi, const SubgroupEmbedding& emb) {
  require_same_group(chi.group(), emb.supergroup);
  std::vector<Cyclotomic> v;
  for (auto k : class_fusion(emb)) v.push_back(chi[k]);
  return ClassFunction(emb.subgroup, std::move(v));
}

ClassFunction induce_character(const ClassFunction& chi, const SubgroupEmbedding& emb) {
  require_same_group(chi.group(), emb.subgroup);
  const auto& hcls = emb.subgroup.classes();
  const auto& gcls = emb.supergroup.classes();
  const auto fusion = class_fusion(emb);
  std::vector<Cyclotomic> sums(gcls.size());
  for (std::size_t c = 0; c < hcls.size(); ++c) {
    sums[fusion[c]] += Cyclotomic(static_cast<long>(hcls.class_sizes[c])) * chi[c];
  }
  const mpq_class h_order(static_cast<unsigned long>(emb.subgroup.order()));
  for (std::size_t k = 0; k < gcls.size(); ++k) {
    sums[k] = sums[k] * Cyclotomic(static_cast<long>(gcls.centralizer_order(k))) / h_order;
  }
  return ClassFunction(emb.supergroup, std::move(sums));
}

ClassFunction permutation_character(const SubgroupEmbedding& emb) {
  const auto& g = emb.supergroup;
  const auto& h = emb.subgroup;
  std::vector<Permutation> inverses;
  {
    std::vector<bool> covered(g.order(), false);
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (covered[i]) continue;
      const auto& x = g.elements()[i];
      inverses.push_back(x.inverse());
      for (const auto& y : h.elements()) covered[*g.index_of(y * x)] = true;
    }
  }
  const auto& cls = g.classes();
  std::vector<Cyclotomic> v;
  for (const auto& rep : cls.representatives) {
    // Hx g = Hx iff x g x^-1 in H
    long fixed = std::count_if(inverses.begin(), inverses.end(),
                               [&](const Permutation& x_inv) { return h.contains(rep.conjugated_by(x_inv)); });
    v.emplace_back(fixed);
  }
  return ClassFunction(g, std::move(v));
}

}  // namespace subdepth
