#include "subdepth/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "subdepth/error.hpp"

namespace subdepth {

namespace {

struct FieldData {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<long long> polynomial;
  // power_basis[t] = coefficients of zeta^t reduced mod Phi_n, t in [0, n)
  std::vector<std::vector<long long>> power_basis;
};

std::mutex field_mutex;
std::map<unsigned, std::shared_ptr<const FieldData>> field_cache;

std::vector<long long> compute_polynomial(unsigned n);

std::shared_ptr<const FieldData> field_locked(unsigned n) {
  if (auto it = field_cache.find(n); it != field_cache.end()) return it->second;
  auto data = std::make_shared<FieldData>();
  data->n = n;
  data->polynomial = compute_polynomial(n);
  data->phi = static_cast<unsigned>(data->polynomial.size() - 1);
  const unsigned phi = data->phi;
  std::vector<long long> current(phi, 0);
  current[0] = 1;
  for (unsigned t = 0; t < n; ++t) {
    data->power_basis.push_back(current);
    // multiply by x and reduce the x^phi term with the monic polynomial
    long long top = current[phi - 1];
    for (unsigned j = phi - 1; j > 0; --j) current[j] = current[j - 1];
    current[0] = 0;
    if (top != 0) {
      for (unsigned j = 0; j < phi; ++j) current[j] -= top * data->polynomial[j];
    }
  }
  field_cache.emplace(n, data);
  return data;
}

// (x^n - 1) / prod_{d | n, d < n} Phi_d
std::vector<long long> compute_polynomial(unsigned n) {
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = field_locked(d)->polynomial;
    const std::size_t dd = divisor.size() - 1;
    const std::size_t top = poly.size() - 1;
    std::vector<long long> quotient(top - dd + 1, 0);
    for (std::size_t i = top + 1; i-- > dd;) {
      long long c = poly[i];
      quotient[i - dd] = c;
      if (c != 0) {
        for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
      }
    }
    poly = std::move(quotient);
  }
  return poly;
}

std::shared_ptr<const FieldData> field(unsigned n) {
  if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "conductor must be positive");
  std::lock_guard lock(field_mutex);
  return field_locked(n);
}

}  // namespace

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(unsigned n) { return field(n)->polynomial; }

Cyclotomic::Cyclotomic() : numerators_(1, 0) {}
Cyclotomic::Cyclotomic(long value) : numerators_(1, value) {}
Cyclotomic::Cyclotomic(const mpz_class& value) : numerators_(1, value) {}
Cyclotomic::Cyclotomic(const mpq_class& value) : numerators_(1, value.get_num()), denominator_(value.get_den()) {}

Cyclotomic Cyclotomic::reduce_dense(unsigned n, const std::vector<mpz_class>& dense, mpz_class denominator) {
  auto f = field(n);
  Cyclotomic result;
  result.conductor_ = n;
  result.numerators_.assign(f->phi, 0);
  for (unsigned t = 0; t < n; ++t) {
    if (dense[t] == 0) continue;
    const auto& basis = f->power_basis[t];
    for (unsigned j = 0; j < f->phi; ++j) {
      if (basis[j] == 1) {
        result.numerators_[j] += dense[t];
      } else if (basis[j] == -1) {
        result.numerators_[j] -= dense[t];
      } else if (basis[j] != 0) {
        result.numerators_[j] += dense[t] * static_cast<long>(basis[j]);
      }
    }
  }
  result.denominator_ = std::move(denominator);
  result.normalize();
  return result;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
  std::vector<mpz_class> dense(n, 0);
  long m = static_cast<long>(n);
  dense[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  return reduce_dense(n, dense, 1);
}

Cyclotomic Cyclotomic::from_exponents(unsigned n, std::span<const mpz_class> coefficients,
                                      const mpz_class& denominator) {
  if (coefficients.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n) + " exponent coefficients");
  }
  if (denominator == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  std::vector<mpz_class> dense(coefficients.begin(), coefficients.end());
  mpz_class den = denominator;
  if (den < 0) {
    for (auto& c : dense) c = -c;
    den = -den;
  }
  return reduce_dense(n, dense, den);
}

Cyclotomic Cyclotomic::from_basis(unsigned n, const std::vector<mpq_class>& coefficients) {
  auto f = field(n);
  if (coefficients.size() != f->phi) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(f->phi) + " basis coefficients");
  }
  mpz_class den = 1;
  for (const auto& c : coefficients) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Cyclotomic result;
  result.conductor_ = n;
  result.numerators_.clear();
  for (const auto& c : coefficients) result.numerators_.push_back(c.get_num() * (den / c.get_den()));
  result.denominator_ = den;
  result.normalize();
  return result;
}

void Cyclotomic::normalize() {
  mpz_class g = denominator_;
  for (const auto& c : numerators_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1 && g != 0) {
    for (auto& c : numerators_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
  }
  if (is_zero()) denominator_ = 1;
}

std::vector<mpq_class> Cyclotomic::coefficients() const {
  std::vector<mpq_class> out;
  out.reserve(numerators_.size());
  for (const auto& c : numerators_) {
    mpq_class q(c, denominator_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

Cyclotomic Cyclotomic::in_conductor(unsigned m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) {
    throw Error(ErrorCode::InvalidInput, "conductor " + std::to_string(m) + " is not a multiple of " +
                                             std::to_string(conductor_));
  }
  if (is_rational()) {
    Cyclotomic result(*this);
    result.conductor_ = m;
    result.numerators_.resize(totient(m), 0);
    return result;
  }
  const unsigned step = m / conductor_;
  std::vector<mpz_class> dense(m, 0);
  for (std::size_t i = 0; i < numerators_.size(); ++i) dense[i * step] = numerators_[i];
  return reduce_dense(m, dense, denominator_);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : numerators_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < numerators_.size(); ++i) {
    if (numerators_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_integer() const { return is_rational() && denominator_ == 1; }

std::optional<mpq_class> Cyclotomic::rational() const {
  if (!is_rational()) return std::nullopt;
  mpq_class q(numerators_[0], denominator_);
  q.canonicalize();
  return q;
}

Cyclotomic Cyclotomic::galois(long k) const {
  const long n = static_cast<long>(conductor_);
  if (std::gcd(k, n) != 1) throw Error(ErrorCode::InvalidInput, "Galois exponent not coprime to conductor");
  if (is_rational()) return *this;
  std::vector<mpz_class> dense(conductor_, 0);
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    long e = ((static_cast<long>(i) * k) % n + n) % n;
    dense[static_cast<std::size_t>(e)] += numerators_[i];
  }
  return reduce_dense(conductor_, dense, denominator_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic result(*this);
  for (auto& c : result.numerators_) c = -c;
  return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const unsigned m = std::lcm(conductor_, rhs.conductor_);
  if (m != conductor_) *this = in_conductor(m);
  const Cyclotomic& b = rhs.conductor_ == m ? rhs : rhs.in_conductor(m);
  if (denominator_ == b.denominator_) {
    for (std::size_t i = 0; i < numerators_.size(); ++i) numerators_[i] += b.numerators_[i];
  } else {
    for (std::size_t i = 0; i < numerators_.size(); ++i) {
      numerators_[i] = numerators_[i] * b.denominator_ + b.numerators_[i] * denominator_;
    }
    denominator_ *= b.denominator_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const unsigned m = std::lcm(conductor_, rhs.conductor_);
  if (rhs.is_rational()) {
    if (m != conductor_) *this = in_conductor(m);
    for (auto& c : numerators_) c *= rhs.numerators_[0];
    denominator_ *= rhs.denominator_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    Cyclotomic result = rhs.in_conductor(m);
    for (auto& c : result.numerators_) c *= numerators_[0];
    result.denominator_ *= denominator_;
    result.normalize();
    return *this = std::move(result);
  }
  const Cyclotomic a = in_conductor(m);
  const Cyclotomic b = rhs.in_conductor(m);
  std::vector<mpz_class> dense(m, 0);
  for (std::size_t i = 0; i < a.numerators_.size(); ++i) {
    if (a.numerators_[i] == 0) continue;
    for (std::size_t j = 0; j < b.numerators_.size(); ++j) {
      if (b.numerators_[j] == 0) continue;
      dense[(i + j) % m] += a.numerators_[i] * b.numerators_[j];
    }
  }
  return *this = reduce_dense(m, dense, a.denominator_ * b.denominator_);
}

Cyclotomic& Cyclotomic::operator/=(const mpq_class& rhs) {
  if (rhs == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  for (auto& c : numerators_) c *= rhs.get_den();
  denominator_ *= rhs.get_num();
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    for (auto& c : numerators_) c = -c;
  }
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.denominator_ == b.denominator_ && a.numerators_ == b.numerators_;
  if (a.is_rational() && b.is_rational()) {
    return a.denominator_ == b.denominator_ && a.numerators_[0] == b.numerators_[0];
  }
  const unsigned m = std::lcm(a.conductor_, b.conductor_);
  return a.in_conductor(m) == b.in_conductor(m);
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned m = std::lcm(a.conductor_, b.conductor_);
  const Cyclotomic x = a.in_conductor(m);
  const Cyclotomic y = b.in_conductor(m);
  for (std::size_t i = 0; i < x.numerators_.size(); ++i) {
    int s = cmp(x.numerators_[i] * y.denominator_, y.numerators_[i] * x.denominator_);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  auto coeffs = coefficients();
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    mpq_class c = coeffs[i];
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (i > 0) {
      power = "E(" + std::to_string(conductor_) + ")";
      if (i > 1) power += "^" + std::to_string(i);
    }
    if (i == 0 || c != 1) {
      out += c.get_str();
      if (!power.empty()) out += "*";
    }
    out += power;
  }
  return out.empty() ? "0" : out;
}

std::complex<double> Cyclotomic::approximate() const {
  std::complex<double> sum = 0;
  const double den = denominator_.get_d();
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (numerators_[i] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / conductor_;
    sum += numerators_[i].get_d() / den * std::polar(1.0, angle);
  }
  return sum;
}

}  // namespace subdepth
