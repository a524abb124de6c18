#pragma once

#include <compare>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace subdepth {

/// Euler's totient.
unsigned totient(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(unsigned n);

/// Exact element of Q(zeta_n), stored in the power basis
/// {1, zeta, ..., zeta^(phi(n)-1)} reduced modulo Phi_n, as integer
/// numerators over one positive common denominator in lowest terms.
///
/// Binary operations work in Q(zeta_lcm) of the two conductors, so values
/// sharing a conductor stay in that conductor.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT: implicit from integers
  Cyclotomic(const mpz_class& value);
  Cyclotomic(const mpq_class& value);

  /// zeta_n^k
  static Cyclotomic root_of_unity(unsigned n, long k);
  /// sum_t coefficients[t] * zeta_n^t / denominator, for t in [0, n)
  static Cyclotomic from_exponents(unsigned n, std::span<const mpz_class> coefficients,
                                   const mpz_class& denominator = 1);
  /// From power-basis coefficients (length phi(n)).
  static Cyclotomic from_basis(unsigned n, const std::vector<mpq_class>& coefficients);

  unsigned conductor() const noexcept { return conductor_; }
  std::vector<mpq_class> coefficients() const;
  const std::vector<mpz_class>& numerators() const noexcept { return numerators_; }
  const mpz_class& denominator() const noexcept { return denominator_; }

  /// The same number written in Q(zeta_m); m must be a multiple of the conductor.
  Cyclotomic in_conductor(unsigned m) const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  std::optional<mpq_class> rational() const;

  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, conductor) = 1.
  Cyclotomic galois(long k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const mpq_class& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const mpq_class& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Total order for a fixed conductor: lexicographic on power-basis
  /// coefficients after lifting both to the common conductor.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// e.g. "2 - 3*E(3)" in the power basis; rationals print as "p/q".
  std::string to_string() const;
  /// Non-authoritative floating point value.
  std::complex<double> approximate() const;

 private:
  void normalize();
  static Cyclotomic reduce_dense(unsigned n, const std::vector<mpz_class>& dense, mpz_class denominator);

  unsigned conductor_ = 1;
  std::vector<mpz_class> numerators_;
  mpz_class denominator_ = 1;
};

}  // namespace subdepth
