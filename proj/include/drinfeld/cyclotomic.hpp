#ifndef DRINFELD_CYCLOTOMIC_HPP
#define DRINFELD_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "drinfeld/fields.hpp"

namespace drinfeld {

/// Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}, reduced
/// modulo the N-th cyclotomic polynomial.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned conductor);

  unsigned conductor() const { return n_; }
  unsigned degree() const { return phi_; }
  /// Coefficients of Phi_N, low degree first, monic, length phi(N)+1.
  const std::vector<long long>& cyclotomic_polynomial() const { return poly_; }

  /// Reduces coeffs (any length) modulo Phi_N in place; result has length phi(N).
  void reduce(std::vector<mpz_class>& coeffs) const;

 private:
  unsigned n_;
  unsigned phi_;
  std::vector<long long> poly_;
  // nonzero (degree, coefficient) of Phi_N below the leading term
  std::vector<std::pair<unsigned, long long>> tail_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Exact element of Q(zeta_N): integer numerators over one positive
/// common denominator, with gcd(content, den) = 1. Equal elements have
/// identical representations.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(FieldPtr field);
  CycNum(FieldPtr field, const mpq_class& r);
  CycNum(FieldPtr field, long long n) : CycNum(std::move(field), mpq_class(static_cast<long>(n))) {}

  const FieldPtr& field() const { return field_; }
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  mpq_class coefficient(unsigned k) const;

  bool is_zero() const;
  bool is_rational() const;
  /// n when the value is exactly the rational integer n.
  std::optional<mpz_class> as_integer() const;
  std::optional<mpq_class> as_rational() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const mpq_class& r);
  CycNum& operator/=(const mpq_class& r);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const mpq_class& r) { return a *= r; }
  friend CycNum operator*(const mpq_class& r, CycNum a) { return a *= r; }
  friend CycNum operator/(CycNum a, const mpq_class& r) { return a /= r; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Throws ZeroElement.
  CycNum inverse() const;
  /// Image under zeta -> zeta^{-1}.
  CycNum conj() const;
  CycNum pow(unsigned e) const;

  std::complex<double> approx() const;
  std::string approx_string() const;
  /// Human-readable exact form, e.g. "2 - 1/3*z^5" with z = zeta_N.
  std::string to_string() const;
  /// {"exact": [[k, num, den], ...], "approx": "..."}
  nlohmann::json to_json() const;

  /// Builds sum_k coeffs[k] zeta_N^k (coeffs may have any length).
  static CycNum from_powers(FieldPtr field, std::vector<mpz_class> coeffs, mpz_class den = 1);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

/// zeta_order^power. Throws OrderDoesNotDivideN.
CycNum root_of_unity(const FieldPtr& field, unsigned order, long long power);

/// Accumulates integer multiples of zeta_N^k, reducing once at the end.
class RootSum {
 public:
  explicit RootSum(FieldPtr field);
  void add(long long exponent, long long count = 1);
  /// Adds count * zeta_order^power.
  void add_root(unsigned order, long long power, long long count = 1);
  CycNum value() const;

 private:
  FieldPtr field_;
  std::vector<long long> counts_;
};

/// zeta_{q^2-1}^{discrete_log(x)}. Throws ZeroElement.
CycNum teichmueller_lift(Fq2 x, const FieldTower& tower, const FieldPtr& field);
/// Exponent e with lift(x) = zeta_N^e.
long long teichmueller_exponent(Fq2 x, const FieldTower& tower, const FieldPtr& field);

using CycMatrix = std::vector<std::vector<CycNum>>;

/// Solves A X = B exactly for every column of B (given as a list of
/// right-hand sides). Throws SingularMatrix.
std::vector<std::vector<CycNum>> linear_solve(const CycMatrix& a,
                                              const std::vector<std::vector<CycNum>>& rhs);
std::vector<CycNum> linear_solve(const CycMatrix& a, const std::vector<CycNum>& b);
CycNum determinant(const CycMatrix& a);

/// Field of conductor p(q^2-1) for the given tower.
FieldPtr ambient_field(const FieldTower& tower);

nlohmann::json mpz_to_json(const mpz_class& z);

}  // namespace drinfeld

#endif  // DRINFELD_CYCLOTOMIC_HPP
