#include "drinfeld/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include "drinfeld/error.hpp"

namespace drinfeld {
namespace {

int mobius(unsigned n) {
  int result = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// a * (x^d - 1)
std::vector<long long> times_binomial(const std::vector<long long>& a, unsigned d) {
  std::vector<long long> out(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + d] += a[i];
    out[i] -= a[i];
  }
  return out;
}

// a / (x^d - 1), exact.
std::vector<long long> divide_binomial(std::vector<long long> a, unsigned d) {
  std::vector<long long> quotient(a.size() - d, 0);
  for (std::size_t i = a.size(); i-- > d;) {
    const long long c = a[i];
    quotient[i - d] = c;
    a[i - d] += c;
    a[i] = 0;
  }
  return quotient;
}

constexpr std::size_t kSmallBits = 40;

bool to_small(const std::vector<mpz_class>& v, std::vector<long long>& out) {
  out.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mpz_sizeinbase(v[i].get_mpz_t(), 2) > kSmallBits) return false;
    out[i] = v[i].get_si();
  }
  return true;
}

mpz_class from_i128(__int128 v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return mpz_class(static_cast<long>(v));
  }
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull);
  return negative ? mpz_class(-r) : r;
}

std::vector<mpq_class> to_rational_vector(const CycNum& a) {
  std::vector<mpq_class> v(a.numerators().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = mpq_class(a.numerators()[i], a.denominator());
    v[i].canonicalize();
  }
  return v;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned conductor) : n_(conductor), phi_(euler_phi(conductor)) {
  std::vector<long long> numer{1};
  std::vector<unsigned> denoms;
  for (unsigned d = 1; d <= n_; ++d) {
    if (n_ % d != 0) continue;
    const int mu = mobius(n_ / d);
    if (mu == 1) numer = times_binomial(numer, d);
    if (mu == -1) denoms.push_back(d);
  }
  for (unsigned d : denoms) numer = divide_binomial(std::move(numer), d);
  // For n = 1 the product is x - 1 directly; for n > 1 the signs cancel.
  if (numer.back() < 0) {
    for (auto& c : numer) c = -c;
  }
  numer.resize(phi_ + 1);
  poly_ = std::move(numer);
  for (unsigned d = 0; d < phi_; ++d) {
    if (poly_[d] != 0) tail_.emplace_back(d, poly_[d]);
  }
}

void CyclotomicField::reduce(std::vector<mpz_class>& coeffs) const {
  for (std::size_t i = coeffs.size(); i-- > phi_;) {
    if (coeffs[i] == 0) continue;
    const mpz_class c = coeffs[i];
    const std::size_t shift = i - phi_;
    for (const auto& [d, t] : tail_) coeffs[shift + d] -= c * static_cast<long>(t);
    coeffs[i] = 0;
  }
  coeffs.resize(phi_);
}

CycNum::CycNum(FieldPtr field) : field_(std::move(field)), num_(field_->degree()) {}

CycNum::CycNum(FieldPtr field, const mpq_class& r) : CycNum(std::move(field)) {
  num_[0] = r.get_num();
  den_ = r.get_den();
}

CycNum CycNum::from_powers(FieldPtr field, std::vector<mpz_class> coeffs, mpz_class den) {
  CycNum out;
  out.field_ = std::move(field);
  if (coeffs.size() < out.field_->degree()) coeffs.resize(out.field_->degree());
  out.field_->reduce(coeffs);
  out.num_ = std::move(coeffs);
  out.den_ = std::move(den);
  out.normalize();
  return out;
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) {
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
}

mpq_class CycNum::coefficient(unsigned k) const {
  mpq_class r(num_.at(k), den_);
  r.canonicalize();
  return r;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

std::optional<mpz_class> CycNum::as_integer() const {
  if (!is_rational() || den_ != 1) return std::nullopt;
  return num_[0];
}

std::optional<mpq_class> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coefficient(0);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const mpq_class& r) {
  for (auto& c : num_) c *= r.get_num();
  den_ *= r.get_den();
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const mpq_class& r) {
  if (r == 0) throw Error(ErrorCode::ZeroElement, "division by zero");
  mpq_class inv = 1 / r;
  return *this *= inv;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  const std::size_t n = a.num_.size();
  std::vector<mpz_class> prod(2 * n);
  std::vector<long long> sa;
  std::vector<long long> sb;
  if (to_small(a.num_, sa) && to_small(b.num_, sb)) {
    std::vector<__int128> acc(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (sa[i] == 0) continue;
      const __int128 x = sa[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (sb[j] != 0) acc[i + j] += x * sb[j];
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k] != 0) prod[k] = from_i128(acc[k]);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
  }
  return CycNum::from_powers(a.field_, std::move(prod), a.den_ * b.den_);
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_ && a.field_->conductor() != b.field_->conductor()) return false;
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::pow(unsigned e) const {
  CycNum result(field_, 1);
  CycNum base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

CycNum CycNum::conj() const {
  const unsigned n = field_->conductor();
  std::vector<mpz_class> coeffs(n);
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] != 0) coeffs[(n - k) % n] += num_[k];
  }
  return from_powers(field_, std::move(coeffs), den_);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (auto r = as_rational()) return CycNum(field_, 1 / *r);

  // Find the first linear dependency among 1, a, a^2, ...; that is the
  // minimal polynomial P, and a^{-1} = -(P(a) - P(0)) / (a P(0)).
  struct Row {
    std::vector<mpq_class> vec;
    std::vector<mpq_class> comb;
    std::size_t pivot;
  };
  const std::size_t dim = num_.size();
  std::vector<Row> rows;
  std::vector<CycNum> powers{CycNum(field_, 1)};
  for (std::size_t k = 0; k <= dim; ++k) {
    std::vector<mpq_class> v = to_rational_vector(powers[k]);
    std::vector<mpq_class> comb(dim + 1);
    comb[k] = 1;
    for (const Row& row : rows) {
      const mpq_class c = v[row.pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        if (row.vec[i] != 0) v[i] -= c * row.vec[i];
      }
      for (std::size_t i = 0; i <= k; ++i) {
        if (row.comb[i] != 0) comb[i] -= c * row.comb[i];
      }
    }
    const auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
    if (it == v.end()) {
      const mpq_class constant = comb[0];
      CycNum s(field_);
      for (std::size_t j = 1; j <= k; ++j) {
        if (comb[j] != 0) s += powers[j - 1] * comb[j];
      }
      return s * mpq_class(-1 / constant);
    }
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const mpq_class scale = 1 / v[pivot];
    for (auto& x : v) x *= scale;
    for (auto& x : comb) x *= scale;
    rows.push_back(Row{std::move(v), std::move(comb), pivot});
    powers.push_back(powers[k] * *this);
  }
  throw Error(ErrorCode::SingularMatrix, "no minimal polynomial found");
}

std::complex<double> CycNum::approx() const {
  const unsigned n = field_->conductor();
  std::complex<long double> acc = 0;
  const long double den = den_.get_d();
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    acc += static_cast<long double>(num_[k].get_d()) / den * std::polar(1.0L, angle);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string CycNum::approx_string() const {
  auto z = approx();
  auto clean = [](double x) { return std::abs(x) < 5e-10 ? 0.0 : x; };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", clean(z.real()), clean(z.imag()));
  return buf;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    mpq_class c = coefficient(static_cast<unsigned>(k));
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

nlohmann::json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::json CycNum::to_json() const {
  nlohmann::json exact = nlohmann::json::array();
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    mpq_class c = coefficient(static_cast<unsigned>(k));
    exact.push_back({k, mpz_to_json(c.get_num()), mpz_to_json(c.get_den())});
  }
  return {{"exact", exact}, {"approx", approx_string()}};
}

CycNum root_of_unity(const FieldPtr& field, unsigned order, long long power) {
  const unsigned n = field->conductor();
  if (order == 0 || n % order != 0) {
    throw Error(ErrorCode::OrderDoesNotDivideN,
                "order " + std::to_string(order) + " does not divide " + std::to_string(n));
  }
  RootSum s(field);
  s.add_root(order, power);
  return s.value();
}

RootSum::RootSum(FieldPtr field) : field_(std::move(field)), counts_(field_->conductor(), 0) {}

void RootSum::add(long long exponent, long long count) {
  const long long n = field_->conductor();
  long long r = exponent % n;
  if (r < 0) r += n;
  counts_[static_cast<std::size_t>(r)] += count;
}

void RootSum::add_root(unsigned order, long long power, long long count) {
  const unsigned n = field_->conductor();
  if (order == 0 || n % order != 0) {
    throw Error(ErrorCode::OrderDoesNotDivideN,
                "order " + std::to_string(order) + " does not divide " + std::to_string(n));
  }
  const long long step = n / order;
  add(step * (power % static_cast<long long>(order)), count);
}

CycNum RootSum::value() const {
  std::vector<mpz_class> coeffs(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] != 0) coeffs[k] = static_cast<long>(counts_[k]);
  }
  return CycNum::from_powers(field_, std::move(coeffs));
}

long long teichmueller_exponent(Fq2 x, const FieldTower& tower, const FieldPtr& field) {
  const unsigned order = tower.unit_order();
  if (field->conductor() % order != 0) {
    throw Error(ErrorCode::OrderDoesNotDivideN, "field conductor not divisible by q^2-1");
  }
  return static_cast<long long>(field->conductor() / order) * tower.discrete_log(x);
}

CycNum teichmueller_lift(Fq2 x, const FieldTower& tower, const FieldPtr& field) {
  RootSum s(field);
  s.add(teichmueller_exponent(x, tower, field));
  return s.value();
}

FieldPtr ambient_field(const FieldTower& tower) {
  return std::make_shared<const CyclotomicField>(tower.p() * tower.unit_order());
}

namespace {

// Pivot preference: rational entries first, then the sparsest.
std::size_t pivot_cost(const CycNum& x) {
  if (x.is_rational()) return 0;
  return static_cast<std::size_t>(
      std::count_if(x.numerators().begin(), x.numerators().end(), [](const mpz_class& c) { return c != 0; }));
}

// Gauss-Jordan on [A | B]; returns the product of pivots (up to the sign of
// the row permutation, folded in).
CycNum eliminate(CycMatrix a, std::vector<std::vector<CycNum>>& rhs) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::SingularMatrix, "matrix is not square");
  }
  if (n == 0) throw Error(ErrorCode::SingularMatrix, "empty matrix");
  const FieldPtr field = a[0][0].field();
  for (const auto& b : rhs) {
    if (b.size() != n) throw Error(ErrorCode::SingularMatrix, "right-hand side has wrong length");
  }
  CycNum det(field, 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const std::size_t cost = pivot_cost(a[r][col]);
      if (best == n || cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (best == n) throw Error(ErrorCode::SingularMatrix, "zero pivot in column " + std::to_string(col));
    if (best != col) {
      std::swap(a[best], a[col]);
      for (auto& b : rhs) std::swap(b[best], b[col]);
      det = -det;
    }
    det = det * a[col][col];
    const CycNum inv = a[col][col].inverse();
    for (std::size_t c = col; c < n; ++c) a[col][c] = a[col][c] * inv;
    for (auto& b : rhs) b[col] = b[col] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const CycNum factor = a[r][col];
      for (std::size_t c = col; c < n; ++c) {
        if (!a[col][c].is_zero()) a[r][c] -= factor * a[col][c];
      }
      for (auto& b : rhs) {
        if (!b[col].is_zero()) b[r] -= factor * b[col];
      }
    }
  }
  return det;
}

}  // namespace

std::vector<std::vector<CycNum>> linear_solve(const CycMatrix& a, const std::vector<std::vector<CycNum>>& rhs) {
  auto work = rhs;
  eliminate(a, work);
  return work;
}

std::vector<CycNum> linear_solve(const CycMatrix& a, const std::vector<CycNum>& b) {
  return linear_solve(a, std::vector<std::vector<CycNum>>{b}).front();
}

CycNum determinant(const CycMatrix& a) {
  std::vector<std::vector<CycNum>> none;
  try {
    return eliminate(a, none);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix && !a.empty() && a.size() == a[0].size()) {
      return CycNum(a[0][0].field());
    }
    throw;
  }
}

}  // namespace drinfeld
