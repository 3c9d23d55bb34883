#ifndef DRINFELD_FIELDS_HPP
#define DRINFELD_FIELDS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace drinfeld {

/// Element of F_{q^2}, stored as its coefficient vector in the basis
/// 1, beta, ..., beta^{2m-1} packed base p (coefficient of beta^i is digit i).
/// Elements of F_q are the Frobenius-fixed values of the same type.
struct Fq2 {
  std::uint16_t v = 0;

  friend constexpr auto operator<=>(Fq2, Fq2) = default;
};

/// The tower F_p <= F_q <= F_{q^2} with log/antilog tables.
///
/// F_{q^2} is built as F_p[x]/(f) with f the lexicographically smallest
/// monic primitive polynomial of degree 2m (coefficients c_0, c_1, ... read
/// as digits 0..p-1, c_0 compared first). beta = x mod f generates
/// F_{q^2}^x and g1 = beta^{q+1} generates F_q^x.
class FieldTower {
 public:
  static constexpr unsigned kDefaultBound = 16;

  /// Throws NotAPrimePower or BoundExceeded.
  static FieldTower build(unsigned q, unsigned bound = kDefaultBound);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  /// |F_{q^2}| = q^2
  unsigned size() const { return q_ * q_; }
  /// q^2 - 1
  unsigned unit_order() const { return q_ * q_ - 1; }

  /// Coefficients c_0..c_{2m} of the modulus, c_{2m} = 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  static constexpr Fq2 zero() { return Fq2{0}; }
  static constexpr Fq2 one() { return Fq2{1}; }
  Fq2 generator() const { return exp_[1]; }
  Fq2 base_generator() const { return exp_[(q_ + 1) % unit_order()]; }
  /// gamma = g2^{q-1}, of exact order q+1.
  Fq2 gamma() const { return exp_[(q_ - 1) % unit_order()]; }
  /// Image of n in the prime field.
  Fq2 from_int(long long n) const;

  Fq2 add(Fq2 a, Fq2 b) const { return Fq2{add_[index2(a, b)]}; }
  Fq2 neg(Fq2 a) const { return Fq2{neg_[a.v]}; }
  Fq2 sub(Fq2 a, Fq2 b) const { return add(a, neg(b)); }
  Fq2 mul(Fq2 a, Fq2 b) const;
  /// Throws ZeroElement.
  Fq2 inv(Fq2 a) const;
  Fq2 div(Fq2 a, Fq2 b) const { return mul(a, inv(b)); }
  Fq2 pow(Fq2 a, long long e) const;
  /// g2^k for any integer k.
  Fq2 exp(long long k) const;

  Fq2 frobenius(Fq2 x) const { return pow(x, q_); }
  /// x^{q+1}, lands in F_q.
  Fq2 norm(Fq2 x) const { return pow(x, q_ + 1); }
  /// k in [0, q^2-2] with g2^k = x. Throws ZeroElement.
  unsigned discrete_log(Fq2 x) const;
  /// Multiplicative order of a nonzero element.
  unsigned order(Fq2 x) const;

  bool in_base(Fq2 x) const { return base_index_[x.v] >= 0; }
  /// Elements of F_q sorted by encoding; position in this list is the
  /// local index used for group enumeration.
  const std::vector<Fq2>& base_elements() const { return base_elements_; }
  /// Local index of an F_q element, or -1.
  int base_index(Fq2 x) const { return base_index_[x.v]; }
  /// Tr_{F_q/F_p}(x) as an integer in [0, p), for x in F_q.
  unsigned trace_to_prime(Fq2 x) const;

  /// gamma^0, ..., gamma^q.
  std::vector<Fq2> mu_subgroup() const;
  bool in_mu(Fq2 x) const { return x != zero() && norm(x) == one(); }

  /// (a, b) in F_q^2 with x = a + b*beta.
  std::pair<Fq2, Fq2> base_coordinates(Fq2 x) const;

  /// All q^2 elements in encoding order.
  std::vector<Fq2> elements() const;

 private:
  std::size_t index2(Fq2 a, Fq2 b) const { return std::size_t{a.v} * size() + b.v; }

  unsigned p_ = 0;
  unsigned m_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> neg_;
  std::vector<Fq2> exp_;        // exp_[k] = g2^k, k < q^2-1
  std::vector<int> log_;        // -1 at zero
  std::vector<Fq2> base_elements_;
  std::vector<int> base_index_;
};

/// a + b*u in F_{q^4} = F_{q^2}[u]/(u^2 - s u - t).
struct Fq4 {
  Fq2 a;
  Fq2 b;

  friend constexpr auto operator<=>(Fq4, Fq4) = default;
};

/// Quadratic extension of F_{q^2}, with (s, t) the smallest pair by
/// encoding for which u^2 - s u - t has no root in F_{q^2}.
class QuarticField {
 public:
  explicit QuarticField(const FieldTower& tower);

  const FieldTower& base() const { return *tower_; }
  std::pair<Fq2, Fq2> modulus() const { return {s_, t_}; }
  /// q^4
  std::size_t size() const { return std::size_t{tower_->size()} * tower_->size(); }
  Fq4 element(std::size_t index) const;

  static constexpr Fq4 zero() { return {FieldTower::zero(), FieldTower::zero()}; }
  static constexpr Fq4 one() { return {FieldTower::one(), FieldTower::zero()}; }
  Fq4 embed(Fq2 x) const { return {x, FieldTower::zero()}; }

  Fq4 add(Fq4 x, Fq4 y) const;
  Fq4 sub(Fq4 x, Fq4 y) const;
  Fq4 mul(Fq4 x, Fq4 y) const;
  Fq4 pow(Fq4 x, unsigned long long e) const;
  /// Throws ZeroElement.
  Fq4 inv(Fq4 x) const;
  /// x^q
  Fq4 frobenius(Fq4 x) const;
  /// Tr to F_q, returned as an element of F_{q^2} lying in F_q.
  Fq2 trace_to_base(Fq4 x) const;

 private:
  const FieldTower* tower_;
  Fq2 s_;
  Fq2 t_;
  Fq4 u_q_;  // u^q
};

/// Returns (p, m) with q = p^m, or throws NotAPrimePower.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q);

}  // namespace drinfeld

#endif  // DRINFELD_FIELDS_HPP
