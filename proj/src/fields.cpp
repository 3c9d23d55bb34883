#include "drinfeld/fields.hpp"

#include <algorithm>
#include <string>

#include "drinfeld/error.hpp"

namespace drinfeld {
namespace {

using Poly = std::vector<unsigned>;  // low degree first, fixed length n

// Multiplies a residue by x modulo the monic polynomial f of degree n.
Poly times_x(const Poly& a, const Poly& f, unsigned p) {
  const std::size_t n = a.size();
  Poly out(n, 0);
  const unsigned top = a[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) out[i] = a[i - 1];
  out[0] = 0;
  if (top != 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (out[i] + (p - top) * f[i]) % p;
  }
  return out;
}

unsigned encode(const Poly& a, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly decode(unsigned v, unsigned p, std::size_t n) {
  Poly a(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = v % p;
    v /= p;
  }
  return a;
}

// Order of x in (F_p[x]/f)^x, or 0 if the powers never return to 1 within
// p^n - 1 steps (f reducible with x not a unit, etc).
unsigned order_of_x(const Poly& f, unsigned p, unsigned units) {
  const std::size_t n = f.size();
  Poly one(n, 0);
  one[0] = 1;
  Poly cur = one;
  for (unsigned k = 1; k <= units; ++k) {
    cur = times_x(cur, f, p);
    if (cur == one) return k;
    if (std::all_of(cur.begin(), cur.end(), [](unsigned c) { return c == 0; })) return 0;
  }
  return 0;
}

}  // namespace

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) {
  if (q < 2) throw Error(ErrorCode::NotAPrimePower, "q=" + std::to_string(q));
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  unsigned r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw Error(ErrorCode::NotAPrimePower, "q=" + std::to_string(q));
  return {p, m};
}

FieldTower FieldTower::build(unsigned q, unsigned bound) {
  auto [p, m] = prime_power_decomposition(q);
  if (q > bound) {
    throw Error(ErrorCode::BoundExceeded,
                "q=" + std::to_string(q) + " exceeds bound " + std::to_string(bound));
  }
  FieldTower t;
  t.p_ = p;
  t.m_ = m;
  t.q_ = q;
  const unsigned n = 2 * m;
  const unsigned size = q * q;
  const unsigned units = size - 1;

  // Lexicographic search over (c_0, ..., c_{n-1}) with c_0 most significant.
  Poly f;
  for (unsigned code = 0; code < size; ++code) {
    Poly low(n);
    unsigned c = code;
    for (unsigned i = n; i-- > 0;) {
      low[i] = c % p;
      c /= p;
    }
    if (order_of_x(low, p, units) == units) {
      f = low;
      break;
    }
  }
  t.modulus_ = f;
  t.modulus_.push_back(1);

  t.exp_.resize(units);
  t.log_.assign(size, -1);
  Poly cur(n, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < units; ++k) {
    const unsigned v = encode(cur, p);
    t.exp_[k] = Fq2{static_cast<std::uint16_t>(v)};
    t.log_[v] = static_cast<int>(k);
    cur = times_x(cur, f, p);
  }

  t.add_.resize(std::size_t{size} * size);
  t.neg_.resize(size);
  for (unsigned a = 0; a < size; ++a) {
    const Poly pa = decode(a, p, n);
    Poly na(n);
    for (unsigned i = 0; i < n; ++i) na[i] = (p - pa[i]) % p;
    t.neg_[a] = static_cast<std::uint16_t>(encode(na, p));
    for (unsigned b = 0; b < size; ++b) {
      const Poly pb = decode(b, p, n);
      Poly s(n);
      for (unsigned i = 0; i < n; ++i) s[i] = (pa[i] + pb[i]) % p;
      t.add_[std::size_t{a} * size + b] = static_cast<std::uint16_t>(encode(s, p));
    }
  }

  t.base_index_.assign(size, -1);
  for (unsigned v = 0; v < size; ++v) {
    const Fq2 x{static_cast<std::uint16_t>(v)};
    if (t.frobenius(x) == x) {
      t.base_index_[v] = static_cast<int>(t.base_elements_.size());
      t.base_elements_.push_back(x);
    }
  }
  return t;
}

Fq2 FieldTower::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Fq2{static_cast<std::uint16_t>(r)};
}

Fq2 FieldTower::mul(Fq2 a, Fq2 b) const {
  if (a == zero() || b == zero()) return zero();
  const unsigned k = static_cast<unsigned>(log_[a.v] + log_[b.v]);
  return exp_[k % unit_order()];
}

Fq2 FieldTower::inv(Fq2 a) const {
  if (a == zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  const unsigned l = static_cast<unsigned>(log_[a.v]);
  return exp_[(unit_order() - l) % unit_order()];
}

Fq2 FieldTower::exp(long long k) const {
  const long long n = unit_order();
  long long r = k % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

Fq2 FieldTower::pow(Fq2 a, long long e) const {
  if (a == zero()) {
    if (e == 0) return one();
    if (e < 0) throw Error(ErrorCode::ZeroElement, "negative power of zero");
    return zero();
  }
  const long long n = unit_order();
  long long r = (static_cast<long long>(log_[a.v]) * (e % n)) % n;
  return exp(r);
}

unsigned FieldTower::discrete_log(Fq2 x) const {
  if (x == zero()) throw Error(ErrorCode::ZeroElement, "discrete log of zero");
  return static_cast<unsigned>(log_[x.v]);
}

unsigned FieldTower::order(Fq2 x) const {
  const unsigned l = discrete_log(x);
  const unsigned n = unit_order();
  unsigned g = n;
  unsigned a = l;
  while (a != 0) {
    const unsigned t = g % a;
    g = a;
    a = t;
  }
  return n / g;
}

unsigned FieldTower::trace_to_prime(Fq2 x) const {
  Fq2 acc = zero();
  Fq2 cur = x;
  for (unsigned i = 0; i < m_; ++i) {
    acc = add(acc, cur);
    cur = pow(cur, p_);
  }
  // The trace lies in F_p, i.e. is a constant polynomial.
  return acc.v;
}

std::vector<Fq2> FieldTower::mu_subgroup() const {
  std::vector<Fq2> out;
  out.reserve(q_ + 1);
  const Fq2 g = gamma();
  Fq2 cur = one();
  for (unsigned k = 0; k <= q_; ++k) {
    out.push_back(cur);
    cur = mul(cur, g);
  }
  return out;
}

std::pair<Fq2, Fq2> FieldTower::base_coordinates(Fq2 x) const {
  const Fq2 beta = generator();
  const Fq2 b = div(sub(x, frobenius(x)), sub(beta, frobenius(beta)));
  const Fq2 a = sub(x, mul(b, beta));
  return {a, b};
}

std::vector<Fq2> FieldTower::elements() const {
  std::vector<Fq2> out(size());
  for (unsigned v = 0; v < size(); ++v) out[v] = Fq2{static_cast<std::uint16_t>(v)};
  return out;
}

QuarticField::QuarticField(const FieldTower& tower) : tower_(&tower) {
  const auto elements = tower.elements();
  auto has_root = [&](Fq2 s, Fq2 t) {
    for (Fq2 r : elements) {
      if (tower.sub(tower.mul(r, tower.sub(r, s)), t) == FieldTower::zero()) return true;
    }
    return false;
  };
  for (Fq2 s : elements) {
    for (Fq2 t : elements) {
      if (t == FieldTower::zero() || has_root(s, t)) continue;
      s_ = s;
      t_ = t;
      u_q_ = pow(Fq4{FieldTower::zero(), FieldTower::one()}, tower.q());
      return;
    }
  }
}

Fq4 QuarticField::element(std::size_t index) const {
  const std::size_t n = tower_->size();
  return {Fq2{static_cast<std::uint16_t>(index % n)}, Fq2{static_cast<std::uint16_t>(index / n)}};
}

Fq4 QuarticField::add(Fq4 x, Fq4 y) const { return {tower_->add(x.a, y.a), tower_->add(x.b, y.b)}; }

Fq4 QuarticField::sub(Fq4 x, Fq4 y) const { return {tower_->sub(x.a, y.a), tower_->sub(x.b, y.b)}; }

Fq4 QuarticField::mul(Fq4 x, Fq4 y) const {
  const FieldTower& f = *tower_;
  const Fq2 bb = f.mul(x.b, y.b);
  const Fq2 a = f.add(f.mul(x.a, y.a), f.mul(bb, t_));
  const Fq2 b = f.add(f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)), f.mul(bb, s_));
  return {a, b};
}

Fq4 QuarticField::pow(Fq4 x, unsigned long long e) const {
  Fq4 result = one();
  while (e != 0) {
    if (e & 1ULL) result = mul(result, x);
    x = mul(x, x);
    e >>= 1ULL;
  }
  return result;
}

Fq4 QuarticField::inv(Fq4 x) const {
  if (x == zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  return pow(x, size() - 2);
}

Fq4 QuarticField::frobenius(Fq4 x) const {
  const FieldTower& f = *tower_;
  return add(embed(f.frobenius(x.a)), mul(embed(f.frobenius(x.b)), u_q_));
}

Fq2 QuarticField::trace_to_base(Fq4 x) const {
  Fq4 total = x;
  for (int i = 0; i < 3; ++i) {
    x = frobenius(x);
    total = add(total, x);
  }
  return total.a;
}

}  // namespace drinfeld
