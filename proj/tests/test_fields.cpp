#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/fields.hpp"

using namespace drinfeld;

namespace {

// Schoolbook arithmetic in F_p[x]/(f), elements as base-p digit strings.
struct PolyOracle {
  unsigned p;
  std::vector<unsigned> f;  // monic, low degree first

  std::size_t deg() const { return f.size() - 1; }

  std::vector<unsigned> digits(unsigned v) const {
    std::vector<unsigned> d(deg(), 0);
    for (auto& c : d) {
      c = v % p;
      v /= p;
    }
    return d;
  }
  unsigned pack(const std::vector<unsigned>& d) const {
    unsigned v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
  }
  unsigned add(unsigned a, unsigned b) const {
    auto x = digits(a);
    auto y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  unsigned mul(unsigned a, unsigned b) const {
    auto x = digits(a);
    auto y = digits(b);
    std::vector<unsigned> r(2 * deg(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    for (std::size_t k = r.size(); k-- > deg();) {
      const unsigned c = r[k];
      if (c == 0) continue;
      for (std::size_t d = 0; d <= deg(); ++d) r[k - deg() + d] = (r[k - deg() + d] + (p - c) * f[d]) % p;
    }
    r.resize(deg());
    return pack(r);
  }
  unsigned order_of_x() const {
    const unsigned x = deg() == 1 ? (p - f[0]) % p : p;
    unsigned cur = x;
    for (unsigned k = 1;; ++k) {
      if (cur == 1) return k;
      if (cur == 0 || k > 100000) return 0;
      cur = mul(cur, x);
    }
  }
};

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decomposition(2) == std::pair{2u, 1u});
  CHECK(prime_power_decomposition(8) == std::pair{2u, 3u});
  CHECK(prime_power_decomposition(9) == std::pair{3u, 2u});
  CHECK(prime_power_decomposition(13) == std::pair{13u, 1u});
  for (unsigned bad : {0u, 1u, 6u, 12u, 100u}) {
    try {
      prime_power_decomposition(bad);
      FAIL("expected NotAPrimePower for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAPrimePower);
    }
  }
}

TEST_CASE("build rejects q above the bound") {
  try {
    FieldTower::build(17);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  CHECK(FieldTower::build(17, 17).q() == 17);
  CHECK_THROWS_AS(FieldTower::build(10), Error);
}

TEST_CASE("tables agree with schoolbook polynomial arithmetic") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const auto f = FieldTower::build(q);
    const PolyOracle o{f.p(), f.modulus()};
    REQUIRE(o.deg() == 2 * f.m());
    for (unsigned a = 0; a < f.size(); ++a) {
      for (unsigned b = 0; b < f.size(); ++b) {
        const Fq2 x{static_cast<std::uint16_t>(a)};
        const Fq2 y{static_cast<std::uint16_t>(b)};
        REQUIRE(f.add(x, y).v == o.add(a, b));
        REQUIRE(f.mul(x, y).v == o.mul(a, b));
      }
    }
  }
}

TEST_CASE("modulus is the smallest primitive polynomial, constant term compared first") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const auto f = FieldTower::build(q);
    const unsigned p = f.p();
    const std::size_t n = 2 * f.m();
    // Lexicographic order with c_0 most significant: iterate c_0 slowest.
    std::vector<unsigned> found;
    for (unsigned code = 0; code < ipow(p, n) && found.empty(); ++code) {
      std::vector<unsigned> c(n + 1, 0);
      unsigned v = code;
      for (std::size_t i = n; i-- > 0;) {
        c[i] = v % p;
        v /= p;
      }
      c[n] = 1;
      if (c[0] == 0) continue;
      if (PolyOracle{p, c}.order_of_x() == q * q - 1) found = c;
    }
    CHECK(found == f.modulus());
  }
}

TEST_CASE("generators, subfield and norm-one torus") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    CAPTURE(q);
    const auto f = FieldTower::build(q);
    CHECK(f.order(f.generator()) == q * q - 1);
    CHECK(f.order(f.base_generator()) == q - 1);
    CHECK(f.order(f.gamma()) == q + 1);
    CHECK(f.base_elements().size() == q);
    for (Fq2 x : f.base_elements()) {
      CHECK(f.in_base(x));
      CHECK(f.frobenius(x) == x);
      CHECK(f.trace_to_prime(x) < f.p());
    }
    unsigned fixed = 0;
    for (Fq2 x : f.elements()) {
      if (f.frobenius(x) == x) ++fixed;
      CHECK(f.in_base(f.norm(x)));
      const auto [a, b] = f.base_coordinates(x);
      CHECK(f.add(a, f.mul(b, f.generator())) == x);
      if (x != FieldTower::zero()) {
        CHECK(f.exp(f.discrete_log(x)) == x);
        CHECK(f.mul(x, f.inv(x)) == FieldTower::one());
      }
    }
    CHECK(fixed == q);
    const auto mu = f.mu_subgroup();
    CHECK(mu.size() == q + 1);
    for (Fq2 t : mu) CHECK(f.in_mu(t));
    CHECK(f.from_int(static_cast<long long>(f.p())) == FieldTower::zero());
    CHECK(f.from_int(-1) == f.neg(FieldTower::one()));
  }
}

TEST_CASE("prime-field elements encode below p") {
  const auto f = FieldTower::build(9);
  for (long long n = 0; n < 3; ++n) CHECK(f.from_int(n).v == n);
  CHECK(f.trace_to_prime(f.from_int(2)) == 1);  // Tr(2) = 2 + 2 over F_9/F_3
}

TEST_CASE("zero has no inverse or logarithm") {
  const auto f = FieldTower::build(5);
  CHECK_THROWS_AS(f.inv(FieldTower::zero()), Error);
  CHECK_THROWS_AS(f.discrete_log(FieldTower::zero()), Error);
  CHECK(f.pow(FieldTower::zero(), 0) == FieldTower::one());
}

TEST_CASE("quartic extension") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    const auto f = FieldTower::build(q);
    const QuarticField k(f);
    const auto [s, t] = k.modulus();
    for (Fq2 r : f.elements()) CHECK(f.sub(f.mul(r, f.sub(r, s)), t) != FieldTower::zero());
    std::size_t base_fixed = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const Fq4 x = k.element(i);
      REQUIRE(k.frobenius(x) == k.pow(x, q));
      const Fq4 x4 = k.frobenius(k.frobenius(k.frobenius(k.frobenius(x))));
      CHECK(x4 == x);
      CHECK(f.in_base(k.trace_to_base(x)));
      if (k.frobenius(x) == x) ++base_fixed;
      if (x != QuarticField::zero()) CHECK(k.mul(x, k.inv(x)) == QuarticField::one());
    }
    CHECK(base_fixed == q);
    CHECK(k.pow(k.element(f.size() + 1), k.size() - 1) == QuarticField::one());
  }
}
