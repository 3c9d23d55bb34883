#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <memory>
#include <numbers>
#include <random>

#include "drinfeld/cyclotomic.hpp"
#include "drinfeld/error.hpp"

using namespace drinfeld;

namespace {

using cplx = std::complex<double>;

FieldPtr make(unsigned n) { return std::make_shared<const CyclotomicField>(n); }

cplx zeta(unsigned n, long long k) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n); }

CycNum random_element(const FieldPtr& f, std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<long long> coef(-5, 5);
  std::uniform_int_distribution<long long> expo(0, f->conductor() - 1);
  std::uniform_int_distribution<long> den(1, 4);
  CycNum x(f);
  for (int i = 0; i < terms; ++i) x += CycNum(f, coef(rng)) * root_of_unity(f, f->conductor(), expo(rng));
  return x / mpq_class(den(rng));
}

mpz_class mpz_from_json(const nlohmann::json& j) {
  return j.is_string() ? mpz_class(j.get<std::string>()) : mpz_class(j.get<long>());
}

bool close(cplx a, cplx b) { return std::abs(a - b) < 1e-7 * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(make(1)->cyclotomic_polynomial() == std::vector<long long>{-1, 1});
  CHECK(make(2)->cyclotomic_polynomial() == std::vector<long long>{1, 1});
  CHECK(make(6)->cyclotomic_polynomial() == std::vector<long long>{1, -1, 1});
  CHECK(make(12)->cyclotomic_polynomial() == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(make(7)->cyclotomic_polynomial() == std::vector<long long>(7, 1));
  for (auto [n, phi] : std::vector<std::pair<unsigned, unsigned>>{{9, 6}, {24, 8}, {105, 48}, {240, 64}, {1014, 312}}) {
    const auto f = make(n);
    CHECK(f->degree() == phi);
    CHECK(f->cyclotomic_polynomial().size() == phi + 1);
    // Phi_N(zeta_N) = 0 numerically.
    cplx v = 0;
    for (std::size_t k = 0; k < f->cyclotomic_polynomial().size(); ++k)
      v += static_cast<double>(f->cyclotomic_polynomial()[k]) * zeta(n, static_cast<long long>(k));
    CHECK(std::abs(v) < 1e-6);
  }
}

TEST_CASE("roots of unity") {
  const auto f = make(24);
  CHECK(root_of_unity(f, 4, 2) == CycNum(f, -1));
  CHECK(root_of_unity(f, 24, 24) == CycNum(f, 1));
  CHECK(root_of_unity(f, 3, -1) == root_of_unity(f, 3, 2));
  CycNum total(f);
  for (unsigned k = 0; k < 24; ++k) total += root_of_unity(f, 24, k);
  CHECK(total.is_zero());
  try {
    root_of_unity(f, 5, 1);
    FAIL("expected OrderDoesNotDivideN");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderDoesNotDivideN);
  }
}

TEST_CASE("root sums match term-by-term addition") {
  const auto f = make(30);
  RootSum rs(f);
  CycNum direct(f);
  for (long long k = -40; k < 40; k += 3) {
    rs.add(k, k % 5);
    direct += CycNum(f, k % 5) * root_of_unity(f, 30, k);
  }
  rs.add_root(6, 1, 2);
  direct += CycNum(f, 2) * root_of_unity(f, 6, 1);
  CHECK(rs.value() == direct);
}

TEST_CASE("ring operations agree with complex arithmetic") {
  std::mt19937 rng(7);
  for (unsigned n : {12u, 15u, 24u, 48u, 80u}) {
    CAPTURE(n);
    const auto f = make(n);
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum a = random_element(f, rng);
      const CycNum b = random_element(f, rng);
      CHECK(close((a + b).approx(), a.approx() + b.approx()));
      CHECK(close((a - b).approx(), a.approx() - b.approx()));
      CHECK(close((a * b).approx(), a.approx() * b.approx()));
      CHECK(close(a.conj().approx(), std::conj(a.approx())));
      CHECK(close(a.pow(3).approx(), a.approx() * a.approx() * a.approx()));
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("large coefficients take the multiprecision path") {
  const auto f = make(12);
  CycNum big(f, mpq_class(mpz_class("123456789012345678901234567890")));
  big += root_of_unity(f, 12, 5);
  const CycNum sq = big * big;
  CHECK(close(sq.approx(), big.approx() * big.approx()));
  CHECK(sq * big.inverse() == big);
}

TEST_CASE("inverse") {
  std::mt19937 rng(11);
  for (unsigned n : {8u, 21u, 24u, 60u}) {
    const auto f = make(n);
    for (int trial = 0; trial < 10; ++trial) {
      const CycNum a = random_element(f, rng, 3);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == CycNum(f, 1));
    }
  }
  const auto f = make(24);
  CHECK(CycNum(f, mpq_class(2, 3)).inverse() == CycNum(f, mpq_class(3, 2)));
  CHECK_THROWS_AS(CycNum(f).inverse(), Error);
}

TEST_CASE("canonical representation") {
  const auto f = make(12);
  const CycNum a = CycNum(f, mpq_class(1, 2)) + CycNum(f, mpq_class(1, 2)) * root_of_unity(f, 12, 1);
  const CycNum b = (CycNum(f, 1) + root_of_unity(f, 12, 1)) / mpq_class(2);
  CHECK(a == b);
  CHECK(a.denominator() == 2);
  CHECK(CycNum(f, 7).as_integer() == mpz_class(7));
  CHECK_FALSE(a.as_integer().has_value());
  CHECK(CycNum(f, mpq_class(-3, 4)).as_rational() == mpq_class(-3, 4));
  CHECK_FALSE(CycNum(f, mpq_class(1, 2)).as_integer().has_value());
}

TEST_CASE("json form") {
  const auto f = make(12);
  const CycNum a = CycNum(f, mpq_class(-1, 3)) * root_of_unity(f, 12, 2) + CycNum(f, 2);
  const auto j = a.to_json();
  REQUIRE(j.contains("exact"));
  REQUIRE(j.contains("approx"));
  CycNum back(f);
  for (const auto& term : j["exact"]) {
    const mpq_class c(mpz_from_json(term[1]), mpz_from_json(term[2]));
    back += CycNum(f, c) * root_of_unity(f, 12, term[0].get<long long>());
  }
  CHECK(back == a);
  CHECK(mpz_to_json(mpz_class("123456789012345678901234567890")).is_string());
}

TEST_CASE("exact linear algebra") {
  std::mt19937 rng(3);
  const auto f = make(15);
  for (int trial = 0; trial < 5; ++trial) {
    CycMatrix a(3, std::vector<CycNum>(3, CycNum(f)));
    std::vector<CycNum> x;
    for (auto& row : a)
      for (auto& v : row) v = random_element(f, rng, 2);
    for (int i = 0; i < 3; ++i) x.push_back(random_element(f, rng, 2));
    std::vector<CycNum> b(3, CycNum(f));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b[i] += a[i][j] * x[j];
    // Leibniz formula as an oracle for the determinant.
    const CycNum leibniz = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    CHECK(determinant(a) == leibniz);
    if (leibniz.is_zero()) continue;
    CHECK(linear_solve(a, b) == x);
    const auto multi = linear_solve(a, std::vector<std::vector<CycNum>>{b, b});
    CHECK(multi.size() == 2);
  }
  CycMatrix singular{{CycNum(f, 1), CycNum(f, 2)}, {CycNum(f, 2), CycNum(f, 4)}};
  CHECK(determinant(singular).is_zero());
  try {
    linear_solve(singular, std::vector<CycNum>{CycNum(f, 1), CycNum(f, 1)});
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("teichmueller lift is a multiplicative section") {
  for (unsigned q : {3u, 4u, 5u}) {
    const auto tower = FieldTower::build(q);
    const FieldPtr f = ambient_field(tower);
    CHECK(f->conductor() == tower.p() * (q * q - 1));
    const auto elems = tower.elements();
    for (Fq2 x : elems) {
      if (x == FieldTower::zero()) continue;
      CHECK(teichmueller_lift(x, tower, f).pow(q * q - 1) == CycNum(f, 1));
      for (Fq2 y : elems) {
        if (y == FieldTower::zero()) continue;
        CHECK(teichmueller_lift(tower.mul(x, y), tower, f) ==
              teichmueller_lift(x, tower, f) * teichmueller_lift(y, tower, f));
      }
    }
    CHECK_THROWS_AS(teichmueller_lift(FieldTower::zero(), tower, f), Error);
  }
}
