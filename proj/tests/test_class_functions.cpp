#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drinfeld/class_functions.hpp"
#include "drinfeld/error.hpp"

using namespace drinfeld;

namespace {

// (1/|H|) sum_{x in G} f(x^{-1} g x), f extended by zero.
ClassFn naive_induce(const Context& ctx, const SubgroupData& sub, const std::vector<CycNum>& values) {
  std::vector<long> slot(ctx.table.size(), -1);
  for (std::size_t i = 0; i < sub.members.size(); ++i) slot[sub.members[i]] = static_cast<long>(i);
  std::vector<CycNum> out;
  for (const auto& cls : ctx.classes.classes()) {
    CycNum v(ctx.field);
    for (std::size_t x = 0; x < ctx.table.size(); ++x) {
      const std::size_t y = ctx.table.mul(ctx.table.mul(ctx.table.inverse(x), cls.representative), x);
      if (slot[y] >= 0) v += values[static_cast<std::size_t>(slot[y])];
    }
    out.push_back(v / mpq_class(static_cast<long>(sub.order())));
  }
  return ClassFn(out);
}

CycNum num(const Context& ctx, long long n) { return CycNum(ctx.field, n); }

}  // namespace

TEST_CASE("trivial and constant class functions") {
  const Context ctx(5);
  const ClassFn one = trivial_character(ctx);
  CHECK(one == constant_class_fn(ctx, 1));
  CHECK(inner_product(ctx, one, one) == num(ctx, 1));
  CHECK(inner_product(ctx, 3 * one, one) == num(ctx, 3));
  CHECK((one + one) - one == one);
  CHECK(-(-one) == one);
  CHECK((one - one) == constant_class_fn(ctx, 0));
  try {
    inner_product(ctx, one, ClassFn(std::vector<CycNum>(2, num(ctx, 1))));
    FAIL("expected ClassMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClassMismatch);
  }
}

TEST_CASE("induction agrees with the defining sum") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    const Context ctx(q);
    CHECK(induce_trivial(ctx, ctx.B) == naive_induce(ctx, ctx.B, std::vector<CycNum>(ctx.B.order(), num(ctx, 1))));
    CHECK(induce_trivial(ctx, ctx.U) == naive_induce(ctx, ctx.U, std::vector<CycNum>(ctx.U.order(), num(ctx, 1))));
    const auto [psi1, psi2] = additive_characters(ctx);
    std::vector<CycNum> on_u;
    for (std::size_t u : ctx.U.members) on_u.push_back(psi1(ctx.tower, ctx.table.element(u).b));
    CHECK(induce(ctx, ctx.U, on_u) == naive_induce(ctx, ctx.U, on_u));
    CHECK(gelfand_graev(ctx, 1) == naive_induce(ctx, ctx.U, on_u));
  }
}

TEST_CASE("induction rejects non-class functions") {
  const Context ctx(5);
  std::vector<CycNum> values(ctx.B.order(), num(ctx, 0));
  // The first non-central member of B has more than one B-conjugate.
  for (std::size_t i = 0; i < ctx.B.members.size(); ++i) {
    const Mat2& m = ctx.table.element(ctx.B.members[i]);
    if (m.b != FieldTower::zero()) {
      values[i] = num(ctx, 1);
      break;
    }
  }
  CHECK_THROWS_AS(induce(ctx, ctx.B, std::vector<CycNum>(3, num(ctx, 1))), Error);
  try {
    induce(ctx, ctx.B, values);
    FAIL("expected NotClassFunctionOnSubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClassFunctionOnSubgroup);
  }
}

TEST_CASE("permutation character on the projective line and Steinberg") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const Context ctx(q);
    const ClassFn perm = permutation_character_P1(ctx);
    const ClassFn st = steinberg(ctx);
    const ClassFn one = trivial_character(ctx);
    CHECK(perm == induce_trivial(ctx, ctx.B));
    CHECK(perm == one + st);
    CHECK(inner_product(ctx, perm, perm) == num(ctx, 2));
    CHECK(inner_product(ctx, st, st) == num(ctx, 1));
    CHECK(inner_product(ctx, st, one) == num(ctx, 0));
    const std::size_t id = ctx.classes.class_of(ctx.table.identity());
    CHECK(st[id] == num(ctx, q));
    for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
      const Mat2& g = ctx.table.element(ctx.classes[c].representative);
      CHECK(perm[c] == num(ctx, fixed_lines(ctx.tower, g)));
    }
  }
}

TEST_CASE("Gelfand-Graev characters") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const Context ctx(q);
    const ClassFn g1 = gelfand_graev(ctx, 1);
    const ClassFn g2 = gelfand_graev(ctx, 2);
    const std::size_t id = ctx.classes.class_of(ctx.table.identity());
    CHECK(g1[id] == num(ctx, q * q - 1));
    CHECK(inner_product(ctx, g1, trivial_character(ctx)) == num(ctx, 0));
    CHECK(inner_product(ctx, g1, steinberg(ctx)) == num(ctx, 1));
    CHECK(inner_product(ctx, g1, g1) == num(ctx, q % 2 == 0 ? q : q + 1));
    if (q % 2 == 0) CHECK(g1 == g2);
    if (q % 2 == 1) CHECK_FALSE(g1 == g2);
    CHECK(g1.conj() == (q % 4 == 3 ? g2 : g1));
    // Scaling psi by a square gives back Gamma_1, by a non-square Gamma_2.
    for (Fq2 a : ctx.tower.base_elements()) {
      if (a == FieldTower::zero()) continue;
      const bool square = q % 2 == 0 || ctx.tower.discrete_log(a) % (2 * (q + 1)) == 0;
      CHECK(gelfand_graev_from(ctx, scaled_additive_character(ctx, a)) == (square ? g1 : g2));
    }
  }
  const Context ctx(3);
  for (int bad : {0, 3, -1}) {
    try {
      gelfand_graev(ctx, bad);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }
}

TEST_CASE("additive characters") {
  for (unsigned q : {3u, 4u, 9u}) {
    const Context ctx(q);
    const auto [psi1, psi2] = additive_characters(ctx);
    const auto& f = ctx.tower;
    for (Fq2 x : f.base_elements()) {
      for (Fq2 y : f.base_elements()) CHECK(psi1(f, f.add(x, y)) == psi1(f, x) * psi1(f, y));
      CHECK(psi1(f, x) == root_of_unity(ctx.field, f.p(), f.trace_to_prime(x)));
    }
    CycNum total(ctx.field);
    for (Fq2 x : f.base_elements()) total += psi2(f, x);
    CHECK(total.is_zero());
  }
}

TEST_CASE("json form of a class function") {
  const Context ctx(2);
  const auto j = steinberg(ctx).to_json();
  REQUIRE(j.is_array());
  CHECK(j.size() == ctx.classes.count());
  CHECK(j.dump().find("exact") != std::string::npos);
}
