#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drinfeld/class_functions.hpp"
#include "drinfeld/deligne_lusztig.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/modular_brauer.hpp"

using namespace drinfeld;

namespace {

CycNum num(const Context& ctx, long long n) { return CycNum(ctx.field, n); }

}  // namespace

TEST_CASE("G0 vectors") {
  CHECK(G0Vector::unit(3, 1).coeffs == std::vector<long long>{0, 1, 0});
  CHECK(G0Vector::unit(3, -1).coeffs == std::vector<long long>{0, 0, 0});
  CHECK((G0Vector::unit(3, 0) + 2 * G0Vector::unit(3, 2)).to_string() == "(1, 0, 2)");
  CHECK(G0Vector::unit(2, 1) < G0Vector::unit(2, 0));
}

TEST_CASE("eigenvalue formula matches the explicit module action") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const Context ctx(q);
    for (unsigned i = 0; i < q; ++i) {
      CAPTURE(i);
      CHECK(brauer_character_sym(ctx, i) == brauer_character_sym_explicit(ctx, i));
    }
    try {
      brauer_character_sym(ctx, q);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }
}

TEST_CASE("eigenvalues") {
  const Context ctx(5);
  for (std::size_t c : ctx.classes.p_regular()) {
    const Mat2& g = ctx.table.element(ctx.classes[c].representative);
    const auto [a, b] = eigenvalues(ctx.tower, g);
    CHECK(ctx.tower.mul(a, b) == FieldTower::one());
    CHECK(ctx.tower.add(a, b) == mat_trace(ctx.tower, g));
  }
}

TEST_CASE("known Brauer values") {
  const Context ctx(3);
  const BrauerFn v2 = brauer_character_sym(ctx, 2);
  const BrauerFn v1 = brauer_character_sym(ctx, 1);
  bool seen = false;
  for (std::size_t r = 0; r < ctx.classes.p_regular().size(); ++r) {
    const auto& cls = ctx.classes[ctx.classes.p_regular()[r]];
    if (cls.order == 4) {
      CHECK(v2[r] == num(ctx, -1));
      CHECK(v1[r] == num(ctx, 0));
      seen = true;
    }
    if (cls.size == 1 && cls.representative == ctx.table.identity()) {
      CHECK(v2[r] == num(ctx, 3));
    }
  }
  CHECK(seen);
}

TEST_CASE("Brauer matrix and decomposition map") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const Context ctx(q);
    const DecompositionMap d(ctx);
    const CycMatrix m = brauer_matrix(ctx);
    REQUIRE(m.size() == q);
    CHECK(m == d.matrix());
    CHECK_FALSE(d.determinant().is_zero());
    CHECK(d.determinant() == determinant(m));
    for (unsigned i = 0; i < q; ++i) {
      CHECK(d.decompose(brauer_character_sym(ctx, i)) == G0Vector::unit(q, i));
    }
    const ClassFn one = trivial_character(ctx);
    const ClassFn st = steinberg(ctx);
    CHECK(d(one) == G0Vector::unit(q, 0));
    CHECK(d(st) == G0Vector::unit(q, q - 1));
    CHECK(d(permutation_character_P1(ctx)) == G0Vector::unit(q, 0) + G0Vector::unit(q, q - 1));
    CHECK(decomposition_map(ctx, st) == d(st));
    CHECK(d(one + 3 * st) == d(one) + 3 * d(st));
    CHECK(conj_brauer(restrict_to_p_regular(ctx, st)) == restrict_to_p_regular(ctx, st));
    const ClassFn reg = regular_character(ctx);
    const std::size_t id = ctx.classes.class_of(ctx.table.identity());
    CHECK(reg[id] == num(ctx, static_cast<long long>(ctx.table.size())));
    CHECK(inner_product(ctx, reg, one) == num(ctx, 1));
  }
}

TEST_CASE("reductions of R^theta at q = 3") {
  // j = 1: minus the natural 2-dimensional representation.
  // j = 2: minus two linear characters of 3-power order, both trivial mod 3.
  const Context ctx(3);
  const DecompositionMap d(ctx);
  CHECK(d(dl_character(ctx, 1).values) == -1 * G0Vector::unit(3, 1));
  CHECK(d(dl_character(ctx, 2).values) == -2 * G0Vector::unit(3, 0));
}

TEST_CASE("non-integral coordinates are rejected") {
  const Context ctx(3);
  const DecompositionMap d(ctx);
  std::vector<CycNum> half(ctx.classes.p_regular().size(), CycNum(ctx.field, mpq_class(1, 2)));
  const BrauerFn f(half);
  CHECK(d.coordinates(f)[0] == CycNum(ctx.field, mpq_class(1, 2)));
  try {
    d.decompose(f);
    FAIL("expected NonIntegralSolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralSolution);
  }
}
