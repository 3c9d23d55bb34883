#include "drinfeld/deligne_lusztig.hpp"

#include <numeric>
#include <string>

#include "drinfeld/error.hpp"
#include "drinfeld/kernels.hpp"

namespace drinfeld {

long long lefschetz_D(const FieldTower& tower, const Mat2& m) {
  if (mat_det(tower, m) == FieldTower::zero()) throw Error(ErrorCode::SingularMatrix, "non-invertible action");
  const long long q = tower.q();
  const Mat2 k{tower.sub(m.a, FieldTower::one()), m.b, m.c, tower.sub(m.d, FieldTower::one())};
  const Fq2 zero = FieldTower::zero();
  if (k.a == zero && k.b == zero && k.c == zero && k.d == zero) return 1 - q * q;
  if (mat_det(tower, k) != zero) return 0;

  Fq2 x;
  Fq2 y;
  if (k.a != zero || k.b != zero) {
    x = tower.neg(k.b);
    y = k.a;
  } else {
    x = tower.neg(k.d);
    y = k.c;
  }
  const Fq2 scale = tower.inv(x != zero ? x : y);
  x = tower.mul(x, scale);
  y = tower.mul(y, scale);
  const Fq2 c = tower.sub(tower.mul(x, tower.frobenius(y)), tower.mul(tower.frobenius(x), y));
  return c != zero ? q + 1 : 0;
}

CycNum torus_character(const Context& ctx, unsigned j, unsigned k) {
  return root_of_unity(ctx.field, ctx.q() + 1, static_cast<long long>(j) * k);
}

std::vector<std::vector<long long>> regular_fixed_point_grid(const Context& ctx) {
  std::vector<Mat2> reps;
  for (std::size_t c : ctx.classes.p_regular()) reps.push_back(ctx.table.element(ctx.classes[c].representative));
  const std::vector<Fq2> torus = ctx.tower.mu_subgroup();
  return kernels::lefschetz_grid(ctx.tower, reps, torus, ctx.exec);
}

namespace {

// Exponent k of the central element z in mu_{q+1} = <gamma>, for the
// p-singular representative z*u.
unsigned central_part(const Context& ctx, const Mat2& g) {
  const Fq2 tr = mat_trace(ctx.tower, g);
  if (tr == ctx.tower.from_int(2)) return 0;
  // trace -2 with q odd: z = -1 = gamma^{(q+1)/2}
  return (ctx.q() + 1) / 2;
}

ClassFn averaged(const Context& ctx, const std::vector<std::vector<long long>>& grid, unsigned j) {
  const unsigned order = ctx.q() + 1;
  std::vector<CycNum> values(ctx.classes.count());
  const auto& preg = ctx.classes.p_regular();
  for (std::size_t r = 0; r < preg.size(); ++r) {
    RootSum s(ctx.field);
    for (unsigned k = 0; k < order; ++k) {
      if (grid[r][k] != 0) s.add_root(order, -static_cast<long long>(j) * k, grid[r][k]);
    }
    values[preg[r]] = s.value() / mpq_class(order);
  }
  for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
    if (ctx.classes[c].p_regular) continue;
    const unsigned z = central_part(ctx, ctx.table.element(ctx.classes[c].representative));
    values[c] = torus_character(ctx, j, z);
  }
  return ClassFn(std::move(values), true);
}

}  // namespace

DLCharacter dl_character(const Context& ctx, unsigned j) {
  if (j == 0) throw Error(ErrorCode::TrivialThetaRequested, "theta_0 is handled by dl_trivial_character");
  if (j > ctx.q()) throw Error(ErrorCode::IndexOutOfRange, "j=" + std::to_string(j));
  return DLCharacter{j, averaged(ctx, regular_fixed_point_grid(ctx), j)};
}

std::vector<DLCharacter> dl_characters(const Context& ctx) {
  const auto grid = regular_fixed_point_grid(ctx);
  std::vector<DLCharacter> out;
  for (unsigned j = 1; j <= ctx.q(); ++j) out.push_back(DLCharacter{j, averaged(ctx, grid, j)});
  return out;
}

ClassFn dl_trivial_character(const Context& ctx) { return averaged(ctx, regular_fixed_point_grid(ctx), 0); }

long long lefschetz_C(const Context& ctx, std::size_t element) {
  const unsigned order = ctx.table.order(element);
  if (std::gcd(order, ctx.p()) != 1) throw Error(ErrorCode::PSingularInput, "element order divisible by p");
  const long long q = ctx.q();
  if (element == ctx.table.identity()) return 2 - q * (q - 1);
  const Mat2& g = ctx.table.element(element);
  return lefschetz_D(ctx.tower, g) + fixed_lines(ctx.tower, g);
}

}  // namespace drinfeld
