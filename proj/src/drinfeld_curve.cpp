#include "drinfeld/drinfeld_curve.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "drinfeld/error.hpp"
#include "drinfeld/kernels.hpp"

namespace drinfeld {

CurveSpec curve_spec(const FieldTower& tower) {
  const unsigned q = tower.q();
  return CurveSpec{q,
                   tower.p(),
                   q + 1,
                   {{1, {1, q, 0}}, {-1, {q, 1, 0}}, {-1, {0, 0, q + 1}}}};
}

bool smoothness_check(const CurveSpec& curve) {
  const long long p = curve.p;
  std::array<std::vector<Monomial>, 3> partials;
  for (unsigned v = 0; v < 3; ++v) {
    std::map<std::array<unsigned, 3>, long long> terms;
    for (const Monomial& m : curve.form) {
      if (m.exps[v] == 0) continue;
      auto e = m.exps;
      const long long c = m.coeff * static_cast<long long>(e[v]);
      --e[v];
      terms[e] = ((terms[e] + c) % p + p) % p;
    }
    for (const auto& [e, c] : terms) {
      if (c != 0) partials[v].push_back({c, e});
    }
  }
  for (const auto& d : partials) {
    if (d.size() > 1) throw std::logic_error("smoothness_check handles monomial partials only");
  }
  // A point whose nonzero coordinates are exactly `support` kills a nonzero
  // monomial iff the monomial uses a coordinate outside the support.
  for (unsigned support = 1; support < 8; ++support) {
    bool all_vanish = true;
    for (const auto& d : partials) {
      if (d.empty()) continue;
      bool vanishes = false;
      for (unsigned v = 0; v < 3; ++v) {
        if (d[0].exps[v] > 0 && !(support & (1U << v))) vanishes = true;
      }
      all_vanish = all_vanish && vanishes;
    }
    if (all_vanish) return false;
  }
  return true;
}

bool smoothness_check(const FieldTower& tower) { return smoothness_check(curve_spec(tower)); }

long long count_points(const FieldTower& tower, unsigned n, Exec exec) {
  if (n != 1 && n != 2 && n != 4) throw Error(ErrorCode::IndexOutOfRange, "extension degree must be 1, 2 or 4");
  if (n == 4) return kernels::affine_curve_points_quartic(QuarticField(tower), exec) + tower.q() + 1;
  return kernels::affine_curve_points(tower, n, exec) + tower.q() + 1;
}

GenusRoutes genus_routes(const FieldTower& tower, Exec exec) {
  const long long q = tower.q();
  const long long d = q + 1;
  const long long q2 = q * q;
  const long long deficit = q2 * q2 + 1 - count_points(tower, 4, exec);
  return {(d - 1) * (d - 2) / 2, deficit % (2 * q2) == 0 ? deficit / (2 * q2) : -1};
}

long long genus(const FieldTower& tower, Exec exec) {
  const GenusRoutes g = genus_routes(tower, exec);
  if (g.plane != g.weil) {
    throw Error(ErrorCode::GenusMismatch,
                "degree-genus " + std::to_string(g.plane) + " vs point count " + std::to_string(g.weil));
  }
  return g.plane;
}

CanonicalModel canonical_model(unsigned q) {
  CanonicalModel m;
  const unsigned deg = q - 2;
  for (unsigned a = 0; a <= deg; ++a) {
    for (unsigned b = 0; a + b <= deg; ++b) m.basis.push_back({a, b, deg - a - b});
  }
  return m;
}

BrauerFn canonical_brauer(const Context& ctx) {
  const CanonicalModel model = canonical_model(ctx.q());
  std::vector<CycNum> values;
  for (std::size_t c : ctx.classes.p_regular()) {
    const Mat2& g = ctx.table.element(ctx.classes[c].representative);
    const Mat2 action = mat_transpose(mat_inverse(ctx.tower, g));
    const auto [x_eig, y_eig] = eigenvalues(ctx.tower, action);
    const long long ex = teichmueller_exponent(x_eig, ctx.tower, ctx.field);
    const long long ey = teichmueller_exponent(y_eig, ctx.tower, ctx.field);
    RootSum s(ctx.field);
    for (const auto& mono : model.basis) s.add(ex * mono[0] + ey * mono[1]);
    values.push_back(s.value());
  }
  return BrauerFn(std::move(values));
}

namespace {

using Poly3 = std::map<std::array<unsigned, 3>, Fq2>;

void accumulate(const FieldTower& f, Poly3& p, const std::array<unsigned, 3>& e, Fq2 c) {
  Fq2& slot = p[e];
  slot = f.add(slot, c);
  if (slot == FieldTower::zero()) p.erase(e);
}

Poly3 multiply(const FieldTower& f, const Poly3& x, const Poly3& y) {
  Poly3 out;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) {
      accumulate(f, out, {ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]}, f.mul(cx, cy));
    }
  }
  return out;
}

Poly3 power(const FieldTower& f, const Poly3& x, unsigned e) {
  Poly3 out{{{0, 0, 0}, FieldTower::one()}};
  for (unsigned i = 0; i < e; ++i) out = multiply(f, out, x);
  return out;
}

}  // namespace

bool form_invariant_under(const FieldTower& tower, const Mat2& g) {
  const CurveSpec curve = curve_spec(tower);
  const Mat2 h = mat_inverse(tower, g);
  const Poly3 new_x{{{1, 0, 0}, h.a}, {{0, 1, 0}, h.b}};
  const Poly3 new_y{{{1, 0, 0}, h.c}, {{0, 1, 0}, h.d}};
  Poly3 original;
  Poly3 substituted;
  for (const Monomial& m : curve.form) {
    const Fq2 c = tower.from_int(m.coeff);
    accumulate(tower, original, m.exps, c);
    Poly3 term = multiply(tower, power(tower, new_x, m.exps[0]), power(tower, new_y, m.exps[1]));
    term = multiply(tower, term, Poly3{{{0, 0, m.exps[2]}, c}});
    for (const auto& [e, v] : term) accumulate(tower, substituted, e, v);
  }
  return original == substituted;
}

}  // namespace drinfeld
