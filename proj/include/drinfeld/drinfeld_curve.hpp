#ifndef DRINFELD_DRINFELD_CURVE_HPP
#define DRINFELD_DRINFELD_CURVE_HPP

#include <array>
#include <vector>

#include "drinfeld/context.hpp"
#include "drinfeld/modular_brauer.hpp"

namespace drinfeld {

/// coeff * X^x Y^y Z^z with an integer coefficient.
struct Monomial {
  long long coeff;
  std::array<unsigned, 3> exps;
};

/// X Y^q - X^q Y - Z^{q+1}.
struct CurveSpec {
  unsigned q;
  unsigned p;
  unsigned degree;
  std::vector<Monomial> form;
};

CurveSpec curve_spec(const FieldTower& tower);

/// Jacobian criterion: the partial derivatives (coefficients mod p) have no
/// common zero in P^2 over the algebraic closure.
bool smoothness_check(const CurveSpec& curve);
bool smoothness_check(const FieldTower& tower);

/// #C(F_{q^n}) for n in {1, 2, 4}: affine solutions plus the q+1 points at Z = 0.
long long count_points(const FieldTower& tower, unsigned n, Exec exec = Exec::Parallel);

struct GenusRoutes {
  long long plane;  // (d-1)(d-2)/2
  long long weil;   // from #C(F_{q^4}) = q^4 + 1 - 2 g q^2
};

GenusRoutes genus_routes(const FieldTower& tower, Exec exec = Exec::Parallel);
/// Throws GenusMismatch if the two routes disagree.
long long genus(const FieldTower& tower, Exec exec = Exec::Parallel);

/// Monomials X^a Y^b Z^c with a + b + c = q - 2.
struct CanonicalModel {
  std::vector<std::array<unsigned, 3>> basis;
  std::size_t dimension() const { return basis.size(); }
};

CanonicalModel canonical_model(unsigned q);

/// Brauer character of G^F on degree-(q-2) forms, g acting on span{X, Y}
/// by the inverse transpose and fixing Z.
BrauerFn canonical_brauer(const Context& ctx);

/// True iff f(g^{-1}(X, Y), Z) = f(X, Y, Z) as polynomials over F_q.
bool form_invariant_under(const FieldTower& tower, const Mat2& g);

}  // namespace drinfeld

#endif  // DRINFELD_DRINFELD_CURVE_HPP
