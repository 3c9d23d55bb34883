#ifndef DRINFELD_DELIGNE_LUSZTIG_HPP
#define DRINFELD_DELIGNE_LUSZTIG_HPP

#include <vector>

#include "drinfeld/class_functions.hpp"
#include "drinfeld/context.hpp"

namespace drinfeld {

/// Lefschetz integer of the linear map M on the affine curve
/// D : x y^q - x^q y = 1 (points over the algebraic closure).
///
///  - M = I: the compactly supported Euler characteristic 1 - q^2;
///  - 1 not an eigenvalue: 0;
///  - otherwise the eigenline through v = (x, y) meets D in q+1 points when
///    c = x y^q - x^q y != 0 and in none when c = 0.
///
/// Throws SingularMatrix if M is not invertible.
long long lefschetz_D(const FieldTower& tower, const Mat2& m);

/// theta_j(gamma^k) = zeta_{q+1}^{jk}.
CycNum torus_character(const Context& ctx, unsigned j, unsigned k);

struct DLCharacter {
  unsigned j = 0;
  ClassFn values;
};

/// R^{theta_j} for j in 1..q. Throws TrivialThetaRequested for j = 0 and
/// IndexOutOfRange for j > q.
DLCharacter dl_character(const Context& ctx, unsigned j);
/// R^{theta_1}, ..., R^{theta_q}, sharing one fixed-point grid.
std::vector<DLCharacter> dl_characters(const Context& ctx);
/// The same averaging with theta_0 (cross-check only).
ClassFn dl_trivial_character(const Context& ctx);

/// Lefschetz number of a p-regular element on the projective curve C.
/// Throws PSingularInput.
long long lefschetz_C(const Context& ctx, std::size_t element);

/// Fixed-point grid for the p-regular class representatives against
/// gamma^0..gamma^q; rows follow ctx.classes.p_regular().
std::vector<std::vector<long long>> regular_fixed_point_grid(const Context& ctx);

}  // namespace drinfeld

#endif  // DRINFELD_DELIGNE_LUSZTIG_HPP
