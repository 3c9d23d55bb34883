#ifndef DRINFELD_KERNELS_HPP
#define DRINFELD_KERNELS_HPP

// Integer-valued enumeration kernels. Each has a serial reference and an
// OpenMP version; callers pick with Exec. Results are identical.

#include <cstddef>
#include <span>
#include <vector>

#include "drinfeld/fields.hpp"
#include "drinfeld/sl2_group.hpp"

namespace drinfeld::kernels {

/// label[x] = smallest index among the conjugates of x.
std::vector<std::size_t> conjugacy_labels(const GroupTable& table, Exec exec);

/// hits[i] = #{g in G : g x g^{-1} = targets[i]}, where target_slot maps an
/// element index to its position in targets (or -1).
std::vector<long long> conjugate_hits(const GroupTable& table, std::size_t x,
                                      std::span<const int> target_slot, std::size_t target_count,
                                      Exec exec);

/// #{(x, y) in F_{q^n}^2 : x y^q - x^q y = 1} for n in {1, 2}.
long long affine_curve_points(const FieldTower& tower, unsigned n, Exec exec);

/// #{(x, y) in F_{q^4}^2 : x y^q - x^q y = 1}. Writing y = x w, the count
/// is q * #{x != 0 : Tr(x^{-(q+1)}) = 0}.
long long affine_curve_points_quartic(const QuarticField& field, Exec exec);

/// fixed[i][k] = fixed-point Lefschetz integer of (scalar t_k) * g_i on the
/// affine curve, for each matrix g_i and torus element t_k.
std::vector<std::vector<long long>> lefschetz_grid(const FieldTower& tower, std::span<const Mat2> mats,
                                                   std::span<const Fq2> torus, Exec exec);

}  // namespace drinfeld::kernels

#endif  // DRINFELD_KERNELS_HPP
