#include "drinfeld/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "drinfeld/deligne_lusztig.hpp"

namespace drinfeld::kernels {

std::vector<std::size_t> conjugacy_labels(const GroupTable& table, Exec exec) {
  const std::size_t n = table.size();
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, unset);
  if (exec == Exec::Serial) {
    // Sweep: the first unlabeled element is the smallest of its orbit.
    for (std::size_t x = 0; x < n; ++x) {
      if (label[x] != unset) continue;
      for (std::size_t g = 0; g < n; ++g) label[table.conjugate(g, x)] = x;
    }
    return label;
  }
  const auto count = static_cast<long long>(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != unset) continue;
#pragma omp parallel for schedule(static)
    for (long long g = 0; g < count; ++g) {
      std::atomic_ref<std::size_t>(label[table.conjugate(static_cast<std::size_t>(g), x)])
          .store(x, std::memory_order_relaxed);
    }
  }
  return label;
}

std::vector<long long> conjugate_hits(const GroupTable& table, std::size_t x, std::span<const int> target_slot,
                                      std::size_t target_count, Exec exec) {
  std::vector<long long> hits(target_count, 0);
  const auto n = static_cast<long long>(table.size());
  if (exec == Exec::Serial) {
    for (long long g = 0; g < n; ++g) {
      const int s = target_slot[table.conjugate(static_cast<std::size_t>(g), x)];
      if (s >= 0) ++hits[static_cast<std::size_t>(s)];
    }
    return hits;
  }
#pragma omp parallel
  {
    std::vector<long long> local(target_count, 0);
#pragma omp for schedule(static) nowait
    for (long long g = 0; g < n; ++g) {
      const int s = target_slot[table.conjugate(static_cast<std::size_t>(g), x)];
      if (s >= 0) ++local[static_cast<std::size_t>(s)];
    }
#pragma omp critical
    for (std::size_t i = 0; i < target_count; ++i) hits[i] += local[i];
  }
  return hits;
}

long long affine_curve_points(const FieldTower& tower, unsigned n, Exec exec) {
  const std::vector<Fq2> domain = n == 1 ? tower.base_elements() : tower.elements();
  const auto size = static_cast<long long>(domain.size());
  auto row = [&](long long i) {
    const Fq2 x = domain[static_cast<std::size_t>(i)];
    const Fq2 xq = tower.frobenius(x);
    long long c = 0;
    for (Fq2 y : domain) {
      const Fq2 v = tower.sub(tower.mul(x, tower.frobenius(y)), tower.mul(xq, y));
      if (v == FieldTower::one()) ++c;
    }
    return c;
  };
  long long total = 0;
  if (exec == Exec::Serial) {
    for (long long i = 0; i < size; ++i) total += row(i);
    return total;
  }
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (long long i = 0; i < size; ++i) total += row(i);
  return total;
}

long long affine_curve_points_quartic(const QuarticField& field, Exec exec) {
  const unsigned q = field.base().q();
  const auto size = static_cast<long long>(field.size());
  auto hit = [&](long long i) -> long long {
    const Fq4 x = field.element(static_cast<std::size_t>(i));
    const Fq4 c = field.inv(field.pow(x, q + 1));
    return field.trace_to_base(c) == FieldTower::zero() ? q : 0;
  };
  long long total = 0;
  if (exec == Exec::Serial) {
    for (long long i = 1; i < size; ++i) total += hit(i);
    return total;
  }
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (long long i = 1; i < size; ++i) total += hit(i);
  return total;
}

std::vector<std::vector<long long>> lefschetz_grid(const FieldTower& tower, std::span<const Mat2> mats,
                                                   std::span<const Fq2> torus, Exec exec) {
  std::vector<std::vector<long long>> grid(mats.size(), std::vector<long long>(torus.size(), 0));
  const auto cells = static_cast<long long>(mats.size() * torus.size());
  auto cell = [&](long long idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / torus.size();
    const std::size_t k = static_cast<std::size_t>(idx) % torus.size();
    grid[i][k] = lefschetz_D(tower, mat_mul(tower, scalar_action_matrix(tower, torus[k]), mats[i]));
  };
  if (exec == Exec::Serial) {
    for (long long idx = 0; idx < cells; ++idx) cell(idx);
    return grid;
  }
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < cells; ++idx) cell(idx);
  return grid;
}

}  // namespace drinfeld::kernels
