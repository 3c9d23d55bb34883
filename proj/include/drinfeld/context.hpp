#ifndef DRINFELD_CONTEXT_HPP
#define DRINFELD_CONTEXT_HPP

#include "drinfeld/cyclotomic.hpp"
#include "drinfeld/fields.hpp"
#include "drinfeld/sl2_group.hpp"

namespace drinfeld {

/// Everything built once per q and shared read-only by the character
/// modules: the field tower, Q(zeta_N) with N = p(q^2-1), the enumerated
/// group with its classes, and the standard subgroups.
struct Context {
  explicit Context(unsigned q, Exec exec = Exec::Parallel, unsigned bound = FieldTower::kDefaultBound);
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  unsigned q() const { return tower.q(); }
  unsigned p() const { return tower.p(); }

  FieldTower tower;
  FieldPtr field;
  GroupTable table;
  ClassList classes;
  SubgroupData U;
  SubgroupData B;
  SubgroupData S;
  TorusData torus;
  Exec exec;
};

}  // namespace drinfeld

#endif  // DRINFELD_CONTEXT_HPP
