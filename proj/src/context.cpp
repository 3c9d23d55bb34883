#include "drinfeld/context.hpp"

namespace drinfeld {

Context::Context(unsigned q, Exec exec_policy, unsigned bound)
    : tower(FieldTower::build(q, bound)),
      field(ambient_field(tower)),
      table(tower),
      classes(table, exec_policy),
      U(subgroup_U(table)),
      B(subgroup_B(table)),
      S(subgroup_S(table)),
      torus(nonsplit_torus(table)),
      exec(exec_policy) {}

}  // namespace drinfeld
