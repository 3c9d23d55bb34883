#include "drinfeld/class_functions.hpp"

#include "drinfeld/error.hpp"
#include "drinfeld/kernels.hpp"

namespace drinfeld {

ClassFn& ClassFn::operator+=(const ClassFn& o) {
  if (o.size() != size()) throw Error(ErrorCode::ClassMismatch, "class function lengths differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  virtual_ = virtual_ || o.virtual_;
  return *this;
}

ClassFn& ClassFn::operator-=(const ClassFn& o) {
  if (o.size() != size()) throw Error(ErrorCode::ClassMismatch, "class function lengths differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  virtual_ = true;
  return *this;
}

ClassFn ClassFn::operator-() const {
  ClassFn out = *this;
  for (auto& v : out.values_) v = -v;
  out.virtual_ = true;
  return out;
}

ClassFn operator*(long long k, const ClassFn& f) {
  ClassFn out = f;
  for (auto& v : out.values_) v *= mpq_class(static_cast<long>(k));
  out.virtual_ = f.virtual_ || k < 0;
  return out;
}

ClassFn ClassFn::conj() const {
  ClassFn out = *this;
  for (auto& v : out.values_) v = v.conj();
  return out;
}

nlohmann::json ClassFn::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values_) out.push_back(v.to_json());
  return out;
}

ClassFn constant_class_fn(const Context& ctx, long long value) {
  return ClassFn(std::vector<CycNum>(ctx.classes.count(), CycNum(ctx.field, value)));
}

ClassFn trivial_character(const Context& ctx) { return constant_class_fn(ctx, 1); }

CycNum inner_product(const Context& ctx, const ClassFn& f, const ClassFn& h) {
  if (f.size() != ctx.classes.count() || h.size() != ctx.classes.count()) {
    throw Error(ErrorCode::ClassMismatch, "class function does not match the class list");
  }
  CycNum acc(ctx.field);
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c].is_zero() || h[c].is_zero()) continue;
    acc += (f[c] * h[c].conj()) * mpq_class(static_cast<long>(ctx.classes[c].size));
  }
  return acc / mpq_class(static_cast<long>(ctx.table.size()));
}

ClassFn induce(const Context& ctx, const SubgroupData& sub, const std::vector<CycNum>& values) {
  if (values.size() != sub.order()) {
    throw Error(ErrorCode::NotClassFunctionOnSubgroup, "one value per subgroup member required");
  }
  const GroupTable& table = ctx.table;
  std::vector<int> slot(table.size(), -1);
  for (std::size_t i = 0; i < sub.members.size(); ++i) slot[sub.members[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < sub.members.size(); ++i) {
    for (std::size_t u : sub.members) {
      const std::size_t conj = table.conjugate(u, sub.members[i]);
      if (!(values[static_cast<std::size_t>(slot[conj])] == values[i])) {
        throw Error(ErrorCode::NotClassFunctionOnSubgroup, "values not constant on subgroup classes");
      }
    }
  }

  std::vector<CycNum> out;
  out.reserve(ctx.classes.count());
  const mpq_class order(static_cast<long>(sub.order()));
  for (const ClassData& c : ctx.classes.classes()) {
    const std::vector<long long> hits =
        kernels::conjugate_hits(table, c.representative, slot, sub.order(), ctx.exec);
    CycNum acc(ctx.field);
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (hits[i] != 0) acc += values[i] * mpq_class(static_cast<long>(hits[i]));
    }
    out.push_back(acc / order);
  }
  return ClassFn(std::move(out));
}

ClassFn induce_trivial(const Context& ctx, const SubgroupData& sub) {
  return induce(ctx, sub, std::vector<CycNum>(sub.order(), CycNum(ctx.field, 1)));
}

long long fixed_lines(const FieldTower& tower, const Mat2& g) {
  auto fixes = [&](Fq2 x, Fq2 y) {
    const Fq2 gx = tower.add(tower.mul(g.a, x), tower.mul(g.b, y));
    const Fq2 gy = tower.add(tower.mul(g.c, x), tower.mul(g.d, y));
    return tower.sub(tower.mul(gx, y), tower.mul(gy, x)) == FieldTower::zero();
  };
  long long count = fixes(FieldTower::zero(), FieldTower::one()) ? 1 : 0;
  for (Fq2 y : tower.base_elements()) {
    if (fixes(FieldTower::one(), y)) ++count;
  }
  return count;
}

ClassFn permutation_character_P1(const Context& ctx) {
  std::vector<CycNum> out;
  for (const ClassData& c : ctx.classes.classes()) {
    out.emplace_back(ctx.field, fixed_lines(ctx.tower, ctx.table.element(c.representative)));
  }
  return ClassFn(std::move(out));
}

ClassFn steinberg(const Context& ctx) {
  ClassFn st = permutation_character_P1(ctx) - trivial_character(ctx);
  return ClassFn(st.values(), false);
}

AdditiveCharacter scaled_additive_character(const Context& ctx, Fq2 scale, int label) {
  AdditiveCharacter psi;
  psi.label = label;
  for (Fq2 x : ctx.tower.base_elements()) {
    const unsigned tr = ctx.tower.trace_to_prime(ctx.tower.mul(scale, x));
    psi.values.push_back(root_of_unity(ctx.field, ctx.p(), tr));
  }
  return psi;
}

std::pair<AdditiveCharacter, AdditiveCharacter> additive_characters(const Context& ctx) {
  AdditiveCharacter psi1 = scaled_additive_character(ctx, FieldTower::one(), 1);
  const Fq2 eps = ctx.p() == 2 ? FieldTower::one() : ctx.tower.base_generator();
  AdditiveCharacter psi2 = scaled_additive_character(ctx, eps, 2);
  return {std::move(psi1), std::move(psi2)};
}

ClassFn gelfand_graev_from(const Context& ctx, const AdditiveCharacter& psi) {
  std::vector<CycNum> values;
  values.reserve(ctx.U.order());
  for (std::size_t m : ctx.U.members) values.push_back(psi(ctx.tower, ctx.table.element(m).b));
  return induce(ctx, ctx.U, values);
}

ClassFn gelfand_graev(const Context& ctx, int i) {
  if (i != 1 && i != 2) throw Error(ErrorCode::IndexOutOfRange, "Gelfand-Graev index must be 1 or 2");
  auto [psi1, psi2] = additive_characters(ctx);
  return gelfand_graev_from(ctx, i == 1 ? psi1 : psi2);
}

}  // namespace drinfeld
