#include "drinfeld/sl2_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "drinfeld/error.hpp"
#include "drinfeld/kernels.hpp"

namespace drinfeld {

Mat2 mat_identity() { return {FieldTower::one(), FieldTower::zero(), FieldTower::zero(), FieldTower::one()}; }

Mat2 mat_scalar(Fq2 t) { return {t, FieldTower::zero(), FieldTower::zero(), t}; }

Mat2 mat_mul(const FieldTower& f, const Mat2& x, const Mat2& y) {
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

Fq2 mat_det(const FieldTower& f, const Mat2& x) { return f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c)); }

Fq2 mat_trace(const FieldTower& f, const Mat2& x) { return f.add(x.a, x.d); }

Mat2 mat_inverse(const FieldTower& f, const Mat2& x) {
  const Fq2 inv = f.inv(mat_det(f, x));
  return {f.mul(x.d, inv), f.mul(f.neg(x.b), inv), f.mul(f.neg(x.c), inv), f.mul(x.a, inv)};
}

Mat2 mat_transpose(const Mat2& x) { return {x.a, x.c, x.b, x.d}; }

GroupTable::GroupTable(const FieldTower& tower) : tower_(&tower) {
  const auto& base = tower.base_elements();
  const std::size_t q = base.size();
  index_.assign(q * q * q * q, -1);
  for (std::size_t ia = 0; ia < q; ++ia) {
    for (std::size_t ib = 0; ib < q; ++ib) {
      for (std::size_t ic = 0; ic < q; ++ic) {
        for (std::size_t id = 0; id < q; ++id) {
          const Mat2 m{base[ia], base[ib], base[ic], base[id]};
          if (mat_det(tower, m) != FieldTower::one()) continue;
          index_[((ia * q + ib) * q + ic) * q + id] = static_cast<std::int32_t>(elements_.size());
          elements_.push_back(m);
        }
      }
    }
  }
  identity_ = *index_of(mat_identity());
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = *index_of(mat_inverse(tower, elements_[i]));
}

std::size_t GroupTable::key(const Mat2& m) const {
  const std::size_t q = tower_->q();
  auto loc = [&](Fq2 x) { return static_cast<std::size_t>(tower_->base_index(x)); };
  return ((loc(m.a) * q + loc(m.b)) * q + loc(m.c)) * q + loc(m.d);
}

std::optional<std::size_t> GroupTable::index_of(const Mat2& m) const {
  for (Fq2 x : {m.a, m.b, m.c, m.d}) {
    if (!tower_->in_base(x)) return std::nullopt;
  }
  const std::int32_t i = index_[key(m)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

std::size_t GroupTable::mul(std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(index_[key(mat_mul(*tower_, elements_[i], elements_[j]))]);
}

std::size_t GroupTable::conjugate(std::size_t g, std::size_t x) const { return mul(mul(g, x), inverse_[g]); }

unsigned GroupTable::order(std::size_t i) const {
  unsigned k = 1;
  std::size_t cur = i;
  while (cur != identity_) {
    cur = mul(cur, i);
    ++k;
  }
  return k;
}

std::vector<ClassData> conjugacy_classes(const GroupTable& table, Exec exec) {
  const std::vector<std::size_t> label = kernels::conjugacy_labels(table, exec);
  std::map<std::size_t, std::vector<std::size_t>> by_rep;
  for (std::size_t x = 0; x < label.size(); ++x) by_rep[label[x]].push_back(x);
  const unsigned p = table.tower().p();
  std::vector<ClassData> out;
  out.reserve(by_rep.size());
  for (auto& [rep, members] : by_rep) {
    ClassData c;
    c.representative = rep;
    c.size = members.size();
    c.order = table.order(rep);
    c.p_regular = std::gcd(c.order, p) == 1;
    c.members = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

ClassList::ClassList(const GroupTable& table, Exec exec)
    : classes_(conjugacy_classes(table, exec)), label_(table.size()) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t x : classes_[c].members) label_[x] = c;
    if (classes_[c].p_regular) p_regular_.push_back(c);
  }
}

SubgroupData make_subgroup(const GroupTable& table, std::vector<std::size_t> members) {
  SubgroupData s;
  std::sort(members.begin(), members.end());
  s.members = std::move(members);
  s.contains.assign(table.size(), false);
  for (std::size_t m : s.members) s.contains[m] = true;
  std::vector<bool> covered(table.size(), false);
  for (std::size_t g = 0; g < table.size(); ++g) {
    if (covered[g]) continue;
    s.coset_reps.push_back(g);
    for (std::size_t h : s.members) covered[table.mul(g, h)] = true;
  }
  return s;
}

namespace {

template <typename Pred>
SubgroupData filtered(const GroupTable& table, Pred pred) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (pred(table.element(i))) members.push_back(i);
  }
  return make_subgroup(table, std::move(members));
}

}  // namespace

Mat2 unipotent(Fq2 x) { return {FieldTower::one(), x, FieldTower::zero(), FieldTower::one()}; }

SubgroupData subgroup_U(const GroupTable& table) {
  return filtered(table, [](const Mat2& m) {
    return m.c == FieldTower::zero() && m.a == FieldTower::one() && m.d == FieldTower::one();
  });
}

SubgroupData subgroup_B(const GroupTable& table) {
  return filtered(table, [](const Mat2& m) { return m.c == FieldTower::zero(); });
}

SubgroupData subgroup_S(const GroupTable& table) {
  return filtered(table, [](const Mat2& m) { return m.b == FieldTower::zero() && m.c == FieldTower::zero(); });
}

Mat2 torus_matrix(const FieldTower& tower, Fq2 t) {
  // Columns are the coordinates of t*1 and t*beta.
  const auto [a, c] = tower.base_coordinates(t);
  const auto [b, d] = tower.base_coordinates(tower.mul(t, tower.generator()));
  return {a, b, c, d};
}

TorusData nonsplit_torus(const GroupTable& table) {
  const FieldTower& tower = table.tower();
  TorusData out;
  std::vector<std::size_t> members;
  for (Fq2 t : tower.mu_subgroup()) {
    const std::size_t idx = *table.index_of(torus_matrix(tower, t));
    out.labels.push_back(idx);
    members.push_back(idx);
  }
  out.subgroup = make_subgroup(table, std::move(members));
  return out;
}

Mat2 scalar_action_matrix(const FieldTower& tower, Fq2 t) {
  if (!tower.in_mu(t)) throw Error(ErrorCode::InputNotInMu, "element is not a (q+1)-th root of unity");
  return mat_scalar(t);
}

}  // namespace drinfeld
