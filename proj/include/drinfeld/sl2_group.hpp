#ifndef DRINFELD_SL2_GROUP_HPP
#define DRINFELD_SL2_GROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "drinfeld/fields.hpp"

namespace drinfeld {

/// Which implementation of a data-parallel kernel to run. Serial is the
/// reference; both must produce identical results.
enum class Exec { Serial, Parallel };

/// 2x2 matrix over F_{q^2}, row major [[a, b], [c, d]], acting on columns.
struct Mat2 {
  Fq2 a, b, c, d;

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_identity();
Mat2 mat_scalar(Fq2 t);
Mat2 mat_mul(const FieldTower& f, const Mat2& x, const Mat2& y);
Mat2 mat_inverse(const FieldTower& f, const Mat2& x);
Mat2 mat_transpose(const Mat2& x);
Fq2 mat_det(const FieldTower& f, const Mat2& x);
Fq2 mat_trace(const FieldTower& f, const Mat2& x);

/// SL_2(F_q), enumerated in lexicographic order of the F_q-local indices of
/// (a, b, c, d).
class GroupTable {
 public:
  explicit GroupTable(const FieldTower& tower);

  const FieldTower& tower() const { return *tower_; }
  std::size_t size() const { return elements_.size(); }
  const Mat2& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Mat2>& elements() const { return elements_; }
  /// Index of an SL_2(F_q) matrix, or nullopt if not in the group.
  std::optional<std::size_t> index_of(const Mat2& m) const;
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  /// g x g^{-1}
  std::size_t conjugate(std::size_t g, std::size_t x) const;
  /// Multiplicative order of element i.
  unsigned order(std::size_t i) const;

 private:
  std::size_t key(const Mat2& m) const;

  const FieldTower* tower_;
  std::vector<Mat2> elements_;
  std::vector<std::int32_t> index_;  // by key over F_q^4, -1 if det != 1
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

struct ClassData {
  std::size_t representative = 0;  // smallest member index
  std::size_t size = 0;
  unsigned order = 0;
  bool p_regular = false;
  std::vector<std::size_t> members;
};

/// Conjugacy classes ordered by smallest member index.
class ClassList {
 public:
  ClassList(const GroupTable& table, Exec exec = Exec::Parallel);

  std::size_t count() const { return classes_.size(); }
  const ClassData& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ClassData>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return label_[element]; }
  /// Indices of p-regular classes, in class order.
  const std::vector<std::size_t>& p_regular() const { return p_regular_; }
  std::size_t group_order() const { return label_.size(); }

 private:
  std::vector<ClassData> classes_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> p_regular_;
};

std::vector<ClassData> conjugacy_classes(const GroupTable& table, Exec exec = Exec::Parallel);

struct SubgroupData {
  std::vector<std::size_t> members;      // sorted
  std::vector<std::size_t> coset_reps;   // left cosets g*H, greedy in enumeration order
  std::vector<bool> contains;            // membership by element index

  std::size_t order() const { return members.size(); }
  std::size_t index() const { return coset_reps.size(); }
};

SubgroupData make_subgroup(const GroupTable& table, std::vector<std::size_t> members);

/// Upper unitriangular matrices.
SubgroupData subgroup_U(const GroupTable& table);
/// Upper triangular matrices.
SubgroupData subgroup_B(const GroupTable& table);
/// Diagonal matrices.
SubgroupData subgroup_S(const GroupTable& table);

/// [[1, x], [0, 1]] for x in F_q.
Mat2 unipotent(Fq2 x);

/// Cyclic subgroup of order q+1 realizing mu_{q+1} as multiplication-by-t on
/// F_{q^2} = F_q + F_q*beta.
struct TorusData {
  SubgroupData subgroup;
  /// labels[k] = index of the matrix of gamma^k.
  std::vector<std::size_t> labels;
};

/// F_q-matrix of x |-> t*x on F_{q^2} in the basis {1, beta}.
Mat2 torus_matrix(const FieldTower& tower, Fq2 t);
TorusData nonsplit_torus(const GroupTable& table);

/// The action of t in mu_{q+1} on the (x, y)-plane over F_{q^2}: t*I.
/// Throws InputNotInMu.
Mat2 scalar_action_matrix(const FieldTower& tower, Fq2 t);

}  // namespace drinfeld

#endif  // DRINFELD_SL2_GROUP_HPP
