#ifndef DRINFELD_CLASS_FUNCTIONS_HPP
#define DRINFELD_CLASS_FUNCTIONS_HPP

#include <utility>
#include <vector>

#include <json.hpp>

#include "drinfeld/context.hpp"
#include "drinfeld/cyclotomic.hpp"

namespace drinfeld {

/// One exact value per conjugacy class, in ClassList order.
class ClassFn {
 public:
  ClassFn() = default;
  explicit ClassFn(std::vector<CycNum> values, bool is_virtual = false)
      : values_(std::move(values)), virtual_(is_virtual) {}

  std::size_t size() const { return values_.size(); }
  const CycNum& operator[](std::size_t c) const { return values_[c]; }
  const std::vector<CycNum>& values() const { return values_; }
  /// Marks a Z-combination of characters rather than a character.
  bool is_virtual() const { return virtual_; }

  ClassFn& operator+=(const ClassFn& o);
  ClassFn& operator-=(const ClassFn& o);
  ClassFn operator-() const;
  friend ClassFn operator+(ClassFn a, const ClassFn& b) { return a += b; }
  friend ClassFn operator-(ClassFn a, const ClassFn& b) { return a -= b; }
  friend ClassFn operator*(long long k, const ClassFn& f);
  friend bool operator==(const ClassFn& a, const ClassFn& b) { return a.values_ == b.values_; }

  ClassFn conj() const;
  nlohmann::json to_json() const;

 private:
  std::vector<CycNum> values_;
  bool virtual_ = false;
};

ClassFn constant_class_fn(const Context& ctx, long long value);
ClassFn trivial_character(const Context& ctx);

/// (1/|G|) sum_c |c| f(c) conj(h(c)). Throws ClassMismatch.
CycNum inner_product(const Context& ctx, const ClassFn& f, const ClassFn& h);

/// Induces a class function of the subgroup (values indexed like
/// sub.members) to G^F. Throws NotClassFunctionOnSubgroup.
ClassFn induce(const Context& ctx, const SubgroupData& sub, const std::vector<CycNum>& values);
ClassFn induce_trivial(const Context& ctx, const SubgroupData& sub);

/// Number of fixed points on the q+1 lines of F_q^2.
long long fixed_lines(const FieldTower& tower, const Mat2& g);
ClassFn permutation_character_P1(const Context& ctx);
ClassFn steinberg(const Context& ctx);

/// x |-> psi(x) on F_q = U^F, values indexed by F_q local index.
struct AdditiveCharacter {
  int label = 1;
  std::vector<CycNum> values;

  const CycNum& operator()(const FieldTower& tower, Fq2 x) const {
    return values[static_cast<std::size_t>(tower.base_index(x))];
  }
};

/// x |-> zeta_p^{Tr(scale * x)}.
AdditiveCharacter scaled_additive_character(const Context& ctx, Fq2 scale, int label = 1);
/// psi_1 = zeta_p^{Tr(x)}; psi_2(x) = psi_1(g1 x) for q odd, psi_2 = psi_1 for q even.
std::pair<AdditiveCharacter, AdditiveCharacter> additive_characters(const Context& ctx);

ClassFn gelfand_graev_from(const Context& ctx, const AdditiveCharacter& psi);
/// Ind_{U^F}^{G^F} psi_i, i in {1, 2}. Throws IndexOutOfRange otherwise.
ClassFn gelfand_graev(const Context& ctx, int i);

}  // namespace drinfeld

#endif  // DRINFELD_CLASS_FUNCTIONS_HPP
