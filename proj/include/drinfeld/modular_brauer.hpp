#ifndef DRINFELD_MODULAR_BRAUER_HPP
#define DRINFELD_MODULAR_BRAUER_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "drinfeld/class_functions.hpp"
#include "drinfeld/context.hpp"

namespace drinfeld {

/// One value per p-regular class, in ctx.classes.p_regular() order.
class BrauerFn {
 public:
  BrauerFn() = default;
  explicit BrauerFn(std::vector<CycNum> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const CycNum& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<CycNum>& values() const { return values_; }

  BrauerFn& operator+=(const BrauerFn& o);
  friend BrauerFn operator+(BrauerFn a, const BrauerFn& b) { return a += b; }
  friend BrauerFn operator*(long long k, const BrauerFn& f);
  friend bool operator==(const BrauerFn& a, const BrauerFn& b) { return a.values_ == b.values_; }

  nlohmann::json to_json() const;

 private:
  std::vector<CycNum> values_;
};

/// Coordinates a_0..a_{q-1} in the basis [V_0], ..., [V_{q-1}] of G_0(kG).
struct G0Vector {
  std::vector<long long> coeffs;

  G0Vector& operator+=(const G0Vector& o);
  friend G0Vector operator+(G0Vector a, const G0Vector& b) { return a += b; }
  friend G0Vector operator*(long long k, G0Vector v) {
    for (auto& c : v.coeffs) c *= k;
    return v;
  }
  friend bool operator==(const G0Vector&, const G0Vector&) = default;
  friend auto operator<=>(const G0Vector&, const G0Vector&) = default;

  /// "(1, 2, 1)"
  std::string to_string() const;
  /// Basis vector e_i of length n; e_{-1} is the zero vector.
  static G0Vector unit(std::size_t n, long long i);
};

/// The eigenvalues (alpha, alpha^{-1}) in F_{q^2} of a p-regular element.
std::pair<Fq2, Fq2> eigenvalues(const FieldTower& tower, const Mat2& g);

/// Brauer character of V_i = Sym^i(k^2), from the eigenvalue formula.
/// Throws IndexOutOfRange unless 0 <= i <= q-1.
BrauerFn brauer_character_sym(const Context& ctx, unsigned i);
/// Same character computed from the explicit action on degree-i binary forms
/// and the generalized eigenspaces of that matrix.
BrauerFn brauer_character_sym_explicit(const Context& ctx, unsigned i);

/// Rows phi_{V_i}, columns p-regular classes.
CycMatrix brauer_matrix(const Context& ctx);

BrauerFn restrict_to_p_regular(const Context& ctx, const ClassFn& chi);
BrauerFn conj_brauer(const BrauerFn& f);

/// |G| at the identity, 0 elsewhere.
ClassFn regular_character(const Context& ctx);

/// The decomposition map, expanding p-regular restrictions in the Brauer
/// basis by an exact solve against the inverted Brauer matrix.
class DecompositionMap {
 public:
  /// Throws SingularBrauerMatrix.
  explicit DecompositionMap(const Context& ctx);

  const CycMatrix& matrix() const { return matrix_; }
  const CycNum& determinant() const { return determinant_; }

  /// Exact coefficients of f in the basis, before integrality.
  std::vector<CycNum> coordinates(const BrauerFn& f) const;
  /// Throws NonIntegralSolution.
  G0Vector decompose(const BrauerFn& f) const;
  G0Vector operator()(const ClassFn& chi) const;

 private:
  const Context* ctx_;
  CycMatrix matrix_;
  CycMatrix inverse_;  // inverse_[i][c]: coefficient of f(c) in a_i
  CycNum determinant_;
};

G0Vector decomposition_map(const Context& ctx, const ClassFn& chi);

}  // namespace drinfeld

#endif  // DRINFELD_MODULAR_BRAUER_HPP
