#include "drinfeld/modular_brauer.hpp"

#include <sstream>

#include "drinfeld/error.hpp"

namespace drinfeld {

BrauerFn& BrauerFn::operator+=(const BrauerFn& o) {
  if (o.size() != size()) throw Error(ErrorCode::ClassMismatch, "Brauer function lengths differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

BrauerFn operator*(long long k, const BrauerFn& f) {
  BrauerFn out = f;
  for (auto& v : out.values_) v *= mpq_class(static_cast<long>(k));
  return out;
}

nlohmann::json BrauerFn::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values_) out.push_back(v.to_json());
  return out;
}

G0Vector& G0Vector::operator+=(const G0Vector& o) {
  if (o.coeffs.size() != coeffs.size()) throw Error(ErrorCode::ClassMismatch, "G0 vector lengths differ");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

std::string G0Vector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i];
  os << ")";
  return os.str();
}

G0Vector G0Vector::unit(std::size_t n, long long i) {
  G0Vector v{std::vector<long long>(n, 0)};
  if (i >= 0) v.coeffs.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

std::pair<Fq2, Fq2> eigenvalues(const FieldTower& tower, const Mat2& g) {
  if (g.b == FieldTower::zero() && g.c == FieldTower::zero() && g.a == g.d) return {g.a, g.d};
  const Fq2 tr = mat_trace(tower, g);
  const Fq2 det = mat_det(tower, g);
  for (Fq2 x : tower.elements()) {
    if (x == FieldTower::zero()) continue;
    const Fq2 v = tower.add(tower.sub(tower.mul(x, x), tower.mul(tr, x)), det);
    if (v == FieldTower::zero()) return {x, tower.div(det, x)};
  }
  throw Error(ErrorCode::PSingularInput, "characteristic polynomial has no root in F_{q^2}");
}

BrauerFn brauer_character_sym(const Context& ctx, unsigned i) {
  if (i >= ctx.q()) throw Error(ErrorCode::IndexOutOfRange, "i=" + std::to_string(i));
  std::vector<CycNum> values;
  for (std::size_t c : ctx.classes.p_regular()) {
    const auto [alpha, alpha_inv] = eigenvalues(ctx.tower, ctx.table.element(ctx.classes[c].representative));
    const long long e = teichmueller_exponent(alpha, ctx.tower, ctx.field);
    RootSum s(ctx.field);
    for (long long m = 0; m <= static_cast<long long>(i); ++m) s.add(e * (static_cast<long long>(i) - 2 * m));
    values.push_back(s.value());
  }
  return BrauerFn(std::move(values));
}

namespace {

using DenseMatrix = std::vector<std::vector<Fq2>>;

DenseMatrix dense_mul(const FieldTower& f, const DenseMatrix& x, const DenseMatrix& y) {
  const std::size_t n = x.size();
  DenseMatrix out(n, std::vector<Fq2>(n, FieldTower::zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == FieldTower::zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = f.add(out[i][j], f.mul(x[i][k], y[k][j]));
    }
  }
  return out;
}

std::size_t dense_rank(const FieldTower& f, DenseMatrix m) {
  const std::size_t n = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m[piv][col] == FieldTower::zero()) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const Fq2 inv = f.inv(m[rank][col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == FieldTower::zero()) continue;
      const Fq2 factor = f.mul(m[r][col], inv);
      for (std::size_t j = 0; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// Matrix of g on Sym^i: column r holds g.(e1^{i-r} e2^r) in the same basis.
DenseMatrix symmetric_power_matrix(const FieldTower& f, const Mat2& g, unsigned i) {
  const std::size_t n = i + 1;
  DenseMatrix out(n, std::vector<Fq2>(n, FieldTower::zero()));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Fq2> poly{FieldTower::one()};  // coefficient of e2^k
    auto times_linear = [&](Fq2 u, Fq2 v) {   // (u e1 + v e2)
      std::vector<Fq2> next(poly.size() + 1, FieldTower::zero());
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] = f.add(next[k], f.mul(poly[k], u));
        next[k + 1] = f.add(next[k + 1], f.mul(poly[k], v));
      }
      poly = std::move(next);
    };
    for (std::size_t t = 0; t < i - r; ++t) times_linear(g.a, g.c);
    for (std::size_t t = 0; t < r; ++t) times_linear(g.b, g.d);
    for (std::size_t k = 0; k < n; ++k) out[k][r] = poly[k];
  }
  return out;
}

}  // namespace

BrauerFn brauer_character_sym_explicit(const Context& ctx, unsigned i) {
  if (i >= ctx.q()) throw Error(ErrorCode::IndexOutOfRange, "i=" + std::to_string(i));
  const FieldTower& f = ctx.tower;
  const std::size_t n = i + 1;
  std::vector<CycNum> values;
  for (std::size_t c : ctx.classes.p_regular()) {
    const DenseMatrix a = symmetric_power_matrix(f, ctx.table.element(ctx.classes[c].representative), i);
    RootSum s(ctx.field);
    std::size_t found = 0;
    for (Fq2 lambda : f.elements()) {
      if (lambda == FieldTower::zero()) continue;
      DenseMatrix shifted = a;
      for (std::size_t d = 0; d < n; ++d) shifted[d][d] = f.sub(shifted[d][d], lambda);
      DenseMatrix power = shifted;
      for (std::size_t e = 1; e < n; ++e) power = dense_mul(f, power, shifted);
      const std::size_t mult = n - dense_rank(f, power);
      if (mult == 0) continue;
      s.add(teichmueller_exponent(lambda, f, ctx.field), static_cast<long long>(mult));
      found += mult;
    }
    if (found != n) throw Error(ErrorCode::PSingularInput, "eigenvalues not in F_{q^2}");
    values.push_back(s.value());
  }
  return BrauerFn(std::move(values));
}

CycMatrix brauer_matrix(const Context& ctx) {
  CycMatrix m;
  for (unsigned i = 0; i < ctx.q(); ++i) m.push_back(brauer_character_sym(ctx, i).values());
  return m;
}

BrauerFn restrict_to_p_regular(const Context& ctx, const ClassFn& chi) {
  if (chi.size() != ctx.classes.count()) throw Error(ErrorCode::ClassMismatch, "class function length");
  std::vector<CycNum> values;
  for (std::size_t c : ctx.classes.p_regular()) values.push_back(chi[c]);
  return BrauerFn(std::move(values));
}

BrauerFn conj_brauer(const BrauerFn& f) {
  std::vector<CycNum> values;
  for (const auto& v : f.values()) values.push_back(v.conj());
  return BrauerFn(std::move(values));
}

ClassFn regular_character(const Context& ctx) {
  std::vector<CycNum> values(ctx.classes.count(), CycNum(ctx.field));
  values[ctx.classes.class_of(ctx.table.identity())] = CycNum(ctx.field, static_cast<long long>(ctx.table.size()));
  return ClassFn(std::move(values));
}

DecompositionMap::DecompositionMap(const Context& ctx) : ctx_(&ctx), matrix_(brauer_matrix(ctx)) {
  const std::size_t n = matrix_.size();
  // Unknowns a_i, one equation per p-regular class: A[c][i] = phi_i(c).
  CycMatrix a(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) a[c][i] = matrix_[i][c];
  }
  std::vector<std::vector<CycNum>> identity(n, std::vector<CycNum>(n, CycNum(ctx.field)));
  for (std::size_t c = 0; c < n; ++c) identity[c][c] = CycNum(ctx.field, 1);
  std::vector<std::vector<CycNum>> columns;
  try {
    columns = linear_solve(a, identity);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) throw Error(ErrorCode::SingularBrauerMatrix, e.what());
    throw;
  }
  inverse_.assign(n, std::vector<CycNum>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) inverse_[i][c] = columns[c][i];
  }
  determinant_ = drinfeld::determinant(matrix_);
}

std::vector<CycNum> DecompositionMap::coordinates(const BrauerFn& f) const {
  const std::size_t n = inverse_.size();
  if (f.size() != n) throw Error(ErrorCode::ClassMismatch, "Brauer function length");
  std::vector<CycNum> out;
  for (std::size_t i = 0; i < n; ++i) {
    CycNum acc(ctx_->field);
    for (std::size_t c = 0; c < n; ++c) {
      if (!f[c].is_zero() && !inverse_[i][c].is_zero()) acc += inverse_[i][c] * f[c];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

G0Vector DecompositionMap::decompose(const BrauerFn& f) const {
  G0Vector v;
  for (const CycNum& a : coordinates(f)) {
    auto n = a.as_integer();
    if (!n || !n->fits_slong_p()) {
      throw Error(ErrorCode::NonIntegralSolution, "coefficient " + a.to_string() + " is not an integer");
    }
    v.coeffs.push_back(n->get_si());
  }
  return v;
}

G0Vector DecompositionMap::operator()(const ClassFn& chi) const { return decompose(restrict_to_p_regular(*ctx_, chi)); }

G0Vector decomposition_map(const Context& ctx, const ClassFn& chi) { return DecompositionMap(ctx)(chi); }

}  // namespace drinfeld
