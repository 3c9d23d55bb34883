#include "drinfeld/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "drinfeld/class_functions.hpp"
#include "drinfeld/deligne_lusztig.hpp"
#include "drinfeld/drinfeld_curve.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/modular_brauer.hpp"

namespace drinfeld {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "field-sanity",          "group-sanity",         "curve-geometry",   "dl-orthogonality",
      "structural",            "canonical-decomposition", "lefschetz-curve", "dl-reduction-pattern",
      "gg-dl-identity",        "gg-reduction",         "regular-reduction", "de-rham-self-duality",
  };
  return names;
}

std::set<unsigned> supported_q(bool extended) {
  std::set<unsigned> s{2, 3, 4, 5, 7, 8, 9, 11};
  if (extended) s.insert(13);
  return s;
}

std::string format_element(const FieldTower& tower, Fq2 x) {
  if (x.v < tower.p()) return std::to_string(x.v);
  return "g^" + std::to_string(tower.discrete_log(x));
}

std::string format_matrix(const FieldTower& tower, const Mat2& m) {
  return "[[" + format_element(tower, m.a) + "," + format_element(tower, m.b) + "],[" +
         format_element(tower, m.c) + "," + format_element(tower, m.d) + "]]";
}

namespace {

json g0_json(const G0Vector& v) { return v.coeffs; }

// Lazily computed characters shared between checks of one run.
class Workbench {
 public:
  explicit Workbench(const Context& ctx) : ctx_(ctx) {}

  const Context& ctx() const { return ctx_; }

  const std::vector<DLCharacter>& dl() {
    if (!dl_) dl_ = dl_characters(ctx_);
    return *dl_;
  }
  const ClassFn& gg(int i) {
    auto& slot = i == 1 ? gg1_ : gg2_;
    if (!slot) slot = gelfand_graev(ctx_, i);
    return *slot;
  }
  const ClassFn& ind_U() {
    if (!ind_u_) ind_u_ = induce_trivial(ctx_, ctx_.U);
    return *ind_u_;
  }
  const ClassFn& ind_B() {
    if (!ind_b_) ind_b_ = induce_trivial(ctx_, ctx_.B);
    return *ind_b_;
  }
  const DecompositionMap& dmap() {
    if (!dmap_) dmap_.emplace(ctx_);
    return *dmap_;
  }
  const BrauerFn& canonical() {
    if (!canonical_) canonical_ = canonical_brauer(ctx_);
    return *canonical_;
  }

 private:
  const Context& ctx_;
  std::optional<std::vector<DLCharacter>> dl_;
  std::optional<ClassFn> gg1_, gg2_, ind_u_, ind_b_;
  std::optional<DecompositionMap> dmap_;
  std::optional<BrauerFn> canonical_;
};

// Collects named expectations; a check passes iff every expectation holds.
class Recorder {
 public:
  void expect(const std::string& what, bool ok, json info = json::object()) {
    if (!ok) {
      ok_ = false;
      failures_.push_back({{"what", what}, {"info", std::move(info)}});
    }
  }
  void note(const std::string& key, json value) { details_[key] = std::move(value); }
  bool ok() const { return ok_; }
  json details() const {
    json d = details_;
    if (!failures_.empty()) d["failures"] = failures_;
    return d;
  }

 private:
  bool ok_ = true;
  json details_ = json::object();
  json failures_ = json::array();
};

json class_fn_diff(const Context& ctx, const ClassFn& lhs, const ClassFn& rhs) {
  json rows = json::array();
  for (std::size_t c = 0; c < lhs.size(); ++c) {
    if (lhs[c] == rhs[c]) continue;
    rows.push_back({{"class", c},
                    {"representative", format_matrix(ctx.tower, ctx.table.element(ctx.classes[c].representative))},
                    {"lhs", lhs[c].to_json()},
                    {"rhs", rhs[c].to_json()}});
  }
  return rows;
}

G0Vector expected_canonical(unsigned q) {
  G0Vector v{std::vector<long long>(q, 1)};
  v.coeffs[q - 1] = 0;
  return v;
}

G0Vector expected_gelfand_graev(unsigned q) {
  G0Vector v{std::vector<long long>(q, 2)};
  v.coeffs[0] = 1;
  v.coeffs[q - 1] = 1;
  return v;
}

void field_sanity(Workbench& wb, Recorder& r) {
  const FieldTower& f = wb.ctx().tower;
  const unsigned q = f.q();
  r.note("p", f.p());
  r.note("m", f.m());
  r.note("modulus", f.modulus());
  r.expect("order(g2) = q^2-1", f.order(f.generator()) == q * q - 1);
  r.expect("order(g1) = q-1", f.order(f.base_generator()) == q - 1);
  const Fq2 gamma = f.gamma();
  r.expect("order(gamma) = q+1", f.order(gamma) == q + 1);
  r.expect("gamma * gamma^q = 1", f.mul(gamma, f.frobenius(gamma)) == FieldTower::one());

  std::size_t fixed = 0;
  bool involution = true;
  bool round_trip = true;
  std::map<std::uint16_t, unsigned> fibers;
  for (Fq2 x : f.elements()) {
    involution = involution && f.frobenius(f.frobenius(x)) == x;
    if (f.frobenius(x) == x) {
      ++fixed;
      r.expect("Frobenius-fixed element lies in F_q", f.in_base(x), format_element(f, x));
    }
    if (x == FieldTower::zero()) continue;
    round_trip = round_trip && f.exp(f.discrete_log(x)) == x;
    ++fibers[f.norm(x).v];
  }
  r.expect("Frobenius is an involution", involution);
  r.expect("Frobenius fixes exactly q elements", fixed == q, fixed);
  r.expect("discrete log round trip", round_trip);
  bool fibers_ok = fibers.size() == q - 1;
  for (const auto& [v, n] : fibers) fibers_ok = fibers_ok && n == q + 1 && f.in_base(Fq2{v});
  r.expect("norm map onto F_q^x with fibers of size q+1", fibers_ok);
  const auto mu = f.mu_subgroup();
  bool mu_ok = mu.size() == q + 1;
  for (Fq2 t : mu) mu_ok = mu_ok && f.pow(t, q + 1) == FieldTower::one();
  r.expect("mu_{q+1} has q+1 elements of order dividing q+1", mu_ok);
}

void group_sanity(Workbench& wb, Recorder& r) {
  const Context& ctx = wb.ctx();
  const std::size_t q = ctx.q();
  const std::size_t order = q * q * q - q;
  r.note("order", ctx.table.size());
  r.note("classes", ctx.classes.count());
  r.note("p_regular_classes", ctx.classes.p_regular().size());
  r.expect("|G| = q^3 - q", ctx.table.size() == order);
  std::size_t total = 0;
  bool divides = true;
  for (const auto& c : ctx.classes.classes()) {
    total += c.size;
    divides = divides && order % c.size == 0;
  }
  r.expect("class sizes sum to |G|", total == order);
  r.expect("class sizes divide |G|", divides);
  r.expect("number of p-regular classes = q", ctx.classes.p_regular().size() == q);
  r.expect("|U| = q", ctx.U.order() == q);
  r.expect("p does not divide [G:U]", ctx.U.index() % ctx.p() != 0);
  r.expect("|B| = q(q-1)", ctx.B.order() == q * (q - 1));
  r.expect("|S| = q-1", ctx.S.order() == q - 1);

  const auto& torus = ctx.torus;
  r.expect("torus has order q+1", torus.subgroup.order() == q + 1);
  r.expect("torus generator has order q+1", ctx.table.order(torus.labels[1]) == q + 1);
  bool hom = true;
  bool abelian = true;
  for (std::size_t a = 0; a <= q; ++a) {
    for (std::size_t b = 0; b <= q; ++b) {
      hom = hom && ctx.table.mul(torus.labels[a], torus.labels[b]) == torus.labels[(a + b) % (q + 1)];
      abelian = abelian && ctx.table.mul(torus.labels[a], torus.labels[b]) ==
                               ctx.table.mul(torus.labels[b], torus.labels[a]);
    }
  }
  r.expect("torus labeling is a homomorphism", hom);
  r.expect("torus is abelian", abelian);
  bool split_only_central = true;
  for (std::size_t k = 0; k <= q; ++k) {
    const Mat2& m = ctx.table.element(torus.labels[k]);
    const bool central = m.b == FieldTower::zero() && m.c == FieldTower::zero() && m.a == m.d;
    const Fq2 tr = mat_trace(ctx.tower, m);
    bool rational_eigen = false;
    for (Fq2 x : ctx.tower.base_elements()) {
      if (x == FieldTower::zero()) continue;
      if (ctx.tower.add(ctx.tower.sub(ctx.tower.mul(x, x), ctx.tower.mul(tr, x)), FieldTower::one()) ==
          FieldTower::zero()) {
        rational_eigen = true;
      }
    }
    if (!central && rational_eigen) split_only_central = false;
  }
  r.expect("only central torus elements are diagonalizable over F_q", split_only_central);
}

void curve_geometry(Workbench& wb, Recorder& r) {
  const Context& ctx = wb.ctx();
  const FieldTower& f = ctx.tower;
  const long long q = f.q();
  const bool smooth = smoothness_check(f);
  const long long n1 = count_points(f, 1, ctx.exec);
  const long long n2 = count_points(f, 2, ctx.exec);
  const long long n4 = count_points(f, 4, ctx.exec);
  const GenusRoutes g = genus_routes(f, ctx.exec);
  const std::size_t dim = canonical_model(f.q()).dimension();
  r.note("smooth", smooth);
  r.note("points_Fq", n1);
  r.note("points_Fq2", n2);
  r.note("points_Fq4", n4);
  r.note("genus_plane", g.plane);
  r.note("genus_weil", g.weil);
  r.note("canonical_dimension", dim);
  r.expect("curve is smooth", smooth);
  r.expect("#C(F_q) = q+1", n1 == q + 1, {{"expected", q + 1}, {"computed", n1}});
  const long long n2_expected = q % 2 == 0 ? q * q * q + 1 : q + 1;
  r.expect("#C(F_q^2) = q^3+1 (q even), q+1 (q odd)", n2 == n2_expected, {{"expected", n2_expected}, {"computed", n2}});
  r.expect("#C(F_q^4) = q^3+1", n4 == q * q * q + 1, {{"expected", q * q * q + 1}, {"computed", n4}});
  r.expect("genus routes agree at q(q-1)/2", g.plane == g.weil && g.plane == q * (q - 1) / 2);
  r.expect("dim canonical model = genus", static_cast<long long>(dim) == g.plane);
  bool invariant = true;
  for (Fq2 x : f.base_elements()) {
    const Mat2 lower{FieldTower::one(), FieldTower::zero(), x, FieldTower::one()};
    invariant = invariant && form_invariant_under(f, unipotent(x)) && form_invariant_under(f, lower);
  }
  r.expect("defining form invariant under elementary generators", invariant);
}

void dl_orthogonality(Workbench& wb, Recorder& r) {
  const Context& ctx = wb.ctx();
  const unsigned q = ctx.q();
  const auto& dl = wb.dl();
  const std::size_t id_class = ctx.classes.class_of(ctx.table.identity());
  const ClassFn one = trivial_character(ctx);
  json gram = json::array();
  for (const auto& rj : dl) {
    r.expect("R(1) = 1-q", rj.values[id_class] == CycNum(ctx.field, 1 - static_cast<long long>(q)),
             {{"j", rj.j}, {"computed", rj.values[id_class].to_json()}});
    r.expect("<R, 1> = 0", inner_product(ctx, rj.values, one).is_zero(), {{"j", rj.j}});
    json row = json::array();
    for (const auto& rk : dl) {
      const CycNum ip = inner_product(ctx, rj.values, rk.values);
      const long long expected = (rj.j == rk.j ? 1 : 0) + (rj.j == q + 1 - rk.j ? 1 : 0);
      r.expect("<R_j, R_k> = [j=k] + [j=q+1-k]", ip == CycNum(ctx.field, expected),
               {{"j", rj.j}, {"k", rk.j}, {"computed", ip.to_json()}, {"expected", expected}});
      auto n = ip.as_integer();
      row.push_back(n ? json(n->get_si()) : ip.to_json());
    }
    gram.push_back(row);
    r.expect("conj(R_j) = R_{q+1-j}", rj.values.conj() == dl[q - rj.j].values, {{"j", rj.j}});
  }
  r.note("gram", gram);

  // Split regular semisimple classes: p-regular, not central, eigenvalues in F_q.
  std::size_t split = 0;
  for (std::size_t c : ctx.classes.p_regular()) {
    const Mat2& g = ctx.table.element(ctx.classes[c].representative);
    if (g.b == FieldTower::zero() && g.c == FieldTower::zero() && g.a == g.d) continue;
    const auto [alpha, beta] = eigenvalues(ctx.tower, g);
    if (!ctx.tower.in_base(alpha)) continue;
    ++split;
    for (const auto& rj : dl) r.expect("R vanishes on split regular classes", rj.values[c].is_zero(), {{"j", rj.j}, {"class", c}});
  }
  r.note("split_regular_classes", split);

  const ClassFn trivial_dl = dl_trivial_character(ctx);
  const ClassFn st = steinberg(ctx);
  for (std::size_t c : ctx.classes.p_regular()) {
    r.expect("theta_0 averaging equals 1 - St on p-regular classes", trivial_dl[c] == one[c] - st[c], {{"class", c}});
  }
  if (ctx.p() != 2) {
    // central twist R(-g) = theta(-1) R(g)
    const std::size_t minus = *ctx.table.index_of(mat_scalar(ctx.tower.from_int(-1)));
    for (const auto& rj : dl) {
      const CycNum twist = torus_character(ctx, rj.j, (q + 1) / 2);
      for (std::size_t c : ctx.classes.p_regular()) {
        const std::size_t g = ctx.classes[c].representative;
        const std::size_t mg = ctx.classes.class_of(ctx.table.mul(minus, g));
        r.expect("central twist R(-g) = theta(-1) R(g)", rj.values[mg] == twist * rj.values[c],
                 {{"j", rj.j}, {"class", c}});
      }
    }
  }
}

void structural(Workbench& wb, Recorder& r) {
  const Context& ctx = wb.ctx();
  const unsigned q = ctx.q();
  const DecompositionMap& d = wb.dmap();
  r.note("brauer_determinant", d.determinant().to_json());
  r.expect("Brauer matrix nonsingular", !d.determinant().is_zero());

  const ClassFn one = trivial_character(ctx);
  const ClassFn perm = permutation_character_P1(ctx);
  const ClassFn st = steinberg(ctx);
  r.expect("<St, St> = 1", inner_product(ctx, st, st) == CycNum(ctx.field, 1));
  r.expect("<perm, perm> = 2", inner_product(ctx, perm, perm) == CycNum(ctx.field, 2));
  r.expect("<Ind_B 1, 1> = 1", inner_product(ctx, wb.ind_B(), one) == CycNum(ctx.field, 1));
  r.expect("<Ind_B 1, St> = 1", inner_product(ctx, wb.ind_B(), st) == CycNum(ctx.field, 1));
  r.expect("Ind_B 1 = perm", wb.ind_B() == perm);
  for (int i : {1, 2}) {
    r.expect("<Gamma_i, 1> = 0", inner_product(ctx, wb.gg(i), one).is_zero(), {{"i", i}});
  }

  // Independence of the orbit representative: psi(a^2 x) for every a in F_q^x.
  auto [psi1, psi2] = additive_characters(ctx);
  for (int i : {1, 2}) {
    const Fq2 eps = i == 1 || ctx.p() == 2 ? FieldTower::one() : ctx.tower.base_generator();
    bool same = true;
    for (Fq2 a : ctx.tower.base_elements()) {
      if (a == FieldTower::zero()) continue;
      const auto psi = scaled_additive_character(ctx, ctx.tower.mul(eps, ctx.tower.mul(a, a)), i);
      same = same && gelfand_graev_from(ctx, psi) == wb.gg(i);
    }
    r.expect("Gamma_i independent of the orbit representative", same, {{"i", i}});
  }

  std::vector<std::pair<std::string, ClassFn>> characters{
      {"trivial", one},         {"steinberg", st},          {"perm_P1", perm},
      {"ind_B", wb.ind_B()},    {"ind_U", wb.ind_U()},      {"gamma_1", wb.gg(1)},
      {"gamma_2", wb.gg(2)},    {"regular", regular_character(ctx)}};
  for (const auto& rj : wb.dl()) characters.emplace_back("R_" + std::to_string(rj.j), rj.values);
  json decomps = json::object();
  std::map<std::string, G0Vector> solved;
  const std::size_t id_class = ctx.classes.class_of(ctx.table.identity());
  for (const auto& [name, chi] : characters) {
    try {
      const G0Vector v = d(chi);
      solved[name] = v;
      decomps[name] = g0_json(v);
      long long dim = 0;
      for (std::size_t i = 0; i < v.coeffs.size(); ++i) dim += v.coeffs[i] * static_cast<long long>(i + 1);
      r.expect("dimension compatibility", CycNum(ctx.field, dim) == chi[id_class], {{"character", name}});
    } catch (const Error& e) {
      r.expect("integral decomposition", false, {{"character", name}, {"error", e.what()}});
    }
  }
  r.note("decompositions", decomps);
  if (solved.count("ind_B") && solved.count("trivial") && solved.count("steinberg")) {
    r.expect("d(Ind_B 1) = d(1) + d(St)", solved["ind_B"] == solved["trivial"] + solved["steinberg"]);
  }
  r.expect("d(1) = e_0", solved.count("trivial") && solved["trivial"] == G0Vector::unit(q, 0));
  // additivity on a pair of constructed characters
  if (solved.count("gamma_1") && solved.count("R_1")) {
    r.expect("d additive", d(wb.gg(1) + wb.dl()[0].values) == solved["gamma_1"] + solved["R_1"]);
  }
}

void canonical_decomposition(Workbench& wb, Recorder& r) {
  const unsigned q = wb.ctx().q();
  const G0Vector expected = expected_canonical(q);
  const G0Vector computed = wb.dmap().decompose(wb.canonical());
  r.note("expected", g0_json(expected));
  r.note("computed", g0_json(computed));
  r.expect("canonical representation = sum_{i<=q-2} [V_i]", computed == expected,
           {{"canonical_brauer", wb.canonical().to_json()}});
}

void lefschetz_curve(Workbench& wb, Recorder& r) {
  const Context& ctx = wb.ctx();
  const auto& dl = wb.dl();
  json rows = json::array();
  for (std::size_t c : ctx.classes.p_regular()) {
    const std::size_t g = ctx.classes[c].representative;
    const long long lhs = lefschetz_C(ctx, g);
    CycNum rhs(ctx.field, 2);
    for (const auto& rj : dl) rhs += rj.values[c];
    const bool ok = rhs == CycNum(ctx.field, lhs);
    rows.push_back({{"class", c}, {"representative", format_matrix(ctx.tower, ctx.table.element(g))}, {"lefschetz", lhs},
                    {"two_plus_sum_R", rhs.to_json()}});
    r.expect("L(g, C) = 2 + sum_j R_j(g)", ok, rows.back());
  }
  const long long q = ctx.q();
  r.expect("identity consistency 2 - q(q-1) = 2 + q(1-q)", 2 - q * (q - 1) == 2 + q * (1 - q));
  r.note("rows", rows);
}

void dl_reduction_pattern(Workbench& wb, Recorder& r) {
  const unsigned q = wb.ctx().q();
  std::vector<G0Vector> computed;
  for (const auto& rj : wb.dl()) computed.push_back(wb.dmap()(rj.values));
  std::vector<G0Vector> expected;
  for (long long i = 1; i <= static_cast<long long>(q); ++i) {
    G0Vector v = G0Vector::unit(q, i - 2) + G0Vector::unit(q, static_cast<long long>(q) - i - 1);
    expected.push_back(-1 * v);
  }
  json comp = json::array();
  for (const auto& v : computed) comp.push_back(g0_json(v));
  r.note("computed_by_j", comp);
  std::sort(computed.begin(), computed.end());
  std::sort(expected.begin(), expected.end());
  json exp = json::array();
  for (const auto& v : expected) exp.push_back(g0_json(v));
  r.note("expected_multiset", exp);
  r.expect("multiset {d(R_j)} = {-e_{i-2} - e_{q-i-1}}", computed == expected);
}

void gg_dl_identity(Workbench& wb, Recorder& r) {
  const Context& ctx = wb.ctx();
  ClassFn lhs = constant_class_fn(ctx, 0);
  for (const auto& rj : wb.dl()) lhs += rj.values;
  const ClassFn rhs = -(wb.gg(1) + wb.gg(2) - wb.ind_U() - wb.ind_B() + 2 * trivial_character(ctx));
  r.note("sum_R", lhs.to_json());
  r.expect("sum_j R_j = -(Gamma_1 + Gamma_2 - Ind_U 1 - Ind_B 1 + 2)", lhs == rhs, class_fn_diff(ctx, lhs, rhs));
  // values of Gamma_1 + Gamma_2: 0 off unipotent classes, -2 on regular unipotent ones
  const ClassFn sum = wb.gg(1) + wb.gg(2);
  for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
    r.expect("Gamma_1 + Gamma_2 integral", sum[c].as_integer().has_value(), {{"class", c}});
    const Mat2& g = ctx.table.element(ctx.classes[c].representative);
    const bool unipotent_class = mat_trace(ctx.tower, g) == ctx.tower.from_int(2);
    const bool identity = ctx.classes[c].representative == ctx.table.identity();
    if (!unipotent_class) r.expect("Gamma_1 + Gamma_2 = 0 off unipotents", sum[c].is_zero(), {{"class", c}});
    if (unipotent_class && !identity) {
      r.expect("Gamma_1 + Gamma_2 = -2 at regular unipotents", sum[c] == CycNum(ctx.field, -2), {{"class", c}});
    }
  }
}

void gg_reduction(Workbench& wb, Recorder& r) {
  const unsigned q = wb.ctx().q();
  const G0Vector expected = expected_gelfand_graev(q);
  const G0Vector d1 = wb.dmap()(wb.gg(1));
  const G0Vector d2 = wb.dmap()(wb.gg(2));
  r.note("expected", g0_json(expected));
  r.note("d_gamma_1", g0_json(d1));
  r.note("d_gamma_2", g0_json(d2));
  r.expect("d(Gamma_1) = [V_0] + [V_{q-1}] + 2 sum [V_i]", d1 == expected);
  r.expect("d(Gamma_2) = d(Gamma_1)", d2 == expected);
}

void regular_reduction(Workbench& wb, Recorder& r) {
  const unsigned q = wb.ctx().q();
  const G0Vector reg = wb.dmap()(regular_character(wb.ctx()));
  const G0Vector expected = static_cast<long long>(q) * wb.dmap()(wb.gg(1));
  r.note("d_regular", g0_json(reg));
  r.note("q_d_gamma_1", g0_json(expected));
  r.expect("d(regular) = q d(Gamma_1)", reg == expected);
}

void de_rham_self_duality(Workbench& wb, Recorder& r) {
  const Context& ctx = wb.ctx();
  const BrauerFn lhs = wb.canonical() + conj_brauer(wb.canonical());
  BrauerFn sum = brauer_character_sym(ctx, 0);
  for (unsigned i = 1; i + 2 <= ctx.q(); ++i) sum += brauer_character_sym(ctx, i);
  const BrauerFn rhs = 2 * sum;
  r.note("lhs", lhs.to_json());
  r.expect("canonical + conj(canonical) = 2 sum_{i<=q-2} phi_{V_i}", lhs == rhs, {{"rhs", rhs.to_json()}});
}

using CheckFn = std::function<void(Workbench&, Recorder&)>;

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table{
      {"field-sanity", field_sanity},
      {"group-sanity", group_sanity},
      {"curve-geometry", curve_geometry},
      {"dl-orthogonality", dl_orthogonality},
      {"structural", structural},
      {"canonical-decomposition", canonical_decomposition},
      {"lefschetz-curve", lefschetz_curve},
      {"dl-reduction-pattern", dl_reduction_pattern},
      {"gg-dl-identity", gg_dl_identity},
      {"gg-reduction", gg_reduction},
      {"regular-reduction", regular_reduction},
      {"de-rham-self-duality", de_rham_self_duality},
  };
  return table;
}

}  // namespace

Report run_all(unsigned q, const VerifyOptions& options) {
  if (!supported_q(options.extended).count(q)) {
    throw Error(ErrorCode::UnsupportedQ, "q=" + std::to_string(q));
  }
  for (const auto& name : options.selection) {
    if (!check_table().count(name)) throw Error(ErrorCode::UnknownCheckName, name);
  }
  const Context ctx(q, options.exec);
  Workbench wb(ctx);
  Report report;
  report.q = q;
  report.p = ctx.p();
  report.overall = true;
  for (const auto& name : check_names()) {
    CheckResult result;
    result.name = name;
    if (!options.selection.empty() && !options.selection.count(name)) {
      report.checks.push_back(std::move(result));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Recorder rec;
    try {
      check_table().at(name)(wb, rec);
    } catch (const std::exception& e) {
      rec.expect("check raised an error", false, {{"error", e.what()}});
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.status = rec.ok() ? CheckStatus::Pass : CheckStatus::Fail;
    result.details = rec.details();
    report.overall = report.overall && rec.ok();
    report.checks.push_back(std::move(result));
  }
  return report;
}

json report_to_json(const Report& report, bool stable) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"details", c.details},
                      {"elapsed_ms", stable ? 0.0 : std::round(c.elapsed_ms * 1000.0) / 1000.0}});
  }
  return {{"q", report.q},
          {"p", report.p},
          {"checks", checks},
          {"overall", report.overall ? "pass" : "fail"},
          {"version", report.version}};
}

std::string report_to_text(const Report& report, bool stable) {
  std::ostringstream os;
  os << "q = " << report.q << " (p = " << report.p << ")\n";
  for (const auto& c : report.checks) {
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << "  [" << std::setw(7) << std::left << tag << "] " << std::setw(26) << c.name;
    if (!stable && c.status != CheckStatus::Skipped) os << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms";
    os << "\n";
    for (const char* key : {"computed", "expected", "d_gamma_1", "d_regular"}) {
      if (c.details.contains(key)) os << "      " << key << ": " << c.details[key].dump() << "\n";
    }
    if (c.details.contains("failures")) {
      for (const auto& f : c.details["failures"]) os << "      FAILED: " << f["what"].get<std::string>() << "\n";
    }
  }
  os << "overall: " << (report.overall ? "pass" : "fail") << "\n";
  return os.str();
}

int emit(const Report& report, Format format, std::ostream& out, bool stable) {
  if (format == Format::Json) {
    out << report_to_json(report, stable).dump(2) << "\n";
  } else {
    out << report_to_text(report, stable);
  }
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed");
  return report.overall ? 0 : 1;
}

int emit(const Report& report, Format format, const std::string& path, bool stable) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::IoError, "cannot open " + path);
  return emit(report, format, file, stable);
}

// ---- tables -------------------------------------------------------------

json table_json(const Context& ctx, TableKind kind) {
  json out{{"q", ctx.q()}, {"p", ctx.p()}};
  json classes = json::array();
  for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
    const auto& cd = ctx.classes[c];
    classes.push_back({{"index", c},
                       {"representative", format_matrix(ctx.tower, ctx.table.element(cd.representative))},
                       {"size", cd.size},
                       {"order", cd.order},
                       {"p_regular", cd.p_regular}});
  }
  switch (kind) {
    case TableKind::Classes:
      out["classes"] = classes;
      break;
    case TableKind::DL: {
      out["classes"] = classes;
      json rows = json::array();
      for (const auto& rj : dl_characters(ctx)) rows.push_back({{"j", rj.j}, {"values", rj.values.to_json()}});
      out["dl"] = rows;
      break;
    }
    case TableKind::Brauer: {
      json cols = json::array();
      for (std::size_t c : ctx.classes.p_regular()) cols.push_back(classes[c]);
      out["p_regular_classes"] = cols;
      const DecompositionMap d(ctx);
      json rows = json::array();
      for (std::size_t i = 0; i < d.matrix().size(); ++i) {
        json row = json::array();
        for (const auto& v : d.matrix()[i]) row.push_back(v.to_json());
        rows.push_back({{"i", i}, {"values", row}});
      }
      out["brauer"] = rows;
      out["determinant"] = d.determinant().to_json();
      break;
    }
    case TableKind::GelfandGraev:
      out["classes"] = classes;
      out["gamma_1"] = gelfand_graev(ctx, 1).to_json();
      out["gamma_2"] = gelfand_graev(ctx, 2).to_json();
      break;
  }
  return out;
}

namespace {

std::string cell(const CycNum& v) {
  if (auto n = v.as_integer()) return n->get_str();
  return v.approx_string();
}

void print_grid(std::ostringstream& os, const std::vector<std::string>& headers,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size());
  for (std::size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    os << "\n";
  };
  line(headers);
  for (const auto& row : rows) line(row);
}

}  // namespace

std::string table_text(const Context& ctx, TableKind kind) {
  std::ostringstream os;
  os << "SL_2(F_" << ctx.q() << "), p = " << ctx.p() << "\n";
  std::vector<std::string> class_headers;
  for (std::size_t c = 0; c < ctx.classes.count(); ++c) class_headers.push_back("c" + std::to_string(c));
  switch (kind) {
    case TableKind::Classes: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t c = 0; c < ctx.classes.count(); ++c) {
        const auto& cd = ctx.classes[c];
        rows.push_back({"c" + std::to_string(c), format_matrix(ctx.tower, ctx.table.element(cd.representative)),
                        std::to_string(cd.size), std::to_string(cd.order), cd.p_regular ? "yes" : "no"});
      }
      print_grid(os, {"class", "representative", "size", "order", "p-regular"}, rows);
      break;
    }
    case TableKind::DL: {
      std::vector<std::string> headers{"j"};
      headers.insert(headers.end(), class_headers.begin(), class_headers.end());
      std::vector<std::vector<std::string>> rows;
      for (const auto& rj : dl_characters(ctx)) {
        std::vector<std::string> row{std::to_string(rj.j)};
        for (const auto& v : rj.values.values()) row.push_back(cell(v));
        rows.push_back(row);
      }
      print_grid(os, headers, rows);
      break;
    }
    case TableKind::Brauer: {
      const DecompositionMap d(ctx);
      std::vector<std::string> headers{"i"};
      for (std::size_t c : ctx.classes.p_regular()) headers.push_back("c" + std::to_string(c));
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < d.matrix().size(); ++i) {
        std::vector<std::string> row{std::to_string(i)};
        for (const auto& v : d.matrix()[i]) row.push_back(cell(v));
        rows.push_back(row);
      }
      print_grid(os, headers, rows);
      os << "det = " << d.determinant().to_string() << "  (~ " << d.determinant().approx_string() << ")\n";
      break;
    }
    case TableKind::GelfandGraev: {
      std::vector<std::string> headers{"char"};
      headers.insert(headers.end(), class_headers.begin(), class_headers.end());
      std::vector<std::vector<std::string>> rows;
      for (int i : {1, 2}) {
        std::vector<std::string> row{"Gamma_" + std::to_string(i)};
        const ClassFn gamma = gelfand_graev(ctx, i);
        for (const auto& v : gamma.values()) row.push_back(cell(v));
        rows.push_back(row);
      }
      print_grid(os, headers, rows);
      break;
    }
  }
  return os.str();
}

json curve_json(const FieldTower& tower, Exec exec) {
  const GenusRoutes g = genus_routes(tower, exec);
  return {{"q", tower.q()},
          {"p", tower.p()},
          {"smooth", smoothness_check(tower)},
          {"genus_degree_formula", g.plane},
          {"genus_point_count", g.weil},
          {"points_Fq", count_points(tower, 1, exec)},
          {"points_Fq2", count_points(tower, 2, exec)},
          {"points_Fq4", count_points(tower, 4, exec)}};
}

std::string curve_text(const FieldTower& tower, Exec exec) {
  const json j = curve_json(tower, exec);
  std::ostringstream os;
  os << "Drinfeld curve XY^q - X^qY = Z^(q+1), q = " << tower.q() << "\n"
     << "  smooth:                 " << (j["smooth"].get<bool>() ? "yes" : "no") << "\n"
     << "  genus (degree formula): " << j["genus_degree_formula"] << "\n"
     << "  genus (point count):    " << j["genus_point_count"] << "\n"
     << "  #C(F_q):                " << j["points_Fq"] << "\n"
     << "  #C(F_q^2):              " << j["points_Fq2"] << "\n"
     << "  #C(F_q^4):              " << j["points_Fq4"] << "\n";
  return os.str();
}

}  // namespace drinfeld
