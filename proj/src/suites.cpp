#include <array>
#include <utility>

#include "bihom/errors.hpp"
#include "bihom/identity.hpp"

namespace bihom {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Expression shorthands. Maps are named alpha, beta, phi, psi throughout.
Expr var(std::size_t i) { return Expr::var(i); }
Expr al(Expr e) { return Expr::map("alpha", std::move(e)); }
Expr be(Expr e) { return Expr::map("beta", std::move(e)); }
Expr ph(Expr e) { return Expr::map("phi", std::move(e)); }
Expr ps(Expr e) { return Expr::map("psi", std::move(e)); }
Expr ap(const std::string& map, Expr e) { return Expr::map(map, std::move(e)); }
Expr mul(const std::string& p, Expr l, Expr r) { return Expr::bilinear(p, std::move(l), std::move(r)); }

/// (x p1 y) p2 beta(z) - alpha(x) p3 (y p4 z); every associator in the
/// three theories has this shape.
Expr assoc(const std::string& p1, const std::string& p2, const std::string& p3, const std::string& p4, Expr x,
           Expr y, Expr z) {
  return mul(p2, mul(p1, x, y), be(z)) - mul(p3, al(x), mul(p4, y, z));
}

Vector assoc_value(const Rank3Tensor& p1, const Rank3Tensor& p2, const Rank3Tensor& p3, const Rank3Tensor& p4,
                   const Matrix& alpha, const Matrix& beta, const Vector& x, const Vector& y, const Vector& z) {
  return tensor_apply(p2, tensor_apply(p1, x, y), beta.apply(z)) -
         tensor_apply(p3, alpha.apply(x), tensor_apply(p4, y, z));
}

/// Left pattern f(beta x, alpha y, z) + g(beta y, alpha x, z).
template <class F, class G>
Expr left_pair(F f, G g) {
  const Expr x = var(0), y = var(1), z = var(2);
  return f(be(x), al(y), z) + g(be(y), al(x), z);
}

/// Right pattern f(x, beta y, alpha z) + g(x, beta z, alpha y).
template <class F, class G>
Expr right_pair(F f, G g) {
  const Expr x = var(0), y = var(1), z = var(2);
  return f(x, be(y), al(z)) + g(x, be(z), al(y));
}

const std::vector<Space> kAAA = {Space::algebra, Space::algebra, Space::algebra};
const std::vector<Space> kAA = {Space::algebra, Space::algebra};
const std::vector<Space> kA = {Space::algebra};
const std::vector<Space> kAAM = {Space::algebra, Space::algebra, Space::module};
const std::vector<Space> kAM = {Space::algebra, Space::module};
const std::vector<Space> kM = {Space::module};
const std::vector<Space> kMM = {Space::module, Space::module};

Context algebra_context(const Matrix& alpha, const Matrix& beta,
                        std::vector<std::pair<std::string, Rank3Tensor>> products) {
  Context ctx;
  ctx.algebra_dim = alpha.rows();
  ctx.maps = {{"alpha", alpha}, {"beta", beta}};
  for (auto& [name, t] : products) ctx.bilinears.emplace(name, std::move(t));
  return ctx;
}

Context pre_alt_context(const PreAlternativeAlgebra& p) {
  return algebra_context(p.alpha, p.beta, {{"prec", p.prec}, {"succ", p.succ}, {"circ", p.circ()}});
}

void require_same_maps(const Matrix& alpha, const Matrix& beta, const Matrix& m_alpha, const Matrix& m_beta) {
  if (alpha != m_alpha || beta != m_beta) {
    throw IncompatibleSuite("bimodule was declared over different structure maps than the algebra");
  }
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionMismatch(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/// phi X(x) = X(alpha x) phi and psi X(x) = X(beta x) psi for each action X.
void add_compat_axioms(SuiteInstance& s, const std::vector<std::string>& actions) {
  const Expr x = var(0), v = var(1);
  for (const auto& a : actions) {
    s.axioms.push_back({"phi_" + a, kAM, ph(mul(a, x, v)) - mul(a, al(x), ph(v))});
    s.axioms.push_back({"psi_" + a, kAM, ps(mul(a, x, v)) - mul(a, be(x), ps(v))});
  }
  s.axioms.push_back({"phi_psi_commute", kM, ph(ps(var(0))) - ps(ph(var(0)))});
}

}  // namespace

// ------------------------------------------------------------ associators

Vector bihom_associator(const AlternativeAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return tensor_apply(a.mu, a.alpha.apply(x), tensor_apply(a.mu, y, z)) -
         tensor_apply(a.mu, tensor_apply(a.mu, x, y), a.beta.apply(z));
}

PreAltAssociators pre_alt_associators(const PreAlternativeAlgebra& p, const Vector& x, const Vector& y,
                                      const Vector& z) {
  const Rank3Tensor circ = p.circ();
  return {assoc_value(p.prec, p.prec, p.prec, circ, p.alpha, p.beta, x, y, z),
          assoc_value(p.succ, p.prec, p.succ, p.prec, p.alpha, p.beta, x, y, z),
          assoc_value(circ, p.succ, p.succ, p.succ, p.alpha, p.beta, x, y, z)};
}

std::map<std::string, Vector> quadri_associators(const QuadriAlgebra& q, const Vector& x, const Vector& y,
                                                 const Vector& z) {
  const Rank3Tensor succ = q.succ(), prec = q.prec(), vee = q.vee(), wedge = q.wedge(), star = q.star();
  auto br = [&](const Rank3Tensor& p1, const Rank3Tensor& p2, const Rank3Tensor& p3, const Rank3Tensor& p4) {
    return assoc_value(p1, p2, p3, p4, q.alpha, q.beta, x, y, z);
  };
  return {{"r", br(q.nw, q.nw, q.nw, star)},  {"l", br(star, q.se, q.se, q.se)},
          {"ne", br(wedge, q.ne, q.ne, succ)}, {"sw", br(prec, q.sw, q.sw, vee)},
          {"n", br(q.ne, q.nw, q.ne, prec)},   {"w", br(q.sw, q.nw, q.sw, wedge)},
          {"s", br(succ, q.sw, q.se, q.sw)},   {"e", br(vee, q.ne, q.se, q.ne)},
          {"m", br(q.se, q.nw, q.se, q.nw)}};
}

// ------------------------------------------------------------ suites

const std::vector<std::string>& algebra_suite_ids() {
  static const std::vector<std::string> ids = {"alternative", "associative", "pre_alternative", "quadri"};
  return ids;
}

SuiteInstance alternative_suite(const AlternativeAlgebra& a) {
  SuiteInstance s{"alternative", algebra_context(a.alpha, a.beta, {{"mu", a.mu}}), {}, {}};
  auto as = [](Expr x, Expr y, Expr z) { return assoc("mu", "mu", "mu", "mu", x, y, z); };
  s.axioms.push_back({"left_alternative", kAAA, left_pair(as, as)});
  s.axioms.push_back({"right_alternative", kAAA, right_pair(as, as)});
  return s;
}

SuiteInstance associative_suite(const AlternativeAlgebra& a) {
  SuiteInstance s{"associative", algebra_context(a.alpha, a.beta, {{"mu", a.mu}}), {}, {}};
  const Expr x = var(0), y = var(1), z = var(2);
  s.axioms.push_back({"associator", kAAA, mul("mu", al(x), mul("mu", y, z)) - mul("mu", mul("mu", x, y), be(z))});
  return s;
}

SuiteInstance pre_alternative_suite(const PreAlternativeAlgebra& p) {
  SuiteInstance s{"pre_alternative", pre_alt_context(p), {}, {}};
  auto as_r = [](Expr x, Expr y, Expr z) { return assoc("prec", "prec", "prec", "circ", x, y, z); };
  auto as_m = [](Expr x, Expr y, Expr z) { return assoc("succ", "prec", "succ", "prec", x, y, z); };
  auto as_l = [](Expr x, Expr y, Expr z) { return assoc("circ", "succ", "succ", "succ", x, y, z); };
  s.axioms.push_back({"right_cond", kAAA, right_pair(as_r, as_r)});
  s.axioms.push_back({"left_cond", kAAA, left_pair(as_l, as_l)});
  s.axioms.push_back({"m_r_cond", kAAA, left_pair(as_m, as_r)});
  s.axioms.push_back({"m_l_cond", kAAA, right_pair(as_m, as_l)});
  return s;
}

SuiteInstance quadri_suite(const QuadriAlgebra& q) {
  SuiteInstance s{"quadri",
                  algebra_context(q.alpha, q.beta,
                                  {{"nw", q.nw},
                                   {"sw", q.sw},
                                   {"ne", q.ne},
                                   {"se", q.se},
                                   {"succ", q.succ()},
                                   {"prec", q.prec()},
                                   {"vee", q.vee()},
                                   {"wedge", q.wedge()},
                                   {"star", q.star()}}),
                  {},
                  {}};
  using Brace = std::array<const char*, 4>;
  const std::map<std::string, Brace> braces = {
      {"r", {"nw", "nw", "nw", "star"}}, {"l", {"star", "se", "se", "se"}}, {"ne", {"wedge", "ne", "ne", "succ"}},
      {"sw", {"prec", "sw", "sw", "vee"}}, {"n", {"ne", "nw", "ne", "prec"}}, {"w", {"sw", "nw", "sw", "wedge"}},
      {"s", {"succ", "sw", "se", "sw"}},  {"e", {"vee", "ne", "se", "ne"}},  {"m", {"se", "nw", "se", "nw"}}};
  auto brace = [&](const std::string& key) {
    const Brace b = braces.at(key);
    return [b](Expr x, Expr y, Expr z) { return assoc(b[0], b[1], b[2], b[3], x, y, z); };
  };
  for (const auto& [f, g] : std::vector<std::pair<std::string, std::string>>{
           {"r", "m"}, {"n", "w"}, {"ne", "e"}, {"sw", "s"}, {"l", "l"}}) {
    s.axioms.push_back({f + "_" + g, kAAA, left_pair(brace(f), brace(g))});
  }
  for (const auto& [f, g] : std::vector<std::pair<std::string, std::string>>{
           {"r", "r"}, {"n", "ne"}, {"w", "sw"}, {"m", "l"}, {"s", "e"}}) {
    s.axioms.push_back({f + "_" + g, kAAA, right_pair(brace(f), brace(g))});
  }
  return s;
}

SuiteInstance alt_bimodule_suite(const AlternativeAlgebra& a, const AltBimodule& m) {
  require_same_maps(a.alpha, a.beta, m.alpha, m.beta);
  if (m.algebra_dim() != a.dim()) throw DimensionMismatch("bimodule and algebra dimensions differ");
  SuiteInstance s{"alt_bimodule", algebra_context(a.alpha, a.beta, {{"mu", a.mu}, {"L", m.left}, {"R", m.right}}),
                  {}, {}};
  s.ctx.module_dim = m.module_dim();
  s.ctx.maps.emplace("phi", m.phi);
  s.ctx.maps.emplace("psi", m.psi);
  const Expr x = var(0), y = var(1), v = var(2);
  auto L = [](Expr a, Expr w) { return mul("L", a, w); };
  auto R = [](Expr a, Expr w) { return mul("R", a, w); };
  auto mu = [](Expr a, Expr b) { return mul("mu", a, b); };
  // The first two are quadratic in x; checked in polarized form.
  s.axioms.push_back({"rep1", kAAM,
                      L(mu(be(x), al(y)), ps(v)) + L(mu(be(y), al(x)), ps(v)) - L(al(be(x)), L(al(y), v)) -
                          L(al(be(y)), L(al(x), v))});
  s.axioms.push_back({"rep2", kAAM,
                      R(mu(be(x), al(y)), ph(v)) + R(mu(be(y), al(x)), ph(v)) - R(al(be(x)), R(be(y), v)) -
                          R(al(be(y)), R(be(x), v))});
  s.axioms.push_back({"rep3", kAAM,
                      R(be(y), L(be(x), ph(v))) - L(al(be(x)), R(y, ph(v))) - R(mu(al(x), y), ph(ps(v))) +
                          R(be(y), R(al(x), ps(v)))});
  s.axioms.push_back({"rep4", kAAM,
                      L(al(y), R(al(x), ps(v))) - R(al(be(x)), L(y, ps(v))) - L(mu(y, be(x)), ph(ps(v))) +
                          L(al(y), L(be(x), ph(v)))});
  add_compat_axioms(s, {"L", "R"});
  return s;
}

SuiteInstance pre_alt_bimodule_suite(const PreAlternativeAlgebra& p, const PreAltBimodule& m) {
  require_same_maps(p.alpha, p.beta, m.alpha, m.beta);
  if (m.algebra_dim() != p.dim()) throw DimensionMismatch("bimodule and algebra dimensions differ");
  SuiteInstance s{"pre_alt_bimodule", pre_alt_context(p), {}, {}};
  s.ctx.module_dim = m.module_dim();
  s.ctx.maps.emplace("phi", m.phi);
  s.ctx.maps.emplace("psi", m.psi);
  s.ctx.bilinears.emplace("Lprec", m.left_prec);
  s.ctx.bilinears.emplace("Rprec", m.right_prec);
  s.ctx.bilinears.emplace("Lsucc", m.left_succ);
  s.ctx.bilinears.emplace("Rsucc", m.right_succ);
  s.ctx.bilinears.emplace("Lcirc", m.left_circ());
  s.ctx.bilinears.emplace("Rcirc", m.right_circ());

  const Expr x = var(0), y = var(1), v = var(2);
  auto act = [](const char* name) { return [name](Expr a, Expr w) { return mul(name, a, w); }; };
  auto Lp = act("Lprec"), Rp = act("Rprec"), Ls = act("Lsucc"), Rs = act("Rsucc"), Lc = act("Lcirc"),
       Rc = act("Rcirc");
  auto prec = [](Expr a, Expr b) { return mul("prec", a, b); };
  auto succ = [](Expr a, Expr b) { return mul("succ", a, b); };
  auto circ = [](Expr a, Expr b) { return mul("circ", a, b); };
  auto ab = [](Expr e) { return al(be(e)); };

  // action_01 and action_03 are quadratic in x and are polarized.
  s.axioms.push_back({"action_01", kAAM,
                      Ls(circ(be(x), al(y)), ps(v)) + Ls(circ(be(y), al(x)), ps(v)) - Ls(ab(x), Ls(al(y), v)) -
                          Ls(ab(y), Ls(al(x), v))});
  s.axioms.push_back({"action_02", kAAM,
                      Rs(be(y), Lc(be(x), ph(v)) + Rc(al(x), ps(v))) - Ls(ab(x), Rs(y, ph(v))) -
                          Rs(succ(al(x), y), ph(ps(v)))});
  s.axioms.push_back({"action_03", kAAM,
                      Rp(ab(x), Rp(be(y), v)) + Rp(ab(y), Rp(be(x), v)) - Rp(circ(be(x), al(y)), ph(v)) -
                          Rp(circ(be(y), al(x)), ph(v))});
  s.axioms.push_back({"action_04", kAAM,
                      Lp(al(y), Lc(be(x), ph(v)) + Rc(al(x), ps(v))) - Lp(prec(y, be(x)), ph(ps(v))) -
                          Rp(ab(x), Lp(y, ps(v)))});
  s.axioms.push_back({"action_05", kAAM,
                      Lp(succ(be(x), al(y)) + prec(be(y), al(x)), ps(v)) - Ls(ab(x), Lp(al(y), v)) -
                          Lp(ab(y), Lc(al(x), v)),
                      true});
  s.axioms.push_back({"action_06", kAAM,
                      Rp(be(y), Ls(be(x), ph(v)) + Rp(al(x), ps(v))) - Ls(ab(x), Rp(y, ph(v))) -
                          Rp(circ(al(x), y), ph(ps(v)))});
  s.axioms.push_back({"action_07", kAAM,
                      Rp(be(y), Rs(al(x), ps(v)) + Lp(be(x), ph(v))) - Rs(prec(al(x), y), ph(ps(v))) -
                          Lp(ab(x), Rc(y, ph(v)))});
  s.axioms.push_back({"action_08", kAAM,
                      Rp(ab(y), Rs(be(x), v)) + Rs(ab(x), Rc(be(y), v)) - Rs(prec(be(x), al(y)), ph(v)) -
                          Rs(succ(be(y), al(x)), ph(v))});
  s.axioms.push_back({"action_09", kAAM,
                      Rp(ab(y), Ls(x, ps(v))) + Ls(circ(x, be(y)), ph(ps(v))) -
                          Ls(al(x), Rp(al(y), ps(v)) + Ls(be(y), ph(v)))});
  s.axioms.push_back({"action_10", kAAM,
                      Lp(succ(x, be(y)), ph(ps(v))) + Rs(ab(y), Lc(x, ps(v))) - Ls(al(x), Lp(be(y), ph(v))) -
                          Ls(al(x), Rs(al(y), ps(v)))});
  add_compat_axioms(s, {"Lprec", "Rprec", "Lsucc", "Rsucc"});
  s.notes["action_05"] =
      "read as Lprec(beta(x) succ alpha(y) + beta(y) prec alpha(x)) psi = "
      "Lsucc(alpha beta(x)) Lprec(alpha(y)) + Lprec(alpha beta(y)) Lcirc(alpha(x))";
  return s;
}

SuiteInstance rota_baxter_suite(const AlternativeAlgebra& a, const Matrix& r) {
  require_shape(r, a.dim(), a.dim(), "Rota-Baxter operator");
  SuiteInstance s{"rota_baxter", algebra_context(a.alpha, a.beta, {{"mu", a.mu}}), {}, {}};
  s.ctx.maps.emplace("R", r);
  const Expr x = var(0), y = var(1);
  auto R = [](Expr e) { return ap("R", std::move(e)); };
  s.axioms.push_back(
      {"rota_baxter", kAA, mul("mu", R(x), R(y)) - R(mul("mu", x, R(y)) + mul("mu", R(x), y))});
  s.axioms.push_back({"R_alpha_commute", kA, R(al(x)) - al(R(x))});
  s.axioms.push_back({"R_beta_commute", kA, R(be(x)) - be(R(x))});
  return s;
}

SuiteInstance rota_baxter_suite(const PreAlternativeAlgebra& p, const Matrix& r) {
  require_shape(r, p.dim(), p.dim(), "Rota-Baxter operator");
  SuiteInstance s{"rota_baxter", pre_alt_context(p), {}, {}};
  s.ctx.maps.emplace("R", r);
  const Expr x = var(0), y = var(1);
  auto R = [](Expr e) { return ap("R", std::move(e)); };
  s.axioms.push_back(
      {"baxter1", kAA, mul("succ", R(x), R(y)) - R(mul("succ", x, R(y)) + mul("succ", R(x), y))});
  s.axioms.push_back(
      {"baxter2", kAA, mul("prec", R(x), R(y)) - R(mul("prec", x, R(y)) + mul("prec", R(x), y))});
  s.axioms.push_back({"R_alpha_commute", kA, R(al(x)) - al(R(x))});
  s.axioms.push_back({"R_beta_commute", kA, R(be(x)) - be(R(x))});
  return s;
}

SuiteInstance o_operator_suite(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& t) {
  require_same_maps(a.alpha, a.beta, m.alpha, m.beta);
  require_shape(t, a.dim(), m.module_dim(), "O-operator");
  SuiteInstance s{"o_operator", algebra_context(a.alpha, a.beta, {{"mu", a.mu}, {"L", m.left}, {"R", m.right}}),
                  {}, {}};
  s.ctx.module_dim = m.module_dim();
  s.ctx.maps.emplace("phi", m.phi);
  s.ctx.maps.emplace("psi", m.psi);
  s.ctx.maps.emplace("T", t);
  const Expr u = var(0), v = var(1);
  auto T = [](Expr e) { return ap("T", std::move(e)); };
  s.axioms.push_back(
      {"o_operator", kMM, mul("mu", T(u), T(v)) - T(mul("L", T(u), v) + mul("R", T(v), u))});
  s.axioms.push_back({"T_phi", kM, T(ph(u)) - al(T(u))});
  s.axioms.push_back({"T_psi", kM, T(ps(u)) - be(T(u))});
  return s;
}

SuiteInstance o_operator_suite(const PreAlternativeAlgebra& p, const PreAltBimodule& m, const Matrix& t) {
  require_same_maps(p.alpha, p.beta, m.alpha, m.beta);
  require_shape(t, p.dim(), m.module_dim(), "O-operator");
  SuiteInstance s{"o_operator", pre_alt_context(p), {}, {}};
  s.ctx.module_dim = m.module_dim();
  s.ctx.maps.emplace("phi", m.phi);
  s.ctx.maps.emplace("psi", m.psi);
  s.ctx.maps.emplace("T", t);
  s.ctx.bilinears.emplace("Lprec", m.left_prec);
  s.ctx.bilinears.emplace("Rprec", m.right_prec);
  s.ctx.bilinears.emplace("Lsucc", m.left_succ);
  s.ctx.bilinears.emplace("Rsucc", m.right_succ);
  const Expr u = var(0), v = var(1);
  auto T = [](Expr e) { return ap("T", std::move(e)); };
  s.axioms.push_back(
      {"o_succ", kMM, mul("succ", T(u), T(v)) - T(mul("Lsucc", T(u), v) + mul("Rsucc", T(v), u))});
  s.axioms.push_back(
      {"o_prec", kMM, mul("prec", T(u), T(v)) - T(mul("Lprec", T(u), v) + mul("Rprec", T(v), u))});
  s.axioms.push_back({"T_phi", kM, T(ph(u)) - al(T(u))});
  s.axioms.push_back({"T_psi", kM, T(ps(u)) - be(T(u))});
  return s;
}

SuiteInstance cocycle_suite(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& d) {
  require_same_maps(a.alpha, a.beta, m.alpha, m.beta);
  require_shape(d, m.module_dim(), a.dim(), "cocycle");
  SuiteInstance s{"cocycle", algebra_context(a.alpha, a.beta, {{"mu", a.mu}, {"L", m.left}, {"R", m.right}}), {},
                  {}};
  s.ctx.module_dim = m.module_dim();
  s.ctx.maps.emplace("phi", m.phi);
  s.ctx.maps.emplace("psi", m.psi);
  s.ctx.maps.emplace("D", d);
  const Expr x = var(0), y = var(1);
  auto D = [](Expr e) { return ap("D", std::move(e)); };
  s.axioms.push_back({"cocycle", kAA, D(mul("mu", x, y)) - mul("L", x, D(y)) - mul("R", y, D(x))});
  s.axioms.push_back({"phi_D", kA, ph(D(x)) - D(al(x))});
  s.axioms.push_back({"psi_D", kA, ps(D(x)) - D(be(x))});
  return s;
}

SuiteInstance dual_conditions_suite(const AlternativeAlgebra& a, const AltBimodule& m) {
  require_same_maps(a.alpha, a.beta, m.alpha, m.beta);
  SuiteInstance s{"dual_conditions",
                  algebra_context(a.alpha, a.beta, {{"mu", a.mu}, {"L", m.left}, {"R", m.right}}), {}, {}};
  s.ctx.module_dim = m.module_dim();
  s.ctx.maps.emplace("phi", m.phi);
  s.ctx.maps.emplace("psi", m.psi);
  const Expr x = var(0), y = var(1), u = var(2);
  auto L = [](Expr a, Expr w) { return mul("L", a, w); };
  auto R = [](Expr a, Expr w) { return mul("R", a, w); };
  auto mu = [](Expr a, Expr b) { return mul("mu", a, b); };
  s.axioms.push_back({"dual1", kAAM,
                      ps(L(mu(be(x), al(y)), u)) + ps(L(mu(be(y), al(x)), u)) - L(al(x), L(al(be(y)), u)) -
                          L(al(y), L(al(be(x)), u))});
  s.axioms.push_back({"dual2", kAAM,
                      ph(R(mu(be(x), al(y)), u)) + ph(R(mu(be(y), al(x)), u)) - R(be(x), R(al(be(y)), u)) -
                          R(be(y), R(al(be(x)), u))});
  s.axioms.push_back({"dual3", kAAM,
                      ph(L(be(x), R(be(y), u))) - ph(R(y, L(al(be(x)), u))) - ps(ph(R(mu(al(x), y), u))) +
                          ps(R(al(x), R(be(y), u)))});
  s.axioms.push_back({"dual4", kAAM,
                      ps(R(al(x), L(al(y), u))) - ps(L(y, R(al(be(x)), u))) - ps(ph(L(mu(y, be(x)), u))) +
                          ph(L(be(x), L(al(y), u)))});
  return s;
}

namespace {

std::vector<std::pair<std::string, const Rank3Tensor*>> products_of(const Bundle& b) {
  return std::visit(
      overloaded{
          [](const AlternativeAlgebra& a) -> std::vector<std::pair<std::string, const Rank3Tensor*>> {
            return {{"mu", &a.mu}};
          },
          [](const PreAlternativeAlgebra& p) -> std::vector<std::pair<std::string, const Rank3Tensor*>> {
            return {{"prec", &p.prec}, {"succ", &p.succ}};
          },
          [](const QuadriAlgebra& q) -> std::vector<std::pair<std::string, const Rank3Tensor*>> {
            return {{"nw", &q.nw}, {"sw", &q.sw}, {"ne", &q.ne}, {"se", &q.se}};
          },
          [](const ProductOnly& p) -> std::vector<std::pair<std::string, const Rank3Tensor*>> {
            return {{p.name, &p.product}};
          },
          [](const auto&) -> std::vector<std::pair<std::string, const Rank3Tensor*>> {
            throw IncompatibleSuite("morphisms are defined between algebras only");
          },
      },
      b);
}

std::pair<const Matrix*, const Matrix*> maps_of(const Bundle& b) {
  return std::visit(overloaded{
                        [](const LinearOperator&) -> std::pair<const Matrix*, const Matrix*> {
                          throw IncompatibleSuite("not an algebra");
                        },
                        [](const auto& a) -> std::pair<const Matrix*, const Matrix*> { return {&a.alpha, &a.beta}; },
                    },
                    b);
}

}  // namespace

SuiteInstance morphism_suite(const Matrix& f, const Bundle& x, const Bundle& y) {
  if (x.index() != y.index()) throw IncompatibleSuite("morphism between bundles of different kinds");
  const auto px = products_of(x);
  const auto py = products_of(y);
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (px[i].first != py[i].first) throw IncompatibleSuite("product names differ");
  }
  const auto [xa, xb] = maps_of(x);
  const auto [ya, yb] = maps_of(y);
  require_shape(f, ya->rows(), xa->rows(), "morphism");
  SuiteInstance s{"morphism", {}, {}, {}};
  s.ctx.algebra_dim = xa->rows();
  s.ctx.maps = {{"f", f}, {"x.alpha", *xa}, {"x.beta", *xb}, {"y.alpha", *ya}, {"y.beta", *yb}};
  const Expr a = var(0), b = var(1);
  auto F = [](Expr e) { return ap("f", std::move(e)); };
  for (std::size_t i = 0; i < px.size(); ++i) {
    const std::string& name = px[i].first;
    s.ctx.bilinears.emplace("x." + name, *px[i].second);
    s.ctx.bilinears.emplace("y." + name, *py[i].second);
    s.axioms.push_back({"hom(" + name + ")", kAA, F(mul("x." + name, a, b)) - mul("y." + name, F(a), F(b))});
  }
  s.axioms.push_back({"f_alpha", kA, F(ap("x.alpha", a)) - ap("y.alpha", F(a))});
  s.axioms.push_back({"f_beta", kA, F(ap("x.beta", a)) - ap("y.beta", F(a))});
  return s;
}

SuiteInstance make_suite(const Bundle& bundle, std::string_view suite_id) {
  auto incompatible = [&]() -> IncompatibleSuite {
    return IncompatibleSuite("suite '" + std::string(suite_id) + "' does not apply to a " +
                             std::string(kind_name(bundle)) + " bundle");
  };
  if (const auto* a = std::get_if<AlternativeAlgebra>(&bundle)) {
    if (suite_id == "alternative") return alternative_suite(*a);
    if (suite_id == "associative") return associative_suite(*a);
  } else if (const auto* p = std::get_if<PreAlternativeAlgebra>(&bundle)) {
    if (suite_id == "pre_alternative") return pre_alternative_suite(*p);
  } else if (const auto* q = std::get_if<QuadriAlgebra>(&bundle)) {
    if (suite_id == "quadri") return quadri_suite(*q);
  } else if (std::holds_alternative<AltBimodule>(bundle) || std::holds_alternative<PreAltBimodule>(bundle)) {
    throw IncompatibleSuite("suite '" + std::string(suite_id) +
                            "' on a bimodule needs the algebra it acts on");
  }
  throw incompatible();
}

SuiteInstance make_suite(const Bundle& algebra, const Bundle& module, std::string_view suite_id) {
  const auto* a = std::get_if<AlternativeAlgebra>(&algebra);
  const auto* am = std::get_if<AltBimodule>(&module);
  if (a && am) {
    if (suite_id == "alt_bimodule") return alt_bimodule_suite(*a, *am);
    if (suite_id == "dual_conditions") return dual_conditions_suite(*a, *am);
  }
  const auto* p = std::get_if<PreAlternativeAlgebra>(&algebra);
  const auto* pm = std::get_if<PreAltBimodule>(&module);
  if (p && pm && suite_id == "pre_alt_bimodule") return pre_alt_bimodule_suite(*p, *pm);
  throw IncompatibleSuite("suite '" + std::string(suite_id) + "' does not apply to a " +
                          std::string(kind_name(module)) + " over a " + std::string(kind_name(algebra)));
}

Report check_suite(const Bundle& bundle, std::string_view suite_id, const RunOptions& options) {
  return run(make_suite(bundle, suite_id), options);
}

Report check_suite(const Bundle& algebra, const Bundle& module, std::string_view suite_id,
                   const RunOptions& options) {
  return run(make_suite(algebra, module, suite_id), options);
}

Report check_rota_baxter(const Bundle& algebra, const LinearOperator& r, const RunOptions& options) {
  if (const auto* a = std::get_if<AlternativeAlgebra>(&algebra)) return run(rota_baxter_suite(*a, r.map), options);
  if (const auto* p = std::get_if<PreAlternativeAlgebra>(&algebra)) {
    return run(rota_baxter_suite(*p, r.map), options);
  }
  throw IncompatibleSuite("Rota-Baxter check needs an alternative or pre-alternative algebra");
}

Report check_o_operator(const Bundle& algebra, const Bundle& module, const LinearOperator& t,
                        const RunOptions& options) {
  const auto* a = std::get_if<AlternativeAlgebra>(&algebra);
  const auto* am = std::get_if<AltBimodule>(&module);
  if (a && am) return run(o_operator_suite(*a, *am, t.map), options);
  const auto* p = std::get_if<PreAlternativeAlgebra>(&algebra);
  const auto* pm = std::get_if<PreAltBimodule>(&module);
  if (p && pm) return run(o_operator_suite(*p, *pm, t.map), options);
  throw IncompatibleSuite("O-operator check needs an algebra with a bimodule of the matching kind");
}

Report check_one_cocycle(const AlternativeAlgebra& a, const AltBimodule& m, const LinearOperator& d,
                         const RunOptions& options) {
  return run(cocycle_suite(a, m, d.map), options);
}

Report check_dual_conditions(const AlternativeAlgebra& a, const AltBimodule& m, const RunOptions& options) {
  return run(dual_conditions_suite(a, m), options);
}

Report check_morphism(const LinearOperator& f, const Bundle& x, const Bundle& y, const RunOptions& options) {
  return run(morphism_suite(f.map, x, y), options);
}

bool random_vector_crosscheck(const Bundle& bundle, std::string_view suite_id, std::size_t trials,
                              std::uint64_t seed) {
  return crosscheck(make_suite(bundle, suite_id), trials, seed).agree();
}

}  // namespace bihom
