// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "bihom/cli.hpp"
#include "bihom/constructions.hpp"
#include "bihom/errors.hpp"
#include "bihom/identity.hpp"
#include "bihom/model.hpp"
#include "support.hpp"

using namespace bihom;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && ok;
  }
  Outcome done(const std::string& summary) const {
    return {ok_, ok_ ? summary + ", " + std::to_string(checks_) + " checks" : "first failure: " + first_failure_};
  }

 private:
  bool ok_ = true;
  std::size_t checks_ = 0;
  std::string first_failure_;
};

AlternativeAlgebra alt(const std::string& name) { return std::get<AlternativeAlgebra>(fixture(name)); }
bool passes(const Bundle& b, std::string_view suite) { return check_suite(b, suite, {false, false, 32}).pass(); }
Matrix rb_n2() { return std::get<LinearOperator>(fixture("RB_N2")).map; }

Outcome octonions() {
  Tally t;
  const auto good = check_suite(fixture("O8"), "alternative");
  t.expect(good.pass(), "O8 alternative");
  t.expect(good.evaluations == 2 * 512, "O8 alternative covers 512 triples per axiom");
  const auto bad = check_suite(fixture("O8"), "associative");
  t.expect(!bad.pass(), "O8 associative fails");
  t.expect(!bad.violations.empty() && !bad.violations.front().residual.is_zero(), "nonzero residual");
  return t.done(std::to_string(bad.violations.size()) + " associator violations");
}

Outcome twist_closure() {
  Tally t;
  const auto ut3 = alt("UT3");
  const auto twisted = yau_twist_alternative(with_identity_maps(ut3), ut3.alpha, ut3.beta);
  t.expect(twisted.alpha != twisted.beta, "UT3 twist has alpha != beta");
  t.expect(passes(twisted, "alternative"), "UT3 twist alternative");

  const auto n2 = alt("N2");
  const auto split_n2 = split_by_rb_alt(n2, rb_n2());
  const auto go = testing::go11();
  const auto split_go = split_by_rb_alt(go, testing::go11_rota_baxter());
  t.expect(passes(yau_twist_pre_alternative(split_n2, Matrix::identity(2), Matrix{{-1, 0}, {0, 1}}),
                  "pre_alternative"),
           "split N2 twisted");
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {5, 7}, {-1, 2}}) {
    const auto p = yau_twist_pre_alternative(split_go, testing::go11_grading(a), testing::go11_grading(b));
    t.expect(passes(p, "pre_alternative"), "split GO11 twisted by gradings");
  }

  const Matrix r = testing::go11_rota_baxter();
  const std::vector<QuadriAlgebra> quadris = {
      quadri_from_commuting_rbs(n2, rb_n2(), 2 * rb_n2()),
      quadri_from_commuting_rbs(testing::go11_bihom(), r, r),
      quadri_from_commuting_rbs(testing::go11_bihom(), r, -3 * r),
      quadri_from_rb_pre_alt(split_go, r),
  };
  for (const auto& q : quadris) {
    const std::size_t n = q.dim();
    t.expect(passes(yau_twist_quadri(q, Matrix::identity(n), Matrix::identity(n)), "quadri"), "quadri (id, id)");
    if (n == 11) {
      t.expect(passes(yau_twist_quadri(q, testing::go11_grading(5), testing::go11_grading(7)), "quadri"),
               "quadri graded twist");
    } else {
      t.expect(passes(yau_twist_quadri(q, Matrix::identity(2), Matrix{{-1, 0}, {0, 1}}), "quadri"),
               "quadri sign twist");
    }
  }
  return t.done("UT3, 4 pre-alternative and 4 quadri twists");
}

Outcome semidirect_iff() {
  Tally t;
  const auto n2 = alt("N2");
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> entry(0, 1), value(-2, 2);
  int failing = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto m = std::get<AltBimodule>(fixture("ADJ_N2"));
    Rank3Tensor& target = entry(rng) ? m.left : m.right;
    const std::size_t i = entry(rng), j = entry(rng), k = entry(rng);
    Rational v(value(rng));
    if (v == target(i, j, k)) v += 3;
    target(i, j, k) = v;
    const bool module_ok = check_suite(n2, m, "alt_bimodule").pass();
    const bool product_ok = passes(semidirect_alternative(n2, m), "alternative");
    t.expect(module_ok == product_ok, "perturbation " + std::to_string(trial));
    failing += !module_ok;
  }
  return t.done(std::to_string(failing) + "/20 perturbed modules fail, verdicts agree");
}

Outcome rota_baxter_splitting() {
  Tally t;
  const auto n2 = alt("N2");
  const auto& census = testing::census_n2();
  for (const auto& r : census.witnesses) {
    const auto p = split_by_rb_alt(n2, r);
    t.expect(passes(p, "pre_alternative"), "split passes");
    const auto a = associated_alternative(p);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const Vector x = Vector::unit(2, i), y = Vector::unit(2, j);
        t.expect(tensor_apply(a.mu, x, y) == tensor_apply(n2.mu, x, r.apply(y)) + tensor_apply(n2.mu, r.apply(x), y),
                 "associated product");
      }
    }
  }
  return t.done(std::to_string(census.witnesses.size()) + " witnesses");
}

Outcome o_operator_equivalence() {
  Tally t;
  std::mt19937_64 rng(7);
  std::size_t agree_pass = 0, total = 0;
  for (const auto& name : fixture_names()) {
    const Bundle b = fixture(name);
    const auto* a = std::get_if<AlternativeAlgebra>(&b);
    if (a == nullptr) continue;
    const std::size_t n = a->dim();
    const AltBimodule adj = regular_bimodule(*a);
    std::vector<Matrix> ops = {Matrix(n, n), Matrix::identity(n)};
    if (name == "N2") ops.push_back(rb_n2());
    std::uniform_int_distribution<int> small(-2, 2), sparse(0, 3);
    for (int k = 0; k < 20; ++k) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          // Half of the samples are sparse so that some of them pass.
          if (k % 2 == 0 || sparse(rng) == 0) m(i, j) = Rational(small(rng), 1 + sparse(rng));
        }
      }
      if (k % 4 == 1) m = Rational(small(rng)) * ops.back();
      ops.push_back(m);
    }
    for (const auto& r : ops) {
      const bool rb = check_rota_baxter(b, {r, OperatorRole::rota_baxter}).pass();
      const bool oo = check_o_operator(b, adj, {r, OperatorRole::o_operator}).pass();
      t.expect(rb == oo, name + " operator verdicts");
      agree_pass += rb;
      ++total;
    }
  }
  return t.done(std::to_string(total) + " operators, " + std::to_string(agree_pass) + " Rota-Baxter");
}

Outcome quadri_pipeline() {
  Tally t;
  std::size_t pipelines = 0;
  const auto run_census = [&](const AlternativeAlgebra& a, const testing::RotaBaxterCensus& c, bool ordered) {
    // The oracle certified every pair, so hypotheses are not re-checked here.
    std::vector<QuadriAlgebra> verified;
    for (const auto& [i, j] : c.commuting) {
      for (int order = 0; order < (ordered && i != j ? 2 : 1); ++order) {
        const Matrix& r = order ? c.witnesses[j] : c.witnesses[i];
        const Matrix& p = order ? c.witnesses[i] : c.witnesses[j];
        const auto q = quadri_from_commuting_rbs(a, r, p, {true});
        t.expect(q == quadri_from_rb_pre_alt(split_by_rb_alt(a, r, {true}), p, {true}), "factorization");
        ++pipelines;
        if (std::find(verified.begin(), verified.end(), q) != verified.end()) continue;
        t.expect(passes(q, "quadri"), "quadri axioms");
        t.expect(passes(project_quadri(q, QuadriView::horizontal), "pre_alternative"), "horizontal");
        t.expect(passes(project_quadri(q, QuadriView::vertical), "pre_alternative"), "vertical");
        t.expect(passes(project_quadri(q, QuadriView::sum), "alternative"), "sum");
        verified.push_back(q);
      }
    }
  };
  // Spot-check the hypotheses the oracle supplies.
  const auto& n2c = testing::census_n2();
  for (const auto& [i, j] : n2c.commuting) {
    t.expect(check_rota_baxter(fixture("N2"), {n2c.witnesses[i], OperatorRole::rota_baxter}).pass(), "oracle RB");
    t.expect(n2c.witnesses[i] * n2c.witnesses[j] == n2c.witnesses[j] * n2c.witnesses[i], "oracle commuting");
  }
  run_census(alt("N2"), n2c, true);
  // Zero product: every output is the zero quadri, so order is immaterial.
  run_census(alt("Z2"), testing::census_z2(), false);
  return t.done(std::to_string(pipelines) + " pipelines");
}

Outcome equivalence_round_trip() {
  Tally t;
  const auto n2 = alt("N2");
  const auto go = testing::go11_bihom();
  const std::vector<PreAlternativeAlgebra> ps = {split_by_rb_alt(n2, rb_n2()),
                                                 split_by_rb_alt(go, testing::go11_rota_baxter())};
  for (const auto& p : ps) {
    const std::size_t n = p.dim();
    const auto a = associated_alternative(p);
    const auto adj = adjoint_bimodule(p).alternative;
    const Matrix id = Matrix::identity(n);
    t.expect(compatible_pre_alt_from_invertible_o(a, adj, id) == p, "compatible structure recovers P");
    const auto t1 = o_operator_from_cocycle(a, adj, id);
    t.expect(t1.map == id && t1.role == OperatorRole::o_operator, "cocycle id gives id");
    for (const Rational& c : {Rational(1), Rational(2), Rational(-1, 5)}) {
      const Matrix tm = c * id;
      const auto image = image_pre_alt(a, adj, tm);
      const auto target = compatible_pre_alt_from_invertible_o(a, adj, tm);
      t.expect(check_morphism({tm, OperatorRole::morphism}, image.structure, target).pass(), "T is a morphism");
    }
  }
  return t.done("split N2 and split GO11");
}

Outcome crosscheck_all() {
  Tally t;
  std::size_t pairs = 0, fail_verdicts = 0;
  const auto cross = [&](const SuiteInstance& s, const std::string& label) {
    const auto c = crosscheck(s, 100, 1234);
    t.expect(c.agree(), label);
    ++pairs;
    fail_verdicts += !c.basis_pass;
  };
  for (const auto& name : fixture_names()) {
    const Bundle b = fixture(name);
    if (std::holds_alternative<AlternativeAlgebra>(b)) {
      for (const auto& suite : {"alternative", "associative"}) cross(make_suite(b, suite), name + "/" + suite);
    }
  }
  const auto n2 = alt("N2");
  cross(alt_bimodule_suite(n2, std::get<AltBimodule>(fixture("ADJ_N2"))), "N2/ADJ_N2");
  cross(dual_conditions_suite(n2, std::get<AltBimodule>(fixture("ADJ_N2"))), "N2/ADJ_N2 dual");
  cross(alt_bimodule_suite(alt("Z1"), std::get<AltBimodule>(fixture("TRIV1"))), "Z1/TRIV1");
  cross(rota_baxter_suite(n2, rb_n2()), "N2/RB_N2");
  cross(o_operator_suite(n2, std::get<AltBimodule>(fixture("ADJ_N2")), rb_n2()), "N2/RB_N2 o_operator");
  const auto p = split_by_rb_alt(n2, rb_n2());
  cross(pre_alternative_suite(p), "split N2");
  cross(quadri_suite(quadri_from_commuting_rbs(n2, rb_n2(), 2 * rb_n2())), "N2 quadri");
  return t.done(std::to_string(pairs) + " pairs, " + std::to_string(fail_verdicts) + " failing verdicts reproduced");
}

Outcome serialization() {
  Tally t;
  std::vector<Bundle> bundles;
  for (const auto& name : fixture_names()) bundles.push_back(fixture(name));
  const auto n2 = alt("N2");
  const auto p = split_by_rb_alt(n2, rb_n2());
  const auto go = testing::go11_bihom();
  const auto gp = split_by_rb_alt(go, testing::go11_rota_baxter());
  bundles.insert(bundles.end(),
                 {yau_twist_alternative(with_identity_maps(alt("UT3")), alt("UT3").alpha, alt("UT3").beta), p, gp,
                  quadri_from_commuting_rbs(go, testing::go11_rota_baxter(), testing::go11_rota_baxter()),
                  semidirect_alternative(n2, std::get<AltBimodule>(fixture("ADJ_N2"))), associated_alternative(gp),
                  jordan_product(gp), malcev_bracket(gp), adjoint_bimodule(gp).alternative,
                  adjoint_bimodule(gp).pre_alternative, dual_bimodule(n2, std::get<AltBimodule>(fixture("ADJ_N2"))),
                  o_operator_from_cocycle(associated_alternative(gp), adjoint_bimodule(gp).alternative,
                                          Rational(3) * Matrix::identity(11))});
  Bundle big = fixture("N2");
  std::get<AlternativeAlgebra>(big).mu(0, 0, 1) = Rational::parse("123456789012345678901234567890/7");
  bundles.push_back(big);
  for (const auto& b : bundles) {
    const std::string text = save_bundle(b);
    t.expect(load_bundle(text) == b, std::string(kind_name(b)) + " round trip");
    t.expect(save_bundle(load_bundle(text)) == text, "stable text");
  }

  const auto exit_code = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
  };
  const fs::path data(BIHOM_TEST_DATA);
  std::size_t malformed = 0;
  for (const auto& e : fs::directory_iterator(data / "malformed")) {
    t.expect(exit_code({"validate", e.path().string()}) == 2, e.path().filename().string() + " exits 2");
    ++malformed;
  }
  t.expect(malformed >= 10, "corpus size");
  for (const auto& e : fs::directory_iterator(data / "invalid")) {
    t.expect(exit_code({"validate", e.path().string()}) == 1, e.path().filename().string() + " exits 1");
  }
  t.expect(exit_code({"check", "O8", "--suite", "alternative"}) == 0, "pass exits 0");
  t.expect(exit_code({"check", "O8", "--suite", "associative"}) == 1, "fail exits 1");
  t.expect(exit_code({"fixtures", "nosuch"}) == 2, "unknown fixture exits 2");
  return t.done(std::to_string(bundles.size()) + " bundles, " + std::to_string(malformed) + " malformed files");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"octonion discrimination", octonions},
      {"twist closure", twist_closure},
      {"semidirect iff", semidirect_iff},
      {"Rota-Baxter splitting", rota_baxter_splitting},
      {"O-operator equivalence", o_operator_equivalence},
      {"quadri pipeline", quadri_pipeline},
      {"equivalence round trip", equivalence_round_trip},
      {"basis-completeness crosscheck", crosscheck_all},
      {"serialization and exit codes", serialization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " [" << (o.pass ? "PASS" : "FAIL") << "] " << criteria[i].first << ": "
              << o.detail << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
