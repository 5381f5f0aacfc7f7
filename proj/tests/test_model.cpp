#include <doctest.h>

#include "bihom/constructions.hpp"
#include "bihom/errors.hpp"
#include "bihom/identity.hpp"
#include "bihom/model.hpp"
#include "support.hpp"

using namespace bihom;

namespace {

const AlternativeAlgebra& alt(const Bundle& b) { return std::get<AlternativeAlgebra>(b); }

std::string n2_with_alpha(const std::string& alpha) {
  return R"({"kind": "alternative", "dim": 2, "products": {"mu": [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]},
             "maps": {"alpha": )" +
         alpha + R"(, "beta": [[1, 0], [0, 1]]}})";
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("fixture catalogue") {
    CHECK(fixture_names() == std::vector<std::string>{"Z1", "Z2", "N2", "UT3", "O8", "RB_N2", "ADJ_N2", "TRIV1"});
    CHECK_THROWS_AS(fixture("nosuch"), UnknownFixture);
    for (const auto& name : fixture_names()) {
      CAPTURE(name);
      CHECK(validate_structure(fixture(name)).pass());
    }
  }

  TEST_CASE("zero fixtures") {
    const auto z1 = alt(fixture("Z1"));
    CHECK(z1.dim() == 1);
    CHECK(z1.mu.is_zero());
    CHECK(z1.alpha.is_identity());
    CHECK(alt(fixture("Z2")).dim() == 2);
    const auto triv = std::get<AltBimodule>(fixture("TRIV1"));
    CHECK(triv.left.is_zero());
    CHECK(triv.right.is_zero());
    CHECK(triv.phi.is_identity());
  }

  TEST_CASE("N2 and its Rota-Baxter operator") {
    const auto n2 = alt(fixture("N2"));
    CHECK(n2.mu(0, 0, 1) == 1);
    CHECK(testing::reference_associative(n2));
    CHECK(check_suite(n2, "associative").pass());
    const auto rb = std::get<LinearOperator>(fixture("RB_N2"));
    CHECK(rb.map == Matrix{{0, 0}, {1, 0}});
    CHECK(rb.role == OperatorRole::rota_baxter);
    // R(x)R(y) = R(R(x)y + xR(y)) on every basis pair, by hand.
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const Vector x = Vector::unit(2, i), y = Vector::unit(2, j);
        const Vector lhs = tensor_apply(n2.mu, rb.map.apply(x), rb.map.apply(y));
        const Vector rhs =
            rb.map.apply(tensor_apply(n2.mu, rb.map.apply(x), y) + tensor_apply(n2.mu, x, rb.map.apply(y)));
        CHECK(lhs == rhs);
      }
    }
    const auto adj = std::get<AltBimodule>(fixture("ADJ_N2"));
    CHECK(adj == regular_bimodule(n2));
  }

  TEST_CASE("UT3 maps are commuting automorphisms") {
    const auto ut3 = alt(fixture("UT3"));
    CHECK(ut3.alpha == Matrix{{1, 0, 0}, {0, Rational(1, 2), 0}, {0, 0, 1}});
    CHECK(ut3.beta == Matrix{{1, 0, 0}, {0, Rational(1, 3), 0}, {0, 0, 1}});
    for (const Matrix* f : {&ut3.alpha, &ut3.beta}) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          const Vector x = Vector::unit(3, i), y = Vector::unit(3, j);
          CHECK(f->apply(tensor_apply(ut3.mu, x, y)) == tensor_apply(ut3.mu, f->apply(x), f->apply(y)));
        }
      }
    }
    CHECK(mats_commute(ut3.alpha, ut3.beta));
    // E11 E12 = E12, E12 E22 = E12, E22 E12 = 0
    CHECK(tensor_apply(ut3.mu, Vector::unit(3, 0), Vector::unit(3, 1)) == Vector::unit(3, 1));
    CHECK(tensor_apply(ut3.mu, Vector::unit(3, 1), Vector::unit(3, 2)) == Vector::unit(3, 1));
    CHECK(tensor_apply(ut3.mu, Vector::unit(3, 2), Vector::unit(3, 1)).is_zero());
  }

  TEST_CASE("O8 matches the doubling oracle") {
    const auto o8 = alt(fixture("O8"));
    CHECK(o8.dim() == 8);
    for (std::size_t u = 0; u < 8; ++u) {
      for (std::size_t v = 0; v < 8; ++v) {
        const auto [sign, w] = testing::octonion_unit_product(u, v);
        for (std::size_t k = 0; k < 8; ++k) CHECK(o8.mu(u, v, k) == (k == w ? sign : 0));
      }
    }
    for (std::size_t i = 1; i < 8; ++i) CHECK(o8.mu(i, i, 0) == -1);
    CHECK(testing::reference_alternative(o8));
    CHECK_FALSE(testing::reference_associative(o8));
  }

  TEST_CASE("validate_structure catches broken maps") {
    CHECK(validate_structure(fixture("Z1")).pass());
    CHECK(validate_structure(fixture("ADJ_N2")).pass());

    auto ut3 = alt(fixture("UT3"));
    ut3.beta = Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    const Report r = validate_structure(ut3);
    REQUIRE_FALSE(r.pass());
    bool named = false;
    for (const auto& v : r.violations) named = named || v.axiom == "beta_multiplicative(mu)";
    CHECK(named);
    CHECK(r.violations.front().tuple.size() == 2);

    auto n2 = alt(fixture("N2"));
    n2.alpha = Matrix{{1, 0}, {0, 2}};
    n2.beta = Matrix{{0, 1}, {1, 0}};
    bool commute = false;
    for (const auto& v : validate_structure(n2).violations) commute = commute || v.axiom == "alpha_beta_commute";
    CHECK(commute);
  }

  TEST_CASE("bimodule map compatibility is validated") {
    auto m = std::get<AltBimodule>(fixture("ADJ_N2"));
    m.phi = Matrix{{2, 0}, {0, 1}};
    const Report r = validate_structure(m);
    CHECK_FALSE(r.pass());
    CHECK(r.violations.front().axiom.rfind("phi_", 0) == 0);
  }

  TEST_CASE("loading N2 with a non-multiplicative alpha names the basis pair") {
    CHECK_NOTHROW(load_bundle(n2_with_alpha("[[1, 0], [0, 1]]")));
    try {
      load_bundle(n2_with_alpha("[[1, 1], [0, 1]]"));
      FAIL("expected StructureError");
    } catch (const StructureError& e) {
      const Report& r = e.report();
      REQUIRE_FALSE(r.pass());
      CHECK(r.violations.front().axiom == "alpha_multiplicative(mu)");
      // alpha(e1 e1) = alpha(e2) = e1 + e2, while alpha(e1) alpha(e1) = e2.
      CHECK(r.violations.front().tuple == std::vector<std::size_t>{0, 0});
    }
  }

  TEST_CASE("save/load round trip on every fixture and derived bundle") {
    std::vector<Bundle> bundles;
    for (const auto& name : fixture_names()) bundles.push_back(fixture(name));
    const auto n2 = alt(fixture("N2"));
    const auto rb = std::get<LinearOperator>(fixture("RB_N2")).map;
    const auto split = split_by_rb_alt(n2, rb);
    bundles.emplace_back(split);
    bundles.emplace_back(yau_twist_alternative(with_identity_maps(alt(fixture("UT3"))), alt(fixture("UT3")).alpha,
                                               alt(fixture("UT3")).beta));
    bundles.emplace_back(quadri_from_commuting_rbs(n2, rb, 2 * rb));
    bundles.emplace_back(adjoint_bimodule(split).pre_alternative);
    bundles.emplace_back(jordan_product(split));
    const auto g = testing::go11_bihom();
    const auto p = split_by_rb_alt(g, testing::go11_rota_baxter());
    bundles.emplace_back(g);
    bundles.emplace_back(p);
    bundles.emplace_back(malcev_bracket(p));
    bundles.emplace_back(quadri_from_commuting_rbs(g, testing::go11_rota_baxter(), testing::go11_rota_baxter()));
    bundles.emplace_back(LinearOperator{testing::go11_rota_baxter(), OperatorRole::o_operator});
    for (const Bundle& b : bundles) {
      CAPTURE(kind_name(b));
      const std::string text = save_bundle(b);
      CHECK(load_bundle(text) == b);
      CHECK(save_bundle(load_bundle(text)) == text);
    }
  }

  TEST_CASE("large rationals survive serialization") {
    auto a = alt(fixture("Z1"));
    a.alpha(0, 0) = Rational(std::int64_t{1} << 62) * Rational(std::int64_t{1} << 62) / Rational(3);
    a.beta = a.alpha;
    const Bundle b = a;
    const Bundle back = load_bundle(save_bundle(b));
    CHECK(back == b);
    CHECK(std::get<AlternativeAlgebra>(back).alpha(0, 0).to_mpq() == mpq_class("21267647932558653966460912964485513216/3"));
  }

  TEST_CASE("provenance round trip and digest") {
    const Bundle n2 = fixture("N2");
    const Provenance p{"split_rb", {digest(n2)}, {"note=x"}};
    const Document doc = load_document(save_bundle(n2, p));
    REQUIRE(doc.provenance.has_value());
    CHECK(*doc.provenance == p);
    CHECK(digest(n2) == digest(doc.bundle));
    CHECK(digest(n2).size() == 16);
    CHECK(digest(n2) != digest(fixture("Z2")));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(load_bundle("not json"), ParseError);
    CHECK_THROWS_AS(load_bundle(R"({"kind": "alternative"})"), ParseError);
    CHECK_THROWS_AS(load_bundle(R"({"kind": "alternative", "dim": 1, "products": {"mu": [[[0.5]]]},
                                    "maps": {"alpha": [[1]], "beta": [[1]]}})"),
                    ParseError);
    CHECK_THROWS_AS(load_bundle(R"({"kind": "alternative", "dim": 1, "products": {"mu": [[[0]]]},
                                    "maps": {"alpha": [[1]], "beta": [[1]]}, "extra": 1})"),
                    ParseError);
    CHECK_THROWS_AS(load_bundle(R"({"kind": "product_only", "dim": 1, "products": {"a": [[[0]]], "b": [[[0]]]},
                                    "maps": {"alpha": [[1]], "beta": [[1]]}})"),
                    ParseError);
  }

  TEST_CASE("shape mismatches are structural errors") {
    CHECK_THROWS_AS(load_bundle(R"({"kind": "alternative", "dim": 2, "products": {"mu": [[[0, 0], [0, 0]]]},
                                    "maps": {"alpha": [[1, 0], [0, 1]], "beta": [[1, 0], [0, 1]]}})"),
                    StructureError);
  }

  TEST_CASE("reports serialize and render") {
    Report r;
    r.suite_id = "demo";
    r.evaluations = 3;
    r.violations.push_back({"ax", {0, 1}, Vector{0, Rational(1, 2)}});
    r.notes["k"] = "v";
    const std::string text = save_report(r);
    CHECK(text.find("\"pass\": false") != std::string::npos);
    CHECK(text.find("\"1/2\"") != std::string::npos);
    const std::string table = render_report(r);
    CHECK(table.find("ax") != std::string::npos);
    CHECK(table.find("FAIL") != std::string::npos);
  }

  TEST_CASE("operator roles") {
    for (auto role : {OperatorRole::rota_baxter, OperatorRole::o_operator, OperatorRole::cocycle,
                      OperatorRole::morphism}) {
      CHECK(operator_role_from_string(to_string(role)) == role);
    }
    CHECK_THROWS_AS(operator_role_from_string("nope"), ParseError);
    // Rota-Baxter operators must be square.
    CHECK_FALSE(validate_structure(LinearOperator{Matrix(2, 3), OperatorRole::rota_baxter}).pass());
    CHECK(validate_structure(LinearOperator{Matrix(2, 3), OperatorRole::o_operator}).pass());
  }
}
