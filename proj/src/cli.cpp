#include "bihom/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bihom/constructions.hpp"
#include "bihom/errors.hpp"
#include "bihom/identity.hpp"
#include "bihom/model.hpp"

namespace bihom::cli {

namespace {

// ------------------------------------------------------------ inputs

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

/// A file path, a fixture name, or a scaled operator fixture such as
/// "2RB_N2", "-RB_N2" or "1/2*RB_N2".
Document load_input(const std::string& ref) {
  if (std::filesystem::is_regular_file(ref)) return load_document(read_file(ref));
  static const std::regex scaled(R"(^([+-]?[0-9]+(?:/[0-9]+)?|[+-])\*?([A-Za-z_][A-Za-z0-9_]*)$)");
  std::smatch m;
  const auto& names = fixture_names();
  if (std::find(names.begin(), names.end(), ref) == names.end() && std::regex_match(ref, m, scaled)) {
    std::string factor = m[1].str();
    if (factor == "+" || factor == "-") factor += "1";
    Bundle base = fixture(m[2].str());
    auto* op = std::get_if<LinearOperator>(&base);
    if (op == nullptr) throw ParseError("only operator fixtures can be scaled: '" + ref + "'");
    op->map *= Rational::parse(factor[0] == '+' ? factor.substr(1) : factor);
    return {std::move(base), std::nullopt};
  }
  if (std::filesystem::exists(ref)) throw ParseError("'" + ref + "' is not a regular file");
  try {
    return {fixture(ref), std::nullopt};
  } catch (const UnknownFixture&) {
    throw UnknownFixture("'" + ref + "' is neither a readable file nor a fixture name");
  }
}

template <class T>
const T& expect(const Bundle& b, const std::string& what) {
  const T* p = std::get_if<T>(&b);
  if (p == nullptr) {
    throw IncompatibleSuite(what + " has kind '" + std::string(kind_name(b)) + "'");
  }
  return *p;
}

LinearOperator load_operator(const std::string& ref) {
  return expect<LinearOperator>(load_input(ref).bundle, "operator '" + ref + "'");
}

// ------------------------------------------------------------ suites

struct SuiteRequest {
  std::string suite;
  std::optional<std::string> module;
  std::optional<std::string> op;
  std::optional<std::string> target;
};

SuiteInstance build_suite(const Bundle& primary, const SuiteRequest& req) {
  auto need = [&](const std::optional<std::string>& v, const char* flag) -> const std::string& {
    if (!v) throw IncompatibleSuite("suite '" + req.suite + "' needs " + flag);
    return *v;
  };
  const std::string& s = req.suite;
  if (s == "alt_bimodule" || s == "pre_alt_bimodule" || s == "dual_conditions") {
    return make_suite(primary, load_input(need(req.module, "--module")).bundle, s);
  }
  if (s == "rota_baxter") {
    const LinearOperator r = load_operator(need(req.op, "--operator"));
    if (const auto* a = std::get_if<AlternativeAlgebra>(&primary)) return rota_baxter_suite(*a, r.map);
    if (const auto* p = std::get_if<PreAlternativeAlgebra>(&primary)) return rota_baxter_suite(*p, r.map);
    throw IncompatibleSuite("rota_baxter needs an alternative or pre-alternative algebra");
  }
  if (s == "o_operator") {
    const Bundle m = load_input(need(req.module, "--module")).bundle;
    const LinearOperator t = load_operator(need(req.op, "--operator"));
    if (const auto* a = std::get_if<AlternativeAlgebra>(&primary)) {
      return o_operator_suite(*a, expect<AltBimodule>(m, "module"), t.map);
    }
    if (const auto* p = std::get_if<PreAlternativeAlgebra>(&primary)) {
      return o_operator_suite(*p, expect<PreAltBimodule>(m, "module"), t.map);
    }
    throw IncompatibleSuite("o_operator needs an alternative or pre-alternative algebra");
  }
  if (s == "cocycle") {
    const Bundle m = load_input(need(req.module, "--module")).bundle;
    const LinearOperator d = load_operator(need(req.op, "--operator"));
    return cocycle_suite(expect<AlternativeAlgebra>(primary, "algebra"), expect<AltBimodule>(m, "module"), d.map);
  }
  if (s == "morphism") {
    const LinearOperator f = load_operator(need(req.op, "--operator"));
    return morphism_suite(f.map, primary, load_input(need(req.target, "--target")).bundle);
  }
  return make_suite(primary, s);
}

/// The suite a derived bundle is re-checked against, or nullopt when no
/// suite applies on its own.
std::optional<SuiteInstance> natural_suite(const Bundle& b) {
  if (const auto* a = std::get_if<AlternativeAlgebra>(&b)) return alternative_suite(*a);
  if (const auto* p = std::get_if<PreAlternativeAlgebra>(&b)) return pre_alternative_suite(*p);
  if (const auto* q = std::get_if<QuadriAlgebra>(&b)) return quadri_suite(*q);
  return std::nullopt;
}

void emit_report(const Report& r, bool human, std::ostream& out) { out << (human ? render_report(r) : save_report(r)); }

// ------------------------------------------------------------ derive

struct DeriveArgs {
  std::vector<Document> inputs;
  std::vector<std::string> input_refs;
  std::optional<LinearOperator> op;
  std::vector<LinearOperator> ops;
  std::vector<std::string> maps;
  std::string view = "horizontal";
  BuildOptions options;
};

struct Derived {
  Bundle bundle;
  std::optional<SuiteInstance> verify;
  std::vector<Bundle> extra_inputs;
  std::vector<std::string> parameters;
};

using DeriveFn = std::function<Derived(const DeriveArgs&)>;

void require_inputs(const DeriveArgs& a, std::size_t n, const char* usage) {
  if (a.inputs.size() != n) {
    throw IncompatibleSuite(std::string("expected ") + std::to_string(n) + " input(s): " + usage);
  }
}

const LinearOperator& require_op(const DeriveArgs& a) {
  if (!a.op) throw IncompatibleSuite("this construction needs --operator");
  return *a.op;
}

/// Resolves a --maps token: alpha/beta/phi/psi name a map of the inputs,
/// "id" the identity, anything else an operator file or fixture.
Matrix resolve_map(const std::string& token, const Matrix& alpha, const Matrix& beta, const Matrix* phi,
                   const Matrix* psi, std::size_t dim) {
  if (token == "alpha") return alpha;
  if (token == "beta") return beta;
  if (token == "phi" && phi != nullptr) return *phi;
  if (token == "psi" && psi != nullptr) return *psi;
  if (token == "id") return Matrix::identity(dim);
  return load_operator(token).map;
}

std::pair<Matrix, Matrix> twist_pair(const DeriveArgs& a, const Matrix& alpha, const Matrix& beta, bool defaults) {
  std::vector<std::string> maps = a.maps;
  if (maps.empty() && defaults) maps = {"alpha", "beta"};
  if (maps.size() != 2) throw IncompatibleSuite("--maps takes two maps");
  return {resolve_map(maps[0], alpha, beta, nullptr, nullptr, alpha.rows()),
          resolve_map(maps[1], alpha, beta, nullptr, nullptr, alpha.rows())};
}

Derived yau_twist(const DeriveArgs& a, bool from_classical) {
  require_inputs(a, 1, "ALGEBRA");
  std::string params = "maps=";
  for (const auto& m : a.maps.empty() ? std::vector<std::string>{"alpha", "beta"} : a.maps) {
    params += (params.size() > 5 ? "," : "") + m;
  }
  return std::visit(
      [&](const auto& x) -> Derived {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AlternativeAlgebra> || std::is_same_v<T, PreAlternativeAlgebra> ||
                      std::is_same_v<T, QuadriAlgebra>) {
          const auto [at, bt] = twist_pair(a, x.alpha, x.beta, from_classical);
          const T base = from_classical ? with_identity_maps(x) : x;
          T out;
          if constexpr (std::is_same_v<T, AlternativeAlgebra>) out = yau_twist_alternative(base, at, bt, a.options);
          if constexpr (std::is_same_v<T, PreAlternativeAlgebra>) {
            out = yau_twist_pre_alternative(base, at, bt, a.options);
          }
          if constexpr (std::is_same_v<T, QuadriAlgebra>) out = yau_twist_quadri(base, at, bt, a.options);
          Bundle b = out;
          return {b, natural_suite(b), {}, {params}};
        } else {
          throw IncompatibleSuite("yau_twist needs an algebra");
        }
      },
      a.inputs[0].bundle);
}

const std::map<std::string, DeriveFn>& registry() {
  static const std::map<std::string, DeriveFn> r = {
      {"yau_twist", [](const DeriveArgs& a) { return yau_twist(a, true); }},
      {"yau_twist_general",
       [](const DeriveArgs& a) {
         if (a.maps.size() != 2) throw IncompatibleSuite("yau_twist_general needs --maps a,b");
         return yau_twist(a, false);
       }},
      {"twist_bimodule",
       [](const DeriveArgs& a) {
         require_inputs(a, 2, "ALGEBRA MODULE");
         const auto& alg = expect<AlternativeAlgebra>(a.inputs[0].bundle, "algebra");
         const auto& mod = expect<AltBimodule>(a.inputs[1].bundle, "module");
         std::vector<std::string> maps = a.maps;
         if (maps.empty()) maps = {"alpha", "beta", "alpha", "beta"};
         if (maps.size() != 4) throw IncompatibleSuite("twist_bimodule takes --maps a,b,p,s");
         const std::size_t n = alg.dim(), m = mod.module_dim();
         const Matrix am = resolve_map(maps[0], alg.alpha, alg.beta, nullptr, nullptr, n);
         const Matrix bm = resolve_map(maps[1], alg.alpha, alg.beta, nullptr, nullptr, n);
         const Matrix pm = resolve_map(maps[2], alg.alpha, alg.beta, &mod.phi, &mod.psi, m);
         const Matrix sm = resolve_map(maps[3], alg.alpha, alg.beta, &mod.phi, &mod.psi, m);
         // Start from the classical algebra and module.
         const AlternativeAlgebra classical = with_identity_maps(alg);
         AltBimodule base = mod;
         base.alpha = base.beta = Matrix::identity(n);
         base.phi = base.psi = Matrix::identity(m);
         AltBimodule out = twist_alt_bimodule(classical, base, am, bm, pm, sm, a.options);
         BuildOptions unchecked{true};
         const AlternativeAlgebra twisted = yau_twist_alternative(classical, am, bm, unchecked);
         return Derived{out, alt_bimodule_suite(twisted, out), {},
                        {"maps=" + maps[0] + "," + maps[1] + "," + maps[2] + "," + maps[3]}};
       }},
      {"dual_bimodule",
       [](const DeriveArgs& a) {
         require_inputs(a, 2, "ALGEBRA MODULE");
         const auto& alg = expect<AlternativeAlgebra>(a.inputs[0].bundle, "algebra");
         AltBimodule out = dual_bimodule(alg, expect<AltBimodule>(a.inputs[1].bundle, "module"), a.options);
         return Derived{out, alt_bimodule_suite(alg, out), {}, {}};
       }},
      {"regular_bimodule",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "ALGEBRA");
         const auto& alg = expect<AlternativeAlgebra>(a.inputs[0].bundle, "algebra");
         AltBimodule out = regular_bimodule(alg);
         return Derived{out, alt_bimodule_suite(alg, out), {}, {}};
       }},
      {"semidirect",
       [](const DeriveArgs& a) -> Derived {
         require_inputs(a, 2, "ALGEBRA MODULE");
         Bundle out;
         if (const auto* alg = std::get_if<AlternativeAlgebra>(&a.inputs[0].bundle)) {
           out = semidirect_alternative(*alg, expect<AltBimodule>(a.inputs[1].bundle, "module"));
         } else {
           out = semidirect_pre_alternative(expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "algebra"),
                                            expect<PreAltBimodule>(a.inputs[1].bundle, "module"));
         }
         return {out, natural_suite(out), {}, {}};
       }},
      {"associated_alternative",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "PRE_ALTERNATIVE");
         Bundle out = associated_alternative(expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "input"));
         return Derived{out, natural_suite(out), {}, {}};
       }},
      {"project_quadri",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "QUADRI");
         Bundle out = project_quadri(expect<QuadriAlgebra>(a.inputs[0].bundle, "input"),
                                     quadri_view_from_string(a.view));
         return Derived{out, natural_suite(out), {}, {"view=" + a.view}};
       }},
      {"jordan",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "PRE_ALTERNATIVE");
         return Derived{jordan_product(expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "input")), std::nullopt,
                        {}, {}};
       }},
      {"malcev",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "PRE_ALTERNATIVE");
         return Derived{malcev_bracket(expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "input")), std::nullopt,
                        {}, {}};
       }},
      {"adjoint_alt_bimodule",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "PRE_ALTERNATIVE");
         const auto& p = expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "input");
         AltBimodule out = adjoint_bimodule(p).alternative;
         return Derived{out, alt_bimodule_suite(associated_alternative(p), out), {}, {}};
       }},
      {"adjoint_pre_alt_bimodule",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "PRE_ALTERNATIVE");
         const auto& p = expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "input");
         PreAltBimodule out = adjoint_bimodule(p).pre_alternative;
         return Derived{out, pre_alt_bimodule_suite(p, out), {}, {}};
       }},
      {"quadri_adjoint_bimodule",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "QUADRI");
         const auto& q = expect<QuadriAlgebra>(a.inputs[0].bundle, "input");
         PreAltBimodule out = quadri_adjoint_bimodule(q);
         return Derived{out, pre_alt_bimodule_suite({q.prec(), q.succ(), q.alpha, q.beta}, out), {}, {}};
       }},
      {"split_rb",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "ALGEBRA");
         const LinearOperator& r = require_op(a);
         Bundle out = split_by_rb_alt(expect<AlternativeAlgebra>(a.inputs[0].bundle, "input"), r.map, a.options);
         return Derived{out, natural_suite(out), {r}, {}};
       }},
      {"pre_alt_from_o_operator",
       [](const DeriveArgs& a) {
         require_inputs(a, 2, "ALGEBRA MODULE");
         const LinearOperator& t = require_op(a);
         Bundle out = pre_alt_from_o_operator(expect<AlternativeAlgebra>(a.inputs[0].bundle, "algebra"),
                                              expect<AltBimodule>(a.inputs[1].bundle, "module"), t.map, a.options);
         return Derived{out, natural_suite(out), {t}, {}};
       }},
      {"image_pre_alt",
       [](const DeriveArgs& a) {
         require_inputs(a, 2, "ALGEBRA MODULE");
         const LinearOperator& t = require_op(a);
         Bundle out = image_pre_alt(expect<AlternativeAlgebra>(a.inputs[0].bundle, "algebra"),
                                    expect<AltBimodule>(a.inputs[1].bundle, "module"), t.map, a.options)
                          .structure;
         return Derived{out, natural_suite(out), {t}, {}};
       }},
      {"compatible_pre_alt",
       [](const DeriveArgs& a) {
         require_inputs(a, 2, "ALGEBRA MODULE");
         const LinearOperator& t = require_op(a);
         Bundle out = compatible_pre_alt_from_invertible_o(expect<AlternativeAlgebra>(a.inputs[0].bundle, "algebra"),
                                                           expect<AltBimodule>(a.inputs[1].bundle, "module"), t.map,
                                                           a.options);
         return Derived{out, natural_suite(out), {t}, {}};
       }},
      {"o_operator_from_cocycle",
       [](const DeriveArgs& a) {
         require_inputs(a, 2, "ALGEBRA MODULE");
         const LinearOperator& d = require_op(a);
         const auto& alg = expect<AlternativeAlgebra>(a.inputs[0].bundle, "algebra");
         const auto& mod = expect<AltBimodule>(a.inputs[1].bundle, "module");
         LinearOperator t = o_operator_from_cocycle(alg, mod, d.map, a.options);
         return Derived{t, o_operator_suite(alg, mod, t.map), {d}, {}};
       }},
      {"quadri_from_o_operator",
       [](const DeriveArgs& a) {
         require_inputs(a, 2, "PRE_ALTERNATIVE MODULE");
         const LinearOperator& t = require_op(a);
         Bundle out = quadri_from_o_operator(expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "algebra"),
                                             expect<PreAltBimodule>(a.inputs[1].bundle, "module"), t.map, a.options);
         return Derived{out, natural_suite(out), {t}, {}};
       }},
      {"quadri_rb_pre_alt",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "PRE_ALTERNATIVE");
         const LinearOperator& r = require_op(a);
         Bundle out =
             quadri_from_rb_pre_alt(expect<PreAlternativeAlgebra>(a.inputs[0].bundle, "input"), r.map, a.options);
         return Derived{out, natural_suite(out), {r}, {}};
       }},
      {"quadri_commuting_rbs",
       [](const DeriveArgs& a) {
         require_inputs(a, 1, "ALGEBRA");
         if (a.ops.size() != 2) throw IncompatibleSuite("quadri_commuting_rbs needs --operators R,P");
         Bundle out = quadri_from_commuting_rbs(expect<AlternativeAlgebra>(a.inputs[0].bundle, "input"),
                                                a.ops[0].map, a.ops[1].map, a.options);
         return Derived{out, natural_suite(out), {a.ops[0], a.ops[1]}, {}};
       }},
  };
  return r;
}

/// Maps library exceptions onto the exit-code contract.
int guarded(const std::function<int()>& body, bool human, std::ostream& out, std::ostream& err) {
  try {
    return body();
  } catch (const ReportError& e) {
    err << "error: " << e.what() << '\n';
    emit_report(e.report(), human, out);
    return kFail;
  } catch (const SingularMap& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const NonInjectiveOperator& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

std::vector<std::string> construction_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checker and builder for BiHom-alternative structures", "bihom"};
  app.require_subcommand(1);

  std::string path;
  SuiteRequest req;
  bool human = false;
  bool first_failure = false;
  bool skip_ambiguous = false;

  auto* validate = app.add_subcommand("validate", "Load a bundle and check its structure maps");
  validate->add_option("file", path, "Bundle file or fixture name")->required();
  validate->add_flag("--human", human, "Render the report as a table");

  auto* check = app.add_subcommand("check", "Run an identity suite on a bundle");
  check->add_option("file", path, "Bundle file or fixture name")->required();
  check->add_option("--suite", req.suite, "Suite id")->required();
  check->add_option("--module", req.module, "Bimodule for bimodule-relative suites");
  check->add_option("--operator", req.op, "Operator for rota_baxter, o_operator, cocycle, morphism");
  check->add_option("--target", req.target, "Target bundle for the morphism suite");
  check->add_flag("--first-failure", first_failure, "Stop at the first violation");
  check->add_flag("--skip-ambiguous-axioms", skip_ambiguous, "Skip axioms whose reading was repaired");
  check->add_flag("--human", human, "Render the report as a table");

  std::string construction;
  std::vector<std::string> inputs;
  std::string op_ref;
  std::vector<std::string> op_refs;
  std::string module_ref;
  std::vector<std::string> maps;
  std::string view = "horizontal";
  std::string output;
  bool no_verify = false;
  bool force = false;
  auto* derive = app.add_subcommand("derive", "Build a derived bundle");
  derive->add_option("--construction", construction, "Construction name")->required();
  derive->add_option("inputs", inputs, "Input bundles or fixture names")->required();
  derive->add_option("--operator", op_ref, "Operator input");
  derive->add_option("--operators", op_refs, "Two operators R,P")->delimiter(',');
  derive->add_option("--module", module_ref, "Module input (appended to the inputs)");
  derive->add_option("--maps", maps, "Twisting maps: alpha, beta, phi, psi, id, or operator inputs")->delimiter(',');
  derive->add_option("--view", view, "Quadri projection: horizontal, vertical, sum");
  derive->add_option("-o,--output", output, "Output file (stdout when omitted)");
  derive->add_flag("--no-verify", no_verify, "Skip re-checking the output");
  derive->add_flag("--force", force, "Skip theorem hypotheses");
  derive->add_flag("--human", human, "Render the report as a table");

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "Emit a built-in fixture, or list them");
  fixtures->add_option("name", fixture_name, "Fixture name");
  fixtures->add_option("-o,--output", output, "Output file (stdout when omitted)");

  std::size_t trials = 100;
  std::uint64_t seed = 0;
  auto* cross = app.add_subcommand("crosscheck", "Compare basis and random-vector verdicts");
  cross->add_option("file", path, "Bundle file or fixture name")->required();
  cross->add_option("--suite", req.suite, "Suite id")->required();
  cross->add_option("--module", req.module, "Bimodule for bimodule-relative suites");
  cross->add_option("--operator", req.op, "Operator for operator suites");
  cross->add_option("--target", req.target, "Target bundle for the morphism suite");
  cross->add_option("--trials", trials, "Random trials");
  cross->add_option("--seed", seed, "Random seed");
  cross->add_flag("--skip-ambiguous-axioms", skip_ambiguous, "Skip axioms whose reading was repaired");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  RunOptions options;
  options.first_failure = first_failure;
  options.skip_ambiguous = skip_ambiguous;

  if (*validate) {
    return guarded(
        [&] {
          Document doc = load_input(path);
          emit_report(validate_structure(doc.bundle), human, out);
          return kPass;
        },
        human, out, err);
  }

  if (*check) {
    return guarded(
        [&] {
          const Document doc = load_input(path);
          const Report r = bihom::run(build_suite(doc.bundle, req), options);
          emit_report(r, human, out);
          return r.pass() ? kPass : kFail;
        },
        human, out, err);
  }

  if (*cross) {
    return guarded(
        [&] {
          const Document doc = load_input(path);
          const SuiteInstance suite = build_suite(doc.bundle, req);
          if (trials == 0) err << "warning: zero trials; the comparison is vacuous\n";
          const CrosscheckResult c = crosscheck(suite, trials, seed, options);
          nlohmann::ordered_json j;
          j["kind"] = "crosscheck";
          j["suite"] = suite.id;
          j["trials"] = trials;
          j["seed"] = seed;
          j["basis_pass"] = c.basis_pass;
          j["random_pass"] = c.random_pass;
          j["agree"] = c.agree();
          out << j.dump(2) << '\n';
          return c.agree() ? kPass : kFail;
        },
        false, out, err);
  }

  if (*fixtures) {
    return guarded(
        [&] {
          if (fixture_name.empty()) {
            for (const auto& n : fixture_names()) out << n << '\n';
            return kPass;
          }
          const std::string text = save_bundle(fixture(fixture_name));
          if (output.empty()) {
            out << text;
          } else {
            write_file(output, text);
          }
          return kPass;
        },
        false, out, err);
  }

  // derive
  return guarded(
      [&] {
        const auto& reg = registry();
        const auto it = reg.find(construction);
        if (it == reg.end()) {
          throw IncompatibleSuite("unknown construction '" + construction + "'");
        }
        DeriveArgs a;
        a.input_refs = inputs;
        if (!module_ref.empty()) a.input_refs.push_back(module_ref);
        for (const auto& ref : a.input_refs) a.inputs.push_back(load_input(ref));
        if (!op_ref.empty()) a.op = load_operator(op_ref);
        for (const auto& ref : op_refs) a.ops.push_back(load_operator(ref));
        a.maps = maps;
        a.view = view;
        a.options.force = force;

        Derived d = it->second(a);
        std::vector<Bundle> prov_inputs;
        for (const auto& doc : a.inputs) prov_inputs.push_back(doc.bundle);
        for (const auto& b : d.extra_inputs) prov_inputs.push_back(b);
        if (force) d.parameters.emplace_back("force=true");
        const std::string text = save_bundle(d.bundle, make_provenance(construction, prov_inputs, d.parameters));
        std::ostream& report_out = output.empty() ? err : out;
        if (output.empty()) {
          out << text;
        } else {
          write_file(output, text);
        }
        if (no_verify) return kPass;
        if (!d.verify) {
          err << "note: no suite applies to a " << kind_name(d.bundle) << " bundle; nothing re-checked\n";
          return kPass;
        }
        const Report r = bihom::run(*d.verify, options);
        emit_report(r, human, report_out);
        return r.pass() ? kPass : kFail;
      },
      human, out, err);
}

}  // namespace bihom::cli
