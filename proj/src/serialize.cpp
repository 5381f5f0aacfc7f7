#include <cstdint>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bihom/errors.hpp"
#include "bihom/model.hpp"

namespace bihom {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- reading

Rational scalar_from_json(const json& j, std::string_view where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(INT64_MAX)) return Rational::parse(std::to_string(u));
      return Rational(static_cast<std::int64_t>(u));
    }
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(std::string(where) + ": " + e.what());
    }
  }
  if (j.is_number_float()) {
    throw ParseError(std::string(where) + ": floating-point scalar " + j.dump() +
                     " (write integers or \"p/q\" strings)");
  }
  throw ParseError(std::string(where) + ": expected a scalar, got " + std::string(j.type_name()));
}

std::size_t dimension_from_json(const json& j, std::string_view key) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ParseError(std::string("'") + std::string(key) + "' must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

const json& array_at(const json& j, std::string_view where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
  return j;
}

[[noreturn]] void shape_error(const std::string& what) {
  auto report = std::make_shared<Report>();
  report->suite_id = "structure";
  report->violations.push_back({"shape:" + what, {}, Vector{}});
  throw StructureError("dimension mismatch in " + what, std::move(report));
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  array_at(j, where);
  if (j.size() != rows) shape_error(where);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = array_at(j[r], where);
    if (row.size() != cols) shape_error(where);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[c], where);
  }
  return m;
}

/// Matrix of unknown size; rows must be rectangular.
Matrix matrix_from_json(const json& j, const std::string& where) {
  array_at(j, where);
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : array_at(j[0], where).size();
  return matrix_from_json(j, rows, cols, where);
}

Rank3Tensor tensor_from_json(const json& j, std::size_t d0, std::size_t d1, std::size_t d2,
                             const std::string& where) {
  array_at(j, where);
  if (j.size() != d0) shape_error(where);
  Rank3Tensor t(d0, d1, d2);
  for (std::size_t i = 0; i < d0; ++i) {
    const json& plane = array_at(j[i], where);
    if (plane.size() != d1) shape_error(where);
    for (std::size_t a = 0; a < d1; ++a) {
      const json& row = array_at(plane[a], where);
      if (row.size() != d2) shape_error(where);
      for (std::size_t k = 0; k < d2; ++k) t(i, a, k) = scalar_from_json(row[k], where);
    }
  }
  return t;
}

void require_keys(const json& object, std::string_view where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!object.is_object()) throw ParseError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : object.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw ParseError(std::string(where) + ": unknown key '" + key + "'");
    }
  }
  for (const auto& key : required) {
    if (!object.contains(key)) throw ParseError(std::string(where) + ": missing key '" + key + "'");
  }
}

Provenance provenance_from_json(const json& j) {
  require_keys(j, "provenance", {"construction"}, {"inputs", "parameters"});
  Provenance p;
  if (!j["construction"].is_string()) throw ParseError("provenance.construction must be a string");
  p.construction = j["construction"].get<std::string>();
  for (const char* key : {"inputs", "parameters"}) {
    if (!j.contains(key)) continue;
    auto& out = std::string_view(key) == "inputs" ? p.inputs : p.parameters;
    for (const json& item : array_at(j[key], key)) {
      if (!item.is_string()) throw ParseError(std::string("provenance.") + key + " entries must be strings");
      out.push_back(item.get<std::string>());
    }
  }
  return p;
}

Bundle bundle_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("missing string key 'kind'");
  const std::string kind = doc["kind"].get<std::string>();

  auto algebra_common = [&](const std::set<std::string>& product_names) {
    require_keys(doc, "document", {"kind", "dim", "products", "maps"}, {"provenance"});
    const std::size_t n = dimension_from_json(doc["dim"], "dim");
    require_keys(doc["products"], "products", product_names);
    require_keys(doc["maps"], "maps", {"alpha", "beta"});
    return n;
  };
  auto product = [&](const std::string& name, std::size_t n) {
    return tensor_from_json(doc["products"][name], n, n, n, "products." + name);
  };
  auto map = [&](const std::string& name, std::size_t n) {
    return matrix_from_json(doc["maps"][name], n, n, "maps." + name);
  };

  if (kind == "alternative") {
    const std::size_t n = algebra_common({"mu"});
    return AlternativeAlgebra{product("mu", n), map("alpha", n), map("beta", n)};
  }
  if (kind == "pre_alternative") {
    const std::size_t n = algebra_common({"prec", "succ"});
    return PreAlternativeAlgebra{product("prec", n), product("succ", n), map("alpha", n), map("beta", n)};
  }
  if (kind == "quadri") {
    const std::size_t n = algebra_common({"nw", "sw", "ne", "se"});
    return QuadriAlgebra{product("nw", n), product("sw", n), product("ne", n),
                         product("se", n), map("alpha", n), map("beta", n)};
  }
  if (kind == "product_only") {
    require_keys(doc, "document", {"kind", "dim", "products", "maps"}, {"provenance"});
    const std::size_t n = dimension_from_json(doc["dim"], "dim");
    const json& products = doc["products"];
    if (!products.is_object() || products.size() != 1) {
      throw ParseError("product_only documents carry exactly one product");
    }
    require_keys(doc["maps"], "maps", {"alpha", "beta"});
    const std::string name = products.begin().key();
    return ProductOnly{name, product(name, n), map("alpha", n), map("beta", n)};
  }
  if (kind == "alt_bimodule" || kind == "pre_alt_bimodule") {
    require_keys(doc, "document", {"kind", "dim", "module_dim", "products", "maps"}, {"provenance"});
    const std::size_t n = dimension_from_json(doc["dim"], "dim");
    const std::size_t m = dimension_from_json(doc["module_dim"], "module_dim");
    require_keys(doc["maps"], "maps", {"alpha", "beta", "phi", "psi"});
    auto action = [&](const std::string& name) {
      return tensor_from_json(doc["products"][name], n, m, m, "products." + name);
    };
    Matrix alpha = map("alpha", n);
    Matrix beta = map("beta", n);
    Matrix phi = map("phi", m);
    Matrix psi = map("psi", m);
    if (kind == "alt_bimodule") {
      require_keys(doc["products"], "products", {"L", "R"});
      return AltBimodule{action("L"), action("R"), std::move(alpha), std::move(beta), std::move(phi),
                         std::move(psi)};
    }
    require_keys(doc["products"], "products", {"Lprec", "Rprec", "Lsucc", "Rsucc"});
    return PreAltBimodule{action("Lprec"), action("Rprec"), action("Lsucc"), action("Rsucc"),
                          std::move(alpha),  std::move(beta), std::move(phi),  std::move(psi)};
  }
  if (kind == "operator") {
    require_keys(doc, "document", {"kind", "dim", "role", "operator"}, {"provenance"});
    const std::size_t n = dimension_from_json(doc["dim"], "dim");
    if (!doc["role"].is_string()) throw ParseError("'role' must be a string");
    const OperatorRole role = operator_role_from_string(doc["role"].get<std::string>());
    Matrix m = matrix_from_json(doc["operator"], "operator");
    if (m.rows() == 0 && n != 0) shape_error("operator");
    if (m.rows() != 0 && m.cols() != n) shape_error("operator");
    return LinearOperator{std::move(m), role};
  }
  throw ParseError("unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------- writing

std::string scalar_text(const Rational& q) {
  if (q.is_small() && q.small_denominator() == 1) return std::to_string(q.small_numerator());
  return "\"" + q.str() + "\"";
}

void write_vector(std::ostream& os, const Vector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
  os << ']';
}

void write_matrix(std::ostream& os, const Matrix& m, const std::string& indent) {
  if (m.rows() == 0) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << scalar_text(m(r, c));
    os << ']' << (r + 1 < m.rows() ? ",\n" : "\n");
  }
  os << indent << ']';
}

void write_tensor(std::ostream& os, const Rank3Tensor& t, const std::string& indent) {
  if (t.dim0() == 0) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < t.dim0(); ++i) {
    os << indent << "  [";
    for (std::size_t j = 0; j < t.dim1(); ++j) {
      os << (j ? ", " : "") << '[';
      for (std::size_t k = 0; k < t.dim2(); ++k) os << (k ? ", " : "") << scalar_text(t(i, j, k));
      os << ']';
    }
    os << ']' << (i + 1 < t.dim0() ? ",\n" : "\n");
  }
  os << indent << ']';
}

std::string quoted(const std::string& s) { return json(s).dump(); }

void write_named_tensors(std::ostream& os, const std::vector<std::pair<std::string, const Rank3Tensor*>>& items) {
  os << "  \"products\": {\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    os << "    " << quoted(items[i].first) << ": ";
    write_tensor(os, *items[i].second, "    ");
    os << (i + 1 < items.size() ? ",\n" : "\n");
  }
  os << "  },\n";
}

void write_named_maps(std::ostream& os, const std::vector<std::pair<std::string, const Matrix*>>& items) {
  os << "  \"maps\": {\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    os << "    " << quoted(items[i].first) << ": ";
    write_matrix(os, *items[i].second, "    ");
    os << (i + 1 < items.size() ? ",\n" : "\n");
  }
  os << "  }";
}

void write_string_list(std::ostream& os, const std::vector<std::string>& items) {
  os << '[';
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << quoted(items[i]);
  os << ']';
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Document load_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  Document out{bundle_from_json(doc), std::nullopt};
  if (doc.contains("provenance")) out.provenance = provenance_from_json(doc["provenance"]);
  Report report = validate_structure(out.bundle);
  if (!report.pass()) {
    const std::string first = report.violations.front().axiom;
    throw StructureError("structure check failed: " + first, std::make_shared<Report>(std::move(report)));
  }
  return out;
}

Bundle load_bundle(std::string_view text) { return load_document(text).bundle; }

std::string save_bundle(const Bundle& bundle, const std::optional<Provenance>& provenance) {
  std::ostringstream os;
  os << "{\n  \"kind\": " << quoted(std::string(kind_name(bundle))) << ",\n";
  std::visit(overloaded{
                 [&](const AlternativeAlgebra& a) {
                   os << "  \"dim\": " << a.dim() << ",\n";
                   write_named_tensors(os, {{"mu", &a.mu}});
                   write_named_maps(os, {{"alpha", &a.alpha}, {"beta", &a.beta}});
                 },
                 [&](const PreAlternativeAlgebra& a) {
                   os << "  \"dim\": " << a.dim() << ",\n";
                   write_named_tensors(os, {{"prec", &a.prec}, {"succ", &a.succ}});
                   write_named_maps(os, {{"alpha", &a.alpha}, {"beta", &a.beta}});
                 },
                 [&](const QuadriAlgebra& q) {
                   os << "  \"dim\": " << q.dim() << ",\n";
                   write_named_tensors(os, {{"nw", &q.nw}, {"sw", &q.sw}, {"ne", &q.ne}, {"se", &q.se}});
                   write_named_maps(os, {{"alpha", &q.alpha}, {"beta", &q.beta}});
                 },
                 [&](const ProductOnly& p) {
                   os << "  \"dim\": " << p.dim() << ",\n";
                   write_named_tensors(os, {{p.name, &p.product}});
                   write_named_maps(os, {{"alpha", &p.alpha}, {"beta", &p.beta}});
                 },
                 [&](const AltBimodule& m) {
                   os << "  \"dim\": " << m.algebra_dim() << ",\n  \"module_dim\": " << m.module_dim() << ",\n";
                   write_named_tensors(os, {{"L", &m.left}, {"R", &m.right}});
                   write_named_maps(os, {{"alpha", &m.alpha}, {"beta", &m.beta}, {"phi", &m.phi}, {"psi", &m.psi}});
                 },
                 [&](const PreAltBimodule& m) {
                   os << "  \"dim\": " << m.algebra_dim() << ",\n  \"module_dim\": " << m.module_dim() << ",\n";
                   write_named_tensors(os, {{"Lprec", &m.left_prec},
                                            {"Rprec", &m.right_prec},
                                            {"Lsucc", &m.left_succ},
                                            {"Rsucc", &m.right_succ}});
                   write_named_maps(os, {{"alpha", &m.alpha}, {"beta", &m.beta}, {"phi", &m.phi}, {"psi", &m.psi}});
                 },
                 [&](const LinearOperator& op) {
                   os << "  \"dim\": " << op.source_dim() << ",\n";
                   os << "  \"role\": " << quoted(std::string(to_string(op.role))) << ",\n";
                   os << "  \"operator\": ";
                   write_matrix(os, op.map, "  ");
                 },
             },
             bundle);
  if (provenance) {
    os << ",\n  \"provenance\": {\n    \"construction\": " << quoted(provenance->construction)
       << ",\n    \"inputs\": ";
    write_string_list(os, provenance->inputs);
    os << ",\n    \"parameters\": ";
    write_string_list(os, provenance->parameters);
    os << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

std::string digest(const Bundle& bundle) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : save_bundle(bundle)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string save_report(const Report& report) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"report\",\n  \"suite\": " << quoted(report.suite_id)
     << ",\n  \"pass\": " << (report.pass() ? "true" : "false") << ",\n  \"evaluations\": " << report.evaluations
     << ",\n  \"violations\": [";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const Violation& v = report.violations[i];
    os << (i ? ",\n" : "\n") << "    {\"axiom\": " << quoted(v.axiom) << ", \"tuple\": [";
    for (std::size_t t = 0; t < v.tuple.size(); ++t) os << (t ? ", " : "") << v.tuple[t];
    os << "], \"residual\": ";
    write_vector(os, v.residual);
    os << '}';
  }
  os << (report.violations.empty() ? "]" : "\n  ]") << ",\n  \"notes\": {";
  std::size_t i = 0;
  for (const auto& [key, value] : report.notes) {
    os << (i++ ? ",\n" : "\n") << "    " << quoted(key) << ": " << quoted(value);
  }
  os << (report.notes.empty() ? "}" : "\n  }") << "\n}\n";
  return os.str();
}

std::string render_report(const Report& report) {
  std::ostringstream os;
  os << "suite " << report.suite_id << ": " << (report.pass() ? "PASS" : "FAIL") << " ("
     << report.violations.size() << " violation" << (report.violations.size() == 1 ? "" : "s") << " in "
     << report.evaluations << " evaluations)\n";
  for (const auto& [key, value] : report.notes) os << "  note " << key << ": " << value << '\n';
  if (report.violations.empty()) return os.str();

  std::size_t axiom_width = 5;
  std::size_t tuple_width = 5;
  std::vector<std::string> tuples;
  for (const Violation& v : report.violations) {
    std::string t = "(";
    for (std::size_t k = 0; k < v.tuple.size(); ++k) t += (k ? "," : "") + std::to_string(v.tuple[k]);
    t += ")";
    axiom_width = std::max(axiom_width, v.axiom.size());
    tuple_width = std::max(tuple_width, t.size());
    tuples.push_back(std::move(t));
  }
  os << std::left << std::setw(static_cast<int>(axiom_width)) << "axiom" << "  "
     << std::setw(static_cast<int>(tuple_width)) << "tuple" << "  residual\n";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const Violation& v = report.violations[i];
    std::string residual = "(";
    for (std::size_t k = 0; k < v.residual.size(); ++k) residual += (k ? ", " : "") + v.residual[k].str();
    residual += ")";
    os << std::setw(static_cast<int>(axiom_width)) << v.axiom << "  " << std::setw(static_cast<int>(tuple_width))
       << tuples[i] << "  " << residual << '\n';
  }
  return os.str();
}

}  // namespace bihom
