#include "bihom/model.hpp"

#include <utility>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using NamedTensor = std::pair<std::string, const Rank3Tensor*>;

void shape_violation(Report& report, std::string what) {
  report.violations.push_back({"shape:" + std::move(what), {}, Vector{}});
}

bool square_of(const Matrix& m, std::size_t n) { return m.rows() == n && m.cols() == n; }

/// Commutation of two square maps on every basis vector.
void check_commute(Report& report, const std::string& id, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  const Matrix ab = a * b;
  const Matrix ba = b * a;
  for (std::size_t j = 0; j < n; ++j) {
    ++report.evaluations;
    Vector r = ab.column(j) - ba.column(j);
    if (!r.is_zero()) report.violations.push_back({id, {j}, std::move(r)});
  }
}

/// f(x·y) = f(x)·f(y) on all basis pairs.
void check_multiplicative(Report& report, const std::string& map_name, const Matrix& f,
                          const std::string& product_name, const Rank3Tensor& p) {
  const std::size_t n = f.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = Vector::unit(n, i);
    const Vector fi = f.apply(ei);
    for (std::size_t j = 0; j < n; ++j) {
      ++report.evaluations;
      const Vector ej = Vector::unit(n, j);
      Vector r = f.apply(tensor_apply(p, ei, ej)) - tensor_apply(p, fi, f.apply(ej));
      if (!r.is_zero()) {
        report.violations.push_back({map_name + "_multiplicative(" + product_name + ")", {i, j}, std::move(r)});
      }
    }
  }
}

/// m X(x) = X(a x) m on all basis (x, v).
void check_intertwines(Report& report, const std::string& id, const Matrix& m, const Rank3Tensor& action,
                       const Matrix& a) {
  const std::size_t n = a.rows();
  const std::size_t dim_v = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = Vector::unit(n, i);
    const Vector ax = a.apply(x);
    for (std::size_t j = 0; j < dim_v; ++j) {
      ++report.evaluations;
      const Vector v = Vector::unit(dim_v, j);
      Vector r = m.apply(tensor_apply(action, x, v)) - tensor_apply(action, ax, m.apply(v));
      if (!r.is_zero()) report.violations.push_back({id, {i, j}, std::move(r)});
    }
  }
}

Report validate_algebra(std::string suite, const Matrix& alpha, const Matrix& beta,
                        const std::vector<NamedTensor>& products) {
  Report report;
  report.suite_id = std::move(suite);
  const std::size_t n = alpha.rows();
  bool shapes_ok = true;
  if (!square_of(alpha, n)) shape_violation(report, "alpha"), shapes_ok = false;
  if (!square_of(beta, n)) shape_violation(report, "beta"), shapes_ok = false;
  for (const auto& [name, t] : products) {
    if (t->dim0() != n || t->dim1() != n || t->dim2() != n) shape_violation(report, name), shapes_ok = false;
  }
  if (!shapes_ok) return report;
  check_commute(report, "alpha_beta_commute", alpha, beta);
  for (const auto& [name, t] : products) {
    check_multiplicative(report, "alpha", alpha, name, *t);
    check_multiplicative(report, "beta", beta, name, *t);
  }
  return report;
}

Report validate_module(std::string suite, const Matrix& alpha, const Matrix& beta, const Matrix& phi,
                       const Matrix& psi, const std::vector<NamedTensor>& actions) {
  Report report;
  report.suite_id = std::move(suite);
  const std::size_t n = alpha.rows();
  const std::size_t m = phi.rows();
  bool shapes_ok = true;
  if (!square_of(alpha, n)) shape_violation(report, "alpha"), shapes_ok = false;
  if (!square_of(beta, n)) shape_violation(report, "beta"), shapes_ok = false;
  if (!square_of(phi, m)) shape_violation(report, "phi"), shapes_ok = false;
  if (!square_of(psi, m)) shape_violation(report, "psi"), shapes_ok = false;
  for (const auto& [name, t] : actions) {
    if (t->dim0() != n || t->dim1() != m || t->dim2() != m) shape_violation(report, name), shapes_ok = false;
  }
  if (!shapes_ok) return report;
  check_commute(report, "alpha_beta_commute", alpha, beta);
  check_commute(report, "phi_psi_commute", phi, psi);
  for (const auto& [name, t] : actions) {
    check_intertwines(report, "phi_" + name, phi, *t, alpha);
    check_intertwines(report, "psi_" + name, psi, *t, beta);
  }
  return report;
}

}  // namespace

std::string_view to_string(OperatorRole role) {
  switch (role) {
    case OperatorRole::rota_baxter: return "rota_baxter";
    case OperatorRole::o_operator: return "o_operator";
    case OperatorRole::cocycle: return "cocycle";
    case OperatorRole::morphism: return "morphism";
  }
  return "rota_baxter";
}

OperatorRole operator_role_from_string(std::string_view text) {
  if (text == "rota_baxter") return OperatorRole::rota_baxter;
  if (text == "o_operator") return OperatorRole::o_operator;
  if (text == "cocycle") return OperatorRole::cocycle;
  if (text == "morphism") return OperatorRole::morphism;
  throw ParseError("unknown operator role '" + std::string(text) + "'");
}

std::string_view kind_name(const Bundle& bundle) {
  return std::visit(overloaded{
                        [](const AlternativeAlgebra&) { return std::string_view("alternative"); },
                        [](const PreAlternativeAlgebra&) { return std::string_view("pre_alternative"); },
                        [](const QuadriAlgebra&) { return std::string_view("quadri"); },
                        [](const AltBimodule&) { return std::string_view("alt_bimodule"); },
                        [](const PreAltBimodule&) { return std::string_view("pre_alt_bimodule"); },
                        [](const LinearOperator&) { return std::string_view("operator"); },
                        [](const ProductOnly&) { return std::string_view("product_only"); },
                    },
                    bundle);
}

Report validate_structure(const Bundle& bundle) {
  return std::visit(
      overloaded{
          [](const AlternativeAlgebra& a) {
            return validate_algebra("structure", a.alpha, a.beta, {{"mu", &a.mu}});
          },
          [](const PreAlternativeAlgebra& a) {
            return validate_algebra("structure", a.alpha, a.beta, {{"prec", &a.prec}, {"succ", &a.succ}});
          },
          [](const QuadriAlgebra& q) {
            return validate_algebra("structure", q.alpha, q.beta,
                                    {{"nw", &q.nw}, {"sw", &q.sw}, {"ne", &q.ne}, {"se", &q.se}});
          },
          [](const ProductOnly& p) {
            return validate_algebra("structure", p.alpha, p.beta, {{p.name, &p.product}});
          },
          [](const AltBimodule& m) {
            return validate_module("structure", m.alpha, m.beta, m.phi, m.psi, {{"L", &m.left}, {"R", &m.right}});
          },
          [](const PreAltBimodule& m) {
            return validate_module("structure", m.alpha, m.beta, m.phi, m.psi,
                                   {{"Lprec", &m.left_prec},
                                    {"Rprec", &m.right_prec},
                                    {"Lsucc", &m.left_succ},
                                    {"Rsucc", &m.right_succ}});
          },
          [](const LinearOperator& op) {
            Report report;
            report.suite_id = "structure";
            if (op.role == OperatorRole::rota_baxter && !op.map.is_square()) shape_violation(report, "operator");
            return report;
          },
      },
      bundle);
}

AlternativeAlgebra with_identity_maps(const AlternativeAlgebra& a) {
  return {a.mu, Matrix::identity(a.dim()), Matrix::identity(a.dim())};
}

PreAlternativeAlgebra with_identity_maps(const PreAlternativeAlgebra& a) {
  return {a.prec, a.succ, Matrix::identity(a.dim()), Matrix::identity(a.dim())};
}

QuadriAlgebra with_identity_maps(const QuadriAlgebra& a) {
  return {a.nw, a.sw, a.ne, a.se, Matrix::identity(a.dim()), Matrix::identity(a.dim())};
}

AlternativeAlgebra zero_alternative(std::size_t dim) {
  return {Rank3Tensor::product(dim), Matrix::identity(dim), Matrix::identity(dim)};
}

PreAlternativeAlgebra zero_pre_alternative(std::size_t dim) {
  return {Rank3Tensor::product(dim), Rank3Tensor::product(dim), Matrix::identity(dim), Matrix::identity(dim)};
}

QuadriAlgebra zero_quadri(std::size_t dim) {
  const Rank3Tensor z = Rank3Tensor::product(dim);
  return {z, z, z, z, Matrix::identity(dim), Matrix::identity(dim)};
}

AltBimodule trivial_bimodule(const Matrix& alpha, const Matrix& beta, std::size_t module_dim) {
  const std::size_t n = alpha.rows();
  return {Rank3Tensor(n, module_dim, module_dim), Rank3Tensor(n, module_dim, module_dim), alpha, beta,
          Matrix::identity(module_dim), Matrix::identity(module_dim)};
}

AltBimodule regular_bimodule(const AlternativeAlgebra& a) {
  const std::size_t n = a.dim();
  // L(e_i) e_j = e_i e_j and R(e_i) e_j = e_j e_i.
  Rank3Tensor left(n, n, n);
  Rank3Tensor right(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        left(i, j, k) = a.mu(i, j, k);
        right(i, j, k) = a.mu(j, i, k);
      }
    }
  }
  return {std::move(left), std::move(right), a.alpha, a.beta, a.alpha, a.beta};
}

}  // namespace bihom
