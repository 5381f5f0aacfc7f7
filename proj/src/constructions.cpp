#include "bihom/constructions.hpp"

#include <utility>

#include "bihom/errors.hpp"
#include "bihom/identity.hpp"

namespace bihom {

namespace {

using NamedProducts = std::vector<std::pair<std::string, const Rank3Tensor*>>;

void require_square(const Matrix& m, std::size_t n, const std::string& what) {
  if (m.rows() != n || m.cols() != n) {
    throw DimensionMismatch(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

template <class E>
void throw_if_failed(Report report, const std::string& what) {
  if (report.pass()) return;
  const std::string first = report.violations.front().axiom;
  throw E(what + " (first violation: " + first + ")", std::make_shared<Report>(std::move(report)));
}

/// x ∘' y = p(f(x), g(y)) as a tensor.
Rank3Tensor precompose(const Rank3Tensor& p, const Matrix& f, const Matrix& g) {
  const std::size_t n = f.cols();
  return tabulate(n, n, p.dim2(), [&](const Vector& x, const Vector& y) { return tensor_apply(p, f.apply(x), g.apply(y)); });
}

/// at, bt multiplicative over every product and commuting with each other
/// and with alpha, beta.
void require_twist_hypotheses(const Matrix& alpha, const Matrix& beta, const NamedProducts& products,
                              const Matrix& at, const Matrix& bt) {
  const std::size_t n = alpha.rows();
  require_square(at, n, "twist map");
  require_square(bt, n, "twist map");
  SuiteInstance s;
  s.id = "twist_hypotheses";
  s.ctx.algebra_dim = n;
  s.ctx.maps = {{"alpha", alpha}, {"beta", beta}, {"at", at}, {"bt", bt}};
  const std::vector<Space> one = {Space::algebra};
  const std::vector<Space> two = {Space::algebra, Space::algebra};
  const Expr x = Expr::var(0), y = Expr::var(1);
  auto ap = [](const char* m, Expr e) { return Expr::map(m, std::move(e)); };
  for (const auto& [name, t] : products) {
    s.ctx.bilinears.emplace(name, *t);
    for (const char* f : {"at", "bt"}) {
      s.axioms.push_back({std::string(f) + "_multiplicative(" + name + ")", two,
                          ap(f, Expr::bilinear(name, x, y)) - Expr::bilinear(name, ap(f, x), ap(f, y))});
    }
  }
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"at", "bt"}, {"at", "alpha"}, {"at", "beta"}, {"bt", "alpha"}, {"bt", "beta"}};
  for (const auto& [f, g] : pairs) {
    s.axioms.push_back({std::string(f) + "_" + g + "_commute", one, ap(f, ap(g, x)) - ap(g, ap(f, x))});
  }
  throw_if_failed<PreconditionError>(run(s), "twist hypotheses fail");
}

void require_same_maps(const Matrix& alpha, const Matrix& beta, const Matrix& m_alpha, const Matrix& m_beta) {
  if (alpha != m_alpha || beta != m_beta) {
    throw IncompatibleSuite("bimodule was declared over different structure maps than the algebra");
  }
}

/// Block product on A ⊕ V from the algebra product, a left action and a
/// right action: (x1 + u)(x2 + v) = x1 x2 + left(x1) v + right(x2) u.
Rank3Tensor block_product(const Rank3Tensor& mu, const Rank3Tensor& left, const Rank3Tensor& right) {
  const std::size_t n = mu.dim0();
  const std::size_t m = left.dim1();
  Rank3Tensor out = Rank3Tensor::product(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = mu(i, j, k);
    }
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        out(i, n + b, n + c) = left(i, b, c);
        out(n + b, i, n + c) = right(i, b, c);
      }
    }
  }
  return out;
}

/// Tensor of u·v = X(T(w1)) w2 where (w1, w2) = (u, v), or (v, u) if swap.
Rank3Tensor induced_by_action(const Rank3Tensor& action, const Matrix& t, bool swap) {
  const std::size_t m = t.cols();
  return tabulate(m, m, m, [&](const Vector& u, const Vector& v) {
    return swap ? tensor_apply(action, t.apply(v), u) : tensor_apply(action, t.apply(u), v);
  });
}

}  // namespace

Provenance make_provenance(std::string construction, const std::vector<Bundle>& inputs,
                           std::vector<std::string> parameters) {
  Provenance p;
  p.construction = std::move(construction);
  for (const Bundle& b : inputs) p.inputs.push_back(digest(b));
  p.parameters = std::move(parameters);
  return p;
}

// ------------------------------------------------------------ twists

AlternativeAlgebra yau_twist_alternative(const AlternativeAlgebra& a, const Matrix& at, const Matrix& bt,
                                         const BuildOptions& options) {
  require_square(at, a.dim(), "twist map");
  require_square(bt, a.dim(), "twist map");
  if (!options.force) require_twist_hypotheses(a.alpha, a.beta, {{"mu", &a.mu}}, at, bt);
  return {precompose(a.mu, at, bt), a.alpha * at, a.beta * bt};
}

PreAlternativeAlgebra yau_twist_pre_alternative(const PreAlternativeAlgebra& p, const Matrix& at, const Matrix& bt,
                                                const BuildOptions& options) {
  require_square(at, p.dim(), "twist map");
  require_square(bt, p.dim(), "twist map");
  if (!options.force) require_twist_hypotheses(p.alpha, p.beta, {{"prec", &p.prec}, {"succ", &p.succ}}, at, bt);
  return {precompose(p.prec, at, bt), precompose(p.succ, at, bt), p.alpha * at, p.beta * bt};
}

QuadriAlgebra yau_twist_quadri(const QuadriAlgebra& q, const Matrix& at, const Matrix& bt,
                               const BuildOptions& options) {
  require_square(at, q.dim(), "twist map");
  require_square(bt, q.dim(), "twist map");
  if (!options.force) {
    require_twist_hypotheses(q.alpha, q.beta, {{"nw", &q.nw}, {"sw", &q.sw}, {"ne", &q.ne}, {"se", &q.se}}, at, bt);
  }
  return {precompose(q.nw, at, bt), precompose(q.sw, at, bt), precompose(q.ne, at, bt),
          precompose(q.se, at, bt), q.alpha * at,             q.beta * bt};
}

AltBimodule twist_alt_bimodule(const AlternativeAlgebra& classical, const AltBimodule& m, const Matrix& a,
                               const Matrix& b, const Matrix& p, const Matrix& s, const BuildOptions& options) {
  const std::size_t n = classical.dim();
  const std::size_t dim_v = m.module_dim();
  require_square(a, n, "algebra twist map");
  require_square(b, n, "algebra twist map");
  require_square(p, dim_v, "module twist map");
  require_square(s, dim_v, "module twist map");
  if (m.algebra_dim() != n) throw DimensionMismatch("bimodule and algebra dimensions differ");
  if (!options.force) {
    if (!classical.alpha.is_identity() || !classical.beta.is_identity() || !m.phi.is_identity() ||
        !m.psi.is_identity() || !m.alpha.is_identity() || !m.beta.is_identity()) {
      auto report = std::make_shared<Report>();
      report->suite_id = "bimodule_twist_hypotheses";
      report->violations.push_back({"classical_input", {}, Vector{}});
      throw PreconditionError("bimodule twist starts from an algebra and module with identity maps", report);
    }
    throw_if_failed<PreconditionError>(run(alternative_suite(classical)), "input algebra is not alternative");
    throw_if_failed<PreconditionError>(run(alt_bimodule_suite(classical, m)), "input is not a bimodule");
    require_twist_hypotheses(classical.alpha, classical.beta, {{"mu", &classical.mu}}, a, b);

    SuiteInstance h;
    h.id = "bimodule_twist_hypotheses";
    h.ctx.algebra_dim = n;
    h.ctx.module_dim = dim_v;
    h.ctx.maps = {{"a", a}, {"b", b}, {"p", p}, {"s", s}};
    h.ctx.bilinears = {{"L", m.left}, {"R", m.right}};
    const Expr x = Expr::var(0), v = Expr::var(1);
    auto ap = [](const char* f, Expr e) { return Expr::map(f, std::move(e)); };
    const std::vector<Space> xm = {Space::algebra, Space::module};
    h.axioms.push_back({"p_s_commute", {Space::module}, ap("p", ap("s", x)) - ap("s", ap("p", x))});
    for (const auto& [mod, alg] : std::vector<std::pair<const char*, const char*>>{{"p", "a"}, {"s", "b"}}) {
      for (const char* act : {"L", "R"}) {
        h.axioms.push_back({std::string(mod) + "_" + act, xm,
                            ap(mod, Expr::bilinear(act, x, v)) - Expr::bilinear(act, ap(alg, x), ap(mod, v))});
      }
    }
    throw_if_failed<PreconditionError>(run(h), "bimodule twist hypotheses fail");
  }
  Rank3Tensor left(n, dim_v, dim_v);
  Rank3Tensor right(n, dim_v, dim_v);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ai = a.column(i);
    const Vector bi = b.column(i);
    for (std::size_t j = 0; j < dim_v; ++j) {
      const Vector l = tensor_apply(m.left, ai, s.column(j));
      const Vector r = tensor_apply(m.right, bi, p.column(j));
      for (std::size_t k = 0; k < dim_v; ++k) {
        left(i, j, k) = l[k];
        right(i, j, k) = r[k];
      }
    }
  }
  return {std::move(left), std::move(right), a, b, p, s};
}

AltBimodule dual_bimodule(const AlternativeAlgebra& a, const AltBimodule& m, const BuildOptions& options) {
  if (!options.force) throw_if_failed<DualConditionError>(check_dual_conditions(a, m), "dual conditions fail");
  const std::size_t n = m.algebra_dim();
  const std::size_t dim_v = m.module_dim();
  Rank3Tensor left(n, dim_v, dim_v);
  Rank3Tensor right(n, dim_v, dim_v);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim_v; ++j) {
      for (std::size_t k = 0; k < dim_v; ++k) {
        left(i, j, k) = m.left(i, k, j);
        right(i, j, k) = m.right(i, k, j);
      }
    }
  }
  AltBimodule out{std::move(left), std::move(right), m.alpha, m.beta, m.phi.transpose(), m.psi.transpose()};
  if (!options.force) {
    throw_if_failed<StructureError>(validate_structure(out), "dual maps are not compatible with the dual actions");
  }
  return out;
}

// ------------------------------------------------------------ sums and views

AlternativeAlgebra semidirect_alternative(const AlternativeAlgebra& a, const AltBimodule& m) {
  if (m.algebra_dim() != a.dim()) throw DimensionMismatch("bimodule and algebra dimensions differ");
  require_same_maps(a.alpha, a.beta, m.alpha, m.beta);
  return {block_product(a.mu, m.left, m.right), a.alpha.direct_sum(m.phi), a.beta.direct_sum(m.psi)};
}

PreAlternativeAlgebra semidirect_pre_alternative(const PreAlternativeAlgebra& p, const PreAltBimodule& m) {
  if (m.algebra_dim() != p.dim()) throw DimensionMismatch("bimodule and algebra dimensions differ");
  require_same_maps(p.alpha, p.beta, m.alpha, m.beta);
  return {block_product(p.prec, m.left_prec, m.right_prec), block_product(p.succ, m.left_succ, m.right_succ),
          p.alpha.direct_sum(m.phi), p.beta.direct_sum(m.psi)};
}

AlternativeAlgebra associated_alternative(const PreAlternativeAlgebra& p) { return {p.circ(), p.alpha, p.beta}; }

QuadriView quadri_view_from_string(std::string_view text) {
  if (text == "horizontal") return QuadriView::horizontal;
  if (text == "vertical") return QuadriView::vertical;
  if (text == "sum") return QuadriView::sum;
  throw ParseError("unknown quadri view '" + std::string(text) + "'");
}

Bundle project_quadri(const QuadriAlgebra& q, QuadriView view) {
  switch (view) {
    case QuadriView::horizontal: return PreAlternativeAlgebra{q.prec(), q.succ(), q.alpha, q.beta};
    case QuadriView::vertical: return PreAlternativeAlgebra{q.wedge(), q.vee(), q.alpha, q.beta};
    case QuadriView::sum: return AlternativeAlgebra{q.star(), q.alpha, q.beta};
  }
  throw ParseError("unknown quadri view");
}

namespace {

ProductOnly symmetrized(const PreAlternativeAlgebra& p, const Rational& sign, std::string name) {
  const Matrix f = mat_inverse(p.alpha) * p.beta;
  const Matrix g = p.alpha * mat_inverse(p.beta);
  const Rank3Tensor circ = p.circ();
  const std::size_t n = p.dim();
  Rank3Tensor out = tabulate(n, n, n, [&](const Vector& x, const Vector& y) {
    Vector twisted = tensor_apply(circ, f.apply(y), g.apply(x));
    twisted *= sign;
    return tensor_apply(circ, x, y) + twisted;
  });
  return {std::move(name), std::move(out), p.alpha, p.beta};
}

}  // namespace

ProductOnly jordan_product(const PreAlternativeAlgebra& p) { return symmetrized(p, 1, "jordan"); }

ProductOnly malcev_bracket(const PreAlternativeAlgebra& p) { return symmetrized(p, -1, "malcev"); }

AdjointBimodules adjoint_bimodule(const PreAlternativeAlgebra& p) {
  const std::size_t n = p.dim();
  Rank3Tensor l_prec(n, n, n), r_prec(n, n, n), l_succ(n, n, n), r_succ(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l_prec(i, j, k) = p.prec(i, j, k);
        r_prec(i, j, k) = p.prec(j, i, k);
        l_succ(i, j, k) = p.succ(i, j, k);
        r_succ(i, j, k) = p.succ(j, i, k);
      }
    }
  }
  AltBimodule alt{l_succ, r_prec, p.alpha, p.beta, p.alpha, p.beta};
  PreAltBimodule pre{std::move(l_prec), std::move(r_prec), std::move(l_succ), std::move(r_succ),
                     p.alpha,           p.beta,            p.alpha,           p.beta};
  return {std::move(alt), std::move(pre)};
}

PreAltBimodule quadri_adjoint_bimodule(const QuadriAlgebra& q) {
  const std::size_t n = q.dim();
  Rank3Tensor l_prec(n, n, n), r_prec(n, n, n), l_succ(n, n, n), r_succ(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l_prec(i, j, k) = q.sw(i, j, k);
        r_prec(i, j, k) = q.nw(j, i, k);
        l_succ(i, j, k) = q.se(i, j, k);
        r_succ(i, j, k) = q.ne(j, i, k);
      }
    }
  }
  return {std::move(l_prec), std::move(r_prec), std::move(l_succ), std::move(r_succ),
          q.alpha,           q.beta,            q.alpha,           q.beta};
}

// ------------------------------------------------------------ operators

PreAlternativeAlgebra pre_alt_from_o_operator(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& t,
                                              const BuildOptions& options) {
  const SuiteInstance suite = o_operator_suite(a, m, t);
  if (!options.force) throw_if_failed<OOperatorError>(run(suite), "not an O-operator");
  return {induced_by_action(m.right, t, true), induced_by_action(m.left, t, false), m.phi, m.psi};
}

ImageStructure image_pre_alt(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& t,
                             const BuildOptions& options) {
  if (t.rows() != a.dim() || t.cols() != m.module_dim()) throw DimensionMismatch("O-operator shape");
  if (mat_rank(t) < t.cols()) {
    throw NonInjectiveOperator("operator has rank " + std::to_string(mat_rank(t)) + " < " +
                               std::to_string(t.cols()) + "; the image structure is only built for injective T");
  }
  return {pre_alt_from_o_operator(a, m, t, options), t};
}

PreAlternativeAlgebra split_by_rb_alt(const AlternativeAlgebra& a, const Matrix& r, const BuildOptions& options) {
  const SuiteInstance suite = rota_baxter_suite(a, r);
  if (!options.force) throw_if_failed<RotaBaxterError>(run(suite), "not a Rota-Baxter operator");
  const Matrix id = Matrix::identity(a.dim());
  return {precompose(a.mu, id, r), precompose(a.mu, r, id), a.alpha, a.beta};
}

PreAlternativeAlgebra compatible_pre_alt_from_invertible_o(const AlternativeAlgebra& a, const AltBimodule& m,
                                                           const Matrix& t, const BuildOptions& options) {
  const SuiteInstance suite = o_operator_suite(a, m, t);
  const Matrix t_inv = mat_inverse(t);
  if (!options.force) throw_if_failed<OOperatorError>(run(suite), "not an O-operator");
  const std::size_t n = a.dim();
  Rank3Tensor prec = tabulate(n, n, n, [&](const Vector& x, const Vector& y) {
    return t.apply(tensor_apply(m.right, y, t_inv.apply(x)));
  });
  Rank3Tensor succ = tabulate(n, n, n, [&](const Vector& x, const Vector& y) {
    return t.apply(tensor_apply(m.left, x, t_inv.apply(y)));
  });
  return {std::move(prec), std::move(succ), a.alpha, a.beta};
}

LinearOperator o_operator_from_cocycle(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& d,
                                       const BuildOptions& options) {
  const SuiteInstance suite = cocycle_suite(a, m, d);
  Matrix inverse = mat_inverse(d);
  if (!options.force) throw_if_failed<CocycleError>(run(suite), "not a 1-cocycle");
  return {std::move(inverse), OperatorRole::o_operator};
}

QuadriAlgebra quadri_from_o_operator(const PreAlternativeAlgebra& p, const PreAltBimodule& m, const Matrix& t,
                                     const BuildOptions& options) {
  const SuiteInstance suite = o_operator_suite(p, m, t);
  if (!options.force) throw_if_failed<OOperatorError>(run(suite), "not an O-operator");
  return {induced_by_action(m.right_prec, t, true),
          induced_by_action(m.left_prec, t, false),
          induced_by_action(m.right_succ, t, true),
          induced_by_action(m.left_succ, t, false),
          m.phi,
          m.psi};
}

QuadriAlgebra quadri_from_rb_pre_alt(const PreAlternativeAlgebra& p, const Matrix& r, const BuildOptions& options) {
  const SuiteInstance suite = rota_baxter_suite(p, r);
  if (!options.force) throw_if_failed<RotaBaxterError>(run(suite), "not a Rota-Baxter operator");
  const Matrix id = Matrix::identity(p.dim());
  return {precompose(p.prec, id, r), precompose(p.prec, r, id), precompose(p.succ, id, r),
          precompose(p.succ, r, id), p.alpha,                     p.beta};
}

QuadriAlgebra quadri_from_commuting_rbs(const AlternativeAlgebra& a, const Matrix& r, const Matrix& p,
                                        const BuildOptions& options) {
  const SuiteInstance r_suite = rota_baxter_suite(a, r);
  const SuiteInstance p_suite = rota_baxter_suite(a, p);
  const Matrix rp = r * p;
  if (!options.force) {
    throw_if_failed<RotaBaxterError>(run(r_suite), "R is not a Rota-Baxter operator");
    throw_if_failed<RotaBaxterError>(run(p_suite), "P is not a Rota-Baxter operator");
    const Matrix pr = p * r;
    Report report;
    report.suite_id = "commuting_pair";
    for (std::size_t j = 0; j < a.dim(); ++j) {
      ++report.evaluations;
      Vector residual = rp.column(j) - pr.column(j);
      if (!residual.is_zero()) report.violations.push_back({"RP_commute", {j}, std::move(residual)});
    }
    throw_if_failed<NonCommutingPair>(std::move(report), "R and P do not commute");
  }
  const Matrix id = Matrix::identity(a.dim());
  return {precompose(a.mu, id, rp), precompose(a.mu, p, r), precompose(a.mu, r, p),
          precompose(a.mu, p * r, id), a.alpha, a.beta};
}

}  // namespace bihom
