#include <algorithm>
#include <atomic>
#include <utility>

#include <omp.h>

#include "bihom/errors.hpp"
#include "bihom/identity.hpp"

namespace bihom {

struct Expr::Node {
  Op op;
  std::size_t index = 0;
  std::string name;
  Expr lhs;
  Expr rhs;
};

// Children default-construct with a null node; only leaves have none.
Expr Expr::var(std::size_t index) {
  auto n = std::make_shared<Node>(Node{Op::var, index, {}, Expr(nullptr), Expr(nullptr)});
  return Expr(std::move(n));
}

Expr Expr::map(std::string name, Expr arg) {
  return Expr(std::make_shared<Node>(Node{Op::map, 0, std::move(name), std::move(arg), Expr(nullptr)}));
}

Expr Expr::bilinear(std::string name, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<Node>(Node{Op::bilinear, 0, std::move(name), std::move(lhs), std::move(rhs)}));
}

Expr operator+(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Op::add, 0, {}, std::move(lhs), std::move(rhs)}));
}

Expr operator-(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Op::sub, 0, {}, std::move(lhs), std::move(rhs)}));
}

Expr::Op Expr::op() const { return node_->op; }
std::size_t Expr::index() const { return node_->index; }
const std::string& Expr::name() const { return node_->name; }
const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }

namespace {

std::size_t slot_dim(const Context& ctx, Space s) {
  return s == Space::algebra ? ctx.algebra_dim : ctx.module_dim;
}

}  // namespace

Program::Program(const Expr& expr, const Context& ctx, std::span<const Space> slots) {
  // Post-order walk returning the dimension of each subterm.
  auto compile = [&](auto&& self, const Expr& e) -> std::size_t {
    switch (e.op()) {
      case Expr::Op::var: {
        if (e.index() >= slots.size()) throw DimensionMismatch("variable index beyond the axiom's arity");
        code_.push_back({Expr::Op::var, e.index()});
        return slot_dim(ctx, slots[e.index()]);
      }
      case Expr::Op::map: {
        const std::size_t in = self(self, e.lhs());
        const auto it = ctx.maps.find(e.name());
        if (it == ctx.maps.end()) throw IncompatibleSuite("no map named '" + e.name() + "'");
        if (it->second.cols() != in) throw DimensionMismatch("map '" + e.name() + "' applied to wrong dimension");
        code_.push_back({Expr::Op::map, 0, nullptr, &it->second});
        return it->second.rows();
      }
      case Expr::Op::bilinear: {
        const std::size_t a = self(self, e.lhs());
        const std::size_t b = self(self, e.rhs());
        const auto it = ctx.bilinears.find(e.name());
        if (it == ctx.bilinears.end()) throw IncompatibleSuite("no product named '" + e.name() + "'");
        if (it->second.dim0() != a || it->second.dim1() != b) {
          throw DimensionMismatch("product '" + e.name() + "' applied to wrong dimensions");
        }
        code_.push_back({Expr::Op::bilinear, 0, &it->second, nullptr});
        return it->second.dim2();
      }
      case Expr::Op::add:
      case Expr::Op::sub: {
        const std::size_t a = self(self, e.lhs());
        const std::size_t b = self(self, e.rhs());
        if (a != b) throw DimensionMismatch("sum of vectors in different spaces");
        code_.push_back({e.op()});
        return a;
      }
    }
    return 0;
  };
  compile(compile, expr);
}

Vector Program::eval(std::span<const Vector> vars) const {
  std::vector<Vector> stack;
  stack.reserve(8);
  for (const Instr& in : code_) {
    switch (in.op) {
      case Expr::Op::var:
        stack.push_back(vars[in.index]);
        break;
      case Expr::Op::map:
        stack.back() = in.matrix->apply(stack.back());
        break;
      case Expr::Op::bilinear: {
        Vector rhs = std::move(stack.back());
        stack.pop_back();
        stack.back() = tensor_apply(*in.tensor, stack.back(), rhs);
        break;
      }
      case Expr::Op::add: {
        Vector rhs = std::move(stack.back());
        stack.pop_back();
        stack.back() += rhs;
        break;
      }
      case Expr::Op::sub: {
        Vector rhs = std::move(stack.back());
        stack.pop_back();
        stack.back() -= rhs;
        break;
      }
    }
  }
  return std::move(stack.back());
}

Vector evaluate(const SuiteInstance& suite, const Axiom& axiom, std::span<const Vector> vars) {
  return Program(axiom.residual, suite.ctx, axiom.slots).eval(vars);
}

namespace {

/// Per-axiom tuple enumeration: flat index <-> lexicographic basis tuple.
struct TupleSpace {
  std::vector<std::size_t> dims;
  std::size_t total = 1;

  explicit TupleSpace(const Context& ctx, const std::vector<Space>& slots) {
    for (Space s : slots) {
      dims.push_back(slot_dim(ctx, s));
      total *= dims.back();
    }
  }

  [[nodiscard]] std::vector<std::size_t> tuple(std::size_t flat) const {
    std::vector<std::size_t> t(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
      t[k] = flat % dims[k];
      flat /= dims[k];
    }
    return t;
  }
};

struct Bases {
  std::vector<Vector> algebra;
  std::vector<Vector> module;

  explicit Bases(const Context& ctx) {
    for (std::size_t i = 0; i < ctx.algebra_dim; ++i) algebra.push_back(Vector::unit(ctx.algebra_dim, i));
    for (std::size_t i = 0; i < ctx.module_dim; ++i) module.push_back(Vector::unit(ctx.module_dim, i));
  }

  [[nodiscard]] std::vector<Vector> vars(const std::vector<Space>& slots, const std::vector<std::size_t>& t) const {
    std::vector<Vector> out;
    out.reserve(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      out.push_back(slots[k] == Space::algebra ? algebra[t[k]] : module[t[k]]);
    }
    return out;
  }
};

Report start_report(const SuiteInstance& suite, const RunOptions& options) {
  const std::size_t dim = std::max(suite.ctx.algebra_dim, suite.ctx.module_dim);
  if (dim > options.max_dim) {
    throw IncompatibleSuite("dimension " + std::to_string(dim) + " exceeds the budget of " +
                            std::to_string(options.max_dim));
  }
  Report report;
  report.suite_id = suite.id;
  report.notes = suite.notes;
  if (suite.id == "quadri" && suite.ctx.algebra_dim > 8) {
    report.notes["warning"] = "quadri suite above dimension 8 evaluates " +
                              std::to_string(10 * suite.ctx.algebra_dim * suite.ctx.algebra_dim *
                                             suite.ctx.algebra_dim) +
                              " tuples";
  }
  if (options.skip_ambiguous) {
    std::string skipped;
    for (const Axiom& a : suite.axioms) {
      if (a.ambiguous) skipped += (skipped.empty() ? "" : ",") + a.id;
    }
    if (!skipped.empty()) report.notes["skipped"] = skipped;
  }
  return report;
}

using Hit = std::pair<std::size_t, Vector>;

}  // namespace

Report run_serial(const SuiteInstance& suite, const RunOptions& options) {
  Report report = start_report(suite, options);
  const Bases bases(suite.ctx);
  for (const Axiom& axiom : suite.axioms) {
    if (options.skip_ambiguous && axiom.ambiguous) continue;
    const Program program(axiom.residual, suite.ctx, axiom.slots);
    const TupleSpace space(suite.ctx, axiom.slots);
    for (std::size_t flat = 0; flat < space.total; ++flat) {
      const std::vector<std::size_t> t = space.tuple(flat);
      ++report.evaluations;
      Vector r = program.eval(bases.vars(axiom.slots, t));
      if (r.is_zero()) continue;
      report.violations.push_back({axiom.id, t, std::move(r)});
      if (options.first_failure) return report;
    }
  }
  return report;
}

Report run(const SuiteInstance& suite, const RunOptions& options) {
  Report report = start_report(suite, options);
  const Bases bases(suite.ctx);
  for (const Axiom& axiom : suite.axioms) {
    if (options.skip_ambiguous && axiom.ambiguous) continue;
    const Program program(axiom.residual, suite.ctx, axiom.slots);
    const TupleSpace space(suite.ctx, axiom.slots);
    const auto total = static_cast<std::int64_t>(space.total);

    if (options.first_failure) {
      // Smallest failing flat index wins, independent of the schedule.
      std::atomic<std::int64_t> best{total};
      Vector best_residual;
#pragma omp parallel for schedule(dynamic, 32)
      for (std::int64_t flat = 0; flat < total; ++flat) {
        if (flat >= best.load(std::memory_order_relaxed)) continue;
        Vector r = program.eval(bases.vars(axiom.slots, space.tuple(static_cast<std::size_t>(flat))));
        if (r.is_zero()) continue;
#pragma omp critical(bihom_first_failure)
        {
          if (flat < best.load()) {
            best.store(flat);
            best_residual = std::move(r);
          }
        }
      }
      if (best.load() < total) {
        report.evaluations += static_cast<std::size_t>(best.load()) + 1;
        report.violations.push_back(
            {axiom.id, space.tuple(static_cast<std::size_t>(best.load())), std::move(best_residual)});
        return report;
      }
      report.evaluations += space.total;
      continue;
    }

    std::vector<std::vector<Hit>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
      auto& hits = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 32)
      for (std::int64_t flat = 0; flat < total; ++flat) {
        Vector r = program.eval(bases.vars(axiom.slots, space.tuple(static_cast<std::size_t>(flat))));
        if (!r.is_zero()) hits.emplace_back(static_cast<std::size_t>(flat), std::move(r));
      }
    }
    std::vector<Hit> merged;
    for (auto& hits : per_thread) {
      std::move(hits.begin(), hits.end(), std::back_inserter(merged));
    }
    std::sort(merged.begin(), merged.end(), [](const Hit& a, const Hit& b) { return a.first < b.first; });
    for (auto& [flat, r] : merged) report.violations.push_back({axiom.id, space.tuple(flat), std::move(r)});
    report.evaluations += space.total;
  }
  return report;
}

Vector random_vector(std::size_t dim, std::mt19937_64& rng) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto num = static_cast<std::int64_t>(rng() % 19) - 9;
    const auto den = static_cast<std::int64_t>(rng() % 5) + 1;
    v[i] = Rational(num, den);
  }
  return v;
}

CrosscheckResult crosscheck(const SuiteInstance& suite, std::size_t trials, std::uint64_t seed,
                            const RunOptions& options) {
  CrosscheckResult result;
  result.trials = trials;
  RunOptions basis = options;
  basis.first_failure = true;
  result.basis_pass = run(suite, basis).pass();

  std::mt19937_64 rng(seed);
  std::vector<Program> programs;
  std::vector<const Axiom*> axioms;
  for (const Axiom& a : suite.axioms) {
    if (options.skip_ambiguous && a.ambiguous) continue;
    programs.emplace_back(a.residual, suite.ctx, a.slots);
    axioms.push_back(&a);
  }
  for (std::size_t t = 0; t < trials && result.random_pass; ++t) {
    for (std::size_t k = 0; k < programs.size(); ++k) {
      std::vector<Vector> vars;
      for (Space s : axioms[k]->slots) vars.push_back(random_vector(slot_dim(suite.ctx, s), rng));
      if (!programs[k].eval(vars).is_zero()) {
        result.random_pass = false;
        break;
      }
    }
  }
  return result;
}

}  // namespace bihom
