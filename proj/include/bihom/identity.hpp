#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bihom/linalg.hpp"
#include "bihom/model.hpp"

namespace bihom {

/// Formal multilinear expression over named bilinear maps and linear maps.
///
/// Leaves are placeholder variables; a bilinear node may be a product
/// (algebra × algebra → algebra) or an action (algebra × module → module).
class Expr {
 public:
  enum class Op { var, map, bilinear, add, sub };

  static Expr var(std::size_t index);
  static Expr map(std::string name, Expr arg);
  static Expr bilinear(std::string name, Expr lhs, Expr rhs);

  friend Expr operator+(Expr lhs, Expr rhs);
  friend Expr operator-(Expr lhs, Expr rhs);

  [[nodiscard]] Op op() const;
  [[nodiscard]] std::size_t index() const;
  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] const Expr& lhs() const;
  [[nodiscard]] const Expr& rhs() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Space { algebra, module };

/// One identity residual(x_1, ..., x_k) = 0 with typed variable slots.
struct Axiom {
  std::string id;
  std::vector<Space> slots;
  Expr residual;
  /// Depends on a repaired reading of a garbled display.
  bool ambiguous = false;
};

/// Named tensors and maps an axiom program may refer to.
struct Context {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::map<std::string, Rank3Tensor> bilinears;
  std::map<std::string, Matrix> maps;
};

struct SuiteInstance {
  std::string id;
  Context ctx;
  std::vector<Axiom> axioms;
  std::map<std::string, std::string> notes;
};

struct RunOptions {
  /// Stop at the first violation in canonical order.
  bool first_failure = false;
  /// Skip axioms flagged ambiguous.
  bool skip_ambiguous = false;
  /// Largest ambient dimension accepted.
  std::size_t max_dim = 16;
};

/// Postfix form of an Expr bound to a context.
class Program {
 public:
  /// Binds names and checks every dimension against the slot spaces.
  /// Throws IncompatibleSuite for unknown names, DimensionMismatch for shapes.
  Program(const Expr& expr, const Context& ctx, std::span<const Space> slots);
  [[nodiscard]] Vector eval(std::span<const Vector> vars) const;

 private:
  struct Instr {
    Expr::Op op;
    std::size_t index = 0;
    const Rank3Tensor* tensor = nullptr;
    const Matrix* matrix = nullptr;
  };
  std::vector<Instr> code_;
};

/// Evaluates one axiom on explicit vectors.
Vector evaluate(const SuiteInstance& suite, const Axiom& axiom, std::span<const Vector> vars);

/// Exhaustive basis-tuple check, parallel over tuples. Violations come back
/// axiom-major, tuples in lexicographic order, whatever the schedule.
Report run(const SuiteInstance& suite, const RunOptions& options = {});
/// Single-threaded reference implementation of run().
Report run_serial(const SuiteInstance& suite, const RunOptions& options = {});

struct CrosscheckResult {
  bool basis_pass = true;
  bool random_pass = true;
  std::size_t trials = 0;
  [[nodiscard]] bool agree() const { return trials == 0 || basis_pass == random_pass; }
};

/// Evaluates every axiom on seeded pseudo-random rational vectors and
/// compares the verdict with the basis check.
CrosscheckResult crosscheck(const SuiteInstance& suite, std::size_t trials, std::uint64_t seed,
                            const RunOptions& options = {});

/// Random vector with entries p/q, |p| <= 9, 1 <= q <= 5. Platform independent.
Vector random_vector(std::size_t dim, std::mt19937_64& rng);

// ------------------------------------------------------------ associators

/// alpha(x)(yz) - (xy)beta(z)
Vector bihom_associator(const AlternativeAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

struct PreAltAssociators {
  Vector right;
  Vector middle;
  Vector left;
};
PreAltAssociators pre_alt_associators(const PreAlternativeAlgebra& p, const Vector& x, const Vector& y,
                                      const Vector& z);

/// The nine braces keyed r, l, ne, sw, n, w, s, e, m.
std::map<std::string, Vector> quadri_associators(const QuadriAlgebra& q, const Vector& x, const Vector& y,
                                                 const Vector& z);

// ------------------------------------------------------------ suites

/// Suites applicable to a bundle on its own.
const std::vector<std::string>& algebra_suite_ids();

SuiteInstance alternative_suite(const AlternativeAlgebra& a);
SuiteInstance associative_suite(const AlternativeAlgebra& a);
SuiteInstance pre_alternative_suite(const PreAlternativeAlgebra& p);
SuiteInstance quadri_suite(const QuadriAlgebra& q);
SuiteInstance alt_bimodule_suite(const AlternativeAlgebra& a, const AltBimodule& m);
SuiteInstance pre_alt_bimodule_suite(const PreAlternativeAlgebra& p, const PreAltBimodule& m);
SuiteInstance rota_baxter_suite(const AlternativeAlgebra& a, const Matrix& r);
SuiteInstance rota_baxter_suite(const PreAlternativeAlgebra& p, const Matrix& r);
SuiteInstance o_operator_suite(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& t);
SuiteInstance o_operator_suite(const PreAlternativeAlgebra& p, const PreAltBimodule& m, const Matrix& t);
SuiteInstance cocycle_suite(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& d);
SuiteInstance dual_conditions_suite(const AlternativeAlgebra& a, const AltBimodule& m);
/// f : X → Y for bundles of the same algebra kind.
SuiteInstance morphism_suite(const Matrix& f, const Bundle& x, const Bundle& y);

/// Builds the suite named `suite_id` for a bundle. Throws IncompatibleSuite.
SuiteInstance make_suite(const Bundle& bundle, std::string_view suite_id);
/// Bimodule-relative suites: alt_bimodule, pre_alt_bimodule, dual_conditions.
SuiteInstance make_suite(const Bundle& algebra, const Bundle& module, std::string_view suite_id);

Report check_suite(const Bundle& bundle, std::string_view suite_id, const RunOptions& options = {});
Report check_suite(const Bundle& algebra, const Bundle& module, std::string_view suite_id,
                   const RunOptions& options = {});
Report check_rota_baxter(const Bundle& algebra, const LinearOperator& r, const RunOptions& options = {});
Report check_o_operator(const Bundle& algebra, const Bundle& module, const LinearOperator& t,
                        const RunOptions& options = {});
Report check_one_cocycle(const AlternativeAlgebra& a, const AltBimodule& m, const LinearOperator& d,
                         const RunOptions& options = {});
Report check_dual_conditions(const AlternativeAlgebra& a, const AltBimodule& m, const RunOptions& options = {});
Report check_morphism(const LinearOperator& f, const Bundle& x, const Bundle& y, const RunOptions& options = {});

/// Basis verdict against random-vector verdict for a single-bundle suite.
bool random_vector_crosscheck(const Bundle& bundle, std::string_view suite_id, std::size_t trials,
                              std::uint64_t seed);

}  // namespace bihom
