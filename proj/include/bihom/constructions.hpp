#pragma once

#include <string>
#include <vector>

#include "bihom/linalg.hpp"
#include "bihom/model.hpp"

namespace bihom {

struct BuildOptions {
  /// Skip theorem hypotheses and emit the bundle anyway. Shape and
  /// invertibility requirements are still enforced.
  bool force = false;
};

struct ConstructionResult {
  Bundle bundle;
  Provenance provenance;
};

/// Provenance record naming the construction and the digests of its inputs.
Provenance make_provenance(std::string construction, const std::vector<Bundle>& inputs,
                           std::vector<std::string> parameters = {});

// ------------------------------------------------------------ twists

/// x * y = mu(at(x), bt(y)) with structure maps alpha·at, beta·bt. Requires at,
/// bt multiplicative and commuting with each other and with alpha, beta.
AlternativeAlgebra yau_twist_alternative(const AlternativeAlgebra& a, const Matrix& at, const Matrix& bt,
                                         const BuildOptions& options = {});
PreAlternativeAlgebra yau_twist_pre_alternative(const PreAlternativeAlgebra& p, const Matrix& at, const Matrix& bt,
                                                const BuildOptions& options = {});
QuadriAlgebra yau_twist_quadri(const QuadriAlgebra& q, const Matrix& at, const Matrix& bt,
                               const BuildOptions& options = {});

/// Twist of a bimodule over an algebra with identity structure maps:
/// L'(x) = L(a(x)) s, R'(x) = R(b(x)) p, over (A, mu(a·, b·), a, b).
AltBimodule twist_alt_bimodule(const AlternativeAlgebra& classical, const AltBimodule& m, const Matrix& a,
                               const Matrix& b, const Matrix& p, const Matrix& s, const BuildOptions& options = {});

/// Transposed actions and maps on the dual space. Throws DualConditionError.
AltBimodule dual_bimodule(const AlternativeAlgebra& a, const AltBimodule& m, const BuildOptions& options = {});

// ------------------------------------------------------------ sums and views

/// A ⊕ V with (x1 + v1)(x2 + v2) = x1 x2 + L(x1) v2 + R(x2) v1.
AlternativeAlgebra semidirect_alternative(const AlternativeAlgebra& a, const AltBimodule& m);
/// A ⊕ V with both products extended by the matching actions; the ≻ part
/// uses R≻(y)u.
PreAlternativeAlgebra semidirect_pre_alternative(const PreAlternativeAlgebra& p, const PreAltBimodule& m);

/// x ∘ y = x ≺ y + x ≻ y with the same maps.
AlternativeAlgebra associated_alternative(const PreAlternativeAlgebra& p);

enum class QuadriView { horizontal, vertical, sum };
QuadriView quadri_view_from_string(std::string_view text);
/// horizontal = (≺, ≻); vertical = (∧, ∨) as (≺, ≻); sum = ∗.
Bundle project_quadri(const QuadriAlgebra& q, QuadriView view);

/// x ⋆ y = x ∘ y + (α⁻¹β y) ∘ (αβ⁻¹ x). Throws SingularMap.
ProductOnly jordan_product(const PreAlternativeAlgebra& p);
/// [x, y] = x ∘ y - (α⁻¹β y) ∘ (αβ⁻¹ x). Throws SingularMap.
ProductOnly malcev_bracket(const PreAlternativeAlgebra& p);

struct AdjointBimodules {
  /// (A, l≻, r≺, α, β) over the associated alternative algebra.
  AltBimodule alternative;
  /// (A, l≺, r≺, l≻, r≻, α, β) over the pre-alternative algebra itself.
  PreAltBimodule pre_alternative;
};
AdjointBimodules adjoint_bimodule(const PreAlternativeAlgebra& p);

/// (A, L↙, R↖, L↘, R↗, α, β) as a bimodule of the horizontal structure.
PreAltBimodule quadri_adjoint_bimodule(const QuadriAlgebra& q);

// ------------------------------------------------------------ operators

/// u ≺ v = R(T v) u, u ≻ v = L(T u) v on the module. Throws OOperatorError.
PreAlternativeAlgebra pre_alt_from_o_operator(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& t,
                                              const BuildOptions& options = {});

struct ImageStructure {
  /// Structure constants in the basis T(f_0), ..., T(f_{m-1}).
  PreAlternativeAlgebra structure;
  /// Coordinates of the image basis in A (equal to T).
  Matrix embedding;
};
/// Throws NonInjectiveOperator when T has a kernel, OOperatorError.
ImageStructure image_pre_alt(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& t,
                             const BuildOptions& options = {});

/// x ≺ y = x R(y), x ≻ y = R(x) y. Throws RotaBaxterError.
PreAlternativeAlgebra split_by_rb_alt(const AlternativeAlgebra& a, const Matrix& r, const BuildOptions& options = {});

/// x ≺ y = T(R(y) T⁻¹x), x ≻ y = T(L(x) T⁻¹y). Throws SingularMap, OOperatorError.
PreAlternativeAlgebra compatible_pre_alt_from_invertible_o(const AlternativeAlgebra& a, const AltBimodule& m,
                                                           const Matrix& t, const BuildOptions& options = {});

/// T = D⁻¹. Throws SingularMap, CocycleError.
LinearOperator o_operator_from_cocycle(const AlternativeAlgebra& a, const AltBimodule& m, const Matrix& d,
                                       const BuildOptions& options = {});

/// u↘v = L≻(Tu)v, u↗v = R≻(Tv)u, u↙v = L≺(Tu)v, u↖v = R≺(Tv)u. Throws OOperatorError.
QuadriAlgebra quadri_from_o_operator(const PreAlternativeAlgebra& p, const PreAltBimodule& m, const Matrix& t,
                                     const BuildOptions& options = {});

/// x↘y = R(x)≻y, x↗y = x≻R(y), x↙y = R(x)≺y, x↖y = x≺R(y). Throws RotaBaxterError.
QuadriAlgebra quadri_from_rb_pre_alt(const PreAlternativeAlgebra& p, const Matrix& r,
                                     const BuildOptions& options = {});

/// x↘y = P(R(x))y, x↗y = R(x)P(y), x↙y = P(x)R(y), x↖y = xR(P(y)).
/// Throws RotaBaxterError, NonCommutingPair.
QuadriAlgebra quadri_from_commuting_rbs(const AlternativeAlgebra& a, const Matrix& r, const Matrix& p,
                                        const BuildOptions& options = {});

}  // namespace bihom
