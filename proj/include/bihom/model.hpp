#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bihom/linalg.hpp"

namespace bihom {

/// (A, mu, alpha, beta). The BiHom-alternative identities themselves are
/// checked by the identity engine; the bundle only carries the data.
struct AlternativeAlgebra {
  Rank3Tensor mu;
  Matrix alpha;
  Matrix beta;

  [[nodiscard]] std::size_t dim() const { return alpha.rows(); }
  friend bool operator==(const AlternativeAlgebra&, const AlternativeAlgebra&) = default;
};

/// (A, ≺, ≻, alpha, beta); x ∘ y = x ≺ y + x ≻ y is derived on demand.
struct PreAlternativeAlgebra {
  Rank3Tensor prec;
  Rank3Tensor succ;
  Matrix alpha;
  Matrix beta;

  [[nodiscard]] std::size_t dim() const { return alpha.rows(); }
  [[nodiscard]] Rank3Tensor circ() const { return prec + succ; }
  friend bool operator==(const PreAlternativeAlgebra&, const PreAlternativeAlgebra&) = default;
};

/// (A, ↖, ↙, ↗, ↘, alpha, beta) stored as nw, sw, ne, se.
struct QuadriAlgebra {
  Rank3Tensor nw;
  Rank3Tensor sw;
  Rank3Tensor ne;
  Rank3Tensor se;
  Matrix alpha;
  Matrix beta;

  [[nodiscard]] std::size_t dim() const { return alpha.rows(); }
  /// ≻ = ↗ + ↘
  [[nodiscard]] Rank3Tensor succ() const { return ne + se; }
  /// ≺ = ↖ + ↙
  [[nodiscard]] Rank3Tensor prec() const { return nw + sw; }
  /// ∨ = ↘ + ↙
  [[nodiscard]] Rank3Tensor vee() const { return se + sw; }
  /// ∧ = ↗ + ↖
  [[nodiscard]] Rank3Tensor wedge() const { return ne + nw; }
  /// ∗ = sum of all four
  [[nodiscard]] Rank3Tensor star() const { return nw + sw + ne + se; }
  friend bool operator==(const QuadriAlgebra&, const QuadriAlgebra&) = default;
};

/// Bimodule (V, L, R, phi, psi) of a BiHom-alternative algebra. The algebra's
/// structure maps travel with the module so the compatibility relations
/// phi L(x) = L(alpha x) phi etc. can be validated without the product.
struct AltBimodule {
  Rank3Tensor left;   ///< L, shape algebra × module × module
  Rank3Tensor right;  ///< R
  Matrix alpha;
  Matrix beta;
  Matrix phi;
  Matrix psi;

  [[nodiscard]] std::size_t algebra_dim() const { return alpha.rows(); }
  [[nodiscard]] std::size_t module_dim() const { return phi.rows(); }
  friend bool operator==(const AltBimodule&, const AltBimodule&) = default;
};

/// Bimodule (V, L≺, R≺, L≻, R≻, phi, psi) of a BiHom-pre-alternative algebra.
struct PreAltBimodule {
  Rank3Tensor left_prec;
  Rank3Tensor right_prec;
  Rank3Tensor left_succ;
  Rank3Tensor right_succ;
  Matrix alpha;
  Matrix beta;
  Matrix phi;
  Matrix psi;

  [[nodiscard]] std::size_t algebra_dim() const { return alpha.rows(); }
  [[nodiscard]] std::size_t module_dim() const { return phi.rows(); }
  [[nodiscard]] Rank3Tensor left_circ() const { return left_prec + left_succ; }
  [[nodiscard]] Rank3Tensor right_circ() const { return right_prec + right_succ; }
  friend bool operator==(const PreAltBimodule&, const PreAltBimodule&) = default;
};

enum class OperatorRole { rota_baxter, o_operator, cocycle, morphism };

std::string_view to_string(OperatorRole role);
OperatorRole operator_role_from_string(std::string_view text);

/// A linear map with a declared role. Shape: target_dim × source_dim.
struct LinearOperator {
  Matrix map;
  OperatorRole role = OperatorRole::rota_baxter;

  [[nodiscard]] std::size_t source_dim() const { return map.cols(); }
  [[nodiscard]] std::size_t target_dim() const { return map.rows(); }
  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;
};

/// A single named product with structure maps and no axiom suite attached
/// (the Jordan product and Malcev bracket).
struct ProductOnly {
  std::string name;
  Rank3Tensor product;
  Matrix alpha;
  Matrix beta;

  [[nodiscard]] std::size_t dim() const { return alpha.rows(); }
  friend bool operator==(const ProductOnly&, const ProductOnly&) = default;
};

using Bundle = std::variant<AlternativeAlgebra, PreAlternativeAlgebra, QuadriAlgebra, AltBimodule,
                            PreAltBimodule, LinearOperator, ProductOnly>;

/// File-format name of the bundle kind ("alternative", "quadri", ...).
std::string_view kind_name(const Bundle& bundle);

/// Exact residual of one axiom on one basis tuple.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> tuple;  ///< 0-based basis indices, one per variable
  Vector residual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a suite run. Residuals are exact; nothing is thresholded.
struct Report {
  std::string suite_id;
  std::vector<Violation> violations;
  /// Free-form annotations (e.g. which reading of an ambiguous axiom was used).
  std::map<std::string, std::string> notes;
  /// Total number of (axiom, tuple) evaluations performed.
  std::size_t evaluations = 0;

  [[nodiscard]] bool pass() const { return violations.empty(); }
  friend bool operator==(const Report&, const Report&) = default;
};

/// Commutation of the structure maps and their multiplicativity over every
/// stored product, on all basis pairs; for bimodules the map-compatibility
/// relations on all basis (x, v).
Report validate_structure(const Bundle& bundle);

/// Record of how a derived bundle was produced.
struct Provenance {
  std::string construction;
  std::vector<std::string> inputs;      ///< digests of the input documents
  std::vector<std::string> parameters;  ///< free-form key=value strings

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Document {
  Bundle bundle;
  std::optional<Provenance> provenance;
};

/// Parses and validates a bundle document. Throws ParseError for malformed
/// text and StructureError (carrying the report) for invalid structure.
Document load_document(std::string_view text);
Bundle load_bundle(std::string_view text);

std::string save_bundle(const Bundle& bundle, const std::optional<Provenance>& provenance = std::nullopt);

/// Stable 64-bit FNV-1a digest of a serialized bundle, as hex.
std::string digest(const Bundle& bundle);

std::string save_report(const Report& report);
/// Tabular rendering for terminals.
std::string render_report(const Report& report);

/// Names accepted by fixture().
const std::vector<std::string>& fixture_names();
/// Built-in standing examples. Throws UnknownFixture.
Bundle fixture(std::string_view name);

/// Same algebra with alpha = beta = id.
AlternativeAlgebra with_identity_maps(const AlternativeAlgebra& a);
PreAlternativeAlgebra with_identity_maps(const PreAlternativeAlgebra& a);
QuadriAlgebra with_identity_maps(const QuadriAlgebra& a);

/// Zero-product structures of the given dimension with identity maps.
AlternativeAlgebra zero_alternative(std::size_t dim);
PreAlternativeAlgebra zero_pre_alternative(std::size_t dim);
QuadriAlgebra zero_quadri(std::size_t dim);

/// Zero actions over an algebra with the given structure maps, phi = psi = id.
AltBimodule trivial_bimodule(const Matrix& alpha, const Matrix& beta, std::size_t module_dim);

/// (A, ℓ, r, alpha, beta): left and right multiplications of mu.
AltBimodule regular_bimodule(const AlternativeAlgebra& a);

}  // namespace bihom
