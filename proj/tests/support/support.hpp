#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bihom/linalg.hpp"
#include "bihom/model.hpp"

namespace bihom::testing {

/// Octonion units by an independent recursive doubling: returns (sign, index)
/// with e_u e_v = sign e_index.
std::pair<int, std::size_t> octonion_unit_product(std::size_t u, std::size_t v);

/// Nilpotent graded algebra spanned by e_u t^d inside O ⊗ tQ[t]/(t^4):
/// units {1,2,4} at degree 1, {0,3,5,6} at degree 2, {1,2,4,7} at degree 3.
/// Alternative, not associative, dimension 11, identity structure maps.
AlternativeAlgebra go11();
/// Degree of each basis vector of go11().
std::vector<int> go11_degrees();
/// Diagonal map scaling degree d by base^d; an automorphism of go11().
Matrix go11_grading(int base);
/// Inverse of the degree derivation; a weight-0 Rota-Baxter operator that
/// commutes with every grading map.
Matrix go11_rota_baxter();
/// go11 twisted by (2^deg, 3^deg): a BiHom-alternative algebra with alpha != beta.
AlternativeAlgebra go11_bihom();

/// Weight-0 Rota-Baxter operators with entries in {-2, -3/2, ..., 2} on a
/// two-dimensional algebra with integer structure constants and identity
/// maps, by exhaustive search in integer arithmetic.
struct RotaBaxterCensus {
  std::vector<Matrix> witnesses;
  /// Index pairs (a, b), a <= b, of commuting witnesses.
  std::vector<std::pair<std::size_t, std::size_t>> commuting;
  /// Number of ordered pairs including (a, b) and (b, a).
  std::size_t ordered_commuting = 0;
};
RotaBaxterCensus rota_baxter_census(const std::array<std::array<std::array<int, 2>, 2>, 2>& table);
const RotaBaxterCensus& census_n2();
const RotaBaxterCensus& census_z2();

/// Reference suite checks written directly against the definitions, with
/// no use of the identity engine.
bool reference_alternative(const AlternativeAlgebra& a);
bool reference_associative(const AlternativeAlgebra& a);

/// Vector with entries p/q, |p| <= 20, 1 <= q <= 6.
Vector random_rational_vector(std::size_t dim, std::mt19937_64& rng);

}  // namespace bihom::testing
