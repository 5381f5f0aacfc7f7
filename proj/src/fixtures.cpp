#include <functional>
#include <map>

#include "bihom/errors.hpp"
#include "bihom/model.hpp"

namespace bihom {

namespace {

using Coeffs = std::vector<std::int64_t>;

Coeffs conjugate(Coeffs a) {
  for (std::size_t i = 1; i < a.size(); ++i) a[i] = -a[i];
  return a;
}

Coeffs add(const Coeffs& a, const Coeffs& b, std::int64_t sign = 1) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
  return out;
}

/// Cayley-Dickson doubling: (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
Coeffs cd_multiply(const Coeffs& x, const Coeffs& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const Coeffs a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Coeffs c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Coeffs lo = add(cd_multiply(a, c), cd_multiply(conjugate(d), b), -1);
  const Coeffs hi = add(cd_multiply(d, a), cd_multiply(b, conjugate(c)));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

AlternativeAlgebra octonions() {
  constexpr std::size_t n = 8;
  Rank3Tensor mu = Rank3Tensor::product(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Coeffs x(n, 0), y(n, 0);
      x[i] = 1;
      y[j] = 1;
      const Coeffs z = cd_multiply(x, y);
      for (std::size_t k = 0; k < n; ++k) mu(i, j, k) = z[k];
    }
  }
  return {mu, Matrix::identity(n), Matrix::identity(n)};
}

AlternativeAlgebra nilpotent_two() {
  AlternativeAlgebra a = zero_alternative(2);
  a.mu(0, 0, 1) = 1;
  return a;
}

AlternativeAlgebra upper_triangular() {
  // Basis E11, E12, E22.
  AlternativeAlgebra a = zero_alternative(3);
  a.mu(0, 0, 0) = 1;
  a.mu(0, 1, 1) = 1;
  a.mu(1, 2, 1) = 1;
  a.mu(2, 2, 2) = 1;
  const std::vector<Rational> da{1, Rational(1, 2), 1};
  const std::vector<Rational> db{1, Rational(1, 3), 1};
  a.alpha = Matrix::diagonal(da);
  a.beta = Matrix::diagonal(db);
  return a;
}

const std::map<std::string, std::function<Bundle()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<Bundle()>, std::less<>> table = {
      {"Z1", [] { return Bundle(zero_alternative(1)); }},
      {"Z2", [] { return Bundle(zero_alternative(2)); }},
      {"N2", [] { return Bundle(nilpotent_two()); }},
      {"UT3", [] { return Bundle(upper_triangular()); }},
      {"O8", [] { return Bundle(octonions()); }},
      {"RB_N2", [] { return Bundle(LinearOperator{Matrix{{0, 0}, {1, 0}}, OperatorRole::rota_baxter}); }},
      {"ADJ_N2", [] { return Bundle(regular_bimodule(nilpotent_two())); }},
      {"TRIV1", [] { return Bundle(trivial_bimodule(Matrix::identity(1), Matrix::identity(1), 1)); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"Z1", "Z2", "N2", "UT3", "O8", "RB_N2", "ADJ_N2", "TRIV1"};
  return names;
}

Bundle fixture(std::string_view name) {
  const auto& table = registry();
  const auto it = table.find(name);
  if (it == table.end()) throw UnknownFixture("unknown fixture '" + std::string(name) + "'");
  return it->second();
}

}  // namespace bihom
