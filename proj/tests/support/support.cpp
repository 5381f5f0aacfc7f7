#include "support.hpp"

#include <cmath>

#include "bihom/constructions.hpp"

namespace bihom::testing {

namespace {

using Oct = std::vector<int>;

Oct conj(Oct a) {
  for (std::size_t i = 1; i < a.size(); ++i) a[i] = -a[i];
  return a;
}

Oct add(Oct a, const Oct& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)), recursing on halves.
Oct cd(const Oct& x, const Oct& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const Oct a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Oct c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Oct lo = add(cd(a, c), cd(conj(d), b), -1);
  Oct hi = add(cd(d, a), cd(b, conj(c)));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

struct Unit {
  std::size_t u;
  int deg;
};

std::vector<Unit> go11_basis() {
  std::vector<Unit> basis;
  for (std::size_t u : {1, 2, 4}) basis.push_back({u, 1});
  for (std::size_t u : {0, 3, 5, 6}) basis.push_back({u, 2});
  for (std::size_t u : {1, 2, 4, 7}) basis.push_back({u, 3});
  return basis;
}

Vector associator(const AlternativeAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return tensor_apply(a.mu, a.alpha.apply(x), tensor_apply(a.mu, y, z)) -
         tensor_apply(a.mu, tensor_apply(a.mu, x, y), a.beta.apply(z));
}

}  // namespace

std::pair<int, std::size_t> octonion_unit_product(std::size_t u, std::size_t v) {
  Oct x(8, 0), y(8, 0);
  x[u] = 1;
  y[v] = 1;
  const Oct p = cd(x, y);
  for (std::size_t k = 0; k < 8; ++k) {
    if (p[k] != 0) return {p[k], k};
  }
  return {0, 0};
}

AlternativeAlgebra go11() {
  const auto basis = go11_basis();
  const std::size_t n = basis.size();
  AlternativeAlgebra a{Rank3Tensor::product(n), Matrix::identity(n), Matrix::identity(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int deg = basis[i].deg + basis[j].deg;
      if (deg > 3) continue;
      const auto [sign, w] = octonion_unit_product(basis[i].u, basis[j].u);
      for (std::size_t k = 0; k < n; ++k) {
        if (basis[k].u == w && basis[k].deg == deg) a.mu(i, j, k) = sign;
      }
    }
  }
  return a;
}

std::vector<int> go11_degrees() {
  std::vector<int> out;
  for (const Unit& b : go11_basis()) out.push_back(b.deg);
  return out;
}

Matrix go11_grading(int base) {
  const auto deg = go11_degrees();
  Matrix m(deg.size(), deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) m(i, i) = static_cast<std::int64_t>(std::pow(base, deg[i]));
  return m;
}

Matrix go11_rota_baxter() {
  const auto deg = go11_degrees();
  Matrix m(deg.size(), deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) m(i, i) = Rational(1, deg[i]);
  return m;
}

AlternativeAlgebra go11_bihom() { return yau_twist_alternative(go11(), go11_grading(2), go11_grading(3)); }

RotaBaxterCensus rota_baxter_census(const std::array<std::array<std::array<int, 2>, 2>, 2>& c) {
  using M = std::array<int, 4>;  // row-major 2x2, entries scaled by 2
  auto apply = [](const M& s, const std::array<int, 2>& v) {
    return std::array<int, 2>{s[0] * v[0] + s[1] * v[1], s[2] * v[0] + s[3] * v[1]};
  };
  auto mul = [&](const std::array<int, 2>& x, const std::array<int, 2>& y) {
    std::array<int, 2> out{0, 0};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) out[k] += x[i] * y[j] * c[i][j][k];
      }
    }
    return out;
  };
  auto col = [](const M& s, int j) { return std::array<int, 2>{s[j], s[2 + j]}; };
  const std::array<std::array<int, 2>, 2> e = {{{1, 0}, {0, 1}}};

  std::vector<M> found;
  for (int code = 0; code < 9 * 9 * 9 * 9; ++code) {
    M s;
    int rest = code;
    for (int& entry : s) {
      entry = rest % 9 - 4;
      rest /= 9;
    }
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      for (int j = 0; j < 2 && ok; ++j) {
        const auto lhs = mul(col(s, i), col(s, j));
        const auto a = mul(col(s, i), e[j]);
        const auto b = mul(e[i], col(s, j));
        const auto rhs = apply(s, {a[0] + b[0], a[1] + b[1]});
        ok = lhs == rhs;
      }
    }
    if (ok) found.push_back(s);
  }

  RotaBaxterCensus census;
  for (const M& s : found) {
    Matrix r(2, 2);
    for (int k = 0; k < 4; ++k) r(k / 2, k % 2) = Rational(s[k], 2);
    census.witnesses.push_back(std::move(r));
  }
  auto prod = [](const M& a, const M& b) {
    return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
             a[2] * b[1] + a[3] * b[3]};
  };
  for (std::size_t a = 0; a < found.size(); ++a) {
    for (std::size_t b = a; b < found.size(); ++b) {
      if (prod(found[a], found[b]) == prod(found[b], found[a])) {
        census.commuting.emplace_back(a, b);
        census.ordered_commuting += a == b ? 1 : 2;
      }
    }
  }
  return census;
}

const RotaBaxterCensus& census_n2() {
  static const RotaBaxterCensus c = rota_baxter_census({{{{{0, 1}, {0, 0}}}, {{{0, 0}, {0, 0}}}}});
  return c;
}

const RotaBaxterCensus& census_z2() {
  static const RotaBaxterCensus c = rota_baxter_census({});
  return c;
}

bool reference_alternative(const AlternativeAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = Vector::unit(n, i), y = Vector::unit(n, j), z = Vector::unit(n, k);
        const Vector left = associator(a, a.beta.apply(x), a.alpha.apply(y), z) +
                            associator(a, a.beta.apply(y), a.alpha.apply(x), z);
        const Vector right = associator(a, x, a.beta.apply(y), a.alpha.apply(z)) +
                             associator(a, x, a.beta.apply(z), a.alpha.apply(y));
        if (!left.is_zero() || !right.is_zero()) return false;
      }
    }
  }
  return true;
}

bool reference_associative(const AlternativeAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!associator(a, Vector::unit(n, i), Vector::unit(n, j), Vector::unit(n, k)).is_zero()) return false;
      }
    }
  }
  return true;
}

Vector random_rational_vector(std::size_t dim, std::mt19937_64& rng) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = Rational(static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 6) + 1);
  }
  return v;
}

}  // namespace bihom::testing
