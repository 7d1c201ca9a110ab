#include "cyclomat/matrices.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cyclomat;

namespace {

GaussContextPtr ctx_for(int q) {
  int p, n;
  prime_power(q, p, n);
  return GaussContext::make(p, n);
}

std::vector<int> divisors(int x) {
  std::vector<int> d;
  for (int k = 1; k <= x; ++k) {
    if (x % k == 0) d.push_back(k);
  }
  return d;
}

struct Frozen {
  int q, k;
  long det_a;
  const char* det_b;
};

// Independent numeric evaluation (mpmath, 60 digits) rounded to exact values.
constexpr Frozen kFrozen[] = {
    {2, 1, -1, "-1"},
    {3, 1, 4, "4/3"},
    {3, 2, -1, "-1"},
    {4, 1, -27, "0"},
    {4, 3, -1, "-1"},
    {5, 1, -256, "-256/125"},
    {5, 2, -4, "4/5"},
    {5, 4, -1, "-1"},
    {7, 1, 46656, "46656/16807"},
    {7, 2, -27, "27/49"},
    {7, 3, 8, "8/7"},
    {7, 6, -1, "-1"},
    {8, 1, -823543, "0"},
    {8, 7, -1, "-1"},
    {9, 1, -16777216, "0"},
    {9, 2, 512, "0"},
    {9, 4, -8, "8/9"},
    {9, 8, -1, "-1"},
    {11, 1, 10000000000L, "10000000000/2357947691"},
    {11, 2, -3125, "-3125/14641"},
    {11, 5, 12, "12/11"},
    {11, 10, -1, "-1"},
    {13, 1, -8916100448256L, "-8916100448256/1792160394037"},
    {13, 2, -46656, "46656/371293"},
    {13, 3, -768, "-2304/2197"},
    {13, 4, 27, "135/169"},
    {13, 6, -12, "12/13"},
    {13, 12, -1, "-1"},
};

}  // namespace

TEST_CASE("matrix shapes") {
  const auto g5 = ctx_for(5);
  const auto a = build_A(g5, 2);
  REQUIRE(a.rows() == 2);
  const auto one = CycloElem::one(g5->cyclo());
  CHECK(a(0, 0) == -one);
  CHECK(a(0, 1) == g5->gauss_sum(2));
  CHECK(a(1, 0) == g5->gauss_sum(2));
  CHECK(a(1, 1) == -one);
  CHECK(matrix_dim(*g5, 4) == 1);
  CHECK_THROWS_AS(matrix_dim(*g5, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_B(g5, 0), std::invalid_argument);
  const auto a1 = build_A(g5, 1), b1 = build_B(g5, 1);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(a1(i, j) * b1(i, j) == one);
  }
  CHECK(b1(0, 0) == -one);
}

TEST_CASE("frozen determinants from the numeric oracle") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.q);
    CAPTURE(f.k);
    const auto ctx = ctx_for(f.q);
    const CycloElem a = det_A_via_eigen(ctx, f.k);
    REQUIRE(a.is_rational());
    CHECK(a.to_rational() == Rational(f.det_a));
    CHECK(to_string(det_B_via_eigen(ctx, f.k)) == f.det_b);
    CHECK(det_exact(build_A(ctx, f.k)) == a);
    CHECK(det_multimodular(build_B(ctx, f.k)) == det_B_via_eigen(ctx, f.k));
  }
}

TEST_CASE("eigenvectors of C") {
  for (int q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27}) {
    const auto ctx = ctx_for(q);
    const auto& field = ctx->field();
    for (int k : divisors(q - 1)) {
      CAPTURE(q);
      CAPTURE(k);
      const CycloMatrix c = build_C(ctx, k);
      const EigenData eig = eigenvalues(ctx, k);
      REQUIRE(static_cast<int>(eig.values.size()) == eig.m);
      for (int j = 0; j < eig.m; ++j) {
        const int b = eig.coset_reps[j];
        CHECK(b == field.exp(j));
        std::vector<CycloElem> v;
        for (int i = 0; i < eig.m; ++i) v.push_back(char_eval(Character(ctx, static_cast<std::int64_t>(k) * i), b));
        for (int i = 0; i < eig.m; ++i) {
          CycloElem row = CycloElem::zero(ctx->cyclo());
          for (int l = 0; l < eig.m; ++l) row += c(i, l) * v[l];
          CHECK(row == eig.values[j] * v[i]);
        }
        // lambda_b depends only on the coset b U_k
        const int u = field.exp(static_cast<std::int64_t>(eig.m) * (j % k + 1));
        CHECK(eigenvalue_at(ctx, k, field.mul(b, u)) == eig.values[j]);
      }
    }
  }
}

TEST_CASE("sign conjugation turns C into D") {
  for (int q : {5, 7, 9, 13, 16, 25}) {
    const auto ctx = ctx_for(q);
    for (int k : divisors(q - 1)) {
      const CycloMatrix c = build_C(ctx, k), d = build_D(ctx, k);
      const Eigen::Index m = c.rows();
      for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
          // P^-1 C P with P = diag((-1)^(k i))
          const CycloElem e = sign_pow(static_cast<std::int64_t>(k) * (i + j)) < 0 ? -c(i, j) : c(i, j);
          CHECK(e == d(i, j));
        }
      }
    }
  }
}

TEST_CASE("Bareiss agrees with cofactor expansion on every small matrix") {
  int checked = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const auto ctx = ctx_for(q);
    for (int k : divisors(q - 1)) {
      if ((q - 1) / k > 4) continue;
      for (const auto& m : {build_A(ctx, k), build_B(ctx, k), build_C(ctx, k), build_D(ctx, k)}) {
        CHECK(det_exact(m) == test::det_cofactor(m));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    IntMatrix m(n, n);
    DenseMatrix<Rational> r(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(i, j) = entry(rng);
        r(i, j) = make_rational(entry(rng), 1 + (entry(rng) + 9) % 4);
      }
    }
    if (trial % 7 == 0) m.row(0) = m.row(n - 1);
    CHECK(det_bareiss(m) == test::det_cofactor(m));
    CHECK(det_bareiss(r) == test::det_cofactor(r));
  }
}

TEST_CASE("fraction-free solve") {
  IntMatrix m(3, 3);
  m << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  const auto x = solve_fraction_free(m, {BigInt(1), BigInt(2), BigInt(3)});
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += Rational(m(i, j)) * x[j];
    CHECK(s == i + 1);
  }
  IntMatrix z = IntMatrix::Zero(2, 2);
  z(0, 0) = 1;
  z(1, 0) = 2;
  CHECK_THROWS_AS(solve_fraction_free(z, {BigInt(1), BigInt(1)}), std::domain_error);
}

TEST_CASE("modular determinant") {
  DenseMatrix<std::uint64_t> m(2, 2);
  m << 3, 5, 2, 7;
  CHECK(det_mod_prime(m, 11) == 0);  // 21 - 10 = 11
  m << 1, 2, 3, 4;
  CHECK(det_mod_prime(m, 13) == 11);
}

TEST_CASE("multimodular route") {
  const auto g5 = ctx_for(5);
  CycloMatrix root5(1, 1);
  root5(0, 0) = g5->gauss_sum(2);
  CHECK_THROWS_AS(det_multimodular(root5), std::domain_error);
  for (int q : {16, 17, 19}) {
    const auto ctx = ctx_for(q);
    CHECK(det_multimodular(build_A(ctx, 1)) == det_A_via_eigen(ctx, 1).to_rational());
    CHECK(det_multimodular(build_A(ctx, 1, 7)) == det_A_via_eigen(ctx, 1).to_rational());
  }
}

TEST_CASE("Carlitz determinants") {
  const auto g5 = ctx_for(5);
  CHECK(det_exact(build_carlitz(g5, 2)) == CycloElem::constant(g5->cyclo(), 5));
  CHECK(carlitz_det_formula(g5, 2) == CycloElem::constant(g5->cyclo(), 5));
  CHECK(det_exact(build_carlitz(g5, 1)) == carlitz_det_formula(g5, 1));
  CHECK_THROWS_AS(carlitz_det_formula(g5, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_carlitz(ctx_for(9), 1), std::invalid_argument);
  for (int p : {3, 7, 11}) {
    const auto ctx = ctx_for(p);
    for (int t = 1; t < p - 1; ++t) CHECK(det_exact(build_carlitz(ctx, t)) == carlitz_det_formula(ctx, t));
  }
}

TEST_CASE("Legendre matrices") {
  CHECK(build_legendre_V(3)(0, 0) == 1);
  CHECK(build_sun_S(3)(0, 0) == -1);
  IntMatrix v5(2, 2);
  v5 << 1, -1, -1, -1;
  CHECK(build_legendre_V(5) == v5);
  CHECK(det_integer(v5) == -2);
  IntMatrix s5(2, 2);
  s5 << -1, 0, 0, -1;
  CHECK(build_sun_S(5) == s5);
  CHECK(det_integer(build_sun_S(5)) == 1);
  for (int p : {7, 11, 19, 23}) CHECK(det_integer(build_legendre_V(p)) == 0);
  CHECK_THROWS_AS(build_legendre_V(2), std::invalid_argument);
  CHECK_THROWS_AS(build_sun_S(9), std::invalid_argument);
  CHECK(legendre(3, 11) == 1);
}
