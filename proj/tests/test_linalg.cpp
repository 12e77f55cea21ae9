#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "weilgraph/gf2.hpp"
#include "weilgraph/smith.hpp"

#include <random>

using namespace weilgraph;

namespace {

Gf2Matrix bits(std::initializer_list<std::initializer_list<int>> rows) {
  Gf2Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int x : r) m(i, j++) = static_cast<std::uint8_t>(x);
    ++i;
  }
  return m;
}

Gf2Vector vec(std::initializer_list<int> xs) {
  Gf2Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = static_cast<std::uint8_t>(x);
  return v;
}

IntMatrix ints(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

Gf2Matrix random_bits(std::mt19937& rng, Eigen::Index r, Eigen::Index c, double density) {
  std::bernoulli_distribution coin(density);
  Gf2Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = coin(rng);
  return m;
}

}  // namespace

TEST_CASE("gf2_rank examples") {
  CHECK(gf2_rank(Gf2Matrix::Identity(3, 3)) == 3);
  CHECK(gf2_rank(Gf2Matrix::Zero(3, 4)) == 0);
  CHECK(gf2_rank(bits({{1, 1}, {1, 1}})) == 1);
  CHECK(gf2_rank(Gf2Matrix(0, 5)) == 0);
}

TEST_CASE("gf2_kernel_basis examples") {
  CHECK(gf2_kernel_basis(Gf2Matrix::Identity(3, 3)).empty());

  const auto zero = gf2_kernel_basis(Gf2Matrix::Zero(2, 3));
  REQUIRE(zero.size() == 3);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(zero[static_cast<std::size_t>(i)] == Gf2Vector::Unit(3, i));

  // Oracle: enumerate all 8 vectors of F_2^3 and keep those in the kernel.
  const Gf2Matrix m = bits({{1, 1, 0}});
  std::vector<Gf2Vector> kernel;
  for (int x = 0; x < 8; ++x) {
    const Gf2Vector v = vec({x & 1, x >> 1 & 1, x >> 2 & 1});
    if (gf2_apply(m, v).isZero()) kernel.push_back(v);
  }
  CHECK(kernel.size() == 4);  // span of (1,1,0) and (0,0,1)
  const auto basis = gf2_kernel_basis(m);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == vec({1, 1, 0}));
  CHECK(basis[1] == vec({0, 0, 1}));
}

TEST_CASE("gf2_solve examples") {
  const Gf2Vector b = vec({1, 0, 1});
  CHECK(*gf2_solve(Gf2Matrix::Identity(3, 3), b) == b);
  CHECK_FALSE(gf2_solve(Gf2Matrix::Zero(3, 3), b).has_value());
  // Both (1,0) and (0,1) solve [[1,1]] x = 1; free variable x1 = 0 picks (1,0).
  CHECK(*gf2_solve(bits({{1, 1}}), vec({1})) == vec({1, 0}));
  CHECK_THROWS_AS(gf2_solve(bits({{1, 1}}), vec({1, 0})), std::invalid_argument);
}

TEST_CASE("gf2 rank-nullity and solve on random matrices up to 64x64") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> dim(0, 64);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index r = dim(rng), c = dim(rng);
    const Gf2Matrix m = random_bits(rng, r, c, trial % 2 ? 0.5 : 0.1);
    const auto kernel = gf2_kernel_basis(m);
    CHECK(gf2_rank(m) + kernel.size() == static_cast<std::size_t>(c));
    for (const auto& k : kernel) CHECK(gf2_apply(m, k).isZero());

    const Gf2Vector b = random_bits(rng, r, 1, 0.5);
    if (auto x = gf2_solve(m, b)) CHECK(gf2_apply(m, *x) == b);
    // A right-hand side in the image is always solvable.
    const Gf2Vector image = gf2_apply(m, random_bits(rng, c, 1, 0.5));
    const auto y = gf2_solve(m, image);
    REQUIRE(y.has_value());
    CHECK(gf2_apply(m, *y) == image);
  }
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntMatrix::Identity(2, 2)).diagonal == std::vector<BigInt>{1, 1});
  CHECK(smith_normal_form(ints({{2, 0}, {0, 4}})).diagonal == std::vector<BigInt>{2, 4});
  // gcd of entries is 1 and |det| = 4.
  const IntMatrix m = ints({{2, 1}, {0, 2}});
  CHECK(oracle::invariant_factors_by_minors(m) == std::vector<BigInt>{1, 4});
  CHECK(smith_normal_form(m).diagonal == std::vector<BigInt>{1, 4});
  CHECK(smith_normal_form(ints({{4, 0}, {0, 6}})).diagonal == std::vector<BigInt>{2, 12});
  CHECK(smith_normal_form(IntMatrix(0, 0)).diagonal.empty());
}

TEST_CASE("smith_normal_form witnesses and determinantal divisors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const Eigen::Index r = dim(rng), c = dim(rng);
    IntMatrix m = oracle::random_int_matrix(rng, r, c, trial % 3 == 0 ? -2 : -9, trial % 3 == 0 ? 2 : 9);
    if (trial % 5 == 0 && r > 1) m.row(r - 1) = m.row(0) * BigInt(3);  // force rank deficiency
    const SmithForm s = smith_normal_form(m);

    CHECK(int_product(int_product(s.left, m), s.right) == s.diagonal_matrix(r, c));
    CHECK(abs(determinant(s.left)) == BigInt(1));
    CHECK(abs(determinant(s.right)) == BigInt(1));
    CHECK(int_product(s.left, s.left_inverse) == IntMatrix::Identity(r, r));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i].sign() >= 0);
      if (!s.diagonal[i].is_zero()) CHECK((s.diagonal[i + 1] % s.diagonal[i]).is_zero());
      else CHECK(s.diagonal[i + 1].is_zero());
    }
    CHECK(s.diagonal == oracle::invariant_factors_by_minors(m));
  }
}

TEST_CASE("determinant agrees with Leibniz expansion") {
  std::mt19937 rng(11);
  for (Eigen::Index n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix m = oracle::random_int_matrix(rng, n, n, -5, 5);
      CHECK(determinant(m) == oracle::leibniz_det(m));
    }
  }
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("BigInt handles values beyond 64 bits") {
  const BigInt big = pow(BigInt(2), 100);
  CHECK(big.str() == "1267650600228229401496703205376");
  CHECK_FALSE(big.fits_int64());
  CHECK_THROWS_AS(big.to_int64(), std::overflow_error);
  CHECK(BigInt::parse("-17") == BigInt(-17));
  CHECK_THROWS_AS(BigInt::parse("x1"), std::invalid_argument);
  CHECK(gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::nearest(2.6) == BigInt(3));
}
