#include <gtest/gtest.h>

#include <random>

#include "kdef/linalg.hpp"

using namespace kdef;

namespace {

Scalar lam() {
  static ContextPtr ctx = make_context({"l"});
  return Scalar::generator(ctx, "l");
}

void expect_valid(const Matrix& a, const Vector& b, const LinearSolution& s) {
  if (s.consistent) {
    EXPECT_EQ(a * s.particular, b);
    for (const auto& n : s.nullspace) EXPECT_TRUE(is_zero_vector(a * n));
  } else {
    EXPECT_TRUE(is_zero_vector(a.transposed() * s.certificate));
    EXPECT_FALSE(dot(s.certificate, b).is_zero());
  }
}

}  // namespace

TEST(Linalg, IdentitySystem) {
  Matrix id = Matrix::identity(3);
  Vector b{Scalar(1), lam(), Scalar(rat(2, 3))};
  auto s = solve_linear(id, b);
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.particular, b);
  EXPECT_TRUE(s.nullspace.empty());
}

TEST(Linalg, RankOneOverFunctionField) {
  Scalar l = lam();
  Matrix a = Matrix::from_rows({{l, Scalar(1)}, {l * l, l}});
  Vector b{Scalar(1), l};
  auto s = solve_linear(a, b);
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.nullspace.size(), 1u);
  EXPECT_EQ(s.rank, 1u);
  expect_valid(a, b, s);
}

TEST(Linalg, InconsistentCertificate) {
  Matrix a = Matrix::from_rows({{Scalar(1)}, {Scalar(0)}});
  Vector b{Scalar(0), Scalar(1)};
  auto s = solve_linear(a, b);
  ASSERT_FALSE(s.consistent);
  EXPECT_EQ(s.certificate, (Vector{Scalar(0), Scalar(1)}));
}

TEST(Linalg, TallSystemsRandomized) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  Scalar l = lam();
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t cols = 4, rank_target = 1 + trial % 4, rows = 12;
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < rank_target; ++k) {
      Vector v(cols);
      for (auto& x : v) x = Scalar(static_cast<long>(c(rng))) + Scalar(static_cast<long>(c(rng))) * l;
      basis.push_back(v);
    }
    Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < rank_target; ++k) {
        Scalar f = Scalar(static_cast<long>(c(rng))) / (l + Scalar(static_cast<long>(c(rng) + 10)));
        for (std::size_t j = 0; j < cols; ++j) a(i, j) += f * basis[k][j];
      }
    Vector x(cols);
    for (auto& v : x) v = Scalar(static_cast<long>(c(rng))) * l;
    Vector b = a * x;
    if (trial % 3 == 0) b[trial % rows] += 1;
    auto s = solve_linear(a, b);
    expect_valid(a, b, s);
    if (trial % 3 != 0) EXPECT_TRUE(s.consistent);
  }
}

TEST(Linalg, AlgebraicContext) {
  auto ctx = make_algebraic_context("w", "w^2 - 19");
  Scalar w = Scalar::generator(ctx, "w");
  Matrix a = Matrix::from_rows({{5 + w, Scalar(1)}, {Scalar(6), 5 - w}});
  EXPECT_EQ(rank(a), 1u);
}
