#include "sosq/matrix.hpp"

#include "support/reference.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace sosq;
using sosq::testing::from_grid;
using sosq::testing::naive_kron;
using sosq::testing::naive_multiply;
using sosq::testing::naive_transpose;
using sosq::testing::random_matrix;
using sosq::testing::to_grid;

namespace {

constexpr int kIterations = 1000;

const IntMatrix kRotation{{0, -1}, {1, 0}};

} // namespace

TEST(IntMatrix, IdentitySmall) {
  EXPECT_EQ(IntMatrix::identity(1), (IntMatrix{{1}}));
  EXPECT_EQ(IntMatrix::identity(2), (IntMatrix{{1, 0}, {0, 1}}));
}

TEST(IntMatrix, IdentityIsLeftUnit) {
  std::mt19937_64 rng(7);
  for (std::size_t s = 1; s <= 4; ++s) {
    const IntMatrix m = random_matrix(rng, 3, s);
    EXPECT_EQ(multiply(IntMatrix::identity(3), m), m);
  }
}

TEST(IntMatrix, RejectsBadShapes) {
  EXPECT_THROW(IntMatrix(0, 3), DimensionError);
  EXPECT_THROW(IntMatrix(2, 2, {1, 2, 3}), DimensionError);
  EXPECT_THROW((IntMatrix{{1, 2}, {3}}), DimensionError);
  EXPECT_THROW(IntMatrix::identity(2).at(2, 0), DimensionError);
}

TEST(IntMatrix, TransposeExamples) {
  EXPECT_EQ(transpose(kRotation), (IntMatrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(transpose(IntMatrix::identity(4)), IntMatrix::identity(4));
  const IntMatrix rect{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(transpose(rect), (IntMatrix{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(transpose(transpose(rect)), rect);
}

TEST(IntMatrix, MultiplyExamples) {
  EXPECT_EQ(multiply(transpose(kRotation), kRotation), IntMatrix::identity(2));
  EXPECT_EQ(multiply(IntMatrix{{1, 0}, {0, -1}}, IntMatrix{{0, 1}, {1, 0}}),
            (IntMatrix{{0, 1}, {-1, 0}}));
  EXPECT_THROW(multiply(IntMatrix(2, 3), IntMatrix(2, 3)), DimensionError);
}

TEST(IntMatrix, MultiplyMatchesNaive) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int it = 0; it < kIterations; ++it) {
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng);
    const IntMatrix m = random_matrix(rng, a, b);
    const IntMatrix n = random_matrix(rng, b, c);
    ASSERT_EQ(to_grid(multiply(m, n)), naive_multiply(to_grid(m), to_grid(n)));
    const IntMatrix p = random_matrix(rng, a, c);
    ASSERT_EQ(to_grid(transpose_multiply(m, p)),
              naive_multiply(naive_transpose(to_grid(m)), to_grid(p)));
  }
}

TEST(IntMatrix, MultiplyIsAssociative) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int it = 0; it < kIterations; ++it) {
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    const IntMatrix x = random_matrix(rng, a, b);
    const IntMatrix y = random_matrix(rng, b, c);
    const IntMatrix z = random_matrix(rng, c, d);
    ASSERT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
  }
}

TEST(IntMatrix, OverflowIsAnError) {
  const Entry big = std::numeric_limits<Entry>::max() / 2 + 1;
  const IntMatrix m{{big, big}};
  const IntMatrix col{{1}, {1}};
  EXPECT_THROW(multiply(m, col), ArithmeticError);
  EXPECT_THROW(kron(IntMatrix{{big}}, IntMatrix{{4}}), ArithmeticError);
  EXPECT_THROW(add(IntMatrix{{big}}, IntMatrix{{big}}), ArithmeticError);
  EXPECT_THROW(negate(IntMatrix{{std::numeric_limits<Entry>::min()}}),
               ArithmeticError);
}

TEST(Kron, BlockScalingLayout) {
  const IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  const Entry a = 2, b = -1, c = 0, d = 3;
  const IntMatrix t{{a, b}, {c, d}};
  auto scaled = [&](Entry k) {
    std::vector<Entry> e(m.entries().begin(), m.entries().end());
    for (Entry &x : e)
      x *= k;
    return IntMatrix(m.rows(), m.cols(), std::move(e));
  };
  EXPECT_EQ(kron(m, t),
            assemble_blocks({{scaled(a), scaled(b)}, {scaled(c), scaled(d)}}));
  EXPECT_EQ(kron(m, t).rows(), 4u);
  EXPECT_EQ(kron(m, t).cols(), 6u);
}

TEST(Kron, ScalarUnit) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    const IntMatrix m = random_matrix(rng, 1 + it % 4, 1 + it % 3);
    EXPECT_EQ(kron(m, IntMatrix{{1}}), m);
  }
}

TEST(Kron, MatchesDefinition) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int it = 0; it < kIterations; ++it) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
    const IntMatrix t = random_matrix(rng, dim(rng), dim(rng));
    ASSERT_EQ(to_grid(kron(m, t)), naive_kron(to_grid(m), to_grid(t)));
  }
}

TEST(Kron, MixedProductLaw) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> dim(2, 3);
  for (int it = 0; it < kIterations; ++it) {
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng);
    const std::size_t p = dim(rng), q = dim(rng), r = dim(rng);
    const auto m = to_grid(random_matrix(rng, a, b));
    const auto m2 = to_grid(random_matrix(rng, b, c));
    const auto t = to_grid(random_matrix(rng, p, q));
    const auto t2 = to_grid(random_matrix(rng, q, r));
    // Expected value from the reference kron and reference product only.
    const auto expected = naive_kron(naive_multiply(m, m2), naive_multiply(t, t2));
    ASSERT_EQ(to_grid(multiply(kron(from_grid(m), from_grid(t)),
                               kron(from_grid(m2), from_grid(t2)))),
              expected);
  }
}

TEST(Kron, TransposeDistributes) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int it = 0; it < kIterations; ++it) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
    const IntMatrix t = random_matrix(rng, dim(rng), dim(rng));
    ASSERT_EQ(transpose(kron(m, t)), kron(transpose(m), transpose(t)));
  }
}

TEST(IntMatrix, AssembleBlocksChecksFit) {
  EXPECT_THROW(assemble_blocks({{IntMatrix(1, 1), IntMatrix(2, 1)}}),
               DimensionError);
  EXPECT_EQ(assemble_blocks({{IntMatrix{{1}}, IntMatrix{{2}}},
                             {IntMatrix{{3}}, IntMatrix{{4}}}}),
            (IntMatrix{{1, 2}, {3, 4}}));
}

TEST(IntMatrix, SignMatrixPredicate) {
  EXPECT_TRUE(kRotation.is_sign_matrix());
  EXPECT_FALSE((IntMatrix{{2}}).is_sign_matrix());
  EXPECT_TRUE(IntMatrix(2, 2).is_zero());
  EXPECT_EQ(kRotation.with_entry(0, 1, 5)(0, 1), 5);
  EXPECT_EQ(kRotation(0, 1), -1);
}
