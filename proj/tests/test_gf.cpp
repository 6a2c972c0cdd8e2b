#include <gtest/gtest.h>

#include "polyshare/gf.hpp"

using namespace polyshare;

namespace {

FieldMatrix random_matrix(int rows, int cols, std::uint64_t p, std::mt19937_64& rng) {
  PrimeField f(p);
  std::vector<FieldVector> c;
  for (int j = 0; j < cols; ++j) c.push_back(f.random_vector(static_cast<std::size_t>(rows), rng));
  return FieldMatrix::from_columns(rows, c, p);
}

}  // namespace

TEST(Primes, Basics) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(17));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(1000000007));
  EXPECT_EQ(next_prime_at_least(14), 17u);
  EXPECT_EQ(next_prime_at_least(17), 17u);
  EXPECT_EQ(next_prime_at_least(2), 2u);
  EXPECT_THROW(next_prime_at_least(1), InvalidArgument);
  EXPECT_THROW(PrimeField(15), InvalidArgument);
}

TEST(PrimeField, Axioms) {
  for (std::uint64_t p : {2u, 3u, 7u, 17u}) {
    PrimeField f(p);
    for (Element a = 0; a < p; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (Element b = 0; b < p; ++b) {
        EXPECT_EQ(f.add(a, b), (a + b) % p);
        EXPECT_EQ(f.mul(a, b), (a * b) % p);
        EXPECT_EQ(f.add(f.sub(a, b), b), a);
      }
    }
    EXPECT_THROW(f.inv(0), InvalidArgument);
  }
}

TEST(PrimeField, LargeModulusMultiplication) {
  const std::uint64_t p = 1000000000039ULL;
  PrimeField f(p);
  EXPECT_EQ(f.mul(p - 1, p - 1), 1u);
  EXPECT_EQ(f.mul(f.inv(123456789), 123456789), 1u);
  EXPECT_EQ(f.pow(3, p - 1), 1u);
  EXPECT_EQ(f.reduce(-1), p - 1);
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank_of(FieldMatrix::from_rows({{1, 2}, {2, 4}}, 7)), 1);
  EXPECT_EQ(rank_of(FieldMatrix::from_rows({{1, 2}, {3, 4}}, 7)), 2);
  // Determinant -2 vanishes mod 2.
  EXPECT_EQ(rank_of(FieldMatrix::from_rows({{1, 2}, {3, 4}}, 2)), 1);
  EXPECT_EQ(rank_of(FieldMatrix::identity(5, 11)), 5);
  EXPECT_EQ(rank_of(FieldMatrix::zero(3, 4, 11)), 0);
  EXPECT_EQ(rank_of(FieldMatrix(3, 0, 11)), 0);
}

TEST(Matrix, EchelonForm) {
  auto e = reduced_row_echelon(FieldMatrix::from_rows({{0, 2, 4}, {1, 1, 1}}, 5));
  EXPECT_EQ(e.pivot_columns, (std::vector<int>{0, 1}));
  EXPECT_EQ(e.reduced, FieldMatrix::from_rows({{1, 0, -1}, {0, 1, 2}}, 5));
}

TEST(Matrix, SpanMembership) {
  const auto a = FieldMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}, 7);
  EXPECT_TRUE(in_span(a, {3, 5, 0}));
  EXPECT_FALSE(in_span(a, {0, 0, 1}));
  auto c = solve_in_span(a, {3, 5, 0});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (FieldVector{3, 5}));
  EXPECT_TRUE(in_span(FieldMatrix(3, 0, 7), {0, 0, 0}));
  EXPECT_FALSE(in_span(FieldMatrix(3, 0, 7), {1, 0, 0}));
  EXPECT_THROW(in_span(a, {1, 2}), InvalidArgument);
}

TEST(Matrix, SolveReproducesTarget) {
  std::mt19937_64 rng(5);
  PrimeField f(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(5, 3, 13, rng);
    auto coeffs = f.random_vector(3, rng);
    FieldVector v = a.times(coeffs);
    auto sol = solve_in_span(a, v);
    ASSERT_TRUE(sol);
    EXPECT_EQ(a.times(*sol), v);
  }
}

TEST(Matrix, NullSpaceAndBasis) {
  const auto a = FieldMatrix::from_rows({{1, 1, 2}, {0, 1, 1}}, 7);
  const auto n = null_space(a);
  EXPECT_EQ(n.cols(), 1);
  EXPECT_TRUE(is_zero(a.times(n.column(0))));
  EXPECT_EQ(column_basis(a).cols(), 2);
  EXPECT_EQ(null_space(FieldMatrix::identity(3, 7)).cols(), 0);
}

TEST(Matrix, IntersectionSatisfiesDimensionFormula) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6;
    auto a = random_matrix(n, 1 + trial % 4, 5, rng);
    auto b = random_matrix(n, 1 + (trial / 4) % 4, 5, rng);
    if (trial % 3 == 0) b = hcat(b, FieldMatrix::from_columns(n, {a.column(0)}, 5));
    auto w = intersect_column_spaces(a, b);
    EXPECT_EQ(rank_of(w), rank_of(a) + rank_of(b) - rank_of(hcat(a, b)));
    EXPECT_TRUE(column_space_contains(a, w));
    EXPECT_TRUE(column_space_contains(b, w));
  }
}

TEST(Matrix, IntersectionExamples) {
  const auto xy = FieldMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}, 3);
  const auto yz = FieldMatrix::from_rows({{0, 0}, {1, 0}, {0, 1}}, 3);
  const auto w = intersect_column_spaces(xy, yz);
  EXPECT_EQ(rank_of(w), 1);
  EXPECT_TRUE(in_span(w, {0, 1, 0}));
  EXPECT_EQ(rank_of(intersect_column_spaces(xy, FieldMatrix::from_rows({{0}, {0}, {1}}, 3))), 0);
}

TEST(Matrix, DifferentFieldsRejected) {
  EXPECT_THROW(hcat(FieldMatrix(2, 1, 3), FieldMatrix(2, 1, 5)), InvalidArgument);
  EXPECT_THROW(hcat(FieldMatrix(2, 1, 3), FieldMatrix(3, 1, 3)), InvalidArgument);
}

TEST(Random, DeterministicForSeed) {
  PrimeField f(101);
  std::mt19937_64 a(42), b(42);
  EXPECT_EQ(f.random_vector(20, a), f.random_vector(20, b));
  for (int i = 0; i < 200; ++i) EXPECT_NE(f.random_nonzero(a), 0u);
}
