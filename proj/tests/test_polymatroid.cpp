#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "polyshare/polymatroid.hpp"

using namespace polyshare;

namespace {

std::vector<PointVector> vs(std::initializer_list<std::initializer_list<int>> items) {
  std::vector<PointVector> out;
  for (auto v : items) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(UniformPolymatroid, ValidatesIncrements) {
  EXPECT_THROW(UniformPolymatroid({0, 0, 0}), InvalidArgument);
  EXPECT_THROW(UniformPolymatroid({1, 2, 0}), InvalidArgument);
  EXPECT_THROW(UniformPolymatroid({2, -1}), InvalidArgument);
  EXPECT_THROW(UniformPolymatroid({1}), InvalidArgument);
  EXPECT_NO_THROW(UniformPolymatroid({1, 1, 1, 1}));
}

TEST(UniformPolymatroid, FullSequenceDropsTrailingZero) {
  auto z = UniformPolymatroid::from_full_sequence({1, 1, 0, 0});
  EXPECT_EQ(z.m(), 3);
  EXPECT_EQ(z, UniformPolymatroid({1, 1, 0}));
  EXPECT_THROW(UniformPolymatroid::from_full_sequence({1, 1, 1}), InvalidArgument);
}

TEST(UniformPolymatroid, Ranks) {
  EXPECT_EQ(UniformPolymatroid({1, 1, 0}).rank(2), 2);
  EXPECT_EQ(UniformPolymatroid({1, 1, 0}).rank(3), 2);
  EXPECT_EQ(UniformPolymatroid({3, 2, 1, 1}).rank(4), 7);
  EXPECT_EQ(UniformPolymatroid({3, 2, 1, 1}).rank(0), 0);
  EXPECT_THROW(UniformPolymatroid({3, 2, 1, 1}).rank(5), InvalidArgument);
  EXPECT_EQ(UniformPolymatroid({3, 2, 1, 1}).rank_of(0b0110), 5);
}

TEST(UniformPolymatroid, RankDifferencesAreIncrementSums) {
  for (const auto& g : oracle::sequences(4, 3)) {
    UniformPolymatroid z(g);
    for (int j = 0; j <= 4; ++j)
      for (int k = j; k <= 4; ++k) {
        int sum = 0;
        for (int i = j; i < k; ++i) sum += z.g(i);
        EXPECT_EQ(z.rank(k) - z.rank(j), sum);
      }
  }
}

TEST(UniformPolymatroid, Eta) {
  EXPECT_EQ(UniformPolymatroid({1, 0, 0, 0}).eta(), 1);
  EXPECT_EQ(UniformPolymatroid({3, 2, 1, 1}).eta(), 4);
  EXPECT_EQ(UniformPolymatroid({2, 1, 0, 0}).eta(), 2);
}

TEST(Bases, SmallExamples) {
  UniformPolymatroid z({1, 1, 0});
  EXPECT_EQ(enumerate_bases(z, 0b011), vs({{1, 1, 0}}));
  EXPECT_EQ(enumerate_bases(z, 0b111), vs({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(enumerate_bases(z, 0), vs({{0, 0, 0}}));
  EXPECT_EQ(enumerate_bases(UniformPolymatroid({2, 1, 0}), 0b011), vs({{1, 2, 0}, {2, 1, 0}}));
}

TEST(Bases, MatchBruteForceBox) {
  for (int m = 2; m <= 4; ++m)
    for (const auto& g : oracle::sequences(m, 3)) {
      UniformPolymatroid z(g);
      for (Mask x = 0; x <= full_mask(m); ++x) {
        auto expected = oracle::bases(z, x);
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(enumerate_bases(z, x), expected) << "g=" << format_increments(z) << " X=" << format_subset(x);
      }
    }
}

TEST(Bases, CoordinatesAreAtLeastTheLastIncrement) {
  for (const auto& g : oracle::sequences(4, 3)) {
    UniformPolymatroid z(g);
    for (Mask x = 1; x <= full_mask(4); ++x) {
      const int k = cardinality(x);
      for (const auto& w : enumerate_bases(z, x)) {
        for (int i : elements(x)) {
          EXPECT_GE(w[i], z.g(k - 1));
          if (w[i] == z.g(k - 1)) {
            PointVector rest = w;
            rest[i] = 0;
            auto smaller = enumerate_bases(z, x & ~singleton(i));
            EXPECT_TRUE(std::binary_search(smaller.begin(), smaller.end(), rest));
          }
        }
      }
    }
  }
}

TEST(Bases, EqualSizeSetsArePermutationImages) {
  UniformPolymatroid z({3, 2, 1, 1});
  auto a = enumerate_bases(z, 0b0011);
  std::vector<PointVector> swapped;
  for (const auto& w : enumerate_bases(z, 0b1100)) swapped.push_back(PointVector{w[2], w[3], w[0], w[1]});
  std::sort(swapped.begin(), swapped.end());
  EXPECT_EQ(a, swapped);
}

TEST(Bases, EqualRankSubsetContributesSubset) {
  UniformPolymatroid z({2, 1, 0, 0});
  auto small = enumerate_bases(z, 0b0011);
  auto big = enumerate_bases(z, 0b0111);
  for (const auto& w : small) EXPECT_TRUE(std::binary_search(big.begin(), big.end(), w));
}

TEST(VertexVector, Definition) {
  UniformPolymatroid z({2, 1, 0, 0});
  VertexSpec spec{0b0101, {0, -1, 1, -1}};
  EXPECT_EQ(vertex_vector(z, spec), (PointVector{2, 0, 1, 0}));
  EXPECT_EQ(vertex_vector(UniformPolymatroid({1, 1, 0}), VertexSpec::from_order(3, {1, 2})),
            (PointVector{0, 1, 1}));
  EXPECT_EQ(vertex_vector(UniformPolymatroid({3, 2, 1, 1}), VertexSpec::from_order(4, {0, 1, 2, 3})),
            (PointVector{3, 2, 1, 1}));
}

TEST(VertexVector, RejectsNonBijections) {
  UniformPolymatroid z({2, 1, 0, 0});
  EXPECT_THROW(vertex_vector(z, VertexSpec{0b0011, {0, 0, -1, -1}}), InvalidArgument);
  EXPECT_THROW(vertex_vector(z, VertexSpec{0b0011, {0, 2, -1, -1}}), InvalidArgument);
  EXPECT_THROW(VertexSpec::from_order(4, {1, 1}), InvalidArgument);
}

TEST(VertexVector, AlwaysABaseOfItsSupport) {
  for (const auto& g : oracle::sequences(4, 3)) {
    UniformPolymatroid z(g);
    for (Mask x = 1; x <= full_mask(4); ++x) {
      std::vector<int> order = elements(x);
      do {
        PointVector w = vertex_vector(z, VertexSpec::from_order(4, order));
        EXPECT_TRUE(sum_largest_check(z, w));
        auto b = enumerate_bases(z, w.support());
        EXPECT_TRUE(std::binary_search(b.begin(), b.end(), w));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST(SumLargest, Examples) {
  UniformPolymatroid z({2, 1, 0});
  EXPECT_TRUE(sum_largest_check(z, PointVector{2, 1, 0}));
  EXPECT_FALSE(sum_largest_check(z, PointVector{2, 2, 0}));
  EXPECT_TRUE(sum_largest_check(z, PointVector{0, 0, 0}));
}
