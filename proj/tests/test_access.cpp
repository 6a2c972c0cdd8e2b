#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "polyshare/enumerate.hpp"

using namespace polyshare;

namespace {

std::vector<PointVector> vs(std::initializer_list<std::initializer_list<int>> items) {
  std::vector<PointVector> out;
  for (auto v : items) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

AccessStructure example_pairs() {
  return build_gamma(UniformPolymatroid({1, 1, 0}), DeltaFamily::parse("{1,2};{1,3};{2,3}", 3));
}

AccessStructure threshold_two_of_three() {
  return build_gamma(UniformPolymatroid({2, 0, 0}), DeltaFamily::k_uniform(3, 1));
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({3}), InvalidArgument);
  EXPECT_THROW(Partition({3, 0}), InvalidArgument);
  EXPECT_EQ(Partition({2, 3, 4}).participants(), 9);
  EXPECT_EQ(Partition::smallest_for(UniformPolymatroid({2, 1, 0})).sizes(), (std::vector<int>{3, 3, 3}));
}

TEST(MinimalElements, DropsDominatedAndDuplicates) {
  auto out = minimal_elements({PointVector{1, 1}, PointVector{1, 2}, PointVector{2, 0}, PointVector{1, 1}});
  EXPECT_EQ(out, vs({{1, 1}, {2, 0}}));
}

TEST(BuildGamma, PairsExample) {
  EXPECT_EQ(example_pairs().min_vectors(), vs({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

TEST(BuildGamma, Threshold) {
  EXPECT_EQ(threshold_two_of_three().min_vectors(),
            vs({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

TEST(BuildGamma, SingleMinimalSetWithFlatIncrements) {
  auto g = build_gamma(UniformPolymatroid({1, 1, 1, 1}), DeltaFamily::parse("{1,2}", 4));
  EXPECT_EQ(g.min_vectors(), vs({{1, 1, 0, 0}}));
}

TEST(BuildGamma, Errors) {
  EXPECT_THROW(build_gamma(UniformPolymatroid({1, 0, 0, 0}), DeltaFamily::parse("{1}", 4)), DomainError);
  EXPECT_THROW(build_gamma(UniformPolymatroid({2, 1, 0}), DeltaFamily::parse("{1};{2,3}", 3), Partition({2, 3, 3})),
               InvalidArgument);
  EXPECT_THROW(build_gamma(UniformPolymatroid({2, 1, 0}), DeltaFamily::parse("{1};{2,3}", 3), Partition({3, 3})),
               InvalidArgument);
}

TEST(BuildGamma, MatchesBoxScanOracle) {
  for (int m = 2; m <= 4; ++m)
    for (const auto& g : oracle::sequences(m, m == 4 ? 2 : 4)) {
      UniformPolymatroid z(g);
      for (const auto& sets : all_antichains(m)) {
        DeltaFamily d(m, sets);
        if (!is_compatible(z, d)) continue;
        auto expected = oracle::min_gamma(z, d, std::vector<int>(static_cast<std::size_t>(m), z.g(0)));
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(build_gamma(z, d).min_vectors(), expected) << format_increments(z) << " " << d.to_string();
      }
    }
}

TEST(IsAuthorized, Examples) {
  auto g = example_pairs();
  EXPECT_TRUE(g.is_authorized(PointVector{1, 1, 1}));
  EXPECT_FALSE(g.is_authorized(PointVector{1, 0, 0}));
  EXPECT_TRUE(is_authorized(g, g.blocks().full_vector()));
  EXPECT_THROW(g.is_authorized(PointVector{3, 0, 0}), InvalidArgument);
  EXPECT_THROW(g.is_authorized(PointVector{1, 0}), InvalidArgument);
}

TEST(IsAuthorized, PairsExampleMeansTwoBlocks) {
  auto g = example_pairs();
  oracle::for_each_in_box(g.blocks().sizes(), [&](const PointVector& w) {
    EXPECT_EQ(g.is_authorized(w), cardinality(w.support()) >= 2) << format_vector(w);
  });
}

TEST(SupportFamily, Examples) {
  EXPECT_EQ(support_family(example_pairs()), DeltaFamily::parse("{1,2};{1,3};{2,3}", 3));
  EXPECT_EQ(support_family(threshold_two_of_three()), DeltaFamily::k_uniform(3, 1));
  auto single = build_gamma(UniformPolymatroid({1, 1, 1, 1}), DeltaFamily::parse("{1,2}", 4));
  EXPECT_EQ(support_family(single), DeltaFamily::parse("{1,2}", 4));
}

TEST(Redundancy, Examples) {
  auto single = build_gamma(UniformPolymatroid({1, 1, 1, 1}), DeltaFamily::parse("{1,2}", 4));
  EXPECT_EQ(redundant_blocks(single), 0b1100u);
  EXPECT_FALSE(is_connected(single));
  EXPECT_EQ(redundant_blocks(example_pairs()), 0u);
  EXPECT_TRUE(is_connected(threshold_two_of_three()));
}

TEST(AccessProperties, StructuralFactsOnEveryCompatibleCell) {
  for (const auto& gv : printed_columns_m4()) {
    UniformPolymatroid z(gv);
    for (const auto& sets : all_antichains(4)) {
      DeltaFamily d(4, sets);
      if (!is_compatible(z, d)) continue;
      auto g = build_gamma(z, d);
      const auto& mins = g.min_vectors();
      EXPECT_TRUE(std::is_sorted(mins.begin(), mins.end()));
      for (const auto& a : mins) {
        for (const auto& b : mins) EXPECT_TRUE(a == b || !leq(a, b));
        for (int i = 0; i < 4; ++i) EXPECT_LE(a[i], z.g(0));
        EXPECT_TRUE(d.contains(a.support()));
        auto base = enumerate_bases(z, a.support());
        EXPECT_TRUE(std::binary_search(base.begin(), base.end(), a));
      }
      EXPECT_EQ(support_family(g), d);
      for (Mask x : d.members()) {
        for (const auto& v : enumerate_bases(z, x)) EXPECT_TRUE(g.is_authorized(v));
        std::vector<int> order = elements(x);
        do {
          EXPECT_TRUE(g.is_authorized(vertex_vector(z, VertexSpec::from_order(4, order))));
        } while (std::next_permutation(order.begin(), order.end()));
      }
      if (z.g(0) > z.g(3)) {
        EXPECT_TRUE(is_connected(g)) << format_increments(z) << " " << d.to_string();
      }
    }
  }
}
