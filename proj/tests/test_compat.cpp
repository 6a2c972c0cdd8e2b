#include <gtest/gtest.h>

#include "oracle.hpp"
#include "polyshare/enumerate.hpp"

using namespace polyshare;

namespace {

DeltaFamily fam(const std::string& s, int m) { return DeltaFamily::parse(s, m); }

const std::vector<std::vector<int>> kColumns = printed_columns_m4();

}  // namespace

TEST(DeltaFamily, Validation) {
  EXPECT_THROW(DeltaFamily(3, {}), InvalidArgument);
  EXPECT_THROW(DeltaFamily(3, {0}), InvalidArgument);
  EXPECT_THROW(DeltaFamily(3, {0b001, 0b011}), InvalidArgument);
  EXPECT_THROW(DeltaFamily(3, {0b1000}), InvalidArgument);
  EXPECT_THROW(DeltaFamily(3, {0b011, 0b011}), InvalidArgument);
}

TEST(DeltaFamily, GeneratedDropsNonMinimal) {
  auto d = DeltaFamily::generated_by(3, {0b111, 0b011, 0b011, 0b101});
  EXPECT_EQ(d.min_sets(), (std::vector<Mask>{0b011, 0b101}));
}

TEST(DeltaFamily, Contains) {
  auto d = fam("{1,2}", 3);
  EXPECT_TRUE(d.contains(0b111));
  EXPECT_FALSE(d.contains(0b101));
  EXPECT_TRUE(fam("{1};{2,3}", 3).contains(full_mask(3)));
  EXPECT_EQ(fam("{1};{2,3}", 3).members().size(), 5u);
}

TEST(DeltaFamily, Mu) {
  EXPECT_EQ(fam("{1,2};{1,3,4}", 4).mu(), 2);
  EXPECT_EQ(DeltaFamily::k_uniform(4, 3).mu(), 3);
}

TEST(Compatibility, TableExamples) {
  EXPECT_TRUE(is_compatible(UniformPolymatroid({1, 0, 0, 0}), fam("{1};{2};{3};{4}", 4)));
  auto r = is_compatible(UniformPolymatroid({1, 0, 0, 0}), fam("{1}", 4));
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(is_compatible(UniformPolymatroid({3, 2, 1, 1}), fam("{1}", 4)));
  EXPECT_FALSE(is_compatible(UniformPolymatroid({2, 2, 1, 1}), fam("{1};{2}", 4)));
}

TEST(Compatibility, WitnessViolatesItsCondition) {
  for (const auto& g : kColumns) {
    UniformPolymatroid z(g);
    for (const auto& c : enumerate_deltas(4)) {
      auto r = is_compatible(z, c.representative);
      if (r) continue;
      ASSERT_TRUE(r.witness.has_value());
      const auto& w = *r.witness;
      const auto& d = c.representative;
      if (w.condition == 1) {
        EXPECT_TRUE(is_subset(w.y, w.x) && w.y != w.x);
        EXPECT_TRUE(d.contains(w.x) && !d.contains(w.y));
        EXPECT_GE(z.rank_of(w.y), z.rank_of(w.x));
      } else {
        ASSERT_EQ(w.condition, 2);
        EXPECT_TRUE(d.contains(w.x) && d.contains(w.y) && !d.contains(w.x & w.y));
        EXPECT_GE(z.rank_of(w.x & w.y) + z.rank_of(w.x | w.y), z.rank_of(w.x) + z.rank_of(w.y));
      }
    }
  }
}

TEST(Compatibility, MatchesDefinitionOverEveryFamily) {
  for (int m = 2; m <= 4; ++m)
    for (const auto& g : oracle::sequences(m, m == 4 ? 3 : 4))
      for (const auto& sets : all_antichains(m)) {
        UniformPolymatroid z(g);
        DeltaFamily d(m, sets);
        ASSERT_EQ(is_compatible(z, d).compatible, oracle::compatible(z, d))
            << format_increments(z) << " " << d.to_string();
      }
}

TEST(Shortcuts, SingleMinimalSet) {
  EXPECT_TRUE(shortcut_single_min(UniformPolymatroid({1, 1, 1, 1}), fam("{1,2}", 4)));
  EXPECT_FALSE(shortcut_single_min(UniformPolymatroid({2, 1, 0, 0}), fam("{1}", 4)));
  EXPECT_TRUE(shortcut_single_min(UniformPolymatroid({3, 2, 1, 1}), fam("{1,2,3,4}", 4)));
  EXPECT_THROW(shortcut_single_min(UniformPolymatroid({1, 1, 1, 1}), fam("{1};{2}", 4)), InvalidArgument);
}

TEST(Shortcuts, KUniform) {
  EXPECT_TRUE(shortcut_k_uniform(UniformPolymatroid({2, 1, 1, 1}), DeltaFamily::k_uniform(4, 1)));
  EXPECT_FALSE(shortcut_k_uniform(UniformPolymatroid({1, 1, 1, 1}), DeltaFamily::k_uniform(4, 1)));
  EXPECT_TRUE(shortcut_k_uniform(UniformPolymatroid({3, 2, 1, 1}), DeltaFamily::k_uniform(4, 4)));
  EXPECT_THROW(shortcut_k_uniform(UniformPolymatroid({1, 1, 1, 1}), fam("{1,2}", 4)), InvalidArgument);
}

TEST(Shortcuts, EtaTwo) {
  EXPECT_TRUE(shortcut_eta2(UniformPolymatroid({2, 1, 0, 0}), fam("{1};{2,3};{2,4};{3,4}", 4)));
  EXPECT_FALSE(shortcut_eta2(UniformPolymatroid({1, 1, 0, 0}), fam("{1};{2}", 4)));
  EXPECT_FALSE(shortcut_eta2(UniformPolymatroid({2, 1, 0, 0}), fam("{1};{2,3}", 4)));
  EXPECT_THROW(shortcut_eta2(UniformPolymatroid({1, 1, 1, 1}), fam("{1}", 4)), InvalidArgument);
}

TEST(Shortcuts, AgreeWithExhaustiveCheck) {
  for (int m = 2; m <= 4; ++m)
    for (const auto& g : oracle::sequences(m, 4)) {
      UniformPolymatroid z(g);
      for (const auto& sets : all_antichains(m)) {
        DeltaFamily d(m, sets);
        const bool full = is_compatible(z, d).compatible;
        if (sets.size() == 1) {
          EXPECT_EQ(shortcut_single_min(z, d), full);
        }
        const int k = cardinality(sets.front());
        if (sets == k_subsets(m, k)) {
          EXPECT_EQ(shortcut_k_uniform(z, d), full);
        }
        if (z.eta() == 2) {
          EXPECT_EQ(shortcut_eta2(z, d), full);
        }
      }
    }
}

TEST(CompatibilityProperties, ZeroIncrementForcesLargeSetsIn) {
  for (const auto& g : kColumns) {
    UniformPolymatroid z(g);
    for (const auto& sets : all_antichains(4)) {
      DeltaFamily d(4, sets);
      if (!is_compatible(z, d)) continue;
      for (int k = 0; k < 4; ++k) {
        if (z.g(k) != 0) continue;
        for (Mask x = 0; x <= full_mask(4); ++x)
          if (cardinality(x) >= k && x != 0) {
            EXPECT_TRUE(d.contains(x));
          }
      }
      for (Mask a : d.min_sets()) EXPECT_GT(z.g(cardinality(a) - 1), 0);
    }
  }
}

TEST(CompatibilityProperties, FlatMiddleLimitsMinimalSets) {
  for (const auto& g : oracle::sequences(4, 3)) {
    UniformPolymatroid z(g);
    const int n = z.eta();
    if (n < 2 || z.g(1) != z.g(n - 1) || z.g(1) == 0) continue;
    for (const auto& sets : all_antichains(4)) {
      DeltaFamily d(4, sets);
      if (!is_compatible(z, d)) continue;
      for (Mask x : sets)
        for (Mask y : sets) {
          if (x == y || cardinality(x | y) > n) continue;
          EXPECT_TRUE(cardinality(x) == 1 && cardinality(y) == 1) << format_increments(z) << " " << d.to_string();
          EXPECT_NE(z.g(0), z.g(1)) << format_increments(z) << " " << d.to_string();
        }
    }
  }
}

TEST(CompatibilityProperties, StrictlyDecreasingAcceptsEverything) {
  for (int m = 2; m <= 4; ++m) {
    std::vector<int> g;
    for (int i = m; i >= 1; --i) g.push_back(i);
    UniformPolymatroid z(g);
    for (const auto& sets : all_antichains(m)) EXPECT_TRUE(is_compatible(z, DeltaFamily(m, sets)));
  }
}
