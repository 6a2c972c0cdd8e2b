#pragma once

// Support families (monotone increasing families of nonempty block sets) and
// their compatibility with a uniform polymatroid.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "polyshare/core.hpp"
#include "polyshare/polymatroid.hpp"

namespace polyshare {

/// Monotone increasing family of nonempty subsets of J, stored by its minimal sets.
class DeltaFamily {
 public:
  /// `min_sets` must already be a nonempty antichain of nonempty sets.
  DeltaFamily(int m, std::vector<Mask> min_sets) : m_(m), min_sets_(std::move(min_sets)) {
    GroundSet ground(m);
    detail::require(!min_sets_.empty(), "support family must have at least one minimal set");
    std::sort(min_sets_.begin(), min_sets_.end());
    for (std::size_t i = 0; i < min_sets_.size(); ++i) {
      const Mask a = min_sets_[i];
      detail::require(a != 0, "the empty set cannot belong to a support family");
      detail::require(is_subset(a, ground.full()), "minimal set outside the ground set");
      for (std::size_t j = 0; j < min_sets_.size(); ++j)
        if (i != j) {
          detail::require(a != min_sets_[j], "repeated minimal set " + format_subset(a));
          detail::require(!is_subset(a, min_sets_[j]),
                          "minimal sets must form an antichain: " + format_subset(a) + " is inside " +
                              format_subset(min_sets_[j]));
        }
    }
  }

  /// Family generated by arbitrary nonempty sets; non-minimal generators are dropped.
  static DeltaFamily generated_by(int m, const std::vector<Mask>& generators) {
    std::vector<Mask> kept;
    for (Mask a : generators) {
      detail::require(a != 0, "the empty set cannot belong to a support family");
      bool dominated = false;
      for (Mask b : generators)
        if (b != a && is_subset(b, a)) dominated = true;
      if (!dominated && std::find(kept.begin(), kept.end(), a) == kept.end()) kept.push_back(a);
    }
    return DeltaFamily(m, std::move(kept));
  }

  static DeltaFamily parse(const std::string& text, int m) {
    return DeltaFamily(m, parse_family(text, m));
  }

  /// Family whose minimal sets are all k-subsets of J.
  static DeltaFamily k_uniform(int m, int k) {
    detail::require(k >= 1 && k <= m, "k must be in 1..m");
    return DeltaFamily(m, k_subsets(m, k));
  }

  int m() const { return m_; }
  const std::vector<Mask>& min_sets() const { return min_sets_; }

  bool contains(Mask x) const {
    return std::any_of(min_sets_.begin(), min_sets_.end(),
                       [x](Mask a) { return is_subset(a, x); });
  }

  /// Every member of the family, ascending by mask value.
  std::vector<Mask> members() const {
    std::vector<Mask> out;
    for (Mask x = 1; x <= full_mask(m_); ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  /// Smallest cardinality of a minimal set.
  int mu() const {
    int best = m_;
    for (Mask a : min_sets_) best = std::min(best, cardinality(a));
    return best;
  }

  std::string to_string() const { return format_family(min_sets_); }

  friend bool operator==(const DeltaFamily&, const DeltaFamily&) = default;

 private:
  int m_;
  std::vector<Mask> min_sets_;
};

struct CompatibilityWitness {
  Mask x = 0;
  Mask y = 0;
  /// 1: Y inside X, Y outside the family, X inside, yet h(Y) >= h(X).
  /// 2: X, Y inside, X∩Y outside, yet h(X∩Y) + h(X∪Y) >= h(X) + h(Y).
  int condition = 0;
};

struct CompatibilityResult {
  bool compatible = true;
  std::optional<CompatibilityWitness> witness;

  explicit operator bool() const { return compatible; }
};

/// Exhaustive check of both extension conditions over all subset pairs.
inline CompatibilityResult is_compatible(const UniformPolymatroid& z, const DeltaFamily& d) {
  detail::require(z.m() == d.m(), "polymatroid and support family have different ground sets");
  const int m = z.m();
  const Mask full = full_mask(m);
  std::vector<char> in(static_cast<std::size_t>(full) + 1, 0);
  for (Mask x = 0; x <= full; ++x) in[x] = d.contains(x) ? 1 : 0;

  for (Mask x = 0; x <= full; ++x) {
    if (!in[x]) continue;
    // Proper subsets of x, iterated downward from x.
    for (Mask y = (x - 1) & x;; y = (y - 1) & x) {
      if (!in[y] && z.rank_of(y) >= z.rank_of(x))
        return {false, CompatibilityWitness{x, y, 1}};
      if (y == 0) break;
    }
  }
  for (Mask x = 0; x <= full; ++x) {
    if (!in[x]) continue;
    for (Mask y = x + 1; y <= full; ++y) {
      if (!in[y] || in[x & y]) continue;
      if (z.rank_of(x & y) + z.rank_of(x | y) >= z.rank_of(x) + z.rank_of(y))
        return {false, CompatibilityWitness{x, y, 2}};
    }
  }
  return {true, std::nullopt};
}

// Closed-form criteria for special shapes. They are independent of
// is_compatible and only serve as cross-checks.

/// A family with a single minimal set is compatible iff g_{m-1} > 0.
inline bool shortcut_single_min(const UniformPolymatroid& z, const DeltaFamily& d) {
  detail::require(d.min_sets().size() == 1, "shortcut needs exactly one minimal set");
  return z.g(z.m() - 1) > 0;
}

/// If the minimal sets are all k-subsets, compatible iff g_{k-1} > g_k.
inline bool shortcut_k_uniform(const UniformPolymatroid& z, const DeltaFamily& d) {
  const int k = cardinality(d.min_sets().front());
  detail::require(d.min_sets() == k_subsets(d.m(), k),
                  "shortcut needs the minimal sets to be all k-subsets");
  return z.g(k - 1) > z.g(k);
}

/// For eta(g) = 2: compatible iff the minimal sets are P_1(X) ∪ P_2(J \ X),
/// with |X| <= 1 when g_0 = g_1.
inline bool shortcut_eta2(const UniformPolymatroid& z, const DeltaFamily& d) {
  detail::require(z.eta() == 2, "shortcut needs eta(g) = 2");
  const int m = d.m();
  Mask singles = 0;
  for (Mask a : d.min_sets())
    if (cardinality(a) == 1) singles |= a;
  std::vector<Mask> expected;
  for (int i = 0; i < m; ++i)
    if (has(singles, i)) expected.push_back(singleton(i));
  for (Mask pair : k_subsets(m, 2))
    if ((pair & singles) == 0) expected.push_back(pair);
  std::sort(expected.begin(), expected.end());
  if (expected != d.min_sets()) return false;
  if (z.g(0) == z.g(1) && cardinality(singles) > 1) return false;
  return true;
}

}  // namespace polyshare
