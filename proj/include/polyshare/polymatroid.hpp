#pragma once

// Uniform polymatroids given by their increment sequence.
//
// The rank of a set depends only on its size: h_j = g_0 + ... + g_{j-1}.
// The sequence g is nonincreasing with g_0 > 0 and g_m = 0.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "polyshare/core.hpp"

namespace polyshare {

class UniformPolymatroid {
 public:
  /// `increments` holds g_0..g_{m-1}; g_m = 0 is implicit.
  explicit UniformPolymatroid(std::vector<int> increments) : g_(std::move(increments)) {
    const int m = static_cast<int>(g_.size());
    detail::require(m >= 2 && m <= kMaxGroundSet, "increment sequence must have 2.." +
                                                      std::to_string(kMaxGroundSet) + " entries");
    detail::require(g_.front() > 0, "g_0 must be positive");
    for (std::size_t i = 0; i < g_.size(); ++i) {
      detail::require(g_[i] >= 0, "increments must be non-negative");
      if (i > 0) detail::require(g_[i] <= g_[i - 1], "increment sequence must be nonincreasing");
    }
    h_.assign(g_.size() + 1, 0);
    for (std::size_t j = 1; j <= g_.size(); ++j) h_[j] = h_[j - 1] + g_[j - 1];
  }

  /// Accepts g_0..g_m with the trailing zero written out, e.g. (1,1,0,0) for m = 3.
  static UniformPolymatroid from_full_sequence(std::vector<int> full) {
    detail::require(full.size() >= 3, "full sequence needs g_0..g_m with m >= 2");
    detail::require(full.back() == 0, "g_m must be 0");
    full.pop_back();
    return UniformPolymatroid(std::move(full));
  }

  int m() const { return static_cast<int>(g_.size()); }

  /// g_i for 0 <= i <= m.
  int g(int i) const {
    detail::require(i >= 0 && i <= m(), "increment index out of range");
    return i == m() ? 0 : g_[static_cast<std::size_t>(i)];
  }

  const std::vector<int>& increments() const { return g_; }

  /// h_k for 0 <= k <= m.
  int rank(int k) const {
    detail::require(k >= 0 && k <= m(), "cardinality " + std::to_string(k) + " out of range");
    return h_[static_cast<std::size_t>(k)];
  }

  int rank_of(Mask x) const { return h_[static_cast<std::size_t>(cardinality(x))]; }

  /// Smallest i with g_i = 0; always in 1..m.
  int eta() const {
    for (int i = 0; i < m(); ++i)
      if (g_[static_cast<std::size_t>(i)] == 0) return i;
    return m();
  }

  friend bool operator==(const UniformPolymatroid&, const UniformPolymatroid&) = default;

 private:
  std::vector<int> g_;
  std::vector<int> h_;
};

inline std::string format_increments(const UniformPolymatroid& z) {
  std::string out;
  for (int i = 0; i < z.m(); ++i) {
    if (i) out += ",";
    out += std::to_string(z.g(i));
  }
  return out;
}

/// True iff for every l the sum of the l largest coordinates is at most h_l.
/// For a uniform rank function this is the same as |v_Y| <= h(Y) for all Y.
inline bool sum_largest_check(const UniformPolymatroid& z, const PointVector& v) {
  detail::require(v.size() == z.m(), "vector dimension does not match the polymatroid");
  std::vector<int> c = v.coords();
  std::sort(c.begin(), c.end(), std::greater<>());
  int prefix = 0;
  for (int l = 1; l <= z.m(); ++l) {
    prefix += c[static_cast<std::size_t>(l - 1)];
    if (prefix > z.rank(l)) return false;
  }
  return true;
}

namespace detail {

inline bool sorted_prefix_ok(const UniformPolymatroid& z, std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  int prefix = 0;
  for (std::size_t l = 0; l < values.size(); ++l) {
    prefix += values[l];
    if (prefix > z.rank(static_cast<int>(l) + 1)) return false;
  }
  return true;
}

}  // namespace detail

/// B(Z, X): vectors supported in X with modulus h_{|X|} that respect every
/// rank bound. Sorted lexicographically.
inline std::vector<PointVector> enumerate_bases(const UniformPolymatroid& z, Mask x) {
  const int m = z.m();
  detail::require(is_subset(x, full_mask(m)), "subset outside the ground set");
  const std::vector<int> idx = elements(x);
  const int k = static_cast<int>(idx.size());
  const int target = z.rank(k);
  const int cap = z.g(0);

  std::vector<PointVector> out;
  std::vector<int> chosen;
  chosen.reserve(idx.size());

  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == k) {
      if (remaining != 0) return;
      PointVector v(m);
      for (int i = 0; i < k; ++i) v[idx[static_cast<std::size_t>(i)]] = chosen[static_cast<std::size_t>(i)];
      out.push_back(std::move(v));
      return;
    }
    const int slots_after = k - pos - 1;
    for (int value = std::min(cap, remaining); value >= 0; --value) {
      if (remaining - value > slots_after * cap) break;
      chosen.push_back(value);
      if (detail::sorted_prefix_ok(z, chosen)) rec(pos + 1, remaining - value);
      chosen.pop_back();
    }
  };
  rec(0, target);
  std::sort(out.begin(), out.end());
  return out;
}

/// Basic set X together with a bijection sigma: X -> {0..|X|-1}.
struct VertexSpec {
  Mask basic_set = 0;
  /// position[x] = sigma(x) for x in X; entries outside X are ignored.
  std::vector<int> position;

  /// Builds the spec whose sigma lists `order` (0-based blocks) as 0, 1, 2, ...
  static VertexSpec from_order(int m, const std::vector<int>& order) {
    VertexSpec spec;
    spec.position.assign(static_cast<std::size_t>(m), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int x = order[i];
      detail::require(x >= 0 && x < m, "vertex order names a block outside the ground set");
      detail::require(!has(spec.basic_set, x), "vertex order repeats a block");
      spec.basic_set |= singleton(x);
      spec.position[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
    return spec;
  }
};

/// W = sum over x in X of g_{sigma(x)} e_x.
inline PointVector vertex_vector(const UniformPolymatroid& z, const VertexSpec& spec) {
  const int m = z.m();
  detail::require(static_cast<int>(spec.position.size()) == m, "vertex spec has wrong dimension");
  detail::require(is_subset(spec.basic_set, full_mask(m)), "basic set outside the ground set");
  const int k = cardinality(spec.basic_set);
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  PointVector w(m);
  for (int x : elements(spec.basic_set)) {
    const int s = spec.position[static_cast<std::size_t>(x)];
    if (s < 0 || s >= k || used[static_cast<std::size_t>(s)])
      throw InvalidArgument("vertex spec is not a bijection onto {0.." + std::to_string(k - 1) + "}");
    used[static_cast<std::size_t>(s)] = true;
    w[x] = z.g(s);
  }
  return w;
}

}  // namespace polyshare
