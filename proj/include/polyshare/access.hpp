#pragma once

// Multipartite access structures determined by a uniform polymatroid and a
// compatible support family, kept as their minimal authorized vectors.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyshare/compat.hpp"
#include "polyshare/core.hpp"
#include "polyshare/polymatroid.hpp"

namespace polyshare {

/// Block sizes |P_x|.
class Partition {
 public:
  explicit Partition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    detail::require(sizes_.size() >= 2, "a partition needs at least two blocks");
    for (int s : sizes_) detail::require(s >= 1, "blocks must be nonempty");
  }

  /// g_0 + 1 participants in every block.
  static Partition smallest_for(const UniformPolymatroid& z) {
    return Partition(std::vector<int>(static_cast<std::size_t>(z.m()), z.g(0) + 1));
  }

  int m() const { return static_cast<int>(sizes_.size()); }
  int operator[](int x) const { return sizes_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& sizes() const { return sizes_; }
  int participants() const {
    int n = 0;
    for (int s : sizes_) n += s;
    return n;
  }

  PointVector full_vector() const { return PointVector(sizes_); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> sizes_;
};

/// Minimal elements of a set of vectors under the coordinatewise order.
inline std::vector<PointVector> minimal_elements(std::vector<PointVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<PointVector> out;
  for (const auto& v : vs) {
    bool dominated = false;
    for (const auto& w : vs)
      if (w != v && leq(w, v)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(v);
  }
  return out;
}

class AccessStructure {
 public:
  AccessStructure(UniformPolymatroid z, DeltaFamily delta, Partition blocks,
                  std::vector<PointVector> min_vectors)
      : z_(std::move(z)),
        delta_(std::move(delta)),
        blocks_(std::move(blocks)),
        min_vectors_(std::move(min_vectors)) {}

  int m() const { return z_.m(); }
  const UniformPolymatroid& polymatroid() const { return z_; }
  const DeltaFamily& delta() const { return delta_; }
  const Partition& blocks() const { return blocks_; }
  const std::vector<PointVector>& min_vectors() const { return min_vectors_; }

  /// `w` must fit inside the block sizes.
  bool is_authorized(const PointVector& w) const {
    detail::require(w.size() == m(), "vector dimension does not match the access structure");
    for (int x = 0; x < m(); ++x)
      if (w[x] > blocks_[x])
        throw InvalidArgument("vector " + format_vector(w) + " exceeds the size of block " +
                              std::to_string(x + 1));
    return std::any_of(min_vectors_.begin(), min_vectors_.end(),
                       [&](const PointVector& v) { return leq(v, w); });
  }

 private:
  UniformPolymatroid z_;
  DeltaFamily delta_;
  Partition blocks_;
  std::vector<PointVector> min_vectors_;
};

/// min Γ = min of the union of B(Z, X) over every X in the family.
///
/// Throws DomainError when the family is incompatible, InvalidArgument when a
/// block is not larger than g_0.
inline AccessStructure build_gamma(const UniformPolymatroid& z, const DeltaFamily& d,
                                   std::optional<Partition> blocks = std::nullopt) {
  detail::require(z.m() == d.m(), "polymatroid and support family have different ground sets");
  Partition p = blocks ? *blocks : Partition::smallest_for(z);
  detail::require(p.m() == z.m(), "partition has the wrong number of blocks");
  for (int x = 0; x < p.m(); ++x)
    detail::require(p[x] > z.g(0), "block " + std::to_string(x + 1) + " has size " +
                                       std::to_string(p[x]) + ", must exceed g_0 = " +
                                       std::to_string(z.g(0)));
  auto compat = is_compatible(z, d);
  if (!compat)
    throw DomainError("support family " + d.to_string() + " is not compatible with g = (" +
                      format_increments(z) + ")");

  std::vector<PointVector> all;
  for (Mask x : d.members()) {
    auto bases = enumerate_bases(z, x);
    all.insert(all.end(), bases.begin(), bases.end());
  }
  return AccessStructure(z, d, std::move(p), minimal_elements(std::move(all)));
}

inline bool is_authorized(const AccessStructure& g, const PointVector& w) {
  return g.is_authorized(w);
}

/// The family generated by the supports of the minimal vectors.
inline DeltaFamily support_family(const AccessStructure& g) {
  std::vector<Mask> supports;
  for (const auto& v : g.min_vectors()) supports.push_back(v.support());
  return DeltaFamily::generated_by(g.m(), supports);
}

/// Blocks that appear in no minimal vector.
inline Mask redundant_blocks(const AccessStructure& g) {
  Mask used = 0;
  for (const auto& v : g.min_vectors()) used |= v.support();
  return full_mask(g.m()) & ~used;
}

inline bool is_connected(const AccessStructure& g) { return redundant_blocks(g) == 0; }

}  // namespace polyshare
