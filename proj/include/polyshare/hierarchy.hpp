#pragma once

// Hierarchical preorder on blocks and its classification into the two-layer
// order types (threshold, compartmented, Λ_Y^X, Λ*_Y^X).

#include <algorithm>
#include <string>
#include <vector>

#include "polyshare/access.hpp"
#include "polyshare/core.hpp"

namespace polyshare {

/// Square boolean matrix; at(y, x) means block y is inferior or equivalent to block x.
class Relation {
 public:
  explicit Relation(int m) : m_(m), bits_(static_cast<std::size_t>(m * m), 0) {}

  /// Builds a reflexive relation from 1-based (y, x) pairs.
  static Relation from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
    Relation r(m);
    for (int i = 0; i < m; ++i) r.set(i, i, true);
    for (auto [y, x] : pairs) {
      detail::require(y >= 1 && y <= m && x >= 1 && x <= m, "relation pair out of range");
      r.set(y - 1, x - 1, true);
    }
    return r;
  }

  int m() const { return m_; }
  bool at(int y, int x) const { return bits_[index(y, x)] != 0; }
  void set(int y, int x, bool value) { bits_[index(y, x)] = value ? 1 : 0; }

  bool equivalent(int a, int b) const { return at(a, b) && at(b, a); }
  bool strictly_below(int y, int x) const { return at(y, x) && !at(x, y); }

  bool is_reflexive() const {
    for (int i = 0; i < m_; ++i)
      if (!at(i, i)) return false;
    return true;
  }

  bool is_transitive() const {
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        if (at(a, b))
          for (int c = 0; c < m_; ++c)
            if (at(b, c) && !at(a, c)) return false;
    return true;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t index(int y, int x) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(x);
  }

  int m_;
  std::vector<char> bits_;
};

/// Relation of an access structure: y ≼ x iff v - e_y + e_x stays authorized for
/// every minimal v with v_y >= 1 and v_x < |P_x|.
inline Relation compute_relation(const AccessStructure& g) {
  const int m = g.m();
  Relation r(m);
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x) {
      if (x == y) {
        r.set(y, x, true);
        continue;
      }
      bool ok = true;
      for (const auto& v : g.min_vectors()) {
        if (v[y] < 1 || v[x] >= g.blocks()[x]) continue;
        PointVector w = v;
        w[y] -= 1;
        w[x] += 1;
        if (!g.is_authorized(w)) {
          ok = false;
          break;
        }
      }
      r.set(y, x, ok);
    }
  return r;
}

enum class OrderKind { Threshold, Compartmented, Lambda, LambdaStar, Other };

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Threshold: return "T";
    case OrderKind::Compartmented: return "C";
    case OrderKind::Lambda: return "Lambda";
    case OrderKind::LambdaStar: return "LambdaStar";
    case OrderKind::Other: return "Other";
  }
  return "Other";
}

/// Classified order type. For Lambda/LambdaStar, `upper` is X (the superior
/// blocks) and `lower` is Y.
struct OrderType {
  OrderKind kind = OrderKind::Other;
  Mask upper = 0;
  Mask lower = 0;

  friend bool operator==(const OrderType&, const OrderType&) = default;
};

inline OrderType classify(const Relation& r) {
  detail::require(r.is_reflexive(), "relation is not reflexive");
  detail::require(r.is_transitive(), "relation is not transitive");
  const int m = r.m();

  bool all_equivalent = true;
  bool any_relation = false;
  Mask equivalent_blocks = 0;
  std::vector<std::pair<int, int>> strict;
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x) {
      if (x == y) continue;
      if (!r.equivalent(y, x)) all_equivalent = false;
      if (r.at(y, x)) any_relation = true;
      if (r.equivalent(y, x)) equivalent_blocks |= singleton(y) | singleton(x);
      if (r.strictly_below(y, x)) strict.emplace_back(y, x);
    }

  if (all_equivalent) return {OrderKind::Threshold, 0, full_mask(m)};
  if (!any_relation) return {OrderKind::Compartmented, 0, 0};

  auto strict_set_is_product = [&](Mask lower, Mask upper) {
    if (static_cast<int>(strict.size()) != cardinality(lower) * cardinality(upper)) return false;
    return std::all_of(strict.begin(), strict.end(), [&](auto p) {
      return has(lower, p.first) && has(upper, p.second);
    });
  };

  if (equivalent_blocks == 0) {
    Mask lower = 0, upper = 0;
    for (auto [y, x] : strict) {
      lower |= singleton(y);
      upper |= singleton(x);
    }
    if ((lower & upper) == 0 && strict_set_is_product(lower, upper))
      return {OrderKind::Lambda, upper, lower};
    return {OrderKind::Other, 0, 0};
  }

  const Mask lower = equivalent_blocks;
  for (int a : elements(lower))
    for (int b : elements(lower))
      if (!r.equivalent(a, b)) return {OrderKind::Other, 0, 0};
  Mask upper = 0;
  for (int x = 0; x < m; ++x) {
    if (has(lower, x)) continue;
    bool above_all = true;
    for (int y : elements(lower))
      if (!r.strictly_below(y, x)) above_all = false;
    if (above_all) upper |= singleton(x);
  }
  if (!strict_set_is_product(lower, upper)) return {OrderKind::Other, 0, 0};
  // Any remaining relation must be inside the equivalence class or in Y×X.
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x) {
      if (x == y || !r.at(y, x)) continue;
      const bool inside = has(lower, y) && has(lower, x);
      const bool across = has(lower, y) && has(upper, x);
      if (!inside && !across) return {OrderKind::Other, 0, 0};
    }
  return {OrderKind::LambdaStar, upper, lower};
}

/// Longest chain of pairwise comparable, pairwise non-equivalent blocks.
inline int max_chain_length(const Relation& r) {
  detail::require(r.is_reflexive() && r.is_transitive(), "relation is not a preorder");
  const int m = r.m();
  // The strict part is a transitive DAG, so the longest path is the longest chain.
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
  auto below_count = [&](int x) {
    int c = 0;
    for (int y = 0; y < m; ++y) c += r.strictly_below(y, x) ? 1 : 0;
    return c;
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return below_count(a) < below_count(b); });
  std::vector<int> longest(static_cast<std::size_t>(m), 1);
  int best = m > 0 ? 1 : 0;
  for (int x : order) {
    for (int y = 0; y < m; ++y)
      if (r.strictly_below(y, x))
        longest[static_cast<std::size_t>(x)] =
            std::max(longest[static_cast<std::size_t>(x)], longest[static_cast<std::size_t>(y)] + 1);
    best = std::max(best, longest[static_cast<std::size_t>(x)]);
  }
  return best;
}

/// Letter code used in the m = 4 classification grid; "?" for shapes without a letter.
inline std::string table_code(const OrderType& t, int m) {
  detail::require(m == 4, "letter codes are defined for m = 4 only");
  const int nx = cardinality(t.upper);
  const int ny = cardinality(t.lower);
  switch (t.kind) {
    case OrderKind::Threshold: return "T";
    case OrderKind::Compartmented: return "C";
    case OrderKind::Lambda:
      if (nx == 1 && ny == 3) return "M";
      if (nx == 2 && ny == 2) return "K";
      if (nx == 1 && ny == 1) return "E";
      if (nx == 3 && ny == 1) return "W";
      return "?";
    case OrderKind::LambdaStar:
      if (nx == 1 && ny == 3) return "I";
      if (nx == 2 && ny == 2) return "V";
      return "?";
    case OrderKind::Other: return "?";
  }
  return "?";
}

struct HierarchyReport {
  Relation relation;
  OrderType type;
  int max_chain = 1;
};

inline HierarchyReport analyze_hierarchy(const AccessStructure& g) {
  Relation r = compute_relation(g);
  if (!r.is_transitive()) throw DomainError("computed hierarchy relation is not transitive");
  OrderType t = classify(r);
  int chain = max_chain_length(r);
  return HierarchyReport{std::move(r), t, chain};
}

}  // namespace polyshare
