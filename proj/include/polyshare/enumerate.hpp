#pragma once

// Support families up to relabeling of blocks, increment-sequence sign
// patterns, the full classification grid, and the sign-pattern scan.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyshare/classify.hpp"
#include "polyshare/compat.hpp"
#include "polyshare/core.hpp"
#include "polyshare/hierarchy.hpp"
#include "polyshare/polymatroid.hpp"

namespace polyshare {

inline Mask permute_mask(Mask x, const std::vector<int>& perm) {
  Mask out = 0;
  for (int i : elements(x)) out |= singleton(perm[static_cast<std::size_t>(i)]);
  return out;
}

inline DeltaFamily permute_family(const DeltaFamily& d, const std::vector<int>& perm) {
  std::vector<Mask> sets;
  for (Mask a : d.min_sets()) sets.push_back(permute_mask(a, perm));
  return DeltaFamily(d.m(), std::move(sets));
}

/// Lexicographically least sorted mask list over all m! relabelings.
inline std::vector<Mask> canonical_encoding(const DeltaFamily& d) {
  const int m = d.m();
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<Mask>> best;
  do {
    std::vector<Mask> enc;
    for (Mask a : d.min_sets()) enc.push_back(permute_mask(a, perm));
    std::sort(enc.begin(), enc.end());
    if (!best || enc < *best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

inline DeltaFamily canonical_form(const DeltaFamily& d) {
  return DeltaFamily(d.m(), canonical_encoding(d));
}

struct CanonicalDelta {
  DeltaFamily representative;
  int orbit_size = 0;
};

/// Every nonempty antichain of nonempty subsets of an m-set.
inline std::vector<std::vector<Mask>> all_antichains(int m) {
  const Mask full = full_mask(m);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  std::function<void(Mask)> rec = [&](Mask next) {
    if (next > full) {
      if (!chosen.empty()) out.push_back(chosen);
      return;
    }
    rec(next + 1);
    bool comparable = std::any_of(chosen.begin(), chosen.end(), [next](Mask a) {
      return is_subset(a, next) || is_subset(next, a);
    });
    if (!comparable) {
      chosen.push_back(next);
      rec(next + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  return out;
}

/// One canonical representative per relabeling orbit, ordered by encoding.
inline std::vector<CanonicalDelta> enumerate_deltas(int m) {
  detail::require(m >= 2 && m <= 5, "support family enumeration supports 2 <= m <= 5");
  std::map<std::vector<Mask>, int> orbits;
  for (const auto& sets : all_antichains(m)) ++orbits[canonical_encoding(DeltaFamily(m, sets))];
  std::vector<CanonicalDelta> out;
  for (const auto& [enc, count] : orbits) out.push_back({DeltaFamily(m, enc), count});
  return out;
}

/// sgn(g_{i-1} - g_i) for i = 1..m (the last entry is sgn(g_{m-1})).
inline std::vector<int> signature_of(const UniformPolymatroid& z) {
  std::vector<int> s;
  for (int i = 1; i <= z.m(); ++i) s.push_back(z.g(i - 1) > z.g(i) ? 1 : 0);
  return s;
}

/// Entrywise-minimal increment sequence with the given sign pattern.
inline UniformPolymatroid minimal_representative(const std::vector<int>& signature) {
  const int m = static_cast<int>(signature.size());
  detail::require(std::any_of(signature.begin(), signature.end(), [](int b) { return b != 0; }),
                  "an all-flat sign pattern is not realizable");
  std::vector<int> g(static_cast<std::size_t>(m), 0);
  int next = 0;  // g_m
  for (int i = m; i >= 1; --i) {
    detail::require(signature[static_cast<std::size_t>(i - 1)] == 0 ||
                        signature[static_cast<std::size_t>(i - 1)] == 1,
                    "sign pattern entries must be 0 or 1");
    next += signature[static_cast<std::size_t>(i - 1)];
    g[static_cast<std::size_t>(i - 1)] = next;
  }
  return UniformPolymatroid(std::move(g));
}

struct SignatureClass {
  std::vector<int> signature;
  UniformPolymatroid representative;
};

/// All 2^m - 1 realizable sign patterns. Ordered by g_{m-1} > 0, then eta,
/// then representative descending.
inline std::vector<SignatureClass> enumerate_signatures(int m) {
  detail::require(m >= 2 && m <= kMaxGroundSet, "m out of range");
  std::vector<SignatureClass> out;
  for (Mask bits = 1; bits <= full_mask(m); ++bits) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i) s.push_back(has(bits, i) ? 1 : 0);
    out.push_back({s, minimal_representative(s)});
  }
  std::sort(out.begin(), out.end(), [m](const SignatureClass& a, const SignatureClass& b) {
    const auto& ga = a.representative;
    const auto& gb = b.representative;
    const bool ta = ga.g(m - 1) > 0, tb = gb.g(m - 1) > 0;
    if (ta != tb) return tb;
    if (ga.eta() != gb.eta()) return ga.eta() < gb.eta();
    return ga.increments() > gb.increments();
  });
  return out;
}

// Reference layout of the m = 4 grid: row families and column
// sequences in the order they appear.

inline const std::vector<std::string>& printed_rows_m4() {
  static const std::vector<std::string> rows = {
      "{1}",
      "{1};{2}",
      "{1};{2};{3}",
      "{1};{2};{3};{4}",
      "{1};{2};{3,4}",
      "{1};{2,3}",
      "{1};{2,3};{2,4}",
      "{1};{2,3};{2,4};{3,4}",
      "{1};{2,3,4}",
      "{1,2}",
      "{1,2};{1,3}",
      "{1,2};{3,4}",
      "{1,2};{1,3};{1,4}",
      "{1,2};{1,3};{2,3}",
      "{1,2};{2,3};{1,4}",
      "{1,3};{2,3};{1,4};{2,4}",
      "{1,2};{1,3};{2,3};{1,4}",
      "{1,2};{1,3};{2,3};{1,4};{2,4}",
      "{1,2};{1,3};{2,3};{1,4};{2,4};{3,4}",
      "{1,2};{1,3,4}",
      "{1,2};{1,3};{2,3,4}",
      "{1,2};{1,3};{1,4};{2,3,4}",
      "{1,2};{1,3,4};{2,3,4}",
      "{1,2,3}",
      "{1,2,3};{1,2,4}",
      "{1,2,3};{1,2,4};{1,3,4}",
      "{1,2,3};{1,2,4};{1,3,4};{2,3,4}",
      "{1,2,3,4}",
  };
  return rows;
}

inline const std::vector<std::vector<int>>& printed_columns_m4() {
  static const std::vector<std::vector<int>> cols = {
      {1, 0, 0, 0}, {2, 1, 0, 0}, {1, 1, 0, 0}, {3, 2, 1, 0}, {2, 2, 1, 0},
      {2, 1, 1, 0}, {1, 1, 1, 0}, {3, 2, 1, 1}, {2, 2, 1, 1}, {4, 3, 2, 1},
      {3, 3, 2, 1}, {3, 2, 2, 1}, {2, 2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1},
  };
  return cols;
}

struct ClassificationTable {
  int m = 0;
  std::vector<DeltaFamily> rows;
  std::vector<UniformPolymatroid> columns;
  /// cells[row][column]: "-" when incompatible, else the order code.
  std::vector<std::vector<std::string>> cells;
};

/// Grid of classified cells. For m = 4 rows and columns follow the printed
/// layout; otherwise enumeration order.
inline ClassificationTable build_table(int m) {
  ClassificationTable t;
  t.m = m;
  if (m == 4) {
    std::set<std::vector<Mask>> seen;
    const auto classes = enumerate_deltas(4);
    for (const auto& text : printed_rows_m4()) {
      DeltaFamily d = DeltaFamily::parse(text, 4);
      if (!seen.insert(canonical_encoding(d)).second)
        throw DomainError("printed row " + text + " repeats a relabeling class");
      t.rows.push_back(std::move(d));
    }
    if (seen.size() != classes.size())
      throw DomainError("printed rows do not cover every relabeling class");
    for (const auto& g : printed_columns_m4()) t.columns.emplace_back(g);
  } else {
    for (auto& c : enumerate_deltas(m)) t.rows.push_back(std::move(c.representative));
    for (auto& s : enumerate_signatures(m)) t.columns.push_back(std::move(s.representative));
  }
  for (const auto& d : t.rows) {
    std::vector<std::string> line;
    for (const auto& z : t.columns) line.push_back(classify_instance(z, d).cell());
    t.cells.push_back(std::move(line));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Sign-pattern scan: compare the hierarchy of a minimal representative with
// that of amplified sequences sharing its sign pattern.

struct Transform {
  std::string name;
  std::function<std::vector<int>(const std::vector<int>&)> apply;
};

/// "add<k>" adds k to every nonzero entry, "scale<k>" multiplies them by k.
inline Transform parse_transform(const std::string& name) {
  auto suffix_int = [&](std::size_t prefix_len) {
    const std::string digits = name.substr(prefix_len);
    int k = detail::parse_int(digits);
    detail::require(k >= 1, "transform amount must be positive: " + name);
    return k;
  };
  if (name.rfind("add", 0) == 0) {
    const int k = suffix_int(3);
    return {name, [k](const std::vector<int>& g) {
              std::vector<int> out = g;
              for (int& v : out)
                if (v != 0) v += k;
              return out;
            }};
  }
  if (name.rfind("scale", 0) == 0) {
    const int k = suffix_int(5);
    return {name, [k](const std::vector<int>& g) {
              std::vector<int> out = g;
              for (int& v : out) v *= k;
              return out;
            }};
  }
  throw InvalidArgument("unknown transform '" + name + "' (expected add<k> or scale<k>)");
}

/// Applies a transform and checks that the result is a valid sequence with
/// the same sign pattern.
inline UniformPolymatroid amplify(const UniformPolymatroid& z, const Transform& t) {
  std::vector<int> g = t.apply(z.increments());
  detail::require(static_cast<int>(g.size()) == z.m(), "transform " + t.name + " changed the length");
  detail::require(!g.empty() && g.front() > 0, "transform " + t.name + " made g_0 non-positive");
  for (std::size_t i = 1; i < g.size(); ++i)
    detail::require(g[i] <= g[i - 1] && g[i] >= 0,
                    "transform " + t.name + " broke monotonicity");
  UniformPolymatroid out(std::move(g));
  detail::require(signature_of(out) == signature_of(z),
                  "transform " + t.name + " changed the sign pattern");
  return out;
}

struct ScanMismatch {
  std::string transform;
  UniformPolymatroid base;
  UniformPolymatroid amplified;
  DeltaFamily delta;
  Relation base_relation;
  Relation amplified_relation;
};

struct ScanReport {
  int m = 0;
  std::vector<std::string> transforms;
  int pairs_compared = 0;
  /// (signature, family) pairs compatible with exactly one of the two sequences.
  int compatibility_disagreements = 0;
  std::vector<ScanMismatch> mismatches;
};

inline ScanReport conjecture_scan(int m, const std::vector<Transform>& transforms) {
  ScanReport report;
  report.m = m;
  const auto sigs = enumerate_signatures(m);
  const auto deltas = enumerate_deltas(m);
  std::vector<std::pair<UniformPolymatroid, UniformPolymatroid>> pairs;
  for (const auto& t : transforms) {
    report.transforms.push_back(t.name);
    for (const auto& s : sigs) pairs.emplace_back(s.representative, amplify(s.representative, t));
  }
  std::size_t pair_index = 0;
  for (const auto& t : transforms) {
    for (std::size_t si = 0; si < sigs.size(); ++si, ++pair_index) {
      const auto& [base, amp] = pairs[pair_index];
      for (const auto& cd : deltas) {
        const auto a = classify_instance(base, cd.representative);
        const auto b = classify_instance(amp, cd.representative);
        if (a.compatible() != b.compatible()) ++report.compatibility_disagreements;
        if (!a.compatible() || !b.compatible()) continue;
        ++report.pairs_compared;
        if (!(a.hierarchy->relation == b.hierarchy->relation))
          report.mismatches.push_back({t.name, base, amp, cd.representative, a.hierarchy->relation,
                                       b.hierarchy->relation});
      }
    }
  }
  return report;
}

}  // namespace polyshare
