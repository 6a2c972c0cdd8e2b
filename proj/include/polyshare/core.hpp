#pragma once

// Ground-set indexing, subset masks and integer point vectors.
//
// Blocks are numbered 0..m-1 internally. Every textual form (parsing and
// formatting) is 1-based, so "{1,3}" is the mask 0b101.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "polyshare/error.hpp"

namespace polyshare {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 20;

struct GroundSet {
  int m;

  explicit GroundSet(int size) : m(size) {
    detail::require(size >= 2 && size <= kMaxGroundSet,
                    "ground set size must be in [2, " + std::to_string(kMaxGroundSet) + "]");
  }

  Mask full() const { return (Mask{1} << m) - 1; }
  std::uint32_t subset_count() const { return std::uint32_t{1} << m; }
};

inline Mask full_mask(int m) { return (Mask{1} << m) - 1; }
inline int cardinality(Mask x) { return std::popcount(x); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool has(Mask x, int i) { return (x >> i) & 1U; }
inline Mask singleton(int i) { return Mask{1} << i; }

/// Elements of a mask in ascending order.
inline std::vector<int> elements(Mask x) {
  std::vector<int> out;
  for (int i = 0; x != 0; ++i, x >>= 1)
    if (x & 1U) out.push_back(i);
  return out;
}

/// All k-element subsets of a ground set of size m, ascending by mask value.
inline std::vector<Mask> k_subsets(int m, int k) {
  std::vector<Mask> out;
  for (Mask x = 0; x <= full_mask(m); ++x)
    if (cardinality(x) == k) out.push_back(x);
  return out;
}

/// Non-negative integer vector indexed by blocks.
class PointVector {
 public:
  PointVector() = default;
  explicit PointVector(int m) : coords_(static_cast<std::size_t>(m), 0) {}
  PointVector(std::initializer_list<int> values) : coords_(values) { check(); }
  explicit PointVector(std::vector<int> values) : coords_(std::move(values)) { check(); }

  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  int modulus() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

  Mask support() const {
    Mask s = 0;
    for (int i = 0; i < size(); ++i)
      if (coords_[static_cast<std::size_t>(i)] != 0) s |= singleton(i);
    return s;
  }

  /// Lexicographic order, used only for deterministic output.
  friend auto operator<=>(const PointVector&, const PointVector&) = default;
  friend bool operator==(const PointVector&, const PointVector&) = default;

 private:
  void check() const {
    for (int v : coords_) detail::require(v >= 0, "vector coordinates must be non-negative");
  }

  std::vector<int> coords_;
};

/// Coordinatewise partial order.
inline bool leq(const PointVector& a, const PointVector& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mask support_of(const PointVector& v) { return v.support(); }

inline PointVector restrict_to(const PointVector& v, Mask x) {
  PointVector out(v.size());
  for (int i = 0; i < v.size(); ++i)
    if (has(x, i)) out[i] = v[i];
  return out;
}

/// e_z for a 1-based block index z.
inline PointVector unit_vector(int m, int z) {
  detail::require(m >= 1, "dimension must be positive");
  detail::require(z >= 1 && z <= m,
                  "block index " + std::to_string(z) + " out of range 1.." + std::to_string(m));
  PointVector e(m);
  e[z - 1] = 1;
  return e;
}

// ---------------------------------------------------------------------------
// Text syntax: subsets "{1,3,4}", families "{1};{2,3}", vectors "(1,0,2,0)".

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline int parse_int(const std::string& raw) {
  std::string s = trim(raw);
  require(!s.empty(), "expected an integer");
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not an integer: '" + s + "'");
  }
  require(used == s.size(), "not an integer: '" + s + "'");
  require(value >= -(1LL << 31) && value < (1LL << 31), "integer out of range: " + s);
  return static_cast<int>(value);
}

}  // namespace detail

/// Comma-separated integers, e.g. "3,2,1,1".
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string t = detail::trim(text);
  detail::require(!t.empty(), "empty integer list");
  for (const auto& part : detail::split(t, ',')) out.push_back(detail::parse_int(part));
  return out;
}

inline Mask parse_subset(const std::string& text, int m) {
  std::string t = detail::trim(text);
  detail::require(t.size() >= 2 && t.front() == '{' && t.back() == '}',
                  "subset must look like {1,2}: '" + t + "'");
  std::string body = detail::trim(t.substr(1, t.size() - 2));
  Mask x = 0;
  if (body.empty()) return x;
  for (const auto& part : detail::split(body, ',')) {
    int z = detail::parse_int(part);
    detail::require(z >= 1 && z <= m,
                    "element " + std::to_string(z) + " out of range 1.." + std::to_string(m));
    detail::require(!has(x, z - 1), "repeated element " + std::to_string(z));
    x |= singleton(z - 1);
  }
  return x;
}

inline std::vector<Mask> parse_family(const std::string& text, int m) {
  std::vector<Mask> out;
  std::string t = detail::trim(text);
  detail::require(!t.empty(), "empty family");
  for (const auto& part : detail::split(t, ';')) out.push_back(parse_subset(part, m));
  return out;
}

/// Largest 1-based element mentioned in a family string, for inferring m.
inline int max_element_in(const std::string& family_text) {
  int best = 0;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) best = std::max(best, detail::parse_int(digits));
    digits.clear();
  };
  for (char c : family_text) {
    if (c >= '0' && c <= '9')
      digits.push_back(c);
    else
      flush();
  }
  flush();
  return best;
}

inline PointVector parse_vector(const std::string& text) {
  std::string t = detail::trim(text);
  detail::require(t.size() >= 2 && t.front() == '(' && t.back() == ')',
                  "vector must look like (1,0,2): '" + t + "'");
  return PointVector(parse_int_list(t.substr(1, t.size() - 2)));
}

inline std::string format_subset(Mask x) {
  std::string out = "{";
  bool first = true;
  for (int i : elements(x)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

inline std::string format_family(const std::vector<Mask>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ";";
    out += format_subset(sets[i]);
  }
  return out;
}

inline std::string format_vector(const PointVector& v) {
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

/// 1-based element list, the form used in JSON output.
inline std::vector<int> to_one_based(Mask x) {
  std::vector<int> out;
  for (int i : elements(x)) out.push_back(i + 1);
  return out;
}

inline Mask from_one_based(const std::vector<int>& items, int m) {
  Mask x = 0;
  for (int z : items) {
    detail::require(z >= 1 && z <= m, "element " + std::to_string(z) + " out of range");
    x |= singleton(z - 1);
  }
  return x;
}

}  // namespace polyshare
