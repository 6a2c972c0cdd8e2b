#pragma once

// Linear representations of uniform polymatroids over GF(p) and the search
// for an extension vector β whose port is a given support family.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyshare/compat.hpp"
#include "polyshare/core.hpp"
#include "polyshare/gf.hpp"
#include "polyshare/polymatroid.hpp"

namespace polyshare {

/// Subspaces V_1..V_m of K^D with dim(Σ_{x∈X} V_x) = h_{|X|}.
struct Representation {
  std::uint64_t p = 2;
  int ambient_dim = 0;
  /// Columns of block_bases[x] span V_x.
  std::vector<FieldMatrix> block_bases;
  /// multiplicities[k-1] = c_k = g_{k-1} - g_k.
  std::vector<int> multiplicities;
  std::vector<Element> eval_points;
  UniformPolymatroid polymatroid{std::vector<int>{1, 0}};
  /// "vandermonde", "generic" or "explicit".
  std::string construction = "vandermonde";

  int m() const { return polymatroid.m(); }

  /// Columns spanning V_X; a D×0 matrix for the empty set.
  FieldMatrix span_of(Mask x) const {
    FieldMatrix out(ambient_dim, 0, p);
    for (int i : elements(x)) out = hcat(out, block_bases[static_cast<std::size_t>(i)]);
    return out;
  }
};

inline std::uint64_t default_prime(int m) {
  const std::uint64_t lower = std::max<std::uint64_t>(static_cast<std::uint64_t>(m) + 1,
                                                      (std::uint64_t{1} << m) + 1);
  return next_prime_at_least(lower);
}

/// First subset X with rank(V_X) != h_{|X|}, if any.
inline std::optional<Mask> verify_representation(const Representation& r) {
  for (Mask x = 0; x <= full_mask(r.m()); ++x)
    if (rank_of(r.span_of(x)) != r.polymatroid.rank_of(x)) return x;
  return std::nullopt;
}

/// Direct sum of Vandermonde bands: c_k bands of k rows each, where block x
/// contributes the column (1, a_x, ..., a_x^{k-1}) with a_x = x.
inline Representation build_representation(const UniformPolymatroid& z, std::uint64_t p) {
  const int m = z.m();
  detail::require(is_prime(p), std::to_string(p) + " is not prime");
  detail::require(p >= static_cast<std::uint64_t>(m) + 1,
                  "prime must be at least m + 1 = " + std::to_string(m + 1));
  PrimeField f(p);
  Representation r;
  r.p = p;
  r.polymatroid = z;
  r.ambient_dim = z.rank(m);
  for (int x = 0; x < m; ++x) r.eval_points.push_back(static_cast<Element>(x + 1) % p);
  for (int k = 1; k <= m; ++k) r.multiplicities.push_back(z.g(k - 1) - z.g(k));

  std::vector<std::vector<FieldVector>> cols(static_cast<std::size_t>(m));
  int offset = 0;
  for (int k = 1; k <= m; ++k)
    for (int copy = 0; copy < r.multiplicities[static_cast<std::size_t>(k - 1)]; ++copy) {
      for (int x = 0; x < m; ++x) {
        FieldVector col(static_cast<std::size_t>(r.ambient_dim), 0);
        for (int i = 0; i < k; ++i)
          col[static_cast<std::size_t>(offset + i)] = f.pow(r.eval_points[static_cast<std::size_t>(x)], static_cast<std::uint64_t>(i));
        cols[static_cast<std::size_t>(x)].push_back(std::move(col));
      }
      offset += k;
    }
  for (int x = 0; x < m; ++x)
    r.block_bases.push_back(FieldMatrix::from_columns(r.ambient_dim, cols[static_cast<std::size_t>(x)], p));

  if (auto bad = verify_representation(r))
    throw DomainError("representation rank check failed on " + format_subset(*bad));
  return r;
}

/// Increments (a, ..., a, r, 0, ..., 0) with `length` copies of a and
/// 0 <= r < a. Random g_0-dimensional subspaces realize exactly these.
struct GenericPiece {
  int a = 0;
  int length = 0;
  int remainder = 0;

  int dim() const { return a * length + remainder; }
  int at(int i) const { return i < length ? a : (i == length ? remainder : 0); }
};

/// Every way to split g into generic pieces (as a multiset) such that each
/// partial remainder stays nonincreasing, fewest pieces first. The all-ones
/// split is the banded construction up to the choice of points.
inline std::vector<std::vector<GenericPiece>> piece_decompositions(const UniformPolymatroid& z,
                                                                   std::size_t limit = 64) {
  const int m = z.m();
  std::vector<std::vector<GenericPiece>> out;
  std::vector<GenericPiece> current;
  auto key = [](const GenericPiece& q) { return std::tuple(q.a, q.length, q.remainder); };
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& g) {
    if (out.size() >= limit) return;
    if (g[0] == 0) {
      out.push_back(current);
      return;
    }
    for (int a = 1; a <= g[0]; ++a)
      for (int len = 1; len <= m; ++len)
        for (int r = 0; r < (len < m ? a : 1); ++r) {
          GenericPiece piece{a, len, r};
          if (!current.empty() && key(piece) < key(current.back())) continue;
          std::vector<int> rest(g);
          bool ok = true;
          for (int i = 0; i < m && ok; ++i) {
            rest[static_cast<std::size_t>(i)] -= piece.at(i);
            ok = rest[static_cast<std::size_t>(i)] >= 0 &&
                 (i == 0 || rest[static_cast<std::size_t>(i)] <= rest[static_cast<std::size_t>(i - 1)]);
          }
          if (!ok) continue;
          current.push_back(piece);
          rec(rest);
          current.pop_back();
        }
  };
  rec(z.increments());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

/// Direct sum of randomly sampled generic pieces. Pairwise intersections of
/// the V_x differ from pair to pair, unlike the banded construction where all
/// of them contain the rank-one bands.
inline Representation build_generic_representation(const UniformPolymatroid& z, std::uint64_t p,
                                                   const std::vector<GenericPiece>& pieces, std::mt19937_64& rng,
                                                   int max_tries = 50) {
  const int m = z.m();
  detail::require(is_prime(p), std::to_string(p) + " is not prime");
  detail::require(max_tries >= 1, "max_tries must be positive");
  PrimeField f(p);
  Representation r;
  r.p = p;
  r.polymatroid = z;
  r.construction = "generic";
  r.ambient_dim = z.rank(m);
  for (int x = 0; x < m; ++x) r.eval_points.push_back(static_cast<Element>(x + 1) % p);
  for (int k = 1; k <= m; ++k) r.multiplicities.push_back(z.g(k - 1) - z.g(k));

  std::vector<std::vector<FieldVector>> cols(static_cast<std::size_t>(m));
  int offset = 0;
  std::vector<int> total(static_cast<std::size_t>(m), 0);
  for (const auto& piece : pieces)
    for (int i = 0; i < m; ++i) total[static_cast<std::size_t>(i)] += piece.at(i);
  detail::require(total == z.increments(), "pieces do not add up to the increments");
  for (const auto& piece : pieces) {
    const int d = piece.dim();
    std::vector<FieldMatrix> sampled;
    for (int attempt = 0;; ++attempt) {
      if (attempt == max_tries)
        throw DomainError("could not sample a generic piece of dimension " + std::to_string(d) + " over GF(" +
                          std::to_string(p) + ")");
      sampled.clear();
      for (int x = 0; x < m; ++x) {
        std::vector<FieldVector> c;
        for (int j = 0; j < piece.a; ++j) c.push_back(f.random_vector(static_cast<std::size_t>(d), rng));
        sampled.push_back(FieldMatrix::from_columns(d, c, p));
      }
      bool ok = true;
      for (Mask x = 1; x <= full_mask(m) && ok; ++x) {
        FieldMatrix span(d, 0, p);
        for (int i : elements(x)) span = hcat(span, sampled[static_cast<std::size_t>(i)]);
        ok = rank_of(span) == std::min(d, cardinality(x) * piece.a);
      }
      if (ok) break;
    }
    for (int x = 0; x < m; ++x)
      for (int j = 0; j < piece.a; ++j) {
        FieldVector col(static_cast<std::size_t>(r.ambient_dim), 0);
        const FieldVector part = sampled[static_cast<std::size_t>(x)].column(j);
        std::copy(part.begin(), part.end(), col.begin() + offset);
        cols[static_cast<std::size_t>(x)].push_back(std::move(col));
      }
    offset += d;
  }
  for (int x = 0; x < m; ++x)
    r.block_bases.push_back(FieldMatrix::from_columns(r.ambient_dim, cols[static_cast<std::size_t>(x)], p));
  if (auto bad = verify_representation(r))
    throw std::logic_error("generic representation fails the rank check on " + format_subset(*bad));
  return r;
}

struct Extension {
  Representation base;
  FieldVector beta;
  DeltaFamily realized;
};

/// {X : β ∈ V_X}, given by its minimal sets.
inline DeltaFamily realized_family(const Representation& r, const FieldVector& beta) {
  detail::require(static_cast<int>(beta.size()) == r.ambient_dim, "beta has the wrong length");
  detail::require(!is_zero(beta), "beta must be nonzero");
  std::vector<Mask> members;
  for (Mask x = 1; x <= full_mask(r.m()); ++x)
    if (in_span(r.span_of(x), beta)) members.push_back(x);
  if (members.empty()) throw DomainError("beta lies outside the whole ambient span");
  return DeltaFamily::generated_by(r.m(), members);
}

struct BetaSearch {
  std::optional<Extension> extension;
  int tries = 0;
  int dim_w = 0;
  /// Maximal sets outside the family.
  std::vector<Mask> forbidden;
  /// Forbidden sets whose subspace contains all of W.
  std::vector<Mask> containing_w;
  /// capture_counts[i] counts samples rejected by forbidden[i].
  std::vector<int> capture_counts;
  std::string reason;

  explicit operator bool() const { return extension.has_value(); }
};

/// Maximal subsets of J outside the family.
inline std::vector<Mask> maximal_non_members(const DeltaFamily& d) {
  std::vector<Mask> outside;
  for (Mask x = 0; x <= full_mask(d.m()); ++x)
    if (!d.contains(x)) outside.push_back(x);
  std::vector<Mask> out;
  for (Mask y : outside) {
    bool maximal = std::none_of(outside.begin(), outside.end(),
                                [y](Mask w) { return w != y && is_subset(y, w); });
    if (maximal) out.push_back(y);
  }
  return out;
}

/// Samples β uniformly from W∖{0}, W = ∩_{X ∈ min Δ} V_X, until it avoids
/// every maximal non-member subspace.
inline BetaSearch find_beta(const Representation& r, const DeltaFamily& d, int max_tries,
                            std::mt19937_64& rng) {
  detail::require(d.m() == r.m(), "family and representation have different ground sets");
  detail::require(max_tries >= 1, "max_tries must be positive");
  if (!is_compatible(r.polymatroid, d))
    throw DomainError("support family " + d.to_string() + " is not compatible with g = (" +
                      format_increments(r.polymatroid) + ")");
  BetaSearch out;
  std::optional<FieldMatrix> w;
  for (Mask x : d.min_sets()) {
    FieldMatrix vx = column_basis(r.span_of(x));
    w = w ? intersect_column_spaces(*w, vx) : vx;
  }
  out.dim_w = w->cols();
  out.forbidden = maximal_non_members(d);
  out.capture_counts.assign(out.forbidden.size(), 0);
  if (out.dim_w == 0) {
    out.reason = "empty intersection";
    return out;
  }
  std::vector<FieldMatrix> forbidden_spaces;
  for (Mask y : out.forbidden) {
    forbidden_spaces.push_back(r.span_of(y));
    if (column_space_contains(forbidden_spaces.back(), *w)) out.containing_w.push_back(y);
  }
  if (!out.containing_w.empty()) {
    out.reason = "intersection lies inside a forbidden subspace";
    return out;
  }

  PrimeField f(r.p);
  for (out.tries = 1; out.tries <= max_tries; ++out.tries) {
    FieldVector beta = w->times(f.random_vector(static_cast<std::size_t>(w->cols()), rng));
    if (is_zero(beta)) continue;
    bool captured = false;
    for (std::size_t i = 0; i < forbidden_spaces.size() && !captured; ++i)
      if (in_span(forbidden_spaces[i], beta)) {
        ++out.capture_counts[i];
        captured = true;
      }
    if (captured) continue;
    DeltaFamily realized = realized_family(r, beta);
    if (!(realized == d))
      throw std::logic_error("accepted beta realizes " + realized.to_string() + " instead of " +
                             d.to_string());
    out.extension = Extension{r, std::move(beta), std::move(realized)};
    return out;
  }
  out.tries = max_tries;
  out.reason = "no admissible beta within " + std::to_string(max_tries) + " tries";
  return out;
}

struct PortRow {
  Mask x = 0;
  int rank = 0;
  int rank_with_beta = 0;
  bool beta_in_span = false;
  bool in_family = false;
};

struct PortCheck {
  bool ok = true;
  std::optional<Mask> counterexample;
  std::vector<PortRow> transcript;

  explicit operator bool() const { return ok; }
};

/// Checks β ∈ V_X ⟺ X ∈ Δ for every X ⊆ J.
inline PortCheck verify_port(const Extension& e, const DeltaFamily& d) {
  detail::require(d.m() == e.base.m(), "family and extension have different ground sets");
  PortCheck out;
  for (Mask x = 0; x <= full_mask(d.m()); ++x) {
    const FieldMatrix vx = e.base.span_of(x);
    PortRow row;
    row.x = x;
    row.rank = rank_of(vx);
    row.rank_with_beta = rank_of(append_column(vx, e.beta));
    row.beta_in_span = row.rank_with_beta == row.rank;
    row.in_family = d.contains(x);
    if (row.beta_in_span != row.in_family && out.ok) {
      out.ok = false;
      out.counterexample = x;
    }
    out.transcript.push_back(row);
  }
  return out;
}

/// Explicit extension for eta(g) = 2 and min Δ = P_1(X) ∪ P_2(J∖X).
///
/// With a = g_1 and b = g_0 - g_1 the ambient space is K^b × K^a × K^a and
/// V_x = {(α, a_x α)} in the last two factors. When b > 0 each block gets
/// U_x = K^b × V_x, blocks in X are moved by φ(α) = α + α_1 β with β = (0, e_1, 0),
/// and the extension vector is e_1 + β.
inline Extension build_eta2_explicit(const UniformPolymatroid& z, Mask x_set, std::uint64_t p) {
  const int m = z.m();
  detail::require(z.eta() == 2, "explicit construction needs eta(g) = 2");
  detail::require(is_prime(p) && p > static_cast<std::uint64_t>(m), "prime must exceed m");
  detail::require(is_subset(x_set, full_mask(m)), "X outside the ground set");
  detail::require(z.g(0) > z.g(1) || cardinality(x_set) <= 1, "g_0 = g_1 allows |X| <= 1 only");

  const int a = z.g(1);
  const int b = z.g(0) - z.g(1);
  const int dim = b + 2 * a;

  std::vector<Mask> min_sets;
  for (int i : elements(x_set)) min_sets.push_back(singleton(i));
  for (Mask pair : k_subsets(m, 2))
    if ((pair & x_set) == 0) min_sets.push_back(pair);
  DeltaFamily target(m, min_sets);

  Representation r;
  r.p = p;
  r.polymatroid = z;
  r.construction = "explicit";
  r.ambient_dim = dim;
  for (int k = 1; k <= m; ++k) r.multiplicities.push_back(z.g(k - 1) - z.g(k));
  for (int x = 0; x < m; ++x) r.eval_points.push_back(static_cast<Element>(x + 1) % p);

  auto unit = [dim](int i) {
    FieldVector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  // (e_1, 0) in K^a × K^a, which lies outside every V_x because a_x != 0.
  const FieldVector outside = unit(b);

  PrimeField f(p);
  for (int x = 0; x < m; ++x) {
    std::vector<FieldVector> cols;
    for (int i = 0; i < b; ++i) cols.push_back(unit(i));
    for (int i = 0; i < a; ++i) {
      FieldVector v = unit(b + i);
      v[static_cast<std::size_t>(b + a + i)] = r.eval_points[static_cast<std::size_t>(x)];
      cols.push_back(std::move(v));
    }
    if (b > 0 && has(x_set, x)) {
      // φ only moves vectors with a nonzero first coordinate, i.e. the e_1 column.
      for (std::size_t k = 0; k < outside.size(); ++k) cols[0][k] = f.add(cols[0][k], outside[k]);
    }
    r.block_bases.push_back(FieldMatrix::from_columns(dim, cols, p));
  }
  if (auto bad = verify_representation(r))
    throw std::logic_error("explicit construction breaks the rank profile on " + format_subset(*bad));

  FieldVector beta;
  if (b > 0) {
    beta = outside;
    beta[0] = f.add(beta[0], 1);
  } else if (x_set != 0) {
    beta = r.block_bases[static_cast<std::size_t>(elements(x_set).front())].column(0);
  } else {
    beta = outside;
  }
  Extension e{r, beta, realized_family(r, beta)};
  if (!verify_port(e, target))
    throw std::logic_error("explicit construction does not realize " + target.to_string());
  return e;
}

/// X such that min Δ = P_1(X) ∪ P_2(J∖X), if Δ has that shape.
inline std::optional<Mask> eta2_split(const DeltaFamily& d) {
  const int m = d.m();
  Mask x = 0;
  for (Mask a : d.min_sets())
    if (cardinality(a) == 1) x |= a;
  std::vector<Mask> sets;
  for (int i : elements(x)) sets.push_back(singleton(i));
  const Mask rest = full_mask(m) & ~x;
  for (int i : elements(rest))
    for (int j : elements(rest))
      if (i < j) sets.push_back(singleton(i) | singleton(j));
  if (sets.empty() || !(DeltaFamily(m, sets) == d)) return std::nullopt;
  return x;
}

/// Tries, in order: the banded representation, the explicit construction
/// when Δ has the two-level shape and η(g) = 2, then `generic_attempts`
/// samples for each piece decomposition of g. The reported diagnostics are
/// those of the banded attempt unless a later one succeeds.
inline BetaSearch search_extension(const UniformPolymatroid& z, const DeltaFamily& d, std::uint64_t p,
                                   int max_tries, std::mt19937_64& rng, int generic_attempts = 3) {
  detail::require(generic_attempts >= 0, "generic_attempts must be non-negative");
  BetaSearch out = find_beta(build_representation(z, p), d, max_tries, rng);
  if (out) return out;

  if (auto x = eta2_split(d); x && z.eta() == 2 && (z.g(0) > z.g(1) || cardinality(*x) <= 1)) {
    BetaSearch explicit_result = out;
    explicit_result.extension = build_eta2_explicit(z, *x, p);
    explicit_result.reason.clear();
    return explicit_result;
  }

  for (const auto& pieces : piece_decompositions(z))
    for (int i = 0; i < generic_attempts; ++i) {
      BetaSearch next = find_beta(build_generic_representation(z, p, pieces, rng), d, max_tries, rng);
      if (next) return next;
    }
  return out;
}

}  // namespace polyshare
