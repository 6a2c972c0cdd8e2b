#pragma once

// Ideal linear secret sharing from a verified extension: one vector per
// participant inside its block's subspace, one field element per share.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyshare/access.hpp"
#include "polyshare/gf.hpp"
#include "polyshare/represent.hpp"

namespace polyshare {

inline constexpr int kDefaultVerifyCap = 14;

/// Participants are numbered globally, block by block; `label` gives the
/// 1-based "block.index" form.
struct SchemeInstance {
  Extension extension;
  Partition blocks;
  std::vector<FieldVector> participant_vectors;
  AccessStructure gamma;
  std::uint64_t seed = 0;
  bool verified = false;

  std::uint64_t p() const { return extension.base.p; }
  int participants() const { return blocks.participants(); }

  int block_of(int participant) const {
    detail::require(participant >= 0 && participant < participants(), "participant out of range");
    int x = 0;
    while (participant >= blocks[x]) participant -= blocks[x++];
    return x;
  }

  /// Global index of participant `index` (0-based) of block `x` (0-based).
  int index_of(int x, int index) const {
    detail::require(x >= 0 && x < blocks.m(), "block out of range");
    detail::require(index >= 0 && index < blocks[x], "participant index out of range for block " +
                                                         std::to_string(x + 1));
    int k = 0;
    for (int b = 0; b < x; ++b) k += blocks[b];
    return k + index;
  }

  std::string label(int participant) const {
    const int x = block_of(participant);
    return std::to_string(x + 1) + "." + std::to_string(participant - index_of(x, 0) + 1);
  }

  /// π(A): how many members of A fall in each block.
  PointVector profile(const std::vector<int>& subset) const {
    std::vector<int> counts(static_cast<std::size_t>(blocks.m()), 0);
    for (int k : subset) ++counts[static_cast<std::size_t>(block_of(k))];
    return PointVector(counts);
  }

  FieldMatrix span_of(const std::vector<int>& subset) const {
    std::vector<FieldVector> cols;
    for (int k : subset) cols.push_back(participant_vectors[static_cast<std::size_t>(k)]);
    return FieldMatrix::from_columns(extension.base.ambient_dim, cols, p());
  }
};

/// Parses "1.1,2.2" (block.index, both 1-based) into global indices.
inline std::vector<int> parse_participants(const SchemeInstance& s, const std::string& text) {
  std::vector<int> out;
  for (const auto& raw : detail::split(text, ',')) {
    const std::string item = detail::trim(raw);
    if (item.empty()) continue;
    const auto dot = item.find('.');
    detail::require(dot != std::string::npos, "participant '" + item + "' must be block.index");
    const int x = detail::parse_int(item.substr(0, dot));
    const int i = detail::parse_int(item.substr(dot + 1));
    detail::require(x >= 1 && i >= 1, "participant '" + item + "' uses 1-based numbering");
    const int k = s.index_of(x - 1, i - 1);
    detail::require(std::find(out.begin(), out.end(), k) == out.end(),
                    "participant " + item + " listed twice");
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> subset_members(std::uint32_t bits) {
  std::vector<int> out;
  for (int k = 0; bits != 0; ++k, bits >>= 1U)
    if (bits & 1U) out.push_back(k);
  return out;
}

struct SchemeCheck {
  bool ok = true;
  std::optional<std::vector<int>> counterexample;
  long subsets_checked = 0;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline bool subset_agrees(const SchemeInstance& s, const std::vector<int>& subset) {
  const bool recovers = in_span(s.span_of(subset), s.extension.beta);
  return recovers == s.gamma.is_authorized(s.profile(subset));
}

}  // namespace detail

/// Every participant subset recovers β exactly when its profile is authorized.
inline SchemeCheck verify_scheme(const SchemeInstance& s, int cap = kDefaultVerifyCap) {
  const int n = s.participants();
  detail::require(n <= cap, "scheme has " + std::to_string(n) + " participants, verification cap is " +
                                std::to_string(cap));
  SchemeCheck out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    ++out.subsets_checked;
    auto subset = subset_members(bits);
    if (!detail::subset_agrees(s, subset)) {
      out.ok = false;
      out.counterexample = std::move(subset);
      return out;
    }
  }
  return out;
}

/// Samples participant vectors in V_x one participant at a time, checking the
/// new subsets after each draw. `max_tries` bounds the draws per participant
/// and the number of full restarts.
inline SchemeInstance assign_vectors(const Extension& e, const Partition& blocks, std::mt19937_64& rng,
                                     int max_tries = 50, int cap = kDefaultVerifyCap,
                                     std::uint64_t seed = 0) {
  detail::require(max_tries >= 1, "max_tries must be positive");
  detail::require(verify_port(e, e.realized).ok, "extension does not realize its own family");
  AccessStructure gamma = build_gamma(e.base.polymatroid, e.realized, blocks);
  detail::require(blocks.participants() <= cap,
                  "scheme has " + std::to_string(blocks.participants()) +
                      " participants, verification cap is " + std::to_string(cap));

  SchemeInstance s{e, blocks, {}, gamma, seed, false};
  const PrimeField f(e.base.p);
  const int n = blocks.participants();
  std::vector<int> last_failure;
  for (int restart = 0; restart < max_tries; ++restart) {
    s.participant_vectors.clear();
    bool stuck = false;
    for (int k = 0; k < n && !stuck; ++k) {
      const FieldMatrix& basis = e.base.block_bases[static_cast<std::size_t>(s.block_of(k))];
      bool placed = false;
      for (int attempt = 0; attempt < max_tries && !placed; ++attempt) {
        s.participant_vectors.push_back(basis.times(f.random_vector(static_cast<std::size_t>(basis.cols()), rng)));
        placed = true;
        // Only subsets whose largest member is k are new.
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k) && placed; ++bits) {
          auto subset = subset_members(bits);
          subset.push_back(k);
          if (!detail::subset_agrees(s, subset)) {
            placed = false;
            last_failure = std::move(subset);
          }
        }
        if (!placed) s.participant_vectors.pop_back();
      }
      if (!placed) stuck = true;
    }
    if (stuck) continue;
    auto check = verify_scheme(s, cap);
    if (!check) throw std::logic_error("incremental verification missed a failing subset");
    s.verified = true;
    return s;
  }
  std::string witness;
  for (int k : last_failure) witness += (witness.empty() ? "" : ",") + s.label(k);
  throw DomainError("could not assign participant vectors; last failing subset {" + witness + "}");
}

struct ShareBundle {
  Element secret = 0;
  std::vector<Element> shares;
  std::uint64_t seed = 0;

  friend bool operator==(const ShareBundle&, const ShareBundle&) = default;
};

/// Draws r uniformly from {r : <β, r> = secret}; participant k gets <v_k, r>.
inline ShareBundle distribute(const SchemeInstance& s, Element secret, std::uint64_t seed) {
  detail::require(s.verified, "scheme instance has not been verified");
  detail::require(secret < s.p(), "secret must be a field element below p = " + std::to_string(s.p()));
  const PrimeField f(s.p());
  const FieldVector& beta = s.extension.beta;
  std::mt19937_64 rng(seed);
  FieldVector r = f.random_vector(beta.size(), rng);
  std::size_t pivot = 0;
  while (beta[pivot] == 0) ++pivot;
  r[pivot] = 0;
  const Element rest = f.dot(beta, r);
  r[pivot] = f.mul(f.sub(secret, rest), f.inv(beta[pivot]));

  ShareBundle out;
  out.secret = secret;
  out.seed = seed;
  for (const auto& v : s.participant_vectors) out.shares.push_back(f.dot(v, r));
  return out;
}

/// Solves β = Σ λ_k v_k over the subset and combines its shares.
inline Element reconstruct(const SchemeInstance& s, const std::vector<int>& subset,
                           const std::vector<Element>& shares) {
  detail::require(static_cast<int>(shares.size()) == s.participants(), "share count does not match the scheme");
  auto lambda = solve_in_span(s.span_of(subset), s.extension.beta);
  if (!lambda) throw DomainError("no reconstruction coefficients exist for this set");
  const PrimeField f(s.p());
  Element secret = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    secret = f.add(secret, f.mul((*lambda)[i], shares[static_cast<std::size_t>(subset[i])]));
  return secret;
}

struct PrivacyReport {
  /// β lies outside the span of the subset's vectors.
  bool exact_private = true;
  int trials = 0;
  /// Homogeneity statistic comparing share tuples for secret 0 and secret 1.
  double chi_square = 0.0;
  int observed_cells = 0;
};

inline PrivacyReport privacy_check(const SchemeInstance& s, const std::vector<int>& subset, int trials,
                                   std::uint64_t seed) {
  detail::require(trials >= 0, "trials must be non-negative");
  detail::require(!s.gamma.is_authorized(s.profile(subset)), "privacy check needs an unauthorized set");
  PrivacyReport out;
  out.trials = trials;
  out.exact_private = !in_span(s.span_of(subset), s.extension.beta);
  if (subset.empty() || trials == 0) return out;

  std::mt19937_64 seeds(seed);
  std::map<std::vector<Element>, std::pair<int, int>> counts;
  for (int t = 0; t < trials; ++t)
    for (Element secret : {Element{0}, Element{1}}) {
      const ShareBundle b = distribute(s, secret, seeds());
      std::vector<Element> seen;
      for (int k : subset) seen.push_back(b.shares[static_cast<std::size_t>(k)]);
      auto& c = counts[seen];
      (secret == 0 ? c.first : c.second) += 1;
    }
  for (const auto& [key, c] : counts) {
    const double diff = c.first - c.second;
    out.chi_square += diff * diff / (c.first + c.second);
  }
  out.observed_cells = static_cast<int>(counts.size());
  return out;
}

}  // namespace polyshare
