#pragma once

// JSON round-tripping for matrices, scheme instances and share bundles.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "polyshare/enumerate.hpp"
#include "polyshare/scheme.hpp"

namespace polyshare {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

inline Json matrix_to_json(const FieldMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    entries.push_back(std::move(row));
  }
  return {{"p", m.p()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline FieldMatrix matrix_from_json(const Json& j) {
  const auto p = j.at("p").get<std::uint64_t>();
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  FieldMatrix m(rows, cols, p);
  const auto& entries = j.at("entries");
  detail::require(static_cast<int>(entries.size()) == rows, "matrix row count mismatch");
  for (int r = 0; r < rows; ++r) {
    const auto& row = entries.at(static_cast<std::size_t>(r));
    detail::require(static_cast<int>(row.size()) == cols, "matrix column count mismatch");
    for (int c = 0; c < cols; ++c) {
      const auto v = row.at(static_cast<std::size_t>(c)).get<std::uint64_t>();
      detail::require(v < p, "matrix entry outside the field");
      m.at(r, c) = v;
    }
  }
  return m;
}

inline Json subset_to_json(Mask x) { return to_one_based(x); }

/// Rows indexed by y, columns by x; entry 1 when P_y ≼ P_x.
inline Json relation_to_json(const Relation& r) {
  Json rows = Json::array();
  for (int y = 0; y < r.m(); ++y) {
    Json row = Json::array();
    for (int x = 0; x < r.m(); ++x) row.push_back(r.at(y, x) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json scan_report_to_json(const ScanReport& report) {
  Json mismatches = Json::array();
  for (const auto& mm : report.mismatches)
    mismatches.push_back({{"transform", mm.transform},
                          {"g", mm.base.increments()},
                          {"g_amplified", mm.amplified.increments()},
                          {"delta", mm.delta.to_string()},
                          {"relation", relation_to_json(mm.base_relation)},
                          {"relation_amplified", relation_to_json(mm.amplified_relation)}});
  return {{"schema_version", kSchemaVersion},
          {"m", report.m},
          {"transforms", report.transforms},
          {"pairs_compared", report.pairs_compared},
          {"compatibility_disagreements", report.compatibility_disagreements},
          {"mismatches", std::move(mismatches)}};
}

inline Json instance_to_json(const SchemeInstance& s) {
  const Representation& r = s.extension.base;
  Json bases = Json::array();
  for (const auto& b : r.block_bases) bases.push_back(matrix_to_json(b));
  Json participants = Json::array();
  for (int k = 0; k < s.participants(); ++k)
    participants.push_back({{"label", s.label(k)}, {"vector", s.participant_vectors[static_cast<std::size_t>(k)]}});
  return {{"schema_version", kSchemaVersion},
          {"p", r.p},
          {"construction", r.construction},
          {"g", r.polymatroid.increments()},
          {"delta", s.extension.realized.to_string()},
          {"blocks", s.blocks.sizes()},
          {"ambient_dim", r.ambient_dim},
          {"bases", std::move(bases)},
          {"beta", s.extension.beta},
          {"participants", std::move(participants)},
          {"seed", s.seed}};
}

/// Rebuilds an instance and re-runs every check before marking it verified.
inline SchemeInstance instance_from_json(const Json& j, int cap = kDefaultVerifyCap) {
  detail::require(j.value("schema_version", 0) == kSchemaVersion, "unsupported instance schema version");
  UniformPolymatroid z(j.at("g").get<std::vector<int>>());
  const auto p = j.at("p").get<std::uint64_t>();
  detail::require(is_prime(p), "instance modulus is not prime");

  Representation r;
  r.p = p;
  r.polymatroid = z;
  r.construction = j.value("construction", std::string("vandermonde"));
  r.ambient_dim = j.at("ambient_dim").get<int>();
  for (int k = 1; k <= z.m(); ++k) r.multiplicities.push_back(z.g(k - 1) - z.g(k));
  for (int x = 0; x < z.m(); ++x) r.eval_points.push_back(static_cast<Element>(x + 1) % p);
  for (const auto& b : j.at("bases")) {
    FieldMatrix m = matrix_from_json(b);
    detail::require(m.p() == p && m.rows() == r.ambient_dim, "basis matrix has the wrong shape");
    r.block_bases.push_back(std::move(m));
  }
  detail::require(static_cast<int>(r.block_bases.size()) == z.m(), "instance needs one basis per block");
  if (auto bad = verify_representation(r))
    throw DomainError("stored bases fail the rank check on " + format_subset(*bad));

  DeltaFamily delta = DeltaFamily::parse(j.at("delta").get<std::string>(), z.m());
  auto beta = j.at("beta").get<FieldVector>();
  detail::require(static_cast<int>(beta.size()) == r.ambient_dim, "beta has the wrong length");
  for (Element e : beta) detail::require(e < p, "beta entry outside the field");
  Extension e{r, beta, realized_family(r, beta)};
  if (!(e.realized == delta))
    throw DomainError("stored beta realizes " + e.realized.to_string() + ", not " + delta.to_string());

  Partition blocks(j.at("blocks").get<std::vector<int>>());
  SchemeInstance s{e, blocks, {}, build_gamma(z, delta, blocks), j.value("seed", std::uint64_t{0}), false};
  const auto& participants = j.at("participants");
  detail::require(static_cast<int>(participants.size()) == s.participants(),
                  "participant count does not match the block sizes");
  for (int k = 0; k < s.participants(); ++k) {
    auto v = participants.at(static_cast<std::size_t>(k)).at("vector").get<FieldVector>();
    detail::require(static_cast<int>(v.size()) == r.ambient_dim, "participant vector has the wrong length");
    for (Element x : v) detail::require(x < p, "participant vector entry outside the field");
    if (!in_span(r.block_bases[static_cast<std::size_t>(s.block_of(k))], v))
      throw DomainError("participant " + s.label(k) + " has a vector outside its block subspace");
    s.participant_vectors.push_back(std::move(v));
  }
  auto check = verify_scheme(s, cap);
  if (!check) throw DomainError("stored scheme fails verification");
  s.verified = true;
  return s;
}

inline Json bundle_to_json(const ShareBundle& b) {
  return {{"schema_version", kSchemaVersion}, {"secret", b.secret}, {"shares", b.shares}, {"seed", b.seed}};
}

inline ShareBundle bundle_from_json(const Json& j) {
  detail::require(j.value("schema_version", 0) == kSchemaVersion, "unsupported bundle schema version");
  ShareBundle b;
  b.secret = j.value("secret", Element{0});
  b.shares = j.at("shares").get<std::vector<Element>>();
  b.seed = j.value("seed", std::uint64_t{0});
  return b;
}

}  // namespace polyshare
