#pragma once

// Compatibility check, access structure and hierarchy in one call. This is the
// code path behind both the single-instance command and every grid cell.

#include <optional>
#include <string>

#include "polyshare/access.hpp"
#include "polyshare/compat.hpp"
#include "polyshare/hierarchy.hpp"

namespace polyshare {

struct Classification {
  CompatibilityResult compat;
  std::optional<AccessStructure> gamma;
  std::optional<HierarchyReport> hierarchy;

  bool compatible() const { return compat.compatible; }

  /// Grid cell text: "-" when incompatible, otherwise the letter code (m = 4)
  /// or the order kind name.
  std::string cell() const {
    if (!compat.compatible) return "-";
    const int m = gamma->m();
    if (m == 4) return table_code(hierarchy->type, m);
    return to_string(hierarchy->type.kind);
  }
};

inline Classification classify_instance(const UniformPolymatroid& z, const DeltaFamily& d,
                                        std::optional<Partition> blocks = std::nullopt) {
  Classification out;
  out.compat = is_compatible(z, d);
  if (!out.compat) return out;
  out.gamma = build_gamma(z, d, std::move(blocks));
  out.hierarchy = analyze_hierarchy(*out.gamma);
  return out;
}

}  // namespace polyshare
