#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "eldecomp/decomp.hpp"
#include "eldecomp/io/material.hpp"

namespace eldecomp::io {

/// Cubic elastic constants in the reference tables' raw units (kTableUnit),
/// with the sign class the tables assign to each crystal.
struct CubicEntry {
  std::string_view name;  // chemical symbol: "W", "Si", ...
  std::string_view file;  // bundled file stem: "tungsten", "silicon", ...
  double c11;
  double c12;
  double c44;
  ASign expected;
};

/// The five A+ crystals followed by the five A- crystals.
std::span<const CubicEntry> cubic_reference_materials();

/// Looks up an entry by symbol or file stem.
std::optional<CubicEntry> find_cubic_reference(std::string_view name);

/// Record for an entry: cubic system, kTableUnit, no density.
MaterialRecord reference_record(const CubicEntry& e);

}  // namespace eldecomp::io
