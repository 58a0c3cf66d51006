// Material records: JSON ingestion and crystal-system consistency checks.
//
// Schema (schema_version "1"):
//   {
//     "schema_version": "1",                  optional
//     "name": "W",
//     "crystal_system": "cubic",              optional
//     "density": {"value": 19.25, "unit": "g/cm^3"},   optional
//     "stiffness": {"unit": "GPa", "voigt": [...]},
//     "source": "...", "notes": "..."         optional, echoed only
//   }
// "voigt" is either the 21 upper-triangle values in row-major order
// (C11 C12 .. C16 C22 .. C66) or a full 6x6 array of rows.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eldecomp/decomp.hpp"
#include "eldecomp/tensor.hpp"
#include "eldecomp/voigt.hpp"

namespace eldecomp::io {

enum class CrystalSystem { isotropic, cubic, hexagonal, trigonal, tetragonal, orthorhombic, monoclinic, triclinic };

std::string_view to_string(CrystalSystem s);
std::optional<CrystalSystem> parse_crystal_system(std::string_view s);

/// Raw numbers from the cubic reference tables, whose physical unit is not
/// converted by this library.
inline constexpr std::string_view kTableUnit = "paper-units (Kaxiras)";

/// Accepted stiffness units. Physical ones convert to GPa.
std::optional<double> stiffness_unit_to_gpa(std::string_view unit);
bool is_known_stiffness_unit(std::string_view unit);
/// Accepted density units, with their factor to g/cm^3.
std::optional<double> density_unit_to_g_cm3(std::string_view unit);

struct Quantity {
  double value = 0.0;
  std::string unit;
};

struct MaterialRecord {
  std::string name;
  std::optional<CrystalSystem> crystal_system;
  std::optional<Quantity> density;
  std::string stiffness_unit;
  VoigtMatrix voigt;
  Stiffness stiffness;
  std::optional<std::string> source;
  std::vector<std::string> warnings;
};

struct LoadOptions {
  bool strict = false;
  /// Relative tolerance for Voigt symmetry on ingest.
  double symmetry_tol = kDefaultSymmetryTol;
  /// Relative tolerance for the crystal-system structural relations.
  double system_tol = kDefaultClassifyTol;
};

/// Throws ParseError (malformed JSON with line/column, schema violations
/// naming the field, unknown units, unknown fields when strict) or
/// ValidationError (asymmetric Voigt matrix naming the one-based pair,
/// non-positive density, crystal-system inconsistency when strict).
/// Non-strict crystal-system inconsistencies become warnings.
MaterialRecord parse_material(std::string_view text, const LoadOptions& opts = {});

/// parse_material on the file contents. Throws ParseError if unreadable.
MaterialRecord load_material(const std::filesystem::path& path, const LoadOptions& opts = {});

/// Builds a record from an in-memory tensor (no file involved).
MaterialRecord make_record(std::string name, const Stiffness& c, std::string stiffness_unit,
                           std::optional<CrystalSystem> system = std::nullopt,
                           std::optional<Quantity> density = std::nullopt);

/// Human-readable descriptions of how v departs from the structure of
/// `system` in its conventional orientation (z the unique axis; monoclinic
/// with either y or z unique). Empty when consistent within tol, measured
/// relative to the largest |C_IJ|.
std::vector<std::string> crystal_system_violations(const VoigtMatrix& v, CrystalSystem system, double tol);

}  // namespace eldecomp::io
