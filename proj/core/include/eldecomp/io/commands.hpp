// Report builders behind the command-line subcommands.
#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eldecomp/acoustics.hpp"
#include "eldecomp/io/material.hpp"
#include "eldecomp/io/report.hpp"

namespace eldecomp::io {

struct CommonOptions {
  double tol = kDefaultClassifyTol;
  unsigned threads = 0;
};

Json cmd_decompose(const MaterialRecord& rec, const CommonOptions& opts = {});
Json cmd_classify(const MaterialRecord& rec, const CommonOptions& opts = {});
Json cmd_energy(const MaterialRecord& rec, const SymMat3& strain, const CommonOptions& opts = {});

/// "e11,e22,e33,e23,e13,e12" (tensor components, not engineering shear).
/// Throws ValidationError for anything else.
SymMat3 parse_strain(std::string_view text);
/// "x,y,z", normalized. Throws ValidationError for malformed or zero input.
UnitVec3 parse_direction(std::string_view text);

struct AcousticsOptions {
  std::vector<UnitVec3> directions;
  std::optional<std::size_t> scan;  // Fibonacci lattice size
  std::optional<double> density;    // overrides the record's value
  bool pure_modes = false;
  PureModeOptions pure;
};

/// Density and velocity units after resolving overrides. Physical stiffness
/// and density units are converted to GPa and g/cm^3, giving km/s; other
/// combinations are used as raw numbers.
struct AcousticUnits {
  double density = 0.0;       // as given, in density_unit
  std::string density_unit;   // empty when raw
  double effective_rho = 0.0; // density passed to the acoustic routines
  std::string velocity_unit;
};

AcousticUnits resolve_acoustic_units(const MaterialRecord& rec, std::optional<double> density_override);

struct AcousticsResult {
  Json report;
  /// Lattice directions and solutions when a scan was requested.
  std::vector<UnitVec3> scan_directions;
  std::vector<WaveSolution> scan_solutions;
};

/// Throws ValidationError when no density is available or it is not positive.
AcousticsResult cmd_acoustics(const MaterialRecord& rec, const AcousticsOptions& aopts,
                              const CommonOptions& opts = {});

/// Header "nx,ny,nz,v1,v2,v3,purity_L,degenerate_flag", one row per
/// direction, '\n' line endings, "%.17g" numbers, "nan" for the velocity of
/// a non-causal mode. purity_L = max_k |U_k . n|; degenerate_flag is 1 when
/// any two squared velocities coincide.
void write_scan_csv(std::ostream& out, std::span<const UnitVec3> dirs, std::span<const WaveSolution> sols);

}  // namespace eldecomp::io
