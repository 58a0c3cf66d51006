// Report documents (schema_version "1") and their serialization. Every float
// is written with 17 significant digits and keys keep insertion order, so
// identical inputs give byte-identical output. Non-finite values (the
// velocity of a non-causal mode) are written as null.
#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "eldecomp/constitutive.hpp"
#include "eldecomp/decomp.hpp"
#include "eldecomp/io/material.hpp"

namespace eldecomp::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchemaVersion = "1";

/// "%.17g"; "null" for NaN and infinities.
std::string format_double(double x);

/// Pretty-printed JSON with the fixed float format, trailing newline included.
std::string dump_report(const Json& doc);

Json vec_json(const Vec3& v);
/// 3x3 nested rows.
Json symmat_json(const SymMat3& m);
/// Upper triangle of the Voigt matrix, 21 values row-major.
Json voigt21_json(const Stiffness& c);
Stiffness stiffness_from_voigt21(const Json& j);

Json material_json(const MaterialRecord& rec);
Json decomposition_json(const Stiffness& c, const IrreducibleParts& parts);
Json classification_json(const Stiffness& c, const Classification& cls, double tol);
Json bounds_json(const BoundsReport& b);
Json energy_json(const SymMat3& strain, const EnergyReport& e);

/// Sum of the five parts stored under decomposition.parts. Throws ParseError
/// if the block is missing or malformed.
Stiffness reconstruct_from_report(const Json& report);

}  // namespace eldecomp::io
