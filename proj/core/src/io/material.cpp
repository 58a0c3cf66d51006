#include "eldecomp/io/material.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

#include "eldecomp/error.hpp"

namespace eldecomp::io {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<std::string_view, CrystalSystem>, 8> kSystems{{
    {"isotropic", CrystalSystem::isotropic},
    {"cubic", CrystalSystem::cubic},
    {"hexagonal", CrystalSystem::hexagonal},
    {"trigonal", CrystalSystem::trigonal},
    {"tetragonal", CrystalSystem::tetragonal},
    {"orthorhombic", CrystalSystem::orthorhombic},
    {"monoclinic", CrystalSystem::monoclinic},
    {"triclinic", CrystalSystem::triclinic},
}};

constexpr std::array<std::pair<std::string_view, double>, 5> kStiffnessUnits{{
    {"GPa", 1.0},
    {"MPa", 1e-3},
    {"Pa", 1e-9},
    {"Mbar", 100.0},
    {"kbar", 0.1},
}};

constexpr std::array<std::pair<std::string_view, double>, 2> kDensityUnits{{
    {"g/cm^3", 1.0},
    {"kg/m^3", 1e-3},
}};

constexpr std::array<std::string_view, 6> kKnownFields{"schema_version", "name",   "crystal_system",
                                                       "density",        "stiffness", "source"};

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

double number_at(const json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) field_error(field, "expected a finite number");
  return x;
}

std::string string_at(const json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

VoigtMatrix parse_voigt(const json& j) {
  const std::string field = "stiffness.voigt";
  if (!j.is_array()) field_error(field, "expected 21 numbers or a 6x6 array");
  if (j.size() == 21 && j[0].is_number()) {
    std::array<double, 21> upper{};
    for (std::size_t k = 0; k < 21; ++k) upper[k] = number_at(j[k], field + "[" + std::to_string(k) + "]");
    return VoigtMatrix::from_upper_triangle(upper);
  }
  if (j.size() == 6 && j[0].is_array()) {
    VoigtMatrix m;
    for (std::size_t r = 0; r < 6; ++r) {
      const std::string row_field = field + "[" + std::to_string(r) + "]";
      if (!j[r].is_array() || j[r].size() != 6) field_error(row_field, "expected a row of 6 numbers");
      for (std::size_t c = 0; c < 6; ++c)
        m(static_cast<int>(r), static_cast<int>(c)) =
            number_at(j[r][c], row_field + "[" + std::to_string(c) + "]");
    }
    return m;
  }
  field_error(field, "expected 21 numbers or a 6x6 array, got an array of " + std::to_string(j.size()));
}

std::string parse_error_message(const json::parse_error& e, std::string_view text) {
  const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::string what = e.what();
  if (const auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
  return "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what;
}

Mat3 axis_rotation(const Vec3& axis, double angle) {
  const Vec3 k = (1.0 / norm(axis)) * axis;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = (1.0 - c) * k[i] * k[j];
      if (i == j) v += c;
      r[i][j] = v;
    }
  r[0][1] -= s * k[2];
  r[0][2] += s * k[1];
  r[1][0] += s * k[2];
  r[1][2] -= s * k[0];
  r[2][0] -= s * k[1];
  r[2][1] += s * k[0];
  return r;
}

// Quarter and half turns as exact signed permutations.
Mat3 quarter_turn(int axis) {
  const int a = (axis + 1) % 3;
  const int b = (axis + 2) % 3;
  Mat3 r{};
  r[axis][axis] = 1.0;
  r[a][b] = -1.0;
  r[b][a] = 1.0;
  return r;
}

Mat3 half_turn(int axis) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) r[i][i] = i == axis ? 1.0 : -1.0;
  return r;
}

struct Generator {
  Mat3 rot;
  std::string label;
};

std::vector<Generator> generators(CrystalSystem s) {
  const Vec3 z{{0.0, 0.0, 1.0}};
  switch (s) {
    case CrystalSystem::isotropic:
      return {{quarter_turn(0), "90 deg about x"},
              {quarter_turn(2), "90 deg about z"},
              {axis_rotation(Vec3{{1.0, 2.0, 3.0}}, 1.0), "1 rad about (1,2,3)"},
              {axis_rotation(Vec3{{-2.0, 1.0, 0.5}}, 0.4), "0.4 rad about (-2,1,0.5)"}};
    case CrystalSystem::cubic:
      return {{quarter_turn(0), "90 deg about x"}, {quarter_turn(2), "90 deg about z"}};
    case CrystalSystem::hexagonal:
      return {{axis_rotation(z, std::numbers::pi / 3.0), "60 deg about z"},
              {axis_rotation(z, 0.3), "0.3 rad about z"}};
    case CrystalSystem::trigonal:
      return {{axis_rotation(z, 2.0 * std::numbers::pi / 3.0), "120 deg about z"}};
    case CrystalSystem::tetragonal:
      return {{quarter_turn(2), "90 deg about z"}};
    case CrystalSystem::orthorhombic:
      return {{half_turn(0), "180 deg about x"}, {half_turn(2), "180 deg about z"}};
    case CrystalSystem::monoclinic:
    case CrystalSystem::triclinic:
      return {};
  }
  return {};
}

struct Deviation {
  double relative = 0.0;
  int row = 0;
  int col = 0;
};

Deviation invariance_deviation(const VoigtMatrix& v, const Stiffness& c, const Mat3& rot) {
  const VoigtMatrix r = full_to_voigt(rotate(c, rot));
  double scale = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) scale = std::max(scale, std::abs(v(a, b)));
  Deviation d;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) {
      const double x = std::abs(r(a, b) - v(a, b));
      if (x > d.relative) d = {x, a, b};
    }
  if (scale > 0.0) d.relative /= scale;
  return d;
}

std::string describe(CrystalSystem s, const Generator& g, const Deviation& d) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "not invariant under %s: C%d%d changes by %.3g relative to max |C|",
                g.label.c_str(), d.row + 1, d.col + 1, d.relative);
  return "crystal_system '" + std::string(to_string(s)) + "' inconsistent with the stiffness matrix, " + buf;
}

}  // namespace

std::string_view to_string(CrystalSystem s) {
  for (const auto& [name, value] : kSystems)
    if (value == s) return name;
  return "triclinic";
}

std::optional<CrystalSystem> parse_crystal_system(std::string_view s) {
  for (const auto& [name, value] : kSystems)
    if (name == s) return value;
  return std::nullopt;
}

std::optional<double> stiffness_unit_to_gpa(std::string_view unit) {
  for (const auto& [name, f] : kStiffnessUnits)
    if (name == unit) return f;
  return std::nullopt;
}

bool is_known_stiffness_unit(std::string_view unit) {
  return unit == kTableUnit || stiffness_unit_to_gpa(unit).has_value();
}

std::optional<double> density_unit_to_g_cm3(std::string_view unit) {
  for (const auto& [name, f] : kDensityUnits)
    if (name == unit) return f;
  return std::nullopt;
}

std::vector<std::string> crystal_system_violations(const VoigtMatrix& v, CrystalSystem system, double tol) {
  const Stiffness c = voigt_to_full(v, std::numeric_limits<double>::infinity());
  std::vector<std::string> out;
  if (system == CrystalSystem::monoclinic) {
    const Generator gz{half_turn(2), "180 deg about z"};
    const Generator gy{half_turn(1), "180 deg about y"};
    const Deviation dz = invariance_deviation(v, c, gz.rot);
    const Deviation dy = invariance_deviation(v, c, gy.rot);
    if (dz.relative > tol && dy.relative > tol) {
      out.push_back(describe(system, dz.relative <= dy.relative ? gz : gy,
                             dz.relative <= dy.relative ? dz : dy));
    }
    return out;
  }
  for (const Generator& g : generators(system)) {
    const Deviation d = invariance_deviation(v, c, g.rot);
    if (d.relative > tol) out.push_back(describe(system, g, d));
  }
  return out;
}

MaterialRecord parse_material(std::string_view text, const LoadOptions& opts) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(parse_error_message(e, text));
  }
  if (!doc.is_object()) throw ParseError("material document must be a JSON object");

  MaterialRecord rec;
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKnownFields.begin(), kKnownFields.end(), key) != kKnownFields.end()) continue;
    if (opts.strict) field_error(key, "unknown field");
    rec.warnings.push_back("unknown field '" + key + "' ignored");
  }

  if (doc.contains("schema_version")) {
    const std::string ver = string_at(doc["schema_version"], "schema_version");
    if (ver != "1") field_error("schema_version", "unsupported version '" + ver + "'");
  }
  if (!doc.contains("name")) field_error("name", "missing");
  rec.name = string_at(doc["name"], "name");
  if (doc.contains("source")) rec.source = string_at(doc["source"], "source");

  if (doc.contains("crystal_system")) {
    const std::string s = string_at(doc["crystal_system"], "crystal_system");
    rec.crystal_system = parse_crystal_system(s);
    if (!rec.crystal_system) field_error("crystal_system", "unknown crystal system '" + s + "'");
  }

  if (doc.contains("density")) {
    const json& d = doc["density"];
    if (!d.is_object()) field_error("density", "expected an object {value, unit}");
    if (!d.contains("value")) field_error("density.value", "missing");
    if (!d.contains("unit")) field_error("density.unit", "missing");
    Quantity q{number_at(d["value"], "density.value"), string_at(d["unit"], "density.unit")};
    if (!density_unit_to_g_cm3(q.unit)) field_error("density.unit", "unknown unit '" + q.unit + "'");
    if (!(q.value > 0.0)) throw ValidationError("field 'density.value': density must be positive");
    rec.density = q;
  }

  if (!doc.contains("stiffness")) field_error("stiffness", "missing");
  const json& st = doc["stiffness"];
  if (!st.is_object()) field_error("stiffness", "expected an object {unit, voigt}");
  if (!st.contains("unit")) field_error("stiffness.unit", "missing");
  rec.stiffness_unit = string_at(st["unit"], "stiffness.unit");
  if (!is_known_stiffness_unit(rec.stiffness_unit))
    field_error("stiffness.unit", "unknown unit '" + rec.stiffness_unit + "'");
  if (!st.contains("voigt")) field_error("stiffness.voigt", "missing");
  for (const auto& [key, value] : st.items()) {
    if (key == "unit" || key == "voigt") continue;
    if (opts.strict) field_error("stiffness." + key, "unknown field");
    rec.warnings.push_back("unknown field 'stiffness." + key + "' ignored");
  }
  rec.voigt = parse_voigt(st["voigt"]);
  rec.stiffness = voigt_to_full(rec.voigt, opts.symmetry_tol);

  if (rec.crystal_system) {
    for (std::string& v : crystal_system_violations(rec.voigt, *rec.crystal_system, opts.system_tol)) {
      if (opts.strict) throw ValidationError(v);
      rec.warnings.push_back(std::move(v));
    }
  }
  return rec;
}

MaterialRecord load_material(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open material file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read material file '" + path.string() + "'");
  try {
    return parse_material(buf.str(), opts);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

MaterialRecord make_record(std::string name, const Stiffness& c, std::string stiffness_unit,
                           std::optional<CrystalSystem> system, std::optional<Quantity> density) {
  MaterialRecord rec;
  rec.name = std::move(name);
  rec.crystal_system = system;
  rec.density = std::move(density);
  rec.stiffness_unit = std::move(stiffness_unit);
  rec.voigt = full_to_voigt(c);
  rec.stiffness = c;
  return rec;
}

}  // namespace eldecomp::io
