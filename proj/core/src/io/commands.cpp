#include "eldecomp/io/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "eldecomp/constitutive.hpp"
#include "eldecomp/error.hpp"

namespace eldecomp::io {
namespace {

std::vector<double> parse_list(std::string_view text, std::size_t expected, std::string_view what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double x = 0.0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || !std::isfinite(x)) {
      throw ValidationError("malformed " + std::string(what) + " '" + std::string(text) + "': expected " +
                            std::to_string(expected) + " comma-separated numbers");
    }
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected) {
    throw ValidationError("malformed " + std::string(what) + " '" + std::string(text) + "': expected " +
                          std::to_string(expected) + " comma-separated numbers, got " +
                          std::to_string(out.size()));
  }
  return out;
}

Json header(std::string_view command, const MaterialRecord& rec) {
  Json j;
  j["schema_version"] = std::string(kReportSchemaVersion);
  j["command"] = std::string(command);
  j["material"] = material_json(rec);
  return j;
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json wave_json(const ChristoffelBundle& b, const WaveSolution& w, const IrreducibleParts& parts) {
  Json j;
  j["n"] = vec_json(b.direction);
  j["squared_velocities"] = Json::array({w.squared_velocities[0], w.squared_velocities[1], w.squared_velocities[2]});
  j["velocities"] = Json::array({w.velocities[0], w.velocities[1], w.velocities[2]});
  Json pol = Json::array();
  for (const Vec3& u : w.polarizations) pol.push_back(vec_json(u));
  j["polarizations"] = pol;
  j["longitudinal_purity"] =
      Json::array({w.longitudinal_purity[0], w.longitudinal_purity[1], w.longitudinal_purity[2]});
  j["degenerate_pairs"] = Json::array({w.degenerate_pairs[0], w.degenerate_pairs[1], w.degenerate_pairs[2]});
  j["causal"] = w.causal;
  j["sum_squared_velocities"] = sum_squared_velocities(parts, b.direction, b.density);
  j["pure_longitudinal_residual"] = pure_longitudinal_residual(b);
  j["longitudinal_velocity_sq"] = longitudinal_velocity_sq(b);
  const ShearPolarization sp = shear_polarization(b);
  j["shear_polarization"] = {{"degenerate", sp.degenerate()},
                             {"u", sp.u ? vec_json(*sp.u) : Json(nullptr)}};
  j["shear_condition_residual"] = shear_condition_residual(b);
  return j;
}

}  // namespace

Json cmd_decompose(const MaterialRecord& rec, const CommonOptions& opts) {
  const IrreducibleParts parts = decompose(rec.stiffness);
  Json j = header("decompose", rec);
  j["decomposition"] = decomposition_json(rec.stiffness, parts);
  j["classification"] = classification_json(rec.stiffness, classify(rec.stiffness, parts, opts.tol), opts.tol);
  j["bounds"] = bounds_json(stability_bounds(parts, opts.tol));
  return j;
}

Json cmd_classify(const MaterialRecord& rec, const CommonOptions& opts) {
  const IrreducibleParts parts = decompose(rec.stiffness);
  Json j = header("classify", rec);
  j["classification"] = classification_json(rec.stiffness, classify(rec.stiffness, parts, opts.tol), opts.tol);
  j["bounds"] = bounds_json(stability_bounds(parts, opts.tol));
  return j;
}

Json cmd_energy(const MaterialRecord& rec, const SymMat3& strain, const CommonOptions& opts) {
  const IrreducibleParts parts = decompose(rec.stiffness);
  Json j = header("energy", rec);
  j["energy"] = energy_json(strain, energy(rec.stiffness, parts, strain));
  j["bounds"] = bounds_json(stability_bounds(parts, opts.tol));
  return j;
}

SymMat3 parse_strain(std::string_view text) {
  const auto v = parse_list(text, 6, "strain");
  return SymMat3::from_voigt({v[0], v[1], v[2], v[3], v[4], v[5]});
}

UnitVec3 parse_direction(std::string_view text) {
  const auto v = parse_list(text, 3, "direction");
  const Vec3 n{{v[0], v[1], v[2]}};
  if (!(norm(n) > 0.0)) throw ValidationError("direction '" + std::string(text) + "' is the zero vector");
  return UnitVec3::normalized(n);
}

AcousticUnits resolve_acoustic_units(const MaterialRecord& rec, std::optional<double> density_override) {
  AcousticUnits u;
  if (density_override) {
    u.density = *density_override;
    if (rec.density) {
      u.density_unit = rec.density->unit;
    } else if (stiffness_unit_to_gpa(rec.stiffness_unit)) {
      u.density_unit = "g/cm^3";
    }
  } else if (rec.density) {
    u.density = rec.density->value;
    u.density_unit = rec.density->unit;
  } else {
    throw ValidationError("material '" + rec.name + "' has no density; pass --density");
  }
  if (!(u.density > 0.0)) throw ValidationError("density must be positive");

  const auto fc = stiffness_unit_to_gpa(rec.stiffness_unit);
  const auto fr = density_unit_to_g_cm3(u.density_unit);
  if (fc && fr) {
    u.effective_rho = u.density * *fr / *fc;
    u.velocity_unit = "km/s";
  } else {
    u.effective_rho = u.density;
    u.velocity_unit = "sqrt(" + rec.stiffness_unit + " / " + (u.density_unit.empty() ? "density" : u.density_unit) + ")";
  }
  return u;
}

AcousticsResult cmd_acoustics(const MaterialRecord& rec, const AcousticsOptions& aopts, const CommonOptions& opts) {
  const AcousticUnits units = resolve_acoustic_units(rec, aopts.density);
  const double rho = units.effective_rho;
  const SAParts sa = sa_split(rec.stiffness);
  const IrreducibleParts parts = so3_refine(sa);

  AcousticsResult res;
  Json j = header("acoustics", rec);
  Json a;
  a["density"] = {{"value", units.density},
                  {"unit", units.density_unit.empty() ? Json(nullptr) : Json(units.density_unit)}};
  a["velocity_unit"] = units.velocity_unit;

  Json dirs = Json::array();
  for (const UnitVec3& n : aopts.directions) {
    const ChristoffelBundle b = christoffel(sa, n, rho);
    dirs.push_back(wave_json(b, wave_solve(b), parts));
  }
  a["directions"] = dirs;

  a["invariants"] = {{"isotropic_sum_part", (2.0 * parts.s_scalar - parts.a_scalar) / (6.0 * rho)},
                     {"orthonormal_triple_sum", (2.0 * parts.s_scalar - parts.a_scalar) / (2.0 * rho)}};

  const CriticalDirections cd = critical_directions(parts);
  Json axes = Json::array();
  for (const CriticalDirection& c : cd.axes) {
    axes.push_back({{"direction", vec_json(c.direction)},
                    {"eigenvalue", c.eigenvalue},
                    {"multiplicity", c.multiplicity},
                    {"sum_squared_velocities", sum_squared_velocities(parts, c.direction, rho)}});
  }
  a["critical_directions"] = {{"L", symmat_json(cd.l)}, {"fully_degenerate", cd.fully_degenerate}, {"axes", axes}};

  if (aopts.scan) {
    if (*aopts.scan == 0) throw ValidationError("--scan needs at least one direction");
    res.scan_directions = fibonacci_sphere(*aopts.scan);
    res.scan_solutions = scan_waves(rec.stiffness, rho, res.scan_directions, opts.threads);
    std::size_t non_causal = 0, axes_count = 0;
    for (const WaveSolution& w : res.scan_solutions) {
      if (!w.causal) ++non_causal;
      if (w.degenerate_pairs[0] || w.degenerate_pairs[1] || w.degenerate_pairs[2]) ++axes_count;
    }
    a["scan"] = {{"points", res.scan_directions.size()},
                 {"non_causal", non_causal},
                 {"degenerate", axes_count}};
  }

  if (aopts.pure_modes) {
    PureModeOptions po = aopts.pure;
    po.threads = opts.threads;
    const PureModeScan scan = find_pure_longitudinal(rec.stiffness, rho, po);
    Json hits = Json::array();
    for (const PureModeHit& h : scan.hits) {
      hits.push_back({{"direction", vec_json(h.direction)},
                      {"kind", h.kind == PureModeKind::longitudinal ? "longitudinal" : "shear"},
                      {"residual", h.residual},
                      {"velocity", h.velocity}});
    }
    a["pure_modes"] = {{"all_directions_pure", scan.all_directions_pure},
                       {"seeds", scan.seeds},
                       {"refined", scan.refined},
                       {"tolerance", po.tol},
                       {"hits", hits}};
  }

  j["acoustics"] = a;
  res.report = std::move(j);
  return res;
}

void write_scan_csv(std::ostream& out, std::span<const UnitVec3> dirs, std::span<const WaveSolution> sols) {
  out << "nx,ny,nz,v1,v2,v3,purity_L,degenerate_flag\n";
  for (std::size_t i = 0; i < dirs.size() && i < sols.size(); ++i) {
    const WaveSolution& w = sols[i];
    const double purity = *std::max_element(w.longitudinal_purity.begin(), w.longitudinal_purity.end());
    const bool degenerate = w.degenerate_pairs[0] || w.degenerate_pairs[1] || w.degenerate_pairs[2];
    out << csv_number(dirs[i][0]) << ',' << csv_number(dirs[i][1]) << ',' << csv_number(dirs[i][2]) << ','
        << csv_number(w.velocities[0]) << ',' << csv_number(w.velocities[1]) << ',' << csv_number(w.velocities[2])
        << ',' << csv_number(purity) << ',' << (degenerate ? 1 : 0) << '\n';
  }
}

}  // namespace eldecomp::io
