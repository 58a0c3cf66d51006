#include "eldecomp/io/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "eldecomp/error.hpp"
#include "eldecomp/voigt.hpp"

namespace eldecomp::io {
namespace {

void write(const Json& j, std::string& out, int depth) {
  const auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += Json(key).dump();
        out += ": ";
        write(value, out, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const Json& x : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) pad(depth + 1);
        write(x, out, depth + 1);
      }
      if (!flat) {
        out += "\n";
        pad(depth);
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string system_name(const MaterialRecord& rec) {
  return rec.crystal_system ? std::string(to_string(*rec.crystal_system)) : std::string();
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_report(const Json& doc) {
  std::string out;
  write(doc, out, 0);
  out += "\n";
  return out;
}

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json symmat_json(const SymMat3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
  return rows;
}

Json voigt21_json(const Stiffness& c) {
  Json out = Json::array();
  for (double x : full_to_voigt(c).upper_triangle()) out.push_back(x);
  return out;
}

Stiffness stiffness_from_voigt21(const Json& j) {
  if (!j.is_array() || j.size() != 21) throw ParseError("expected 21 Voigt upper-triangle values");
  std::array<double, 21> upper{};
  for (std::size_t k = 0; k < 21; ++k) {
    if (!j[k].is_number()) throw ParseError("expected 21 Voigt upper-triangle values");
    upper[k] = j[k].get<double>();
  }
  return voigt_to_full(VoigtMatrix::from_upper_triangle(upper));
}

Json material_json(const MaterialRecord& rec) {
  Json m;
  m["name"] = rec.name;
  m["crystal_system"] = rec.crystal_system ? Json(system_name(rec)) : Json(nullptr);
  if (rec.density) {
    m["density"] = {{"value", rec.density->value}, {"unit", rec.density->unit}};
  } else {
    m["density"] = nullptr;
  }
  m["stiffness"] = {{"unit", rec.stiffness_unit}, {"voigt", voigt21_json(rec.stiffness)}};
  m["warnings"] = rec.warnings;
  return m;
}

Json decomposition_json(const Stiffness& c, const IrreducibleParts& parts) {
  Json d;
  d["S"] = parts.s_scalar;
  d["A"] = parts.a_scalar;
  d["P"] = {{"components", symmat_json(parts.p)}, {"norm", parts.p_norm()}};
  d["Q"] = {{"components", symmat_json(parts.q)}, {"norm", parts.q_norm()}};
  d["R"] = {{"voigt", voigt21_json(parts.r)}, {"norm", parts.r_norm()}};
  d["Delta"] = symmat_json(parts.delta.d);
  d["cauchy_factor"] = cauchy_factor(c);
  d["norms"] = {{"C", frobenius_norm4(c)},
                {"cauchy", frobenius_norm4(parts.cauchy())},
                {"non_cauchy", frobenius_norm4(parts.non_cauchy())}};
  d["parts"] = {{"S1", voigt21_json(parts.s1)},
                {"S2", voigt21_json(parts.s2)},
                {"S3", voigt21_json(parts.s3)},
                {"A1", voigt21_json(parts.a1)},
                {"A2", voigt21_json(parts.a2)}};
  return d;
}

Json classification_json(const Stiffness& c, const Classification& cls, double tol) {
  Json j;
  j["class"] = std::string(material_class(cls));
  j["A_sign"] = std::string(to_string(cls.a_sign));
  j["A"] = cls.a_scalar;
  j["A_from_voigt"] = a_scalar_voigt(c);
  j["S"] = cls.s_scalar;
  j["full_cauchy"] = cls.full_cauchy;
  j["partial_cauchy"] = cls.partial_cauchy;
  j["cauchy_factor"] = cls.cauchy_factor;
  j["P_equals_Q"] = cls.p_equals_q;
  j["invariants"] = {{"P_norm", cls.invariants.p_norm},
                     {"Q_norm", cls.invariants.q_norm},
                     {"R_norm", cls.invariants.r_norm}};
  j["tolerance"] = tol;
  return j;
}

Json bounds_json(const BoundsReport& b) {
  Json j;
  j["S_plus_A"] = b.s_plus_a;
  j["S_plus_A_positive"] = b.s_plus_a_ok;
  j["4S_minus_5A"] = b.four_s_minus_five_a;
  j["4S_minus_5A_positive"] = b.four_s_minus_five_a_ok;
  j["A_window"] = b.a_window_ok;
  j["K_mean"] = b.k_mean;
  j["K_shear"] = b.k_shear;
  j["poisson"] = b.poisson ? Json(*b.poisson) : Json(nullptr);
  j["poisson_window"] = b.poisson_window_ok ? Json(*b.poisson_window_ok) : Json(nullptr);
  j["min_voigt_eigenvalue"] = b.min_voigt_eigenvalue;
  j["voigt_positive_definite"] = b.voigt_positive_definite;
  return j;
}

Json energy_json(const SymMat3& strain, const EnergyReport& e) {
  const auto share = [](const EnergyShare& s) {
    return Json{{"cauchy", s.cauchy}, {"non_cauchy", s.non_cauchy}, {"total", s.total()}};
  };
  Json j;
  j["strain"] = symmat_json(strain);
  j["total"] = e.total;
  j["compression"] = share(e.compression);
  j["mixed"] = share(e.mixed);
  j["shear"] = share(e.shear);
  j["sum_of_parts"] = e.sum_of_parts();
  j["cauchy_total"] = e.compression.cauchy + e.mixed.cauchy + e.shear.cauchy;
  j["non_cauchy_total"] = e.compression.non_cauchy + e.mixed.non_cauchy + e.shear.non_cauchy;
  return j;
}

Stiffness reconstruct_from_report(const Json& report) {
  if (!report.contains("decomposition") || !report["decomposition"].contains("parts"))
    throw ParseError("report has no decomposition.parts block");
  const Json& parts = report["decomposition"]["parts"];
  Stiffness sum;
  for (const char* key : {"S1", "S2", "S3", "A1", "A2"}) {
    if (!parts.contains(key)) throw ParseError(std::string("report is missing decomposition.parts.") + key);
    sum = sum + stiffness_from_voigt21(parts[key]);
  }
  return sum;
}

}  // namespace eldecomp::io
