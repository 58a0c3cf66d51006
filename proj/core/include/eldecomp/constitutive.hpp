#pragma once

#include <optional>

#include "eldecomp/decomp.hpp"
#include "eldecomp/tensor.hpp"

namespace eldecomp {

/// x_ij = (trace / 3) g_ij + deviator_ij with tr(deviator) = 0.
template <class Tag>
struct TraceSplit {
  double trace = 0.0;
  SymMat3 deviator;

  [[nodiscard]] SymMat3 recombine() const { return deviator + (trace / 3.0) * SymMat3::identity(); }
};

struct StrainTag {};
struct StressTag {};
/// Mean strain (hydrostatic compression) plus strain deviator u_ij.
using StrainSplit = TraceSplit<StrainTag>;
/// Mean stress plus stress deviator s_ij.
using StressSplit = TraceSplit<StressTag>;

StrainSplit split_strain(const SymMat3& eps);
StressSplit split_stress(const SymMat3& sigma);

/// sigma_ij = C_ijkl eps_kl.
SymMat3 hooke_full(const Stiffness& c, const SymMat3& eps);

/// Trace of the stress: (S + A)/3 eps + (P - Q) : u.
double hooke_mean(const IrreducibleParts& parts, const StrainSplit& strain);

/// Stress deviator:
///   (P - Q) eps / 3 + (4S - 5A)/30 u + R : u
///   + 2/7 (P u + u P - 2/3 (P:u) g) + (Q u + u Q - 2/3 (Q:u) g).
SymMat3 hooke_shear(const IrreducibleParts& parts, const StrainSplit& strain);

/// Hydrostatic and shear moduli analogues.
constexpr double k_mean(double s, double a) { return (s + a) / 3.0; }
constexpr double k_shear(double s, double a) { return (4.0 * s - 5.0 * a) / 30.0; }

/// One energy term split by origin.
struct EnergyShare {
  double cauchy = 0.0;
  double non_cauchy = 0.0;
  [[nodiscard]] double total() const { return cauchy + non_cauchy; }
};

/// Strain energy density E = 1/2 C eps eps in stress units times strain.
struct EnergyReport {
  double total = 0.0;  // 1/2 C_ijkl eps_ij eps_kl, by direct contraction
  EnergyShare compression;  // E_c: eps^2 S/18 and eps^2 A/18
  EnergyShare mixed;        // E_m: eps/3 P:u and -eps/3 Q:u
  EnergyShare shear;        // E_s: S/15 u:u + 2/7 tr(Puu) + 1/2 Ruu, and -A/12 u:u + tr(Quu)

  [[nodiscard]] double sum_of_parts() const { return compression.total() + mixed.total() + shear.total(); }
};

EnergyReport energy(const Stiffness& c, const SymMat3& eps);
EnergyReport energy(const Stiffness& c, const IrreducibleParts& parts, const SymMat3& eps);

/// Energy-positivity diagnostics on the scalar invariants. Nothing here
/// rejects a material: the scalar bounds assume independent compression and
/// shear, and they are necessary but not sufficient for stability.
struct BoundsReport {
  double s_scalar = 0.0;
  double a_scalar = 0.0;
  double s_plus_a = 0.0;             // compression energy positive: > 0
  double four_s_minus_five_a = 0.0;  // shear energy positive: > 0
  bool s_plus_a_ok = false;
  bool four_s_minus_five_a_ok = false;
  bool a_window_ok = false;  // 0.8 S > A > -S, strict
  double k_mean = 0.0;
  double k_shear = 0.0;
  /// Isotropic inputs only (P, Q, R below tol): nu = lambda / (2 lambda + 2 mu).
  std::optional<double> poisson;
  std::optional<bool> poisson_window_ok;  // -1 < nu < 0.5
  /// Smallest eigenvalue of the 6x6 Voigt matrix; positive iff the strain
  /// energy is positive definite.
  double min_voigt_eigenvalue = 0.0;
  bool voigt_positive_definite = false;
};

BoundsReport stability_bounds(const IrreducibleParts& parts, double tol = kDefaultClassifyTol);

}  // namespace eldecomp
