// Plane acoustic waves in an anisotropic medium, seen through the
// Cauchy / non-Cauchy split of the Christoffel tensor
//   Gamma_il = (1/rho) C_ijkl n_j n_k = S_il + A_il.
// The non-Cauchy Christoffel part always annihilates the propagation
// direction (A n = 0, so det A = 0). Consequences used below: pure
// longitudinal directions and velocities, and the polarization of a single
// pure shear wave, are fixed by the Cauchy part alone.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eldecomp/decomp.hpp"
#include "eldecomp/tensor.hpp"

namespace eldecomp {

struct ChristoffelBundle {
  SymMat3 gamma;       // cauchy + non_cauchy
  SymMat3 cauchy;      // (1/rho) S_ijkl n_j n_k
  SymMat3 non_cauchy;  // (1/rho) A_ijkl n_j n_k
  UnitVec3 direction = UnitVec3::e3();
  double density = 1.0;
};

/// Throws ValidationError for rho <= 0.
ChristoffelBundle christoffel(const Stiffness& c, const UnitVec3& n, double rho);
/// Same, reusing an existing S/A split (for direction scans).
ChristoffelBundle christoffel(const SAParts& parts, const UnitVec3& n, double rho);

struct WaveSolution {
  std::array<double, 3> squared_velocities{};  // eigenvalues of Gamma, descending
  /// sqrt of the squared velocity; NaN for a non-causal mode (v^2 <= 0).
  std::array<double, 3> velocities{};
  std::array<Vec3, 3> polarizations{};  // orthonormal
  /// Acoustic-axis flags for mode pairs (0,1), (1,2), (0,2).
  std::array<bool, 3> degenerate_pairs{};
  /// |U . n| per mode: 1 for a pure longitudinal mode, 0 for a pure shear one.
  std::array<double, 3> longitudinal_purity{};
  std::array<bool, 3> mode_causal{};
  bool causal = false;  // all three squared velocities > 0
};

WaveSolution wave_solve(const ChristoffelBundle& bundle);

/// Solves every direction independently. The output order matches `dirs`
/// regardless of `threads` (0 = hardware concurrency).
std::vector<WaveSolution> scan_waves(const Stiffness& c, double rho, std::span<const UnitVec3> dirs,
                                     unsigned threads = 0);

/// Sum of the three squared velocities in direction n:
///   (2S - A)/(6 rho) + (2P + Q)_ij n_i n_j / (2 rho)  ( = tr Gamma ).
double sum_squared_velocities(const IrreducibleParts& parts, const UnitVec3& n, double rho);

struct CriticalDirection {
  UnitVec3 direction = UnitVec3::e1();
  double eigenvalue = 0.0;  // of L = 2P + Q
  /// Dimension of the eigenspace this axis belongs to (1, 2 or 3). For 2 or 3
  /// every unit vector of that eigenspace is critical, not only `direction`.
  int multiplicity = 1;
};

/// Stationary directions of the velocity-sum function on the unit sphere:
/// the eigenvectors of L = 2P + Q, where
///   sum v^2 (n) = (2S - A)/(6 rho) + lambda / (2 rho).
struct CriticalDirections {
  SymMat3 l;
  std::array<CriticalDirection, 3> axes{};  // eigenvalues descending
  bool fully_degenerate = false;            // L = 0: every direction critical
};

CriticalDirections critical_directions(const IrreducibleParts& parts);

/// Rayleigh quotient n^T S n of the Cauchy Christoffel tensor. Equals v_L^2
/// whenever n is a pure longitudinal direction.
double longitudinal_velocity_sq(const ChristoffelBundle& bundle);

/// Closed form of the same quantity from the irreducible parts:
///   (1/rho) (S/5 + 6/7 P_ij n_i n_j + R_ijkl n_i n_j n_k n_l).
/// The isotropic limit S/(5 rho) = (lambda + 2 mu)/rho fixes the scalar
/// coefficient at 1/5, not 1/15.
double longitudinal_velocity_sq(const IrreducibleParts& parts, const UnitVec3& n, double rho);

inline constexpr double kLongitudinalScalarCoefficient = 1.0 / 5.0;
inline constexpr double kShearSumScalarCoefficient = 4.0 / 30.0;  // times S; minus 5/30 A

/// v_S1^2 + v_S2^2 = tr Gamma - v_L^2 at a pure longitudinal direction:
///   (1/rho) ((4S - 5A)/30 + (1/14)(2P + 7Q)_ij n_i n_j - R_ijkl n_i n_j n_k n_l).
double shear_sum(const IrreducibleParts& parts, const UnitVec3& n, double rho);

/// ||S n - (n^T S n) n|| / ||S||, zero exactly at pure longitudinal directions.
double pure_longitudinal_residual(const ChristoffelBundle& bundle);

/// Fibonacci (golden-angle) lattice of n nearly uniform points, index order
/// from z = +1 towards z = -1.
std::vector<UnitVec3> fibonacci_sphere(std::size_t n);

enum class PureModeKind { longitudinal, shear };

struct PureModeHit {
  UnitVec3 direction = UnitVec3::e3();  // sign fixed so that n and -n coincide
  PureModeKind kind = PureModeKind::longitudinal;
  double residual = 0.0;
  double velocity = 0.0;  // sqrt(v^2); NaN if v^2 <= 0
  std::size_t seed_index = 0;
};

struct PureModeOptions {
  std::size_t grid_n = 20000;      // Fibonacci seeds, at least 100
  double tol = 1e-8;               // accepted relative residual
  int max_iterations = 200;        // simplex iterations per refinement
  double convergence = 1e-12;      // on the residual
  double dedupe_degrees = 0.5;     // angular merge radius
  unsigned threads = 0;            // 0 = hardware concurrency
};

struct PureModeScan {
  std::vector<PureModeHit> hits;  // ordered by seed index
  /// Every seed is pure (isotropic Cauchy part); `hits` is then empty.
  bool all_directions_pure = false;
  std::size_t seeds = 0;
  std::size_t refined = 0;  // local minima that were refined
};

/// Searches for pure longitudinal directions: residual on a Fibonacci
/// lattice, then derivative-free refinement from every lattice-local minimum
/// in a tangent-plane chart, then antipodal identification and deduplication.
/// Throws ValidationError for rho <= 0 or grid_n < 100.
PureModeScan find_pure_longitudinal(const Stiffness& c, double rho, const PureModeOptions& opts = {});

struct ShearPolarization {
  /// Normalized n x (S n); empty when S n is parallel to n.
  std::optional<UnitVec3> u;
  /// |n x S n| / ||S||.
  double relative_magnitude = 0.0;
  [[nodiscard]] bool degenerate() const { return !u.has_value(); }
};

/// Candidate polarization of a pure shear wave: orthogonal to both n and
/// S n, hence fixed by the Cauchy part. Degenerate (reported, not thrown)
/// when the direction is pure longitudinal.
ShearPolarization shear_polarization(const ChristoffelBundle& bundle);

/// Rayleigh quotient u^T Gamma u / |u|^2. Throws ValidationError for u = 0.
double shear_velocity_sq(const ChristoffelBundle& bundle, const Vec3& u);

/// eps_imk (Gamma_ij - v_S^2 g_ij) S_kl n_m n_l, with v_S^2 the Rayleigh
/// quotient of U = n x S n. This equals (Gamma - v_S^2) U and vanishes
/// exactly when U is an eigenvector, i.e. when a pure shear wave exists.
Vec3 shear_condition_vector(const ChristoffelBundle& bundle);

/// |shear_condition_vector| / (||Gamma|| ||S||); 0 in degenerate directions.
double shear_condition_residual(const ChristoffelBundle& bundle);

}  // namespace eldecomp
