// Two-level irreducible decomposition of the elasticity tensor.
//
// Level one (index permutations): C = S + A, where S is the totally
// symmetric "Cauchy" part (15 components) and A the mixed-symmetry
// "non-Cauchy" part (6 components). The Cauchy relations are exactly A = 0.
//
// Level two (rotations):
//   S = 1S + 2S + 3S   built from the scalar S, traceless P_ij, and the
//                      totally symmetric traceless R_ijkl   (1 + 5 + 9)
//   A = 1A + 2A        built from the scalar A and traceless Q_ij (1 + 5)
//
// The non-Cauchy part is equivalently a symmetric matrix
//   Delta_mn = 1/3 eps_mil eps_njk A_ijkl,
//   A_ijkl   = 1/2 (eps_ikm eps_jln + eps_ilm eps_jkn) Delta_mn,
// with tr Delta = A / 2 and Q the traceless part of Delta. Other sign and
// normalization conventions for Delta exist in the literature; only this one
// is used here.
#pragma once

#include <string_view>

#include "eldecomp/tensor.hpp"

namespace eldecomp {

/// Default relative tolerance for structural zeros (Cauchy relations, A sign).
inline constexpr double kDefaultClassifyTol = 1e-6;

struct SAParts {
  Stiffness cauchy;      // S_ijkl, totally symmetric
  Stiffness non_cauchy;  // A_ijkl, satisfies A_i(jkl) = 0
};

/// s_ijkl = (c_ijkl + c_iklj + c_iljk) / 3, a = c - s.
SAParts sa_split(const Stiffness& c);

/// Largest |A_i(jkl)| (symmetrization over the last three indices), relative
/// to the largest entry of `a`. Zero for a genuine non-Cauchy tensor.
double cyclic_defect(const Stiffness& a);

struct DeltaTensor {
  SymMat3 d;
  [[nodiscard]] double trace() const { return d.trace(); }
};

/// Delta_mn = 1/3 eps_mil eps_njk a_ijkl. Throws ValidationError if `a` is
/// not a non-Cauchy tensor (cyclic_defect above tol).
DeltaTensor delta_from_a(const Stiffness& a, double tol = kDefaultSymmetryTol);

/// a_ijkl = 1/2 (eps_ikm eps_jln + eps_ilm eps_jkn) Delta_mn.
Stiffness a_from_delta(const DeltaTensor& delta);

struct IrreducibleParts {
  double s_scalar = 0.0;  // S = g_ij g_kl S_ijkl
  SymMat3 p;              // P_ij = g_kl S_ijkl - S/3 g_ij
  Stiffness r;            // R_ijkl, totally symmetric and traceless
  double a_scalar = 0.0;  // A = g_ij g_kl A_ijkl
  SymMat3 q;              // traceless part of Delta
  DeltaTensor delta;

  Stiffness s1;  // (S/15)(g g + g g + g g)
  Stiffness s2;  // (1/7)(P g + ...), six terms
  Stiffness s3;  // R
  Stiffness a1;  // (A/12)(2 g_ij g_kl - g_il g_jk - g_ik g_jl)
  Stiffness a2;  // 1/2 (g Q + ...)

  [[nodiscard]] Stiffness cauchy() const { return s1 + s2 + s3; }
  [[nodiscard]] Stiffness non_cauchy() const { return a1 + a2; }
  [[nodiscard]] Stiffness reconstruct() const { return cauchy() + non_cauchy(); }

  [[nodiscard]] double p_norm() const { return p.norm(); }
  [[nodiscard]] double q_norm() const { return q.norm(); }
  [[nodiscard]] double r_norm() const { return frobenius_norm4(r); }
};

IrreducibleParts so3_refine(const SAParts& parts);

/// so3_refine(sa_split(c)).
IrreducibleParts decompose(const Stiffness& c);

/// A = (4/3)[(C12 - C44) + (C13 - C55) + (C23 - C66)] from Voigt entries.
double a_scalar_voigt(const Stiffness& c);

/// Q_ij from Voigt entries:
///   Q11 = (2/3)(C23 - C44) - A/6     Q23 = (2/3)(C56 - C14)
///   Q22 = (2/3)(C13 - C55) - A/6     Q13 = (2/3)(C46 - C25)
///   Q33 = (2/3)(C12 - C66) - A/6     Q12 = (2/3)(C45 - C36)
/// These agree with the Q produced by so3_refine. Q = 0 is equivalent to the
/// five partial Cauchy relations C23 - C44 = A/4, C45 = C36, etc.
SymMat3 q_components_voigt(const Stiffness& c);

/// ||S|| / ||C|| in [0, 1]. Throws ValidationError for the zero tensor.
double cauchy_factor(const Stiffness& c);

enum class ASign { positive, negative, zero };
std::string_view to_string(ASign s);

struct QuadraticInvariants {
  double p_norm = 0.0;  // sqrt(P_ij P_ij)
  double q_norm = 0.0;
  double r_norm = 0.0;  // sqrt(R_ijkl R_ijkl)
};

struct Classification {
  bool full_cauchy = false;     // ||A_ijkl|| <= tol ||C||
  bool partial_cauchy = false;  // ||Q|| <= tol ||C||
  ASign a_sign = ASign::zero;   // zero when |A| <= tol ||C||
  double a_scalar = 0.0;
  double s_scalar = 0.0;
  double cauchy_factor = 1.0;
  /// P = Q: mean and shear responses decouple. Reported only; trivially
  /// true when P = Q = 0.
  bool p_equals_q = false;
  QuadraticInvariants invariants;
};

Classification classify(const Stiffness& c, double tol = kDefaultClassifyTol);
Classification classify(const Stiffness& c, const IrreducibleParts& parts, double tol = kDefaultClassifyTol);

/// "A+", "A-" or "A0".
std::string_view material_class(const Classification& cls);

/// beta (C_iklj - C_ijkl) + gamma (C_ilkj - C_ijkl). Vanishes for some
/// (beta, gamma) != (0, 0) exactly when Delta = 0. beta = gamma = 1 gives -3A.
/// Throws ValidationError when beta = gamma = 0.
Tensor4 general_relation_residual(const Stiffness& c, double beta, double gamma);

/// M_ijkl = C_i(jk)l, N_ijkl = C_i[jk]l. Neither part is an elasticity tensor
/// in general; N = 0 is another form of the Cauchy relations.
struct MNParts {
  Tensor4 m;
  Tensor4 n;
};
MNParts mn_split(const Stiffness& c);

}  // namespace eldecomp
