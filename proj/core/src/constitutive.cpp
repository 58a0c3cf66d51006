#include "eldecomp/constitutive.hpp"

#include <algorithm>
#include <cmath>

#include "eldecomp/eigen.hpp"
#include "eldecomp/voigt.hpp"

namespace eldecomp {
namespace {

// x u + u x - 2/3 (x:u) g, the traceless symmetric coupling of two deviators.
SymMat3 deviator_coupling(const SymMat3& x, const SymMat3& u) {
  return 2.0 * sym_product(x, u) - (2.0 / 3.0 * double_dot(x, u)) * SymMat3::identity();
}

}  // namespace

StrainSplit split_strain(const SymMat3& eps) { return {eps.trace(), eps.deviator()}; }

StressSplit split_stress(const SymMat3& sigma) { return {sigma.trace(), sigma.deviator()}; }

SymMat3 hooke_full(const Stiffness& c, const SymMat3& eps) { return contract2(c, eps); }

double hooke_mean(const IrreducibleParts& parts, const StrainSplit& strain) {
  return (parts.s_scalar + parts.a_scalar) / 3.0 * strain.trace + double_dot(parts.p - parts.q, strain.deviator);
}

SymMat3 hooke_shear(const IrreducibleParts& parts, const StrainSplit& strain) {
  const SymMat3& u = strain.deviator;
  return (strain.trace / 3.0) * (parts.p - parts.q) +
         k_shear(parts.s_scalar, parts.a_scalar) * u + contract2(parts.r, u) +
         (2.0 / 7.0) * deviator_coupling(parts.p, u) + deviator_coupling(parts.q, u);
}

EnergyReport energy(const Stiffness& c, const SymMat3& eps) { return energy(c, decompose(c), eps); }

EnergyReport energy(const Stiffness& c, const IrreducibleParts& parts, const SymMat3& eps) {
  const StrainSplit split = split_strain(eps);
  const double e = split.trace;
  const SymMat3& u = split.deviator;
  const double uu = double_dot(u, u);

  EnergyReport rep;
  rep.total = 0.5 * contract_quadratic(c, eps);
  rep.compression = {e * e * parts.s_scalar / 18.0, e * e * parts.a_scalar / 18.0};
  rep.mixed = {e / 3.0 * double_dot(parts.p, u), -e / 3.0 * double_dot(parts.q, u)};
  rep.shear = {parts.s_scalar / 15.0 * uu + 2.0 / 7.0 * trace_product(parts.p, u, u) +
                   0.5 * contract_quadratic(parts.r, u),
               -parts.a_scalar / 12.0 * uu + trace_product(parts.q, u, u)};
  return rep;
}

BoundsReport stability_bounds(const IrreducibleParts& parts, double tol) {
  BoundsReport rep;
  const double s = parts.s_scalar;
  const double a = parts.a_scalar;
  rep.s_scalar = s;
  rep.a_scalar = a;
  rep.s_plus_a = s + a;
  rep.four_s_minus_five_a = 4.0 * s - 5.0 * a;
  rep.s_plus_a_ok = rep.s_plus_a > 0.0;
  rep.four_s_minus_five_a_ok = rep.four_s_minus_five_a > 0.0;
  // Together the two strict inequalities are 0.8 S > A > -S.
  rep.a_window_ok = rep.s_plus_a_ok && rep.four_s_minus_five_a_ok;
  rep.k_mean = k_mean(s, a);
  rep.k_shear = k_shear(s, a);

  const Stiffness c = parts.reconstruct();
  const double limit = tol * frobenius_norm4(c);
  if (parts.p_norm() <= limit && parts.q_norm() <= limit && parts.r_norm() <= limit) {
    // S = 5(lambda + 2 mu), A = 4(lambda - mu)  =>  nu = (2S + 5A) / (8S + 5A).
    const double denom = 8.0 * s + 5.0 * a;
    if (denom != 0.0) {
      rep.poisson = (2.0 * s + 5.0 * a) / denom;
      rep.poisson_window_ok = *rep.poisson > -1.0 && *rep.poisson < 0.5;
    }
  }

  const VoigtMatrix v = full_to_voigt(c);
  const auto es = jacobi_eigen<6>(v.rows());
  rep.min_voigt_eigenvalue = es.values[5];
  rep.voigt_positive_definite = rep.min_voigt_eigenvalue > 0.0;
  return rep;
}

}  // namespace eldecomp
