#pragma once

#include <array>
#include <span>

#include "eldecomp/tensor.hpp"

namespace eldecomp {

/// 6x6 stiffness matrix in Voigt order 11, 22, 33, 23, 31, 12.
///
/// Stiffness components map one-to-one: m(I, J) == c_ijkl with no factors of
/// 2 or 4 anywhere. Strains and stresses never appear in Voigt form in this
/// library, so the engineering-shear convention does not arise.
///
/// Accessors are zero-based; error messages use the conventional one-based
/// labels (C12 is m(0, 1)).
class VoigtMatrix {
 public:
  using Rows = std::array<std::array<double, 6>, 6>;

  constexpr VoigtMatrix() = default;
  constexpr explicit VoigtMatrix(const Rows& rows) : m_(rows) {}

  /// Upper triangle in row-major order: C11 C12 .. C16 C22 .. C26 .. C66.
  static VoigtMatrix from_upper_triangle(std::span<const double, 21> upper);

  constexpr double operator()(int a, int b) const {
    return m_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  constexpr double& operator()(int a, int b) {
    return m_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  [[nodiscard]] constexpr const Rows& rows() const noexcept { return m_; }
  [[nodiscard]] std::array<double, 21> upper_triangle() const;

  /// Largest |m(I,J) - m(J,I)| relative to the largest |m| entry, with the
  /// zero-based position where it occurs (row < col).
  struct Asymmetry {
    double relative = 0.0;
    int row = 0;
    int col = 0;
  };
  [[nodiscard]] Asymmetry asymmetry() const;

  friend bool operator==(const VoigtMatrix&, const VoigtMatrix&) = default;

 private:
  Rows m_{};
};

/// Throws VoigtAsymmetry naming the one-based pair if asymmetry exceeds tol.
void require_symmetric(const VoigtMatrix& v, double tol = kDefaultSymmetryTol);

/// Expands a Voigt matrix to the full rank-4 tensor. Off-diagonal pairs are
/// averaged, so an exactly symmetric input round-trips bit for bit.
Stiffness voigt_to_full(const VoigtMatrix& v, double tol = kDefaultSymmetryTol);

VoigtMatrix full_to_voigt(const Stiffness& c);

/// Isotropic tensor from the Lame moduli: lambda g_ij g_kl + mu (g_ik g_jl + g_il g_jk).
Stiffness isotropic_stiffness(double lambda, double mu);

/// Cubic crystal with axes along the basis vectors.
Stiffness cubic_stiffness(double c11, double c12, double c44);

/// Transversely isotropic about e3; C66 = (C11 - C12) / 2.
Stiffness hexagonal_stiffness(double c11, double c12, double c13, double c33, double c44);

}  // namespace eldecomp
