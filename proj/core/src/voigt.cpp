#include "eldecomp/voigt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "eldecomp/error.hpp"

namespace eldecomp {

VoigtMatrix VoigtMatrix::from_upper_triangle(std::span<const double, 21> upper) {
  VoigtMatrix v;
  std::size_t n = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) {
      v(a, b) = upper[n];
      v(b, a) = upper[n];
      ++n;
    }
  return v;
}

std::array<double, 21> VoigtMatrix::upper_triangle() const {
  std::array<double, 21> out{};
  std::size_t n = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) out[n++] = (*this)(a, b);
  return out;
}

VoigtMatrix::Asymmetry VoigtMatrix::asymmetry() const {
  double scale = 0.0;
  for (const auto& row : m_)
    for (double x : row) scale = std::max(scale, std::abs(x));

  Asymmetry worst;
  double worst_abs = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const double d = std::abs((*this)(a, b) - (*this)(b, a));
      if (d > worst_abs || std::isnan(d)) {
        worst_abs = d;
        worst.row = a;
        worst.col = b;
      }
    }
  worst.relative = scale > 0.0 ? worst_abs / scale : worst_abs;
  return worst;
}

void require_symmetric(const VoigtMatrix& v, double tol) {
  const auto asym = v.asymmetry();
  if (!(asym.relative <= tol)) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "Voigt matrix is not symmetric at (%d,%d): C%d%d = %.17g but C%d%d = %.17g",
                  asym.row + 1, asym.col + 1, asym.row + 1, asym.col + 1, v(asym.row, asym.col),
                  asym.col + 1, asym.row + 1, v(asym.col, asym.row));
    throw VoigtAsymmetry(buf, asym.row + 1, asym.col + 1, asym.relative);
  }
}

Stiffness voigt_to_full(const VoigtMatrix& v, double tol) {
  require_symmetric(v, tol);
  return Stiffness::from_voigt_entries([&](int a, int b) {
    if (a == b) return v(a, a);
    return 0.5 * (v(a, b) + v(b, a));
  });
}

VoigtMatrix full_to_voigt(const Stiffness& c) {
  VoigtMatrix v;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) v(a, b) = c.voigt(a, b);
  return v;
}

Stiffness isotropic_stiffness(double lambda, double mu) {
  return Stiffness::from_components([&](int i, int j, int k, int l) {
    const auto d = [](int p, int q) { return p == q ? 1.0 : 0.0; };
    return lambda * d(i, j) * d(k, l) + mu * (d(i, k) * d(j, l) + d(i, l) * d(j, k));
  });
}

Stiffness cubic_stiffness(double c11, double c12, double c44) {
  return Stiffness::from_voigt_entries([&](int a, int b) {
    if (a < 3 && b < 3) return a == b ? c11 : c12;
    if (a == b) return c44;
    return 0.0;
  });
}

Stiffness hexagonal_stiffness(double c11, double c12, double c13, double c33, double c44) {
  VoigtMatrix v;
  v(0, 0) = v(1, 1) = c11;
  v(0, 1) = v(1, 0) = c12;
  v(0, 2) = v(2, 0) = v(1, 2) = v(2, 1) = c13;
  v(2, 2) = c33;
  v(3, 3) = v(4, 4) = c44;
  v(5, 5) = 0.5 * (c11 - c12);
  return voigt_to_full(v);
}

}  // namespace eldecomp
