#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "eldecomp/tensor.hpp"

namespace eldecomp {

template <std::size_t N>
using SquareMatrix = std::array<std::array<double, N>, N>;

/// Eigen-decomposition of a symmetric N x N matrix.
template <std::size_t N>
struct SymEigen {
  std::array<double, N> values{};              // descending
  std::array<std::array<double, N>, N> vectors{};  // vectors[k] pairs with values[k]
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm drops
/// to rel_tol * ||a||_F or after max_sweeps sweeps. Only the upper triangle
/// of `a` is read.
template <std::size_t N>
SymEigen<N> jacobi_eigen(SquareMatrix<N> a, double rel_tol = 1e-13, int max_sweeps = 50) {
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) a[q][p] = a[p][q];

  SquareMatrix<N> v{};
  for (std::size_t p = 0; p < N; ++p) v[p][p] = 1.0;

  double total = 0.0;
  for (const auto& row : a)
    for (double x : row) total += x * x;
  const double threshold = rel_tol * std::sqrt(total);

  SymEigen<N> out;
  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) s += 2.0 * a[p][q] * a[p][q];
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    if (off_norm() <= threshold) {
      out.converged = true;
      out.sweeps = sweep;
      break;
    }
    if (sweep == max_sweeps) {
      out.sweeps = sweep;
      break;
    }
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // a <- J^T a J with J the rotation in the (p, q) plane.
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a[src][src];
    // Sign convention: the largest-magnitude component is positive.
    std::size_t big = 0;
    for (std::size_t r = 1; r < N; ++r)
      if (std::abs(v[r][src]) > std::abs(v[big][src])) big = r;
    const double sign = v[big][src] < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < N; ++r) out.vectors[k][r] = sign * v[r][src];
  }
  return out;
}

/// Relative gap below which two eigenvalues are reported as degenerate.
inline constexpr double kDegenerateEigenTol = 1e-9;

struct Eigen3 {
  std::array<double, 3> values{};  // descending
  std::array<Vec3, 3> vectors{};   // orthonormal frame
  /// Degeneracy of the pairs (0,1), (1,2), (0,2): |l_i - l_j| <= 1e-9 ||a||.
  std::array<bool, 3> degenerate{};

  [[nodiscard]] bool any_degenerate() const { return degenerate[0] || degenerate[1] || degenerate[2]; }
};

Eigen3 eig_sym3(const SymMat3& a);

}  // namespace eldecomp
