#include "eldecomp/tensor.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "eldecomp/error.hpp"

namespace eldecomp {

UnitVec3 UnitVec3::normalized(const Vec3& v) {
  const double len = norm(v);
  if (!(len > 1e-300) || !std::isfinite(len)) {
    throw ValidationError("direction vector has zero or non-finite length");
  }
  return UnitVec3((1.0 / len) * v);
}

UnitVec3 UnitVec3::checked(const Vec3& v, double tol) {
  const double len = norm(v);
  if (!(std::abs(len - 1.0) <= tol)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "direction is not a unit vector (|n| = %.17g)", len);
    throw ValidationError(buf);
  }
  return UnitVec3(v);
}

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Vec3 matvec(const Mat3& a, const Vec3& x) {
  Vec3 y;
  for (int i = 0; i < 3; ++i) y[i] = a[i][0] * x[0] + a[i][1] * x[1] + a[i][2] * x[2];
  return y;
}

double det(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// --- SymMat3 ---------------------------------------------------------------

SymMat3 SymMat3::symmetric_part(const Mat3& a) {
  return from_voigt({a[0][0], a[1][1], a[2][2], 0.5 * (a[1][2] + a[2][1]),
                     0.5 * (a[0][2] + a[2][0]), 0.5 * (a[0][1] + a[1][0])});
}

SymMat3 SymMat3::outer(const Vec3& n) {
  return from_voigt({n[0] * n[0], n[1] * n[1], n[2] * n[2], n[1] * n[2], n[0] * n[2], n[0] * n[1]});
}

Mat3 SymMat3::to_matrix() const {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (*this)(i, j);
  return m;
}

SymMat3 SymMat3::deviator() const {
  const double mean = trace() / 3.0;
  return from_voigt({v_[0] - mean, v_[1] - mean, v_[2] - mean, v_[3], v_[4], v_[5]});
}

double SymMat3::determinant() const { return det(to_matrix()); }

double SymMat3::norm() const { return std::sqrt(double_dot(*this, *this)); }

Vec3 SymMat3::apply(const Vec3& x) const {
  Vec3 y;
  for (int i = 0; i < 3; ++i) y[i] = (*this)(i, 0) * x[0] + (*this)(i, 1) * x[1] + (*this)(i, 2) * x[2];
  return y;
}

double SymMat3::quad(const Vec3& x) const { return dot(x, apply(x)); }

SymMat3 operator+(const SymMat3& a, const SymMat3& b) {
  SymMat3 c;
  for (std::size_t i = 0; i < 6; ++i) c.v_[i] = a.v_[i] + b.v_[i];
  return c;
}

SymMat3 operator-(const SymMat3& a, const SymMat3& b) {
  SymMat3 c;
  for (std::size_t i = 0; i < 6; ++i) c.v_[i] = a.v_[i] - b.v_[i];
  return c;
}

SymMat3 operator*(double s, const SymMat3& a) {
  SymMat3 c;
  for (std::size_t i = 0; i < 6; ++i) c.v_[i] = s * a.v_[i];
  return c;
}

double double_dot(const SymMat3& a, const SymMat3& b) {
  const auto& x = a.voigt();
  const auto& y = b.voigt();
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + 2.0 * (x[3] * y[3] + x[4] * y[4] + x[5] * y[5]);
}

SymMat3 sym_product(const SymMat3& a, const SymMat3& b) {
  Mat3 p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) p[i][j] += a(i, k) * b(k, j);
  return SymMat3::symmetric_part(p);
}

double trace_product(const SymMat3& a, const SymMat3& b, const SymMat3& c) {
  double t = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) t += a(i, j) * b(j, k) * c(k, i);
  return t;
}

SymMat3 rotate(const SymMat3& a, const Mat3& rot) {
  return SymMat3::symmetric_part(matmul(matmul(rot, a.to_matrix()), transpose(rot)));
}

// --- Tensor4 ---------------------------------------------------------------

Tensor4 operator+(const Tensor4& a, const Tensor4& b) {
  Tensor4 c;
  for (std::size_t i = 0; i < 81; ++i) c.d_[i] = a.d_[i] + b.d_[i];
  return c;
}

Tensor4 operator-(const Tensor4& a, const Tensor4& b) {
  Tensor4 c;
  for (std::size_t i = 0; i < 81; ++i) c.d_[i] = a.d_[i] - b.d_[i];
  return c;
}

Tensor4 operator*(double s, const Tensor4& a) {
  Tensor4 c;
  for (std::size_t i = 0; i < 81; ++i) c.d_[i] = s * a.d_[i];
  return c;
}

double frobenius_inner(const Tensor4& a, const Tensor4& b) {
  double s = 0.0;
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t i = 0; i < 81; ++i) s += x[i] * y[i];
  return s;
}

double frobenius_norm(const Tensor4& a) { return std::sqrt(frobenius_inner(a, a)); }

Tensor4 rotate(const Tensor4& a, const Mat3& rot) {
  // Four successive single-index transforms, O(4 * 3^5).
  Tensor4 t = a;
  for (int slot = 0; slot < 4; ++slot) {
    Tensor4 u;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            std::array<int, 4> idx{i, j, k, l};
            double s = 0.0;
            for (int m = 0; m < 3; ++m) {
              std::array<int, 4> src = idx;
              src[static_cast<std::size_t>(slot)] = m;
              s += rot[idx[static_cast<std::size_t>(slot)]][m] * t(src[0], src[1], src[2], src[3]);
            }
            u(i, j, k, l) = s;
          }
    t = u;
  }
  return t;
}

// --- Stiffness ---------------------------------------------------------------

void Stiffness::fill_orbit(int a, int b, double value) {
  const auto [i, j] = kVoigtPairs[static_cast<std::size_t>(a)];
  const auto [k, l] = kVoigtPairs[static_cast<std::size_t>(b)];
  t_(i, j, k, l) = value;
  t_(j, i, k, l) = value;
  t_(i, j, l, k) = value;
  t_(j, i, l, k) = value;
  t_(k, l, i, j) = value;
  t_(l, k, i, j) = value;
  t_(k, l, j, i) = value;
  t_(l, k, j, i) = value;
}

double Stiffness::voigt(int a, int b) const {
  const auto [i, j] = kVoigtPairs[static_cast<std::size_t>(a)];
  const auto [k, l] = kVoigtPairs[static_cast<std::size_t>(b)];
  return t_(i, j, k, l);
}

Stiffness operator+(const Stiffness& a, const Stiffness& b) {
  Stiffness c;
  c.t_ = a.t_ + b.t_;
  return c;
}

Stiffness operator-(const Stiffness& a, const Stiffness& b) {
  Stiffness c;
  c.t_ = a.t_ - b.t_;
  return c;
}

Stiffness operator*(double s, const Stiffness& a) {
  Stiffness c;
  c.t_ = s * a.t_;
  return c;
}

double frobenius_inner4(const Stiffness& a, const Stiffness& b) {
  return frobenius_inner(a.tensor(), b.tensor());
}

double frobenius_norm4(const Stiffness& c) { return frobenius_norm(c.tensor()); }

Stiffness rotate(const Stiffness& c, const Mat3& rot) {
  const Tensor4 r = rotate(c.tensor(), rot);
  return Stiffness::from_components([&](int i, int j, int k, int l) { return r(i, j, k, l); });
}

SymMat3 contract2(const Stiffness& c, const SymMat3& eps) {
  std::array<double, 6> out{};
  for (std::size_t a = 0; a < 6; ++a) {
    const auto [i, j] = kVoigtPairs[a];
    double s = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) s += c(i, j, k, l) * eps(k, l);
    out[a] = s;
  }
  return SymMat3::from_voigt(out);
}

double contract_quadratic(const Stiffness& c, const SymMat3& eps) {
  return double_dot(contract2(c, eps), eps);
}

SymMat3 partial_trace(const Stiffness& c) { return contract2(c, SymMat3::identity()); }

double full_trace(const Stiffness& c) { return partial_trace(c).trace(); }

SymMat3 contract_nn(const Stiffness& c, const Vec3& n) {
  std::array<double, 6> out{};
  for (std::size_t a = 0; a < 6; ++a) {
    const auto [i, l] = kVoigtPairs[a];
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += c(i, j, k, l) * n[j] * n[k];
    out[a] = s;
  }
  return SymMat3::from_voigt(out);
}

double contract_nnnn(const Stiffness& c, const Vec3& n) { return contract_nn(c, n).quad(n); }

// --- symmetry validation -----------------------------------------------------

SymmetryReport check_symmetries(const Tensor4& raw, double tol) {
  if (!(tol >= 0.0)) throw ValidationError("symmetry tolerance must be non-negative");

  SymmetryReport rep;
  rep.projected = Stiffness::from_components([&](int i, int j, int k, int l) {
    std::array<double, 8> orbit{raw(i, j, k, l), raw(j, i, k, l), raw(i, j, l, k), raw(j, i, l, k),
                                raw(k, l, i, j), raw(l, k, i, j), raw(k, l, j, i), raw(l, k, j, i)};
    // Summing in sorted order makes the average independent of which orbit
    // member is the representative.
    std::sort(orbit.begin(), orbit.end());
    double s = 0.0;
    for (double x : orbit) s += x;
    return s / 8.0;
  });

  double scale = 0.0;
  for (double x : raw.data()) scale = std::max(scale, std::abs(x));

  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double d = std::abs(raw(i, j, k, l) - rep.projected(i, j, k, l));
          if (d > worst || std::isnan(d)) {
            worst = d;
            rep.worst_index = {i, j, k, l};
          }
        }
  rep.max_relative_correction = scale > 0.0 ? worst / scale : worst;
  rep.ok = rep.max_relative_correction <= tol;
  return rep;
}

Stiffness validate_symmetries(const Tensor4& raw, double tol) {
  SymmetryReport rep = check_symmetries(raw, tol);
  if (!rep.ok) {
    const auto& w = rep.worst_index;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "stiffness violates minor/major symmetry at (%d,%d,%d,%d): relative correction %.3g > tol %.3g",
                  w[0], w[1], w[2], w[3], rep.max_relative_correction, tol);
    throw SymmetryViolation(buf, w, rep.max_relative_correction);
  }
  return rep.projected;
}

}  // namespace eldecomp
