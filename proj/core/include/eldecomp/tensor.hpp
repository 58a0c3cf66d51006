// Small fixed-size tensors in 3-D Euclidean space with an orthonormal basis,
// so upper and lower indices coincide and g_ij = delta_ij.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>

namespace eldecomp {

/// Default relative tolerance used when symmetry of ingested data is checked.
inline constexpr double kDefaultSymmetryTol = 1e-8;

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

struct Vec3 {
  std::array<double, 3> v{};

  constexpr double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  constexpr double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {{a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]}};
  }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {{a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]}};
  }
  friend constexpr Vec3 operator*(double s, const Vec3& a) {
    return {{s * a.v[0], s * a.v[1], s * a.v[2]}};
  }
  friend constexpr Vec3 operator-(const Vec3& a) { return {{-a.v[0], -a.v[1], -a.v[2]}}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Direction on the unit sphere; |n| = 1 within 1e-12.
class UnitVec3 {
 public:
  /// Scales v to unit length. Throws ValidationError for a (near-)zero vector.
  static UnitVec3 normalized(const Vec3& v);
  /// Accepts v only if |v| is already 1 within tol. Throws ValidationError otherwise.
  static UnitVec3 checked(const Vec3& v, double tol = 1e-12);

  static UnitVec3 e1() { return UnitVec3(Vec3{{1.0, 0.0, 0.0}}); }
  static UnitVec3 e2() { return UnitVec3(Vec3{{0.0, 1.0, 0.0}}); }
  static UnitVec3 e3() { return UnitVec3(Vec3{{0.0, 0.0, 1.0}}); }

  [[nodiscard]] const Vec3& vec() const noexcept { return n_; }
  double operator[](int i) const { return n_[i]; }
  operator const Vec3&() const noexcept { return n_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const UnitVec3&, const UnitVec3&) = default;

 private:
  explicit UnitVec3(const Vec3& n) : n_(n) {}
  Vec3 n_;
};

// ---------------------------------------------------------------------------
// Rank-2
// ---------------------------------------------------------------------------

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 identity3();
Mat3 transpose(const Mat3& a);
Mat3 matmul(const Mat3& a, const Mat3& b);
Vec3 matvec(const Mat3& a, const Vec3& x);
double det(const Mat3& a);

/// Zero-based Voigt index of the symmetric pair (i, j):
/// 11->0, 22->1, 33->2, 23->3, 31->4, 12->5.
constexpr int voigt_index(int i, int j) {
  if (i == j) return i;
  return 6 - i - j;  // {1,2}->3, {0,2}->4, {0,1}->5
}

/// Index pair (i, j) for each zero-based Voigt index.
inline constexpr std::array<std::pair<int, int>, 6> kVoigtPairs{
    {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 0}, {0, 1}}};

/// Symmetric 3x3 matrix, stored as its six independent entries in Voigt order
/// (a11, a22, a33, a23, a13, a12). Symmetry is exact by construction.
class SymMat3 {
 public:
  constexpr SymMat3() = default;

  static constexpr SymMat3 from_voigt(const std::array<double, 6>& v) {
    SymMat3 m;
    m.v_ = v;
    return m;
  }
  static constexpr SymMat3 diag(double a, double b, double c) {
    return from_voigt({a, b, c, 0.0, 0.0, 0.0});
  }
  static constexpr SymMat3 identity() { return diag(1.0, 1.0, 1.0); }
  /// (a + a^T) / 2.
  static SymMat3 symmetric_part(const Mat3& a);
  /// n (x) n.
  static SymMat3 outer(const Vec3& n);

  constexpr double operator()(int i, int j) const {
    return v_[static_cast<std::size_t>(voigt_index(i, j))];
  }
  [[nodiscard]] constexpr const std::array<double, 6>& voigt() const noexcept { return v_; }
  [[nodiscard]] Mat3 to_matrix() const;

  [[nodiscard]] constexpr double trace() const { return v_[0] + v_[1] + v_[2]; }
  /// Traceless part a - (tr a / 3) I.
  [[nodiscard]] SymMat3 deviator() const;
  [[nodiscard]] double determinant() const;
  [[nodiscard]] double norm() const;  // Frobenius over all nine entries
  /// a . x
  [[nodiscard]] Vec3 apply(const Vec3& x) const;
  /// x^T a x
  [[nodiscard]] double quad(const Vec3& x) const;

  friend SymMat3 operator+(const SymMat3& a, const SymMat3& b);
  friend SymMat3 operator-(const SymMat3& a, const SymMat3& b);
  friend SymMat3 operator*(double s, const SymMat3& a);
  friend SymMat3 operator-(const SymMat3& a) { return -1.0 * a; }
  friend bool operator==(const SymMat3&, const SymMat3&) = default;

 private:
  std::array<double, 6> v_{};
};

/// Full double contraction a_ij b_ij.
double double_dot(const SymMat3& a, const SymMat3& b);
/// Symmetric part of the matrix product a . b.
SymMat3 sym_product(const SymMat3& a, const SymMat3& b);
/// tr(a . b . c)
double trace_product(const SymMat3& a, const SymMat3& b, const SymMat3& c);
/// R a R^T
SymMat3 rotate(const SymMat3& a, const Mat3& rot);

// ---------------------------------------------------------------------------
// Rank-4
// ---------------------------------------------------------------------------

/// Dense 3x3x3x3 array with no assumed symmetry.
class Tensor4 {
 public:
  constexpr Tensor4() = default;

  template <class F>
  static Tensor4 generate(F&& f) {
    Tensor4 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) t(i, j, k, l) = f(i, j, k, l);
    return t;
  }

  static constexpr std::size_t offset(int i, int j, int k, int l) {
    return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l);
  }
  constexpr double operator()(int i, int j, int k, int l) const { return d_[offset(i, j, k, l)]; }
  constexpr double& operator()(int i, int j, int k, int l) { return d_[offset(i, j, k, l)]; }
  [[nodiscard]] std::span<const double, 81> data() const noexcept { return d_; }

  friend Tensor4 operator+(const Tensor4& a, const Tensor4& b);
  friend Tensor4 operator-(const Tensor4& a, const Tensor4& b);
  friend Tensor4 operator*(double s, const Tensor4& a);
  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::array<double, 81> d_{};
};

double frobenius_inner(const Tensor4& a, const Tensor4& b);
double frobenius_norm(const Tensor4& a);
/// a'_{ijkl} = R_ia R_jb R_kc R_ld a_{abcd}
Tensor4 rotate(const Tensor4& a, const Mat3& rot);

/// Rank-4 tensor with the minor and major symmetries of an elasticity tensor,
/// c_ijkl = c_jikl = c_ijlk = c_klij. The symmetries hold exactly: every value
/// is written once per symmetry orbit.
class Stiffness {
 public:
  constexpr Stiffness() = default;

  /// Builds a tensor from f(I, J), evaluated once for every Voigt pair
  /// 0 <= I <= J < 6, and copied to the whole orbit.
  template <class F>
  static Stiffness from_voigt_entries(F&& f) {
    Stiffness c;
    for (int a = 0; a < 6; ++a)
      for (int b = a; b < 6; ++b) c.fill_orbit(a, b, f(a, b));
    return c;
  }

  /// Builds a tensor from f(i, j, k, l), evaluated at one representative per
  /// orbit. f must respect the symmetries for the result to be meaningful.
  template <class F>
  static Stiffness from_components(F&& f) {
    return from_voigt_entries([&](int a, int b) {
      const auto [i, j] = kVoigtPairs[static_cast<std::size_t>(a)];
      const auto [k, l] = kVoigtPairs[static_cast<std::size_t>(b)];
      return f(i, j, k, l);
    });
  }

  constexpr double operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }
  /// Entry at zero-based Voigt position (I, J).
  [[nodiscard]] double voigt(int a, int b) const;
  [[nodiscard]] const Tensor4& tensor() const noexcept { return t_; }

  friend Stiffness operator+(const Stiffness& a, const Stiffness& b);
  friend Stiffness operator-(const Stiffness& a, const Stiffness& b);
  friend Stiffness operator*(double s, const Stiffness& a);
  friend Stiffness operator-(const Stiffness& a) { return -1.0 * a; }
  friend bool operator==(const Stiffness&, const Stiffness&) = default;

 private:
  void fill_orbit(int a, int b, double value);
  Tensor4 t_;
};

double frobenius_inner4(const Stiffness& a, const Stiffness& b);
double frobenius_norm4(const Stiffness& c);
Stiffness rotate(const Stiffness& c, const Mat3& rot);

/// c_ijkl eps_kl
SymMat3 contract2(const Stiffness& c, const SymMat3& eps);
/// c_ijkl eps_ij eps_kl
double contract_quadratic(const Stiffness& c, const SymMat3& eps);
/// c_ijkk
SymMat3 partial_trace(const Stiffness& c);
/// c_iijj
double full_trace(const Stiffness& c);
/// c_ijkl n_j n_k
SymMat3 contract_nn(const Stiffness& c, const Vec3& n);
/// c_ijkl n_i n_j n_k n_l
double contract_nnnn(const Stiffness& c, const Vec3& n);

/// Permutation symbol: +1 for even permutations of (0,1,2), -1 for odd, 0 otherwise.
constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

/// Outcome of a symmetry check on a raw rank-4 array.
struct SymmetryReport {
  bool ok = false;
  /// Largest |raw - projected| divided by the largest |raw| entry.
  double max_relative_correction = 0.0;
  std::array<int, 4> worst_index{};
  /// Average over the eight-element minor/major symmetry orbit.
  Stiffness projected;
};

SymmetryReport check_symmetries(const Tensor4& raw, double tol = kDefaultSymmetryTol);

/// Returns the orbit-averaged tensor if the required correction is within tol
/// (relative to the largest entry); throws SymmetryViolation otherwise.
Stiffness validate_symmetries(const Tensor4& raw, double tol = kDefaultSymmetryTol);

}  // namespace eldecomp
