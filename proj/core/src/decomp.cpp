#include "eldecomp/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "eldecomp/error.hpp"

namespace eldecomp {
namespace {

constexpr double kron(int i, int j) { return i == j ? 1.0 : 0.0; }

// Sum of three values in sorted order, so that every member of a symmetry
// orbit produces the bit-identical result.
double sorted_sum3(double x, double y, double z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return (x + y) + z;
}

SymMat3 delta_unchecked(const Stiffness& a) {
  std::array<double, 6> out{};
  for (std::size_t v = 0; v < 6; ++v) {
    const auto [m, n] = kVoigtPairs[v];
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) {
        const int e1 = levi_civita(m, i, l);
        if (e1 == 0) continue;
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            const int e2 = levi_civita(n, j, k);
            if (e2 == 0) continue;
            s += e1 * e2 * a(i, j, k, l);
          }
      }
    out[v] = s / 3.0;
  }
  return SymMat3::from_voigt(out);
}

// 1/2 (eps_ikm eps_jln + eps_ilm eps_jkn) X_mn for symmetric X.
Stiffness epsilon_lift(const SymMat3& x) {
  return Stiffness::from_components([&](int i, int j, int k, int l) {
    double s = 0.0;
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) {
        const int t = levi_civita(i, k, m) * levi_civita(j, l, n) +
                      levi_civita(i, l, m) * levi_civita(j, k, n);
        if (t != 0) s += t * x(m, n);
      }
    return 0.5 * s;
  });
}

}  // namespace

SAParts sa_split(const Stiffness& c) {
  SAParts out;
  out.cauchy = Stiffness::from_components([&](int i, int j, int k, int l) {
    return sorted_sum3(c(i, j, k, l), c(i, k, l, j), c(i, l, j, k)) / 3.0;
  });
  out.non_cauchy = c - out.cauchy;
  return out;
}

double cyclic_defect(const Stiffness& a) {
  double scale = 0.0;
  for (double x : a.tensor().data()) scale = std::max(scale, std::abs(x));
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          worst = std::max(worst, std::abs(a(i, j, k, l) + a(i, k, l, j) + a(i, l, j, k)) / 3.0);
  return scale > 0.0 ? worst / scale : worst;
}

DeltaTensor delta_from_a(const Stiffness& a, double tol) {
  const double defect = cyclic_defect(a);
  if (!(defect <= tol)) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "tensor is not a non-Cauchy part: |A_i(jkl)| relative defect %.3g > tol %.3g", defect, tol);
    throw ValidationError(buf);
  }
  return DeltaTensor{delta_unchecked(a)};
}

Stiffness a_from_delta(const DeltaTensor& delta) { return epsilon_lift(delta.d); }

IrreducibleParts so3_refine(const SAParts& parts) {
  const Stiffness& s = parts.cauchy;
  const Stiffness& a = parts.non_cauchy;

  IrreducibleParts out;
  const SymMat3 s_trace = partial_trace(s);
  out.s_scalar = s_trace.trace();
  out.p = s_trace.deviator();

  const double S = out.s_scalar;
  const SymMat3& P = out.p;
  out.s1 = Stiffness::from_components([&](int i, int j, int k, int l) {
    return S / 15.0 * (kron(i, j) * kron(k, l) + kron(i, k) * kron(j, l) + kron(i, l) * kron(j, k));
  });
  out.s2 = Stiffness::from_components([&](int i, int j, int k, int l) {
    return (P(i, j) * kron(k, l) + P(i, k) * kron(j, l) + P(i, l) * kron(j, k) + P(j, k) * kron(i, l) +
            P(j, l) * kron(i, k) + P(k, l) * kron(i, j)) /
           7.0;
  });
  out.r = s - out.s1 - out.s2;
  out.s3 = out.r;

  out.a_scalar = full_trace(a);
  out.delta = DeltaTensor{delta_unchecked(a)};
  out.q = out.delta.d.deviator();

  const double A = out.a_scalar;
  const SymMat3& Q = out.q;
  out.a1 = Stiffness::from_components([&](int i, int j, int k, int l) {
    return A / 12.0 * (2.0 * kron(i, j) * kron(k, l) - kron(i, l) * kron(j, k) - kron(i, k) * kron(j, l));
  });
  out.a2 = Stiffness::from_components([&](int i, int j, int k, int l) {
    return 0.5 * (kron(i, l) * Q(j, k) + kron(i, k) * Q(j, l) + kron(j, l) * Q(i, k) + kron(j, k) * Q(i, l) -
                  2.0 * kron(i, j) * Q(k, l) - 2.0 * kron(k, l) * Q(i, j));
  });
  return out;
}

IrreducibleParts decompose(const Stiffness& c) { return so3_refine(sa_split(c)); }

double a_scalar_voigt(const Stiffness& c) {
  const auto C = [&](int a, int b) { return c.voigt(a - 1, b - 1); };
  return 4.0 / 3.0 * ((C(1, 2) - C(4, 4)) + (C(1, 3) - C(5, 5)) + (C(2, 3) - C(6, 6)));
}

SymMat3 q_components_voigt(const Stiffness& c) {
  const auto C = [&](int a, int b) { return c.voigt(a - 1, b - 1); };
  const double A = a_scalar_voigt(c);
  constexpr double k = 2.0 / 3.0;
  return SymMat3::from_voigt({k * (C(2, 3) - C(4, 4)) - A / 6.0,  // Q11
                              k * (C(1, 3) - C(5, 5)) - A / 6.0,  // Q22
                              k * (C(1, 2) - C(6, 6)) - A / 6.0,  // Q33
                              k * (C(5, 6) - C(1, 4)),            // Q23
                              k * (C(4, 6) - C(2, 5)),            // Q13
                              k * (C(4, 5) - C(3, 6))});          // Q12
}

double cauchy_factor(const Stiffness& c) {
  const double total = frobenius_norm4(c);
  if (!(total > 0.0)) throw ValidationError("Cauchy factor is undefined for the zero tensor");
  const SAParts parts = sa_split(c);
  const double ns = frobenius_norm4(parts.cauchy);
  const double na = frobenius_norm4(parts.non_cauchy);
  return ns / std::sqrt(ns * ns + na * na);
}

std::string_view to_string(ASign s) {
  switch (s) {
    case ASign::positive:
      return "positive";
    case ASign::negative:
      return "negative";
    case ASign::zero:
      return "zero-within-tol";
  }
  return "zero-within-tol";
}

Classification classify(const Stiffness& c, double tol) { return classify(c, decompose(c), tol); }

Classification classify(const Stiffness& c, const IrreducibleParts& parts, double tol) {
  const double scale = frobenius_norm4(c);
  const double limit = tol * scale;
  const double ns = frobenius_norm4(parts.cauchy());
  const double na = frobenius_norm4(parts.non_cauchy());

  Classification cls;
  cls.s_scalar = parts.s_scalar;
  cls.a_scalar = parts.a_scalar;
  cls.full_cauchy = na <= limit;
  cls.partial_cauchy = parts.q_norm() <= limit;
  if (std::abs(parts.a_scalar) <= limit) {
    cls.a_sign = ASign::zero;
  } else {
    cls.a_sign = parts.a_scalar > 0.0 ? ASign::positive : ASign::negative;
  }
  const double denom = std::sqrt(ns * ns + na * na);
  cls.cauchy_factor = denom > 0.0 ? ns / denom : 1.0;
  cls.p_equals_q = (parts.p - parts.q).norm() <= limit;
  cls.invariants = {parts.p_norm(), parts.q_norm(), parts.r_norm()};
  return cls;
}

std::string_view material_class(const Classification& cls) {
  switch (cls.a_sign) {
    case ASign::positive:
      return "A+";
    case ASign::negative:
      return "A-";
    case ASign::zero:
      return "A0";
  }
  return "A0";
}

Tensor4 general_relation_residual(const Stiffness& c, double beta, double gamma) {
  if (beta == 0.0 && gamma == 0.0) {
    throw ValidationError("general Cauchy relation needs (beta, gamma) != (0, 0)");
  }
  return Tensor4::generate([&](int i, int j, int k, int l) {
    const double cijkl = c(i, j, k, l);
    return beta * (c(i, k, l, j) - cijkl) + gamma * (c(i, l, k, j) - cijkl);
  });
}

MNParts mn_split(const Stiffness& c) {
  MNParts out;
  out.m = Tensor4::generate([&](int i, int j, int k, int l) { return 0.5 * (c(i, j, k, l) + c(i, k, j, l)); });
  out.n = Tensor4::generate([&](int i, int j, int k, int l) { return 0.5 * (c(i, j, k, l) - c(i, k, j, l)); });
  return out;
}

}  // namespace eldecomp
