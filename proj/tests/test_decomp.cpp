#include <gtest/gtest.h>

#include <cmath>

#include "eldecomp/decomp.hpp"
#include "eldecomp/error.hpp"
#include "eldecomp/voigt.hpp"
#include "support/oracles.hpp"

using namespace eldecomp;

namespace {

double rel(const Stiffness& a, const Stiffness& b) { return oracle::rel_diff(oracle::to_raw(a), oracle::to_raw(b)); }

double max_abs(const SymMat3& m) {
  double x = 0.0;
  for (double v : m.voigt()) x = std::max(x, std::abs(v));
  return x;
}

SymMat3 from_rows(const std::array<std::array<double, 3>, 3>& d) {
  return SymMat3::from_voigt({d[0][0], d[1][1], d[2][2], d[1][2], d[0][2], d[0][1]});
}

// g_kl contraction of the last index pair.
SymMat3 trace_kl(const Stiffness& c) { return partial_trace(c); }

}  // namespace

TEST(SASplit, CauchyPartIsTheFullSymmetrization) {
  oracle::Gen g(21);
  for (int t = 0; t < 200; ++t) {
    const Stiffness c = g.any_stiffness();
    const SAParts p = sa_split(c);
    const oracle::Raw4 s = oracle::full_symmetrize(oracle::to_raw(c));
    EXPECT_LT(oracle::rel_diff(oracle::to_raw(p.cauchy), s), 1e-14);
    EXPECT_LT(cyclic_defect(p.non_cauchy), 1e-14);
    EXPECT_LT(oracle::rel_diff(oracle::to_raw(p.cauchy + p.non_cauchy), oracle::to_raw(c)), 1e-15);
  }
}

TEST(SASplit, CauchyPartIsExactlyTotallySymmetric) {
  oracle::Gen g(22);
  const SAParts p = sa_split(g.any_stiffness());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          EXPECT_EQ(p.cauchy(i, j, k, l), p.cauchy(i, k, j, l));
          EXPECT_EQ(p.cauchy(i, j, k, l), p.cauchy(i, l, k, j));
        }
}

TEST(Delta, MatchesEpsilonContractionAndRoundTrips) {
  oracle::Gen g(23);
  for (int t = 0; t < 100; ++t) {
    const Stiffness a = sa_split(g.any_stiffness()).non_cauchy;
    const DeltaTensor d = delta_from_a(a);
    const SymMat3 ref = from_rows(oracle::delta(oracle::to_raw(a)));
    EXPECT_LT(max_abs(d.d - ref), 1e-14);
    EXPECT_LT(rel(a_from_delta(d), a), 1e-13);
    EXPECT_LT(oracle::rel_diff(oracle::to_raw(a_from_delta(d)), oracle::lift_delta(d.d.to_matrix())), 1e-15);
    EXPECT_NEAR(d.trace(), full_trace(a) / 2.0, 1e-14);
  }
}

TEST(Delta, RejectsTensorsThatAreNotNonCauchy) {
  EXPECT_THROW((void)delta_from_a(cubic_stiffness(2.0, 1.0, 0.5)), ValidationError);
}

TEST(SO3Refine, PartsReconstructAndAreOrthogonal) {
  oracle::Gen g(24);
  for (int t = 0; t < 200; ++t) {
    const Stiffness c = g.any_stiffness();
    const IrreducibleParts p = decompose(c);
    EXPECT_LT(rel(p.reconstruct(), c), 1e-13);
    const std::array<const Stiffness*, 5> parts{&p.s1, &p.s2, &p.s3, &p.a1, &p.a2};
    const double scale = frobenius_inner4(c, c);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) EXPECT_LT(std::abs(frobenius_inner4(*parts[i], *parts[j])), 1e-13 * scale);
  }
}

TEST(SO3Refine, TraceIdentities) {
  oracle::Gen g(25);
  for (int t = 0; t < 100; ++t) {
    const Stiffness c = g.any_stiffness();
    const IrreducibleParts p = decompose(c);
    const double tol = 1e-13 * frobenius_norm4(c);
    EXPECT_LT(max_abs(trace_kl(p.s1) - (p.s_scalar / 3.0) * SymMat3::identity()), tol);
    EXPECT_LT(max_abs(trace_kl(p.s2) - p.p), tol);
    EXPECT_LT(max_abs(trace_kl(p.r)), tol);
    EXPECT_LT(max_abs(trace_kl(p.a1) - (p.a_scalar / 3.0) * SymMat3::identity()), tol);
    EXPECT_LT(max_abs(trace_kl(p.a2) + p.q), tol);
    EXPECT_NEAR(p.p.trace(), 0.0, tol);
    EXPECT_NEAR(p.q.trace(), 0.0, tol);
    EXPECT_LT(max_abs(p.q - p.delta.d.deviator()), tol);
    EXPECT_LT(oracle::rel_diff(oracle::to_raw(p.r), oracle::full_symmetrize(oracle::to_raw(p.r))), 1e-13);
  }
}

TEST(SO3Refine, IsotropicScalars) {
  for (double lambda : {-0.5, 0.0, 1.0, 2.0, 7.5})
    for (double mu : {0.3, 1.0, 4.0}) {
      const IrreducibleParts p = decompose(isotropic_stiffness(lambda, mu));
      EXPECT_NEAR(p.s_scalar, 5.0 * (lambda + 2.0 * mu), 1e-13);
      EXPECT_NEAR(p.a_scalar, 4.0 * (lambda - mu), 1e-13);
      EXPECT_LT(p.p_norm(), 1e-14);
      EXPECT_LT(p.q_norm(), 1e-14);
      EXPECT_LT(p.r_norm(), 1e-13);
    }
}

TEST(SO3Refine, CubicHasOnlyScalarsAndR) {
  const IrreducibleParts p = decompose(cubic_stiffness(5.224, 2.044, 1.608));
  EXPECT_LT(p.p_norm(), 1e-14);
  EXPECT_LT(p.q_norm(), 1e-14);
  EXPECT_GT(p.r_norm(), 1e-2);
  EXPECT_NEAR(p.a_scalar, 4.0 * (2.044 - 1.608), 1e-13);
  EXPECT_NEAR(p.s_scalar, 3.0 * 5.224 + 2.0 * 2.044 + 4.0 * 1.608, 1e-12);
  EXPECT_NEAR(p.s_scalar + p.a_scalar, 3.0 * 5.224 + 6.0 * 2.044, 1e-12);
}

TEST(SO3Refine, HexagonalDeviatorsAreAxial) {
  const IrreducibleParts p = decompose(hexagonal_stiffness(3.0, 1.1, 0.8, 2.5, 0.7));
  for (const SymMat3* m : {&p.p, &p.q}) {
    EXPECT_NEAR((*m)(0, 1), 0.0, 1e-15);
    EXPECT_NEAR((*m)(0, 2), 0.0, 1e-15);
    EXPECT_NEAR((*m)(1, 2), 0.0, 1e-15);
    EXPECT_NEAR((*m)(0, 0), (*m)(1, 1), 1e-14);
    EXPECT_NEAR((*m)(2, 2), -2.0 * (*m)(0, 0), 1e-14);
  }
}

TEST(SO3Refine, CommutesWithRotation) {
  oracle::Gen g(26);
  for (int t = 0; t < 30; ++t) {
    const Stiffness c = g.any_stiffness();
    const Mat3 r = g.rotation();
    const IrreducibleParts a = decompose(rotate(c, r));
    const IrreducibleParts b = decompose(c);
    EXPECT_NEAR(a.s_scalar, b.s_scalar, 1e-13);
    EXPECT_NEAR(a.a_scalar, b.a_scalar, 1e-13);
    EXPECT_LT(max_abs(a.p - rotate(b.p, r)), 1e-13);
    EXPECT_LT(max_abs(a.q - rotate(b.q, r)), 1e-13);
    EXPECT_LT(oracle::max_abs(oracle::sub(oracle::to_raw(a.r), oracle::rotate(oracle::to_raw(b.r), r))), 1e-13);
  }
}

TEST(VoigtFormulas, AScalarMatchesTensorTrace) {
  oracle::Gen g(27);
  for (int t = 0; t < 100; ++t) {
    const Stiffness c = g.any_stiffness();
    EXPECT_NEAR(a_scalar_voigt(c), decompose(c).a_scalar, 1e-13);
  }
}

TEST(VoigtFormulas, QComponentsMatchTensorQ) {
  oracle::Gen g(28);
  for (int t = 0; t < 100; ++t) {
    const Stiffness c = g.any_stiffness();
    const SymMat3 q = decompose(c).q;
    EXPECT_LT(max_abs(q_components_voigt(c) - q), 1e-12 * std::max(1.0, q.norm()));
  }
}

// A variant of the Voigt formulas, Q11 = (4/3)(C23 - C44) - A/3 and
// Q12 = C45 - C36, is scaled by 2 on the diagonal and 3/2 off it relative to
// the traceless part of Delta. Its zero set is the same, so the partial
// Cauchy relations it expresses are unaffected.
TEST(VoigtFormulas, MisscaledVariantHasSameZeros) {
  oracle::Gen g(29);
  const Stiffness c = g.any_stiffness();
  const auto C = [&](int a, int b) { return c.voigt(a - 1, b - 1); };
  const double a = a_scalar_voigt(c);
  const SymMat3 q = q_components_voigt(c);
  const double variant11 = 4.0 / 3.0 * (C(2, 3) - C(4, 4)) - a / 3.0;
  const double variant12 = C(4, 5) - C(3, 6);
  EXPECT_NEAR(variant11, 2.0 * q(0, 0), 1e-13);
  EXPECT_NEAR(variant12, 1.5 * q(0, 1), 1e-13);
  EXPECT_GT(std::abs(variant11 - q(0, 0)), 1e-3);

  const IrreducibleParts cub = decompose(cubic_stiffness(1.658, 0.639, 0.796));
  EXPECT_LT(cub.q_norm(), 1e-14);
  EXPECT_NEAR(4.0 / 3.0 * (0.639 - 0.796) - a_scalar_voigt(cubic_stiffness(1.658, 0.639, 0.796)) / 3.0, 0.0, 1e-14);
}

TEST(Classification, TableValues) {
  const Stiffness w = cubic_stiffness(5.224, 2.044, 1.608);
  const Stiffness si = cubic_stiffness(1.658, 0.639, 0.796);
  EXPECT_NEAR(a_scalar_voigt(w), 1.744, 1e-12);
  EXPECT_NEAR(a_scalar_voigt(si), -0.628, 1e-12);
  const Classification cw = classify(w);
  const Classification cs = classify(si);
  EXPECT_EQ(cw.a_sign, ASign::positive);
  EXPECT_EQ(cs.a_sign, ASign::negative);
  EXPECT_EQ(material_class(cw), "A+");
  EXPECT_EQ(material_class(cs), "A-");
  EXPECT_TRUE(cs.partial_cauchy);
  EXPECT_FALSE(cs.full_cauchy);
  EXPECT_TRUE(cs.p_equals_q);
}

TEST(Classification, IsotropicWithEqualLameModuliIsFullCauchy) {
  const Classification c = classify(isotropic_stiffness(1.3, 1.3));
  EXPECT_TRUE(c.full_cauchy);
  EXPECT_TRUE(c.partial_cauchy);
  EXPECT_EQ(c.a_sign, ASign::zero);
  EXPECT_EQ(to_string(c.a_sign), "zero-within-tol");
  EXPECT_DOUBLE_EQ(c.cauchy_factor, 1.0);
  EXPECT_DOUBLE_EQ(cauchy_factor(isotropic_stiffness(1.3, 1.3)), 1.0);
}

TEST(CauchyFactor, BoundaryValues) {
  oracle::Gen g(30);
  const Stiffness a = oracle::from_raw(g.non_cauchy_part());
  EXPECT_LT(cauchy_factor(a), 1e-14);
  const Stiffness c = g.any_stiffness();
  const double f = cauchy_factor(c);
  EXPECT_GT(f, 0.0);
  EXPECT_LE(f, 1.0);
  EXPECT_THROW((void)cauchy_factor(Stiffness{}), ValidationError);
}

TEST(GeneralRelation, EqualWeightsGiveMinusThreeA) {
  oracle::Gen g(31);
  const Stiffness c = g.any_stiffness();
  const Tensor4 res = general_relation_residual(c, 1.0, 1.0);
  const Stiffness a = sa_split(c).non_cauchy;
  const Tensor4 expect = -3.0 * a.tensor();
  EXPECT_LT(frobenius_norm(res - expect), 1e-13);
}

TEST(GeneralRelation, VanishesExactlyForCauchyMaterials) {
  oracle::Gen g(32);
  const Stiffness s = oracle::from_raw(g.cauchy_part());
  const Stiffness c = s + oracle::from_raw(g.non_cauchy_part());
  for (int t = 0; t < 20; ++t) {
    const double beta = g.uniform(-2.0, 2.0), gamma = g.uniform(-2.0, 2.0);
    EXPECT_LT(frobenius_norm(general_relation_residual(s, beta, gamma)), 1e-14);
    EXPECT_GT(frobenius_norm(general_relation_residual(c, beta, gamma)), 1e-6);
  }
  EXPECT_THROW((void)general_relation_residual(c, 0.0, 0.0), ValidationError);
}

TEST(MNSplit, AntisymmetricPartVanishesForCauchyTensors) {
  oracle::Gen g(33);
  const Stiffness s = oracle::from_raw(g.cauchy_part());
  const MNParts mn = mn_split(s);
  EXPECT_LT(frobenius_norm(mn.n), 1e-15);
  const Stiffness c = g.any_stiffness();
  const MNParts mc = mn_split(c);
  EXPECT_LT(frobenius_norm(mc.m + mc.n - c.tensor()), 1e-15 * frobenius_norm(c.tensor()));
  EXPECT_GT(frobenius_norm(mc.n), 1e-6);
}
