#include <gtest/gtest.h>

#include <cmath>

#include "antilap/solutions.hpp"

using namespace antilap;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

TermSum2D mono(long long c, int r, int z, int rbar, LogKind log = LogKind::None) {
  return TermSum2D::monomial(make_rational(c), r, z, rbar, log);
}

// Composite Simpson with a fixed, dense grid.
template <class F>
double simpson(F f, double a, double b, int intervals = 20000) {
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

double dist(double r, double z, double a, double alpha) {
  return std::sqrt(r * r + a * a - 2.0 * a * r * std::cos(alpha) + z * z);
}

}  // namespace

TEST(Build, PointFamilies) {
  EXPECT_EQ(build_2d({Family::Xi, 3}), mono(1, 0, 0, -1));
  EXPECT_EQ(build_2d({Family::Xi, 2}), mono(1, 0, 0, 0, LogKind::InvR));
  EXPECT_EQ(build_2d({Family::Psi, 5}), mono(1, 0, 0, -1) + mono(1, 0, 2, -3));
  EXPECT_EQ(build_2d({Family::PsiBar, 5}), make_rational(1, 2) * (mono(1, 0, 0, -1) + mono(1, 0, 2, -3)));
  EXPECT_EQ(build_2d({Family::Psi, 4}), mono(1, 0, 0, 0, LogKind::InvRbar));
  EXPECT_EQ(build_2d({Family::Psi, 6}),
            mono(1, 0, 0, 0, LogKind::InvRbar) + make_rational(1, 2) * mono(1, 0, 2, -2));
  EXPECT_TRUE(std::holds_alternative<TermSum1D>(build({Family::Phi, 4})));
}

TEST(Build, Validation) {
  EXPECT_THROW(build({Family::PsiBar, 4}), DomainError);
  EXPECT_THROW(build({Family::PsiTilde4, 5}), DomainError);
  EXPECT_THROW(build({Family::PsiRing2, 3}), DomainError);
  EXPECT_THROW(build({Family::Psi, 2}), DomainError);
  EXPECT_THROW(build_2d({Family::PsiRing, 3}), DomainError);
  EXPECT_THROW(build_ring({Family::Xi, 3}), DomainError);
  EXPECT_THROW(parse_family("psi-hat"), DomainError);
  for (const auto& [f, name] : family_names()) EXPECT_EQ(parse_family(name), f);
}

TEST(Build, OddPointIsBRenormalizedA) {
  for (int n = 3; n <= 21; n += 2) {
    EXPECT_EQ(build_2d({Family::Psi, n}), a_row_sum_closed(n) * build_2d({Family::PsiBar, n})) << n;
  }
}

TEST(Build, Decomposition) {
  const auto parts = decompose_A_in_L(7);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].first, 1);
  EXPECT_EQ(parts[1].first, make_rational(2, 3));
  EXPECT_EQ(parts[2].second, 7);
  EXPECT_THROW(decompose_A_in_L(6), DomainError);
}

TEST(Sources, Specs) {
  EXPECT_EQ(*source_spec({Family::PsiBar, 7}).pairing_factor, -1);
  const auto psi5 = source_spec({Family::Psi, 5});
  EXPECT_EQ(psi5.kind, SourceKind::DeltaPoint);
  EXPECT_EQ(psi5.normalization, 2);
  EXPECT_EQ(*psi5.pairing_factor, -2);
  EXPECT_EQ(*source_spec({Family::Psi, 4}).pairing_factor, 0);
  EXPECT_EQ(source_spec({Family::PsiRing, 4}).kind, SourceKind::ThetaRing);
  EXPECT_FALSE(source_spec({Family::Chi, 5}).pairing_factor.has_value());
  EXPECT_THROW(source_spec({Family::Phi, 3}), UnsupportedError);
}

TEST(RingEval, OddMatchesDenseSimpson) {
  // psi-ring_5 = (r/pi) int cos(alpha) (1/2)[1/R + z^2/R^3] d alpha
  const double r = 2.0, z = 1.0, a = 1.0;
  const double oracle = r / kPi * simpson([&](double al) {
                          const double R = dist(r, z, a, al);
                          return std::cos(al) * 0.5 * (1.0 / R + z * z / (R * R * R));
                        }, 0.0, kPi);
  const RingValue v = eval_ring(build_ring({Family::PsiRing, 5}), r, z, a);
  EXPECT_NEAR(v.value, oracle, 1e-12);
  EXPECT_LT(v.error, 1e-9);
}

TEST(RingEval, ChiEvenMatchesDenseSimpson) {
  const double r = 0.7, z = 0.4, a = 1.3;
  const double oracle = simpson([&](double al) {
                          const double R = dist(r, z, a, al);
                          return -std::log(R) + 0.5 * z * z / (R * R);
                        }, 0.0, kPi) / kPi;
  EXPECT_NEAR(eval_ring(build_ring({Family::Chi, 6}), r, z, a).value, oracle, 1e-11);
}

TEST(RingEval, PlanarClosedForm) {
  // r int_0^pi cos(alpha) ln(1/rho) d alpha = pi r^2/(2a) inside the ring, pi a/2 outside.
  const auto ri = build_ring({Family::PsiRing2, 2});
  for (double r : {0.1, 0.5, 0.9}) EXPECT_NEAR(eval_ring(ri, r, 7.0, 1.0).value, kPi * r * r / 2.0, 1e-12);
  for (double r : {1.1, 2.0, 5.0}) EXPECT_NEAR(eval_ring(ri, r, 0.0, 1.0).value, kPi / 2.0, 1e-12);
  // The even ring solution at z = 0 is the planar one over pi.
  EXPECT_NEAR(eval_ring(build_ring({Family::PsiRing, 4}), 0.5, 0.0, 1.0).value, 0.125, 1e-12);
}

TEST(RingEval, LowestRingAgrees) {
  const auto a = build_ring({Family::PsiRing, 3});
  const auto b = build_ring({Family::XiRing, 3});
  EXPECT_DOUBLE_EQ(eval_ring(a, 1.7, 0.3, 1.0).value, eval_ring(b, 1.7, 0.3, 1.0).value);
}

TEST(RingEval, Singular) {
  EXPECT_THROW(eval_ring(build_ring({Family::PsiRing, 3}), 1.0, 0.0, 1.0), SingularityError);
  EXPECT_THROW(eval_ring(build_ring({Family::PsiRing2, 2}), 1.0, 3.0, 1.0), SingularityError);
  EXPECT_THROW(eval_ring(build_ring({Family::PsiRing, 3}), 1.0, 0.0, -1.0), DomainError);
  EXPECT_THROW(eval_termsum(build_2d({Family::Xi, 3}), 0.0, 0.0), SingularityError);
  EXPECT_NO_THROW(eval_ring(build_ring({Family::PsiRing, 3}), 1.0, 1e-3, 1.0));
}

TEST(RingEval, ConvergenceFailureCarriesEstimate) {
  QuadratureSpec q;
  q.max_depth = 1;
  q.abs_tol = q.rel_tol = 1e-15;
  try {
    eval_ring(build_ring({Family::PsiRing, 3}), 1.0, 1e-4, 1.0, q);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_TRUE(std::isfinite(e.partial()));
    EXPECT_GT(e.error(), 0.0);
  }
}

TEST(PointEval, ClosedForms) {
  const double r = 1.0, z = 2.0, R2 = r * r + z * z;
  EXPECT_NEAR(eval_termsum(build_2d({Family::Psi, 4}), r, z), -0.5 * std::log(R2), 1e-15);
  EXPECT_NEAR(eval_termsum(build_2d({Family::PsiBar, 5}), r, z),
              0.5 * (1 / std::sqrt(R2) + z * z / std::pow(R2, 1.5)), 1e-15);
  EXPECT_NEAR(eval_termsum(build_2d({Family::PsiTilde4, 4}), r, z), -0.5 * std::log(R2) + std::log(r), 1e-15);
}
