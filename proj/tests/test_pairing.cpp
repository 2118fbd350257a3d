#include <gtest/gtest.h>

#include <cmath>

#include "antilap/pairing.hpp"

using namespace antilap;

TEST(Bump, ValueAndDerivatives) {
  const BumpTrial phi(0.5);
  EXPECT_DOUBLE_EQ(phi(0.0, 0.0), 1.0);
  EXPECT_EQ(phi(0.4, 0.4), 0.0);
  const double h = 1e-6, r = 0.2, z = 0.15;
  EXPECT_NEAR(phi.d_r(r, z), (phi(r + h, z) - phi(r - h, z)) / (2 * h), 1e-7);
  EXPECT_NEAR(phi.d_z(r, z), (phi(r, z + h) - phi(r, z - h)) / (2 * h), 1e-7);
  EXPECT_THROW(BumpTrial(0.0), DomainError);
}

TEST(PairingSpecTest, Sequences) {
  PairingSpec spec;
  const auto diag = spec.sequence(LimitPath::Diagonal);
  ASSERT_EQ(static_cast<int>(diag.size()), spec.steps);
  EXPECT_DOUBLE_EQ(diag[0].first, spec.rho0 / 4);
  EXPECT_DOUBLE_EQ(diag[1].second, diag[0].second * spec.eps_ratio);
  const auto eps_first = spec.sequence(LimitPath::EpsFirst);
  EXPECT_DOUBLE_EQ(eps_first[2].first, spec.aspect * eps_first[2].second);
  spec.eps_ratio = 1.0;
  EXPECT_THROW(spec.validate(), DomainError);
  spec = {};
  spec.steps = 2;
  EXPECT_THROW(spec.validate(), DomainError);
}

TEST(Pairing, PointDelta) {
  for (int n : {3, 5, 7}) {
    const auto rep = pairing({Family::PsiBar, n});
    EXPECT_TRUE(rep.pass) << n;
    EXPECT_NEAR(rep.limit, -1.0, 1e-2) << n;
    EXPECT_EQ(rep.paths.size(), 3u);
  }
}

TEST(Pairing, ANormalizedScalesWithRowSum) {
  // -(n-3)!!/(n-4)!!: 1, 2, 8/3
  const double expected[] = {-1.0, -2.0, -8.0 / 3.0};
  int i = 0;
  for (int n : {3, 5, 7}) {
    const auto rep = pairing({Family::Psi, n});
    EXPECT_NEAR(rep.limit, expected[i++], 1e-2 * 8.0 / 3.0) << n;
  }
}

TEST(Pairing, LaplaceControl) {
  for (int n : {3, 4, 5}) EXPECT_NEAR(pairing({Family::Xi, n}).limit, -1.0, 1e-2) << n;
}

TEST(Pairing, EvenWholeSpaceIsZero) {
  const auto rep = pairing({Family::Psi, 4});
  EXPECT_TRUE(rep.pass);
  EXPECT_LT(std::abs(rep.limit), 1e-2);
}

TEST(Pairing, Unsupported) {
  EXPECT_THROW(pairing({Family::Psi, 6}), UnsupportedError);
  EXPECT_THROW(pairing({Family::PsiRing, 3}), UnsupportedError);
  EXPECT_THROW(pairing({Family::Xi, 2}), UnsupportedError);
  EXPECT_THROW(pairing({Family::Phi, 3}), UnsupportedError);
}

TEST(Pairing, TooFewStepsIsNotCauchy) {
  PairingSpec spec;
  spec.steps = 3;
  spec.s0 = 0.45;
  spec.extrapolation = Extrapolation::LastValue;
  spec.rel_tol = 1e-6;
  EXPECT_THROW(pairing({Family::PsiBar, 3}, spec), ConvergenceError);
}
