#include <gtest/gtest.h>

#include <cmath>

#include "antilap/asymptotics.hpp"

using namespace antilap;

TEST(Slope, ControlExponents) {
  for (int n = 3; n <= 6; ++n) {
    const auto rep = slope_fit({Family::Xi, n}, {});
    EXPECT_NEAR(rep.slope, -(n - 2.0), 0.02) << n;
    EXPECT_EQ(static_cast<int>(rep.values.size()), 32);
    EXPECT_GT(rep.r_squared, 0.999999);
  }
}

TEST(Slope, LogModeAndAxis) {
  SlopeSpec spec;
  spec.mode = FitMode::Log;
  EXPECT_NEAR(slope_fit({Family::Chi, 6}, spec).slope, 1.0, 0.05);
  spec.direction = Direction::ZAxis;
  spec.lo = 1e-2;
  spec.hi = 1e2;
  const auto rep = slope_fit({Family::Psi, 6}, spec);
  EXPECT_NEAR(rep.slope, 1.0, 1e-9);
  EXPECT_LT(rep.max_residual, 1e-12);
}

TEST(Slope, ZLargeSwapsCoordinates) {
  SlopeSpec spec;
  spec.direction = Direction::ZLarge;
  spec.fixed = 0.5;
  EXPECT_NEAR(slope_fit({Family::PsiBar, 5}, spec).slope, -1.0, 0.01);
}

TEST(Slope, Errors) {
  SlopeSpec spec;
  spec.lo = 10.0;
  spec.hi = 1.0;
  EXPECT_THROW(slope_fit({Family::Xi, 3}, spec), DomainError);
  spec = {};
  spec.samples = 2;
  EXPECT_THROW(slope_fit({Family::Xi, 3}, spec), DomainError);
  spec = {};
  spec.lo = 1e100;
  spec.hi = 1e120;
  EXPECT_THROW(slope_fit({Family::Xi, 9}, spec), PrecisionError);
}

TEST(Slope, Names) {
  EXPECT_EQ(parse_direction("z-axis"), Direction::ZAxis);
  EXPECT_THROW(parse_direction("sideways"), DomainError);
  EXPECT_EQ(default_fit_mode({Family::PsiRing, 6}), FitMode::Log);
  EXPECT_EQ(default_fit_mode({Family::PsiBar, 5}), FitMode::Power);
}
