#include <gtest/gtest.h>

#include <cmath>

#include "antilap/quadrature.hpp"

using namespace antilap;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

class Methods : public ::testing::TestWithParam<QuadMethod> {};

TEST_P(Methods, SmoothIntegrands) {
  QuadratureSpec q;
  q.method = GetParam();
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, kPi, q).value, 2.0, 1e-10);
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, q).value, std::exp(1.0) - 1.0, 1e-10);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / (1.0 + 100.0 * x * x); }, -1.0, 1.0, q).value,
              0.2 * std::atan(10.0), 1e-10);
}

TEST_P(Methods, PeakedIntegrand) {
  QuadratureSpec q;
  q.method = GetParam();
  const double eps = 1e-3;
  const auto res = integrate([&](double x) { return eps / (x * x + eps * eps); }, -1.0, 1.0, q);
  EXPECT_NEAR(res.value, 2.0 * std::atan(1.0 / eps), 1e-8);
  EXPECT_LT(res.error, 1e-8);
}

TEST_P(Methods, IntervalMustBeIncreasing) {
  QuadratureSpec q;
  q.method = GetParam();
  EXPECT_THROW(integrate([](double x) { return x; }, 1.0, 0.0, q), DomainError);
  EXPECT_THROW(integrate([](double x) { return x; }, 1.0, 1.0, q), DomainError);
}

INSTANTIATE_TEST_SUITE_P(Quadrature, Methods,
                         ::testing::Values(QuadMethod::AdaptiveSimpson, QuadMethod::GaussLegendreComposite));

TEST(Quadrature, DepthLimit) {
  QuadratureSpec q;
  q.max_depth = 2;
  q.abs_tol = q.rel_tol = 1e-14;
  EXPECT_THROW(integrate([](double x) { return 1e-4 / (x * x + 1e-8); }, -1.0, 1.0, q), ConvergenceError);
}

TEST(Quadrature, Validation) {
  QuadratureSpec q;
  q.abs_tol = -1.0;
  EXPECT_THROW(integrate([](double x) { return x; }, 0.0, 1.0, q), DomainError);
  q = {};
  q.max_depth = 0;
  EXPECT_THROW(integrate([](double x) { return x; }, 0.0, 1.0, q), DomainError);
}

TEST(Quadrature, PanelBudgetStopsNoisyIntegrands) {
  QuadratureSpec q;
  q.abs_tol = q.rel_tol = 1e-15;
  q.max_panels = 5000;
  const auto noisy = [](double x) { return x + 1e-3 * std::sin(1e9 * x); };
  try {
    integrate(noisy, 0.0, 1.0, q);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_NEAR(e.partial(), 0.5, 1e-2);
  }
}
