#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "antilap/coeff.hpp"

using namespace antilap;

namespace {

Rational q(long long p, long long d = 1) { return make_rational(p, d); }

struct PrintedRow {
  char family;
  int n;
  std::vector<Rational> values;
};

std::vector<PrintedRow> printed_triangles() {
  std::ifstream in(ANTILAP_TEST_DATA "/triangles.txt");
  std::vector<PrintedRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    PrintedRow row;
    ls >> row.family >> row.n;
    std::string tok;
    while (ls >> tok) row.values.push_back(parse_rational(tok));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST(DoubleFactorial, Conventions) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  EXPECT_THROW(double_factorial(-2), DomainError);
}

TEST(ACoeff, PrintedValues) {
  EXPECT_EQ(a_coeff(3, 9), 1);
  EXPECT_EQ(a_coeff(5, 9), q(3, 5));
  EXPECT_EQ(a_coeff(7, 11), q(18, 35));
  EXPECT_EQ(a_coeff(9, 9), 1);
}

TEST(ACoeff, DomainErrors) {
  EXPECT_THROW(a_coeff(4, 9), DomainError);
  EXPECT_THROW(a_coeff(3, 8), DomainError);
  EXPECT_THROW(a_coeff(11, 9), DomainError);
  EXPECT_THROW(a_coeff(1, 9), DomainError);
  EXPECT_THROW(b_coeff(5, 3), DomainError);
  EXPECT_THROW(a_coeff_even(5, 8), DomainError);
  EXPECT_THROW(a_coeff_even(2, 8), DomainError);
}

TEST(ACoeff, ClosedFormMatchesRecurrenceAndSymmetry) {
  for (int n = 3; n <= 201; n += 2) {
    for (int k = 3; k <= n; k += 2) {
      const Rational a = a_coeff(k, n);
      ASSERT_EQ(a, a_coeff_recurrence(k, n)) << "k=" << k << " n=" << n;
      ASSERT_EQ(a, a_coeff(n - k + 3, n)) << "k=" << k << " n=" << n;
    }
  }
}

TEST(ACoeff, SecondRecurrence) {
  for (int n = 5; n <= 61; n += 2) {
    for (int k = 3; k <= n - 2; k += 2) {
      ASSERT_EQ(a_coeff(k, n), a_coeff(k, n - 2) * q((n - 3) * (n - k - 1), (n - 4) * (n - k)));
    }
  }
}

TEST(ACoeffEven, Values) {
  EXPECT_EQ(a_coeff_even(4, 8), 1);
  EXPECT_EQ(a_coeff_even(6, 8), q(1, 2));
  EXPECT_EQ(a_coeff_even(8, 10), q(1, 4));
}

TEST(BCoeff, Values) {
  EXPECT_EQ(b_coeff(3, 3), 1);
  EXPECT_EQ(b_coeff(5, 7), q(1, 4));
  EXPECT_EQ(b_coeff(7, 11), q(9, 64));
  EXPECT_EQ(b_coeff(7, 15), q(105, 1024));
}

TEST(Triangle, MatchesPrintedTables) {
  const auto printed = printed_triangles();
  ASSERT_EQ(printed.size(), 14u);
  const auto a_rows = triangle(CoeffFamily::AOdd, 15);
  const auto b_rows = triangle(CoeffFamily::BOdd, 15);
  ASSERT_EQ(a_rows.size(), 7u);
  for (const auto& row : printed) {
    const auto& rows = row.family == 'a' ? a_rows : b_rows;
    const auto& got = rows[static_cast<std::size_t>((row.n - 3) / 2)];
    EXPECT_EQ(got.n, row.n);
    EXPECT_EQ(got.first_k, 3);
    EXPECT_EQ(got.values, row.values) << row.family << " row n=" << row.n;
  }
}

TEST(Triangle, SpotRows) {
  EXPECT_EQ(triangle(CoeffFamily::AOdd, 7).back().values, (std::vector<Rational>{1, q(2, 3), 1}));
  EXPECT_EQ(triangle(CoeffFamily::BOdd, 5).back().values, (std::vector<Rational>{q(1, 2), q(1, 2)}));
  const auto even = triangle(CoeffFamily::AEven, 10);
  ASSERT_EQ(even.size(), 4u);
  EXPECT_EQ(even.back().first_k, 4);
  EXPECT_EQ(even.back().values, (std::vector<Rational>{1, q(1, 2), q(1, 4), q(1, 6)}));
  EXPECT_THROW(triangle(CoeffFamily::AOdd, 2), DomainError);
  EXPECT_THROW(triangle(CoeffFamily::AEven, 3), DomainError);
}

TEST(Triangle, AgreesWithClosedFormToLargeN) {
  const auto rows = triangle(CoeffFamily::AOdd, 101);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      ASSERT_EQ(row.values[i], a_coeff(3 + 2 * static_cast<int>(i), row.n));
    }
  }
}

TEST(CoeffSums, Values) {
  const auto s9 = coeff_sums(9);
  EXPECT_EQ(s9.sum_a, q(16, 5));
  EXPECT_EQ(s9.sum_b, 1);
  const auto s3 = coeff_sums(3);
  EXPECT_EQ(s3.sum_a, 1);
  EXPECT_EQ(s3.sum_b, 1);
  EXPECT_THROW(coeff_sums(8), DomainError);
}

TEST(CoeffSums, IdentitiesHoldUpTo201) {
  for (int n = 3; n <= 201; n += 2) {
    const auto s = coeff_sums(n);
    ASSERT_EQ(s.sum_b, 1) << n;
    ASSERT_EQ(s.sum_a, Rational(double_factorial(n - 3), double_factorial(n - 4))) << n;
    if (n > 3) {
      ASSERT_EQ(s.aux1, 0) << n;
      ASSERT_EQ(s.aux2, 0) << n;
    }
  }
}

TEST(Sigma, SmallValues) {
  EXPECT_EQ(sigma(1), PiRational(2, 0));
  EXPECT_EQ(sigma(2), PiRational(2, 1));
  EXPECT_EQ(sigma(3), PiRational(4, 1));
  EXPECT_EQ(sigma(4), PiRational(2, 2));
  EXPECT_EQ(sigma(5), PiRational(q(8, 3), 2));
  EXPECT_THROW(sigma(0), DomainError);
}

TEST(Sigma, FloatAgreesWithGamma) {
  for (int n = 1; n <= 30; ++n) {
    const double expected = 2.0 * std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0);
    EXPECT_NEAR(sigma(n).to_double() / expected, 1.0, 1e-13) << n;
  }
}

TEST(Sigma, RecursionIdentity) {
  for (int n = 3; n <= 50; ++n) {
    ASSERT_EQ(sigma(n) * Rational(n - 2), sigma(2) * sigma(n - 2)) << n;
  }
}

TEST(PiRational, ZeroNormalization) {
  EXPECT_EQ(PiRational(0, 3), PiRational(0, 0));
  EXPECT_EQ(PiRational(0, 3).pi_power(), 0);
  EXPECT_EQ(PiRational(q(3, 2), 2).to_string(), "3/2*pi^2");
}

TEST(RationalIo, RoundTrip) {
  EXPECT_EQ(to_string(q(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(q(5)), "5/1");
  EXPECT_EQ(parse_rational("-3/2"), q(-3, 2));
  EXPECT_EQ(parse_rational("+7"), q(7));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational("1/"), DomainError);
}
