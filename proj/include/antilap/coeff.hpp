#pragma once

// Exact coefficient combinatorics of the ring and point solution families.
//
// Odd dimensions use the a-coefficients (normalised so a(3,n) = 1) and their
// renormalised form b(k,n) = a(k,n) (n-4)!! / (n-3)!!, whose row sum is 1.
// Even dimensions use a(4,n) = 1, a(l,n) = 1/(l-4) for l >= 6.
// Sphere surface areas are held as q * pi^m.

#include <string>
#include <vector>

#include "antilap/errors.hpp"
#include "antilap/rational.hpp"

namespace antilap {

/// m!! with (-1)!! = 0!! = 1.
inline BigInt double_factorial(int m) {
  if (m < -1) throw DomainError("double_factorial: m must be >= -1, got " + std::to_string(m));
  BigInt result = 1;
  for (int f = m; f > 1; f -= 2) result *= f;
  return result;
}

namespace detail {

inline bool is_odd(int v) { return (v % 2 + 2) % 2 == 1; }

inline void require_odd_pair(const char* op, int k, int n) {
  if (!is_odd(k) || !is_odd(n) || k < 3 || k > n) {
    throw DomainError(std::string(op) + ": need odd 3 <= k <= n, got k=" + std::to_string(k) +
                      " n=" + std::to_string(n));
  }
}

inline Rational df_ratio(int num, int den) {
  return Rational(double_factorial(num), double_factorial(den));
}

}  // namespace detail

/// b(k,n) = (k-4)!! (n-k-1)!! / ((k-3)!! (n-k)!!), odd 3 <= k <= n.
inline Rational b_coeff(int k, int n) {
  detail::require_odd_pair("b_coeff", k, n);
  return Rational(double_factorial(k - 4) * double_factorial(n - k - 1),
                  double_factorial(k - 3) * double_factorial(n - k));
}

/// Sum of the odd a-row: (n-3)!!/(n-4)!!. Also the ratio a(k,n)/b(k,n).
inline Rational a_row_sum_closed(int n) {
  if (!detail::is_odd(n) || n < 3) throw DomainError("a_row_sum_closed: need odd n >= 3");
  return detail::df_ratio(n - 3, n - 4);
}

/// Closed form a(k,n) = (n-3)!!/(n-4)!! * b(k,n).
inline Rational a_coeff(int k, int n) {
  detail::require_odd_pair("a_coeff", k, n);
  return a_row_sum_closed(n) * b_coeff(k, n);
}

/// a(k,n) by stepping a(k+2,n) = a(k,n) (k-2)(n-k) / ((k-1)(n-k-1)) up from a(3,n) = 1.
inline Rational a_coeff_recurrence(int k, int n) {
  detail::require_odd_pair("a_coeff_recurrence", k, n);
  Rational a = 1;
  for (int j = 3; j < k; j += 2) {
    a *= Rational(BigInt((j - 2) * (n - j)), BigInt((j - 1) * (n - j - 1)));
  }
  return a;
}

/// Even family: 1 for l = 4, 1/(l-4) for even 6 <= l <= n.
inline Rational a_coeff_even(int l, int n) {
  if (detail::is_odd(l) || detail::is_odd(n) || l < 4 || l > n) {
    throw DomainError("a_coeff_even: need even 4 <= l <= n, got l=" + std::to_string(l) +
                      " n=" + std::to_string(n));
  }
  if (l == 4) return 1;
  return Rational(BigInt(1), BigInt(l - 4));
}

enum class CoeffFamily { AOdd, BOdd, AEven };

struct TriangleRow {
  int n = 0;
  int first_k = 0;  // k (or l) of values[0]; consecutive entries step by 2
  std::vector<Rational> values;
};

// Rows are built from the row above with a(k,n) = a(k,n-2) (n-3)(n-k-1) / ((n-4)(n-k)),
// closing each row with a(n,n) = 1.
inline std::vector<TriangleRow> triangle(CoeffFamily family, int max_n) {
  std::vector<TriangleRow> rows;
  if (family == CoeffFamily::AEven) {
    if (max_n < 4) throw DomainError("triangle: even family needs max_n >= 4");
    for (int n = 4; n <= max_n; n += 2) {
      TriangleRow row{n, 4, {}};
      for (int l = 4; l <= n; l += 2) row.values.push_back(a_coeff_even(l, n));
      rows.push_back(std::move(row));
    }
    return rows;
  }
  if (max_n < 3) throw DomainError("triangle: odd families need max_n >= 3");
  std::vector<Rational> prev;
  for (int n = 3; n <= max_n; n += 2) {
    std::vector<Rational> a_row;
    for (int k = 3; k <= n - 2; k += 2) {
      const std::size_t idx = static_cast<std::size_t>((k - 3) / 2);
      a_row.push_back(prev[idx] * Rational(BigInt((n - 3) * (n - k - 1)), BigInt((n - 4) * (n - k))));
    }
    a_row.push_back(1);
    prev = a_row;
    TriangleRow row{n, 3, {}};
    if (family == CoeffFamily::AOdd) {
      row.values = std::move(a_row);
    } else {
      const Rational renorm = 1 / a_row_sum_closed(n);
      for (const auto& a : a_row) row.values.push_back(a * renorm);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CoeffSums {
  Rational sum_a;
  Rational sum_b;
  Rational aux1;  // sum a/(k-4); zero for n > 3
  Rational aux2;  // sum a/(n-k-1); zero for n > 3
};

inline CoeffSums coeff_sums(int n) {
  if (!detail::is_odd(n) || n < 3) throw DomainError("coeff_sums: need odd n >= 3, got " + std::to_string(n));
  CoeffSums s;
  for (int k = 3; k <= n; k += 2) {
    const Rational a = a_coeff(k, n);
    s.sum_a += a;
    s.sum_b += b_coeff(k, n);
    s.aux1 += a / (k - 4);
    s.aux2 += a / (n - k - 1);
  }
  return s;
}

/// Exact value coeff * pi^pi_power. Zero is stored as 0 * pi^0.
class PiRational {
 public:
  PiRational() = default;
  PiRational(Rational coeff, int pi_power) : coeff_(std::move(coeff)), pi_power_(pi_power) {
    if (coeff_ == 0) pi_power_ = 0;
  }

  const Rational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }

  friend PiRational operator*(const PiRational& x, const PiRational& y) {
    return {x.coeff_ * y.coeff_, x.pi_power_ + y.pi_power_};
  }
  friend PiRational operator*(const PiRational& x, const Rational& q) { return {x.coeff_ * q, x.pi_power_}; }
  friend PiRational operator/(const PiRational& x, const Rational& q) { return {x.coeff_ / q, x.pi_power_}; }
  friend bool operator==(const PiRational& x, const PiRational& y) {
    return x.coeff_ == y.coeff_ && x.pi_power_ == y.pi_power_;
  }

  double to_double() const;
  std::string to_string() const {
    return antilap::to_string(coeff_) + "*pi^" + std::to_string(pi_power_);
  }

 private:
  Rational coeff_ = 0;
  int pi_power_ = 0;
};

inline double PiRational::to_double() const {
  constexpr double pi = 3.141592653589793238462643383279502884;
  double v = antilap::to_double(coeff_);
  for (int i = 0; i < pi_power_; ++i) v *= pi;
  for (int i = 0; i > pi_power_; --i) v /= pi;
  return v;
}

/// Surface of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
/// Even n = 2m: 2 pi^m / (m-1)!.  Odd n = 2m+1: 2^{m+1} pi^m / (2m-1)!!.
inline PiRational sigma(int n) {
  if (n < 1) throw DomainError("sigma: need n >= 1, got " + std::to_string(n));
  const int m = n / 2;
  if (n % 2 == 0) {
    BigInt fact = 1;
    for (int i = 2; i <= m - 1; ++i) fact *= i;
    return {Rational(BigInt(2), fact), m};
  }
  BigInt pow2 = 1;
  for (int i = 0; i < m + 1; ++i) pow2 *= 2;
  return {Rational(pow2, double_factorial(2 * m - 1)), m};
}

}  // namespace antilap
