#pragma once

// Numerical checks of the alpha-integral identities behind the ring
// solutions and of the structural relations tying (anti-)Laplacians to the
// full Laplacian acting on angle-weighted fields.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "antilap/errors.hpp"
#include "antilap/fd.hpp"
#include "antilap/quadrature.hpp"
#include "antilap/termalg.hpp"

namespace antilap {

// ---------------------------------------------------------------------------
// Integral identities. Each integrand is d/d(alpha) of a function that
// vanishes at alpha = 0 and alpha = pi, so the integral over [0, pi] is zero.

enum class IntegralIdentity {
  I3_9,   // cos[R^{2-k} - (k-2) a r cos R^{-k} + k(k-2) a^2 r^2 sin^2 R^{-k-2}], odd k
  I3_18,  // cos[ln(1/R) - a r cos / R^2 + 2 a^2 r^2 sin^2 / R^4]
  I2D,    // the same with rho = sqrt(r^2 + a^2 - 2 a r cos) in place of R
  I7_3,   // cos / R^k - k a r sin^2 / R^{k+2}
};

inline std::string to_string(IntegralIdentity id) {
  switch (id) {
    case IntegralIdentity::I3_9: return "I_3_9";
    case IntegralIdentity::I3_18: return "I_3_18";
    case IntegralIdentity::I2D: return "I_2D";
    case IntegralIdentity::I7_3: return "I_7_3";
  }
  return "?";
}

struct IdentityParams {
  double r = 1.0;
  double z = 0.5;
  double a = 1.0;
  int k = 3;
};

inline double identity_integrand(IntegralIdentity id, const IdentityParams& p, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  const double zz = id == IntegralIdentity::I2D ? 0.0 : p.z;
  const double sh = std::sin(0.5 * alpha);
  const double R2 = (p.r - p.a) * (p.r - p.a) + 4.0 * p.a * p.r * sh * sh + zz * zz;
  const double R = std::sqrt(R2);
  const double ar = p.a * p.r;
  switch (id) {
    case IntegralIdentity::I3_9: {
      const int k = p.k;
      return c * (std::pow(R, 2 - k) - (k - 2) * ar * c * std::pow(R, -k) +
                  k * (k - 2) * ar * ar * s * s * std::pow(R, -k - 2));
    }
    case IntegralIdentity::I3_18:
    case IntegralIdentity::I2D:
      return c * (-std::log(R) - ar * c / R2 + 2.0 * ar * ar * s * s / (R2 * R2));
    case IntegralIdentity::I7_3:
      return c * std::pow(R, -p.k) - p.k * ar * s * s * std::pow(R, -p.k - 2);
  }
  return 0.0;
}

/// Integral over [0, pi] of the identity's integrand; analytically zero.
inline QuadResult integral_identity_check(IntegralIdentity id, const IdentityParams& p,
                                          const QuadratureSpec& quad = {}) {
  if (!(p.a > 0.0) || p.r < 0.0 || p.z < 0.0) throw DomainError("identity parameters out of range");
  if (id == IntegralIdentity::I3_9 && (p.k < 3 || p.k % 2 == 0)) throw DomainError("I_3_9 needs odd k >= 3");
  if (id == IntegralIdentity::I7_3 && p.k < 1) throw DomainError("I_7_3 needs k >= 1");
  const bool on_ring = p.r == p.a && (id == IntegralIdentity::I2D || p.z == 0.0);
  if (on_ring) throw SingularityError("identity parameters lie on the ring set");
  constexpr double pi = 3.141592653589793238462643383279502884;
  return integrate([&](double alpha) { return identity_integrand(id, p, alpha); }, 0.0, pi, quad);
}

// ---------------------------------------------------------------------------
// Structural relations: the full Laplacian (Cartesian, or truncated to the
// needed angles) of an angle-weighted field equals the weight times an
// anti-Laplacian of F.

enum class StructuralRelation {
  R5_1,  // Cartesian Laplacian of x_k x^{-n} F(x)  vs  x_k x^{-n} AntiX F
  R5_5,  // cos(phi)/r F            vs  AntiR
  R5_6,  // cos(theta)/z^{n-3} F    vs  AntiZ
  R5_7,  // both weights            vs  AntiDouble
};

inline std::string to_string(StructuralRelation rel) {
  switch (rel) {
    case StructuralRelation::R5_1: return "R_5_1";
    case StructuralRelation::R5_5: return "R_5_5";
    case StructuralRelation::R5_6: return "R_5_6";
    case StructuralRelation::R5_7: return "R_5_7";
  }
  return "?";
}

struct StructuralResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double diff = 0.0;
};

/// Cartesian point x (size n) and the axis index k of the weight x_k.
inline StructuralResult structural_check_cartesian(int n, const TermSum1D& F, const std::vector<double>& x, int k,
                                                   const StencilSpec& st) {
  st.validate();
  if (n < 2 || static_cast<int>(x.size()) != n) throw DomainError("R_5_1: point must have n coordinates");
  if (k < 0 || k >= n) throw DomainError("R_5_1: axis index out of range");
  const auto u = [&](const std::vector<double>& y) {
    double s = 0.0;
    for (double v : y) s += v * v;
    const double rad = std::sqrt(s);
    return y[static_cast<std::size_t>(k)] * std::pow(rad, -n) * eval_termsum(F, rad);
  };
  double lap = 0.0;
  std::vector<double> y = x;
  for (int i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const auto d = detail::central(
        [&](int m) {
          y[idx] = x[idx] + m * st.h;
          const double v = u(y);
          y[idx] = x[idx];
          return v;
        },
        st.h, st.order);
    lap += d.f2;
  }
  double s = 0.0;
  for (double v : x) s += v * v;
  const double rad = std::sqrt(s);
  const double rhs = x[static_cast<std::size_t>(k)] * std::pow(rad, -n) *
                     eval_termsum(apply_operator(OperatorKind::AntiX, n, F), rad);
  return {lap, rhs, lap - rhs};
}

/// Point (r, phi, z, theta); angles that a relation does not use are ignored.
struct AngularPoint {
  double r = 1.0;
  double phi = 0.5;
  double z = 1.0;
  double theta = 0.7;
};

inline StructuralResult structural_check_angular(StructuralRelation rel, int n, const TermSum2D& F,
                                                 const AngularPoint& p, const StencilSpec& st) {
  st.validate();
  if (rel == StructuralRelation::R5_1) throw DomainError("R_5_1 uses the Cartesian check");
  const bool use_phi = rel == StructuralRelation::R5_5 || rel == StructuralRelation::R5_7;
  const bool use_theta = rel == StructuralRelation::R5_6 || rel == StructuralRelation::R5_7;
  if (n < 3 || (use_theta && n < 4)) throw DomainError(to_string(rel) + ": n out of range");
  const double span = st.reach() * st.h;
  if (p.r - span <= 0.0 || p.z - span <= 0.0 || (use_theta && (p.theta - span <= 0.0 || p.theta + span >= M_PI))) {
    throw DomainError(to_string(rel) + ": stencil leaves the domain");
  }
  const int w = n - 3;
  const auto weight = [&](double r, double phi, double z, double theta) {
    double v = 1.0;
    if (use_phi) v *= std::cos(phi) / r;
    if (use_theta) v *= std::cos(theta) * std::pow(z, -w);
    return v;
  };
  const auto u = [&](double r, double phi, double z, double theta) {
    return weight(r, phi, z, theta) * eval_termsum(F, r, z);
  };
  const double h = st.h;
  const auto dr = detail::central([&](int m) { return u(p.r + m * h, p.phi, p.z, p.theta); }, h, st.order);
  const auto dz = detail::central([&](int m) { return u(p.r, p.phi, p.z + m * h, p.theta); }, h, st.order);
  double lhs = dr.f2 + dr.f1 / p.r + dz.f2 + w * dz.f1 / p.z;
  if (use_phi) {
    const auto dp = detail::central([&](int m) { return u(p.r, p.phi + m * h, p.z, p.theta); }, h, st.order);
    lhs += dp.f2 / (p.r * p.r);
  }
  if (use_theta) {
    const auto dt = detail::central([&](int m) { return u(p.r, p.phi, p.z, p.theta + m * h); }, h, st.order);
    lhs += (dt.f2 + (n - 4) * dt.f1 / std::tan(p.theta)) / (p.z * p.z);
  }
  OperatorKind kind = OperatorKind::AntiDouble;
  if (rel == StructuralRelation::R5_5) kind = OperatorKind::AntiR;
  if (rel == StructuralRelation::R5_6) kind = OperatorKind::AntiZ;
  const double rhs = weight(p.r, p.phi, p.z, p.theta) * eval_termsum(apply_operator(kind, n, F), p.r, p.z);
  return {lhs, rhs, lhs - rhs};
}

struct StructuralOrder {
  double diff_h = 0.0;
  double diff_half = 0.0;
  double order = 0.0;
};

inline StructuralOrder order_of(double diff_h, double diff_half) {
  const double a = std::abs(diff_h), b = std::abs(diff_half);
  return {diff_h, diff_half, (a > 0.0 && b > 0.0) ? std::log2(a / b) : 0.0};
}

}  // namespace antilap
