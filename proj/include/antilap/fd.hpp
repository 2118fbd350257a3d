#pragma once

// Central finite-difference application of the (anti-)Laplacians to
// numerically evaluated fields, and residual/convergence-order reports.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "antilap/errors.hpp"
#include "antilap/termalg.hpp"

namespace antilap {

struct StencilSpec {
  double h = 1e-3;
  int order = 2;  // 2 or 4

  void validate() const {
    if (!(h > 0.0)) throw DomainError("stencil step h must be positive");
    if (order != 2 && order != 4) throw DomainError("stencil order must be 2 or 4");
  }
  int reach() const { return order == 2 ? 1 : 2; }
};

using Field2D = std::function<double(double r, double z)>;
using Field1D = std::function<double(double x)>;

namespace detail {

struct Derivs {
  double f1;
  double f2;
};

// First and second derivative of g at 0 along one coordinate, from g(k h).
template <class G>
Derivs central(G&& g, double h, int order) {
  const double f0 = g(0);
  const double p1 = g(1), m1 = g(-1);
  if (order == 2) return {(p1 - m1) / (2 * h), (p1 - 2 * f0 + m1) / (h * h)};
  const double p2 = g(2), m2 = g(-2);
  return {(-p2 + 8 * p1 - 8 * m1 + m2) / (12 * h), (-p2 + 16 * p1 - 30 * f0 + 16 * m1 - m2) / (12 * h * h)};
}

}  // namespace detail

/// Operator applied to field at (r, z) by central differences.
inline double fd_apply(OperatorKind kind, int n, const Field2D& field, double r, double z, const StencilSpec& st) {
  st.validate();
  if (is_x_frame(kind)) throw DomainError("fd_apply: " + to_string(kind) + " acts on the x frame");
  if (n < 2) throw DomainError("fd_apply: need n >= 2");
  const double span = st.reach() * st.h;
  const bool z_part = n > 2;
  if (r - span <= 0.0 || (z_part && z - span <= 0.0)) {
    throw DomainError("fd_apply: stencil around (" + std::to_string(r) + "," + std::to_string(z) +
                      ") leaves the open quadrant");
  }
  const auto dr = detail::central([&](int k) { return field(r + k * st.h, z); }, st.h, st.order);
  double value = dr.f2 + (has_anti_r_part(kind) ? -dr.f1 / r : dr.f1 / r);
  if (z_part) {
    const auto dz = detail::central([&](int k) { return field(r, z + k * st.h); }, st.h, st.order);
    const double w = n - 3;
    value += dz.f2 + (has_anti_z_part(kind) ? -w * dz.f1 / z : w * dz.f1 / z);
  }
  return value;
}

inline double fd_apply_x(OperatorKind kind, int n, const Field1D& field, double x, const StencilSpec& st) {
  st.validate();
  if (!is_x_frame(kind)) throw DomainError("fd_apply_x: " + to_string(kind) + " acts on the (r,z) frame");
  if (x - st.reach() * st.h <= 0.0) throw DomainError("fd_apply_x: stencil leaves x > 0");
  const auto d = detail::central([&](int k) { return field(x + k * st.h); }, st.h, st.order);
  const double w = n - 1;
  return d.f2 + (kind == OperatorKind::LaplaceX ? w * d.f1 / x : -w * d.f1 / x);
}

struct ResidualReport {
  std::string op;
  int n = 0;
  std::vector<std::pair<double, double>> points;
  double h = 0.0;
  std::vector<double> residuals;         // at step h
  std::vector<double> residuals_half;    // at step h/2
  double max_residual = 0.0;
  double max_residual_half = 0.0;
  double order_estimate = 0.0;
  double min_order = 1.9;
  double floor = 0.0;  // residuals below this count as exact
  bool pass = false;
};

/// Residuals at h and h/2 over points; the observed order is
/// log2(max|res(h)| / max|res(h/2)|). Passes when the order reaches min_order,
/// or when every residual at h/2 is at or below floor.
inline ResidualReport residual_grid(OperatorKind kind, int n, const Field2D& field,
                                    const std::vector<std::pair<double, double>>& points, const StencilSpec& st,
                                    double min_order = 1.9, double floor = 0.0) {
  ResidualReport rep;
  rep.op = to_string(kind);
  rep.n = n;
  rep.points = points;
  rep.h = st.h;
  rep.min_order = min_order;
  rep.floor = floor;
  const StencilSpec half{st.h / 2, st.order};
  for (const auto& [r, z] : points) {
    rep.residuals.push_back(fd_apply(kind, n, field, r, z, st));
    rep.residuals_half.push_back(fd_apply(kind, n, field, r, z, half));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    rep.max_residual = std::max(rep.max_residual, std::abs(rep.residuals[i]));
    rep.max_residual_half = std::max(rep.max_residual_half, std::abs(rep.residuals_half[i]));
  }
  rep.order_estimate = (rep.max_residual_half > 0.0 && rep.max_residual > 0.0)
                           ? std::log2(rep.max_residual / rep.max_residual_half)
                           : 0.0;
  rep.pass = rep.order_estimate >= min_order || rep.max_residual_half <= floor;
  return rep;
}

}  // namespace antilap
