#pragma once

// One-dimensional adaptive quadrature on a finite interval.

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "antilap/errors.hpp"

namespace antilap {

enum class QuadMethod { AdaptiveSimpson, GaussLegendreComposite };

struct QuadratureSpec {
  QuadMethod method = QuadMethod::GaussLegendreComposite;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;
  long max_panels = 200000;  // subdivisions allowed before giving up

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
    if (max_depth < 1) throw DomainError("quadrature max_depth must be >= 1");
    if (max_panels < 1) throw DomainError("quadrature max_panels must be >= 1");
  }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated estimate of |value - exact|
};

namespace detail {

// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1], by Newton on P_N.
template <int N>
struct GaussLegendre {
  std::array<double, N> x{};
  std::array<double, N> w{};

  GaussLegendre() {
    constexpr double pi = 3.141592653589793238462643383279502884;
    for (int i = 0; i < N; ++i) {
      double t = std::cos(pi * (i + 0.75) / (N + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= N; ++k) {
          const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = N * (t * p1 - p0) / (t * t - 1.0);
        const double step = p1 / dp;
        t -= step;
        if (std::abs(step) < 1e-16) break;
      }
      x[i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

inline const GaussLegendre<10>& gl10() {
  static const GaussLegendre<10> rule;
  return rule;
}

template <class F>
double gl_panel(F& f, double a, double b) {
  const auto& rule = gl10();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 10; ++i) sum += rule.w[i] * f(mid + half * rule.x[i]);
  return sum * half;
}

template <class F>
double gl_panel_abs(F& f, double a, double b) {
  const auto& rule = gl10();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 10; ++i) sum += rule.w[i] * std::abs(f(mid + half * rule.x[i]));
  return sum * half;
}

struct AdaptState {
  double tol_density;  // tolerance per unit length
  int max_depth;
  long panels_left;
  bool failed = false;
  double error = 0.0;
};

template <class F>
double gl_adapt(F& f, double a, double b, double whole, int depth, AdaptState& st) {
  const double mid = 0.5 * (a + b);
  const double left = gl_panel(f, a, mid);
  const double right = gl_panel(f, mid, b);
  const double halves = left + right;
  const double diff = std::abs(halves - whole);
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (diff <= std::max(st.tol_density * (b - a), noise)) {
    st.error += diff;
    return halves;
  }
  if (depth >= st.max_depth || --st.panels_left < 0 || !(mid > a && mid < b)) {
    st.failed = true;
    st.error += diff;
    return halves;
  }
  return gl_adapt(f, a, mid, left, depth + 1, st) + gl_adapt(f, mid, b, right, depth + 1, st);
}

template <class F>
double simpson_adapt(F& f, double a, double b, double fa, double fm, double fb, double whole, int depth,
                     AdaptState& st) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (std::abs(diff) <= std::max(15.0 * st.tol_density * (b - a), noise)) {
    st.error += std::abs(diff) / 15.0;
    return left + right + diff / 15.0;
  }
  if (depth >= st.max_depth || --st.panels_left < 0 || !(m > a && m < b)) {
    st.failed = true;
    st.error += std::abs(diff) / 15.0;
    return left + right + diff / 15.0;
  }
  return simpson_adapt(f, a, m, fa, flm, fm, left, depth + 1, st) +
         simpson_adapt(f, m, b, fm, frm, fb, right, depth + 1, st);
}

}  // namespace detail

/// Integrates f over [a, b] until the accumulated error estimate is below
/// max(abs_tol, rel_tol * integral of |f|). Throws ConvergenceError carrying
/// the partial value when some panel hits max_depth, or the panel budget
/// runs out, first.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!(b > a)) throw DomainError("integrate: need a < b");

  // Coarse scale estimate of the integral of |f| from 8 panels.
  constexpr int coarse = 8;
  double scale = 0.0;
  std::array<double, coarse> panel{};
  const double width = (b - a) / coarse;
  for (int i = 0; i < coarse; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == coarse) ? b : lo + width;
    panel[i] = detail::gl_panel(f, lo, hi);
    scale += detail::gl_panel_abs(f, lo, hi);
  }
  const double target = std::max(spec.abs_tol, spec.rel_tol * scale);
  detail::AdaptState st{target / (b - a), spec.max_depth, spec.max_panels};

  double total = 0.0;
  for (int i = 0; i < coarse; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == coarse) ? b : lo + width;
    if (spec.method == QuadMethod::GaussLegendreComposite) {
      total += detail::gl_adapt(f, lo, hi, panel[i], 1, st);
    } else {
      const double fa = f(lo), fm = f(0.5 * (lo + hi)), fb = f(hi);
      const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
      total += detail::simpson_adapt(f, lo, hi, fa, fm, fb, whole, 1, st);
    }
  }
  if (!std::isfinite(total)) throw ConvergenceError("integrate: non-finite integrand value", total, st.error);
  if (st.failed) {
    throw ConvergenceError("integrate: tolerance " + std::to_string(target) + " not reached within depth " +
                               std::to_string(spec.max_depth) + " and " + std::to_string(spec.max_panels) +
                               " panels",
                           total, st.error);
  }
  return {total, st.error};
}

}  // namespace antilap
