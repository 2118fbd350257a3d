#pragma once

// Least-squares fits of far- and near-zone behaviour along coordinate lines:
// power laws (log|v| against log t) and logarithmic laws (v against ln(1/t)).

#include <algorithm>
#include <cmath>
#include <utility>
#include <limits>
#include <string>
#include <vector>

#include "antilap/errors.hpp"
#include "antilap/quadrature.hpp"
#include "antilap/solutions.hpp"

namespace antilap {

enum class Direction { RLarge, ZLarge, RSmall, ZAxis };
enum class FitMode { Power, Log };

inline std::string to_string(Direction d) {
  switch (d) {
    case Direction::RLarge: return "r-large";
    case Direction::ZLarge: return "z-large";
    case Direction::RSmall: return "r-small";
    case Direction::ZAxis: return "z-axis";
  }
  return "?";
}

inline Direction parse_direction(const std::string& s) {
  for (auto d : {Direction::RLarge, Direction::ZLarge, Direction::RSmall, Direction::ZAxis}) {
    if (to_string(d) == s) return d;
  }
  throw DomainError("unknown direction '" + s + "'");
}

inline std::string to_string(FitMode m) { return m == FitMode::Power ? "power" : "log"; }

/// Logarithmic families are fitted against ln(1/t), the others as power laws.
inline FitMode default_fit_mode(const SolutionFamily& fam) {
  const bool even = fam.n % 2 == 0;
  switch (fam.tag) {
    case Family::Psi:
    case Family::PsiRing:
    case Family::Chi: return even ? FitMode::Log : FitMode::Power;
    case Family::PsiTilde4:
    case Family::PsiRing2: return FitMode::Log;
    case Family::Xi:
    case Family::Phi: return fam.n == 2 ? FitMode::Log : FitMode::Power;
    default: return FitMode::Power;
  }
}

struct SlopeSpec {
  Direction direction = Direction::RLarge;
  double fixed = 1.0;  // the other coordinate (ignored on the z = 0 axis)
  double lo = 1e2;
  double hi = 1e4;
  int samples = 32;
  double a = 1.0;  // ring radius
  FitMode mode = FitMode::Power;
};

struct SlopeReport {
  std::string family;
  int n = 0;
  Direction direction = Direction::RLarge;
  FitMode mode = FitMode::Power;
  double fixed = 0.0;
  double lo = 0.0, hi = 0.0;
  std::vector<double> t;
  std::vector<double> values;
  double slope = 0.0;      // exponent (power) or ln(1/t) coefficient (log)
  double intercept = 0.0;
  double r_squared = 0.0;
  double max_residual = 0.0;
};

namespace detail {

struct LineFit {
  double slope, intercept, r2, max_res;
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0, max_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (slope * x[i] + intercept);
    ss_res += e * e;
    max_res = std::max(max_res, std::abs(e));
  }
  return {slope, intercept, syy > 0 ? 1.0 - ss_res / syy : 1.0, max_res};
}

}  // namespace detail

inline SlopeReport slope_fit(const SolutionFamily& fam, const SlopeSpec& spec, const QuadratureSpec& quad = {}) {
  if (!(spec.lo > 0.0) || !(spec.hi > spec.lo)) throw DomainError("slope_fit: need 0 < lo < hi");
  if (spec.samples < 3) throw DomainError("slope_fit: need at least 3 samples");
  const Built built = build(fam);
  SlopeReport rep;
  rep.family = to_string(fam.tag);
  rep.n = fam.n;
  rep.direction = spec.direction;
  rep.mode = spec.mode;
  rep.fixed = spec.direction == Direction::ZAxis ? 0.0 : spec.fixed;
  rep.lo = spec.lo;
  rep.hi = spec.hi;

  std::vector<double> xs, ys;
  for (int i = 0; i < spec.samples; ++i) {
    const double t = spec.lo * std::pow(spec.hi / spec.lo, static_cast<double>(i) / (spec.samples - 1));
    double r = t, z = rep.fixed;
    if (spec.direction == Direction::ZLarge) std::swap(r, z);
    const RingValue v = eval_built(built, r, z, spec.a, quad);
    if (!std::isfinite(v.value)) throw PrecisionError("slope_fit: non-finite value at t=" + std::to_string(t));
    if (v.error > 1e-3 * std::abs(v.value)) {
      throw PrecisionError("slope_fit: value at t=" + std::to_string(t) + " is below the quadrature accuracy");
    }
    rep.t.push_back(t);
    rep.values.push_back(v.value);
    if (spec.mode == FitMode::Power) {
      if (std::abs(v.value) < std::numeric_limits<double>::min()) {
        throw PrecisionError("slope_fit: value underflows at t=" + std::to_string(t));
      }
      xs.push_back(std::log(t));
      ys.push_back(std::log(std::abs(v.value)));
    } else {
      xs.push_back(-std::log(t));
      ys.push_back(v.value);
    }
  }
  const auto fit = detail::least_squares(xs, ys);
  rep.slope = fit.slope;
  rep.intercept = fit.intercept;
  rep.r_squared = fit.r2;
  rep.max_residual = fit.max_res;
  return rep;
}

}  // namespace antilap
