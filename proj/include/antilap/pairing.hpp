#pragma once

// Distributional source extraction: the pairing of a point solution's
// operator image with a trial function, computed as the limit of surface
// integrals around an excised box [0, eps] x [0, eta] at the origin.
//
// With weight w = r z^m (m = n-3 for the Laplace family Xi, m = 0 for the
// anti-z families) the flux through the box boundary is
//
//   top  (z = eta):  eta^m  int_0^eps r [phi G_z - phi_z Psi] dr
//   side (r = eps):  eps    int_0^eta z^m [phi Psi_r - phi_r Psi] dz
//
// For odd anti-z families G_z = sum_k c_k z^{k-3} d_z Xi_k, which makes each
// term an ordinary Laplace flux in dimension k. For Psi_4 and Xi, G_z = Psi_z.
// The sum tends to the pairing as the box shrinks, with an O(size) error,
// whatever the aspect ratio; three shrinking paths are evaluated and
// Richardson-extrapolated.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "antilap/errors.hpp"
#include "antilap/quadrature.hpp"
#include "antilap/solutions.hpp"
#include "antilap/termalg.hpp"

namespace antilap {

/// exp(1 - 1/(1 - (r^2+z^2)/rho0^2)) inside the disc of radius rho0, zero outside.
class BumpTrial {
 public:
  explicit BumpTrial(double rho0) : rho0_(rho0) {
    if (!(rho0 > 0.0)) throw DomainError("bump trial radius must be positive");
  }

  double rho0() const { return rho0_; }

  double operator()(double r, double z) const {
    const double t = (r * r + z * z) / (rho0_ * rho0_);
    if (t >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t));
  }
  double d_r(double r, double z) const { return dt_factor(r, z) * 2.0 * r / (rho0_ * rho0_); }
  double d_z(double r, double z) const { return dt_factor(r, z) * 2.0 * z / (rho0_ * rho0_); }

 private:
  // d phi / d t
  double dt_factor(double r, double z) const {
    const double t = (r * r + z * z) / (rho0_ * rho0_);
    if (t >= 1.0) return 0.0;
    const double u = 1.0 - t;
    return -std::exp(1.0 - 1.0 / u) / (u * u);
  }

  double rho0_;
};

enum class Extrapolation { LastValue, Richardson };
enum class LimitPath { Diagonal, EpsFirst, EtaFirst };

inline std::string to_string(LimitPath p) {
  switch (p) {
    case LimitPath::Diagonal: return "diagonal";
    case LimitPath::EpsFirst: return "eps-first";
    case LimitPath::EtaFirst: return "eta-first";
  }
  return "?";
}

struct PairingSpec {
  double rho0 = 0.5;
  double eps_ratio = 0.5;  // geometric shrink factor of the box size s
  int steps = 8;
  double s0 = 0.0;         // first box size; 0 means rho0 / 4
  double aspect = 1e-3;    // eps/eta (or eta/eps) on the one-sided paths
  Extrapolation extrapolation = Extrapolation::Richardson;
  double rel_tol = 1e-2;   // acceptance against a nonzero expected value
  double abs_tol = 1e-2;   // acceptance against an expected zero

  void validate() const {
    if (!(rho0 > 0.0)) throw DomainError("pairing: rho0 must be positive");
    if (!(eps_ratio > 0.0 && eps_ratio < 1.0)) throw DomainError("pairing: eps_ratio must lie in (0, 1)");
    if (steps < 3) throw DomainError("pairing: need at least 3 steps");
    if (!(aspect > 0.0 && aspect < 1.0)) throw DomainError("pairing: aspect must lie in (0, 1)");
    if (s0 < 0.0 || s0 >= rho0) throw DomainError("pairing: s0 must lie inside the trial support");
  }

  /// Decreasing (eps, eta) pairs along a path.
  std::vector<std::pair<double, double>> sequence(LimitPath path) const {
    std::vector<std::pair<double, double>> out;
    double s = s0 > 0.0 ? s0 : rho0 / 4.0;
    for (int i = 0; i < steps; ++i, s *= eps_ratio) {
      switch (path) {
        case LimitPath::Diagonal: out.emplace_back(s, s); break;
        case LimitPath::EpsFirst: out.emplace_back(aspect * s, s); break;
        case LimitPath::EtaFirst: out.emplace_back(s, aspect * s); break;
      }
    }
    return out;
  }
};

struct PathResult {
  LimitPath path;
  std::vector<std::pair<double, double>> boxes;
  std::vector<double> values;
  std::vector<double> extrapolated;
  double limit = 0.0;
  double spread = 0.0;  // |last two extrapolated values|
};

struct PairingReport {
  std::string family;
  int n = 0;
  double rho0 = 0.0;
  double expected = 0.0;
  std::vector<PathResult> paths;
  double limit = 0.0;  // mean of the path limits
  double path_disagreement = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Fields entering the flux for one family.
struct FluxFields {
  TermSum2D psi;
  TermSum2D psi_r;
  TermSum2D g_z;
  int m = 0;
};

inline FluxFields flux_fields(const SolutionFamily& fam) {
  validate(fam);
  const int n = fam.n;
  FluxFields f;
  switch (fam.tag) {
    case Family::Psi:
    case Family::PsiBar:
      if (n % 2 != 0) {
        f.psi = build_2d(fam);
        for (int k = 3; k <= n; k += 2) {
          const Rational c = fam.tag == Family::Psi ? a_coeff(k, n) : b_coeff(k, n);
          f.g_z = f.g_z + c * d_z(build_2d({Family::Xi, k})).times(0, k - 3);
        }
        break;
      }
      if (n != 4) throw UnsupportedError("pairing for even psi is implemented for n = 4 only");
      f.psi = build_2d(fam);
      f.g_z = d_z(f.psi);
      break;
    case Family::Xi:
      if (n < 3) throw UnsupportedError("pairing for xi needs n >= 3");
      f.psi = build_2d(fam);
      f.g_z = d_z(f.psi);
      f.m = n - 3;
      break;
    default:
      throw UnsupportedError("no point pairing is implemented for family " + to_string(fam.tag));
  }
  f.psi_r = d_r(f.psi);
  return f;
}

namespace detail {

template <class F>
double integrate_pieces(F&& f, std::vector<double> cuts, const QuadratureSpec& quad) {
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) total += integrate(f, cuts[i], cuts[i + 1], quad).value;
  }
  return total;
}

}  // namespace detail

/// Total flux through the top and side of the box [0, eps] x [0, eta].
inline double box_flux(const FluxFields& f, const BumpTrial& phi, double eps, double eta,
                       const QuadratureSpec& quad) {
  const auto top = [&](double r) {
    return r * (phi(r, eta) * eval_termsum(f.g_z, r, eta) - phi.d_z(r, eta) * eval_termsum(f.psi, r, eta));
  };
  const auto side = [&](double z) {
    return std::pow(z, f.m) *
           (phi(eps, z) * eval_termsum(f.psi_r, eps, z) - phi.d_r(eps, z) * eval_termsum(f.psi, eps, z));
  };
  // Both integrands vary on the scale of the smaller box side near the corner.
  const double top_val =
      detail::integrate_pieces(top, {0.0, std::min(eps, eta), std::min(eps, 10.0 * eta), eps}, quad);
  const double side_val =
      detail::integrate_pieces(side, {0.0, std::min(eta, eps), std::min(eta, 10.0 * eps), eta}, quad);
  return std::pow(eta, f.m) * top_val + eps * side_val;
}

inline PathResult run_path(const FluxFields& f, const BumpTrial& phi, const PairingSpec& spec, LimitPath path,
                           const QuadratureSpec& quad) {
  PathResult res{path, spec.sequence(path), {}, {}, 0.0, 0.0};
  for (const auto& [eps, eta] : res.boxes) res.values.push_back(box_flux(f, phi, eps, eta, quad));
  if (spec.extrapolation == Extrapolation::LastValue) {
    res.limit = res.values.back();
    res.spread = std::abs(res.values.back() - res.values[res.values.size() - 2]);
    return res;
  }
  const double q = spec.eps_ratio;
  for (std::size_t i = 0; i + 1 < res.values.size(); ++i) {
    res.extrapolated.push_back((res.values[i + 1] - q * res.values[i]) / (1.0 - q));
  }
  res.limit = res.extrapolated.back();
  res.spread = std::abs(res.extrapolated.back() - res.extrapolated[res.extrapolated.size() - 2]);
  return res;
}

/// Pairing of the family's operator image with the bump trial function.
/// The expected value is the source's pairing factor times phi(0,0) = 1.
inline PairingReport pairing(const SolutionFamily& fam, const PairingSpec& spec = {},
                             const QuadratureSpec& quad = {}) {
  spec.validate();
  const SourceSpec src = source_spec(fam);
  if (!src.pairing_factor) throw UnsupportedError("no point pairing is defined for family " + to_string(fam.tag));
  const FluxFields f = flux_fields(fam);
  const BumpTrial phi(spec.rho0);

  PairingReport rep;
  rep.family = to_string(fam.tag);
  rep.n = fam.n;
  rep.rho0 = spec.rho0;
  rep.expected = to_double(*src.pairing_factor) * phi(0.0, 0.0);
  rep.tolerance = rep.expected != 0.0 ? spec.rel_tol * std::abs(rep.expected) : spec.abs_tol;

  double lo = 0.0, hi = 0.0, sum = 0.0;
  for (auto path : {LimitPath::Diagonal, LimitPath::EpsFirst, LimitPath::EtaFirst}) {
    rep.paths.push_back(run_path(f, phi, spec, path, quad));
    const auto& p = rep.paths.back();
    if (!std::isfinite(p.limit) || p.spread > rep.tolerance) {
      throw ConvergenceError("pairing: " + to_string(path) + " sequence for " + rep.family + " n=" +
                                 std::to_string(fam.n) + " is not Cauchy (spread " + std::to_string(p.spread) +
                                 ")",
                             p.limit, p.spread);
    }
    sum += p.limit;
    lo = rep.paths.size() == 1 ? p.limit : std::min(lo, p.limit);
    hi = rep.paths.size() == 1 ? p.limit : std::max(hi, p.limit);
  }
  rep.limit = sum / 3.0;
  rep.path_disagreement = hi - lo;
  rep.pass = true;
  for (const auto& p : rep.paths) rep.pass = rep.pass && std::abs(p.limit - rep.expected) <= rep.tolerance;
  return rep;
}

}  // namespace antilap
