#pragma once

// Catalog of the solution families, their sources and evaluators.
//
// Point families are exact TermSums (2D in (r,z), 1D in x). Ring families are
// alpha-integrals over [0, pi] of R(alpha) = sqrt(r^2 + a^2 - 2ar cos(alpha) + z^2)
// (or rho(alpha) without z in the plane), held as RingIntegrand and evaluated
// by quadrature with the ring radius a supplied at evaluation time.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "antilap/coeff.hpp"
#include "antilap/errors.hpp"
#include "antilap/quadrature.hpp"
#include "antilap/rational.hpp"
#include "antilap/termalg.hpp"

namespace antilap {

enum class Family { Phi, Xi, Psi, PsiBar, PsiTilde4, PsiRing, PsiRing2, Chi, XiRing };

inline const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names = {
      {Family::Phi, "phi"},         {Family::Xi, "xi"},
      {Family::Psi, "psi"},         {Family::PsiBar, "psi-bar"},
      {Family::PsiTilde4, "psi-tilde-4"}, {Family::PsiRing, "psi-ring"},
      {Family::PsiRing2, "psi-ring-2"},   {Family::Chi, "chi"},
      {Family::XiRing, "xi-ring"},
  };
  return names;
}

inline std::string to_string(Family f) {
  for (const auto& [k, name] : family_names()) {
    if (k == f) return name;
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  for (const auto& [k, n] : family_names()) {
    if (n == name) return k;
  }
  throw DomainError("unknown family '" + name + "'");
}

struct SolutionFamily {
  Family tag;
  int n;
};

inline bool is_ring(Family f) {
  return f == Family::PsiRing || f == Family::PsiRing2 || f == Family::Chi || f == Family::XiRing;
}

/// Throws DomainError unless n is in the family's range.
inline void validate(const SolutionFamily& fam) {
  const int n = fam.n;
  const bool odd = n % 2 != 0;
  bool ok = false;
  switch (fam.tag) {
    case Family::Phi:
    case Family::Xi: ok = n >= 2; break;
    case Family::Psi:
    case Family::Chi:
    case Family::PsiRing: ok = odd ? n >= 3 : n >= 4; break;
    case Family::PsiBar: ok = odd && n >= 3; break;
    case Family::PsiTilde4: ok = n == 4; break;
    case Family::PsiRing2: ok = n == 2; break;
    case Family::XiRing: ok = n >= 3; break;
  }
  if (!ok) throw DomainError("family " + to_string(fam.tag) + " is not defined for n=" + std::to_string(n));
}

enum class Weight { CosAlpha, One };

/// coeff * z^z_pow * R^R_pow * (ln(1/R) if log)
struct RingTerm {
  Rational coeff;
  int z_pow = 0;
  int R_pow = 0;
  bool log = false;

  friend bool operator==(const RingTerm&, const RingTerm&) = default;
};

/// scale * pi^pi_power * r^r_prefactor * integral_0^pi weight(alpha) * sum(terms) d alpha
struct RingIntegrand {
  Rational scale = 1;
  int pi_power = 0;
  int r_prefactor = 0;
  Weight weight = Weight::CosAlpha;
  bool uses_z = true;  // false: terms use rho(alpha), the in-plane distance
  std::vector<RingTerm> terms;

  friend bool operator==(const RingIntegrand&, const RingIntegrand&) = default;
};

using Built = std::variant<TermSum1D, TermSum2D, RingIntegrand>;

namespace detail {

inline TermSum2D odd_point_sum(int n, bool renormalized) {
  std::vector<Monomial2D> terms;
  for (int k = 3; k <= n; k += 2) {
    terms.push_back({renormalized ? b_coeff(k, n) : a_coeff(k, n), 0, k - 3, -(k - 2), LogKind::None});
  }
  return canonicalize(std::move(terms));
}

inline TermSum2D even_point_sum(int n) {
  std::vector<Monomial2D> terms{{Rational(1), 0, 0, 0, LogKind::InvRbar}};
  for (int l = 6; l <= n; l += 2) terms.push_back({a_coeff_even(l, n), 0, l - 4, -(l - 4), LogKind::None});
  return canonicalize(std::move(terms));
}

inline std::vector<RingTerm> odd_ring_terms(int n) {
  std::vector<RingTerm> terms;
  for (int k = 3; k <= n; k += 2) terms.push_back({b_coeff(k, n), k - 3, -(k - 2), false});
  return terms;
}

inline std::vector<RingTerm> even_ring_terms(int n) {
  std::vector<RingTerm> terms{{Rational(1), 0, 0, true}};
  for (int l = 6; l <= n; l += 2) terms.push_back({a_coeff_even(l, n), l - 4, -(l - 4), false});
  return terms;
}

}  // namespace detail

inline Built build(const SolutionFamily& fam) {
  validate(fam);
  const int n = fam.n;
  const bool odd = n % 2 != 0;
  switch (fam.tag) {
    case Family::Phi: return phi_x(n);
    case Family::Xi:
      if (n == 2) return TermSum2D::monomial(1, 0, 0, 0, LogKind::InvR);
      return TermSum2D::monomial(1, 0, 0, -(n - 2));
    case Family::Psi: return odd ? detail::odd_point_sum(n, false) : detail::even_point_sum(n);
    case Family::PsiBar: return detail::odd_point_sum(n, true);
    case Family::PsiTilde4:
      return TermSum2D::monomial(1, 0, 0, 0, LogKind::InvRbar) - TermSum2D::monomial(1, 0, 0, 0, LogKind::InvR);
    case Family::PsiRing:
      return RingIntegrand{1, -1, 1, Weight::CosAlpha, true,
                           odd ? detail::odd_ring_terms(n) : detail::even_ring_terms(n)};
    case Family::PsiRing2:
      return RingIntegrand{1, 0, 1, Weight::CosAlpha, false, {RingTerm{1, 0, 0, true}}};
    case Family::Chi:
      return RingIntegrand{1, -1, 0, Weight::One, true, odd ? detail::odd_ring_terms(n) : detail::even_ring_terms(n)};
    case Family::XiRing:
      return RingIntegrand{1, -1, 1, Weight::CosAlpha, true, {RingTerm{1, 0, -(n - 2), false}}};
  }
  throw DomainError("unreachable family");
}

inline TermSum2D build_2d(const SolutionFamily& fam) {
  auto b = build(fam);
  if (auto* ts = std::get_if<TermSum2D>(&b)) return *ts;
  throw DomainError("family " + to_string(fam.tag) + " is not a closed form in the (r,z) frame");
}

inline RingIntegrand build_ring(const SolutionFamily& fam) {
  auto b = build(fam);
  if (auto* ri = std::get_if<RingIntegrand>(&b)) return *ri;
  throw DomainError("family " + to_string(fam.tag) + " is not a ring family");
}

/// Odd point solutions with the a-normalization, as the sum of z^{k-3} Xi_k.
/// Verifies the equality exactly before returning.
inline std::vector<std::pair<Rational, int>> decompose_A_in_L(int n) {
  if (n % 2 == 0 || n < 3) throw DomainError("decompose_A_in_L: need odd n >= 3, got " + std::to_string(n));
  std::vector<std::pair<Rational, int>> parts;
  TermSum2D sum;
  for (int k = 3; k <= n; k += 2) {
    parts.emplace_back(a_coeff(k, n), k);
    sum = sum + a_coeff(k, n) * build_2d({Family::Xi, k}).times(0, k - 3);
  }
  if (!(sum == build_2d({Family::Psi, n}))) {
    throw std::logic_error("decompose_A_in_L: decomposition does not reproduce Psi_" + std::to_string(n));
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Sources

enum class SourceKind { DeltaPoint, DeltaRing, ThetaPoint, ThetaRing, DeltaRingWeighted };

inline std::string to_string(SourceKind k) {
  switch (k) {
    case SourceKind::DeltaPoint: return "delta-point";
    case SourceKind::DeltaRing: return "delta-ring";
    case SourceKind::ThetaPoint: return "theta-point";
    case SourceKind::ThetaRing: return "theta-ring";
    case SourceKind::DeltaRingWeighted: return "delta-ring-weighted";
  }
  return "?";
}

struct SourceSpec {
  SourceKind kind;
  Rational normalization;
  std::string expression;
  // Expected value of the pairing with a trial function, as a multiple of
  // phi(0,0). Empty when no point pairing is implemented for the family.
  std::optional<Rational> pairing_factor;
};

inline SourceSpec source_spec(const SolutionFamily& fam) {
  validate(fam);
  const int n = fam.n;
  const bool odd = n % 2 != 0;
  switch (fam.tag) {
    case Family::PsiBar: return {SourceKind::DeltaPoint, 1, "-delta+(r)/r delta+(z)", Rational(-1)};
    case Family::Psi:
      if (odd) {
        const Rational s = a_row_sum_closed(n);
        return {SourceKind::DeltaPoint, s, "-(" + to_string(s) + ") delta+(r)/r delta+(z)", -s};
      }
      return {SourceKind::ThetaPoint, 1, "-delta+(r)/r (1 - Theta+(z))", Rational(0)};
    case Family::PsiTilde4: return {SourceKind::ThetaPoint, 1, "delta+(r)/r Theta+(z)", std::nullopt};
    case Family::Xi:
      if (n == 2) return {SourceKind::DeltaPoint, 1, "-delta+(r)/r", std::nullopt};
      return {SourceKind::DeltaPoint, 1, "-delta+(r)/r delta+(z)/z^(n-3)", Rational(-1)};
    case Family::PsiRing:
      if (odd) return {SourceKind::DeltaRing, 1, "-delta(r-a) delta+(z)", std::nullopt};
      return {SourceKind::ThetaRing, 1, "-delta(r-a) (1 - Theta+(z))", std::nullopt};
    case Family::PsiRing2: return {SourceKind::DeltaRing, 1, "-pi delta(r-a)", std::nullopt};
    case Family::Chi:
      if (odd) return {SourceKind::DeltaRingWeighted, 1, "-delta(r-a)/r delta+(z)", std::nullopt};
      return {SourceKind::ThetaRing, 1, "-delta(r-a)/r (1 - Theta+(z))", std::nullopt};
    case Family::XiRing:
      return {SourceKind::DeltaRingWeighted, 1, "-delta(r-a) delta+(z)/z^(n-3)", std::nullopt};
    case Family::Phi: break;
  }
  throw UnsupportedError("no source pairing is implemented for family " + to_string(fam.tag) + " in the x frame");
}

// ---------------------------------------------------------------------------
// Evaluation

struct RingValue {
  double value = 0.0;
  double error = 0.0;
};

inline double ring_kernel(const RingIntegrand& ri, double r, double z, double a, double alpha) {
  const double c = std::cos(alpha);
  const double zz = ri.uses_z ? z : 0.0;
  // r^2 + a^2 - 2ar cos(alpha) without cancellation near the ring.
  const double sh = std::sin(0.5 * alpha);
  const double R = std::sqrt((r - a) * (r - a) + 4.0 * a * r * sh * sh + zz * zz);
  double sum = 0.0;
  for (const auto& t : ri.terms) {
    double v = to_double(t.coeff) * std::pow(zz, t.z_pow) * std::pow(R, t.R_pow);
    if (t.log) v *= -std::log(R);
    sum += v;
  }
  return ri.weight == Weight::CosAlpha ? c * sum : sum;
}

inline RingValue eval_ring(const RingIntegrand& ri, double r, double z, double a, const QuadratureSpec& quad = {}) {
  if (!(a > 0.0)) throw DomainError("eval_ring: ring radius must be positive");
  if (r < 0.0 || z < 0.0) throw DomainError("eval_ring: need r, z >= 0");
  const bool on_ring = r == a && (!ri.uses_z || z == 0.0);
  if (on_ring) {
    throw SingularityError("eval_ring: (r,z)=(" + std::to_string(r) + "," + std::to_string(z) +
                           ") lies on the ring set");
  }
  constexpr double pi = 3.141592653589793238462643383279502884;
  double factor = to_double(ri.scale) * std::pow(pi, ri.pi_power) * std::pow(r, ri.r_prefactor);
  if (factor == 0.0) return {0.0, 0.0};
  const auto f = [&](double alpha) { return ring_kernel(ri, r, z, a, alpha); };
  QuadResult q;
  try {
    q = integrate(f, 0.0, pi, quad);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string("eval_ring: ") + e.what(), factor * e.partial(),
                           std::abs(factor) * e.error());
  }
  return {factor * q.value, std::abs(factor) * q.error};
}

/// Evaluates any built family at (r, z); for x-frame families x = r.
inline RingValue eval_built(const Built& b, double r, double z, double a, const QuadratureSpec& quad = {}) {
  if (const auto* ts = std::get_if<TermSum2D>(&b)) return {eval_termsum(*ts, r, z), 0.0};
  if (const auto* ts = std::get_if<TermSum1D>(&b)) return {eval_termsum(*ts, r), 0.0};
  return eval_ring(std::get<RingIntegrand>(b), r, z, a, quad);
}

}  // namespace antilap
