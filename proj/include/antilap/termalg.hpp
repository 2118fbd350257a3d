#pragma once

// Exact algebra of closed-form fields in the (r,z) frame and the radial x frame.
//
// A 2D field is a finite sum of monomials
//
//     c * r^j * z^p * Rbar^s * L,      Rbar = sqrt(r^2 + z^2),
//     L in { 1, ln(1/Rbar), ln(1/r) },
//
// with j, p, s signed integers. The relation r^2 = Rbar^2 - z^2 is the only one
// among r, z, Rbar, so every field has a unique normal form:
//
//   * for each log factor, terms with even and with odd j are kept apart;
//   * if every exponent j in such a group is >= 0, r^2 is eliminated and the
//     group reads r^{0|1} * N(z, Rbar);
//   * otherwise the group is r^{j0} * N(z, Rbar) with a single negative j0 and N
//     not divisible by (Rbar^2 - z^2).
//
// Zero is therefore the empty sum. Logs never multiply each other; an
// operation that would produce ln^2 is an internal error.
//
// 1D fields are sums of c * x^j * L with L in { 1, ln(1/x) }.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "antilap/coeff.hpp"
#include "antilap/errors.hpp"
#include "antilap/rational.hpp"

namespace antilap {

enum class LogKind : int { None = 0, InvRbar = 1, InvR = 2 };

struct Monomial2D {
  Rational coeff;
  int r_pow = 0;
  int z_pow = 0;
  int rbar_pow = 0;
  LogKind log = LogKind::None;

  friend bool operator==(const Monomial2D&, const Monomial2D&) = default;
};

struct Monomial1D {
  Rational coeff;
  int x_pow = 0;
  bool log = false;  // factor ln(1/x)

  friend bool operator==(const Monomial1D&, const Monomial1D&) = default;
};

class TermSum2D;
class TermSum1D;
TermSum2D canonicalize(std::vector<Monomial2D> terms);
TermSum1D canonicalize(std::vector<Monomial1D> terms);

namespace detail {

// (log, j, p, s) ordering of the canonical term list.
inline auto key_of(const Monomial2D& m) {
  return std::make_tuple(static_cast<int>(m.log), m.r_pow, m.z_pow, m.rbar_pow);
}

inline int floor_mod2(int v) { return ((v % 2) + 2) % 2; }

// Laurent polynomial in (z, Rbar); key is (s, p) so iteration runs over Rbar degree.
using ZRPoly = std::map<std::pair<int, int>, Rational>;

inline void add_to(ZRPoly& poly, int s, int p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = poly.try_emplace({s, p}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) poly.erase(it);
  }
}

inline BigInt binomial(int n, int k) {
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

// Adds c * z^p * Rbar^s * (Rbar^2 - z^2)^e to poly.
inline void add_expanded(ZRPoly& poly, int s, int p, int e, const Rational& c) {
  for (int i = 0; i <= e; ++i) {
    Rational term = c * Rational(binomial(e, i));
    if (i % 2 == 1) term = -term;
    add_to(poly, s + 2 * (e - i), p + 2 * i, term);
  }
}

// Exact division by (Rbar^2 - z^2); nullopt when it does not divide.
inline std::optional<ZRPoly> divide_by_r2(ZRPoly poly) {
  if (poly.empty()) return ZRPoly{};
  const int s_min = poly.begin()->first.first;
  ZRPoly quotient;
  while (!poly.empty()) {
    auto top = std::prev(poly.end());
    const int s = top->first.first;
    if (s < s_min + 2) break;
    const int p = top->first.second;
    const Rational c = top->second;
    poly.erase(top);
    add_to(quotient, s - 2, p, c);
    add_to(poly, s - 2, p + 2, c);
  }
  if (!poly.empty()) return std::nullopt;
  return quotient;
}

}  // namespace detail

/// Canonical sum of Monomial2D. Construct through canonicalize() or the
/// arithmetic below; the term list is always in normal form.
class TermSum2D {
 public:
  TermSum2D() = default;

  static TermSum2D monomial(Rational c, int r_pow, int z_pow, int rbar_pow, LogKind log = LogKind::None) {
    return canonicalize({Monomial2D{std::move(c), r_pow, z_pow, rbar_pow, log}});
  }

  const std::vector<Monomial2D>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool has_log(LogKind kind) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Monomial2D& m) { return m.log == kind; });
  }

  /// Multiplies by r^a z^b Rbar^c.
  TermSum2D times(int a, int b, int c = 0) const {
    std::vector<Monomial2D> out = terms_;
    for (auto& m : out) {
      m.r_pow += a;
      m.z_pow += b;
      m.rbar_pow += c;
    }
    return canonicalize(std::move(out));
  }

  friend TermSum2D operator+(const TermSum2D& x, const TermSum2D& y) {
    std::vector<Monomial2D> all = x.terms_;
    all.insert(all.end(), y.terms_.begin(), y.terms_.end());
    return canonicalize(std::move(all));
  }
  friend TermSum2D operator*(const Rational& q, const TermSum2D& x) {
    if (q == 0) return {};
    TermSum2D out = x;
    for (auto& m : out.terms_) m.coeff *= q;
    return out;
  }
  friend TermSum2D operator-(const TermSum2D& x) { return Rational(-1) * x; }
  friend TermSum2D operator-(const TermSum2D& x, const TermSum2D& y) { return x + (-y); }
  friend bool operator==(const TermSum2D&, const TermSum2D&) = default;

 private:
  friend TermSum2D canonicalize(std::vector<Monomial2D> terms);
  std::vector<Monomial2D> terms_;
};

inline TermSum2D canonicalize(std::vector<Monomial2D> terms) {
  // Merge like terms first so cancelled groups do not influence the r-exponent choice.
  std::map<std::tuple<int, int, int, int>, Rational> merged;
  for (auto& m : terms) {
    if (m.coeff == 0) continue;
    auto [it, inserted] = merged.try_emplace(detail::key_of(m), m.coeff);
    if (!inserted) it->second += m.coeff;
  }

  // Group by (log kind, parity of r exponent).
  std::map<std::pair<int, int>, std::vector<std::tuple<int, int, int, Rational>>> groups;
  for (auto& [key, c] : merged) {
    if (c == 0) continue;
    const auto [log, j, p, s] = key;
    groups[{log, detail::floor_mod2(j)}].emplace_back(j, p, s, c);
  }

  std::vector<Monomial2D> out;
  for (auto& [gkey, members] : groups) {
    const auto [log, parity] = gkey;
    int base = parity;
    for (const auto& t : members) base = std::min(base, std::get<0>(t));

    detail::ZRPoly poly;
    for (const auto& [j, p, s, c] : members) detail::add_expanded(poly, s, p, (j - base) / 2, c);

    while (base < 0) {
      auto quotient = detail::divide_by_r2(poly);
      if (!quotient) break;
      poly = std::move(*quotient);
      base += 2;
    }
    for (auto& [sp, c] : poly) {
      out.push_back(Monomial2D{c, base, sp.second, sp.first, static_cast<LogKind>(log)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial2D& a, const Monomial2D& b) { return detail::key_of(a) < detail::key_of(b); });

  TermSum2D result;
  result.terms_ = std::move(out);
  return result;
}

/// Canonical sum of Monomial1D, sorted by (log, x exponent).
class TermSum1D {
 public:
  TermSum1D() = default;

  static TermSum1D monomial(Rational c, int x_pow, bool log = false) {
    return canonicalize({Monomial1D{std::move(c), x_pow, log}});
  }

  const std::vector<Monomial1D>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  TermSum1D times(int a) const {
    TermSum1D out = *this;
    for (auto& m : out.terms_) m.x_pow += a;
    return out;
  }

  friend TermSum1D operator+(const TermSum1D& x, const TermSum1D& y) {
    std::vector<Monomial1D> all = x.terms_;
    all.insert(all.end(), y.terms_.begin(), y.terms_.end());
    return canonicalize(std::move(all));
  }
  friend TermSum1D operator*(const Rational& q, const TermSum1D& x) {
    if (q == 0) return {};
    TermSum1D out = x;
    for (auto& m : out.terms_) m.coeff *= q;
    return out;
  }
  friend TermSum1D operator-(const TermSum1D& x) { return Rational(-1) * x; }
  friend TermSum1D operator-(const TermSum1D& x, const TermSum1D& y) { return x + (-y); }
  friend bool operator==(const TermSum1D&, const TermSum1D&) = default;

 private:
  friend TermSum1D canonicalize(std::vector<Monomial1D> terms);
  std::vector<Monomial1D> terms_;
};

inline TermSum1D canonicalize(std::vector<Monomial1D> terms) {
  std::map<std::pair<int, int>, Rational> merged;
  for (auto& m : terms) {
    if (m.coeff == 0) continue;
    merged[{m.log ? 1 : 0, m.x_pow}] += m.coeff;
  }
  TermSum1D result;
  for (auto& [key, c] : merged) {
    if (c != 0) result.terms_.push_back(Monomial1D{c, key.second, key.first == 1});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Partial derivatives

inline TermSum2D d_r(const TermSum2D& ts) {
  std::vector<Monomial2D> out;
  out.reserve(ts.size() * 3);
  for (const auto& m : ts.terms()) {
    if (m.r_pow != 0) out.push_back({m.coeff * m.r_pow, m.r_pow - 1, m.z_pow, m.rbar_pow, m.log});
    if (m.rbar_pow != 0) out.push_back({m.coeff * m.rbar_pow, m.r_pow + 1, m.z_pow, m.rbar_pow - 2, m.log});
    if (m.log == LogKind::InvRbar) out.push_back({-m.coeff, m.r_pow + 1, m.z_pow, m.rbar_pow - 2, LogKind::None});
    if (m.log == LogKind::InvR) out.push_back({-m.coeff, m.r_pow - 1, m.z_pow, m.rbar_pow, LogKind::None});
  }
  return canonicalize(std::move(out));
}

inline TermSum2D d_z(const TermSum2D& ts) {
  std::vector<Monomial2D> out;
  out.reserve(ts.size() * 3);
  for (const auto& m : ts.terms()) {
    if (m.z_pow != 0) out.push_back({m.coeff * m.z_pow, m.r_pow, m.z_pow - 1, m.rbar_pow, m.log});
    if (m.rbar_pow != 0) out.push_back({m.coeff * m.rbar_pow, m.r_pow, m.z_pow + 1, m.rbar_pow - 2, m.log});
    if (m.log == LogKind::InvRbar) out.push_back({-m.coeff, m.r_pow, m.z_pow + 1, m.rbar_pow - 2, LogKind::None});
  }
  return canonicalize(std::move(out));
}

inline TermSum1D d_x(const TermSum1D& ts) {
  std::vector<Monomial1D> out;
  for (const auto& m : ts.terms()) {
    if (m.x_pow != 0) out.push_back({m.coeff * m.x_pow, m.x_pow - 1, m.log});
    if (m.log) out.push_back({-m.coeff, m.x_pow - 1, false});
  }
  return canonicalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Operators

enum class OperatorKind {
  LaplaceRZ,   // (1/r) d_r r d_r + z^{3-n} d_z z^{n-3} d_z
  AntiR,       // r d_r (1/r) d_r + z^{3-n} d_z z^{n-3} d_z
  AntiZ,       // (1/r) d_r r d_r + z^{n-3} d_z z^{3-n} d_z
  AntiDouble,  // r d_r (1/r) d_r + z^{n-3} d_z z^{3-n} d_z
  LaplaceX,    // x^{1-n} d_x x^{n-1} d_x
  AntiX,       // x^{n-1} d_x x^{1-n} d_x
};

inline std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::LaplaceRZ: return "laplace-rz";
    case OperatorKind::AntiR: return "anti-r";
    case OperatorKind::AntiZ: return "anti-z";
    case OperatorKind::AntiDouble: return "anti-double";
    case OperatorKind::LaplaceX: return "laplace-x";
    case OperatorKind::AntiX: return "anti-x";
  }
  return "?";
}

inline bool is_x_frame(OperatorKind kind) { return kind == OperatorKind::LaplaceX || kind == OperatorKind::AntiX; }
inline bool has_anti_r_part(OperatorKind kind) { return kind == OperatorKind::AntiR || kind == OperatorKind::AntiDouble; }
inline bool has_anti_z_part(OperatorKind kind) { return kind == OperatorKind::AntiZ || kind == OperatorKind::AntiDouble; }

namespace detail {

inline TermSum2D r_part(bool anti, const TermSum2D& f) {
  return anti ? d_r(d_r(f).times(-1, 0)).times(1, 0) : d_r(d_r(f).times(1, 0)).times(-1, 0);
}

// For n = 2 the z subspace is absent and the z part vanishes.
inline TermSum2D z_part(bool anti, int n, const TermSum2D& f) {
  if (n == 2) return {};
  const int w = n - 3;
  return anti ? d_z(d_z(f).times(0, -w)).times(0, w) : d_z(d_z(f).times(0, w)).times(0, -w);
}

}  // namespace detail

inline TermSum2D apply_operator(OperatorKind kind, int n, const TermSum2D& ts) {
  if (is_x_frame(kind)) throw DomainError("apply_operator: " + to_string(kind) + " acts on the x frame");
  if (n < 2) throw DomainError("apply_operator: need n >= 2");
  return detail::r_part(has_anti_r_part(kind), ts) + detail::z_part(has_anti_z_part(kind), n, ts);
}

inline TermSum1D apply_operator(OperatorKind kind, int n, const TermSum1D& ts) {
  if (!is_x_frame(kind)) throw DomainError("apply_operator: " + to_string(kind) + " acts on the (r,z) frame");
  if (n < 1) throw DomainError("apply_operator: need n >= 1");
  const int w = n - 1;
  if (kind == OperatorKind::LaplaceX) return d_x(d_x(ts).times(w)).times(-w);
  return d_x(d_x(ts).times(-w)).times(w);
}

// ---------------------------------------------------------------------------
// Dimension-lifting transforms

/// -(1/(n-4)) (1/z) d_z : Laplace-set lift from n-2 to n.
inline TermSum2D transform_fL(int n, const TermSum2D& ts) {
  if (n < 5) throw DomainError("transform_fL: need n >= 5, got " + std::to_string(n));
  return Rational(-1, n - 4) * d_z(ts).times(0, -1);
}

/// -(z^{n-3}/(n-4)) d_z z^{4-n} : anti-z-set lift from n-2 to n.
inline TermSum2D transform_fA(int n, const TermSum2D& ts) {
  if (n < 5) throw DomainError("transform_fA: need n >= 5, got " + std::to_string(n));
  return Rational(-1, n - 4) * d_z(ts.times(0, 4 - n)).times(0, n - 3);
}

/// Applies transform_fL for n_from+2, ..., n_to in turn.
inline TermSum2D iterate_fL(int n_from, int n_to, TermSum2D ts) {
  for (int m = n_from + 2; m <= n_to; m += 2) ts = transform_fL(m, ts);
  return ts;
}

inline TermSum2D iterate_fA(int n_from, int n_to, TermSum2D ts) {
  for (int m = n_from + 2; m <= n_to; m += 2) ts = transform_fA(m, ts);
  return ts;
}

/// One-shot form of the iterated Laplace lift from base dimension 3 or 4:
/// (1/(n-4)!!) (-(1/z) d_z)^{(n-base)/2} ts.
inline TermSum2D closed_fL(int base, int n, TermSum2D ts) {
  if ((base != 3 && base != 4) || n < base || (n - base) % 2 != 0) throw DomainError("closed_fL: bad dimensions");
  for (int i = 0; i < (n - base) / 2; ++i) ts = -d_z(ts).times(0, -1);
  return Rational(BigInt(1), double_factorial(n - 4)) * ts;
}

/// One-shot form of the iterated anti-z lift:
/// odd:  (z^{n-3}/(n-4)!!) (-d_z (1/z))^{(n-3)/2} ts
/// even: (z^{n-3}/(n-4)!!) (-d_z (1/z))^{(n-4)/2} (ts/z)
inline TermSum2D closed_fA(int base, int n, TermSum2D ts) {
  if ((base != 3 && base != 4) || n < base || (n - base) % 2 != 0) throw DomainError("closed_fA: bad dimensions");
  if (base == 4) ts = ts.times(0, -1);
  for (int i = 0; i < (n - base) / 2; ++i) ts = -d_z(ts.times(0, -1));
  return Rational(BigInt(1), double_factorial(n - 4)) * ts.times(0, n - 3);
}

// ---------------------------------------------------------------------------
// x frame

/// Radial point solution: x^{2-n}/(n-2) for n > 2, ln(1/x) for n = 2.
inline TermSum1D phi_x(int n) {
  if (n < 2) throw DomainError("phi_x: need n >= 2");
  if (n == 2) return TermSum1D::monomial(1, 0, true);
  return TermSum1D::monomial(Rational(1, n - 2), 2 - n);
}

/// -(1/(n-2)) (1/x) d_x : lift from n-2 to n.
inline TermSum1D transform_x(int n, const TermSum1D& ts) {
  if (n < 4) throw DomainError("transform_x: need n >= 4, got " + std::to_string(n));
  return Rational(-1, n - 2) * d_x(ts).times(-1);
}

// ---------------------------------------------------------------------------
// Operator rearrangement identities. Each check returns lhs - rhs, which must
// canonicalize to the empty sum for every input.

enum class Rearrangement {
  R4_8,   // (1/x) d_x Lap_x^{(n-2)} = Lap_x^{(n)} (1/x) d_x
  R4_9,   // Lap_x^{(n)} T_n F = T_n Lap_x^{(n-2)} F,  T_n = transform_x
  R4_16,  // (1/z) d_z Lap_rz^{(n-2)} = Lap_rz^{(n)} (1/z) d_z
  R5_8a,  // x^{n-1} d_x Lap_x = AntiLap_x (x^{n-1} d_x)
  R5_8b,  // x^{1-n} d_x AntiLap_x = Lap_x (x^{1-n} d_x)
  R5_9a,  // r d_r Lap_rz = AntiR (r d_r)
  R5_9b,  // z^{n-3} d_z Lap_rz = AntiZ (z^{n-3} d_z)
  R5_9c,  // z^{n-3} d_z AntiR = AntiDouble (z^{n-3} d_z)
  R5_10,  // z^{3-n} d_z AntiZ = Lap_rz (z^{3-n} d_z)
  R5_16,  // z^{n-3} d_z z^{4-n} AntiZ^{(n-2)} = AntiZ^{(n)} z^{n-3} d_z z^{4-n}
};

inline const std::vector<std::pair<Rearrangement, std::string>>& rearrangement_names() {
  static const std::vector<std::pair<Rearrangement, std::string>> names = {
      {Rearrangement::R4_8, "4.8"},   {Rearrangement::R4_9, "4.9"},   {Rearrangement::R4_16, "4.16"},
      {Rearrangement::R5_8a, "5.8a"}, {Rearrangement::R5_8b, "5.8b"}, {Rearrangement::R5_9a, "5.9a"},
      {Rearrangement::R5_9b, "5.9b"}, {Rearrangement::R5_9c, "5.9c"}, {Rearrangement::R5_10, "5.10"},
      {Rearrangement::R5_16, "5.16"},
  };
  return names;
}

inline std::string to_string(Rearrangement id) {
  for (const auto& [k, name] : rearrangement_names()) {
    if (k == id) return name;
  }
  return "?";
}

inline Rearrangement parse_rearrangement(const std::string& name) {
  for (const auto& [k, n] : rearrangement_names()) {
    if (n == name) return k;
  }
  throw DomainError("unknown rearrangement identity '" + name + "'");
}

inline bool rearrangement_is_1d(Rearrangement id) {
  return id == Rearrangement::R4_8 || id == Rearrangement::R4_9 || id == Rearrangement::R5_8a ||
         id == Rearrangement::R5_8b;
}

/// Smallest n for which the identity is stated.
inline int rearrangement_min_n(Rearrangement id) {
  switch (id) {
    case Rearrangement::R4_8: return 3;
    case Rearrangement::R4_9: return 4;
    case Rearrangement::R4_16: return 5;  // the lower operator needs a z subspace
    case Rearrangement::R5_8a:
    case Rearrangement::R5_8b: return 2;
    case Rearrangement::R5_16: return 5;
    default: return 3;
  }
}

inline TermSum1D check_rearrangement(Rearrangement id, int n, const TermSum1D& f) {
  if (!rearrangement_is_1d(id)) throw DomainError("identity " + to_string(id) + " acts on the (r,z) frame");
  if (n < rearrangement_min_n(id)) throw DomainError("identity " + to_string(id) + " out of range for n=" + std::to_string(n));
  const auto lap = [](int m, const TermSum1D& g) { return apply_operator(OperatorKind::LaplaceX, m, g); };
  const auto anti = [](int m, const TermSum1D& g) { return apply_operator(OperatorKind::AntiX, m, g); };
  switch (id) {
    case Rearrangement::R4_8:
      return d_x(lap(n - 2, f)).times(-1) - lap(n, d_x(f).times(-1));
    case Rearrangement::R4_9:
      return lap(n, transform_x(n, f)) - transform_x(n, lap(n - 2, f));
    case Rearrangement::R5_8a:
      return d_x(lap(n, f)).times(n - 1) - anti(n, d_x(f).times(n - 1));
    case Rearrangement::R5_8b:
      return d_x(anti(n, f)).times(1 - n) - lap(n, d_x(f).times(1 - n));
    default: break;
  }
  throw DomainError("unreachable rearrangement");
}

inline TermSum2D check_rearrangement(Rearrangement id, int n, const TermSum2D& f) {
  if (rearrangement_is_1d(id)) throw DomainError("identity " + to_string(id) + " acts on the x frame");
  if (n < rearrangement_min_n(id)) throw DomainError("identity " + to_string(id) + " out of range for n=" + std::to_string(n));
  using K = OperatorKind;
  const auto op = [](K k, int m, const TermSum2D& g) { return apply_operator(k, m, g); };
  switch (id) {
    case Rearrangement::R4_16:
      return d_z(op(K::LaplaceRZ, n - 2, f)).times(0, -1) - op(K::LaplaceRZ, n, d_z(f).times(0, -1));
    case Rearrangement::R5_9a:
      return d_r(op(K::LaplaceRZ, n, f)).times(1, 0) - op(K::AntiR, n, d_r(f).times(1, 0));
    case Rearrangement::R5_9b:
      return d_z(op(K::LaplaceRZ, n, f)).times(0, n - 3) - op(K::AntiZ, n, d_z(f).times(0, n - 3));
    case Rearrangement::R5_9c:
      return d_z(op(K::AntiR, n, f)).times(0, n - 3) - op(K::AntiDouble, n, d_z(f).times(0, n - 3));
    case Rearrangement::R5_10:
      return d_z(op(K::AntiZ, n, f)).times(0, 3 - n) - op(K::LaplaceRZ, n, d_z(f).times(0, 3 - n));
    case Rearrangement::R5_16: {
      const auto lift = [n](const TermSum2D& g) { return d_z(g.times(0, 4 - n)).times(0, n - 3); };
      return lift(op(K::AntiZ, n - 2, f)) - op(K::AntiZ, n, lift(f));
    }
    default: break;
  }
  throw DomainError("unreachable rearrangement");
}

// ---------------------------------------------------------------------------
// Floating evaluation

inline double eval_termsum(const TermSum1D& ts, double x) {
  double total = 0.0;
  for (const auto& m : ts.terms()) {
    if (x <= 0.0 && (m.x_pow < 0 || m.log)) {
      throw SingularityError("term x^" + std::to_string(m.x_pow) + (m.log ? "*ln(1/x)" : "") +
                             " is singular at x=" + std::to_string(x));
    }
    double v = to_double(m.coeff) * std::pow(x, m.x_pow);
    if (m.log) v *= -std::log(x);
    total += v;
  }
  return total;
}

inline std::string describe(const Monomial2D& m) {
  std::string s = to_string(m.coeff) + "*r^" + std::to_string(m.r_pow) + "*z^" + std::to_string(m.z_pow) +
                  "*Rbar^" + std::to_string(m.rbar_pow);
  if (m.log == LogKind::InvRbar) s += "*ln(1/Rbar)";
  if (m.log == LogKind::InvR) s += "*ln(1/r)";
  return s;
}

/// Evaluates at (r, z) with r, z >= 0. Throws SingularityError naming the
/// first term that is undefined there.
inline double eval_termsum(const TermSum2D& ts, double r, double z) {
  const double rbar = std::hypot(r, z);
  double total = 0.0;
  for (const auto& m : ts.terms()) {
    const bool bad = (rbar == 0.0 && (m.rbar_pow < 0 || m.log == LogKind::InvRbar)) ||
                     (r == 0.0 && (m.r_pow < 0 || m.log == LogKind::InvR)) || (z == 0.0 && m.z_pow < 0);
    if (bad) {
      throw SingularityError("term " + describe(m) + " is singular at (r,z)=(" + std::to_string(r) + "," +
                             std::to_string(z) + ")");
    }
    double v = to_double(m.coeff) * std::pow(r, m.r_pow) * std::pow(z, m.z_pow) * std::pow(rbar, m.rbar_pow);
    if (m.log == LogKind::InvRbar) v *= -std::log(rbar);
    if (m.log == LogKind::InvR) v *= -std::log(r);
    total += v;
  }
  return total;
}

}  // namespace antilap
