#pragma once

// JSON and CSV serialization of term sums, ring integrands and reports.

#include <charconv>
#include <string>
#include <system_error>

#include <json.hpp>

#include "antilap/asymptotics.hpp"
#include "antilap/fd.hpp"
#include "antilap/pairing.hpp"
#include "antilap/solutions.hpp"
#include "antilap/termalg.hpp"

namespace antilap {

using Json = nlohmann::ordered_json;

/// 17 significant digits, '.' separator, independent of the locale.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

inline Json to_json(const TermSum2D& ts) {
  Json terms = Json::array();
  for (const auto& m : ts.terms()) {
    terms.push_back({{"c", to_string(m.coeff)},
                     {"r", m.r_pow},
                     {"z", m.z_pow},
                     {"Rbar", m.rbar_pow},
                     {"log", static_cast<int>(m.log)}});
  }
  return {{"frame", "rz"}, {"terms", terms}};
}

inline Json to_json(const TermSum1D& ts) {
  Json terms = Json::array();
  for (const auto& m : ts.terms()) terms.push_back({{"c", to_string(m.coeff)}, {"x", m.x_pow}, {"log", m.log ? 1 : 0}});
  return {{"frame", "x"}, {"terms", terms}};
}

inline Json to_json(const RingIntegrand& ri) {
  Json terms = Json::array();
  for (const auto& t : ri.terms) {
    terms.push_back({{"c", to_string(t.coeff)}, {"z", t.z_pow}, {"R", t.R_pow}, {"log", t.log ? 1 : 0}});
  }
  return {{"frame", "ring"},
          {"scale", to_string(ri.scale)},
          {"pi_power", ri.pi_power},
          {"r_prefactor", ri.r_prefactor},
          {"weight", ri.weight == Weight::CosAlpha ? "cos" : "one"},
          {"uses_z", ri.uses_z},
          {"terms", terms}};
}

inline Json to_json(const Built& b) {
  return std::visit([](const auto& v) { return to_json(v); }, b);
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

inline int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("JSON: field '") + key + "' must be an integer");
  return v.get<int>();
}

inline Rational require_rational(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw DomainError(std::string("JSON: field '") + key + "' must be a \"p/q\" string");
  return parse_rational(v.get<std::string>());
}

}  // namespace detail

inline TermSum2D termsum2d_from_json(const Json& j) {
  std::vector<Monomial2D> terms;
  for (const auto& t : detail::require(j, "terms")) {
    const int log = t.contains("log") ? detail::require_int(t, "log") : 0;
    if (log < 0 || log > 2) throw DomainError("JSON: log must be 0, 1 or 2");
    terms.push_back({detail::require_rational(t, "c"), t.contains("r") ? detail::require_int(t, "r") : 0,
                     t.contains("z") ? detail::require_int(t, "z") : 0, detail::require_int(t, "Rbar"),
                     static_cast<LogKind>(log)});
  }
  return canonicalize(std::move(terms));
}

inline TermSum1D termsum1d_from_json(const Json& j) {
  std::vector<Monomial1D> terms;
  for (const auto& t : detail::require(j, "terms")) {
    const int log = t.contains("log") ? detail::require_int(t, "log") : 0;
    if (log < 0 || log > 1) throw DomainError("JSON: log must be 0 or 1 in the x frame");
    terms.push_back({detail::require_rational(t, "c"), detail::require_int(t, "x"), log == 1});
  }
  return canonicalize(std::move(terms));
}

inline RingIntegrand ring_from_json(const Json& j) {
  RingIntegrand ri;
  ri.scale = detail::require_rational(j, "scale");
  ri.pi_power = detail::require_int(j, "pi_power");
  ri.r_prefactor = detail::require_int(j, "r_prefactor");
  const std::string w = detail::require(j, "weight").get<std::string>();
  if (w != "cos" && w != "one") throw DomainError("JSON: weight must be \"cos\" or \"one\"");
  ri.weight = w == "cos" ? Weight::CosAlpha : Weight::One;
  ri.uses_z = j.contains("uses_z") ? j.at("uses_z").get<bool>() : true;
  for (const auto& t : detail::require(j, "terms")) {
    const int log = t.contains("log") ? detail::require_int(t, "log") : 0;
    ri.terms.push_back({detail::require_rational(t, "c"), detail::require_int(t, "z"), detail::require_int(t, "R"),
                        log == 1});
  }
  return ri;
}

/// Reads any of the three shapes, dispatching on "frame" (default "rz").
inline Built built_from_json(const Json& j) {
  const std::string frame = j.contains("frame") ? j.at("frame").get<std::string>() : "rz";
  if (frame == "rz") return termsum2d_from_json(j);
  if (frame == "x") return termsum1d_from_json(j);
  if (frame == "ring") return ring_from_json(j);
  throw DomainError("JSON: unknown frame '" + frame + "'");
}

inline Json point_list(const std::vector<std::pair<double, double>>& pts) {
  Json out = Json::array();
  for (const auto& [r, z] : pts) out.push_back({r, z});
  return out;
}

inline Json to_json(const ResidualReport& rep) {
  return {{"op", rep.op},
          {"n", rep.n},
          {"points", point_list(rep.points)},
          {"h", rep.h},
          {"residuals", rep.residuals},
          {"residuals_half", rep.residuals_half},
          {"max_residual", rep.max_residual},
          {"max_residual_half", rep.max_residual_half},
          {"order_estimate", rep.order_estimate},
          {"pass", rep.pass},
          {"tolerance", {{"min_order", rep.min_order}, {"floor", rep.floor}}}};
}

inline Json to_json(const PairingReport& rep) {
  Json paths = Json::array();
  for (const auto& p : rep.paths) {
    paths.push_back({{"path", to_string(p.path)},
                     {"points", point_list(p.boxes)},
                     {"values", p.values},
                     {"extrapolated", p.extrapolated},
                     {"limit", p.limit},
                     {"spread", p.spread}});
  }
  return {{"op", "pair"},
          {"family", rep.family},
          {"n", rep.n},
          {"rho0", rep.rho0},
          {"expected", rep.expected},
          {"limit", rep.limit},
          {"path_disagreement", rep.path_disagreement},
          {"paths", paths},
          {"pass", rep.pass},
          {"tolerance", rep.tolerance}};
}

inline Json to_json(const SlopeReport& rep) {
  return {{"op", "asympt"},
          {"family", rep.family},
          {"n", rep.n},
          {"direction", to_string(rep.direction)},
          {"mode", to_string(rep.mode)},
          {"fixed", rep.fixed},
          {"range", {rep.lo, rep.hi}},
          {"points", rep.t},
          {"values", rep.values},
          {"slope", rep.slope},
          {"intercept", rep.intercept},
          {"r_squared", rep.r_squared},
          {"max_residual", rep.max_residual}};
}

}  // namespace antilap
