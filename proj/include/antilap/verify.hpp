#pragma once

// Named verification suites. Each returns a JSON object
// {"suite": name, "pass": bool, "checks": [...]} with one entry per check.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "antilap/asymptotics.hpp"
#include "antilap/coeff.hpp"
#include "antilap/fd.hpp"
#include "antilap/identities.hpp"
#include "antilap/json_io.hpp"
#include "antilap/pairing.hpp"
#include "antilap/sampling.hpp"
#include "antilap/solutions.hpp"
#include "antilap/termalg.hpp"

namespace antilap {

struct VerifyOptions {
  int max_n = 0;  // 0 selects each suite's own default
  std::uint64_t seed = 0;
  QuadratureSpec quad;
  StencilSpec fd{1e-2, 2};
  PairingSpec pair;
  int fit_samples = 32;
};

inline const std::vector<std::string>& symbolic_suites() {
  static const std::vector<std::string> s = {"triangles", "sums", "annihilation", "transforms", "rearrangements"};
  return s;
}

inline const std::vector<std::string>& numeric_suites() {
  static const std::vector<std::string> s = {"residuals", "identities", "structural", "pairing", "asymptotics"};
  return s;
}

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) : name_(std::move(name)) {}

  void add(Json check) {
    pass_ = pass_ && check.at("pass").get<bool>();
    checks_.push_back(std::move(check));
  }

  Json finish() const { return {{"suite", name_}, {"pass", pass_}, {"checks", checks_}}; }

 private:
  std::string name_;
  bool pass_ = true;
  Json checks_ = Json::array();
};

// Appendix triangles as printed, rows n = 3, 5, ..., 15.
inline const char* printed_a_triangle() {
  return "1\n1 1\n1 2/3 1\n1 3/5 3/5 1\n1 4/7 18/35 4/7 1\n1 5/9 10/21 10/21 5/9 1\n"
         "1 6/11 5/11 100/231 5/11 6/11 1\n";
}

inline const char* printed_b_triangle() {
  return "1\n1/2 1/2\n3/8 1/4 3/8\n5/16 3/16 3/16 5/16\n35/128 5/32 9/64 5/32 35/128\n"
         "63/256 35/256 15/128 15/128 35/256 63/256\n231/1024 63/512 105/1024 25/256 105/1024 63/512 231/1024\n";
}

inline std::vector<std::vector<Rational>> parse_rows(const char* text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

}  // namespace detail

inline Json suite_triangles(const VerifyOptions& opt) {
  detail::SuiteBuilder s("triangles");
  const int max_n = detail::pick(opt.max_n, 15);
  const auto a_rows = triangle(CoeffFamily::AOdd, std::max(max_n, 15));
  const auto b_rows = triangle(CoeffFamily::BOdd, std::max(max_n, 15));
  for (const auto& [label, rows, printed] :
       {std::tuple{"a", &a_rows, detail::printed_a_triangle()}, std::tuple{"b", &b_rows, detail::printed_b_triangle()}}) {
    const auto want = detail::parse_rows(printed);
    bool ok = true;
    for (std::size_t i = 0; i < want.size(); ++i) ok = ok && (*rows)[i].values == want[i];
    s.add({{"name", std::string(label) + "-triangle matches printed rows n=3..15"}, {"pass", ok}});
  }
  bool closed = true, symmetric = true, recur = true;
  for (const auto& row : a_rows) {
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      const int k = 3 + 2 * static_cast<int>(i);
      closed = closed && row.values[i] == a_coeff(k, row.n);
      recur = recur && row.values[i] == a_coeff_recurrence(k, row.n);
      symmetric = symmetric && row.values[i] == row.values[row.values.size() - 1 - i];
    }
  }
  s.add({{"name", "rows agree with the closed form"}, {"max_n", a_rows.back().n}, {"pass", closed}});
  s.add({{"name", "rows agree with the k-recurrence"}, {"max_n", a_rows.back().n}, {"pass", recur}});
  s.add({{"name", "rows are symmetric"}, {"max_n", a_rows.back().n}, {"pass", symmetric}});
  return s.finish();
}

inline Json suite_sums(const VerifyOptions& opt) {
  detail::SuiteBuilder s("sums");
  const int max_n = detail::pick(opt.max_n, 201);
  bool sum_b = true, sum_a = true, aux = true;
  int first_bad = 0;
  // Row sums use the rows built by the n-recurrence, not the closed form.
  for (const auto& row : triangle(CoeffFamily::AOdd, max_n)) {
    const int n = row.n;
    Rational total_a = 0, total_b = 0;
    for (const auto& v : row.values) total_a += v;
    for (int k = 3; k <= n; k += 2) total_b += b_coeff(k, n);
    const auto cs = coeff_sums(n);
    const bool ok_b = total_b == 1;
    const bool ok_a = total_a == Rational(double_factorial(n - 3), double_factorial(n - 4));
    const bool ok_aux = n == 3 || (cs.aux1 == 0 && cs.aux2 == 0);
    if (!(ok_a && ok_b && ok_aux) && first_bad == 0) first_bad = n;
    sum_b = sum_b && ok_b;
    sum_a = sum_a && ok_a;
    aux = aux && ok_aux;
  }
  s.add({{"name", "sum of b over a row is 1"}, {"max_n", max_n}, {"pass", sum_b}});
  s.add({{"name", "sum of a over a row is (n-3)!!/(n-4)!!"}, {"max_n", max_n}, {"pass", sum_a}});
  s.add({{"name", "auxiliary sums vanish for n > 3"}, {"max_n", max_n}, {"pass", aux}, {"first_failure", first_bad}});
  bool sig = true;
  for (int n = 3; n <= 50; ++n) sig = sig && sigma(n) * Rational(n - 2) == sigma(2) * sigma(n - 2);
  s.add({{"name", "sigma_n (n-2) = sigma_2 sigma_{n-2}"}, {"max_n", 50}, {"pass", sig}});
  return s.finish();
}

inline Json suite_annihilation(const VerifyOptions& opt) {
  detail::SuiteBuilder s("annihilation");
  const int max_n = detail::pick(opt.max_n, 51);
  std::vector<int> bad_odd, bad_even, bad_xi, bad_dz;
  for (int n = 3; n <= max_n; ++n) {
    if (n % 2 != 0) {
      if (!apply_operator(OperatorKind::AntiZ, n, build_2d({Family::Psi, n})).empty()) bad_odd.push_back(n);
      if (!apply_operator(OperatorKind::AntiZ, n, build_2d({Family::PsiBar, n})).empty()) bad_odd.push_back(n);
    } else {
      const auto psi = build_2d({Family::Psi, n});
      if (!apply_operator(OperatorKind::AntiZ, n, psi).empty()) bad_even.push_back(n);
      if (!(d_z(psi) == TermSum2D::monomial(-1, 0, n - 3, -(n - 2)))) bad_dz.push_back(n);
    }
    if (!apply_operator(OperatorKind::LaplaceRZ, n, build_2d({Family::Xi, n})).empty()) bad_xi.push_back(n);
  }
  s.add({{"name", "anti-z operator annihilates odd psi and psi-bar"}, {"max_n", max_n}, {"pass", bad_odd.empty()},
         {"failures", bad_odd}});
  s.add({{"name", "anti-z operator annihilates even psi"}, {"max_n", max_n}, {"pass", bad_even.empty()},
         {"failures", bad_even}});
  s.add({{"name", "Laplacian annihilates xi"}, {"max_n", max_n}, {"pass", bad_xi.empty()}, {"failures", bad_xi}});
  s.add({{"name", "d_z psi = -z^(n-3) Rbar^-(n-2) for even n"}, {"max_n", max_n}, {"pass", bad_dz.empty()},
         {"failures", bad_dz}});
  const bool tilde = apply_operator(OperatorKind::AntiZ, 4, build_2d({Family::PsiTilde4, 4})).empty();
  s.add({{"name", "anti-z operator annihilates psi-tilde-4"}, {"pass", tilde}});
  const bool split = build_2d({Family::Psi, 4}) == build_2d({Family::PsiTilde4, 4}) + build_2d({Family::Xi, 2});
  s.add({{"name", "psi_4 = psi-tilde-4 + xi_2"}, {"pass", split}});
  return s.finish();
}

inline Json suite_transforms(const VerifyOptions& opt) {
  detail::SuiteBuilder s("transforms");
  const int max_n = detail::pick(opt.max_n, 51);
  std::vector<int> bad_fl, bad_fa, bad_closed, bad_dec, bad_x;
  const auto xi3 = build_2d({Family::Xi, 3}), xi4 = build_2d({Family::Xi, 4});
  const auto psi3 = build_2d({Family::Psi, 3}), psi4 = build_2d({Family::Psi, 4});
  TermSum2D xi_odd = xi3, xi_even = xi4, psi_odd = psi3, psi_even = psi4;
  for (int n = 5; n <= max_n; ++n) {
    const bool odd = n % 2 != 0;
    TermSum2D& xi_it = odd ? xi_odd : xi_even;
    TermSum2D& psi_it = odd ? psi_odd : psi_even;
    xi_it = transform_fL(n, xi_it);
    psi_it = transform_fA(n, psi_it);
    const auto xi = build_2d({Family::Xi, n});
    const auto psi = build_2d({Family::Psi, n});
    if (!(xi_it == xi)) bad_fl.push_back(n);
    if (!(psi_it == psi)) bad_fa.push_back(n);
    if (!(closed_fL(odd ? 3 : 4, n, odd ? xi3 : xi4) == xi) || !(closed_fA(odd ? 3 : 4, n, odd ? psi3 : psi4) == psi)) {
      bad_closed.push_back(n);
    }
  }
  for (int n = 3; n <= max_n; n += 2) {
    try {
      decompose_A_in_L(n);
    } catch (const std::exception&) {
      bad_dec.push_back(n);
    }
  }
  for (int n = 4; n <= max_n; ++n) {
    if (!(transform_x(n, phi_x(n - 2)) == phi_x(n))) bad_x.push_back(n);
  }
  s.add({{"name", "iterated f_L reproduces xi"}, {"max_n", max_n}, {"pass", bad_fl.empty()}, {"failures", bad_fl}});
  s.add({{"name", "iterated f_A reproduces psi"}, {"max_n", max_n}, {"pass", bad_fa.empty()}, {"failures", bad_fa}});
  s.add({{"name", "one-shot lift formulas agree"}, {"max_n", max_n}, {"pass", bad_closed.empty()},
         {"failures", bad_closed}});
  s.add({{"name", "odd psi = sum a z^(k-3) xi_k"}, {"max_n", max_n}, {"pass", bad_dec.empty()}, {"failures", bad_dec}});
  s.add({{"name", "x-frame lift reproduces phi"}, {"max_n", max_n}, {"pass", bad_x.empty()}, {"failures", bad_x}});
  return s.finish();
}

inline Json suite_rearrangements(const VerifyOptions& opt, int samples = 100) {
  detail::SuiteBuilder s("rearrangements");
  const int max_n = detail::pick(opt.max_n, 12);
  for (const auto& [id, name] : rearrangement_names()) {
    Rng rng(opt.seed);
    int tried = 0;
    std::vector<int> bad;
    for (int n = std::max(3, rearrangement_min_n(id)); n <= max_n; ++n) {
      bool ok = true;
      for (int i = 0; i < samples; ++i, ++tried) {
        const bool zero = rearrangement_is_1d(id) ? check_rearrangement(id, n, random_termsum_1d(rng)).empty()
                                                  : check_rearrangement(id, n, random_termsum_2d(rng)).empty();
        ok = ok && zero;
      }
      if (!ok) bad.push_back(n);
    }
    s.add({{"name", "identity " + name},
           {"n_range", {std::max(3, rearrangement_min_n(id)), max_n}},
           {"samples", tried},
           {"pass", bad.empty()},
           {"failures", bad}});
  }
  return s.finish();
}

/// Operator whose homogeneous equation a ring family solves off its source.
inline OperatorKind ring_operator(Family f) {
  switch (f) {
    case Family::PsiRing: return OperatorKind::AntiDouble;
    case Family::PsiRing2: return OperatorKind::AntiR;
    case Family::Chi: return OperatorKind::AntiZ;
    case Family::XiRing: return OperatorKind::AntiR;
    default: throw DomainError("not a ring family");
  }
}

inline QuadratureSpec fd_quadrature(const QuadratureSpec& base) {
  // Quadrature noise is amplified by 1/h^2 in the stencil; keep it far below the truncation error.
  QuadratureSpec q = base;
  q.abs_tol = std::min(base.abs_tol, 1e-13);
  q.rel_tol = std::min(base.rel_tol, 1e-13);
  return q;
}

inline Json suite_residuals(const VerifyOptions& opt) {
  detail::SuiteBuilder s("residuals");
  const QuadratureSpec q = fd_quadrature(opt.quad);
  const double a = 1.0;
  std::vector<SolutionFamily> fams;
  for (int n = 3; n <= 9; ++n) fams.push_back({Family::PsiRing, n});
  for (int n = 3; n <= 9; ++n) fams.push_back({Family::Chi, n});
  for (int n = 3; n <= 7; ++n) fams.push_back({Family::XiRing, n});
  for (const auto& fam : fams) {
    Rng rng(opt.seed);
    const auto pts = random_points(rng, 20, 0.2, 3.0, 0.1, 2.0, a, 0.2);
    const RingIntegrand ri = build_ring(fam);
    const auto field = [&](double r, double z) { return eval_ring(ri, r, z, a, q).value; };
    const auto rep = residual_grid(ring_operator(fam.tag), fam.n, field, pts, opt.fd);
    Json j = to_json(rep);
    j["name"] = to_string(fam.tag) + " n=" + std::to_string(fam.n);
    j["family"] = to_string(fam.tag);
    s.add(std::move(j));
  }
  {
    // The planar ring solution is piecewise quadratic in r, so the stencil is
    // exact and only quadrature noise remains.
    Rng rng(opt.seed);
    const auto pts = random_points(rng, 20, 0.2, 3.0, 0.5, 0.5, a, 0.2);
    const RingIntegrand ri = build_ring({Family::PsiRing2, 2});
    const auto field = [&](double r, double z) { return eval_ring(ri, r, z, a, q).value; };
    Json j = to_json(residual_grid(OperatorKind::AntiR, 2, field, pts, opt.fd, 1.9, 1e-8));
    j["name"] = "psi-ring-2 n=2";
    s.add(std::move(j));
  }
  {
    // Closed forms with an order-4 stencil.
    Rng rng(opt.seed);
    const auto pts = random_points(rng, 10, 0.5, 2.0, 0.5, 2.0);
    const auto xi6 = build_2d({Family::Xi, 6});
    const auto field = [&](double r, double z) { return eval_termsum(xi6, r, z); };
    StencilSpec st{1e-3, 4};
    double worst = 0.0;
    for (const auto& [r, z] : pts) worst = std::max(worst, std::abs(fd_apply(OperatorKind::LaplaceRZ, 6, field, r, z, st)));
    s.add({{"name", "xi n=6 closed form, h=1e-3, order 4"}, {"max_residual", worst}, {"pass", worst < 1e-8}});
  }
  return s.finish();
}

inline Json suite_identities(const VerifyOptions& opt, double tol = 1e-9) {
  detail::SuiteBuilder s("identities");
  struct Case {
    IntegralIdentity id;
    int k;
  };
  const std::vector<Case> cases = {{IntegralIdentity::I3_9, 3}, {IntegralIdentity::I3_9, 5}, {IntegralIdentity::I3_9, 7},
                                   {IntegralIdentity::I3_9, 9}, {IntegralIdentity::I3_18, 0}, {IntegralIdentity::I2D, 0},
                                   {IntegralIdentity::I7_3, 0}};
  for (const auto& c : cases) {
    Rng rng(opt.seed);
    double worst = 0.0;
    Json values = Json::array();
    for (int i = 0; i < 10; ++i) {
      IdentityParams p;
      p.a = uniform_real(rng, 0.5, 2.0);
      p.r = uniform_real(rng, 0.2, 3.0);
      p.z = uniform_real(rng, 0.1, 2.0);
      p.k = c.k > 0 ? c.k : uniform_int(rng, 1, 9);
      if (std::abs(p.r - p.a) < 0.05) p.r += 0.1;
      const double v = integral_identity_check(c.id, p, opt.quad).value;
      values.push_back(v);
      worst = std::max(worst, std::abs(v));
    }
    std::string name = to_string(c.id);
    if (c.id == IntegralIdentity::I3_9) name += " k=" + std::to_string(c.k);
    s.add({{"name", name}, {"values", values}, {"max_abs", worst}, {"tolerance", tol}, {"pass", worst <= tol}});
  }
  return s.finish();
}

/// Test field for the structural relations: an arbitrary non-harmonic sum.
inline TermSum2D structural_field(StructuralRelation rel, int n) {
  if (rel == StructuralRelation::R5_6 && n == 4) return build_2d({Family::PsiTilde4, 4});
  return build_2d({Family::Psi, n}) + TermSum2D::monomial(1, 1, 1, -3) + TermSum2D::monomial(make_rational(1, 2), 0, 2, 0);
}

inline TermSum1D structural_field_x(int n) {
  return phi_x(n) + TermSum1D::monomial(1, 2, true) + TermSum1D::monomial(3, -1);
}

inline Json suite_structural(const VerifyOptions& opt, double min_order = 1.9) {
  detail::SuiteBuilder s("structural");
  const StencilSpec st = opt.fd;
  const StencilSpec half{st.h / 2, st.order};
  for (int n = 3; n <= 6; ++n) {
    Rng rng(opt.seed);
    const auto F = structural_field_x(n);
    double m_h = 0, m_half = 0;
    for (int i = 0; i < 5; ++i) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (auto& v : x) v = uniform_real(rng, 0.3, 1.0);
      m_h = std::max(m_h, std::abs(structural_check_cartesian(n, F, x, 0, st).diff));
      m_half = std::max(m_half, std::abs(structural_check_cartesian(n, F, x, 0, half).diff));
    }
    const auto ord = order_of(m_h, m_half);
    s.add({{"name", "R_5_1 n=" + std::to_string(n)}, {"max_diff_h", m_h}, {"max_diff_half", m_half},
           {"order_estimate", ord.order}, {"pass", ord.order >= min_order}});
  }
  for (auto rel : {StructuralRelation::R5_5, StructuralRelation::R5_6, StructuralRelation::R5_7}) {
    for (int n : {4, 5}) {
      Rng rng(opt.seed);
      const auto F = structural_field(rel, n);
      double m_h = 0, m_half = 0;
      for (int i = 0; i < 5; ++i) {
        AngularPoint p{uniform_real(rng, 0.5, 1.5), uniform_real(rng, 0.2, 3.0), uniform_real(rng, 0.5, 1.5),
                       uniform_real(rng, 0.3, 2.8)};
        m_h = std::max(m_h, std::abs(structural_check_angular(rel, n, F, p, st).diff));
        m_half = std::max(m_half, std::abs(structural_check_angular(rel, n, F, p, half).diff));
      }
      const auto ord = order_of(m_h, m_half);
      s.add({{"name", to_string(rel) + " n=" + std::to_string(n)}, {"max_diff_h", m_h}, {"max_diff_half", m_half},
             {"order_estimate", ord.order}, {"pass", ord.order >= min_order}});
    }
  }
  return s.finish();
}

inline Json suite_pairing(const VerifyOptions& opt) {
  detail::SuiteBuilder s("pairing");
  for (const SolutionFamily fam : {SolutionFamily{Family::PsiBar, 3}, SolutionFamily{Family::PsiBar, 5},
                                   SolutionFamily{Family::PsiBar, 7}, SolutionFamily{Family::Psi, 3},
                                   SolutionFamily{Family::Psi, 5}, SolutionFamily{Family::Psi, 7},
                                   SolutionFamily{Family::Psi, 4}}) {
    Json j;
    try {
      j = to_json(pairing(fam, opt.pair, opt.quad));
    } catch (const ConvergenceError& e) {
      j = {{"family", to_string(fam.tag)}, {"n", fam.n}, {"error", e.what()}, {"pass", false}};
    }
    j["name"] = "pairing " + to_string(fam.tag) + " n=" + std::to_string(fam.n);
    s.add(std::move(j));
  }
  {
    // Psi-tilde-4 solves the homogeneous anti-z equation away from the axis r = 0.
    Rng rng(opt.seed);
    const auto pts = random_points(rng, 20, 0.2, 3.0, 0.1, 2.0);
    const auto f = build_2d({Family::PsiTilde4, 4});
    const auto field = [&](double r, double z) { return eval_termsum(f, r, z); };
    Json j = to_json(residual_grid(OperatorKind::AntiZ, 4, field, pts, opt.fd, 1.9, 1e-9));
    j["name"] = "psi-tilde-4 FD residual off the axis";
    s.add(std::move(j));
  }
  return s.finish();
}

inline Json suite_asymptotics(const VerifyOptions& opt) {
  detail::SuiteBuilder s("asymptotics");
  const auto fit = [&](SolutionFamily fam, SlopeSpec spec) {
    spec.samples = opt.fit_samples;
    return slope_fit(fam, spec, opt.quad);
  };
  const auto add = [&](const SlopeReport& rep, const std::string& what, double target, double tol, bool extra = true) {
    Json j = to_json(rep);
    j["name"] = what + " " + rep.family + " n=" + std::to_string(rep.n);
    j["target"] = target;
    j["tolerance"] = tol;
    j["pass"] = std::abs(rep.slope - target) <= tol && extra;
    s.add(std::move(j));
  };
  SlopeSpec far{Direction::RLarge, 1.0, 1e2, 1e4, 32, 1.0, FitMode::Power};
  for (int n = 3; n <= 9; n += 2) {
    add(fit({Family::PsiBar, n}, far), "far-zone exponent", -1.0, 0.05);
    add(fit({Family::PsiRing, n}, far), "far-zone exponent", -1.0, 0.05);
  }
  SlopeSpec far_log = far;
  far_log.mode = FitMode::Log;
  for (int n = 4; n <= 8; n += 2) {
    add(fit({Family::Psi, n}, far_log), "far-zone log coefficient", 1.0, 0.05);
    add(fit({Family::Chi, n}, far_log), "far-zone log coefficient", 1.0, 0.05);
  }
  SlopeSpec axis{Direction::ZAxis, 0.0, 1e-2, 1e2, 32, 1.0, FitMode::Power};
  for (int n = 3; n <= 9; n += 2) add(fit({Family::PsiBar, n}, axis), "z=0 exponent", -1.0, 1e-6);
  SlopeSpec axis_log = axis;
  axis_log.mode = FitMode::Log;
  for (int n = 4; n <= 8; n += 2) {
    const auto rep = fit({Family::Psi, n}, axis_log);
    add(rep, "z=0 pure ln(1/r)", 1.0, 1e-6, std::abs(rep.intercept) <= 1e-9 && rep.max_residual <= 1e-9);
  }
  for (int n = 3; n <= 6; ++n) add(fit({Family::Xi, n}, far), "control exponent", -(n - 2.0), 0.02);
  return s.finish();
}

inline Json run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "triangles") return suite_triangles(opt);
  if (name == "sums") return suite_sums(opt);
  if (name == "annihilation") return suite_annihilation(opt);
  if (name == "transforms") return suite_transforms(opt);
  if (name == "rearrangements") return suite_rearrangements(opt);
  if (name == "residuals") return suite_residuals(opt);
  if (name == "identities") return suite_identities(opt);
  if (name == "structural") return suite_structural(opt);
  if (name == "pairing") return suite_pairing(opt);
  if (name == "asymptotics") return suite_asymptotics(opt);
  throw DomainError("unknown verification suite '" + name + "'");
}

}  // namespace antilap
