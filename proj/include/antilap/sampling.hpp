#pragma once

// Seeded random inputs for property checks: small random term sums and
// sample points. Everything is driven by std::mt19937_64 so runs reproduce.

#include <random>
#include <utility>
#include <vector>

#include "antilap/termalg.hpp"

namespace antilap {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Rational random_small_rational(Rng& rng) {
  int p = 0;
  while (p == 0) p = uniform_int(rng, -9, 9);
  return make_rational(p, uniform_int(rng, 1, 9));
}

/// 1 to 4 terms with r^{-1..3}, z^{0..6}, Rbar^{-6..6} and any log kind.
inline TermSum2D random_termsum_2d(Rng& rng) {
  std::vector<Monomial2D> terms;
  const int count = uniform_int(rng, 1, 4);
  for (int i = 0; i < count; ++i) {
    const int log = uniform_int(rng, 0, 5);
    terms.push_back({random_small_rational(rng), uniform_int(rng, -1, 3), uniform_int(rng, 0, 6),
                     uniform_int(rng, -6, 6), log < 3 ? LogKind::None : (log < 5 ? LogKind::InvRbar : LogKind::InvR)});
  }
  return canonicalize(std::move(terms));
}

/// 1 to 4 terms with x^{-6..6}, optionally times ln(1/x).
inline TermSum1D random_termsum_1d(Rng& rng) {
  std::vector<Monomial1D> terms;
  const int count = uniform_int(rng, 1, 4);
  for (int i = 0; i < count; ++i) {
    terms.push_back({random_small_rational(rng), uniform_int(rng, -6, 6), uniform_int(rng, 0, 2) == 0});
  }
  return canonicalize(std::move(terms));
}

/// Points in [r_lo, r_hi] x [z_lo, z_hi] at least min_ring_distance away from (a, 0).
inline std::vector<std::pair<double, double>> random_points(Rng& rng, int count, double r_lo, double r_hi, double z_lo,
                                                            double z_hi, double a = 1.0,
                                                            double min_ring_distance = 0.0) {
  std::vector<std::pair<double, double>> pts;
  while (static_cast<int>(pts.size()) < count) {
    const double r = uniform_real(rng, r_lo, r_hi);
    const double z = uniform_real(rng, z_lo, z_hi);
    if (std::hypot(r - a, z) < min_ring_distance) continue;
    pts.emplace_back(r, z);
  }
  return pts;
}

}  // namespace antilap
