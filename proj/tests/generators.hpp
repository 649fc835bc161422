#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "lnewton/lorentz.hpp"

// Seeded generators for property tests.
namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform in the open disk of radius rmax.
inline lnewton::Vec2 gradient(Rng& rng, double rmax = 0.999) {
  const double r = rmax * std::sqrt(uniform(rng, 0.0, 1.0));
  const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return {r * std::cos(phi), r * std::sin(phi)};
}

/// Future timelike vector t (g, 1) with |g| < 1.
inline lnewton::Vec3L timelike(Rng& rng) {
  const lnewton::Vec2 g = gradient(rng, 0.99);
  const double t = uniform(rng, 0.1, 10.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
  return {t * g.x, t * g.y, t};
}

}  // namespace gen
