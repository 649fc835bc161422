#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lnewton/field.hpp"

namespace lnewton {

/// Slope (1 + |Du|^2)/(2|Du|) of the reflected velocity, up to sign.
/// Throws ZeroGradient for Du = 0 (the particle leaves straight down) and
/// NotSpacelike for |Du| >= 1.
double final_slope(Vec2 gradient);

/// Margins (t/2)(1 + |Du|^2) - (u(x) - u(x - t Du)) along the reflected ray.
struct SscProbe {
  Vec2 point;
  std::vector<double> t_grid;
  std::vector<double> margins;  // one per probed t; shorter than t_grid when the ray left the domain
  double worst_margin = 0.0;
  int vacuous = 0;              // t values skipped because x - t Du left a non-extending domain

  bool holds() const { return worst_margin >= 0.0; }
};

/// n log-spaced values in [t_min, t_max].
std::vector<double> log_t_grid(double t_min, double t_max, int n);

/// 64 log-spaced values in [1e-4 diam, 4 diam].
std::vector<double> default_t_grid(const Domain2D& domain);

/// Evaluates the single-shock margin at `point` for every t in `t_grid`.
/// Fields that do not extend past the domain stop at its boundary; the
/// remaining t values count as vacuously satisfied.
/// Throws NotSpacelike if |Du| >= 1 at the point or along the probed ray.
SscProbe ssc_check(const Field2D& u, const Domain2D& domain, Vec2 point,
                   const std::vector<double>& t_grid);
SscProbe ssc_check(const Field2D& u, const Domain2D& domain, Vec2 point, double t_max, int n_t);

struct SscIdentity {
  double difference;  // (1 + a^2 - 2ab) - ((a - b)^2 + 1 - b^2)
  double value;       // (a - b)^2 + 1 - b^2
};

/// The algebraic identity behind the single-shock bound, for a = u'(x) and
/// b = u'(xi).
SscIdentity ssc_identity_check(double ux, double uxi);

struct SscSweep {
  std::vector<SscProbe> probes;
  double worst_margin = 0.0;
};

/// `points` uniformly random points of the domain (fixed seed), each probed on
/// `t_grid` (the default grid when empty). Points closer than `axis_clearance`
/// to the domain centre are redrawn, since radial fields may have a conical
/// point there.
SscSweep ssc_sweep(const Field2D& u, const Domain2D& domain, int points, std::uint64_t seed,
                   double axis_clearance = 1e-3, std::vector<double> t_grid = {});

/// CSV with header "x,y,t,margin".
void write_probe_csv(std::ostream& out, const std::vector<SscProbe>& probes);

/// sum_k a_k sin(w_k . x + phi_k) with sum |a_k||w_k| = slope_budget < 1, so
/// |Du| < 1 everywhere. Defined on all of R^2.
Field2D random_trigonometric_field(std::uint64_t seed, int modes = 4, double slope_budget = 0.95);

}  // namespace lnewton
