#include "lnewton/ssc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "lnewton/error.hpp"

namespace lnewton {

double final_slope(Vec2 gradient) {
  const double d2 = norm_sq(gradient);
  if (d2 == 0.0) throw Error(ErrorCode::ZeroGradient, "Du = 0: the particle leaves along -e3");
  if (!(d2 < 1.0)) throw Error(ErrorCode::NotSpacelike, "|Du| >= 1");
  return (1.0 + d2) / (2.0 * std::sqrt(d2));
}

std::vector<double> log_t_grid(double t_min, double t_max, int n) {
  if (!(t_min > 0.0 && t_max >= t_min && n >= 1)) {
    throw Error(ErrorCode::DomainError, "t grid needs 0 < t_min <= t_max and n >= 1");
  }
  std::vector<double> t(n);
  if (n == 1) {
    t[0] = t_max;
    return t;
  }
  const double step = std::log(t_max / t_min) / (n - 1);
  for (int k = 0; k < n; ++k) t[k] = t_min * std::exp(step * k);
  t.back() = t_max;
  return t;
}

std::vector<double> default_t_grid(const Domain2D& domain) {
  const double diam = domain.diameter();
  return log_t_grid(1e-4 * diam, 4.0 * diam, 64);
}

SscProbe ssc_check(const Field2D& u, const Domain2D& domain, Vec2 point,
                   const std::vector<double>& t_grid) {
  const Vec2 g = u.gradient(point);
  const double d2 = norm_sq(g);
  if (!(d2 < 1.0)) throw Error(ErrorCode::NotSpacelike, "|Du| >= 1 at the probe point");
  const double u0 = u.value(point);
  SscProbe probe;
  probe.point = point;
  probe.t_grid = t_grid;
  probe.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double t = t_grid[k];
    const Vec2 foot = point - t * g;
    if (!u.extends && !domain.contains(foot)) {
      probe.vacuous = static_cast<int>(t_grid.size() - k);
      break;
    }
    if (!(norm_sq(u.gradient(foot)) < 1.0)) {
      std::ostringstream msg;
      msg << "|Du| >= 1 at (" << foot.x << ", " << foot.y << ") on the reflected ray";
      throw Error(ErrorCode::NotSpacelike, msg.str());
    }
    const double margin = 0.5 * t * (1.0 + d2) - (u0 - u.value(foot));
    probe.margins.push_back(margin);
    probe.worst_margin = std::min(probe.worst_margin, margin);
  }
  return probe;
}

SscProbe ssc_check(const Field2D& u, const Domain2D& domain, Vec2 point, double t_max, int n_t) {
  return ssc_check(u, domain, point, log_t_grid(1e-4 * t_max / 4.0, t_max, n_t));
}

SscIdentity ssc_identity_check(double ux, double uxi) {
  const double lhs = 1.0 + ux * ux - 2.0 * uxi * ux;
  const double diff = ux - uxi;
  const double rhs = diff * diff + 1.0 - uxi * uxi;
  return {lhs - rhs, rhs};
}

SscSweep ssc_sweep(const Field2D& u, const Domain2D& domain, int points, std::uint64_t seed,
                   double axis_clearance, std::vector<double> t_grid) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(domain.x0, domain.x1);
  std::uniform_real_distribution<double> uy(domain.y0, domain.y1);
  if (points < 1) throw Error(ErrorCode::DomainError, "need at least one probe point");
  if (t_grid.empty()) t_grid = default_t_grid(domain);
  SscSweep sweep;
  sweep.worst_margin = std::numeric_limits<double>::infinity();
  while (static_cast<int>(sweep.probes.size()) < points) {
    const Vec2 x{ux(rng), uy(rng)};
    if (!domain.contains(x) || norm(x - domain.centre) < axis_clearance) continue;
    SscProbe probe = ssc_check(u, domain, x, t_grid);
    sweep.worst_margin = std::min(sweep.worst_margin, probe.worst_margin);
    sweep.probes.push_back(std::move(probe));
  }
  return sweep;
}

void write_probe_csv(std::ostream& out, const std::vector<SscProbe>& probes) {
  out << "x,y,t,margin\n";
  for (const SscProbe& p : probes) {
    for (std::size_t k = 0; k < p.margins.size(); ++k) {
      out << p.point.x << ',' << p.point.y << ',' << p.t_grid[k] << ',' << p.margins[k] << '\n';
    }
  }
}

Field2D random_trigonometric_field(std::uint64_t seed, int modes, double slope_budget) {
  if (!(slope_budget > 0.0 && slope_budget < 1.0) || modes < 1) {
    throw Error(ErrorCode::DomainError, "need modes >= 1 and slope budget in (0, 1)");
  }
  struct Mode {
    double amplitude;
    Vec2 wave;
    double phase;
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Mode> raw(modes);
  double total = 0.0;
  for (Mode& m : raw) {
    const double k = 1.0 + 7.0 * unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    m.wave = {k * std::cos(angle), k * std::sin(angle)};
    m.amplitude = (unit(rng) < 0.5 ? -1.0 : 1.0) * (0.2 + unit(rng));
    m.phase = 2.0 * std::numbers::pi * unit(rng);
    total += std::abs(m.amplitude) * k;
  }
  for (Mode& m : raw) m.amplitude *= slope_budget / total;

  Field2D f;
  f.value = [raw](Vec2 x) {
    double v = 0.0;
    for (const Mode& m : raw) v += m.amplitude * std::sin(dot(m.wave, x) + m.phase);
    return v;
  };
  f.gradient = [raw](Vec2 x) {
    Vec2 g{};
    for (const Mode& m : raw) g = g + (m.amplitude * std::cos(dot(m.wave, x) + m.phase)) * m.wave;
    return g;
  };
  f.extends = true;
  return f;
}

}  // namespace lnewton
