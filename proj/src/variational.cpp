#include "lnewton/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>

#include "lnewton/error.hpp"
#include "lnewton/quadrature.hpp"

namespace lnewton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_admissible(Vec2 gradient, LagrangianSpec spec) {
  if (!spec.admissible(gradient)) {
    std::ostringstream msg;
    msg << "gradient (" << gradient.x << ", " << gradient.y << ") not admissible for eps = "
        << spec.epsilon;
    throw Error(ErrorCode::NotAdmissible, msg.str());
  }
}

void require_radial_domain(double r, double p) {
  if (!(r > 0.0 && p * p < 1.0)) {
    std::ostringstream msg;
    msg << "need r > 0 and p^2 < 1, got r = " << r << ", p = " << p;
    throw Error(ErrorCode::DomainError, msg.str());
  }
}

}  // namespace

double first_integral(double r, double slope) {
  const double gap = (1.0 - slope) * (1.0 + slope);
  return r * slope / (gap * gap);
}

Residual1D el_residual_1d(const RadialProfile& p, std::span<const double> radii, double step) {
  Residual1D out;
  out.radii.assign(radii.begin(), radii.end());
  out.residuals.reserve(radii.size());
  for (double r : radii) {
    const double h = std::min(step, 0.5 * r);
    const double forward = first_integral(r + h, p.slope(r + h));
    const double backward = first_integral(r - h, p.slope(r - h));
    const double residual = (forward - backward) / (2.0 * h);
    out.residuals.push_back(residual);
    out.max_abs = std::max(out.max_abs, std::abs(residual));
  }
  return out;
}

Residual1D el_residual_1d(const ParametricExtremal& e, std::span<const double> radii, double step) {
  return el_residual_1d(make_extremal_profile(e), radii, step);
}

double el_operator(Vec2 g, double uxx, double uyy, double uxy, LagrangianSpec spec) {
  const double eps = spec.epsilon;
  const double hessian_on_gradient = g.x * g.x * uxx + 2.0 * g.x * g.y * uxy + g.y * g.y * uyy;
  return (1.0 + eps * norm_sq(g)) * (uxx + uyy) - 4.0 * eps * hessian_on_gradient;
}

ResidualGrid el_residual_2d(const Grid2D& u, LagrangianSpec spec) {
  ResidualGrid out;
  out.nx = u.nx;
  out.ny = u.ny;
  out.values.assign(static_cast<std::size_t>(u.nx) * u.ny, kNaN);
  const double h = u.h;
  for (int j = 1; j + 1 < u.ny; ++j) {
    for (int i = 1; i + 1 < u.nx; ++i) {
      bool full = true;
      for (int dj = -1; dj <= 1 && full; ++dj) {
        for (int di = -1; di <= 1 && full; ++di) full = u.inside(i + di, j + dj);
      }
      if (!full) continue;
      const double c = u.at(i, j);
      const Vec2 g{(u.at(i + 1, j) - u.at(i - 1, j)) / (2.0 * h),
                   (u.at(i, j + 1) - u.at(i, j - 1)) / (2.0 * h)};
      require_admissible(g, spec);
      const double uxx = (u.at(i + 1, j) - 2.0 * c + u.at(i - 1, j)) / (h * h);
      const double uyy = (u.at(i, j + 1) - 2.0 * c + u.at(i, j - 1)) / (h * h);
      const double uxy =
          (u.at(i + 1, j + 1) - u.at(i + 1, j - 1) - u.at(i - 1, j + 1) + u.at(i - 1, j - 1)) /
          (4.0 * h * h);
      const double residual = el_operator(g, uxx, uyy, uxy, spec);
      out.values[static_cast<std::size_t>(j) * u.nx + i] = residual;
      out.max_abs = std::max(out.max_abs, std::abs(residual));
      ++out.evaluated;
    }
  }
  return out;
}

void write_residual_csv(std::ostream& out, const Grid2D& grid, const ResidualGrid& residual) {
  out << "i,j,x,y,residual\n";
  for (int j = 0; j < residual.ny; ++j) {
    for (int i = 0; i < residual.nx; ++i) {
      const double v = residual.at(i, j);
      if (std::isnan(v)) continue;
      const Vec2 x = grid.node(i, j);
      out << i << ',' << j << ',' << x.x << ',' << x.y << ',' << v << '\n';
    }
  }
}

std::vector<RefinementLevel> extremal_residual_refinement(const ParametricExtremal& e, double r_inner,
                                                          double r_outer, double h0, int levels) {
  if (!(r_inner > 0.0 && r_outer > r_inner && h0 > 0.0 && levels >= 1)) {
    throw Error(ErrorCode::DomainError, "bad annulus or refinement parameters");
  }
  const auto u = [&e](Vec2 x) { return height_at(e, p_of_r(e, norm(x), 0.0)); };
  // Nodes of every level sit on the coarse lattice anchored at -r_outer.
  const double half_width = std::ceil(r_outer / h0) * h0;
  std::vector<RefinementLevel> out;
  for (int k = 0; k < levels; ++k) {
    const double h = h0 / std::pow(2.0, k);
    Grid2D grid = sample_grid(u, Domain2D::rectangle(-half_width, half_width, -half_width, half_width), h);
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) {
        const double r = norm(grid.node(i, j));
        grid.mask[static_cast<std::size_t>(j) * grid.nx + i] = (r >= r_inner && r <= r_outer) ? 1 : 0;
      }
    }
    out.push_back({h, el_residual_2d(grid, LagrangianSpec::lorentzian()).max_abs});
  }
  return out;
}

double convergence_order(std::span<const RefinementLevel> levels) {
  if (levels.size() < 2) throw Error(ErrorCode::DomainError, "need at least two refinement levels");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(levels.size());
  for (const RefinementLevel& l : levels) {
    const double x = std::log(l.h);
    const double y = std::log(l.max_residual);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

EllipticityReport ellipticity(Vec2 g, LagrangianSpec spec) {
  require_admissible(g, spec);
  const double eps = spec.epsilon;
  const double diag = 1.0 + eps * norm_sq(g);
  Eigen::Matrix2d a;
  a << diag - 4.0 * eps * g.x * g.x, -4.0 * eps * g.x * g.y,
      -4.0 * eps * g.x * g.y, diag - 4.0 * eps * g.y * g.y;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::Vector2d values = solver.eigenvalues();  // ascending
  return {values(0), values(1), spec.epsilon};
}

EllipticityReport ellipticity_closed_form(Vec2 g, LagrangianSpec spec) {
  require_admissible(g, spec);
  const double d2 = norm_sq(g);
  const double lambda = 1.0 - (2.0 + spec.epsilon) * d2;
  const double Lambda = 1.0 + (2.0 - spec.epsilon) * d2;
  return {std::min(lambda, Lambda), std::max(lambda, Lambda), spec.epsilon};
}

double separable_residual(const SeparableCandidate& c, Vec2 x) {
  const double fp = c.a1 * x.x + c.a2;
  const double gp = c.b1 * x.y + c.b2;
  const double fpp = c.a1;
  const double gpp = c.b1;
  return (1.0 - fp * fp - gp * gp) * (fpp + gpp) + 4.0 * (fp * fp * fpp + gp * gp * gpp);
}

SeparableVerdict separable_falsify(const SeparableCandidate& c, const Domain2D& rect, int n,
                                   double zero_tol) {
  if (n < 2) throw Error(ErrorCode::DomainError, "need at least a 2 x 2 grid");
  SeparableVerdict verdict{false, 0.0, 0};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec2 x{rect.x0 + (rect.x1 - rect.x0) * i / (n - 1), rect.y0 + (rect.y1 - rect.y0) * j / (n - 1)};
      const Vec2 g{c.a1 * x.x + c.a2, c.b1 * x.y + c.b2};
      if (!(norm_sq(g) < 1.0)) continue;
      ++verdict.admissible_nodes;
      verdict.max_abs_residual = std::max(verdict.max_abs_residual, std::abs(separable_residual(c, x)));
    }
  }
  verdict.falsified = verdict.max_abs_residual > zero_tol;
  return verdict;
}

double radial_lagrangian(double r, double p) { return r / ((1.0 - p) * (1.0 + p)); }

double legendre_check(double r, double p) {
  require_radial_domain(r, p);
  const double gap = (1.0 - p) * (1.0 + p);
  return 2.0 * r * (1.0 + 3.0 * p * p) / (gap * gap * gap);
}

double weierstrass_excess(double r, double up, double vp) {
  require_radial_domain(r, up);
  require_radial_domain(r, vp);
  const double gap_u = (1.0 - up) * (1.0 + up);
  const double F_p = 2.0 * r * up / (gap_u * gap_u);
  return radial_lagrangian(r, vp) - radial_lagrangian(r, up) - (vp - up) * F_p;
}

double weierstrass_excess_factored(double r, double up, double vp) {
  require_radial_domain(r, up);
  require_radial_domain(r, vp);
  const double gap_u = (1.0 - up) * (1.0 + up);
  const double gap_v = (1.0 - vp) * (1.0 + vp);
  const double diff = up - vp;
  const double sum = up + vp;
  return r * diff * diff * (sum * sum + gap_v) / (gap_u * gap_u * gap_v);
}

namespace {

// Euclidean projection of y onto {mean(s) = target} intersected with [lo, hi]^n.
void project_mean_box(const std::vector<double>& y, double target, double lo, double hi,
                      std::vector<double>& s) {
  const auto mean_after_shift = [&](double nu) {
    double sum = 0.0;
    for (double v : y) sum += std::clamp(v - nu, lo, hi);
    return sum / static_cast<double>(y.size());
  };
  double nu_lo = *std::min_element(y.begin(), y.end()) - hi;
  double nu_hi = *std::max_element(y.begin(), y.end()) - lo;
  for (int k = 0; k < 200 && nu_hi - nu_lo > 0.0; ++k) {
    const double mid = 0.5 * (nu_lo + nu_hi);
    if (mid == nu_lo || mid == nu_hi) break;
    if (mean_after_shift(mid) > target) {
      nu_lo = mid;
    } else {
      nu_hi = mid;
    }
  }
  const double nu = 0.5 * (nu_lo + nu_hi);
  s.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) s[i] = std::clamp(y[i] - nu, lo, hi);
}

}  // namespace

DirectMinimizeResult direct_minimize(const BoundaryData& b, int n_nodes, int iters,
                                     const DirectMinimizeOptions& options) {
  validate(b);
  if (n_nodes < 32) throw Error(ErrorCode::DomainError, "direct_minimize needs at least 32 cells");
  const int n = n_nodes;
  const double dr = b.R / n;
  const double target = b.M / b.R;  // mean slope
  const double hi = 1.0 - options.slope_margin;
  const double lo = -hi;

  std::vector<double> mids(n);
  for (int i = 0; i < n; ++i) mids[i] = (i + 0.5) * dr;

  const auto energy = [&](const std::vector<double>& s) {
    std::vector<double> terms(n);
    for (int i = 0; i < n; ++i) terms[i] = 2.0 * kPi * mids[i] * dr / ((1.0 - s[i]) * (1.0 + s[i]));
    return compensated_sum(terms);
  };

  DirectMinimizeResult out;
  std::vector<double> s(n, target);
  std::vector<double> grad(n), trial(n), shifted(n);
  double E = energy(s);
  out.energy_history.push_back(E);

  bool converged = false;
  int it = 0;
  for (; it < iters; ++it) {
    // L2(dr) gradient: dE/ds_i divided by the cell width.
    for (int i = 0; i < n; ++i) {
      const double gap = (1.0 - s[i]) * (1.0 + s[i]);
      grad[i] = 4.0 * kPi * mids[i] * s[i] / (gap * gap);
    }
    double step = options.initial_step;
    bool accepted = false;
    double max_move = 0.0;
    while (step > 1e-20) {
      for (int i = 0; i < n; ++i) shifted[i] = s[i] - step * grad[i];
      project_mean_box(shifted, target, lo, hi, trial);
      double directional = 0.0;
      max_move = 0.0;
      for (int i = 0; i < n; ++i) {
        directional += grad[i] * (trial[i] - s[i]) * dr;
        max_move = std::max(max_move, std::abs(trial[i] - s[i]));
      }
      const double E_trial = energy(trial);
      if (E_trial <= E + options.armijo * directional) {
        accepted = E_trial < E;
        if (accepted) {
          s.swap(trial);
          E = E_trial;
          out.energy_history.push_back(E);
        }
        break;
      }
      step *= 0.5;
    }
    if (!accepted || max_move <= options.stop_step) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "projected gradient did not settle in " << iters << " iterations";
    throw Error(ErrorCode::NonConvergence, msg.str());
  }

  out.iterations = it;
  out.energy = E;
  out.slopes = s;
  out.nodes.resize(n + 1);
  out.heights.resize(n + 1);
  out.heights[0] = 0.0;
  for (int j = 0; j <= n; ++j) out.nodes[j] = j * dr;
  double carry = 0.0;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    // Compensated running sum of s_i dr.
    const double term = s[i] * dr;
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    out.heights[i + 1] = sum + carry;
  }
  return out;
}

bool max_principle_probe(const RadialProfile& p, int samples) {
  const double R = p.outer_radius();
  int last_sign = 0;
  double previous = p.value(R / samples);
  for (int k = 2; k <= samples; ++k) {
    const double current = p.value(R * k / samples);
    const double d = current - previous;
    const int sign = (d > 0.0) - (d < 0.0);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) return false;
      last_sign = sign;
    }
    previous = current;
  }
  return true;
}

bool max_principle_probe(const ParametricExtremal& e, int samples) {
  return max_principle_probe(make_extremal_profile(e), samples);
}

}  // namespace lnewton
