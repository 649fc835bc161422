#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lnewton/extremal.hpp"
#include "lnewton/field.hpp"
#include "lnewton/profiles.hpp"
#include "lnewton/resistance.hpp"

namespace lnewton {

// ---- Euler-Lagrange residuals ---------------------------------------------

struct Residual1D {
  std::vector<double> radii;
  std::vector<double> residuals;
  double max_abs = 0.0;
};

/// d/dr [r u'/(1 - u'^2)^2] by central differences of the first integral.
Residual1D el_residual_1d(const RadialProfile& p, std::span<const double> radii, double step = 1e-5);
Residual1D el_residual_1d(const ParametricExtremal& e, std::span<const double> radii,
                          double step = 1e-5);

/// First integral r u'/(1 - u'^2)^2 of the radial equation.
double first_integral(double r, double slope);

/// Pointwise residual of (1 + eps|Du|^2) Lap u - 4 eps D^2u(Du, Du) from
/// second-order central differences. NaN where the 3x3 stencil leaves the mask.
struct ResidualGrid {
  int nx = 0;
  int ny = 0;
  std::vector<double> values;
  double max_abs = 0.0;
  int evaluated = 0;

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

/// Throws NotAdmissible where the discrete gradient violates the spec.
ResidualGrid el_residual_2d(const Grid2D& u, LagrangianSpec spec);

/// Same operator applied to exact derivatives.
double el_operator(Vec2 gradient, double uxx, double uyy, double uxy, LagrangianSpec spec);

/// CSV with header "i,j,x,y,residual"; only evaluated nodes are written.
void write_residual_csv(std::ostream& out, const Grid2D& grid, const ResidualGrid& residual);

struct RefinementLevel {
  double h;
  double max_residual;
};

/// Samples the extremal as u(x, y) = u(|(x, y)|) on grids of spacing h0 / 2^k
/// over the annulus r_inner <= r <= r_outer and records the max 2D residual.
std::vector<RefinementLevel> extremal_residual_refinement(const ParametricExtremal& e, double r_inner,
                                                          double r_outer, double h0, int levels);

/// Least-squares slope of log(max_residual) against log(h).
double convergence_order(std::span<const RefinementLevel> levels);

// ---- Ellipticity ------------------------------------------------------------

struct EllipticityReport {
  double lambda_min;
  double lambda_max;
  int epsilon;
};

/// Eigenvalues of the coefficient matrix (1 + eps|Du|^2) I - 4 eps Du Du^T,
/// computed numerically.
EllipticityReport ellipticity(Vec2 gradient, LagrangianSpec spec);

/// lambda_eps = 1 - (2 + eps)|Du|^2 and Lambda_eps = 1 + (2 - eps)|Du|^2.
EllipticityReport ellipticity_closed_form(Vec2 gradient, LagrangianSpec spec);

// ---- Separable candidates ---------------------------------------------------

/// u(x, y) = f(x) + g(y) with f = a1 x^2/2 + a2 x, g = b1 y^2/2 + b2 y.
struct SeparableCandidate {
  double a1 = 0.0;
  double a2 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
};

/// (1 - f'^2 - g'^2)(f'' + g'') + 4(f'^2 f'' + g'^2 g'').
double separable_residual(const SeparableCandidate& c, Vec2 x);

struct SeparableVerdict {
  bool falsified;           // some admissible node has a nonzero residual
  double max_abs_residual;  // over admissible nodes
  int admissible_nodes;
};

/// Evaluates the separable residual on an n x n grid of the rectangle.
SeparableVerdict separable_falsify(const SeparableCandidate& c, const Domain2D& rectangle, int n = 41,
                                   double zero_tol = 1e-12);

// ---- Strong minimum ---------------------------------------------------------

/// F(r, p) = r/(1 - p^2), the radial Lagrangian.
double radial_lagrangian(double r, double p);

/// F_pp = 2r(1 + 3p^2)/(1 - p^2)^3. Throws DomainError unless r > 0, p^2 < 1.
double legendre_check(double r, double p);

/// F(v') - F(u') - (v' - u') F_p(u').
double weierstrass_excess(double r, double up, double vp);
/// r (u' - v')^2 ((u' + v')^2 + 1 - v'^2) / ((1 - u'^2)^2 (1 - v'^2)).
double weierstrass_excess_factored(double r, double up, double vp);

// ---- Direct minimization oracle ---------------------------------------------

struct DirectMinimizeOptions {
  double slope_margin = 1e-3;  // slopes confined to |s| <= 1 - margin
  double initial_step = 0.1;
  double armijo = 1e-4;
  double stop_step = 1e-13;    // max |s_new - s_old| for convergence
};

struct DirectMinimizeResult {
  std::vector<double> nodes;   // r_j = j R/n, j = 0..n
  std::vector<double> heights; // u at the nodes, u_0 = 0, u_n = M
  std::vector<double> slopes;  // per cell
  double energy = 0.0;
  int iterations = 0;
  std::vector<double> energy_history;  // accepted iterates
};

/// Minimizes 2 pi sum r_i/(1 - s_i^2) dr over cell slopes s_i subject to
/// sum s_i dr = M by projected gradient descent. r_i is the cell midpoint, so
/// the discrete energy is the exact resistance of the piecewise-linear profile.
/// Throws NonConvergence if `iters` steps are not enough.
DirectMinimizeResult direct_minimize(const BoundaryData& b, int n_nodes, int iters,
                                     const DirectMinimizeOptions& options = {});

// ---- Maximum principle probe -------------------------------------------------

/// True iff the sampled profile has no interior strict local max or min on
/// (0, R], or is constant.
bool max_principle_probe(const RadialProfile& p, int samples = 4000);
bool max_principle_probe(const ParametricExtremal& e, int samples = 4000);

}  // namespace lnewton
