#pragma once

#include <vector>

#include "lnewton/profiles.hpp"
#include "lnewton/quadrature.hpp"

namespace lnewton {

/// Default target for the monotone root solves (interval width in p).
inline constexpr double kRootTolerance = 1e-13;

/// g(x) = x/(1-x^2)^2 (1/4 - log x - x^2 + 3x^4/4) on (0, 1).
/// Increasing from 0 to 1; its value at p_R is M/R.
double g_fn(double x);

/// The radial stationary profile with u(0) = 0 and u(R) = M.
///
/// It is the curve r(p) = (c1/p)(1-p^2)^2, u(p) = c1(1/4 - log p - p^2 + 3p^4/4)
/// parametrized by the slope p = u'(r) in (0, 1]; p = 1 is the axis and p = p_R
/// the outer boundary. The first integral r u'/(1-u'^2)^2 equals c1 along it.
struct ParametricExtremal {
  double R;
  double M;
  double p_R;
  double c1;
  double c2;  // c1/4, fixed by u -> 0 at the axis
};

struct CurvePoint {
  double r;
  double u;
};

struct ExtremalEvaluation {
  double r;
  double u;
  double du;
  double d2u;
};

/// Solves g(p_R) = M/R by bisection on (1e-9, 1 - 1e-9) followed by a TOMS748
/// refinement. Throws BadBoundaryData unless 0 < M < R.
ParametricExtremal solve_extremal(const BoundaryData& b, double root_tol = kRootTolerance);

/// r(p) = (c1/p)(1-p^2)^2.
double radius_at(const ParametricExtremal& e, double p);
/// u(p) = c1(1/4 - log p - p^2 + 3p^4/4).
double height_at(const ParametricExtremal& e, double p);
/// dr/dp = -c1(1/p^2 + 2 - 3p^2), negative on (0, 1).
double radius_derivative(const ParametricExtremal& e, double p);

/// (r(p), u(p)) for p in (0, 1]. Throws DomainError otherwise.
CurvePoint curve_at_p(const ParametricExtremal& e, double p);

/// Unique p in (0, 1] with r(p) = r, by monotone bisection. Works for r > R
/// as well (the continuation of the extremal). Throws DomainError for r < 0.
double p_of_r(const ParametricExtremal& e, double r, double root_tol = kRootTolerance);

/// u, u' = p and u'' = 1/r'(p) = -p^2/(c1 (1-p^2)(1+3p^2)) at r > 0.
ExtremalEvaluation eval_at_r(const ParametricExtremal& e, double r);

/// Closed-form resistance of the extremal on B_R:
/// -pi R^2 (3p^6 - 10p^4 + 9p^2 + 4p^2 log p - 2) / (2 (1-p^2)^4) at p = p_R.
double extremal_resistance(const ParametricExtremal& e);
/// The same closed form as a function of p_R alone (R = 1).
double extremal_resistance_unit(double p_R);

/// 2 pi times the integral of c1^2 (1-p^2)^2 (1+3p^2)/p^3 over [p_R, 1],
/// the resistance integral after the change of variable p = u'(r).
QuadratureResult extremal_resistance_quadrature(const ParametricExtremal& e,
                                                double abs_tol = 1e-12);

struct Table1Row {
  double M;
  double p_R;
  double E_extremal;
  double E_cone;  // cone v(r) = (M/R) r with the same boundary values
};

std::vector<Table1Row> table1(double R, const std::vector<double>& M_list);

/// Samples of (r, u, u', u'') on `samples` equally spaced radii in (0, R].
std::vector<ExtremalEvaluation> sample_curve(const ParametricExtremal& e, int samples);

/// Wraps the extremal as a RadialProfile. Its resistance integral is carried in
/// p-space so the integrator never meets the axis singularity.
RadialProfile make_extremal_profile(const ParametricExtremal& e);

}  // namespace lnewton
