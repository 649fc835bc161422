#include "lnewton/extremal.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "lnewton/error.hpp"

namespace lnewton {

namespace {

constexpr double kPi = std::numbers::pi;

// h(p) = 1/4 - log p - p^2 + 3p^4/4, which has a double zero at p = 1.
// With d = 1 - p the Taylor expansion is 4d^2 - (8/3)d^3 + d^4 + sum_{k>=5} d^k/k.
double height_factor(double p) {
  const double d = 1.0 - p;
  if (d < 0.1) {
    double tail = 0.0;
    double power = d * d * d * d * d;
    for (int k = 5; k <= 24; ++k) {
      tail += power / k;
      power *= d;
    }
    return d * d * (4.0 - d * (8.0 / 3.0) + d * d) + tail;
  }
  const double p2 = p * p;
  return 0.25 - std::log(p) - p2 + 0.75 * p2 * p2;
}

// (1 - p^2)^2 without cancellation near p = 1.
double one_minus_p2_sq(double p) {
  const double q = (1.0 - p) * (1.0 + p);
  return q * q;
}

void require_slope(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "slope parameter must lie in (0, 1], got " << p;
    throw Error(ErrorCode::DomainError, msg.str());
  }
}

// Integrand of the resistance after r -> p, without the 2 pi factor.
double p_space_density(double c1, double p) {
  return c1 * c1 * one_minus_p2_sq(p) * (1.0 + 3.0 * p * p) / (p * p * p);
}

}  // namespace

double g_fn(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << "g is defined on (0, 1), got " << x;
    throw Error(ErrorCode::DomainError, msg.str());
  }
  return x * height_factor(x) / one_minus_p2_sq(x);
}

ParametricExtremal solve_extremal(const BoundaryData& b, double root_tol) {
  validate(b);
  const double target = b.M / b.R;
  const auto f = [target](double x) { return g_fn(x) - target; };
  double lo = 1e-9;
  double hi = 1.0 - 1e-9;
  if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
    std::ostringstream msg;
    msg << "g(x) = " << target << " not bracketed by (" << lo << ", " << hi << ")";
    throw Error(ErrorCode::RootNotBracketed, msg.str());
  }

  std::uintmax_t iterations = 200;
  const auto width_reached = [root_tol](double a, double c) {
    return c - a <= root_tol || std::nextafter(a, c) >= c;
  };
  std::tie(lo, hi) = boost::math::tools::bisect(f, lo, hi, width_reached, iterations);

  // Polish inside the final bracket down to adjacent doubles.
  const double flo = f(lo);
  const double fhi = f(hi);
  double p_R = 0.5 * (lo + hi);
  if (flo == 0.0) {
    p_R = lo;
  } else if (fhi == 0.0) {
    p_R = hi;
  } else if (flo < 0.0 && fhi > 0.0) {
    std::uintmax_t polish = 100;
    const auto [a, c] = boost::math::tools::toms748_solve(
        f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), polish);
    p_R = std::abs(f(a)) <= std::abs(f(c)) ? a : c;
  }

  const double c1 = b.R * p_R / one_minus_p2_sq(p_R);
  return {b.R, b.M, p_R, c1, 0.25 * c1};
}

double radius_at(const ParametricExtremal& e, double p) { return e.c1 * one_minus_p2_sq(p) / p; }

double height_at(const ParametricExtremal& e, double p) { return e.c1 * height_factor(p); }

double radius_derivative(const ParametricExtremal& e, double p) {
  return -e.c1 * (1.0 / (p * p) + 2.0 - 3.0 * p * p);
}

CurvePoint curve_at_p(const ParametricExtremal& e, double p) {
  require_slope(p);
  return {radius_at(e, p), height_at(e, p)};
}

double p_of_r(const ParametricExtremal& e, double r, double root_tol) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    std::ostringstream msg;
    msg << "radius must be non-negative, got " << r;
    throw Error(ErrorCode::DomainError, msg.str());
  }
  if (r == 0.0) return 1.0;
  // r(p) <= c1/p everywhere, and r(p) >= (9/16) c1/p for p <= 1/2.
  double hi = std::min(1.0, e.c1 / r);
  double lo = std::min(0.5, 0.5625 * e.c1 / r);
  const auto f = [&e, r](double p) { return radius_at(e, p) - r; };
  if (f(hi) > 0.0) return hi;
  if (f(lo) < 0.0) return lo;
  std::uintmax_t iterations = 2000;
  const auto width_reached = [root_tol](double a, double c) {
    return c - a <= root_tol * c || std::nextafter(a, c) >= c;
  };
  const auto [a, c] = boost::math::tools::bisect(f, lo, hi, width_reached, iterations);
  return 0.5 * (a + c);
}

ExtremalEvaluation eval_at_r(const ParametricExtremal& e, double r) {
  if (!(r > 0.0)) {
    throw Error(ErrorCode::DomainError, "eval_at_r needs r > 0 (the axis is a conical point)");
  }
  const double p = p_of_r(e, r, 0.0);
  const double p2 = p * p;
  const double d2u = -p2 / (e.c1 * (1.0 - p) * (1.0 + p) * (1.0 + 3.0 * p2));
  return {r, height_at(e, p), p, d2u};
}

double extremal_resistance_unit(double p_R) {
  const double p2 = p_R * p_R;
  const double numerator = 3.0 * p2 * p2 * p2 - 10.0 * p2 * p2 + 9.0 * p2 + 4.0 * p2 * std::log(p_R) - 2.0;
  const double q = one_minus_p2_sq(p_R);
  return -kPi * numerator / (2.0 * q * q);
}

double extremal_resistance(const ParametricExtremal& e) {
  return e.R * e.R * extremal_resistance_unit(e.p_R);
}

QuadratureResult extremal_resistance_quadrature(const ParametricExtremal& e, double abs_tol) {
  // The density peaks like 1/p near p_R when p_R is small; geometric breakpoints
  // keep the first panels well scaled.
  std::vector<double> points{e.p_R};
  while (points.back() * 2.0 < 1.0) points.push_back(points.back() * 2.0);
  points.push_back(1.0);
  const double c1 = e.c1;
  QuadratureResult q = integrate([c1](double p) { return p_space_density(c1, p); }, points,
                                 {.abs_tol = abs_tol / (2.0 * kPi), .max_intervals = 20000});
  q.value *= 2.0 * kPi;
  q.abs_error *= 2.0 * kPi;
  return q;
}

std::vector<Table1Row> table1(double R, const std::vector<double>& M_list) {
  std::vector<Table1Row> rows;
  rows.reserve(M_list.size());
  for (double M : M_list) {
    const ParametricExtremal e = solve_extremal({R, M});
    const double E_cone = kPi * R * R * R * R / ((R - M) * (R + M));
    rows.push_back({M, e.p_R, extremal_resistance(e), E_cone});
  }
  return rows;
}

std::vector<ExtremalEvaluation> sample_curve(const ParametricExtremal& e, int samples) {
  if (samples < 1) throw Error(ErrorCode::DomainError, "need at least one sample");
  std::vector<ExtremalEvaluation> out;
  out.reserve(samples);
  for (int i = 1; i <= samples; ++i) {
    out.push_back(eval_at_r(e, e.R * static_cast<double>(i) / samples));
  }
  return out;
}

RadialProfile make_extremal_profile(const ParametricExtremal& e) {
  auto handle = std::make_shared<const ParametricExtremal>(e);
  const double c1 = e.c1;
  return RadialProfile({
      .R = e.R,
      .shape = ExtremalShape{handle},
      .value = [handle](double r) { return r == 0.0 ? 0.0 : height_at(*handle, p_of_r(*handle, r, 0.0)); },
      .slope = [handle](double r) { return p_of_r(*handle, r, 0.0); },
      .kinks = {},
      .slope_sup = std::nullopt,
      .extends = true,
      .reparam = Reparametrization{e.p_R, 1.0, [c1](double p) { return p_space_density(c1, p); }},
  });
}

}  // namespace lnewton
