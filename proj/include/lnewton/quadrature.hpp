#pragma once

#include <functional>
#include <span>

namespace lnewton {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;  // target is abs_tol + rel_tol |value|
  int max_intervals = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature.
///
/// `breakpoints` is the sorted list a = b0 < b1 < ... < bk = b; no subinterval
/// ever straddles an interior breakpoint. The interval with the largest error
/// estimate is bisected until the summed estimate drops below abs_tol + rel_tol |value|.
/// The final value is a compensated sum taken in left-to-right order, so the
/// result does not depend on the refinement history.
QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& options = {});

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Neumaier-compensated sum in the given order.
double compensated_sum(std::span<const double> terms);

}  // namespace lnewton
