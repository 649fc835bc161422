#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "lnewton/field.hpp"
#include "lnewton/profiles.hpp"

namespace lnewton {

inline constexpr double kDefaultTolerance = 1e-10;
/// Quadrature aborts if 1 - |Du|^2 drops below this at an interior node.
inline constexpr double kEdgeTolerance = 1e-9;

/// Density 1/(1 + eps |Du|^2): eps = -1 is the Lorentzian resistance,
/// eps = +1 the classical Euclidean one.
struct LagrangianSpec {
  int epsilon = -1;

  static constexpr LagrangianSpec lorentzian() { return {-1}; }
  static constexpr LagrangianSpec euclidean() { return {+1}; }

  /// Throws NotAdmissible when eps = -1 and |Du| >= 1.
  double density(Vec2 gradient) const;
  bool admissible(Vec2 gradient) const;
};

enum class ResistanceMethod { ClosedForm, Quadrature1D, Quadrature2D };

const char* to_string(ResistanceMethod method) noexcept;

struct ResistanceReport {
  double value = 0.0;
  ResistanceMethod method = ResistanceMethod::ClosedForm;
  double abs_error_estimate = 0.0;
  // Truncated profiles only: contribution of the sloped part [0, a]. The
  // remaining annulus [a, R] is flat and contributes its area.
  std::optional<double> sloped_part;
};

/// {"value", "method", "abs_error_estimate"} plus "sloped_part" when present.
nlohmann::json to_json(const ResistanceReport& report);

/// 2 pi times the integral of r/(1 - u'^2) over [0, R], split at the kinks.
/// The error target is tol + 1e-12 E, so large energies are not held to a
/// roundoff-level absolute bound. Throws SingularIntegrand or ToleranceNotMet.
ResistanceReport resistance_radial(const RadialProfile& p, double tol = kDefaultTolerance);

bool has_closed_form(const RadialProfile& p);
/// Throws NoClosedForm for custom profiles.
ResistanceReport resistance_closed_form(const RadialProfile& p);

/// Adaptive tensor-product quadrature of 1/(1 + eps |Du|^2) over the domain.
/// Disks are integrated in x = R sin(phi) so the chord length stays smooth.
ResistanceReport resistance_grid_2d(const Field2D& u, const Domain2D& domain, LagrangianSpec spec,
                                    double tol = 1e-8);

/// Composite midpoint rule over the grid cells whose four corners are inside
/// the mask, with cell-centre gradients. The error estimate is the Richardson
/// difference against the same rule on the 2h subgrid.
ResistanceReport resistance_grid_2d(const Grid2D& grid, LagrangianSpec spec);

struct DilationResult {
  double E_original;
  double E_dilated;
  double ratio;
};

/// Resistance of p and of v(r) = c p(r/c), both by quadrature.
DilationResult dilation_check(const RadialProfile& p, double c, double tol = kDefaultTolerance);

struct DivergenceRow {
  int n;
  double a;
  double E_sloped;   // closed form over [0, a_n]
  double E_total;    // closed form over [0, R]
  double E_quadrature;
  double quadrature_error;
};

/// Closed form and quadrature resistance of the truncated cones u_n.
std::vector<DivergenceRow> divergence_scan(double R, double M, const std::vector<int>& n_list,
                                           double tol = kDefaultTolerance);

}  // namespace lnewton
