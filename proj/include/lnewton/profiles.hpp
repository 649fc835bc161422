#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace lnewton {

struct ParametricExtremal;

/// Outer radius R and prescribed height M of an axisymmetric problem, 0 < M < R.
struct BoundaryData {
  double R = 1.0;
  double M = 0.5;
};

/// Throws BadBoundaryData unless 0 < M < R (both finite).
void validate(const BoundaryData& b);

struct FlatShape {};
struct HyperbolicCapShape {
  double rho;
};
struct ConeShape {
  double lambda;
};
struct TruncatedConeShape {
  double M;
  double a;  // radius where the sloped part meets the plateau
  int n;
};
struct TruncatedCapShape {
  double M;
  double rho;
  double a;
  int n;
};
struct ExtremalShape {
  std::shared_ptr<const ParametricExtremal> handle;
};
struct CustomShape {
  std::string label;
};

using ProfileShape = std::variant<FlatShape, HyperbolicCapShape, ConeShape, TruncatedConeShape,
                                  TruncatedCapShape, ExtremalShape, CustomShape>;

/// Integral of r/(1 - u'(r)^2) over [0, R] rewritten in another variable:
/// equals the integral of `integrand` over [lower, upper]. Used where the
/// r-space integrand has a removable singularity at an endpoint.
struct Reparametrization {
  double lower;
  double upper;
  std::function<double(double)> integrand;
};

/// Radial height function u(r) on [0, R], rotated about the z axis.
///
/// Immutable once built. `value` and `slope` are defined on [0, R]; when
/// `extends()` is true they also accept r > R through the profile's natural
/// analytic continuation.
class RadialProfile {
 public:
  struct Parts {
    double R;
    ProfileShape shape;
    std::function<double(double)> value;
    std::function<double(double)> slope;
    std::vector<double> kinks;               // interior radii where u' jumps
    std::optional<double> slope_sup;         // exact sup |u'| when known
    bool extends = true;
    std::optional<Reparametrization> reparam;
    // 1 - u'^2 in a cancellation-free form; (1 - u')(1 + u') when empty
    std::function<double(double)> gap;
  };

  explicit RadialProfile(Parts parts);

  double outer_radius() const noexcept { return R_; }
  double value(double r) const { return value_(r); }
  double slope(double r) const { return slope_(r); }
  /// 1 - u'(r)^2.
  double lorentz_gap(double r) const;
  const ProfileShape& shape() const noexcept { return shape_; }
  std::string kind_name() const;
  const std::vector<double>& kinks() const noexcept { return kinks_; }
  /// [0, k1, ..., kn, R]
  std::vector<double> breakpoints() const;
  std::optional<double> exact_slope_sup() const noexcept { return slope_sup_; }
  bool extends() const noexcept { return extends_; }
  const std::optional<Reparametrization>& reparametrization() const noexcept { return reparam_; }

 private:
  double R_;
  ProfileShape shape_;
  std::function<double(double)> value_;
  std::function<double(double)> slope_;
  std::vector<double> kinks_;
  std::optional<double> slope_sup_;
  bool extends_;
  std::optional<Reparametrization> reparam_;
  std::function<double(double)> gap_;
};

RadialProfile make_flat(double R);
RadialProfile make_hyperbolic_cap(double R, double rho);
/// Throws SlopeOutOfRange unless 0 < lambda < 1.
RadialProfile make_cone(double R, double lambda);
/// Cone of slope M/a_n on [0, a_n] followed by the plateau u = M, where
/// a_n = M + (R - M)/n.
RadialProfile make_truncated_cone(double R, double M, int n);
/// Hyperbolic cap through the origin reaching M at a_n, then the plateau.
RadialProfile make_truncated_cap(double R, double M, int n);
/// Generic profile; `kinks` must be sorted and interior to (0, R).
RadialProfile make_custom(double R, std::string label, std::function<double(double)> value,
                          std::function<double(double)> slope, std::vector<double> kinks = {});
/// v(r) = c u(r / c) on [0, cR].
RadialProfile dilate(const RadialProfile& p, double c);

/// a_n = M + (R - M)/n.
double truncation_radius(double R, double M, int n);

struct SpacelikeCertificate {
  bool spacelike;
  double slope_sup;  // largest |u'| observed (or the exact supremum)
};

/// Samples |u'| on a 10^4-point grid per smooth piece, plus the exact supremum
/// where a closed form exists.
SpacelikeCertificate certify_spacelike(const RadialProfile& p);

/// |u(r)| < R - r on a uniform grid of [0, R). Only meaningful for u(R) = 0;
/// returns false when that precondition fails.
bool height_bound_check(const RadialProfile& p, int samples = 10000);

/// {"kind", "parameters", "R"}
nlohmann::json to_json(const RadialProfile& p);

}  // namespace lnewton
