#include "lnewton/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "lnewton/error.hpp"
#include "lnewton/extremal.hpp"

namespace lnewton {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_radius(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    std::ostringstream msg;
    msg << "outer radius must be positive, got " << R;
    throw Error(ErrorCode::BadBoundaryData, msg.str());
  }
}

void require_positive_n(int n) {
  if (n < 1) throw Error(ErrorCode::BadBoundaryData, "truncation index n must be >= 1");
}

}  // namespace

void validate(const BoundaryData& b) {
  if (!(std::isfinite(b.R) && std::isfinite(b.M) && b.M > 0.0 && b.M < b.R)) {
    std::ostringstream msg;
    msg << "need 0 < M < R, got R = " << b.R << ", M = " << b.M;
    throw Error(ErrorCode::BadBoundaryData, msg.str());
  }
}

RadialProfile::RadialProfile(Parts parts)
    : R_(parts.R),
      shape_(std::move(parts.shape)),
      value_(std::move(parts.value)),
      slope_(std::move(parts.slope)),
      kinks_(std::move(parts.kinks)),
      slope_sup_(parts.slope_sup),
      extends_(parts.extends),
      reparam_(std::move(parts.reparam)),
      gap_(std::move(parts.gap)) {
  require_radius(R_);
  std::sort(kinks_.begin(), kinks_.end());
  std::erase_if(kinks_, [this](double k) { return !(k > 0.0 && k < R_); });
  kinks_.erase(std::unique(kinks_.begin(), kinks_.end()), kinks_.end());
}

std::string RadialProfile::kind_name() const {
  return std::visit(Overloaded{
                        [](const FlatShape&) -> std::string { return "flat"; },
                        [](const HyperbolicCapShape&) -> std::string { return "cap"; },
                        [](const ConeShape&) -> std::string { return "cone"; },
                        [](const TruncatedConeShape&) -> std::string { return "truncated-cone"; },
                        [](const TruncatedCapShape&) -> std::string { return "truncated-cap"; },
                        [](const ExtremalShape&) -> std::string { return "extremal"; },
                        [](const CustomShape&) -> std::string { return "custom"; },
                    },
                    shape_);
}

double RadialProfile::lorentz_gap(double r) const {
  if (gap_) return gap_(r);
  const double s = slope_(r);
  return (1.0 - s) * (1.0 + s);
}

std::vector<double> RadialProfile::breakpoints() const {
  std::vector<double> points;
  points.reserve(kinks_.size() + 2);
  points.push_back(0.0);
  points.insert(points.end(), kinks_.begin(), kinks_.end());
  points.push_back(R_);
  return points;
}

RadialProfile make_flat(double R) {
  require_radius(R);
  return RadialProfile({.R = R,
                        .shape = FlatShape{},
                        .value = [](double) { return 0.0; },
                        .slope = [](double) { return 0.0; },
                        .kinks = {},
                        .slope_sup = 0.0});
}

RadialProfile make_hyperbolic_cap(double R, double rho) {
  require_radius(R);
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::BadBoundaryData, "cap radius rho must be positive");
  }
  const double top = std::hypot(rho, R);
  return RadialProfile({.R = R,
                        .shape = HyperbolicCapShape{rho},
                        .value = [rho, top](double r) { return std::hypot(rho, r) - top; },
                        .slope = [rho](double r) { return r / std::hypot(rho, r); },
                        .kinks = {},
                        .slope_sup = R / top,
                        .gap = [rho](double r) { return rho * rho / (rho * rho + r * r); }});
}

RadialProfile make_cone(double R, double lambda) {
  require_radius(R);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    std::ostringstream msg;
    msg << "cone slope must lie in (0, 1), got " << lambda;
    throw Error(ErrorCode::SlopeOutOfRange, msg.str());
  }
  return RadialProfile({.R = R,
                        .shape = ConeShape{lambda},
                        .value = [R, lambda](double r) { return lambda * (r - R); },
                        .slope = [lambda](double) { return lambda; },
                        .kinks = {},
                        .slope_sup = lambda});
}

double truncation_radius(double R, double M, int n) {
  validate({R, M});
  require_positive_n(n);
  return M + (R - M) / n;
}

RadialProfile make_truncated_cone(double R, double M, int n) {
  const double a = truncation_radius(R, M, n);
  const double s = M / a;
  return RadialProfile({.R = R,
                        .shape = TruncatedConeShape{M, a, n},
                        .value = [a, s, M](double r) { return r <= a ? s * r : M; },
                        .slope = [a, s](double r) { return r <= a ? s : 0.0; },
                        .kinks = {a},
                        .slope_sup = s});
}

RadialProfile make_truncated_cap(double R, double M, int n) {
  const double a = truncation_radius(R, M, n);
  const double rho = (a - M) * (a + M) / (2.0 * M);
  return RadialProfile({.R = R,
                        .shape = TruncatedCapShape{M, rho, a, n},
                        .value = [a, rho, M](double r) { return r <= a ? std::hypot(rho, r) - rho : M; },
                        .slope = [a, rho](double r) { return r <= a ? r / std::hypot(rho, r) : 0.0; },
                        .kinks = {a},
                        .slope_sup = a / (rho + M),
                        .gap = [a, rho](double r) { return r <= a ? rho * rho / (rho * rho + r * r) : 1.0; }});
}

RadialProfile make_custom(double R, std::string label, std::function<double(double)> value,
                          std::function<double(double)> slope, std::vector<double> kinks) {
  return RadialProfile({.R = R,
                        .shape = CustomShape{std::move(label)},
                        .value = std::move(value),
                        .slope = std::move(slope),
                        .kinks = std::move(kinks),
                        .slope_sup = std::nullopt,
                        .extends = false});
}

RadialProfile dilate(const RadialProfile& p, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::DomainError, "dilation factor must be positive");
  }
  std::vector<double> kinks;
  for (double k : p.kinks()) kinks.push_back(c * k);
  return RadialProfile({.R = c * p.outer_radius(),
                        .shape = CustomShape{"dilated " + p.kind_name()},
                        .value = [p, c](double r) { return c * p.value(r / c); },
                        .slope = [p, c](double r) { return p.slope(r / c); },
                        .kinks = std::move(kinks),
                        .slope_sup = p.exact_slope_sup(),
                        .extends = p.extends(),
                        .gap = [p, c](double r) { return p.lorentz_gap(r / c); }});
}

SpacelikeCertificate certify_spacelike(const RadialProfile& p) {
  constexpr int kSamplesPerPiece = 10000;
  const std::vector<double> points = p.breakpoints();
  double observed = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double lo = points[i];
    const double width = points[i + 1] - lo;
    // Cell midpoints: the axis of an extremal (u' -> 1) is never sampled.
    for (int k = 0; k < kSamplesPerPiece; ++k) {
      const double r = lo + (k + 0.5) * width / kSamplesPerPiece;
      const double s = std::abs(p.slope(r));
      if (!std::isfinite(s)) return {false, s};
      observed = std::max(observed, s);
    }
  }
  const double sup = std::max(observed, p.exact_slope_sup().value_or(0.0));
  return {sup < 1.0, sup};
}

bool height_bound_check(const RadialProfile& p, int samples) {
  const double R = p.outer_radius();
  if (std::abs(p.value(R)) > 1e-12) return false;
  for (int i = 0; i < samples; ++i) {
    const double r = R * static_cast<double>(i) / samples;
    if (!(std::abs(p.value(r)) < R - r)) return false;
  }
  return true;
}

nlohmann::json to_json(const RadialProfile& p) {
  nlohmann::json params = std::visit(
      Overloaded{
          [](const FlatShape&) { return nlohmann::json::object(); },
          [](const HyperbolicCapShape& s) { return nlohmann::json{{"rho", s.rho}}; },
          [](const ConeShape& s) { return nlohmann::json{{"lambda", s.lambda}}; },
          [](const TruncatedConeShape& s) {
            return nlohmann::json{{"M", s.M}, {"n", s.n}, {"a", s.a}};
          },
          [](const TruncatedCapShape& s) {
            return nlohmann::json{{"M", s.M}, {"n", s.n}, {"a", s.a}, {"rho", s.rho}};
          },
          [](const ExtremalShape& s) {
            return nlohmann::json{{"M", s.handle->M}, {"p_R", s.handle->p_R}, {"c1", s.handle->c1}};
          },
          [](const CustomShape& s) { return nlohmann::json{{"label", s.label}}; },
      },
      p.shape());
  return {{"kind", p.kind_name()}, {"parameters", std::move(params)}, {"R", p.outer_radius()}};
}

}  // namespace lnewton
