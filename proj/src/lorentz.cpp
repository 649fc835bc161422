#include "lnewton/lorentz.hpp"

#include <cmath>
#include <sstream>

#include "lnewton/error.hpp"

namespace lnewton {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::SlopeOutOfRange: return "SlopeOutOfRange";
    case ErrorCode::BadBoundaryData: return "BadBoundaryData";
    case ErrorCode::SingularIntegrand: return "SingularIntegrand";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::RootNotBracketed: return "RootNotBracketed";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::ZeroGradient: return "ZeroGradient";
  }
  return "Unknown";
}

const char* to_string(CausalType type) noexcept {
  switch (type) {
    case CausalType::Spacelike: return "spacelike";
    case CausalType::Timelike: return "timelike";
    case CausalType::Lightlike: return "lightlike";
  }
  return "unknown";
}

double lorentz_inner(const Vec3L& v, const Vec3L& w) noexcept {
  return v.x * w.x + v.y * w.y - v.z * w.z;
}

double lorentz_norm(const Vec3L& v) noexcept { return std::sqrt(std::abs(lorentz_inner(v, v))); }

CausalType classify(const Vec3L& v) noexcept {
  const double q = lorentz_inner(v, v);
  if (q > kLightTolerance) return CausalType::Spacelike;
  if (q < -kLightTolerance) return CausalType::Timelike;
  return CausalType::Lightlike;
}

namespace {

// 1 - |Du|^2, rejecting gradients on or outside the light cone.
double spacelike_gap(Vec2 gradient) {
  const double gap = 1.0 - norm_sq(gradient);
  if (!(gap > 0.0)) {
    std::ostringstream msg;
    msg << "|Du|^2 = " << norm_sq(gradient) << " >= 1";
    throw Error(ErrorCode::NotSpacelike, msg.str());
  }
  return gap;
}

}  // namespace

GraphPointData graph_point(Vec2 gradient) {
  const double cosh_theta = 1.0 / std::sqrt(spacelike_gap(gradient));
  return {gradient, {cosh_theta * gradient.x, cosh_theta * gradient.y, cosh_theta}, cosh_theta};
}

Vec3L reflect_particle(Vec2 gradient) {
  const double gap = spacelike_gap(gradient);
  const double d2 = norm_sq(gradient);
  return {-2.0 * gradient.x / gap, -2.0 * gradient.y / gap, -(1.0 + d2) / gap};
}

double momentum_transfer(Vec2 gradient) {
  const Vec3L vf = reflect_particle(gradient);
  return lorentz_inner(vf - kE3, kE3);
}

TangentNormalFrame tangent_normal_frame(Vec2 gradient) {
  const GraphPointData g = graph_point(gradient);
  const double d = norm(gradient);
  if (d == 0.0) throw Error(ErrorCode::ZeroGradient, "tangent direction undefined for Du = 0");
  // sinh = sqrt(cosh^2 - 1) written without cancellation.
  const double sinh_theta = d * g.cosh_theta;
  const Vec3L tangent = (1.0 / sinh_theta) * (g.cosh_theta * g.normal - kE3);
  return {tangent, g.normal, sinh_theta, g.cosh_theta};
}

}  // namespace lnewton
