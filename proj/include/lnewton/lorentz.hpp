#pragma once

#include <cmath>

namespace lnewton {

/// Tolerance for calling a vector lightlike: |<v,v>| <= kLightTolerance.
inline constexpr double kLightTolerance = 1e-12;
/// Tolerance for unit-norm checks on composed square roots.
inline constexpr double kNumTolerance = 1e-10;

/// Point or vector in the plane of the graph's domain.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Vector of R^3 carrying the Lorentzian metric dx^2 + dy^2 - dz^2.
/// The z axis is the timelike direction.
struct Vec3L {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3L operator+(Vec3L a, Vec3L b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3L operator-(Vec3L a, Vec3L b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3L operator*(double s, Vec3L a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(Vec3L, Vec3L) = default;
};

/// Future-pointing reference direction; also the velocity of incoming particles.
inline constexpr Vec3L kE3{0.0, 0.0, 1.0};

enum class CausalType { Spacelike, Timelike, Lightlike };

const char* to_string(CausalType type) noexcept;

double lorentz_inner(const Vec3L& v, const Vec3L& w) noexcept;

/// Lorentzian modulus sqrt(|<v,v>|).
double lorentz_norm(const Vec3L& v) noexcept;

CausalType classify(const Vec3L& v) noexcept;

/// Geometry of the graph z = u(x, y) at a point where the gradient is Du.
struct GraphPointData {
  Vec2 gradient;
  Vec3L normal;       // unit timelike, same time orientation as kE3
  double cosh_theta;  // hyperbolic angle between kE3 and the normal
};

/// Unit normal (Du, 1)/sqrt(1 - |Du|^2). Throws NotSpacelike when |Du| >= 1.
GraphPointData graph_point(Vec2 gradient);

/// Velocity of a particle arriving along kE3 after a frictionless bounce off
/// the graph: v_f = e3 - 2 cosh(theta) N. Throws NotSpacelike when |Du| >= 1.
Vec3L reflect_particle(Vec2 gradient);

/// Momentum transferred along the incoming direction, <v_f - v_i, v_i>.
/// Equals 2 cosh^2(theta) = 2 / (1 - |Du|^2).
double momentum_transfer(Vec2 gradient);

/// Decomposition of kE3 against the graph: e3 = -sinh(theta) T + cosh(theta) N,
/// T the unit spacelike tangent in the plane of e3 and N. Requires Du != 0.
struct TangentNormalFrame {
  Vec3L tangent;
  Vec3L normal;
  double sinh_theta;
  double cosh_theta;
};

TangentNormalFrame tangent_normal_frame(Vec2 gradient);

}  // namespace lnewton
