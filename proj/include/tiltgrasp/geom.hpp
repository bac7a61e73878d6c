#pragma once

// Planar geometry primitives. Everything lives in the x-z plane: Vec2::x()
// is the horizontal coordinate, Vec2::y() stores z (up). Angles are radians,
// CCW-positive.

#include <Eigen/Dense>

#include <cmath>
#include <optional>

namespace tiltgrasp {

using Vec2 = Eigen::Vector2d;

// Incidence predicates tolerate |residual| < kGeomTol metres; unit-length
// checks use the tighter kUnitTol.
inline constexpr double kGeomTol = 1e-9;
inline constexpr double kUnitTol = 1e-12;
inline constexpr double kPi = 3.14159265358979323846;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// CCW perpendicular: perp(x, z) = (-z, x).
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

inline double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r = kPi;
  return r;
}

/// Wraps the direction angle of an undirected segment into [0, pi).
inline double wrap_segment_angle(double a) {
  double r = std::fmod(a, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  return r;
}

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Planar rigid pose; rotation applied before translation, angle in (-pi, pi].
struct Pose2 {
  double angle = 0.0;
  Vec2 translation = Vec2::Zero();

  Pose2() = default;
  Pose2(double angle_, const Vec2& translation_)
      : angle(wrap_angle(angle_)), translation(translation_) {}

  Eigen::Rotation2Dd rotation() const { return Eigen::Rotation2Dd(angle); }
  Vec2 apply(const Vec2& p) const { return rotation() * p + translation; }
};

struct Ray2 {
  Vec2 origin;
  Vec2 direction;  // unit
};

struct Line2 {
  Vec2 point;
  Vec2 direction;  // unit
};

/// Cone of directions around a unit axis; friction cones use
/// half_angle = arctan(mu).
struct DirCone {
  Vec2 axis;  // unit
  double half_angle = 0.0;
};

inline Ray2 make_ray(const Vec2& origin, const Vec2& direction) {
  return Ray2{origin, direction.normalized()};
}

inline Line2 make_line(const Vec2& point, const Vec2& direction) {
  return Line2{point, direction.normalized()};
}

inline DirCone friction_cone(const Vec2& normal, double mu) {
  return DirCone{normal.normalized(), std::atan(mu)};
}

/// Intersection of a ray (t >= 0) with an infinite line; absent when the
/// directions are parallel (|cross| < kUnitTol) or the hit lies behind the
/// ray origin beyond kGeomTol.
std::optional<Vec2> ray_line_intersect(const Ray2& ray, const Line2& line);

/// Intersection of two infinite lines; absent when parallel.
std::optional<Vec2> line_line_intersect(const Line2& a, const Line2& b);

/// True iff the unit direction d lies within the cone (tolerance 1e-12 rad).
bool cone_contains(const DirCone& cone, const Vec2& d);

/// Signed side of a directed line: cross(direction, p - point).
/// Positive = left of the line, |result| < kGeomTol = on the line.
double side_of_line(const Vec2& p, const Line2& line);

/// Unsigned distance from p to the infinite line.
inline double distance_to_line(const Vec2& p, const Line2& line) {
  return std::abs(side_of_line(p, line));
}

}  // namespace tiltgrasp
