#include "tiltgrasp/geom.hpp"

namespace tiltgrasp {

std::optional<Vec2> ray_line_intersect(const Ray2& ray, const Line2& line) {
  const double denom = cross2(ray.direction, line.direction);
  if (std::abs(denom) < kUnitTol) return std::nullopt;
  const double t = cross2(line.point - ray.origin, line.direction) / denom;
  if (t < -kGeomTol) return std::nullopt;
  return ray.origin + t * ray.direction;
}

std::optional<Vec2> line_line_intersect(const Line2& a, const Line2& b) {
  const double denom = cross2(a.direction, b.direction);
  if (std::abs(denom) < kUnitTol) return std::nullopt;
  const double t = cross2(b.point - a.point, b.direction) / denom;
  return a.point + t * a.direction;
}

bool cone_contains(const DirCone& cone, const Vec2& d) {
  const double ang = std::atan2(std::abs(cross2(cone.axis, d)), cone.axis.dot(d));
  return ang <= cone.half_angle + 1e-12;
}

double side_of_line(const Vec2& p, const Line2& line) {
  return cross2(line.direction, p - line.point);
}

}  // namespace tiltgrasp
