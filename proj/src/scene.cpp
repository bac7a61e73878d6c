#include "tiltgrasp/scene.hpp"

#include <cmath>
#include <stdexcept>

#include "tiltgrasp/errors.hpp"

namespace tiltgrasp {

void validate(const TrapezoidObject& obj) {
  if (!(obj.w_b > 0.0) || !(obj.w_t >= obj.w_b))
    throw std::invalid_argument("object: need w_t >= w_b > 0");
  if (!(obj.h > 0.0)) throw std::invalid_argument("object: need h > 0");
  if (!(obj.mass > 0.0)) throw std::invalid_argument("object: need mass > 0");
}

void validate(const SupportPair& supports) {
  if (!(supports.psi > kPi / 6.0) || !(supports.psi <= kPi / 2.0))
    throw std::invalid_argument("supports: psi must lie in (30, 90] degrees");
  if (supports.mu_a < 0.0 || supports.mu_b < 0.0)
    throw std::invalid_argument("supports: friction coefficients must be >= 0");
}

void validate(const PalmModel& palm) {
  if (palm.mu_c < 0.0) throw std::invalid_argument("palm: mu_c must be >= 0");
  if (!(palm.radius > 0.0)) throw std::invalid_argument("palm: radius must be > 0");
  if (palm.tip_arc_length < 0.0)
    throw std::invalid_argument("palm: tip_arc_length must be >= 0");
}

std::array<Vec2, 4> trapezoid_vertices(const TrapezoidObject& obj) {
  const double off = (obj.w_b - obj.w_t) / 2.0;
  return {Vec2(0.0, 0.0), Vec2(obj.w_b, 0.0), Vec2(obj.w_b - off, obj.h), Vec2(off, obj.h)};
}

double right_edge_length(const TrapezoidObject& obj) {
  const auto v = trapezoid_vertices(obj);
  return (v[2] - v[1]).norm();
}

Vec2 com_of_trapezoid(const TrapezoidObject& obj) {
  const double z = obj.h / 3.0 * (2.0 * obj.w_t + obj.w_b) / (obj.w_t + obj.w_b);
  return Vec2(obj.w_b / 2.0, z);
}

Pose2 object_pose_from_theta(const TrapezoidObject& obj, const SupportPair& supports,
                             double theta) {
  if (theta < 0.0 || theta > kThetaCap)
    throw ThetaOutOfRange("theta outside [0, 80] degrees");
  const Vec2 n_wall = wall_normal(supports);
  const auto verts = trapezoid_vertices(obj);
  const Eigen::Rotation2Dd rot(theta);

  // Top-left vertex pinned to the wall line through the corner origin:
  // dot(R * TL + (a_x, 0), n_wall) = 0 solved for a_x.
  const Vec2 tl_rot = rot * verts[3];
  const double a_x = -tl_rot.dot(n_wall) / std::sin(supports.psi);
  const Pose2 pose(theta, Vec2(a_x, 0.0));

  for (const Vec2& v : verts) {
    const Vec2 w = pose.apply(v);
    if (w.y() < -kGeomTol) throw NoValidPlacement("vertex below bottom support");
    if (w.dot(n_wall) < -kGeomTol) throw NoValidPlacement("vertex behind wall support");
  }
  return pose;
}

Line2 right_edge_line_world(const TrapezoidObject& obj, const Pose2& pose) {
  const auto verts = trapezoid_vertices(obj);
  const Vec2 br = pose.apply(verts[1]);
  const Vec2 tr = pose.apply(verts[2]);
  return make_line(br, tr - br);
}

ContactSet contacts_from_config(const TrapezoidObject& obj, const SupportPair& supports,
                                const PalmModel& palm, const Configuration& config) {
  const double l_side = right_edge_length(obj);
  if (config.delta < 0.0 || config.delta > l_side + kGeomTol)
    throw DeltaOutOfRange("delta out of range");

  const Pose2 pose = object_pose_from_theta(obj, supports, config.theta);
  const auto verts = trapezoid_vertices(obj);
  const Vec2 wall_dir(std::cos(supports.psi), std::sin(supports.psi));
  const Line2 edge = right_edge_line_world(obj, pose);

  ContactSet cs;
  cs.a = ContactPoint{pose.apply(verts[0]), Vec2(0.0, 1.0), supports.mu_a, Vec2(1.0, 0.0)};
  cs.b = ContactPoint{pose.apply(verts[3]), wall_normal(supports), supports.mu_b,
                      Vec2(-wall_dir)};
  cs.c = ContactPoint{edge.point + config.delta * edge.direction, perp(edge.direction),
                      palm.mu_c, std::nullopt};
  return cs;
}

Wrench gravity_wrench(const TrapezoidObject& obj, const Pose2& pose) {
  const Vec2 com = pose.apply(com_of_trapezoid(obj));
  const Vec2 f(0.0, -obj.mass * kGravity);
  return point_force_wrench(com, f);
}

}  // namespace tiltgrasp
