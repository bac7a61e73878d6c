#pragma once

// World model: a trapezoidal object wedged in the corner formed by a flat
// bottom support and a wall-like second support, touched by a curved palm.
// A tilt configuration (theta, delta) resolves into three frictional point
// contacts A (bottom support), B (wall) and C (palm).

#include <array>
#include <optional>

#include "tiltgrasp/geom.hpp"
#include "tiltgrasp/wrench.hpp"

namespace tiltgrasp {

inline constexpr double kGravity = 9.81;            // m/s^2
inline constexpr double kThetaCap = 80.0 * kPi / 180.0;

/// Isosceles trapezoid, top edge at least as long as the bottom edge.
/// Body frame: bottom-left vertex at the origin, bottom edge along +x.
struct TrapezoidObject {
  double w_b = 0.0;   // bottom edge length, m
  double w_t = 0.0;   // top edge length, m
  double h = 0.0;     // height, m
  double mass = 0.0;  // kg
};

/// The two fixed supports. psi is the interior angle between them; the wall
/// face runs from the corner origin along (cos psi, sin psi).
struct SupportPair {
  double psi = kPi / 2.0;  // radians, in (pi/6, pi/2]
  double mu_a = 0.0;
  double mu_b = 0.0;
};

/// Curved palm approximated by a circular arc of radius R near its tip Y.
/// Arc-length parameter 0 is Y; tip_arc_length is how much arc is available
/// from Y toward the first-touch point X.
struct PalmModel {
  double mu_c = 0.0;
  bool sticky = false;
  double radius = 0.0;          // m
  double tip_arc_length = 0.0;  // m
};

/// Tilt configuration: object rotation theta and palm-contact position
/// delta, measured along the object's right edge from the bottom-right
/// vertex. Tilting starts at theta = 0 and ends at delta = 0.
struct Configuration {
  double theta = 0.0;  // radians
  double delta = 0.0;  // m
};

struct ContactPoint {
  Vec2 position = Vec2::Zero();
  Vec2 normal = Vec2::Zero();  // unit, direction the contact can push the object
  double mu = 0.0;
  std::optional<Vec2> tangent_slip;  // object's slip direction, when sliding
};

struct ContactSet {
  ContactPoint a;
  ContactPoint b;
  ContactPoint c;
};

/// Throws std::invalid_argument unless w_t >= w_b > 0, h > 0, mass > 0.
void validate(const TrapezoidObject& obj);
void validate(const SupportPair& supports);
void validate(const PalmModel& palm);

/// Body-frame vertices in CCW order: BL, BR, TR, TL.
std::array<Vec2, 4> trapezoid_vertices(const TrapezoidObject& obj);

/// Length of the right edge BR->TR; the range of valid delta.
double right_edge_length(const TrapezoidObject& obj);

/// Body-frame centroid: x = w_b/2 by symmetry, z = (h/3)(2 w_t + w_b)/(w_t + w_b).
Vec2 com_of_trapezoid(const TrapezoidObject& obj);

/// Unit normal of the wall face, pointing into the object region:
/// (sin psi, -cos psi).
inline Vec2 wall_normal(const SupportPair& supports) {
  return Vec2(std::sin(supports.psi), -std::cos(supports.psi));
}

/// Pose with the object rotated CCW by theta, its bottom-left vertex on the
/// bottom support and its top-left vertex on the wall face. Throws
/// NoValidPlacement when any vertex would penetrate a support.
Pose2 object_pose_from_theta(const TrapezoidObject& obj, const SupportPair& supports,
                             double theta);

/// Infinite line of the object's right edge in world frame; point is the
/// bottom-right vertex, direction points up the edge toward the top-right
/// vertex, so delta is the signed parameter along it.
Line2 right_edge_line_world(const TrapezoidObject& obj, const Pose2& pose);

/// Resolves a configuration into the three contacts. A and B carry the slip
/// directions of the rightward three-contact sliding motion; C carries none
/// (rolling). Throws DeltaOutOfRange / ThetaOutOfRange / NoValidPlacement.
ContactSet contacts_from_config(const TrapezoidObject& obj, const SupportPair& supports,
                                const PalmModel& palm, const Configuration& config);

/// Gravity wrench (0, -m g, tau) about the world origin, COM mapped through
/// the pose.
Wrench gravity_wrench(const TrapezoidObject& obj, const Pose2& pose);

}  // namespace tiltgrasp
