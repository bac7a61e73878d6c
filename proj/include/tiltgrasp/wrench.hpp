#pragma once

// Planar wrenches. Component order is fixed everywhere as (fx, fz, tau),
// with moments taken about the world origin.

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "tiltgrasp/geom.hpp"

namespace tiltgrasp {

using Wrench = Eigen::Vector3d;

/// Wrench of a point force f applied at p: (fx, fz, p x f).
inline Wrench point_force_wrench(const Vec2& p, const Vec2& f) {
  return Wrench(f.x(), f.y(), cross2(p, f));
}

inline Vec2 force_of(const Wrench& w) { return Vec2(w[0], w[1]); }

/// Moment of a point-force wrench's force line about an arbitrary point:
/// tau - cross(point, f).
inline double moment_about(const Wrench& w, const Vec2& point) {
  return w[2] - (point.x() * w[1] - point.y() * w[0]);
}

/// Finitely generated wrench cone (positive span of the columns).
struct WrenchCone {
  /// Which contact and cone edge produced a generator.
  struct Tag {
    char contact = '?';   // 'A', 'B' or 'C'
    int8_t edge = 0;      // +1 / -1 cone edge, 0 = normal or sliding edge
  };

  Eigen::Matrix3Xd generators;
  std::vector<Tag> tags;

  Eigen::Index size() const { return generators.cols(); }

  void push_back(const Wrench& w, Tag tag) {
    generators.conservativeResize(3, generators.cols() + 1);
    generators.col(generators.cols() - 1) = w;
    tags.push_back(tag);
  }
};

}  // namespace tiltgrasp
