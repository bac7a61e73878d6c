#include "tiltgrasp/closure.hpp"

#include <Eigen/SVD>

#include "tiltgrasp/errors.hpp"
#include "tiltgrasp/simplex.hpp"

namespace tiltgrasp {

std::array<Wrench, 2> cone_edge_wrenches(const ContactPoint& c) {
  const Vec2 t = perp(c.normal);
  const Vec2 f_plus = (c.normal + c.mu * t).normalized();
  const Vec2 f_minus = (c.normal - c.mu * t).normalized();
  return {point_force_wrench(c.position, f_plus), point_force_wrench(c.position, f_minus)};
}

Wrench sliding_edge_wrench(const ContactPoint& c) {
  if (!c.tangent_slip) throw MissingSlipDirection("contact has no slip direction");
  const Vec2 f = (c.normal - c.mu * (*c.tangent_slip)).normalized();
  return point_force_wrench(c.position, f);
}

std::array<Wrench, 3> sticky_wrenches(const ContactPoint& c) {
  const Vec2 t = perp(c.normal);
  return {point_force_wrench(c.position, c.normal), point_force_wrench(c.position, t),
          point_force_wrench(c.position, -t)};
}

WrenchCone wrench_cone_full(const ContactSet& contacts) {
  WrenchCone cone;
  const std::array<std::pair<char, const ContactPoint*>, 3> order = {
      std::pair{'A', &contacts.a}, std::pair{'B', &contacts.b}, std::pair{'C', &contacts.c}};
  for (const auto& [name, cp] : order) {
    const auto edges = cone_edge_wrenches(*cp);
    cone.push_back(edges[0], {name, +1});
    cone.push_back(edges[1], {name, -1});
  }
  return cone;
}

WrenchCone wrench_cone_sliding(const ContactSet& contacts) {
  WrenchCone cone;
  cone.push_back(sliding_edge_wrench(contacts.a), {'A', 0});
  cone.push_back(sliding_edge_wrench(contacts.b), {'B', 0});
  const auto edges = cone_edge_wrenches(contacts.c);
  cone.push_back(edges[0], {'C', +1});
  cone.push_back(edges[1], {'C', -1});
  return cone;
}

WrenchCone wrench_cone_sticky(const ContactSet& contacts) {
  WrenchCone cone;
  cone.push_back(sliding_edge_wrench(contacts.a), {'A', 0});
  cone.push_back(sliding_edge_wrench(contacts.b), {'B', 0});
  const auto sticky = sticky_wrenches(contacts.c);
  cone.push_back(sticky[0], {'C', 0});
  cone.push_back(sticky[1], {'C', +1});
  cone.push_back(sticky[2], {'C', -1});
  return cone;
}

bool positive_span_feasible(const Eigen::Matrix3Xd& generators, const Wrench& target) {
  return lp::nonneg_combination_exists(generators, target);
}

bool positive_span_feasible(const WrenchCone& cone, const Wrench& target) {
  return positive_span_feasible(cone.generators, target);
}

bool force_closure(std::span<const ContactPoint> contacts) {
  Eigen::Matrix3Xd F(3, 2 * contacts.size());
  Eigen::Index col = 0;
  for (const ContactPoint& cp : contacts) {
    const auto edges = cone_edge_wrenches(cp);
    F.col(col++) = edges[0];
    F.col(col++) = edges[1];
  }

  const Eigen::JacobiSVD<Eigen::Matrix3Xd> svd(F);
  const auto& sv = svd.singularValues();
  if (sv.size() < 3 || sv[2] <= 1e-9 * sv[0]) return false;

  // Strict interiority: F k = 0 with k >= 1, i.e. k = 1 + k' gives
  // F k' = -(sum of generators) with k' >= 0.
  const Wrench minus_sum = -F.rowwise().sum();
  return lp::nonneg_combination_exists(F, minus_sum);
}

bool force_closure(const ContactSet& contacts) {
  const std::array<ContactPoint, 3> arr = {contacts.a, contacts.b, contacts.c};
  return force_closure(std::span<const ContactPoint>(arr));
}

bool two_contact_wedge(const ContactPoint& b, const ContactPoint& c) {
  const Vec2 diff = b.position - c.position;
  if (diff.norm() <= kGeomTol) return false;
  const Vec2 c_to_b = diff.normalized();
  return cone_contains(friction_cone(c.normal, c.mu), c_to_b) &&
         cone_contains(friction_cone(b.normal, b.mu), -c_to_b);
}

}  // namespace tiltgrasp
