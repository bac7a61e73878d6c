#include "tiltgrasp/mobility.hpp"

#include <algorithm>
#include <cmath>

#include "tiltgrasp/errors.hpp"
#include "tiltgrasp/simplex.hpp"

namespace tiltgrasp {

const char* to_string(TiltMode mode) {
  switch (mode) {
    case TiltMode::TwoContactWedge: return "TwoContactWedge";
    case TiltMode::ThreeContactSlide: return "ThreeContactSlide";
    case TiltMode::StickyRequired: return "StickyRequired";
    case TiltMode::Infeasible: return "Infeasible";
  }
  return "?";
}

EdgeImagePair b_prime_points(const ContactPoint& b, const Line2& edge_line) {
  const Vec2 t = perp(b.normal);
  const Vec2 d_plus = (b.normal + b.mu * t).normalized();
  const Vec2 d_minus = (b.normal - b.mu * t).normalized();

  EdgeImagePair out;
  std::optional<Vec2> hits[2] = {ray_line_intersect(Ray2{b.position, d_plus}, edge_line),
                                 ray_line_intersect(Ray2{b.position, d_minus}, edge_line)};
  std::optional<double> params[2];
  for (int i = 0; i < 2; ++i)
    if (hits[i]) params[i] = (*hits[i] - edge_line.point).dot(edge_line.direction);

  if (hits[0] && hits[1] && *params[1] > *params[0]) {
    std::swap(hits[0], hits[1]);
    std::swap(params[0], params[1]);
  } else if (!hits[0] && hits[1]) {
    std::swap(hits[0], hits[1]);
    std::swap(params[0], params[1]);
  }
  out.b1 = hits[0];
  out.b2 = hits[1];
  out.b1_param = params[0];
  out.b2_param = params[1];
  return out;
}

TiltClassification classify_tilt(const ContactSet& contacts, const Wrench& gravity) {
  // The ordering of C against B'1/B'2 is translation-invariant along the
  // line, so the line through C itself serves as the edge line. The edge
  // direction recovers from C's inward normal: n = perp(e) => e = -perp(n).
  const Line2 edge = make_line(contacts.c.position, -perp(contacts.c.normal));
  TiltClassification out;
  out.images = b_prime_points(contacts.b, edge);
  out.c_param = 0.0;
  if (!out.images.b1 || !out.images.b2)
    throw DegenerateEdgeImages("friction-cone edge ray misses the edge line");

  const double p1 = *out.images.b1_param;
  const double p2 = *out.images.b2_param;
  const double scale = std::max({1.0, contacts.b.position.norm(), contacts.c.position.norm()});
  const double eps = kGeomTol * scale;
  out.boundary_adjacent = std::abs(p1) <= eps || std::abs(p2) <= eps;

  const Wrench balance_target = -gravity;
  const bool in_wedge_band = (0.0 >= p2 - eps) && (0.0 <= p1 + eps);

  if (in_wedge_band) {
    out.wedge = two_contact_wedge(contacts.b, contacts.c);
    if (out.wedge) {
      out.mode = TiltMode::TwoContactWedge;
      return out;
    }
    out.slide_balance = positive_span_feasible(wrench_cone_sliding(contacts), balance_target);
    out.mode = *out.slide_balance ? TiltMode::ThreeContactSlide : TiltMode::Infeasible;
    return out;
  }
  if (0.0 > p1) {  // {C B'1 B'2}
    out.slide_balance = positive_span_feasible(wrench_cone_sliding(contacts), balance_target);
    out.mode = *out.slide_balance ? TiltMode::ThreeContactSlide : TiltMode::Infeasible;
    return out;
  }
  // {B'1 B'2 C}
  out.sticky_balance = positive_span_feasible(wrench_cone_sticky(contacts), balance_target);
  out.mode = *out.sticky_balance ? TiltMode::StickyRequired : TiltMode::Infeasible;
  return out;
}

MomentLabel moment_label(const Vec2& point, const WrenchCone& cone) {
  bool all_nonneg = true;
  bool all_nonpos = true;
  bool all_zero = true;
  for (Eigen::Index j = 0; j < cone.size(); ++j) {
    const Wrench g = cone.generators.col(j);
    const double m = moment_about(g, point);
    const double eps =
        1e-9 * std::max(1.0, std::abs(g[2]) + std::abs(point.x() * g[1]) +
                                 std::abs(point.y() * g[0]));
    if (m < -eps) all_nonneg = false;
    if (m > eps) all_nonpos = false;
    if (std::abs(m) > eps) all_zero = false;
  }
  if (all_zero) return MomentLabel::PlusMinus;
  if (all_nonneg) return MomentLabel::Plus;
  if (all_nonpos) return MomentLabel::Minus;
  return MomentLabel::None;
}

bool gravity_balance_consistent(const WrenchCone& cone, const Wrench& gravity) {
  return positive_span_feasible(cone, -gravity);
}

RotationLabel reuleaux_label(const Vec2& point, const ContactSet& contacts) {
  RotationLabel label{true, true};
  for (const ContactPoint* cp : {&contacts.a, &contacts.b, &contacts.c}) {
    const double sigma = perp(cp->position - point).dot(cp->normal);
    const double eps = kGeomTol * std::max(1.0, (cp->position - point).norm());
    if (sigma < -eps) label.ccw_allowed = false;
    if (sigma > eps) label.cw_allowed = false;
  }
  return label;
}

bool ungrasp_cw_feasible(const ContactSet& contacts) {
  // sigma_i(q) <= -s for all contacts, maximizing the margin s:
  // cross(q, n_i) >= cross(p_i, n_i) + s. Variables q = u - v (free) and
  // s >= 0, with slack rows. Feasible escape iff the margin is strictly
  // positive (or unbounded).
  Eigen::MatrixXd A(3, 8);
  Eigen::VectorXd b(3);
  const ContactPoint* cps[3] = {&contacts.a, &contacts.b, &contacts.c};
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) {
    const Vec2 n = cps[i]->normal;
    const Eigen::Vector2d a_row(n.y(), -n.x());  // cross(q, n) = q_x n_z - q_z n_x
    A(i, 0) = a_row[0];
    A(i, 1) = a_row[1];
    A(i, 2) = -a_row[0];
    A(i, 3) = -a_row[1];
    A(i, 4) = -1.0;             // margin s
    A(i, 5) = 0.0;
    A(i, 6) = 0.0;
    A(i, 7) = 0.0;
    A(i, 5 + i) = -1.0;         // slack
    b[i] = cross2(cps[i]->position, n);
    scale = std::max(scale, cps[i]->position.norm());
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(8);
  c[4] = -1.0;  // maximize s
  const lp::Result r = lp::solve(A, b, c);
  if (r.status == lp::Status::Unbounded) return true;
  if (r.status != lp::Status::Optimal) return false;
  return -r.objective > kGeomTol * scale;
}

double critical_palm_angle(const ContactPoint& a, const ContactPoint& b, const Vec2& c_pos) {
  if (std::abs(cross2(a.normal, b.normal)) < kUnitTol)
    throw ParallelNormals("contact normal lines of A and B are parallel");
  const auto q = line_line_intersect(Line2{a.position, a.normal}, Line2{b.position, b.normal});
  if (!q) throw ParallelNormals("contact normal lines of A and B are parallel");
  const Vec2 to_q = *q - c_pos;
  if (to_q.norm() <= kGeomTol)
    // C already sits on the concurrency point; any palm orientation keeps
    // the three lines concurrent. Report the segment angle of A's normal
    // line as a deterministic representative.
    return wrap_segment_angle(angle_of(perp(a.normal)));
  return wrap_segment_angle(angle_of(perp(to_q.normalized())));
}

}  // namespace tiltgrasp
