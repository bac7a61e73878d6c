#include "tiltgrasp/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tiltgrasp/closure.hpp"
#include "tiltgrasp/errors.hpp"

namespace tiltgrasp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1D squared-distance transform (lower envelope of parabolas) on a uniform
// grid with the given spacing.
void edt_1d(const std::vector<double>& f, double spacing, std::vector<double>& d) {
  const int n = static_cast<int>(f.size());
  std::vector<int> v(n, 0);
  std::vector<double> z(n + 1, 0.0);
  int k = 0;
  z[0] = -kInf;
  z[1] = kInf;
  auto x = [spacing](int i) { return spacing * i; };
  for (int q = 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s;
    for (;;) {
      if (f[v[k]] == kInf) {
        // No finite parabola yet; replace.
        if (k == 0) {
          v[0] = q;
          z[1] = kInf;
          s = -kInf;
          break;
        }
        --k;
        continue;
      }
      s = ((f[q] + x(q) * x(q)) - (f[v[k]] + x(v[k]) * x(v[k]))) / (2.0 * x(q) - 2.0 * x(v[k]));
      if (s <= z[k] && k > 0) {
        --k;
        continue;
      }
      ++k;
      v[k] = q;
      z[k] = s;
      z[k + 1] = kInf;
      break;
    }
    if (s == -kInf && v[0] == q) {
      // replaced the placeholder; k stays 0
      k = 0;
    }
  }
  d.assign(n, kInf);
  if (f[v[0]] == kInf) return;  // no sites at all
  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[j + 1] < x(q)) ++j;
    d[q] = (x(q) - x(v[j])) * (x(q) - x(v[j])) + f[v[j]];
  }
}

// Squared normalized distance from every cell to the nearest non-closure
// cell; kInf when the map has no non-closure cell.
Eigen::ArrayXXd squared_distance_field(const ClosureMap& map) {
  const int nt = map.spec.n_theta;
  const int nd = map.spec.n_delta;
  const double s_theta = 1.0 / (nt - 1);
  const double s_delta = 1.0 / (nd - 1);

  Eigen::ArrayXXd field(nt, nd);
  std::vector<double> f(nd), d(nd);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nd; ++j) f[j] = map.cells(i, j) ? kInf : 0.0;
    edt_1d(f, s_delta, d);
    for (int j = 0; j < nd; ++j) field(i, j) = d[j];
  }
  std::vector<double> fc(nt), dc(nt);
  for (int j = 0; j < nd; ++j) {
    for (int i = 0; i < nt; ++i) fc[i] = field(i, j);
    edt_1d(fc, s_theta, dc);
    for (int i = 0; i < nt; ++i) field(i, j) = dc[i];
  }
  return field;
}

bool closure_at(const TrapezoidObject& obj, const SupportPair& supports, const PalmModel& palm,
                const Configuration& config) {
  try {
    return force_closure(contacts_from_config(obj, supports, palm, config));
  } catch (const NoValidPlacement&) {
    return false;
  }
}

}  // namespace

void validate(const GridSpec& spec) {
  if (spec.n_theta < 2 || spec.n_delta < 2)
    throw std::invalid_argument("grid: need at least 2 samples per axis");
  if (!(spec.theta_max > 0.0) || spec.theta_max > kThetaCap)
    throw std::invalid_argument("grid: theta_max must lie in (0, 80] degrees");
}

ClosureMap closure_map(const TrapezoidObject& obj, const SupportPair& supports,
                       const PalmModel& palm, const GridSpec& spec) {
  validate(spec);
  ClosureMap map;
  map.spec = spec;
  map.l_side = right_edge_length(obj);
  map.mu_c = palm.mu_c;
  map.cells.resize(spec.n_theta, spec.n_delta);
  for (int i = 0; i < spec.n_theta; ++i)
    for (int j = 0; j < spec.n_delta; ++j)
      map.cells(i, j) = closure_at(obj, supports, palm, {map.theta_at(i), map.delta_at(j)});
  return map;
}

double normalized_clearance(const ClosureMap& map, const Configuration& config) {
  static thread_local const ClosureMap* cached_map = nullptr;
  static thread_local Eigen::ArrayXXd cached_field;
  if (cached_map != &map || cached_field.rows() != map.spec.n_theta ||
      cached_field.cols() != map.spec.n_delta) {
    cached_field = squared_distance_field(map);
    cached_map = &map;
  }
  const double u = config.theta / map.spec.theta_max;
  const double v = map.l_side > 0.0 ? config.delta / map.l_side : 0.0;
  const int i = std::clamp(static_cast<int>(std::lround(u * (map.spec.n_theta - 1))), 0,
                           map.spec.n_theta - 1);
  const int j = std::clamp(static_cast<int>(std::lround(v * (map.spec.n_delta - 1))), 0,
                           map.spec.n_delta - 1);
  const double sq = cached_field(i, j);
  return sq == kInf ? std::numbers::sqrt2 : std::sqrt(sq);
}

TiltPlan plan_straight_path(const TrapezoidObject& obj, const SupportPair& supports,
                            const PalmModel& palm, const GridSpec& spec, int n_validate) {
  if (n_validate < 50) throw std::invalid_argument("n_validate must be >= 50");
  const ClosureMap map = closure_map(obj, supports, palm, spec);

  struct Candidate {
    int i;  // theta index of the target
    int j;  // delta index of the start
    double clearance;
  };
  std::vector<Candidate> candidates;
  std::vector<Configuration> samples(n_validate);
  for (int i = 1; i < spec.n_theta; ++i) {
    for (int j = 1; j < spec.n_delta; ++j) {
      // Path endpoints are exact grid configurations, so a non-closure
      // endpoint cell already fails exact re-validation.
      if (!map.cells(0, j) || !map.cells(i, 0)) continue;
      const double theta_t = map.theta_at(i);
      const double delta_0 = map.delta_at(j);
      double clearance = kInf;
      for (int k = 0; k < n_validate; ++k) {
        const double t = static_cast<double>(k) / (n_validate - 1);
        clearance = std::min(
            clearance, normalized_clearance(map, {t * theta_t, (1.0 - t) * delta_0}));
      }
      candidates.push_back({i, j, clearance});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.clearance != b.clearance) return a.clearance > b.clearance;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  });

  for (const Candidate& cand : candidates) {
    const double theta_t = map.theta_at(cand.i);
    const double delta_0 = map.delta_at(cand.j);
    bool ok = true;
    for (int k = 0; k < n_validate && ok; ++k) {
      const double t = static_cast<double>(k) / (n_validate - 1);
      samples[k] = {t * theta_t, (1.0 - t) * delta_0};
      ok = closure_at(obj, supports, palm, samples[k]);
    }
    if (!ok) continue;
    TiltPlan plan;
    plan.start = {0.0, delta_0};
    plan.target = {theta_t, 0.0};
    plan.clearance = cand.clearance;
    plan.waypoints = samples;
    return plan;
  }
  throw NoFeasiblePath("no straight-line candidate passes exact re-validation");
}

std::pair<Pose2, double> palm_pose_for_config(const TrapezoidObject& obj,
                                              const SupportPair& supports,
                                              const PalmModel& palm,
                                              const Configuration& config) {
  const double l_side = right_edge_length(obj);
  if (config.delta < 0.0 || config.delta > l_side + kGeomTol)
    throw DeltaOutOfRange("delta out of range");
  if (config.delta > palm.tip_arc_length + kGeomTol)
    throw ArcBudgetExceeded("contact parameter exceeds palm tip arc budget");

  const Pose2 obj_pose = object_pose_from_theta(obj, supports, config.theta);
  const Line2 edge = right_edge_line_world(obj, obj_pose);
  const Vec2 contact = edge.point + config.delta * edge.direction;

  // Rolling contact: arc point at parameter lambda = delta meets the edge,
  // arc tangent maps onto the edge direction. In the palm frame the tip Y
  // is the origin, the arc center sits at (0, R), and the arc point at
  // parameter s is (R sin(s/R), R (1 - cos(s/R))).
  const double alpha = config.delta / palm.radius;
  const Vec2 arc_point(palm.radius * std::sin(alpha), palm.radius * (1.0 - std::cos(alpha)));
  const double rot = angle_of(edge.direction) - alpha;
  const Vec2 translation = contact - Eigen::Rotation2Dd(rot) * arc_point;
  return {Pose2(rot, translation), config.delta};
}

Vec2 palm_chord_direction(const PalmModel& palm, const Pose2& pose) {
  const double alpha_tip = palm.tip_arc_length / palm.radius;
  Vec2 chord_body(1.0, 0.0);  // degenerate arc: tangent at Y
  if (alpha_tip > kGeomTol)
    chord_body = Vec2(palm.radius * std::sin(alpha_tip),
                      palm.radius * (1.0 - std::cos(alpha_tip)))
                     .normalized();
  return pose.rotation() * chord_body;
}

PalmTrajectory palm_trajectory(const TiltPlan& plan, const TrapezoidObject& obj,
                               const SupportPair& supports, const PalmModel& palm) {
  PalmTrajectory traj;
  traj.poses.reserve(plan.waypoints.size());
  traj.contact_params.reserve(plan.waypoints.size());
  for (const Configuration& wp : plan.waypoints) {
    auto [pose, lambda] = palm_pose_for_config(obj, supports, palm, wp);
    traj.poses.push_back(pose);
    traj.contact_params.push_back(lambda);
  }

  const ContactSet target = contacts_from_config(obj, supports, palm, plan.target);
  traj.critical_angle = critical_palm_angle(target.a, target.b, target.c.position);

  // Restraint check against the palm approximated as its chord segment: the
  // contact normal at the target is the chord's perpendicular, oriented to
  // push the object.
  const Vec2 chord = palm_chord_direction(palm, traj.poses.back());
  Vec2 n_chord = perp(chord);
  if (n_chord.dot(target.c.normal) < 0.0) n_chord = -n_chord;
  ContactSet restraint = target;
  restraint.c.normal = n_chord;
  restraint.c.tangent_slip.reset();
  traj.restrained_at_target = !ungrasp_cw_feasible(restraint);
  return traj;
}

bool map_containment(const ClosureMap& a, const ClosureMap& b) {
  if (a.spec.n_theta != b.spec.n_theta || a.spec.n_delta != b.spec.n_delta ||
      a.spec.theta_max != b.spec.theta_max || a.l_side != b.l_side)
    throw SpecMismatch("closure maps sample different grids");
  return !(a.cells && !b.cells).any();
}

}  // namespace tiltgrasp
