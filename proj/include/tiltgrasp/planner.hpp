#pragma once

// Configuration-space planning: force-closure feasibility sweep over
// (theta, delta), straight-line secure-tilt path selection with clearance,
// palm pose synthesis under pure rolling, and target-restraint verification.

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tiltgrasp/mobility.hpp"
#include "tiltgrasp/scene.hpp"

namespace tiltgrasp {

/// Uniform sampling grid over [0, theta_max] x [0, L_side].
struct GridSpec {
  double theta_max = 60.0 * kPi / 180.0;
  int n_theta = 100;
  int n_delta = 100;
};

void validate(const GridSpec& spec);

/// Binary force-closure verdicts; cell (i, j) is the configuration
/// theta_i = i * theta_max / (n_theta - 1), delta_j = j * L_side / (n_delta - 1).
struct ClosureMap {
  GridSpec spec;
  double l_side = 0.0;
  double mu_c = 0.0;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> cells;  // n_theta x n_delta

  double theta_at(int i) const { return spec.theta_max * i / (spec.n_theta - 1); }
  double delta_at(int j) const { return l_side * j / (spec.n_delta - 1); }
};

/// Straight-line tilt path from (theta = 0, delta_0) to (theta_T, delta = 0).
/// clearance is the smallest normalized distance of any waypoint to a
/// non-closure map cell.
struct TiltPlan {
  Configuration start;
  Configuration target;
  double clearance = 0.0;
  std::vector<Configuration> waypoints;
};

/// Palm poses realizing a plan under pure rolling, plus the restraint
/// verdict at the target.
struct PalmTrajectory {
  std::vector<Pose2> poses;
  std::vector<double> contact_params;  // arc-length on the palm, equals delta
  bool restrained_at_target = false;
  double critical_angle = 0.0;  // radians, in [0, pi)
};

/// Sweeps force_closure over the grid. Configurations with no valid
/// placement count as non-closure. Deterministic.
ClosureMap closure_map(const TrapezoidObject& obj, const SupportPair& supports,
                       const PalmModel& palm, const GridSpec& spec);

/// Normalized distance (axes scaled to unit squares) from a configuration
/// to the nearest non-closure cell center of the map; full diagonal when
/// every cell is closed.
double normalized_clearance(const ClosureMap& map, const Configuration& config);

/// Picks the grid-aligned straight path with maximal clearance whose
/// n_validate uniform samples all pass exact force closure. Candidates tie-
/// break toward larger theta_T, then larger delta_0. Throws NoFeasiblePath.
TiltPlan plan_straight_path(const TrapezoidObject& obj, const SupportPair& supports,
                            const PalmModel& palm, const GridSpec& spec, int n_validate = 50);

/// Pose of the palm with its arc point at parameter lambda = delta placed on
/// the world contact, arc tangent parallel to the object's right edge, palm
/// body outward. Returns the pose and the arc parameter. Throws
/// ArcBudgetExceeded when delta exceeds the tip arc budget.
std::pair<Pose2, double> palm_pose_for_config(const TrapezoidObject& obj,
                                              const SupportPair& supports,
                                              const PalmModel& palm,
                                              const Configuration& config);

/// Palm poses along a plan's waypoints; evaluates the critical palm angle
/// and whether the rolled-out final palm orientation kinematically
/// restrains the object (reported, not enforced).
PalmTrajectory palm_trajectory(const TiltPlan& plan, const TrapezoidObject& obj,
                               const SupportPair& supports, const PalmModel& palm);

/// Direction of the palm's chord (tip Y to the end of the contact arc) for
/// a given palm pose; the straight-segment stand-in used for restraint.
Vec2 palm_chord_direction(const PalmModel& palm, const Pose2& pose);

/// True iff every closure cell of a is also closed in b. Throws
/// SpecMismatch unless the grids agree.
bool map_containment(const ClosureMap& a, const ClosureMap& b);

}  // namespace tiltgrasp
