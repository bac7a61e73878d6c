#pragma once

// Qualitative tilt mechanics. The images B'1/B'2 of the wall contact B on
// the line of the object's right edge, cast along B's friction-cone edges,
// split the edge line into three bands. The band holding the palm contact C
// decides how the object can start tilting:
//   {B'1 C B'2}  C inside B's cone        -> two-contact wedge tilting
//   {C B'1 B'2}  C above both images      -> three-contact sliding tilting
//   {B'1 B'2 C}  C below both images      -> only a sticky palm can help
// Plus moment labeling, Reuleaux rotation-center labeling and the critical
// palm orientation at the tilt target.

#include <optional>

#include "tiltgrasp/closure.hpp"
#include "tiltgrasp/scene.hpp"

namespace tiltgrasp {

/// Images of B on the edge line under the two friction-cone edge rays,
/// ordered so that param(b1) >= param(b2). Parameters are signed arc
/// lengths along the line's direction from its base point.
struct EdgeImagePair {
  std::optional<Vec2> b1;
  std::optional<Vec2> b2;
  std::optional<double> b1_param;
  std::optional<double> b2_param;
};

enum class TiltMode { TwoContactWedge, ThreeContactSlide, StickyRequired, Infeasible };

enum class MomentLabel { Plus, Minus, PlusMinus, None };

/// Rotation senses a point permits as an instantaneous rotation center.
struct RotationLabel {
  bool ccw_allowed = false;
  bool cw_allowed = false;
};

/// Full classification detail backing tilt_mode; the CLI reports it.
struct TiltClassification {
  TiltMode mode = TiltMode::Infeasible;
  EdgeImagePair images;
  double c_param = 0.0;                 // C's parameter on the same line
  bool boundary_adjacent = false;       // C within tolerance of b1 or b2
  bool wedge = false;                   // two-contact wedge condition
  std::optional<bool> slide_balance;    // sliding-cone gravity balance, when tested
  std::optional<bool> sticky_balance;   // sticky-cone gravity balance, when tested
};

const char* to_string(TiltMode mode);

/// Casts both friction-cone edge rays from B and intersects them with the
/// edge line; hits are sorted by line parameter descending into (b1, b2).
EdgeImagePair b_prime_points(const ContactPoint& b, const Line2& edge_line);

/// Classifies how tilting can start at this configuration. Ties of C
/// against b1/b2 (within 1e-9 of the scene scale) classify into the wedge
/// band and are flagged boundary_adjacent. Throws DegenerateEdgeImages when
/// either image is missing.
TiltClassification classify_tilt(const ContactSet& contacts, const Wrench& gravity);

inline TiltMode tilt_mode(const ContactSet& contacts, const Wrench& gravity) {
  return classify_tilt(contacts, gravity).mode;
}

/// Moment-label of a point against a cone of point-force wrenches: Plus if
/// every generator's force line has non-negative moment about the point,
/// Minus if non-positive, PlusMinus if the point lies on every line, None
/// otherwise.
MomentLabel moment_label(const Vec2& point, const WrenchCone& cone);

/// Whether the cone can quasistatically balance gravity: -gravity lies in
/// the positive span of the generators.
bool gravity_balance_consistent(const WrenchCone& cone, const Wrench& gravity);

/// First-order rotation-center label of a point: sigma_i = perp(p_i - q).n_i
/// per contact; CCW needs all sigma_i >= 0, CW needs all <= 0.
RotationLabel reuleaux_label(const Vec2& point, const ContactSet& contacts);

/// True iff the object can escape by a clockwise rotation: the intersection
/// of the three half-planes {sigma_i <= 0} has non-empty interior (strict
/// LP feasibility with margin above 1e-9 of scene scale).
bool ungrasp_cw_feasible(const ContactSet& contacts);

/// Palm-segment angle in [0, pi) at which the three contact normal lines
/// become concurrent: the palm normal at c_pos must point along
/// (q* - c_pos), q* the intersection of A's and B's normal lines.
/// Throws ParallelNormals.
double critical_palm_angle(const ContactPoint& a, const ContactPoint& b, const Vec2& c_pos);

}  // namespace tiltgrasp
