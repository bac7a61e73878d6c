#pragma once

// Wrench-space tests: friction-cone edge wrenches, LP-backed cone
// membership, force-closure and the two-contact wedge condition.

#include <array>
#include <span>

#include "tiltgrasp/scene.hpp"
#include "tiltgrasp/wrench.hpp"

namespace tiltgrasp {

/// The two friction-cone edge wrenches of a contact, forces
/// normalize(n +/- mu * t) with t = perp(n). For mu = 0 both coincide with
/// the normal. Order: [0] = plus edge, [1] = minus edge.
std::array<Wrench, 2> cone_edge_wrenches(const ContactPoint& c);

/// Single edge wrench of a sliding contact, friction opposing the slip:
/// force normalize(n - mu * tangent_slip). Throws MissingSlipDirection.
Wrench sliding_edge_wrench(const ContactPoint& c);

/// Sticky-contact generators: {n, +t, -t}, the closed half-space of forces
/// with non-negative normal component. Adhesion (pulling) is not granted.
std::array<Wrench, 3> sticky_wrenches(const ContactPoint& c);

/// All cone-edge generators of the three contacts (6 columns).
WrenchCone wrench_cone_full(const ContactSet& contacts);

/// Sliding edges at A and B plus C's full cone (4 columns); the generator
/// set of the three-contact sliding tilt.
WrenchCone wrench_cone_sliding(const ContactSet& contacts);

/// Sliding edges at A and B plus a sticky C (5 columns).
WrenchCone wrench_cone_sticky(const ContactSet& contacts);

/// True iff the target is a non-negative combination of the generators
/// (LP feasibility, residual tolerance 1e-9).
bool positive_span_feasible(const Eigen::Matrix3Xd& generators, const Wrench& target);
bool positive_span_feasible(const WrenchCone& cone, const Wrench& target);

/// Force closure of an arbitrary contact list: the cone-edge generator
/// matrix has rank 3 and admits coefficients k >= 1 with F k = 0.
/// Mass-independent.
bool force_closure(std::span<const ContactPoint> contacts);
bool force_closure(const ContactSet& contacts);

/// Planar two-contact wedge: each friction cone contains the line of sight
/// to the other contact.
bool two_contact_wedge(const ContactPoint& b, const ContactPoint& c);

}  // namespace tiltgrasp
