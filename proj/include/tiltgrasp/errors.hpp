#pragma once

#include <stdexcept>
#include <string>

namespace tiltgrasp {

/// Object cannot be posed without penetrating a support.
struct NoValidPlacement : std::runtime_error {
  explicit NoValidPlacement(const std::string& what) : std::runtime_error(what) {}
};

/// Palm contact parameter outside the physical right edge.
struct DeltaOutOfRange : std::runtime_error {
  explicit DeltaOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Tilt angle outside [0, theta_cap].
struct ThetaOutOfRange : std::runtime_error {
  explicit ThetaOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Sliding-mode wrench requested for a contact without a slip direction.
struct MissingSlipDirection : std::runtime_error {
  explicit MissingSlipDirection(const std::string& what) : std::runtime_error(what) {}
};

/// Friction-cone edge rays of B do not both meet the edge line.
struct DegenerateEdgeImages : std::runtime_error {
  explicit DegenerateEdgeImages(const std::string& what) : std::runtime_error(what) {}
};

/// Contact normal lines are parallel; no concurrency point exists.
struct ParallelNormals : std::runtime_error {
  explicit ParallelNormals(const std::string& what) : std::runtime_error(what) {}
};

/// Requested contact parameter exceeds the palm's arc-length budget.
struct ArcBudgetExceeded : std::runtime_error {
  explicit ArcBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// No straight-line candidate survives exact re-validation.
struct NoFeasiblePath : std::runtime_error {
  explicit NoFeasiblePath(const std::string& what) : std::runtime_error(what) {}
};

/// Two closure maps with different grids cannot be compared.
struct SpecMismatch : std::runtime_error {
  explicit SpecMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Scene file failed schema or invariant validation.
struct SceneFormatError : std::runtime_error {
  explicit SceneFormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tiltgrasp
