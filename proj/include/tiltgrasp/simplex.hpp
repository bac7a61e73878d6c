#pragma once

// Small dense linear programming. The problems solved here are tiny (at most
// four rows and a dozen columns), so the solver favours determinism and
// numerical transparency over speed: revised simplex with Bland's rule and a
// fresh basis factorization at every pivot.

#include <Eigen/Dense>

namespace tiltgrasp::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
};

/// Solves min c'x subject to Ax = b, x >= 0.
/// Rows of A must be at most its column count after adding artificials;
/// redundant rows are handled (artificial stays basic at zero level).
Result solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

/// True iff some k >= 0 satisfies G k = t with equality residual below
/// 1e-9 * max(1, |t|_inf).
bool nonneg_combination_exists(const Eigen::Matrix3Xd& G, const Eigen::Vector3d& t);

/// Same test, returning the coefficients when feasible.
bool nonneg_combination(const Eigen::Matrix3Xd& G, const Eigen::Vector3d& t,
                        Eigen::VectorXd* coefficients);

}  // namespace tiltgrasp::lp
