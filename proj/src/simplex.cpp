#include "tiltgrasp/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace tiltgrasp::lp {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr int kMaxIterations = 1000;

// One simplex phase over the working matrix. Columns >= n_real are
// artificials and may never re-enter the basis once driven out.
// Bland's rule on both the entering and leaving choice rules out cycling.
Status run_phase(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                 std::vector<int>& basis, Eigen::Index n_enterable) {
  const Eigen::Index m = A.rows();

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Eigen::MatrixXd B(m, m);
    for (Eigen::Index i = 0; i < m; ++i) B.col(i) = A.col(basis[i]);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);

    const Eigen::VectorXd x_b = lu.solve(b);
    Eigen::VectorXd c_b(m);
    for (Eigen::Index i = 0; i < m; ++i) c_b[i] = c[basis[i]];
    const Eigen::VectorXd y = lu.transpose().solve(c_b);

    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n_enterable; ++j) {
      bool basic = false;
      for (Eigen::Index i = 0; i < m; ++i)
        if (basis[i] == j) basic = true;
      if (basic) continue;
      if (c[j] - y.dot(A.col(j)) < -kPivotTol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return Status::Optimal;

    const Eigen::VectorXd w = lu.solve(A.col(entering));
    Eigen::Index leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (w[i] <= kPivotTol) continue;
      const double ratio = std::max(x_b[i], 0.0) / w[i];
      if (ratio < best_ratio - kPivotTol ||
          (ratio < best_ratio + kPivotTol && (leaving < 0 || basis[i] < basis[leaving]))) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving < 0) return Status::Unbounded;
    basis[leaving] = static_cast<int>(entering);
  }
  return Status::Optimal;  // iteration cap; Bland's rule makes this unreachable
}

}  // namespace

Result solve(const Eigen::MatrixXd& A_in, const Eigen::VectorXd& b_in, const Eigen::VectorXd& c) {
  const Eigen::Index m = A_in.rows();
  const Eigen::Index n = A_in.cols();

  // Orient rows so b >= 0, then append an artificial identity block.
  Eigen::MatrixXd A(m, n + m);
  Eigen::VectorXd b = b_in;
  A.leftCols(n) = A_in;
  A.rightCols(m).setIdentity();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b[i] < 0.0) {
      b[i] = -b[i];
      A.row(i).head(n) = -A_in.row(i);
    }
  }

  std::vector<int> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = static_cast<int>(n + i);

  // Phase 1: minimize the artificial mass.
  Eigen::VectorXd c1 = Eigen::VectorXd::Zero(n + m);
  c1.tail(m).setOnes();
  run_phase(A, b, c1, basis, n + m);

  {
    Eigen::MatrixXd B(m, m);
    for (Eigen::Index i = 0; i < m; ++i) B.col(i) = A.col(basis[i]);
    const Eigen::VectorXd x_b = Eigen::PartialPivLU<Eigen::MatrixXd>(B).solve(b);
    double artificial_mass = 0.0;
    for (Eigen::Index i = 0; i < m; ++i)
      if (basis[i] >= n) artificial_mass += std::max(x_b[i], 0.0);
    const double scale = std::max(1.0, b.lpNorm<Eigen::Infinity>());
    if (artificial_mass > 1e-9 * scale) return Result{Status::Infeasible, artificial_mass, {}};
  }

  // Drive any zero-level artificials out of the basis where a real column
  // can replace them; rows that stay artificial are redundant.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    Eigen::MatrixXd B(m, m);
    for (Eigen::Index r = 0; r < m; ++r) B.col(r) = A.col(basis[r]);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    for (Eigen::Index j = 0; j < n; ++j) {
      bool basic = false;
      for (Eigen::Index r = 0; r < m; ++r)
        if (basis[r] == j) basic = true;
      if (basic) continue;
      const Eigen::VectorXd w = lu.solve(A.col(j));
      if (std::abs(w[i]) > 1e-7) {
        basis[i] = static_cast<int>(j);
        break;
      }
    }
  }

  // Phase 2 over the real columns only.
  Eigen::VectorXd c2 = Eigen::VectorXd::Zero(n + m);
  c2.head(n) = c;
  const Status st = run_phase(A, b, c2, basis, n);
  if (st == Status::Unbounded) return Result{Status::Unbounded, 0.0, {}};

  Eigen::MatrixXd B(m, m);
  for (Eigen::Index i = 0; i < m; ++i) B.col(i) = A.col(basis[i]);
  const Eigen::VectorXd x_b = Eigen::PartialPivLU<Eigen::MatrixXd>(B).solve(b);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = std::max(x_b[i], 0.0);
  return Result{Status::Optimal, c.dot(x), x};
}

bool nonneg_combination(const Eigen::Matrix3Xd& G, const Eigen::Vector3d& t,
                        Eigen::VectorXd* coefficients) {
  if (G.cols() == 0) return t.lpNorm<Eigen::Infinity>() <= 1e-9;
  const Result r = solve(G, t, Eigen::VectorXd::Zero(G.cols()));
  if (r.status != Status::Optimal) return false;
  const double residual = (G * r.x - t).lpNorm<Eigen::Infinity>();
  if (residual > 1e-9 * std::max(1.0, t.lpNorm<Eigen::Infinity>())) return false;
  if (coefficients) *coefficients = r.x;
  return true;
}

bool nonneg_combination_exists(const Eigen::Matrix3Xd& G, const Eigen::Vector3d& t) {
  return nonneg_combination(G, t, nullptr);
}

}  // namespace tiltgrasp::lp
