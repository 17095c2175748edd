#pragma once

#include <Eigen/Dense>
#include <string>

namespace kmetric::lp {

inline constexpr double kDefaultTol = 1e-9;

/// minimize c·x  subject to  A x = b,  x >= 0.
struct StandardFormLP {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

enum class Status { optimal, infeasible, unbounded };

std::string to_string(Status s);

struct LPSolution {
  Status status = Status::infeasible;
  Eigen::VectorXd x;  ///< basic feasible solution when optimal
  Eigen::VectorXd y;  ///< duals, one per equality row (zero on rows dropped as redundant)
  double objective = 0.0;
  int iterations = 0;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule.
/// Redundant rows are detected after phase one and dropped.
/// Throws SolverError when the final basis fails its residual checks.
LPSolution solve(const StandardFormLP& lp, double tol = kDefaultTol);

/// maximize obj·f  subject to  lo <= C f <= hi,  E f = 0,  f free.
///
/// f is split into f+ - f- with slacks on both sides of each C row. On return x holds f
/// (common mass of f+ and f- cancelled), y holds one multiplier per C row followed by one
/// per E row, and objective is obj·f. Non-optimal outcomes throw SolverError.
LPSolution solve_bounded_free(const Eigen::MatrixXd& C, const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                              const Eigen::MatrixXd& E, const Eigen::VectorXd& obj, double tol = kDefaultTol);

}  // namespace kmetric::lp
