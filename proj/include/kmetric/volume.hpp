#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "kmetric/coboundary.hpp"
#include "kmetric/errors.hpp"
#include "kmetric/kmetric.hpp"

namespace kmetric {

/// n points in R^m, one per row.
struct PointCloud {
  Eigen::MatrixXd points;

  PointCloud() = default;
  explicit PointCloud(Eigen::MatrixXd p);

  int n() const { return static_cast<int>(points.rows()); }
  int m() const { return static_cast<int>(points.cols()); }
};

namespace detail {
inline double factorial(int r) {
  double f = 1.0;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}
}  // namespace detail

/// Signed (k-1)-volume of k points in R^{k-1} (rows), 1/(k-1)! det(x_2 - x_1, ..., x_k - x_1).
template <typename Derived>
typename Derived::Scalar signed_volume(const Eigen::MatrixBase<Derived>& pts) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index k = pts.rows();
  if (k < 2 || pts.cols() != k - 1) throw ArgumentError("signed volume needs k >= 2 points in dimension k-1");
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A =
      (pts.bottomRows(k - 1).rowwise() - pts.row(0)).transpose();
  return A.partialPivLu().determinant() / Scalar(detail::factorial(static_cast<int>(k - 1)));
}

/// Unsigned (k-1)-volume of k points in R^m via the Gram determinant.
template <typename Derived>
typename Derived::Scalar gram_volume(const Eigen::MatrixBase<Derived>& pts) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index k = pts.rows();
  if (k < 2) throw ArgumentError("gram volume needs at least two points");
  if (k > pts.cols() + 1) throw ArgumentError("gram volume needs k <= m + 1");
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A =
      (pts.bottomRows(k - 1).rowwise() - pts.row(0)).transpose();
  const Scalar det = (A.transpose() * A).eval().partialPivLu().determinant();
  using std::sqrt;
  return sqrt(std::max(Scalar(0), det)) / Scalar(detail::factorial(static_cast<int>(k - 1)));
}

/// Volumes of the projections onto every (k-1)-subset of axes, subsets in lexicographic order.
Eigen::VectorXd projected_volume_vector(const Eigen::Ref<const Eigen::MatrixXd>& pts);

/// l_p norm of projected_volume_vector.
double nu_kp(const Eigen::Ref<const Eigen::MatrixXd>& pts, const NormSpec& norm);

/// d(t) = gram volume of the k selected points. Allowed (all zero) when k > m + 1.
KMetric volume_metric(const PointCloud& cloud, int k);

/// One column per axis subset I, |I| = k-1; column I holds the signed cone volume
/// svol(0, pi_I(y_1), ..., pi_I(y_{k-1})) on each (k-2)-simplex.
ChainMatrix volume_to_coboundary(const PointCloud& cloud, int k);

struct SideBound {
  double mu_minus = 0.0;     ///< shortest side
  double lower_bound = 0.0;  ///< 2 area / longest side
};

/// Shortest side versus twice the area over the longest side, for a triangle in R^m.
SideBound min_max_side_bound_check(const Eigen::Ref<const Eigen::MatrixXd>& pts);

/// Lexicographic subsets of size r from [0, m).
std::vector<std::vector<int>> axis_subsets(int m, int r);

}  // namespace kmetric
