#include "kmetric/volume.hpp"

#include <stdexcept>

namespace kmetric {

PointCloud::PointCloud(Eigen::MatrixXd p) : points(std::move(p)) {
  if (points.cols() < 1) throw ArgumentError("point cloud needs ambient dimension >= 1");
  if (!points.allFinite()) throw ArgumentError("point coordinates must be finite");
}

std::vector<std::vector<int>> axis_subsets(int m, int r) {
  std::vector<std::vector<int>> out;
  if (r == 0) {
    out.emplace_back();
    return out;
  }
  for (const auto& s : enumerate_simplices(m, r - 1)) out.push_back(s.vertices());
  return out;
}

namespace {

Eigen::MatrixXd select_columns(const Eigen::Ref<const Eigen::MatrixXd>& pts, const std::vector<int>& axes) {
  Eigen::MatrixXd out(pts.rows(), static_cast<Eigen::Index>(axes.size()));
  for (std::size_t j = 0; j < axes.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = pts.col(axes[j]);
  return out;
}

}  // namespace

Eigen::VectorXd projected_volume_vector(const Eigen::Ref<const Eigen::MatrixXd>& pts) {
  const int k = static_cast<int>(pts.rows());
  const int m = static_cast<int>(pts.cols());
  if (k < 2 || k - 1 > m) throw ArgumentError("projected volumes need 2 <= k <= m + 1");
  const auto subsets = axis_subsets(m, k - 1);
  Eigen::VectorXd out(static_cast<Eigen::Index>(subsets.size()));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = std::abs(signed_volume(select_columns(pts, subsets[i])));
  return out;
}

double nu_kp(const Eigen::Ref<const Eigen::MatrixXd>& pts, const NormSpec& norm) {
  return norm(projected_volume_vector(pts));
}

KMetric volume_metric(const PointCloud& cloud, int k) {
  const int n = cloud.n();
  const auto simplices = enumerate_simplices(n, k - 1);
  Eigen::VectorXd values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(simplices.size()));
  if (k <= cloud.m() + 1) {
    Eigen::MatrixXd pts(k, cloud.m());
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      for (int r = 0; r < k; ++r) pts.row(r) = cloud.points.row(simplices[i][r]);
      values(static_cast<Eigen::Index>(i)) = gram_volume(pts);
    }
  }
  return KMetric(n, k, std::move(values));
}

ChainMatrix volume_to_coboundary(const PointCloud& cloud, int k) {
  const int n = cloud.n();
  const int m = cloud.m();
  if (k < 2 || k - 1 > m) throw ArgumentError("volume to coboundary needs 2 <= k <= m + 1");
  const auto faces = enumerate_simplices(n, k - 2);
  const auto subsets = axis_subsets(m, k - 1);
  Eigen::MatrixXd F(static_cast<Eigen::Index>(faces.size()), static_cast<Eigen::Index>(subsets.size()));
  // Cone over the origin: prepend 0 to the k-1 projected points.
  Eigen::MatrixXd cone = Eigen::MatrixXd::Zero(k, k - 1);
  for (std::size_t col = 0; col < subsets.size(); ++col) {
    const Eigen::MatrixXd projected = select_columns(cloud.points, subsets[col]);
    for (std::size_t s = 0; s < faces.size(); ++s) {
      for (int r = 0; r < k - 1; ++r) cone.row(r + 1) = projected.row(faces[s][r]);
      F(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(col)) = signed_volume(cone);
    }
  }
  return ChainMatrix(n, k, std::move(F));
}

SideBound min_max_side_bound_check(const Eigen::Ref<const Eigen::MatrixXd>& pts) {
  if (pts.rows() != 3) throw ArgumentError("side bound needs exactly three points");
  const double a = (pts.row(0) - pts.row(1)).norm();
  const double b = (pts.row(0) - pts.row(2)).norm();
  const double c = (pts.row(1) - pts.row(2)).norm();
  const double lo = std::min({a, b, c});
  const double hi = std::max({a, b, c});
  SideBound out{lo, 0.0};
  if (hi > 0.0) {
    const double area = pts.cols() >= 2 ? gram_volume(pts) : 0.0;
    out.lower_bound = 2.0 * area / hi;
  }
  if (out.mu_minus < out.lower_bound - 1e-9) throw std::logic_error("side-length bound violated");
  return out;
}

}  // namespace kmetric
