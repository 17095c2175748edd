#pragma once

#include <Eigen/Dense>

#include "kmetric/errors.hpp"
#include "kmetric/simplex.hpp"

namespace kmetric {

/// Real coefficients on the canonical list of dim-simplices over n vertices.
struct Chain {
  int n = 0;
  int dim = 0;
  Eigen::VectorXd coeffs;

  Chain() = default;
  Chain(int n_, int dim_);  // zero chain
  Chain(int n_, int dim_, Eigen::VectorXd c);

  /// Indicator 1_s of a single oriented simplex; sign follows the orientation of `sequence`.
  static Chain indicator(int n, std::span<const int> sequence);
  static Chain indicator(int n, const SimplexKey& s) { return indicator(n, s.vertices()); }

  double operator[](const SimplexKey& s) const { return coeffs(simplex_index(n, s)); }
};

/// Dense matrix between chain spaces: rows index dst_dim simplices, columns src_dim simplices.
/// Source and target share the vertex count n except for the apex projection and lift.
struct LinearChainOperator {
  int n = 0;  ///< vertices of the source complex
  int src_dim = 0;
  int dst_dim = 0;
  Eigen::MatrixXd matrix;
  int dst_n = -1;  ///< vertices of the target complex; -1 means n

  int target_n() const { return dst_n < 0 ? n : dst_n; }
  LinearChainOperator transpose() const { return {target_n(), dst_dim, src_dim, matrix.transpose(), n}; }
};

/// Boundary matrix ∂_dim with entries in {-1, 0, +1}, shape C(n,dim) x C(n,dim+1).
/// Templated so that integer identities can be checked exactly.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> boundary_matrix(int n, int dim) {
  if (dim < 1 || dim >= n) throw ArgumentError("boundary operator needs 1 <= dim < n");
  const std::int64_t rows = simplex_count(n, dim - 1);
  const std::int64_t cols = simplex_count(n, dim);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> B =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(rows, cols);
  const auto simplices = enumerate_simplices(n, dim);
  std::vector<int> face(static_cast<std::size_t>(dim));
  for (std::int64_t c = 0; c < cols; ++c) {
    const auto& v = simplices[static_cast<std::size_t>(c)].vertices();
    for (int i = 0; i <= dim; ++i) {
      std::size_t w = 0;
      for (int j = 0; j <= dim; ++j)
        if (j != i) face[w++] = v[static_cast<std::size_t>(j)];
      B(simplex_index(n, face), c) = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    }
  }
  return B;
}

LinearChainOperator boundary_operator(int n, int dim);

/// δ_dim = ∂_{dim+1}^T.
LinearChainOperator coboundary_operator(int n, int dim);

Chain apply(const LinearChainOperator& op, const Chain& c);

/// Same as boundary_matrix but with columns restricted to `cols` (canonical indices).
Eigen::MatrixXd restricted_boundary_matrix(int n, int dim, std::span<const std::int64_t> cols);

}  // namespace kmetric
