#include "kmetric/chain.hpp"

#include <string>

namespace kmetric {

Chain::Chain(int n_, int dim_) : n(n_), dim(dim_), coeffs(Eigen::VectorXd::Zero(simplex_count(n_, dim_))) {}

Chain::Chain(int n_, int dim_, Eigen::VectorXd c) : n(n_), dim(dim_), coeffs(std::move(c)) {
  if (coeffs.size() != simplex_count(n, dim))
    throw ArgumentError("chain length " + std::to_string(coeffs.size()) + " does not match C(n, dim+1)");
}

Chain Chain::indicator(int n, std::span<const int> sequence) {
  const auto oriented = orient(sequence);
  Chain c(n, static_cast<int>(sequence.size()) - 1);
  c.coeffs(simplex_index(n, canonical_key(sequence))) = oriented.sign;
  return c;
}

LinearChainOperator boundary_operator(int n, int dim) {
  return {n, dim, dim - 1, boundary_matrix<double>(n, dim), n};
}

LinearChainOperator coboundary_operator(int n, int dim) {
  if (dim < 0 || dim + 1 >= n) throw ArgumentError("coboundary operator needs 0 <= dim < n-1");
  return boundary_operator(n, dim + 1).transpose();
}

Chain apply(const LinearChainOperator& op, const Chain& c) {
  if (c.n != op.n || c.dim != op.src_dim)
    throw ArgumentError("chain (n=" + std::to_string(c.n) + ", dim=" + std::to_string(c.dim) +
                        ") does not match operator source (n=" + std::to_string(op.n) +
                        ", dim=" + std::to_string(op.src_dim) + ")");
  return Chain(op.target_n(), op.dst_dim, op.matrix * c.coeffs);
}

Eigen::MatrixXd restricted_boundary_matrix(int n, int dim, std::span<const std::int64_t> cols) {
  if (dim < 1 || dim >= n) throw ArgumentError("boundary operator needs 1 <= dim < n");
  const auto simplices = enumerate_simplices(n, dim);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(simplex_count(n, dim - 1), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& s = simplices.at(static_cast<std::size_t>(cols[c]));
    for (int i = 0; i <= dim; ++i) B(simplex_index(n, s.face(i)), static_cast<Eigen::Index>(c)) = (i % 2 == 0) ? 1.0 : -1.0;
  }
  return B;
}

}  // namespace kmetric
