#include "kmetric/apex.hpp"

#include <string>

namespace kmetric {

ApexExtensionResult apex_extend(const KMetric& d) {
  const int n = d.n();
  const int apex = n;
  const auto simplices = enumerate_simplices(n + 1, d.k());
  Eigen::VectorXd values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(simplices.size()));
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& v = simplices[i].vertices();
    if (v.back() != apex) continue;
    values(static_cast<Eigen::Index>(i)) = d.values()(simplex_index(n, std::span<const int>(v.data(), v.size() - 1)));
  }
  return {KMetric(n + 1, d.k() + 1, std::move(values)), apex};
}

LinearChainOperator project_operator(int n, int h) {
  if (h < 1 || h > n) throw ArgumentError("projection needs 1 <= h <= n, got h=" + std::to_string(h));
  const auto src = enumerate_simplices(n + 1, h);
  LinearChainOperator op{n + 1, h, h - 1, Eigen::MatrixXd::Zero(simplex_count(n, h - 1), static_cast<Eigen::Index>(src.size())), n};
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto& v = src[j].vertices();
    // Apex sits last in sorted order, so dropping it keeps the standard orientation.
    if (v.back() != n) continue;
    op.matrix(simplex_index(n, std::span<const int>(v.data(), v.size() - 1)), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return op;
}

LinearChainOperator lift_operator(int n, int h) {
  return project_operator(n, h).transpose();
}

ChainMatrix apex_extend_chain_matrix(const ChainMatrix& F) {
  const LinearChainOperator lift = lift_operator(F.n, F.k - 1);
  return ChainMatrix(F.n + 1, F.k + 1, lift.matrix * F.data);
}

}  // namespace kmetric
