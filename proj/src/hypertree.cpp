#include "kmetric/hypertree.hpp"

#include <algorithm>
#include <set>

#include "kmetric/parallel.hpp"

namespace kmetric {

WeightedComplex::WeightedComplex(int n_, int k_, std::vector<Facet> f) : n(n_), k(k_), facets(std::move(f)) {
  if (k < 2 || n < k) throw ArgumentError("weighted complex needs 2 <= k <= n");
  std::set<SimplexKey> seen;
  for (const auto& facet : facets) {
    if (facet.simplex.size() != k) throw ArgumentError("facet must have k vertices");
    if (facet.simplex.vertices().back() >= n) throw ArgumentError("facet vertex out of range");
    if (!(facet.weight > 0.0) || !std::isfinite(facet.weight)) throw ArgumentError("facet weights must be positive");
    if (!seen.insert(facet.simplex).second) throw ArgumentError("duplicate facet");
  }
}

std::vector<std::int64_t> WeightedComplex::facet_indices() const {
  std::vector<std::int64_t> out;
  out.reserve(facets.size());
  for (const auto& f : facets) out.push_back(simplex_index(n, f.simplex));
  return out;
}

Eigen::VectorXd WeightedComplex::weight_vector() const {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(simplex_count(n, k - 1));
  for (const auto& f : facets) w(simplex_index(n, f.simplex)) = f.weight;
  return w;
}

std::vector<bool> WeightedComplex::mask() const {
  std::vector<bool> m(static_cast<std::size_t>(simplex_count(n, k - 1)), false);
  for (auto i : facet_indices()) m[static_cast<std::size_t>(i)] = true;
  return m;
}

KMetric mbc_metric(const WeightedComplex& K, int jobs) {
  const auto simplices = enumerate_simplices(K.n, K.k - 1);
  const Eigen::VectorXd w = K.weight_vector();
  const auto mask = K.mask();
  const LinearChainOperator bnd = boundary_operator(K.n, K.k - 1);
  Eigen::VectorXd values(static_cast<Eigen::Index>(simplices.size()));
  parallel_for(0, static_cast<std::int64_t>(simplices.size()), jobs, [&](std::int64_t t) {
    const Chain target(K.n, K.k - 2, bnd.matrix.col(t));
    try {
      values(t) = min_bounding_chain(w, target, &mask).cost;
    } catch (const BoundaryNotFillable&) {
      std::string name;
      for (int v : simplices[static_cast<std::size_t>(t)].vertices()) name += (name.empty() ? "" : ",") + std::to_string(v);
      throw BoundaryNotFillable("complex does not fill all boundaries: no bounding chain for (" + name + ")");
    }
  });
  return KMetric(K.n, K.k, std::move(values));
}

std::int64_t numerical_rank(Eigen::MatrixXd M, double tol) {
  std::int64_t rank = 0;
  const Eigen::Index rows = M.rows();
  for (Eigen::Index c = 0; c < M.cols() && rank < rows; ++c) {
    Eigen::Index pivot;
    const double mag = M.col(c).tail(rows - rank).cwiseAbs().maxCoeff(&pivot);
    if (mag <= tol) continue;
    pivot += rank;
    M.row(pivot).swap(M.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const double f = M(r, c) / M(rank, c);
      if (f != 0.0) M.row(r) -= f * M.row(rank);
    }
    ++rank;
  }
  return rank;
}

HypertreeReport is_hypertree(const WeightedComplex& K) {
  HypertreeReport rep;
  const auto cols = K.facet_indices();
  rep.facet_count = static_cast<std::int64_t>(cols.size());
  rep.boundary_rank = cols.empty() ? 0 : numerical_rank(restricted_boundary_matrix(K.n, K.k - 1, cols));
  const std::int64_t chains = simplex_count(K.n, K.k - 2);
  if (K.k == 2)
    rep.cycle_dimension = chains - 1;
  else
    rep.cycle_dimension = chains - numerical_rank(boundary_matrix<double>(K.n, K.k - 2));
  rep.acyclic = rep.boundary_rank == rep.facet_count;
  rep.fills_boundaries = rep.boundary_rank == rep.cycle_dimension;
  return rep;
}

ChainMatrix hypertree_to_l1(const WeightedComplex& K) {
  const auto rep = is_hypertree(K);
  if (!rep.is_hypertree()) throw ArgumentError("complex is not a hypertree");
  const auto cols = K.facet_indices();
  const Eigen::MatrixXd B = restricted_boundary_matrix(K.n, K.k - 1, cols);
  Eigen::VectorXd w(static_cast<Eigen::Index>(K.facets.size()));
  for (std::size_t j = 0; j < K.facets.size(); ++j) w(static_cast<Eigen::Index>(j)) = K.facets[j].weight;
  const Eigen::MatrixXd W = w.asDiagonal();

  // B^T has full row rank on a hypertree, so F = B (B^T B)^{-1} W is the minimum-norm solution.
  const Eigen::MatrixXd gram = B.transpose() * B;
  const Eigen::MatrixXd F = B * gram.ldlt().solve(W);
  const double residual = (B.transpose() * F - W).lpNorm<Eigen::Infinity>();
  if (!(residual <= 1e-8 * std::max(1.0, w.maxCoeff())))
    throw SolverError("facet column is not a coboundary (residual " + std::to_string(residual) + ")");
  return ChainMatrix(K.n, K.k, F);
}

}  // namespace kmetric
