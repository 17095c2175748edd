#pragma once

#include <vector>

#include "kmetric/coboundary.hpp"
#include "kmetric/kmetric.hpp"

namespace kmetric {

struct Facet {
  SimplexKey simplex;  ///< dimension k-1
  double weight = 1.0;
};

/// Positively weighted (k-1)-simplices over the complete (k-2)-skeleton on n vertices.
struct WeightedComplex {
  int n = 0;
  int k = 0;
  std::vector<Facet> facets;

  WeightedComplex() = default;
  WeightedComplex(int n_, int k_, std::vector<Facet> f);

  /// Canonical indices of the facets, in facet order.
  std::vector<std::int64_t> facet_indices() const;
  /// Full-length weight vector, zero off the facets.
  Eigen::VectorXd weight_vector() const;
  std::vector<bool> mask() const;
};

/// Minimum-bounding-chain k-metric of the complex. Throws BoundaryNotFillable naming the
/// first simplex whose boundary has no filling.
KMetric mbc_metric(const WeightedComplex& K, int jobs = 1);

struct HypertreeReport {
  std::int64_t facet_count = 0;
  std::int64_t boundary_rank = 0;     ///< rank of the facet-restricted boundary matrix
  std::int64_t cycle_dimension = 0;   ///< dim ker ∂_{k-2} of the complete skeleton (reduced for k = 2)
  bool acyclic = false;               ///< no (k-1)-cycles
  bool fills_boundaries = false;      ///< every (k-2)-cycle bounds
  bool is_hypertree() const { return acyclic && fills_boundaries; }
};

inline constexpr double kRankTol = 1e-9;

/// Rank by Gaussian elimination with partial pivoting; pivots below `tol` count as zero.
std::int64_t numerical_rank(Eigen::MatrixXd M, double tol = kRankTol);

HypertreeReport is_hypertree(const WeightedComplex& K);

/// Chain matrix F, one column per facet, whose l1 coboundary metric is the hypertree metric.
/// Solves δ F = diag(w) on the facet rows by the minimum-norm normal equations.
ChainMatrix hypertree_to_l1(const WeightedComplex& K);

}  // namespace kmetric
