#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "kmetric/chain.hpp"
#include "kmetric/simplex.hpp"

namespace kmetric {

/// Modeling tolerance for metric comparisons (relative, floored at 1).
inline constexpr double kMetricTol = 1e-6;

/// Symmetric function on k-subsets of [0, n); zero on tuples with repeats.
class KMetric {
 public:
  KMetric() = default;
  /// `values` is indexed by canonical (k-1)-simplex order; entries must be finite and >= 0.
  KMetric(int n, int k, Eigen::VectorXd values);

  int n() const { return n_; }
  int k() const { return k_; }
  const Eigen::VectorXd& values() const { return values_; }

  /// Evaluate on an ordered tuple of k vertices.
  double operator()(std::span<const int> tuple) const;
  double operator()(std::initializer_list<int> tuple) const { return (*this)(std::span<const int>(tuple.begin(), tuple.size())); }
  double at(const SimplexKey& s) const { return values_(simplex_index(n_, s)); }

  std::int64_t size() const { return values_.size(); }

 private:
  int n_ = 0;
  int k_ = 0;
  Eigen::VectorXd values_;
};

struct WeakViolation {
  SimplexKey simplex;
  int y = -1;
  double value = 0.0;        ///< d(t)
  double replacement = 0.0;  ///< sum of the k single-vertex replacements
};

struct StrongWitness {
  SimplexKey simplex;
  Chain chain;
  double cost = 0.0;
  double value = 0.0;  ///< d(t)
};

struct VerificationReport {
  bool is_weak = false;
  std::optional<bool> is_strong;
  std::vector<SimplexKey> pseudo_violations;  ///< distinct tuples with value 0
  std::vector<WeakViolation> weak_violations;
  std::optional<StrongWitness> strong_witness;
  /// min over checked simplices of (bounding-chain cost - d(t)); only set by check_strong.
  std::optional<double> strong_margin;
  std::int64_t lps_solved = 0;

  bool is_pseudo() const { return !pseudo_violations.empty(); }
};

struct VerifyOptions {
  double tol = kMetricTol;
  bool exhaustive = false;  ///< keep solving after the first failing simplex
  int jobs = 1;
};

/// Checks the simplex inequality for every k-subset and every extra vertex y.
VerificationReport check_weak(const KMetric& d, double tol = kMetricTol);

struct BoundingChain {
  double cost = 0.0;
  Chain chain;
};

/// argmin of sum |alpha(tau)| w(tau) over (k-1)-chains with boundary `target`,
/// optionally restricted to the simplices flagged in `mask`.
/// Throws BoundaryNotFillable when no such chain exists.
BoundingChain min_bounding_chain(const Eigen::VectorXd& weights, const Chain& target,
                                 const std::vector<bool>* mask = nullptr);

/// Runs check_weak, then one bounding-chain LP per (k-1)-simplex.
VerificationReport check_strong(const KMetric& d, const VerifyOptions& opts = {});

/// true when `lhs` exceeds `rhs` by more than the relative tolerance.
inline bool exceeds(double lhs, double rhs, double tol) { return lhs > rhs + tol * std::max(1.0, std::abs(lhs)); }

}  // namespace kmetric
