#include "kmetric/kmetric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kmetric/lp.hpp"
#include "kmetric/parallel.hpp"

namespace kmetric {

KMetric::KMetric(int n, int k, Eigen::VectorXd values) : n_(n), k_(k), values_(std::move(values)) {
  if (k < 2) throw ArgumentError("k-metric arity must be at least 2");
  if (n < k) throw ArgumentError("k-metric needs at least k points");
  if (values_.size() != simplex_count(n, k - 1))
    throw ArgumentError("k-metric table has " + std::to_string(values_.size()) + " entries, expected C(" +
                        std::to_string(n) + "," + std::to_string(k) + ")");
  if (!values_.allFinite()) throw ArgumentError("k-metric values must be finite");
  if (values_.size() > 0 && values_.minCoeff() < 0.0) throw ArgumentError("k-metric values must be non-negative");
}

double KMetric::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != k_) throw ArgumentError("tuple size does not match arity");
  for (int v : tuple)
    if (v < 0 || v >= n_) throw ArgumentError("vertex out of range");
  if (has_repeats(tuple)) return 0.0;
  return values_(simplex_index(n_, canonical_key(tuple)));
}

VerificationReport check_weak(const KMetric& d, double tol) {
  VerificationReport report;
  const int n = d.n();
  const int k = d.k();
  const auto simplices = enumerate_simplices(n, k - 1);
  std::vector<int> tuple(static_cast<std::size_t>(k));
  for (std::size_t idx = 0; idx < simplices.size(); ++idx) {
    const auto& t = simplices[idx];
    const double value = d.values()(static_cast<Eigen::Index>(idx));
    if (value == 0.0) report.pseudo_violations.push_back(t);
    for (int y = 0; y < n; ++y) {
      if (t.contains(y)) continue;
      double sum = 0.0;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) tuple[static_cast<std::size_t>(j)] = (i == j) ? y : t[j];
        sum += d(tuple);
      }
      if (exceeds(value, sum, tol)) report.weak_violations.push_back({t, y, value, sum});
    }
  }
  report.is_weak = report.weak_violations.empty();
  return report;
}

namespace {

// Bounding-chain LP over the columns `cols` of the boundary matrix.
BoundingChain solve_bounding(const Eigen::MatrixXd& B, std::span<const std::int64_t> cols,
                             const Eigen::VectorXd& weights, const Chain& target, int n, int chain_dim) {
  const Eigen::Index q = B.cols();
  lp::StandardFormLP prob;
  prob.A.resize(B.rows(), 2 * q);
  prob.A << B, -B;
  prob.b = target.coeffs;
  prob.c.resize(2 * q);
  for (Eigen::Index j = 0; j < q; ++j) prob.c(j) = prob.c(q + j) = weights(cols[static_cast<std::size_t>(j)]);

  const auto sol = lp::solve(prob);
  if (sol.status == lp::Status::infeasible) throw BoundaryNotFillable("boundary not fillable on the allowed simplices");
  if (sol.status == lp::Status::unbounded) throw SolverError("bounding-chain LP reported unbounded");

  Chain alpha(n, chain_dim);
  for (Eigen::Index j = 0; j < q; ++j) {
    const double a = sol.x(j) - sol.x(q + j);
    alpha.coeffs(cols[static_cast<std::size_t>(j)]) = a;
  }
  BoundingChain out{0.0, std::move(alpha)};
  for (Eigen::Index j = 0; j < q; ++j) {
    const auto c = cols[static_cast<std::size_t>(j)];
    out.cost += std::abs(out.chain.coeffs(c)) * weights(c);
  }
  Eigen::VectorXd restricted(q);
  for (Eigen::Index j = 0; j < q; ++j) restricted(j) = out.chain.coeffs(cols[static_cast<std::size_t>(j)]);
  const double residual = q ? (B * restricted - target.coeffs).lpNorm<Eigen::Infinity>() : target.coeffs.lpNorm<Eigen::Infinity>();
  if (residual > 1e-6) throw SolverError("bounding chain misses its boundary by " + std::to_string(residual));
  return out;
}

std::vector<std::int64_t> allowed_columns(std::int64_t count, const std::vector<bool>* mask) {
  std::vector<std::int64_t> cols;
  for (std::int64_t j = 0; j < count; ++j)
    if (!mask || (*mask)[static_cast<std::size_t>(j)]) cols.push_back(j);
  return cols;
}

}  // namespace

BoundingChain min_bounding_chain(const Eigen::VectorXd& weights, const Chain& target, const std::vector<bool>* mask) {
  const int n = target.n;
  const int chain_dim = target.dim + 1;
  const std::int64_t count = simplex_count(n, chain_dim);
  if (weights.size() != count) throw ArgumentError("weights must have one entry per (k-1)-simplex");
  if (mask && static_cast<std::int64_t>(mask->size()) != count) throw ArgumentError("mask size mismatch");
  if (weights.size() > 0 && weights.minCoeff() < 0.0) throw ArgumentError("weights must be non-negative");
  const auto cols = allowed_columns(count, mask);
  const Eigen::MatrixXd B = restricted_boundary_matrix(n, chain_dim, cols);
  return solve_bounding(B, cols, weights, target, n, chain_dim);
}

VerificationReport check_strong(const KMetric& d, const VerifyOptions& opts) {
  VerificationReport report = check_weak(d, opts.tol);
  const int n = d.n();
  const int k = d.k();
  const std::int64_t count = d.size();
  const auto cols = allowed_columns(count, nullptr);
  const Eigen::MatrixXd B = boundary_matrix<double>(n, k - 1);

  std::vector<std::optional<BoundingChain>> results(static_cast<std::size_t>(count));
  auto run = [&](std::int64_t t) {
    Chain target(n, k - 2, B.col(t));
    results[static_cast<std::size_t>(t)] = solve_bounding(B, cols, d.values(), target, n, k - 1);
  };

  const int jobs = std::max(1, opts.jobs);
  std::optional<std::int64_t> witness;
  double margin = std::numeric_limits<double>::infinity();
  // Batches in canonical order so the lowest failing index wins regardless of jobs.
  for (std::int64_t start = 0; start < count; start += jobs) {
    const std::int64_t stop = std::min(count, start + jobs);
    parallel_for(start, stop, jobs, run);
    for (std::int64_t t = start; t < stop; ++t) {
      const auto& r = *results[static_cast<std::size_t>(t)];
      const double value = d.values()(t);
      margin = std::min(margin, r.cost - value);
      ++report.lps_solved;
      if (!witness && exceeds(value, r.cost, opts.tol)) {
        witness = t;
        // Ignore the rest of the batch so the report does not depend on the job count.
        if (!opts.exhaustive) break;
      }
    }
    if (witness && !opts.exhaustive) break;
  }

  report.strong_margin = count ? margin : 0.0;
  report.is_strong = !witness.has_value();
  if (witness) {
    auto& r = *results[static_cast<std::size_t>(*witness)];
    report.strong_witness = StrongWitness{enumerate_simplices(n, k - 1)[static_cast<std::size_t>(*witness)],
                                          std::move(r.chain), r.cost, d.values()(*witness)};
  }
  return report;
}

}  // namespace kmetric
