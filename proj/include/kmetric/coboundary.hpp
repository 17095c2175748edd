#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "kmetric/kmetric.hpp"

namespace kmetric {

/// m columns, each a (k-2)-chain over n vertices. Rows follow canonical (k-2)-simplex order.
struct ChainMatrix {
  int n = 0;
  int k = 0;
  Eigen::MatrixXd data;

  ChainMatrix() = default;
  ChainMatrix(int n_, int k_, Eigen::MatrixXd d);

  Eigen::Index m() const { return data.cols(); }
};

/// An l_p norm, p in [1, inf].
struct NormSpec {
  double p = 2.0;

  NormSpec() = default;
  explicit NormSpec(double p_);
  static NormSpec infinity() { return NormSpec(std::numeric_limits<double>::infinity()); }
  /// Accepts a number or "inf".
  static NormSpec parse(const std::string& text);

  bool is_infinite() const { return std::isinf(p); }
  std::string to_string() const;

  template <typename Derived>
  double operator()(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() == 0) return 0.0;
    if (is_infinite()) return v.cwiseAbs().maxCoeff();
    if (p == 1.0) return v.cwiseAbs().sum();
    if (p == 2.0) return v.norm();
    return std::pow(v.cwiseAbs().array().pow(p).sum(), 1.0 / p);
  }
};

/// Rows of δ_{k-2} F: one row per (k-1)-simplex, evaluated face by face.
Eigen::MatrixXd coboundary_rows(const ChainMatrix& F);

/// d(t) = ||row t of δ_{k-2} F||_p.
KMetric eval_coboundary_metric(const ChainMatrix& F, const NormSpec& norm);

struct FrechetColumn {
  Eigen::VectorXd chain;  ///< (k-2)-chain
  double achieved = 0.0;  ///< (δ chain)(t)
};

/// Single-column coboundary metric that is non-expanding and tight on simplex `t`.
/// Throws NotStrongError when the LP optimum falls short of d(t).
FrechetColumn frechet_column(const KMetric& d, const SimplexKey& t, double tol = kMetricTol);

/// One Fréchet column per (k-1)-simplex, in canonical order.
ChainMatrix frechet_embed(const KMetric& d, int jobs = 1, double tol = kMetricTol);

/// E|N(0,1)|^p.
double gaussian_abs_moment(double p);

/// m_target x m Gaussian map scaled so that E||R x||_p matches ||x||_2.
/// Only finite p is supported.
Eigen::MatrixXd gaussian_projection(Eigen::Index m_target, Eigen::Index m, const NormSpec& norm_out,
                                    std::uint64_t seed);

/// F' = F R^T.
ChainMatrix project(const ChainMatrix& F, const Eigen::MatrixXd& R);
ChainMatrix random_project(const ChainMatrix& F, Eigen::Index m_target, const NormSpec& norm_out,
                           std::uint64_t seed);

inline constexpr double kDefaultJLConstant = 8.0;
inline constexpr std::int64_t kMaxEmbeddingColumns = 1'000'000;

/// ceil(c' k ln n / eps^2).
Eigen::Index jl_dimension(int n, int k, double eps, double cprime = kDefaultJLConstant);
/// m/eps^2 for 1 <= p < 2, (m / (eps^2 p))^{p/2} for p >= 2, rounded up.
Eigen::Index l2_to_lp_dimension(Eigen::Index m, double p, double eps);

struct EmbeddingResult {
  ChainMatrix embedded;
  double distortion = 0.0;  ///< max_distortion against the l2 metric of the input
};

EmbeddingResult jl_embed(const ChainMatrix& F, double eps, std::uint64_t seed, double cprime = kDefaultJLConstant);
EmbeddingResult embed_l2_to_lp(const ChainMatrix& F, double p, double eps, std::uint64_t seed);

/// max over distinct k-subsets of max(a/b, b/a) - 1; 0/0 counts as 0, x/0 as infinity.
double max_distortion(const KMetric& d1, const KMetric& d2);

}  // namespace kmetric
