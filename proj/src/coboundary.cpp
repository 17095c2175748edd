#include "kmetric/coboundary.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "kmetric/lp.hpp"
#include "kmetric/parallel.hpp"

namespace kmetric {

ChainMatrix::ChainMatrix(int n_, int k_, Eigen::MatrixXd d) : n(n_), k(k_), data(std::move(d)) {
  if (k < 2) throw ArgumentError("chain matrix arity must be at least 2");
  if (n < k) throw ArgumentError("chain matrix needs at least k vertices");
  if (data.rows() != simplex_count(n, k - 2))
    throw ArgumentError("chain matrix has " + std::to_string(data.rows()) + " rows, expected C(" + std::to_string(n) +
                        "," + std::to_string(k - 1) + ")");
  if (!data.allFinite()) throw ArgumentError("chain matrix entries must be finite");
}

NormSpec::NormSpec(double p_) : p(p_) {
  if (!(p >= 1.0)) throw ArgumentError("norm exponent must be >= 1");
}

NormSpec NormSpec::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ArgumentError("cannot parse norm exponent '" + text + "'");
  }
  if (used != text.size()) throw ArgumentError("cannot parse norm exponent '" + text + "'");
  return NormSpec(p);
}

std::string NormSpec::to_string() const {
  if (is_infinite()) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

Eigen::MatrixXd coboundary_rows(const ChainMatrix& F) {
  const auto simplices = enumerate_simplices(F.n, F.k - 1);
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(simplices.size()), F.m());
  std::vector<int> face(static_cast<std::size_t>(F.k - 1));
  for (std::size_t t = 0; t < simplices.size(); ++t) {
    const auto& v = simplices[t].vertices();
    for (int i = 0; i < F.k; ++i) {
      std::size_t w = 0;
      for (int j = 0; j < F.k; ++j)
        if (j != i) face[w++] = v[static_cast<std::size_t>(j)];
      const auto r = simplex_index(F.n, face);
      if (i % 2 == 0)
        rows.row(static_cast<Eigen::Index>(t)) += F.data.row(r);
      else
        rows.row(static_cast<Eigen::Index>(t)) -= F.data.row(r);
    }
  }
  return rows;
}

KMetric eval_coboundary_metric(const ChainMatrix& F, const NormSpec& norm) {
  const Eigen::MatrixXd rows = coboundary_rows(F);
  Eigen::VectorXd values(rows.rows());
  for (Eigen::Index t = 0; t < rows.rows(); ++t) values(t) = norm(rows.row(t));
  return KMetric(F.n, F.k, std::move(values));
}

namespace {

// Constraint data shared by every Fréchet column of one metric.
struct FrechetProblem {
  Eigen::MatrixXd cobnd;  // δ_{k-2}
  Eigen::MatrixXd cycle;  // ∂_{k-2}, or the augmentation row when k = 2

  explicit FrechetProblem(const KMetric& d) {
    cobnd = boundary_matrix<double>(d.n(), d.k() - 1).transpose();
    if (d.k() >= 3)
      cycle = boundary_matrix<double>(d.n(), d.k() - 2);
    else
      cycle = Eigen::MatrixXd::Ones(1, d.n());
  }

  FrechetColumn solve(const KMetric& d, Eigen::Index t, double tol) const {
    const Eigen::VectorXd& hi = d.values();
    const Eigen::VectorXd obj = cobnd.row(t).transpose();
    const auto sol = lp::solve_bounded_free(cobnd, -hi, hi, cycle, obj);
    FrechetColumn col{sol.x, 0.0};
    const Eigen::VectorXd image = cobnd * col.chain;
    col.achieved = image(t);
    const double target = hi(t);
    if (exceeds(target, col.achieved, tol)) {
      std::ostringstream os;
      os << "input not strong: Fréchet column at simplex " << t << " reaches " << col.achieved << " < " << target;
      throw NotStrongError(os.str());
    }
    for (Eigen::Index s = 0; s < image.size(); ++s) {
      if (exceeds(std::abs(image(s)), hi(s), tol))
        throw SolverError("Fréchet column expands simplex " + std::to_string(s));
    }
    return col;
  }
};

}  // namespace

FrechetColumn frechet_column(const KMetric& d, const SimplexKey& t, double tol) {
  if (t.size() != d.k()) throw ArgumentError("target simplex must have k vertices");
  const FrechetProblem prob(d);
  return prob.solve(d, simplex_index(d.n(), t), tol);
}

ChainMatrix frechet_embed(const KMetric& d, int jobs, double tol) {
  const FrechetProblem prob(d);
  const auto count = d.size();
  Eigen::MatrixXd F(simplex_count(d.n(), d.k() - 2), count);
  parallel_for(0, count, jobs, [&](std::int64_t t) { F.col(t) = prob.solve(d, t, tol).chain; });
  return ChainMatrix(d.n(), d.k(), std::move(F));
}

double gaussian_abs_moment(double p) {
  return std::pow(2.0, p / 2.0) * std::tgamma((p + 1.0) / 2.0) / std::sqrt(M_PI);
}

Eigen::MatrixXd gaussian_projection(Eigen::Index m_target, Eigen::Index m, const NormSpec& norm_out,
                                    std::uint64_t seed) {
  if (m_target < 1) throw ArgumentError("target dimension must be at least 1");
  if (norm_out.is_infinite()) throw ArgumentError("random projection into l_inf is not supported");
  if (m_target > kMaxEmbeddingColumns) throw SizeError("target dimension exceeds the column guard");
  const double p = norm_out.p;
  const double cp = std::pow(gaussian_abs_moment(p), 1.0 / p);
  const double scale = 1.0 / (cp * std::pow(static_cast<double>(m_target), 1.0 / p));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd R(m_target, m);
  for (Eigen::Index i = 0; i < m_target; ++i)
    for (Eigen::Index j = 0; j < m; ++j) R(i, j) = scale * normal(rng);
  return R;
}

ChainMatrix project(const ChainMatrix& F, const Eigen::MatrixXd& R) {
  if (R.cols() != F.m()) throw ArgumentError("projection width does not match chain matrix columns");
  return ChainMatrix(F.n, F.k, F.data * R.transpose());
}

ChainMatrix random_project(const ChainMatrix& F, Eigen::Index m_target, const NormSpec& norm_out,
                           std::uint64_t seed) {
  return project(F, gaussian_projection(m_target, F.m(), norm_out, seed));
}

namespace {

Eigen::Index ceil_dimension(double x) {
  // Absorb rounding noise so exact integers are not bumped up by one.
  const double c = std::ceil(x * (1.0 - 1e-12));
  if (!std::isfinite(c) || c > static_cast<double>(kMaxEmbeddingColumns))
    throw SizeError("target dimension exceeds the column guard");
  return std::max<Eigen::Index>(1, static_cast<Eigen::Index>(c));
}

}  // namespace

Eigen::Index jl_dimension(int n, int k, double eps, double cprime) {
  if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("eps must lie in (0, 1)");
  if (!(cprime > 0.0)) throw ArgumentError("JL constant must be positive");
  return ceil_dimension(cprime * k * std::log(static_cast<double>(n)) / (eps * eps));
}

Eigen::Index l2_to_lp_dimension(Eigen::Index m, double p, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("eps must lie in (0, 1)");
  if (!(p >= 1.0) || std::isinf(p)) throw ArgumentError("p must lie in [1, inf)");
  const double md = static_cast<double>(m);
  if (p < 2.0) return ceil_dimension(md / (eps * eps));
  return ceil_dimension(std::pow(md / (eps * eps * p), p / 2.0));
}

EmbeddingResult jl_embed(const ChainMatrix& F, double eps, std::uint64_t seed, double cprime) {
  const auto target = jl_dimension(F.n, F.k, eps, cprime);
  EmbeddingResult out{random_project(F, target, NormSpec(2.0), seed), 0.0};
  out.distortion = max_distortion(eval_coboundary_metric(F, NormSpec(2.0)),
                                  eval_coboundary_metric(out.embedded, NormSpec(2.0)));
  return out;
}

EmbeddingResult embed_l2_to_lp(const ChainMatrix& F, double p, double eps, std::uint64_t seed) {
  const auto target = l2_to_lp_dimension(F.m(), p, eps);
  const NormSpec norm(p);
  EmbeddingResult out{random_project(F, target, norm, seed), 0.0};
  out.distortion = max_distortion(eval_coboundary_metric(F, NormSpec(2.0)), eval_coboundary_metric(out.embedded, norm));
  return out;
}

double max_distortion(const KMetric& d1, const KMetric& d2) {
  if (d1.n() != d2.n() || d1.k() != d2.k()) throw ArgumentError("distortion needs metrics on the same (n, k)");
  double worst = 0.0;
  for (Eigen::Index t = 0; t < d1.size(); ++t) {
    const double a = d1.values()(t);
    const double b = d2.values()(t);
    if (a == 0.0 && b == 0.0) continue;
    if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::max(a / b, b / a) - 1.0);
  }
  return worst;
}

}  // namespace kmetric
