#include "kmetric/lp.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "kmetric/errors.hpp"

namespace kmetric::lp {

std::string to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

using Eigen::Index;

// Constraint rows first, objective (reduced costs) in the last row, rhs in the last column.
struct Tableau {
  Eigen::MatrixXd T;
  std::vector<Index> basis;

  Index rows() const { return T.rows() - 1; }
  Index rhs() const { return T.cols() - 1; }

  void pivot(Index r, Index c) {
    T.row(r) /= T(r, c);
    for (Index i = 0; i < T.rows(); ++i) {
      if (i == r) continue;
      const double f = T(i, c);
      if (f != 0.0) T.row(i) -= f * T.row(r);
    }
    basis[static_cast<std::size_t>(r)] = c;
  }
};

enum class Outcome { optimal, unbounded };

// Bland's rule over columns [0, allowed_cols).
Outcome run_simplex(Tableau& tab, Index allowed_cols, double tol, int& iterations) {
  const Index m = tab.rows();
  const Index rhs = tab.rhs();
  const long cap = 100000 + 200L * static_cast<long>(m + allowed_cols);
  while (true) {
    if (++iterations > cap) throw SolverError("simplex iteration cap reached");
    Index enter = -1;
    for (Index j = 0; j < allowed_cols; ++j) {
      if (tab.T(m, j) < -tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Outcome::optimal;

    Index leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < m; ++i) {
      const double a = tab.T(i, enter);
      if (a <= tol) continue;
      const double ratio = tab.T(i, rhs) / a;
      const double tie = tol * std::max(1.0, std::abs(best));
      if (leave < 0 || ratio < best - tie) {
        best = ratio;
        leave = i;
      } else if (std::abs(ratio - best) <= tie &&
                 tab.basis[static_cast<std::size_t>(i)] < tab.basis[static_cast<std::size_t>(leave)]) {
        leave = i;
      }
    }
    if (leave < 0) return Outcome::unbounded;
    tab.pivot(leave, enter);
  }
}

void check_finite(const StandardFormLP& lp) {
  if (!lp.A.allFinite() || !lp.b.allFinite() || !lp.c.allFinite()) throw ArgumentError("LP data must be finite");
  if (lp.A.rows() != lp.b.size() || lp.A.cols() != lp.c.size())
    throw ArgumentError("LP dimensions are inconsistent");
}

}  // namespace

LPSolution solve(const StandardFormLP& lp, double tol) {
  check_finite(lp);
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");

  const Index m = lp.A.rows();
  const Index n = lp.A.cols();
  const double bscale = std::max(1.0, lp.b.size() ? lp.b.lpNorm<Eigen::Infinity>() : 0.0);
  const double cscale = std::max(1.0, lp.c.size() ? lp.c.lpNorm<Eigen::Infinity>() : 0.0);

  LPSolution sol;

  // Phase one: artificial identity basis on rows flipped to b >= 0.
  Tableau tab;
  tab.T = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  tab.basis.resize(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    const double s = lp.b(i) < 0.0 ? -1.0 : 1.0;
    tab.T.row(i).head(n) = s * lp.A.row(i);
    tab.T(i, n + i) = 1.0;
    tab.T(i, n + m) = s * lp.b(i);
    tab.basis[static_cast<std::size_t>(i)] = n + i;
  }
  for (Index i = 0; i < m; ++i) {
    tab.T.row(m).head(n) -= tab.T.row(i).head(n);
    tab.T(m, n + m) -= tab.T(i, n + m);
  }
  run_simplex(tab, n, tol, sol.iterations);

  const double infeasibility = -tab.T(m, n + m);
  if (infeasibility > 100.0 * tol * bscale * std::max<double>(1.0, static_cast<double>(m))) {
    sol.status = Status::infeasible;
    return sol;
  }

  // Pivot artificials out of the basis; rows where that is impossible are redundant.
  std::vector<bool> keep(static_cast<std::size_t>(m), true);
  for (Index i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] < n) continue;
    Index best = -1;
    double mag = tol;
    for (Index j = 0; j < n; ++j) {
      if (std::abs(tab.T(i, j)) > mag) {
        mag = std::abs(tab.T(i, j));
        best = j;
      }
    }
    if (best >= 0)
      tab.pivot(i, best);
    else
      keep[static_cast<std::size_t>(i)] = false;
  }

  std::vector<Index> rows;
  for (Index i = 0; i < m; ++i)
    if (keep[static_cast<std::size_t>(i)]) rows.push_back(i);
  const auto mk = static_cast<Index>(rows.size());

  // Phase two on the original columns only.
  Tableau t2;
  t2.T = Eigen::MatrixXd::Zero(mk + 1, n + 1);
  t2.basis.resize(static_cast<std::size_t>(mk));
  for (Index r = 0; r < mk; ++r) {
    const Index i = rows[static_cast<std::size_t>(r)];
    t2.T.row(r).head(n) = tab.T.row(i).head(n);
    t2.T(r, n) = tab.T(i, n + m);
    t2.basis[static_cast<std::size_t>(r)] = tab.basis[static_cast<std::size_t>(i)];
  }
  t2.T.row(mk).head(n) = lp.c.transpose();
  for (Index r = 0; r < mk; ++r) {
    const double cb = lp.c(t2.basis[static_cast<std::size_t>(r)]);
    if (cb != 0.0) t2.T.row(mk) -= cb * t2.T.row(r);
  }
  if (run_simplex(t2, n, tol, sol.iterations) == Outcome::unbounded) {
    sol.status = Status::unbounded;
    return sol;
  }

  // Recompute the vertex and the duals from the original data for accuracy.
  Eigen::MatrixXd B(mk, mk);
  Eigen::VectorXd bk(mk), cB(mk);
  for (Index r = 0; r < mk; ++r) {
    const Index i = rows[static_cast<std::size_t>(r)];
    bk(r) = lp.b(i);
    for (Index q = 0; q < mk; ++q) B(r, q) = lp.A(i, t2.basis[static_cast<std::size_t>(q)]);
    cB(r) = lp.c(t2.basis[static_cast<std::size_t>(r)]);
  }
  sol.x = Eigen::VectorXd::Zero(n);
  sol.y = Eigen::VectorXd::Zero(m);
  if (mk > 0) {
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    const Eigen::VectorXd xB = lu.solve(bk);
    const Eigen::VectorXd yk = lu.transpose().solve(cB);
    for (Index q = 0; q < mk; ++q) sol.x(t2.basis[static_cast<std::size_t>(q)]) = xB(q);
    for (Index r = 0; r < mk; ++r) sol.y(rows[static_cast<std::size_t>(r)]) = yk(r);
  }

  const double check = std::max(1e-7, 1e3 * tol);
  const double min_x = n ? sol.x.minCoeff() : 0.0;
  const double residual = m ? (lp.A * sol.x - lp.b).lpNorm<Eigen::Infinity>() : 0.0;
  const Eigen::VectorXd reduced = lp.c - lp.A.transpose() * sol.y;
  const double min_reduced = n ? reduced.minCoeff() : 0.0;
  if (!sol.x.allFinite() || !sol.y.allFinite() || min_x < -check * bscale || residual > check * bscale ||
      min_reduced < -check * cscale) {
    std::ostringstream os;
    os << "numerical breakdown: residual " << residual << ", min x " << min_x << ", min reduced cost "
       << min_reduced << " (" << m << " rows, " << n << " columns)";
    throw SolverError(os.str());
  }
  sol.x = sol.x.cwiseMax(0.0);
  sol.objective = lp.c.dot(sol.x);
  sol.status = Status::optimal;
  return sol;
}

LPSolution solve_bounded_free(const Eigen::MatrixXd& C, const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                              const Eigen::MatrixXd& E, const Eigen::VectorXd& obj, double tol) {
  const Index p = C.cols();
  const Index r = C.rows();
  const Index e = E.rows();
  if (lo.size() != r || hi.size() != r || obj.size() != p || (e > 0 && E.cols() != p))
    throw ArgumentError("bounded-free LP dimensions are inconsistent");
  if ((lo.array() > hi.array()).any()) throw ArgumentError("lower bound exceeds upper bound");

  // Columns: f+ | f- | upper slack | lower slack. Rows: upper | lower | equality.
  StandardFormLP lp;
  lp.A = Eigen::MatrixXd::Zero(2 * r + e, 2 * p + 2 * r);
  lp.b = Eigen::VectorXd::Zero(2 * r + e);
  lp.c = Eigen::VectorXd::Zero(2 * p + 2 * r);
  lp.A.block(0, 0, r, p) = C;
  lp.A.block(0, p, r, p) = -C;
  lp.A.block(0, 2 * p, r, r).setIdentity();
  lp.A.block(r, 0, r, p) = C;
  lp.A.block(r, p, r, p) = -C;
  lp.A.block(r, 2 * p + r, r, r) = -Eigen::MatrixXd::Identity(r, r);
  if (e > 0) {
    lp.A.block(2 * r, 0, e, p) = E;
    lp.A.block(2 * r, p, e, p) = -E;
  }
  lp.b.head(r) = hi;
  lp.b.segment(r, r) = lo;
  lp.c.head(p) = -obj;
  lp.c.segment(p, p) = obj;

  LPSolution inner = solve(lp, tol);
  if (inner.status == Status::infeasible) throw SolverError("bounded-free LP is infeasible");
  if (inner.status == Status::unbounded) throw SolverError("bounded-free LP is unbounded");

  Eigen::VectorXd plus = inner.x.head(p);
  Eigen::VectorXd minus = inner.x.segment(p, p);
  const Eigen::VectorXd common = plus.cwiseMin(minus);
  plus -= common;
  minus -= common;

  LPSolution out;
  out.status = Status::optimal;
  out.iterations = inner.iterations;
  out.x = plus - minus;
  out.y.resize(r + e);
  out.y.head(r) = -(inner.y.head(r) + inner.y.segment(r, r));
  out.y.tail(e) = -inner.y.tail(e);
  out.objective = obj.dot(out.x);
  return out;
}

}  // namespace kmetric::lp
