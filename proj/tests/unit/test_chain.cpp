#include <doctest.h>

#include "kmetric/chain.hpp"
#include "kmetric/corpus.hpp"
#include "kmetric/errors.hpp"
#include "oracles.hpp"

using kmetric::SimplexKey;

namespace {

Eigen::MatrixXi int_boundary(int n, int dim) { return kmetric::boundary_matrix<int>(n, dim); }

}  // namespace

TEST_CASE("boundary columns follow the alternating face rule") {
  const auto B = int_boundary(3, 2);
  REQUIRE(B.rows() == 3);
  REQUIRE(B.cols() == 1);
  // faces (0,1), (0,2), (1,2)
  CHECK(B(0, 0) == 1);
  CHECK(B(1, 0) == -1);
  CHECK(B(2, 0) == 1);

  const auto B1 = int_boundary(2, 1);
  CHECK(B1(0, 0) == -1);
  CHECK(B1(1, 0) == 1);

  CHECK_THROWS_AS(kmetric::boundary_operator(4, 0), kmetric::ArgumentError);
  CHECK_THROWS_AS(kmetric::boundary_operator(4, 4), kmetric::ArgumentError);
}

TEST_CASE("boundary matrix matches the definition column by column") {
  for (int n = 2; n <= 6; ++n)
    for (int dim = 1; dim < std::min(n, 4); ++dim) {
      const auto B = int_boundary(n, dim);
      const auto cols = kmetric::enumerate_simplices(n, dim);
      const auto rows = kmetric::enumerate_simplices(n, dim - 1);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto ref = oracle::boundary({{cols[c].vertices(), 1}});
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const auto it = ref.find(rows[r].vertices());
          const long long expect = it == ref.end() ? 0 : it->second;
          CHECK(B(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) == expect);
        }
      }
    }
}

TEST_CASE("boundary of a boundary vanishes") {
  for (int n = 3; n <= 8; ++n)
    for (int dim = 2; dim <= std::min(3, n - 1); ++dim)
      CHECK((int_boundary(n, dim - 1) * int_boundary(n, dim)).cwiseAbs().maxCoeff() == 0);
  const auto d0 = kmetric::coboundary_operator(5, 0);
  const auto d1 = kmetric::coboundary_operator(5, 1);
  CHECK((d1.matrix * d0.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coboundary is the transposed boundary") {
  const auto delta = kmetric::coboundary_operator(3, 1);
  CHECK(delta.matrix == kmetric::boundary_operator(3, 2).matrix.transpose());
  CHECK(delta.src_dim == 1);
  CHECK(delta.dst_dim == 2);
  CHECK_THROWS_AS(kmetric::coboundary_operator(3, 2), kmetric::ArgumentError);

  const kmetric::Chain ones(3, 1, Eigen::VectorXd::Ones(3));
  const auto image = kmetric::apply(delta, ones);
  CHECK(image.coeffs.size() == 1);
  CHECK(image.coeffs(0) == 1.0);
}

TEST_CASE("apply") {
  const auto b2 = kmetric::boundary_operator(4, 2);
  const auto t = kmetric::Chain::indicator(4, SimplexKey{0, 1, 2});
  const auto bt = kmetric::apply(b2, t);
  CHECK(bt[SimplexKey{1, 2}] == 1.0);
  CHECK(bt[SimplexKey{0, 2}] == -1.0);
  CHECK(bt[SimplexKey{0, 1}] == 1.0);
  CHECK(bt.coeffs.cwiseAbs().sum() == 3.0);

  const auto b1 = kmetric::boundary_operator(4, 1);
  CHECK(kmetric::apply(b1, kmetric::Chain(4, 1)).coeffs.isZero());
  CHECK_THROWS_AS(kmetric::apply(b1, t), kmetric::ArgumentError);
}

TEST_CASE("indicator respects orientation") {
  const std::vector<int> odd{1, 0, 2};
  const auto c = kmetric::Chain::indicator(3, odd);
  CHECK(c[SimplexKey{0, 1, 2}] == -1.0);
}

TEST_CASE("subdivision chain has the boundary of the outer triangle") {
  const int n = 6;
  kmetric::Chain alpha(n, 2);
  for (const auto& tri : kmetric::corpus::subdivision_triangles()) alpha.coeffs += kmetric::Chain::indicator(n, tri).coeffs;
  const auto b2 = kmetric::boundary_operator(n, 2);
  const auto lhs = kmetric::apply(b2, alpha);
  const auto rhs = kmetric::apply(b2, kmetric::Chain::indicator(n, SimplexKey{0, 1, 2}));
  CHECK(lhs.coeffs == rhs.coeffs);
}

TEST_CASE("simplex boundary identity: replacing each vertex by y") {
  // ∂ 1_{x_1..x_k} = ∂ Σ_i 1_{x_1..y..x_k}, integer arithmetic.
  for (int n = 2; n <= 7; ++n)
    for (int size = 1; size < n; ++size)
      for (const auto& full : oracle::subsets(n, size + 1))
        for (std::size_t yi = 0; yi < full.size(); ++yi) {
          const int y = full[yi];
          std::vector<int> x;
          for (std::size_t j = 0; j < full.size(); ++j)
            if (j != yi) x.push_back(full[j]);
          if (size < 2) continue;  // ∂ of a vertex is not defined
          const auto B = int_boundary(n, size - 1);
          Eigen::VectorXi lhs = Eigen::VectorXi::Zero(B.cols());
          lhs(kmetric::simplex_index(n, x)) = 1;
          Eigen::VectorXi sum = Eigen::VectorXi::Zero(B.cols());
          for (std::size_t i = 0; i < x.size(); ++i) {
            auto seq = x;
            seq[i] = y;
            sum(kmetric::simplex_index(n, kmetric::canonical_key(seq))) += kmetric::orientation_sign(seq);
          }
          CHECK(B * lhs == B * sum);
        }
}

TEST_CASE("restricted boundary keeps selected columns") {
  const std::vector<std::int64_t> cols{0, 3};
  const auto R = kmetric::restricted_boundary_matrix(4, 2, cols);
  const auto B = kmetric::boundary_operator(4, 2).matrix;
  CHECK(R.col(0) == B.col(0));
  CHECK(R.col(1) == B.col(3));
}
