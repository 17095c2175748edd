#include "kmetric/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "kmetric/apex.hpp"

namespace kmetric::corpus {

std::vector<std::vector<int>> subdivision_triangles() {
  return {{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {0, 3, 2}, {2, 3, 5}, {3, 4, 5}};
}

CorpusInstance subdivided_triangle() {
  const int n = 6;
  Eigen::VectorXd values = Eigen::VectorXd::Constant(simplex_count(n, 2), 10.0);
  for (const auto& tri : subdivision_triangles()) values(simplex_index(n, canonical_key(tri))) = 1.0;
  CorpusInstance inst{"subdivided-triangle", KMetric(n, 3, std::move(values)), {}, std::nullopt};
  inst.expected["weak"] = true;
  inst.expected["strong"] = false;
  inst.expected["witness_cost"] = 7.0;
  inst.expected["witness_value"] = 10.0;
  return inst;
}

CorpusInstance discrete_metric(int n, int k) {
  if (k < 2 || k > n) throw ArgumentError("discrete metric needs 2 <= k <= n");
  CorpusInstance inst{"discrete", KMetric(n, k, Eigen::VectorXd::Ones(simplex_count(n, k - 1))), {}, std::nullopt};
  inst.expected["weak"] = true;
  inst.expected["strong"] = true;
  if (k == 3) inst.generator = ChainMatrix(n, 3, Eigen::MatrixXd::Ones(simplex_count(n, 1), 1));
  return inst;
}

CorpusInstance four_point_c32() {
  const int n = 4;
  // Edge labels in canonical order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(6, 2);
  F.row(simplex_index(n, SimplexKey{1, 3})) << 1.0, 0.0;
  F.row(simplex_index(n, SimplexKey{2, 3})) << 0.5, std::sqrt(3.0) / 2.0;
  CorpusInstance inst{"four-point-c32", ChainMatrix(n, 3, std::move(F)), {}, std::nullopt};
  inst.expected["values_p2"] = std::vector<double>{0.0, 1.0, 1.0, 1.0};
  return inst;
}

CorpusInstance six_point_c4() {
  const auto base = discrete_metric(5, 3);
  ChainMatrix lifted = apex_extend_chain_matrix(*base.generator);
  std::vector<double> values;
  for (const auto& s : enumerate_simplices(6, 3)) values.push_back(s.contains(5) ? 1.0 : 0.0);
  CorpusInstance inst{"six-point-c4", std::move(lifted), {}, std::nullopt};
  inst.expected["values_p1"] = std::move(values);
  return inst;
}

namespace {

template <typename Combine>
KMetric pairwise_3metric(const PointCloud& cloud, Combine combine) {
  const auto triples = enumerate_simplices(cloud.n(), 2);
  Eigen::VectorXd values(static_cast<Eigen::Index>(triples.size()));
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    const double a = (cloud.points.row(t[0]) - cloud.points.row(t[1])).norm();
    const double b = (cloud.points.row(t[0]) - cloud.points.row(t[2])).norm();
    const double c = (cloud.points.row(t[1]) - cloud.points.row(t[2])).norm();
    values(static_cast<Eigen::Index>(i)) = combine(a, b, c);
  }
  return KMetric(cloud.n(), 3, std::move(values));
}

}  // namespace

CorpusInstance perimeter_3metric(const PointCloud& cloud) {
  CorpusInstance inst{"perimeter", pairwise_3metric(cloud, [](double a, double b, double c) { return a + b + c; }), {}, std::nullopt};
  inst.expected["weak"] = true;
  return inst;
}

CorpusInstance maxside_3metric(const PointCloud& cloud) {
  CorpusInstance inst{"maxside", pairwise_3metric(cloud, [](double a, double b, double c) { return std::max({a, b, c}); }), {}, std::nullopt};
  inst.expected["weak"] = true;
  return inst;
}

CorpusInstance random_strong_metric(int n, int k, std::uint64_t seed) {
  if (k < 2 || n < k) throw ArgumentError("random strong metric needs 2 <= k <= n");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(1.0, 10.0);
  std::vector<Facet> facets;
  for (auto& s : enumerate_simplices(n, k - 1)) facets.push_back({std::move(s), weight(rng)});
  CorpusInstance inst{"random-strong", mbc_metric(WeightedComplex(n, k, std::move(facets))), {}, std::nullopt};
  inst.expected["weak"] = true;
  inst.expected["strong"] = true;
  return inst;
}

ChainMatrix random_chain_matrix(int n, int k, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd F(simplex_count(n, k - 2), m);
  for (Eigen::Index i = 0; i < F.rows(); ++i)
    for (Eigen::Index j = 0; j < F.cols(); ++j) F(i, j) = u(rng);
  return ChainMatrix(n, k, std::move(F));
}

KMetric random_graph_metric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(1.0, 10.0);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) D(i, j) = D(j, i) = weight(rng);
  for (int via = 0; via < n; ++via)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) D(i, j) = std::min(D(i, j), D(i, via) + D(via, j));
  const auto edges = enumerate_simplices(n, 1);
  Eigen::VectorXd values(static_cast<Eigen::Index>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) values(static_cast<Eigen::Index>(e)) = D(edges[e][0], edges[e][1]);
  return KMetric(n, 2, std::move(values));
}

WeightedComplex random_weighted_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(1.0, 5.0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Facet> facets;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>(pick(rng))];
    facets.push_back({SimplexKey{std::min(a, b), std::max(a, b)}, weight(rng)});
  }
  return WeightedComplex(n, 2, std::move(facets));
}

WeightedComplex random_2_hypertree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(1.0, 5.0);
  auto triangles = enumerate_simplices(n, 2);
  std::shuffle(triangles.begin(), triangles.end(), rng);
  std::vector<SimplexKey> kept = triangles;
  auto rank_of = [&](const std::vector<SimplexKey>& set) {
    std::vector<std::int64_t> cols;
    for (const auto& s : set) cols.push_back(simplex_index(n, s));
    return numerical_rank(restricted_boundary_matrix(n, 2, cols));
  };
  const std::int64_t target = rank_of(kept);
  // Dropping a triangle that keeps the rank preserves "every 1-cycle bounds"; a minimal
  // spanning set is independent, so no 2-cycles remain at the end.
  for (const auto& tri : triangles) {
    std::vector<SimplexKey> trial;
    for (const auto& s : kept)
      if (s != tri) trial.push_back(s);
    if (rank_of(trial) == target) kept = std::move(trial);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Facet> facets;
  for (auto& s : kept) facets.push_back({std::move(s), weight(rng)});
  return WeightedComplex(n, 3, std::move(facets));
}

PointCloud random_point_cloud(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd P(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) P(i, j) = u(rng);
  return PointCloud(std::move(P));
}

std::vector<std::string> instance_names() {
  return {"subdivided-triangle", "discrete",     "four-point-c32", "six-point-c4",  "perimeter",
          "maxside",             "random-strong", "random-chain",  "random-tree",  "random-2-hypertree",
          "random-cloud"};
}

CorpusInstance make_instance(const std::string& name, const GenParams& p) {
  if (name == "subdivided-triangle") return subdivided_triangle();
  if (name == "discrete") return discrete_metric(p.n, p.k);
  if (name == "four-point-c32") return four_point_c32();
  if (name == "six-point-c4") return six_point_c4();
  if (name == "perimeter" || name == "maxside") {
    const PointCloud cloud = p.cloud ? *p.cloud : random_point_cloud(p.n, p.m, p.seed);
    return name == "perimeter" ? perimeter_3metric(cloud) : maxside_3metric(cloud);
  }
  if (name == "random-strong") return random_strong_metric(p.n, p.k, p.seed);
  if (name == "random-chain") return {name, random_chain_matrix(p.n, p.k, p.m, p.seed), {}, std::nullopt};
  if (name == "random-tree") return {name, random_weighted_tree(p.n, p.seed), {{"hypertree", true}}, std::nullopt};
  if (name == "random-2-hypertree") return {name, random_2_hypertree(p.n, p.seed), {{"hypertree", true}}, std::nullopt};
  if (name == "random-cloud") return {name, random_point_cloud(p.n, p.m, p.seed), {}, std::nullopt};
  throw ArgumentError("unknown instance '" + name + "'");
}

}  // namespace kmetric::corpus
