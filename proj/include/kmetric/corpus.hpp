#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kmetric/coboundary.hpp"
#include "kmetric/hypertree.hpp"
#include "kmetric/kmetric.hpp"
#include "kmetric/volume.hpp"

namespace kmetric::corpus {

using Payload = std::variant<KMetric, ChainMatrix, WeightedComplex, PointCloud>;
using Expected = std::variant<bool, double, std::vector<double>>;

struct CorpusInstance {
  std::string name;
  Payload payload;
  std::map<std::string, Expected> expected;
  /// Inducing chain matrix, when the instance is a metric with a known coboundary form.
  std::optional<ChainMatrix> generator;
};

/// Six points; the seven triangles of a subdivision of (0,1,2) get 1, every other triple 10.
CorpusInstance subdivided_triangle();
/// The seven subdivision triangles, oriented counterclockwise.
std::vector<std::vector<int>> subdivision_triangles();

/// All distinct k-tuples at distance 1. For k = 3 also carries the all-ones 1-chain.
CorpusInstance discrete_metric(int n, int k);

/// Four-point planar coboundary 3-metric with values {0, 1, 1, 1}.
CorpusInstance four_point_c32();

/// Apex extension of the all-ones 1-chain on five points: a 6-point, 1-dimensional 4-metric.
CorpusInstance six_point_c4();

CorpusInstance perimeter_3metric(const PointCloud& cloud);
CorpusInstance maxside_3metric(const PointCloud& cloud);

/// mbc metric of the complete complex with weights drawn from [1, 10).
CorpusInstance random_strong_metric(int n, int k, std::uint64_t seed);

// Randomized families used by the property and acceptance suites.

/// Entries uniform in [-1, 1].
ChainMatrix random_chain_matrix(int n, int k, int m, std::uint64_t seed);
/// Shortest-path metric of a complete graph with weights in [1, 10).
KMetric random_graph_metric(int n, std::uint64_t seed);
/// Random spanning tree (k = 2) with weights in [1, 5).
WeightedComplex random_weighted_tree(int n, std::uint64_t seed);
/// 2-hypertree on n vertices by greedy triangle deletion from the complete complex.
WeightedComplex random_2_hypertree(int n, std::uint64_t seed);
/// Coordinates uniform in [-1, 1].
PointCloud random_point_cloud(int n, int m, std::uint64_t seed);

/// Names accepted by make_instance.
std::vector<std::string> instance_names();

struct GenParams {
  int n = 5;
  int k = 3;
  int m = 2;  ///< columns or ambient dimension for the random families
  std::uint64_t seed = 1;
  std::optional<PointCloud> cloud;  ///< perimeter / maxside; a random cloud when absent
};

CorpusInstance make_instance(const std::string& name, const GenParams& params);

}  // namespace kmetric::corpus
