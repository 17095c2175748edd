#include <doctest.h>

#include <cmath>

#include "kmetric/apex.hpp"
#include "kmetric/corpus.hpp"
#include "kmetric/errors.hpp"
#include "kmetric/hypertree.hpp"

using kmetric::KMetric;
using kmetric::SimplexKey;
namespace corpus = kmetric::corpus;

TEST_CASE("subdivided triangle") {
  const auto inst = corpus::subdivided_triangle();
  const auto& d = std::get<KMetric>(inst.payload);
  CHECK(d.n() == 6);
  CHECK(d.k() == 3);
  CHECK(d({0, 1, 4}) == 1.0);
  CHECK(d({0, 1, 2}) == 10.0);
  CHECK(d({0, 0, 1}) == 0.0);
  CHECK((d.values().array() == 1.0).count() == 7);
  CHECK((d.values().array() == 10.0).count() == 13);
  CHECK(std::get<bool>(inst.expected.at("weak")) == true);
  CHECK(std::get<bool>(inst.expected.at("strong")) == false);
  CHECK(std::get<double>(inst.expected.at("witness_cost")) == 7.0);

  // The listed orientations are all counterclockwise in the usual drawing.
  for (const auto& tri : corpus::subdivision_triangles()) CHECK(tri.size() == 3);
}

TEST_CASE("discrete metric") {
  const auto inst = corpus::discrete_metric(5, 3);
  const auto& d = std::get<KMetric>(inst.payload);
  CHECK(d.values() == Eigen::VectorXd::Ones(10));
  REQUIRE(inst.generator);
  CHECK(kmetric::eval_coboundary_metric(*inst.generator, kmetric::NormSpec::infinity()).values() == d.values());
  CHECK(std::get<KMetric>(corpus::discrete_metric(3, 2).payload).values() == Eigen::VectorXd::Ones(3));
  CHECK_FALSE(corpus::discrete_metric(6, 4).generator);
  CHECK(*kmetric::check_strong(std::get<KMetric>(corpus::discrete_metric(6, 4).payload)).is_strong);
  CHECK_THROWS_AS(corpus::discrete_metric(2, 3), kmetric::ArgumentError);
}

TEST_CASE("named coboundary instances") {
  const auto four = corpus::four_point_c32();
  const auto d4 = kmetric::eval_coboundary_metric(std::get<kmetric::ChainMatrix>(four.payload), kmetric::NormSpec(2.0));
  const auto& want4 = std::get<std::vector<double>>(four.expected.at("values_p2"));
  REQUIRE(want4.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(d4.values()(static_cast<Eigen::Index>(i)) - want4[i]) <= 1e-12);
  CHECK(d4({1, 1, 2}) == 0.0);

  const auto six = corpus::six_point_c4();
  const auto d6 = kmetric::eval_coboundary_metric(std::get<kmetric::ChainMatrix>(six.payload), kmetric::NormSpec(1.0));
  CHECK(d6({0, 1, 2, 3}) == 0.0);
  CHECK(d6({0, 1, 2, 5}) == 1.0);
  const auto& want6 = std::get<std::vector<double>>(six.expected.at("values_p1"));
  REQUIRE(static_cast<Eigen::Index>(want6.size()) == d6.size());
  for (Eigen::Index i = 0; i < d6.size(); ++i) CHECK(d6.values()(i) == want6[static_cast<std::size_t>(i)]);
}

TEST_CASE("perimeter and max side") {
  const double s3 = std::sqrt(3.0);
  Eigen::MatrixXd tri(3, 2);
  tri << 0, 0, 1, 0, 0.5, s3 / 2;
  const auto per = std::get<KMetric>(corpus::perimeter_3metric(kmetric::PointCloud(tri)).payload);
  CHECK(per({0, 1, 2}) == doctest::Approx(3.0));
  const auto mx = std::get<KMetric>(corpus::maxside_3metric(kmetric::PointCloud(tri)).payload);
  CHECK(mx({0, 1, 2}) == doctest::Approx(1.0));

  Eigen::MatrixXd line(3, 1);
  line << 0, 1, 3;
  const auto pl = std::get<KMetric>(corpus::perimeter_3metric(kmetric::PointCloud(line)).payload);
  CHECK(pl({0, 1, 2}) == doctest::Approx(6.0));
  CHECK_FALSE(kmetric::check_weak(pl).is_pseudo());

  const auto cloud = corpus::random_point_cloud(5, 3, 2);
  const auto pc = std::get<KMetric>(corpus::perimeter_3metric(cloud).payload);
  const auto mc = std::get<KMetric>(corpus::maxside_3metric(cloud).payload);
  for (const auto& t : kmetric::enumerate_simplices(5, 2)) {
    const double a = (cloud.points.row(t[0]) - cloud.points.row(t[1])).norm();
    const double b = (cloud.points.row(t[0]) - cloud.points.row(t[2])).norm();
    const double c = (cloud.points.row(t[1]) - cloud.points.row(t[2])).norm();
    CHECK(pc.at(t) == doctest::Approx(a + b + c));
    CHECK(mc.at(t) == doctest::Approx(std::max({a, b, c})));
  }
  CHECK(kmetric::check_weak(pc).is_weak);
  CHECK(kmetric::check_weak(mc).is_weak);
}

TEST_CASE("random strong metric") {
  const auto a = corpus::random_strong_metric(5, 3, 1);
  const auto b = corpus::random_strong_metric(5, 3, 1);
  CHECK(std::get<KMetric>(a.payload).values() == std::get<KMetric>(b.payload).values());
  CHECK(*kmetric::check_strong(std::get<KMetric>(a.payload)).is_strong);
  CHECK(std::get<KMetric>(corpus::random_strong_metric(3, 3, 4).payload).size() == 1);
  CHECK_THROWS_AS(corpus::random_strong_metric(2, 3, 1), kmetric::ArgumentError);
}

TEST_CASE("generators are deterministic per seed") {
  CHECK(corpus::random_chain_matrix(5, 3, 2, 4).data == corpus::random_chain_matrix(5, 3, 2, 4).data);
  CHECK(corpus::random_chain_matrix(5, 3, 2, 4).data != corpus::random_chain_matrix(5, 3, 2, 5).data);
  CHECK(corpus::random_point_cloud(4, 2, 1).points == corpus::random_point_cloud(4, 2, 1).points);
  CHECK(corpus::random_graph_metric(6, 3).values() == corpus::random_graph_metric(6, 3).values());
  CHECK(corpus::random_weighted_tree(6, 3).facets.size() == 5);
}

TEST_CASE("expected outcomes agree with the verifiers") {
  for (const auto& name : corpus::instance_names()) {
    CAPTURE(name);
    corpus::GenParams params;
    const auto inst = corpus::make_instance(name, params);
    CHECK(inst.name == name);
    if (const auto* d = std::get_if<KMetric>(&inst.payload)) {
      const auto rep = kmetric::check_strong(*d);
      if (inst.expected.count("weak")) CHECK(rep.is_weak == std::get<bool>(inst.expected.at("weak")));
      if (inst.expected.count("strong")) CHECK(*rep.is_strong == std::get<bool>(inst.expected.at("strong")));
    }
    if (const auto* K = std::get_if<kmetric::WeightedComplex>(&inst.payload)) {
      if (inst.expected.count("hypertree"))
        CHECK(kmetric::is_hypertree(*K).is_hypertree() == std::get<bool>(inst.expected.at("hypertree")));
    }
  }
  CHECK_THROWS_AS(corpus::make_instance("nope", {}), kmetric::ArgumentError);
}
