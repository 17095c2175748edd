#include <doctest.h>

#include <random>

#include "kmetric/corpus.hpp"
#include "kmetric/errors.hpp"
#include "kmetric/io.hpp"

namespace io = kmetric::io;
namespace corpus = kmetric::corpus;

namespace {

io::Document reparse(const io::Json& j) { return io::parse_document(io::dump(j), "round-trip.json"); }

// Runs fn and returns the ParseError it throws.
template <typename Fn>
kmetric::ParseError parse_failure(Fn&& fn) {
  try {
    fn();
  } catch (const kmetric::ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return kmetric::ParseError("", 0, "", "");
}

}  // namespace

TEST_CASE("writers round trip bit-exactly") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd values = Eigen::VectorXd::NullaryExpr(10, [&] { return u(rng) / 3.0; });
  const kmetric::KMetric d(5, 3, values);
  const auto d2 = io::kmetric_from_json(reparse(io::to_json(d)));
  CHECK(d2.n() == 5);
  CHECK(d2.k() == 3);
  CHECK(d2.values() == d.values());

  const auto F = corpus::random_chain_matrix(5, 3, 3, 7);
  const auto F2 = io::chain_matrix_from_json(reparse(io::to_json(F)));
  CHECK(F2.data == F.data);
  CHECK(F2.k == 3);

  const auto H = corpus::random_2_hypertree(5, 2);
  const auto H2 = io::complex_from_json(reparse(io::to_json(H)));
  REQUIRE(H2.facets.size() == H.facets.size());
  for (std::size_t i = 0; i < H.facets.size(); ++i) {
    CHECK(H2.facets[i].simplex == H.facets[i].simplex);
    CHECK(H2.facets[i].weight == H.facets[i].weight);
  }

  const auto P = corpus::random_point_cloud(4, 3, 1);
  CHECK(io::point_cloud_from_json(reparse(io::to_json(P))).points == P.points);

  const kmetric::Chain c(4, 1, Eigen::VectorXd::NullaryExpr(6, [&] { return u(rng) - 0.5; }));
  CHECK(io::chain_from_json(reparse(io::to_json(c))).coeffs == c.coeffs);

  // Instance files carry extra keys that the readers ignore.
  const auto inst = corpus::subdivided_triangle();
  const auto doc = reparse(io::to_json(inst));
  CHECK(io::detect_kind(doc) == io::ObjectKind::kmetric);
  CHECK(io::kmetric_from_json(doc).values() == std::get<kmetric::KMetric>(inst.payload).values());
}

TEST_CASE("kind detection") {
  CHECK(io::detect_kind(reparse(io::to_json(std::get<kmetric::ChainMatrix>(corpus::four_point_c32().payload)))) ==
        io::ObjectKind::chain_matrix);
  CHECK(io::detect_kind(reparse(io::to_json(corpus::random_weighted_tree(4, 1)))) == io::ObjectKind::weighted_complex);
  CHECK(io::detect_kind(reparse(io::to_json(corpus::random_point_cloud(3, 2, 1)))) == io::ObjectKind::point_cloud);
  CHECK(io::detect_kind(io::parse_document("[1, 2]")) == io::ObjectKind::unknown);
}

TEST_CASE("malformed JSON reports the line") {
  const std::string text = "{\n  \"n\": 3,\n  \"k\": 2,\n  \"values\": [,]\n}\n";
  const auto e = parse_failure([&] { io::parse_document(text, "bad.json"); });
  CHECK(e.file() == "bad.json");
  CHECK(e.line() == 4);
}

TEST_CASE("k-metric parse errors name line and field") {
  const std::string missing =
      "{\n"
      "  \"n\": 3,\n"
      "  \"k\": 2,\n"
      "  \"values\": [\n"
      "    {\"s\": [0, 1], \"d\": 1},\n"
      "    {\"s\": [0, 2], \"d\": 1}\n"
      "  ]\n"
      "}\n";
  const auto e1 = parse_failure([&] { io::kmetric_from_json(io::parse_document(missing, "m.json")); });
  CHECK(e1.field() == "/values");
  CHECK(e1.line() == 4);
  CHECK(std::string(e1.what()).find("(1,2)") != std::string::npos);

  const std::string unsorted =
      "{\"n\": 3, \"k\": 2, \"values\": [\n"
      "  {\"s\": [0, 1], \"d\": 1},\n"
      "  {\"s\": [2, 0], \"d\": 1},\n"
      "  {\"s\": [1, 2], \"d\": 1}]}\n";
  const auto e2 = parse_failure([&] { io::kmetric_from_json(io::parse_document(unsorted, "u.json")); });
  CHECK(e2.field() == "/values/1/s");
  CHECK(e2.line() == 3);

  const std::string duplicate =
      "{\"n\": 3, \"k\": 2, \"values\": [\n"
      "  {\"s\": [0, 1], \"d\": 1},\n"
      "  {\"s\": [0, 1], \"d\": 1},\n"
      "  {\"s\": [1, 2], \"d\": 1}]}\n";
  CHECK(parse_failure([&] { io::kmetric_from_json(io::parse_document(duplicate)); }).field() == "/values/1/s");

  const std::string negative =
      "{\"n\": 2, \"k\": 2,\n"
      " \"values\": [{\"s\": [0, 1],\n"
      "   \"d\": -1}]}\n";
  const auto e4 = parse_failure([&] { io::kmetric_from_json(io::parse_document(negative)); });
  CHECK(e4.field() == "/values/0/d");
  CHECK(e4.line() == 3);

  const std::string non_integer = "{\"n\": 2.5, \"k\": 2, \"values\": []}";
  CHECK(parse_failure([&] { io::kmetric_from_json(io::parse_document(non_integer)); }).field() == "/n");

  const std::string no_values = "{\"n\": 2, \"k\": 2}";
  CHECK(parse_failure([&] { io::kmetric_from_json(io::parse_document(no_values)); }).field() == "/");

  const std::string out_of_range = "{\"n\": 2, \"k\": 2, \"values\": [{\"s\": [0, 2], \"d\": 1}]}";
  CHECK(parse_failure([&] { io::kmetric_from_json(io::parse_document(out_of_range)); }).field() == "/values/0/s/1");
}

TEST_CASE("other formats validate shape") {
  const std::string short_data = "{\"n\": 3, \"k\": 3, \"m\": 2, \"data\": [1, 2, 3]}";
  CHECK(parse_failure([&] { io::chain_matrix_from_json(io::parse_document(short_data)); }).field() == "/data");

  const std::string bad_weight = "{\"n\": 3, \"k\": 2, \"facets\": [{\"s\": [0, 1], \"w\": 0}]}";
  CHECK(parse_failure([&] { io::complex_from_json(io::parse_document(bad_weight)); }).field() == "/facets/0/w");

  const std::string ragged = "{\"m\": 2, \"points\": [[0, 0], [1]]}";
  CHECK(parse_failure([&] { io::point_cloud_from_json(io::parse_document(ragged)); }).field() == "/points/1");

  const std::string text_entry = "{\"m\": 1, \"points\": [[\"x\"]]}";
  CHECK(parse_failure([&] { io::point_cloud_from_json(io::parse_document(text_entry)); }).field() == "/points/0/0");
}

TEST_CASE("reports serialize in a stable order") {
  const auto rep = kmetric::check_strong(std::get<kmetric::KMetric>(corpus::subdivided_triangle().payload));
  const auto j = io::to_json(rep);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys.front() == "is_weak");
  CHECK(j["strong_witness"]["cost"].get<double>() == doctest::Approx(7.0));
  CHECK(j["strong_witness"]["chain"].size() == 7);
  CHECK(io::dump(j) == io::dump(io::to_json(rep)));
}

TEST_CASE("numbers and digests") {
  CHECK(io::number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::number(1.5) == 1.5);
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == "af63dc4c8601ec8c");
}
