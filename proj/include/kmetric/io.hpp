#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "kmetric/coboundary.hpp"
#include "kmetric/corpus.hpp"
#include "kmetric/hypertree.hpp"
#include "kmetric/kmetric.hpp"
#include "kmetric/volume.hpp"

namespace kmetric::io {

using Json = nlohmann::ordered_json;

/// Parsed JSON plus the source line of every value, keyed by JSON pointer.
struct Document {
  std::string file;
  nlohmann::json value;
  std::map<std::string, int> lines;

  /// Line of `pointer`, falling back to the nearest recorded ancestor.
  int line_of(const std::string& pointer) const;
  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const;
};

/// Throws ParseError with the offending line on malformed JSON.
Document parse_document(const std::string& text, const std::string& file = "<memory>");
Document read_document(const std::string& path);

enum class ObjectKind { kmetric, chain_matrix, weighted_complex, point_cloud, chain, unknown };
ObjectKind detect_kind(const Document& doc);

KMetric kmetric_from_json(const Document& doc);
ChainMatrix chain_matrix_from_json(const Document& doc);
WeightedComplex complex_from_json(const Document& doc);
PointCloud point_cloud_from_json(const Document& doc);
Chain chain_from_json(const Document& doc);

Json to_json(const KMetric& d);
Json to_json(const ChainMatrix& F);
Json to_json(const WeightedComplex& K);
Json to_json(const PointCloud& cloud);
Json to_json(const Chain& c);
Json to_json(const VerificationReport& report);
Json to_json(const HypertreeReport& report);
Json to_json(const corpus::CorpusInstance& inst);

Json simplex_json(const SimplexKey& s);
/// Nonzero entries of a chain as [{"s": [...], "c": value}].
Json chain_entries(const Chain& c, double zero_tol = 1e-12);

/// Finite numbers as-is, infinities as the strings "inf" / "-inf".
Json number(double x);

std::string dump(const Json& j);
void write_file(const std::string& path, const Json& j);
std::string read_file(const std::string& path);

/// FNV-1a 64-bit digest, hex encoded.
std::string digest(const std::string& bytes);

}  // namespace kmetric::io
