#include "kmetric/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

namespace kmetric::io {

namespace {

struct LineCounter {
  int line = 1;
  int token_line = 1;
};

// Input iterator over a string that tracks the line of the last non-blank character read.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, LineCounter* c) : p_(p), counter_(c) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    const char ch = *p_;
    if (ch == '\n')
      ++counter_->line;
    else if (ch != ' ' && ch != '\t' && ch != '\r')
      counter_->token_line = counter_->line;
    ++p_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator tmp = *this;
    ++*this;
    return tmp;
  }
  bool operator==(const CountingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const CountingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_ = nullptr;
  LineCounter* counter_ = nullptr;
};

// Records the line of every value under its JSON pointer.
class LineSax : public nlohmann::json_sax<nlohmann::json> {
 public:
  LineSax(const LineCounter& c, std::map<std::string, int>& lines) : counter_(c), lines_(lines) {}

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override {
    std::string base = path();
    value();
    stack_.push_back({std::move(base), false, 0, {}});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    std::string base = path();
    value();
    stack_.push_back({std::move(base), true, 0, {}});
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    std::string base;
    bool array;
    std::size_t index;
    std::string key;
  };

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '~')
        out += "~0";
      else if (c == '/')
        out += "~1";
      else
        out += c;
    }
    return out;
  }

  std::string path() const {
    if (stack_.empty()) return "";
    const Frame& f = stack_.back();
    return f.base + "/" + (f.array ? std::to_string(f.index) : escape(f.key));
  }

  // Called for every value (including containers) before descending.
  bool value() {
    lines_.emplace(path(), counter_.token_line);
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
    return true;
  }

  const LineCounter& counter_;
  std::map<std::string, int>& lines_;
  std::vector<Frame> stack_;
};

int line_from_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

int Document::line_of(const std::string& pointer) const {
  std::string p = pointer;
  while (true) {
    const auto it = lines.find(p);
    if (it != lines.end()) return it->second;
    if (p.empty()) return 0;
    p = p.substr(0, p.rfind('/'));
  }
}

void Document::fail(const std::string& pointer, const std::string& message) const {
  const std::string field = pointer.empty() ? "/" : pointer;
  throw ParseError(file, line_of(pointer), field, file + ":" + std::to_string(line_of(pointer)) + ": " + field + ": " + message);
}

Document parse_document(const std::string& text, const std::string& file) {
  Document doc;
  doc.file = file;
  try {
    doc.value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const int line = line_from_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(file, line, "", file + ":" + std::to_string(line) + ": malformed JSON: " + e.what());
  }
  LineCounter counter;
  LineSax sax(counter, doc.lines);
  CountingIterator first(text.data(), &counter);
  CountingIterator last(text.data() + text.size(), &counter);
  nlohmann::json::sax_parse(first, last, &sax);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "", path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Document read_document(const std::string& path) { return parse_document(read_file(path), path); }

ObjectKind detect_kind(const Document& doc) {
  const auto& v = doc.value;
  if (!v.is_object()) return ObjectKind::unknown;
  if (v.contains("values")) return ObjectKind::kmetric;
  if (v.contains("data")) return ObjectKind::chain_matrix;
  if (v.contains("facets")) return ObjectKind::weighted_complex;
  if (v.contains("points")) return ObjectKind::point_cloud;
  if (v.contains("coeffs")) return ObjectKind::chain;
  return ObjectKind::unknown;
}

namespace {

const nlohmann::json& field(const Document& doc, const nlohmann::json& obj, const std::string& base, const std::string& name) {
  if (!obj.is_object()) doc.fail(base, "expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) doc.fail(base, "missing field '" + name + "'");
  return *it;
}

int get_int(const Document& doc, const nlohmann::json& obj, const std::string& base, const std::string& name, int min) {
  const auto& v = field(doc, obj, base, name);
  const std::string ptr = base + "/" + name;
  if (!v.is_number_integer()) doc.fail(ptr, "expected an integer");
  const auto x = v.get<long long>();
  if (x < min || x > 1'000'000) doc.fail(ptr, "value " + std::to_string(x) + " out of range");
  return static_cast<int>(x);
}

double get_number(const Document& doc, const nlohmann::json& v, const std::string& ptr) {
  if (!v.is_number()) doc.fail(ptr, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) doc.fail(ptr, "expected a finite number");
  return x;
}

const nlohmann::json& get_array(const Document& doc, const nlohmann::json& obj, const std::string& base, const std::string& name) {
  const auto& v = field(doc, obj, base, name);
  if (!v.is_array()) doc.fail(base + "/" + name, "expected an array");
  return v;
}

SimplexKey get_simplex(const Document& doc, const nlohmann::json& v, const std::string& ptr, int n, int size) {
  if (!v.is_array()) doc.fail(ptr, "expected a vertex list");
  if (static_cast<int>(v.size()) != size) doc.fail(ptr, "expected " + std::to_string(size) + " vertices");
  std::vector<int> verts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = ptr + "/" + std::to_string(i);
    if (!v[i].is_number_integer()) doc.fail(p, "expected a vertex index");
    const auto x = v[i].get<long long>();
    if (x < 0 || x >= n) doc.fail(p, "vertex " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")");
    verts.push_back(static_cast<int>(x));
  }
  for (std::size_t i = 1; i < verts.size(); ++i)
    if (verts[i] <= verts[i - 1]) doc.fail(ptr, "vertex list must be strictly increasing");
  return SimplexKey(std::move(verts));
}

template <typename Fn>
auto guarded(const Document& doc, Fn&& fn) {
  try {
    return fn();
  } catch (const ArgumentError& e) {
    doc.fail("", e.what());
  } catch (const SizeError& e) {
    doc.fail("", e.what());
  }
}

}  // namespace

KMetric kmetric_from_json(const Document& doc) {
  const auto& root = doc.value;
  const int n = get_int(doc, root, "", "n", 1);
  const int k = get_int(doc, root, "", "k", 2);
  if (k > n) doc.fail("/k", "arity exceeds the number of points");
  const std::int64_t count = guarded(doc, [&] { return simplex_count(n, k - 1); });
  const auto& entries = get_array(doc, root, "", "values");
  Eigen::VectorXd values(count);
  std::vector<bool> seen(static_cast<std::size_t>(count), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string base = "/values/" + std::to_string(i);
    const auto s = get_simplex(doc, field(doc, entries[i], base, "s"), base + "/s", n, k);
    const double d = get_number(doc, field(doc, entries[i], base, "d"), base + "/d");
    if (d < 0.0) doc.fail(base + "/d", "k-metric values must be non-negative");
    const auto idx = simplex_index(n, s);
    if (seen[static_cast<std::size_t>(idx)]) doc.fail(base + "/s", "duplicate entry");
    seen[static_cast<std::size_t>(idx)] = true;
    values(idx) = d;
  }
  if (static_cast<std::int64_t>(entries.size()) != count) {
    for (std::int64_t idx = 0; idx < count; ++idx) {
      if (!seen[static_cast<std::size_t>(idx)]) {
        const auto missing = enumerate_simplices(n, k - 1)[static_cast<std::size_t>(idx)];
        std::string name;
        for (int v : missing.vertices()) name += (name.empty() ? "" : ",") + std::to_string(v);
        doc.fail("/values", "missing entry for (" + name + "); all C(n,k) entries are required");
      }
    }
  }
  return guarded(doc, [&] { return KMetric(n, k, std::move(values)); });
}

ChainMatrix chain_matrix_from_json(const Document& doc) {
  const auto& root = doc.value;
  const int n = get_int(doc, root, "", "n", 1);
  const int k = get_int(doc, root, "", "k", 2);
  const int m = get_int(doc, root, "", "m", 0);
  if (k > n) doc.fail("/k", "arity exceeds the number of points");
  const std::int64_t rows = guarded(doc, [&] { return simplex_count(n, k - 2); });
  const auto& data = get_array(doc, root, "", "data");
  if (static_cast<std::int64_t>(data.size()) != rows * m)
    doc.fail("/data", "expected " + std::to_string(rows * m) + " numbers (C(n,k-1) x m, row-major)");
  Eigen::MatrixXd F(rows, m);
  for (std::int64_t r = 0; r < rows; ++r)
    for (int c = 0; c < m; ++c) {
      const auto i = static_cast<std::size_t>(r * m + c);
      F(r, c) = get_number(doc, data[i], "/data/" + std::to_string(i));
    }
  return guarded(doc, [&] { return ChainMatrix(n, k, std::move(F)); });
}

WeightedComplex complex_from_json(const Document& doc) {
  const auto& root = doc.value;
  const int n = get_int(doc, root, "", "n", 1);
  const int k = get_int(doc, root, "", "k", 2);
  if (k > n) doc.fail("/k", "arity exceeds the number of points");
  const auto& entries = get_array(doc, root, "", "facets");
  std::vector<Facet> facets;
  std::set<SimplexKey> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string base = "/facets/" + std::to_string(i);
    auto s = get_simplex(doc, field(doc, entries[i], base, "s"), base + "/s", n, k);
    const double w = get_number(doc, field(doc, entries[i], base, "w"), base + "/w");
    if (!(w > 0.0)) doc.fail(base + "/w", "facet weights must be positive");
    if (!seen.insert(s).second) doc.fail(base + "/s", "duplicate facet");
    facets.push_back({std::move(s), w});
  }
  return guarded(doc, [&] { return WeightedComplex(n, k, std::move(facets)); });
}

PointCloud point_cloud_from_json(const Document& doc) {
  const auto& root = doc.value;
  const int m = get_int(doc, root, "", "m", 1);
  const auto& pts = get_array(doc, root, "", "points");
  if (pts.empty()) doc.fail("/points", "point cloud needs at least one point");
  Eigen::MatrixXd P(static_cast<Eigen::Index>(pts.size()), m);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string base = "/points/" + std::to_string(i);
    if (!pts[i].is_array() || static_cast<int>(pts[i].size()) != m) doc.fail(base, "expected " + std::to_string(m) + " coordinates");
    for (int j = 0; j < m; ++j)
      P(static_cast<Eigen::Index>(i), j) = get_number(doc, pts[i][static_cast<std::size_t>(j)], base + "/" + std::to_string(j));
  }
  return guarded(doc, [&] { return PointCloud(std::move(P)); });
}

Chain chain_from_json(const Document& doc) {
  const auto& root = doc.value;
  const int n = get_int(doc, root, "", "n", 1);
  const int dim = get_int(doc, root, "", "dim", 0);
  if (dim >= n) doc.fail("/dim", "dimension out of range");
  const std::int64_t count = guarded(doc, [&] { return simplex_count(n, dim); });
  const auto& coeffs = get_array(doc, root, "", "coeffs");
  if (static_cast<std::int64_t>(coeffs.size()) != count) doc.fail("/coeffs", "expected " + std::to_string(count) + " coefficients");
  Eigen::VectorXd c(count);
  for (std::int64_t i = 0; i < count; ++i)
    c(i) = get_number(doc, coeffs[static_cast<std::size_t>(i)], "/coeffs/" + std::to_string(i));
  return Chain(n, dim, std::move(c));
}

Json number(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(x)) return Json("nan");
  return Json(x);
}

Json simplex_json(const SimplexKey& s) { return Json(s.vertices()); }

Json to_json(const KMetric& d) {
  Json j;
  j["n"] = d.n();
  j["k"] = d.k();
  Json values = Json::array();
  const auto simplices = enumerate_simplices(d.n(), d.k() - 1);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    Json e;
    e["s"] = simplex_json(simplices[i]);
    e["d"] = d.values()(static_cast<Eigen::Index>(i));
    values.push_back(std::move(e));
  }
  j["values"] = std::move(values);
  return j;
}

Json to_json(const ChainMatrix& F) {
  Json j;
  j["n"] = F.n;
  j["k"] = F.k;
  j["m"] = F.m();
  Json data = Json::array();
  for (Eigen::Index r = 0; r < F.data.rows(); ++r)
    for (Eigen::Index c = 0; c < F.data.cols(); ++c) data.push_back(F.data(r, c));
  j["data"] = std::move(data);
  return j;
}

Json to_json(const WeightedComplex& K) {
  Json j;
  j["n"] = K.n;
  j["k"] = K.k;
  Json facets = Json::array();
  for (const auto& f : K.facets) {
    Json e;
    e["s"] = simplex_json(f.simplex);
    e["w"] = f.weight;
    facets.push_back(std::move(e));
  }
  j["facets"] = std::move(facets);
  return j;
}

Json to_json(const PointCloud& cloud) {
  Json j;
  j["m"] = cloud.m();
  Json pts = Json::array();
  for (int i = 0; i < cloud.n(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < cloud.m(); ++c) row.push_back(cloud.points(i, c));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j;
}

Json to_json(const Chain& c) {
  Json j;
  j["n"] = c.n;
  j["dim"] = c.dim;
  j["coeffs"] = std::vector<double>(c.coeffs.data(), c.coeffs.data() + c.coeffs.size());
  return j;
}

Json chain_entries(const Chain& c, double zero_tol) {
  Json out = Json::array();
  const auto simplices = enumerate_simplices(c.n, c.dim);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const double v = c.coeffs(static_cast<Eigen::Index>(i));
    if (std::abs(v) <= zero_tol) continue;
    Json e;
    e["s"] = simplex_json(simplices[i]);
    e["c"] = v;
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["is_weak"] = r.is_weak;
  j["is_strong"] = r.is_strong ? Json(*r.is_strong) : Json(nullptr);
  j["is_pseudo"] = r.is_pseudo();
  Json pseudo = Json::array();
  for (const auto& s : r.pseudo_violations) pseudo.push_back(simplex_json(s));
  j["pseudo_violations"] = std::move(pseudo);
  Json weak = Json::array();
  for (const auto& v : r.weak_violations) {
    Json e;
    e["s"] = simplex_json(v.simplex);
    e["y"] = v.y;
    e["d"] = v.value;
    e["replacement_sum"] = v.replacement;
    weak.push_back(std::move(e));
  }
  j["weak_violations"] = std::move(weak);
  if (r.strong_witness) {
    Json w;
    w["s"] = simplex_json(r.strong_witness->simplex);
    w["d"] = r.strong_witness->value;
    w["cost"] = r.strong_witness->cost;
    w["chain"] = chain_entries(r.strong_witness->chain, 1e-9);
    j["strong_witness"] = std::move(w);
  } else {
    j["strong_witness"] = nullptr;
  }
  j["strong_margin"] = r.strong_margin ? number(*r.strong_margin) : Json(nullptr);
  j["lps_solved"] = r.lps_solved;
  return j;
}

Json to_json(const HypertreeReport& r) {
  Json j;
  j["is_hypertree"] = r.is_hypertree();
  j["acyclic"] = r.acyclic;
  j["fills_boundaries"] = r.fills_boundaries;
  j["facet_count"] = r.facet_count;
  j["boundary_rank"] = r.boundary_rank;
  j["cycle_dimension"] = r.cycle_dimension;
  return j;
}

Json to_json(const corpus::CorpusInstance& inst) {
  Json j = std::visit([](const auto& payload) { return to_json(payload); }, inst.payload);
  j["name"] = inst.name;
  Json expected = Json::object();
  for (const auto& [key, value] : inst.expected)
    std::visit([&](const auto& v) { expected[key] = v; }, value);
  j["expected"] = std::move(expected);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path);
  out << dump(j);
  if (!out) throw ArgumentError("failed writing " + path);
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace kmetric::io
