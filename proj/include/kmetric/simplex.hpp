#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kmetric {

/// Canonical (sorted) vertex set of a simplex. dim = size - 1.
class SimplexKey {
 public:
  SimplexKey() = default;
  /// Throws ArgumentError unless `vertices` is strictly increasing and non-negative.
  explicit SimplexKey(std::vector<int> vertices);
  SimplexKey(std::initializer_list<int> vertices) : SimplexKey(std::vector<int>(vertices)) {}

  const std::vector<int>& vertices() const { return vertices_; }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  int size() const { return static_cast<int>(vertices_.size()); }
  int operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  bool contains(int v) const;

  /// Face obtained by dropping position i; also sorted.
  SimplexKey face(int i) const;

  auto operator<=>(const SimplexKey&) const = default;

 private:
  std::vector<int> vertices_;
};

/// Ordered vertex sequence with its parity relative to the standard (sorted) orientation.
struct OrientedSimplex {
  std::vector<int> sequence;
  int sign = 1;
};

/// Binomial coefficient; saturates at UINT64_MAX rather than overflowing.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Number of dim-simplices on n vertices, C(n, dim + 1), checked against the dense size guard.
std::int64_t simplex_count(int n, int dim);

/// Dense operators refuse simplex lists longer than this.
inline constexpr std::int64_t kMaxSimplices = 2'000'000;

/// All dim-simplices on [0, n) in lexicographic order; position is the canonical index.
std::vector<SimplexKey> enumerate_simplices(int n, int dim);

/// Canonical index of a sorted simplex on n vertices.
std::int64_t simplex_index(int n, std::span<const int> sorted_vertices);
inline std::int64_t simplex_index(int n, const SimplexKey& s) { return simplex_index(n, s.vertices()); }

/// +1 for an even sorting permutation, -1 for odd. Repeated vertices throw.
int orientation_sign(std::span<const int> sequence);

/// Sorts a sequence into a SimplexKey and returns the parity of that sort.
OrientedSimplex orient(std::span<const int> sequence);
SimplexKey canonical_key(std::span<const int> sequence);

bool has_repeats(std::span<const int> sequence);

}  // namespace kmetric
