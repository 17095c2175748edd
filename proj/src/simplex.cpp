#include "kmetric/simplex.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kmetric/errors.hpp"

namespace kmetric {

SimplexKey::SimplexKey(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ArgumentError("simplex must have at least one vertex");
  if (vertices_.front() < 0) throw ArgumentError("negative vertex index");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i] <= vertices_[i - 1])
      throw ArgumentError("simplex vertices must be strictly increasing");
  }
}

bool SimplexKey::contains(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SimplexKey SimplexKey::face(int i) const {
  if (i < 0 || i >= size() || size() < 2) throw ArgumentError("face index out of range");
  std::vector<int> out;
  out.reserve(vertices_.size() - 1);
  for (int j = 0; j < size(); ++j)
    if (j != i) out.push_back(vertices_[static_cast<std::size_t>(j)]);
  return SimplexKey(std::move(out));
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - k + i);
    // r * num / i is exact at every step; guard the multiplication.
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::int64_t simplex_count(int n, int dim) {
  if (n < 1 || dim < 0 || dim >= n)
    throw ArgumentError("dimension " + std::to_string(dim) + " out of range for " + std::to_string(n) +
                        " vertices");
  const std::uint64_t c = binomial(n, dim + 1);
  if (c > static_cast<std::uint64_t>(kMaxSimplices))
    throw SizeError("C(" + std::to_string(n) + "," + std::to_string(dim + 1) + ") exceeds the dense size guard");
  return static_cast<std::int64_t>(c);
}

std::vector<SimplexKey> enumerate_simplices(int n, int dim) {
  const std::int64_t count = simplex_count(n, dim);
  std::vector<SimplexKey> out;
  out.reserve(static_cast<std::size_t>(count));
  const int r = dim + 1;
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.emplace_back(c);
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::int64_t simplex_index(int n, std::span<const int> v) {
  const auto r = static_cast<std::int64_t>(v.size());
  if (r == 0 || r > n) throw ArgumentError("simplex size out of range");
  std::int64_t rank = 0;
  int prev = -1;
  for (std::int64_t i = 0; i < r; ++i) {
    const int cur = v[static_cast<std::size_t>(i)];
    if (cur <= prev || cur >= n) throw ArgumentError("simplex vertices must be sorted and in range");
    // Count combinations that pick a smaller vertex at position i.
    for (int j = prev + 1; j < cur; ++j) rank += static_cast<std::int64_t>(binomial(n - 1 - j, r - 1 - i));
    prev = cur;
  }
  return rank;
}

bool has_repeats(std::span<const int> sequence) {
  std::vector<int> s(sequence.begin(), sequence.end());
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

int orientation_sign(std::span<const int> sequence) {
  // Parity via cycle decomposition of the sorting permutation.
  const std::size_t k = sequence.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sequence[a] < sequence[b]; });
  for (std::size_t i = 1; i < k; ++i)
    if (sequence[order[i]] == sequence[order[i - 1]]) throw ArgumentError("orientation of a sequence with a repeated vertex");
  std::vector<bool> seen(k, false);
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

OrientedSimplex orient(std::span<const int> sequence) {
  return OrientedSimplex{std::vector<int>(sequence.begin(), sequence.end()), orientation_sign(sequence)};
}

SimplexKey canonical_key(std::span<const int> sequence) {
  std::vector<int> s(sequence.begin(), sequence.end());
  std::sort(s.begin(), s.end());
  return SimplexKey(std::move(s));
}

}  // namespace kmetric
