#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylab {

/// Points are stored 0-based. Text (cycle notation, files, reports) is 1-based.
using Point = std::uint32_t;
using Order = std::uint64_t;

/// A permutation of {0, ..., degree-1} stored as its image sequence.
///
/// Products compose left to right: `a * b` applies `a` first, then `b`,
/// so `(a * b)[x] == b[a[x]]`. Conjugation `x ^ g` is `g⁻¹ * x * g`.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Parses disjoint-cycle notation such as "(1,2,3)(4,5)" or "()".
  /// Throws ParseError on malformed input, duplicate points, or points > degree.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  Order order() const;
  /// g⁻¹ * this * g
  Permutation conjugate(const Permutation& g) const;

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// All cycle lengths (fixed points included), sorted descending.
  std::vector<std::size_t> cycle_type() const;
  /// Cycle lengths indexed by point.
  std::vector<std::uint32_t> cycle_lengths() const;
  std::vector<Point> support() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend void multiply_into(Permutation& out, const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::uint64_t hash() const noexcept;

 private:
  std::vector<Point> images_;
};

/// Right-multiplies in place without reallocating: `a = a * b`.
void multiply_into(Permutation& out, const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return static_cast<std::size_t>(p.hash());
  }
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace sylab
