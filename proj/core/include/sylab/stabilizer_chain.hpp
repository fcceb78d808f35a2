#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "sylab/permutation.hpp"

namespace sylab {

struct ChainOptions {
  /// Points forced to the front of the base, in this order.
  std::vector<Point> base_prefix;
  /// When nonzero, the random phase stops once this order is reached and the
  /// order equality certifies completeness.
  Order known_order = 0;
  std::uint64_t seed = 0x5eedULL;
};

struct ChainLevel {
  Point base_point = 0;
  /// Strong generators fixing all earlier base points.
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  /// Per point: position in `orbit`, or -1.
  std::vector<std::int32_t> orbit_pos;
  /// Schreier tree: generator index used to reach a point (-1 at the root).
  std::vector<std::int32_t> label;
  std::vector<Point> parent;
  /// Explicit coset representatives parallel to `orbit` (empty when too large).
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;
};

/// Base and strong generating set with basic orbits and transversals.
class StabilizerChain {
 public:
  StabilizerChain() = default;

  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               const ChainOptions& options = {});
  /// Rebuilds levels from a known base and strong generating set (no sifting).
  static StabilizerChain from_bsgs(std::size_t degree, std::vector<Point> base,
                                   std::vector<Permutation> strong_generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  std::span<const ChainLevel> levels() const noexcept { return levels_; }
  const ChainLevel& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }

  /// Product of basic orbit lengths. Throws ResourceLimitError on overflow.
  Order order() const;
  bool contains(const Permutation& g) const;
  /// Strips g through levels [from, length). Returns the residue and the level
  /// at which stripping stopped (length() when all levels were passed).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  /// Coset representative at `level` mapping the base point to `pt`.
  Permutation coset_rep(std::size_t level, Point pt) const;
  /// Explicit representative when stored, otherwise nullptr.
  const Permutation* explicit_rep(std::size_t level, Point pt) const;

  Permutation random_element(std::mt19937_64& rng) const;
  /// Visits every group element once. Stop early by returning false.
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

 private:
  void add_generator(Permutation g, std::size_t level_hint);
  void rebuild_orbit(std::size_t level);
  std::size_t sift_level(const Permutation& g) const;
  Point choose_new_base_point(const Permutation& g) const;

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
  std::vector<Permutation> strong_;
  std::vector<Point> priority_;  // base extension order
};

}  // namespace sylab
