#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sylab/perm_group.hpp"

namespace sylab {

/// Base-image backtrack problem over a stabilizer chain.
struct SearchProblem {
  /// Called after each new base image; `base` and `images` have equal length
  /// and the last entry is the newest. Returning false prunes the subtree.
  std::function<bool(std::span<const Point> base, std::span<const Point> images)> prune;
  /// Property tested at the leaves.
  std::function<bool(const Permutation&)> accept;
};

/// Chain for `g` whose base starts with `prefix` (redundant points dropped).
StabilizerChain adapted_chain(const PermGroup& g, std::span<const Point> prefix);

/// All elements of the group described by `chain` with the property, as a
/// subgroup. The property must define a subgroup; `known` lists elements
/// already known to satisfy it and is used for orbit pruning.
PermGroup subgroup_search(const StabilizerChain& chain, const SearchProblem& problem,
                          const std::vector<Permutation>& known = {});

/// First element (in search order) with the property, if any.
std::optional<Permutation> element_search(const StabilizerChain& chain,
                                          const SearchProblem& problem);

/// Pruning for maps sending the cycles of `x` onto the cycles of `y`
/// (centralizer when x == y, conjugator otherwise). Use together with
/// `cycle_base(x)` as the base prefix.
std::function<bool(std::span<const Point>, std::span<const Point>)> cycle_pruner(
    const Permutation& x, const Permutation& y);
/// Points listed cycle by cycle, longest cycles first, fixed points last.
std::vector<Point> cycle_base(const Permutation& x);

/// Pruning for maps sending the orbits of `a` onto the orbits of `b`.
std::function<bool(std::span<const Point>, std::span<const Point>)> orbit_pruner(
    const PermGroup& a, const PermGroup& b);
/// Points listed orbit by orbit of `a`, largest orbits first.
std::vector<Point> orbit_base(const PermGroup& a);

/// Orbit of every point under the group generated by `gens`, as ids.
std::vector<std::uint32_t> orbit_ids(std::size_t degree, const std::vector<Permutation>& gens);

}  // namespace sylab
