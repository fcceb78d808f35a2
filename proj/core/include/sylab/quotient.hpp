#pragma once

#include <unordered_map>
#include <vector>

#include "sylab/limits.hpp"
#include "sylab/perm_group.hpp"

namespace sylab {

/// Lexicographically least element of the right coset K g. Requires a chain
/// of K whose base is increasing (see `coset_chain`).
Permutation min_coset_element(const StabilizerChain& k_chain, const Permutation& g);
/// Chain of K with base 1..n, suitable for `min_coset_element`.
StabilizerChain coset_chain(const PermGroup& k);

/// Right cosets K g of K in G keyed by least element and numbered in
/// discovery order; empty when there are more than `bound` cosets.
std::unordered_map<Permutation, Point, PermutationHash> right_coset_keys(
    const PermGroup& g, const StabilizerChain& k_chain, Order bound);

/// Faithful permutation representation of G/N together with the natural map.
class Quotient {
 public:
  enum class Kind { Identity, Blocks, Cosets };

  const PermGroup& group() const noexcept { return image_; }
  Kind kind() const noexcept { return kind_; }
  /// Image of x in G/N.
  Permutation map(const Permutation& x) const;

 private:
  friend Quotient quotient_representation(const PermGroup&, const PermGroup&, const Limits&,
                                          const std::vector<PermGroup>&);
  Kind kind_ = Kind::Identity;
  PermGroup image_;
  std::size_t degree_ = 0;
  std::vector<Point> block_of_;
  StabilizerChain k_chain_;
  std::unordered_map<Permutation, Point, PermutationHash> coset_index_;
};

/// G/N for N normal in G. Tries the action on N-orbits, then coset actions
/// on each hint K ≥ N, then the regular action on cosets of N. Throws
/// DomainError if N is not normal in G and ResourceLimitError ("quotient too
/// large") when no faithful action within `limits.max_quotient_degree` fits.
Quotient quotient_representation(const PermGroup& g, const PermGroup& n,
                                 const Limits& limits = default_limits(),
                                 const std::vector<PermGroup>& hints = {});

}  // namespace sylab
