#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "sylab/limits.hpp"
#include "sylab/perm_group.hpp"
#include "sylab/stabilizer_chain.hpp"

namespace sylab {

struct ConjugacyClass {
  Permutation representative;
  Order size = 0;
  Order centralizer_order = 0;
  Order element_order = 0;
  std::vector<std::size_t> cycle_type;
};

/// Conjugacy classes of a permutation group, ordered by (element order,
/// class size, representative). Class 0 is the identity class.
class ClassData {
 public:
  ClassData() = default;

  std::size_t count() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  Order group_order() const noexcept { return group_order_; }
  Order exponent() const noexcept { return exponent_; }

  /// Index of the class of a group element.
  std::size_t class_of(const Permutation& g) const;
  /// Class of rep_i^-1.
  const std::vector<std::size_t>& inverse_map() const noexcept { return inverse_; }
  /// Class of rep_i^r for each prime r dividing the exponent.
  const std::map<std::uint64_t, std::vector<std::size_t>>& power_maps() const noexcept {
    return power_maps_;
  }
  /// Class of rep_i^k for arbitrary k (computed on demand).
  std::size_t power_class(std::size_t i, std::uint64_t k) const;

  /// Element → class index over the whole group; built on first use.
  /// Throws ResourceLimitError above Limits::max_enumerated_order.
  const std::unordered_map<Permutation, std::uint32_t, PermutationHash>& element_index() const;
  bool has_element_index() const;

  friend ClassData compute_classes(const PermGroup& g, const Limits& limits);

 private:
  struct Lazy;
  // Not a PermGroup: the group's shared state owns this object.
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  std::vector<ConjugacyClass> classes_;
  Order group_order_ = 0;
  Order exponent_ = 1;
  std::vector<std::size_t> inverse_;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps_;
  // Chains adapted to each representative's cycles; only for classes that
  // share a cycle type with another class.
  std::vector<std::shared_ptr<const StabilizerChain>> rep_chains_;
  std::shared_ptr<Lazy> lazy_;
  std::uint64_t enumeration_limit_ = 0;
};

/// Conjugacy classes: orbit enumeration up to Limits::class_enumeration_order,
/// random sampling with centralizer-order class sizes above, certified by
/// the class sizes summing to |G|.
ClassData compute_classes(const PermGroup& g, const Limits& limits);

}  // namespace sylab
