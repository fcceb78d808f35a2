#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sylab/perm_group.hpp"
#include "sylab/report.hpp"

namespace sylab {

/// Isomorphism type of a finite simple group.
struct SimpleFactorId {
  enum class Kind { Cyclic, Alternating, Psl2, Named, Unidentified };
  Kind kind = Kind::Unidentified;
  Order order = 0;
  /// Prime for Cyclic, degree for Alternating.
  std::uint64_t n = 0;
  /// PSL_2(q) with q = p^f.
  std::uint64_t q = 0, p = 0;
  unsigned f = 0;
  /// Name for Named, e.g. "M11" or "PSL3(4)".
  std::string label;
  std::optional<std::size_t> class_count;
  std::optional<Order> max_element_order;

  std::string to_string() const;
  bool operator==(const SimpleFactorId& o) const { return to_string() == o.to_string(); }
};

/// One row of the compiled simple-order table: every nonabelian simple
/// group of order below 10^8 under its canonical label.
std::vector<SimpleFactorId> simple_order_table();
constexpr Order kSimpleTableBound = 100'000'000;

/// Identification from the order alone, with `has_element_order(k)` used to
/// separate A8 from PSL3(4). Primes give Cyclic; orders not in the table or
/// beyond it give Unidentified.
SimpleFactorId identify_simple_order(Order order, const std::function<bool(Order)>& has_element_order);

/// All normal subgroups as joins of normal closures of class representatives.
/// Throws ResourceLimitError when more than `limit` are found.
std::vector<PermGroup> normal_subgroups(const PermGroup& g, std::size_t limit = 4096);

/// Tie-breaks for choosing among maximal normal subgroups.
enum class SeriesOrder { LargestFirst, SmallestFirst };

/// A normal subgroup N with G/N simple, or nullopt when G is simple.
/// LargestFirst returns one of largest order.
std::optional<PermGroup> maximal_normal_subgroup(const PermGroup& g,
                                                 SeriesOrder order = SeriesOrder::LargestFirst);

/// One step G_i ▷ G_{i+1} of a composition series.
struct CompositionFactor {
  SimpleFactorId id;
  PermGroup upper, lower;
};

std::vector<CompositionFactor> composition_series(const PermGroup& g,
                                                  SeriesOrder order = SeriesOrder::LargestFirst);
std::vector<SimpleFactorId> composition_factors(const PermGroup& g,
                                                SeriesOrder order = SeriesOrder::LargestFirst);

/// Identifies a simple group. Throws DomainError if S is not simple.
SimpleFactorId identify_simple(const PermGroup& s);

bool sylow_cyclic(const PermGroup& s, std::uint64_t p);
/// Whether M/N has cyclic Sylow p-subgroups (N normal in M).
bool sylow_cyclic(const PermGroup& m, const PermGroup& n, std::uint64_t p);

/// True iff the factor has cyclic Sylow p-subgroups, or is PSL_2(q) for
/// q = p^f ≡ 3 (mod 4). Alternating labels with PSL_2 forms (A5, A6) are
/// tested in those forms too.
bool factor_is_cyclic_sylow_or_psl2(const SimpleFactorId& id, const PermGroup& s, std::uint64_t p);
bool factor_is_cyclic_sylow_or_psl2(const CompositionFactor& factor, std::uint64_t p);

/// Under odd automizer at p, every composition factor satisfies the predicate.
VerificationReport check_simple_factor_classification(const PermGroup& g, std::uint64_t p);

}  // namespace sylab
