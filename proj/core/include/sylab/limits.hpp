#pragma once

#include <cstddef>
#include <cstdint>

namespace sylab {

/// Resource bounds. Exceeding one raises ResourceLimitError; nothing is
/// silently truncated.
struct Limits {
  std::size_t max_classes = 200;
  std::uint64_t max_table_order = 1'000'000'000;
  /// Class identifications spent on class matrices for one table.
  std::uint64_t max_class_matrix_work = 50'000'000;
  /// Largest group whose elements may be enumerated and indexed in memory.
  std::uint64_t max_enumerated_order = 2'000'000;
  /// Conjugacy classes by full orbit enumeration up to this order, sampling above.
  std::uint64_t class_enumeration_order = 100'000;
  std::uint64_t max_quotient_degree = 100'000;
  std::uint64_t max_radical_sylow_order = 729;
  std::uint64_t max_automizer_map_cosets = 10'000;
  std::uint64_t max_abelianization_order = 100'000;
  /// Largest degree accepted by the standard constructors.
  std::size_t max_degree = 100'000;
  /// Largest field built with full log tables.
  std::uint64_t max_field_order = 1u << 22;
};

/// Process-wide defaults; the CLI adjusts them once at startup before any
/// concurrent work starts.
Limits& default_limits();

}  // namespace sylab
