#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sylab/perm_group.hpp"

namespace sylab {

/// PSL_2(q) on the q+1 points of the projective line; point 1 is ∞ and
/// field element a (in the encoding of GaloisField) is point a+2.
/// Throws DomainError unless q is a prime power ≥ 4.
PermGroup psl2(std::uint64_t q);

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2n on n points (n ≥ 3).
PermGroup dihedral(std::size_t n);
/// A × B on deg(A) + deg(B) points.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Contents of a group file.
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  /// Comment lines, joined with newlines.
  std::string provenance;

  PermGroup to_group() const;
};

/// Parses the text format: `name: <text>`, `degree: <n>`, one generator per
/// line in cycle notation, `#` comments, blank lines ignored. Errors are
/// ParseError with the offending line number.
GroupFile parse_group_text(const std::string& text);
GroupFile parse_group_file(const std::filesystem::path& path);
std::string render_group_file(const PermGroup& g, const std::string& provenance = {});

/// Names of the built-in groups, in catalog order.
std::vector<std::string> builtin_names();
/// Built-in group by name (e.g. "s4", "a5", "psl2_7", "a5xc7", "m24").
/// File-backed entries are read from `data_directory()`. Throws DomainError
/// for unknown names.
PermGroup builtin_group(const std::string& name);
/// Directory with shipped group files: $SYLAB_DATA_DIR if set, else the
/// compiled-in location.
std::filesystem::path data_directory();
/// A group file path if `arg` names an existing file, otherwise a built-in.
PermGroup resolve_group(const std::string& arg);

}  // namespace sylab
