#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sylab/classes.hpp"
#include "sylab/cyclotomic.hpp"
#include "sylab/limits.hpp"
#include "sylab/perm_group.hpp"
#include "sylab/report.hpp"

namespace sylab {

/// a[i][j][k] = #{(x, y) : x ∈ C_i, y ∈ C_j, xy = z_k} for a fixed z_k ∈ C_k.
class ClassConstants {
 public:
  std::size_t count() const noexcept { return k_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * k_ + j) * k_ + k];
  }

 private:
  friend ClassConstants class_constants(const PermGroup&, const Limits&);
  std::size_t k_ = 0;
  std::vector<std::uint32_t> a_;
};

ClassConstants class_constants(const PermGroup& g, const Limits& limits = default_limits());

/// Exact ordinary character table. Rows are sorted by degree with the
/// trivial character first and ties broken by value vectors; columns follow
/// the group's class order. The values on a class of element order o live in
/// Q(ζ_o) and are stored in that field's canonical basis.
class CharacterTable {
 public:
  std::size_t size() const noexcept { return degrees_.size(); }
  /// Exponent of the group.
  std::uint64_t exponent() const noexcept { return exponent_; }
  /// The prime used for the modular computation.
  std::uint64_t working_prime() const noexcept { return ell_; }
  /// Element order of class `cls`.
  std::uint64_t class_order(std::size_t cls) const { return orders_[cls]; }
  /// Field holding the values on class `cls`.
  const CyclotomicField& field(std::size_t cls) const { return *fields_[cls]; }
  const std::vector<Order>& degrees() const noexcept { return degrees_; }
  Order degree(std::size_t chi) const { return degrees_[chi]; }
  const Cyclotomic& value(std::size_t chi, std::size_t cls) const { return values_[chi][cls]; }
  const std::vector<Cyclotomic>& row(std::size_t chi) const { return values_[chi]; }
  const std::vector<Order>& class_sizes() const noexcept { return sizes_; }
  const std::vector<std::size_t>& inverse_classes() const noexcept { return inverse_; }
  Order group_order() const noexcept { return group_order_; }
  const std::string& group_hash() const noexcept { return hash_; }

  /// Both orthogonality relations as exact identities.
  bool verify_orthogonality() const;

  std::string serialize() const;
  /// Parses `serialize()` output; the class data of `g` supplies sizes and inverses.
  static CharacterTable deserialize(const std::string& text, const PermGroup& g);

 private:
  friend CharacterTable character_table(const PermGroup&, const Limits&);
  static CharacterTable compute(const PermGroup& g, const Limits& limits);
  void attach_classes(const PermGroup& g);

  std::uint64_t exponent_ = 1;
  std::uint64_t ell_ = 0;
  Order group_order_ = 0;
  std::string hash_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::shared_ptr<const CyclotomicField>> fields_;
  std::vector<Order> sizes_;
  std::vector<std::size_t> inverse_;
  std::vector<Order> degrees_;
  std::vector<std::vector<Cyclotomic>> values_;
};

/// Dixon–Schneider over GF(ℓ), ℓ the least prime ≡ 1 (mod e) above 2√|G|,
/// with exact lifting. Retries with the next such prime on failure.
/// Results are memoized per process by group hash.
CharacterTable character_table(const PermGroup& g, const Limits& limits = default_limits());
/// Adds a table (e.g. one read from disk) to the memo.
void remember_table(const CharacterTable& t);
/// Empties the memo.
void forget_tables();
inline constexpr std::size_t kTableMemoSize = 64;

/// Format version of `CharacterTable::serialize`.
constexpr int kTableFormatVersion = 2;

std::size_t irr_pprime_count(const CharacterTable& t, std::uint64_t p);
std::size_t defect_zero_count(const CharacterTable& t, std::uint64_t p);

/// |Irr_p'(G)| = |Irr_p'(N_G(P))| from tables of both groups.
VerificationReport mckay_check(const PermGroup& g, std::uint64_t p,
                               const Limits& limits = default_limits());

/// Orbit lengths of N_G(P) on the nontrivial linear characters of P/P'
/// (sorted ascending), with the elementary divisors of P/P'.
struct AbelianizationOrbits {
  std::vector<std::uint64_t> elementary_divisors;
  std::vector<std::uint64_t> orbit_lengths;
};
AbelianizationOrbits sylow_abelianization_orbits(const PermGroup& g, std::uint64_t p,
                                                 const Limits& limits = default_limits());
/// Every orbit length is even when P is noncyclic and the automizer is odd.
VerificationReport check_abelianization_orbits_even(const PermGroup& g, std::uint64_t p,
                                   const Limits& limits = default_limits());

}  // namespace sylab
