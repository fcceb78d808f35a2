#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "sylab/chartab.hpp"
#include "sylab/limits.hpp"
#include "sylab/perm_group.hpp"
#include "sylab/report.hpp"

namespace sylab {

/// Ring map Z[ζ_e] → GF(p)[x]/(g) sending ζ_e to x, where g is a fixed monic
/// irreducible factor of Φ_e' mod p and e = p^a e' with p ∤ e'.
/// Reduction of cyclotomic integers modulo the radical of p. A value in
/// Q(ζ_f) on a class of element order o (f | o) maps to GF(p)[X]/(Φ_o'(X)),
/// o' the p'-part of o, by ζ_o ↦ X. Two central characters agree there iff
/// they agree modulo every prime above p, which decides blocks without
/// choosing a prime.
class ResidueMap {
 public:
  using Elem = std::vector<std::uint64_t>;

  explicit ResidueMap(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  /// Dimension over GF(p) of the ring used for classes of element order o.
  std::size_t degree(std::uint64_t o) const;

  /// Image of Σ c_j ζ_f^j in the ring for element order o.
  Elem reduce(const std::vector<std::int64_t>& c, std::uint64_t f, std::uint64_t o) const;
  Elem reduce(const std::vector<std::int64_t>& c, std::uint64_t f) const { return reduce(c, f, f); }
  void add_to(Elem& acc, const Elem& x) const;
  bool is_zero(const Elem& x) const;

 private:
  /// X^m mod Φ_n, m < n.
  const std::vector<Elem>& powers(std::uint64_t n) const;

  std::uint64_t p_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint64_t, std::vector<Elem>> powers_;
};

/// ω_χ(C_i) = |C_i| χ(g_i) / χ(1) as a coefficient vector.
std::vector<std::int64_t> central_character(const CharacterTable& t, std::size_t chi, std::size_t cls);

struct Block {
  std::vector<std::size_t> characters;
  unsigned defect = 0;
  /// Reduced central character, one entry per class.
  std::vector<ResidueMap::Elem> lambda;
};

struct BlockPartition {
  std::uint64_t p = 0;
  std::vector<Block> blocks;
  std::vector<std::size_t> block_of;
  std::size_t principal = 0;
};

BlockPartition block_distribution(const CharacterTable& t, std::uint64_t p);
BlockPartition block_distribution(const CharacterTable& t, const ResidueMap& r);

/// Sylow p-subgroup of C_G(x) for a defect class C of block b.
PermGroup defect_group(const PermGroup& g, const BlockPartition& part, std::size_t b);

/// Block of H = N_G(D) (table `th`, partition `ph`) inducing to block b of G.
std::size_t brauer_correspondent(const PermGroup& g, const BlockPartition& part, std::size_t b,
                                 const PermGroup& h, const BlockPartition& ph);

VerificationReport amk_check(const PermGroup& g, std::uint64_t p, const Limits& limits = default_limits());

std::size_t p_regular_class_count(const PermGroup& g, std::uint64_t p);

/// Representatives of the G-classes of p-radical subgroups Q = O_p(N_G(Q)).
std::vector<PermGroup> p_radical_subgroups(const PermGroup& g, std::uint64_t p,
                                           const Limits& limits = default_limits());

/// Largest normal p-subgroup.
PermGroup p_core(const PermGroup& g, std::uint64_t p);

struct WeightCensus {
  struct Radical {
    PermGroup q;
    Order normalizer_order = 0;
    std::size_t weights = 0;
  };
  std::uint64_t p = 0;
  std::vector<Radical> radicals;
  std::size_t total = 0;
  std::size_t p_regular = 0;
  /// Weights assigned to each block of G; empty when the table of G is unavailable.
  std::vector<std::size_t> weights_per_block;
};

WeightCensus weight_count(const PermGroup& g, std::uint64_t p, const Limits& limits = default_limits());
VerificationReport awc_check(const PermGroup& g, std::uint64_t p, const Limits& limits = default_limits());

}  // namespace sylab
