#pragma once

#include <optional>
#include <vector>

#include "sylab/perm_group.hpp"

namespace sylab {

/// Orbit of `pt` under `g` with a transversal: `transversal[i]` maps pt to orbit[i].
struct OrbitTransversal {
  std::vector<Point> orbit;
  std::vector<Permutation> transversal;
};
OrbitTransversal orbit_transversal(const PermGroup& g, Point pt);

/// C_G(x). Throws DomainError if x is not in G.
PermGroup centralizer(const PermGroup& g, const Permutation& x);
/// C_G(H): elementwise centralizer of the generators of H.
PermGroup centralizer(const PermGroup& g, const PermGroup& h);
/// N_G(H). Throws DomainError if H is not a subgroup of G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

/// Some c in G with x^c = y, or nullopt.
std::optional<Permutation> conjugator(const PermGroup& g, const Permutation& x,
                                      const Permutation& y);
/// Some c in G with A^c = B, or nullopt.
std::optional<Permutation> subgroup_conjugator(const PermGroup& g, const PermGroup& a,
                                               const PermGroup& b);

/// A ∩ B, searched over the smaller group.
PermGroup intersection(const PermGroup& a, const PermGroup& b);

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);
PermGroup derived_subgroup(const PermGroup& g);
PermGroup center(const PermGroup& g);
bool is_normal(const PermGroup& g, const PermGroup& h);
/// Subgroup generated by A and B (same degree).
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& c);

/// A generator when `h` is cyclic.
std::optional<Permutation> cyclic_generator(const PermGroup& h);
/// The p-part of g: g^m where |g| = p^k * m with p ∤ m.
Permutation p_part(const Permutation& g, std::uint64_t p);

/// Exponent of `p` in n.
unsigned nu_p(std::uint64_t n, std::uint64_t p);
std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace sylab
