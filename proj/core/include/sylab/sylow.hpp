#pragma once

#include <cstdint>

#include "sylab/limits.hpp"
#include "sylab/perm_group.hpp"
#include "sylab/report.hpp"

namespace sylab {

/// A Sylow p-subgroup; trivial when p does not divide |G|.
PermGroup sylow(const PermGroup& g, std::uint64_t p);

/// Local subgroups at a Sylow p-subgroup P.
struct LocalData {
  std::uint64_t p = 0;
  PermGroup P, N, C, ZP;
  /// |N_G(P) / P C_G(P)|
  Order automizer_order = 0;
  /// |N_G(P) / C_G(P)|
  Order nc_order = 0;
};

/// For odd p, throws InternalError if the two parities disagree.
LocalData local_data(const PermGroup& g, std::uint64_t p);
LocalData local_data(const PermGroup& g, const PermGroup& sylow_p, std::uint64_t p);

/// Whether |N_G(P)/PC_G(P)| is odd. Throws DomainError for p = 2.
bool odd_automizer(const PermGroup& g, std::uint64_t p);

/// Whether g is conjugate to its inverse in G.
bool is_real(const PermGroup& g, const Permutation& x);

/// Every nonidentity element of Z(P) is non-real when the automizer is odd.
VerificationReport check_central_elements_not_real(const PermGroup& g, std::uint64_t p);

/// For H normal in G with G = PH and Q = P ∩ H, checks on explicit cosets
/// that the P-fixed part of N_H(Q)/QC_H(Q) is N_H(P)C_H(Q)/QC_H(Q) and maps
/// onto N_G(P)/PC_G(P) with p-group kernel.
VerificationReport check_normal_subgroup_automizer_map(const PermGroup& g, const PermGroup& h, std::uint64_t p,
                                   const Limits& limits = default_limits());

}  // namespace sylab
